#ifndef NUMERO_INTERVAL_HPP
#define NUMERO_INTERVAL_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include "numero/rational.hpp"

namespace numero {

// Member of the rational half-open interval algebra on the real line,
// adjusted by finite rational point sets. The represented set is
// (base U plus) \ minus where base is the union of the stored intervals
// [a, b).
//
// Canonical form: intervals are sorted, pairwise disjoint and non-adjacent
// (b_i < a_{i+1}); `plus` lies outside base, `minus` inside base (interior
// points or left endpoints; interior minus points do not split intervals).
class IntervalEvent {
public:
    IntervalEvent() = default;

    static IntervalEvent empty() { return IntervalEvent(); }
    // [lo, hi); requires lo < hi.
    static IntervalEvent interval(const Rational& lo, const Rational& hi);
    static IntervalEvent points(std::vector<Rational> pts);
    // Raw parts with semantics (base U plus) \ minus; canonicalized.
    static IntervalEvent make(std::vector<std::pair<Rational, Rational>> intervals,
                              std::vector<Rational> plus, std::vector<Rational> minus);

    bool is_empty() const { return intervals_.empty() && plus_.empty(); }

    const std::vector<std::pair<Rational, Rational>>& intervals() const { return intervals_; }
    const std::vector<Rational>& plus() const { return plus_; }
    const std::vector<Rational>& minus() const { return minus_; }

    bool contains(const Rational& x) const;

    // Total length of the base intervals.
    Rational length() const;

    friend IntervalEvent operator|(const IntervalEvent& a, const IntervalEvent& b);
    friend IntervalEvent operator&(const IntervalEvent& a, const IntervalEvent& b);
    friend IntervalEvent operator-(const IntervalEvent& a, const IntervalEvent& b);

    friend bool operator==(const IntervalEvent&, const IntervalEvent&) = default;

    bool is_subset_of(const IntervalEvent& other) const { return (*this - other).is_empty(); }

    void validate() const;

private:
    bool base_contains(const Rational& x) const;

    static IntervalEvent boolean_op(const IntervalEvent& a, const IntervalEvent& b,
                                    bool (*op)(bool, bool));

    std::vector<std::pair<Rational, Rational>> intervals_;
    std::vector<Rational> plus_;
    std::vector<Rational> minus_;
};

std::ostream& operator<<(std::ostream&, const IntervalEvent&);

} // namespace numero

#endif
