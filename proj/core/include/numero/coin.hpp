#ifndef NUMERO_COIN_HPP
#define NUMERO_COIN_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numero/errors.hpp"

namespace numero {

// A sample point of the coin-toss space: an eventually-constant sequence
// N -> {H,T}, stored as a finite prefix plus the constant tail symbol.
// Canonical form: the prefix never ends with the tail symbol.
class CoinPoint {
public:
    CoinPoint() : tail_('T') {}
    CoinPoint(std::string_view prefix, char tail);

    // Symbol at 1-based index i.
    char at(uint32_t i) const {
        return i <= prefix_.size() ? prefix_[i - 1] : tail_;
    }

    const std::string& prefix() const { return prefix_; }
    char tail() const { return tail_; }

    std::string to_string() const; // e.g. "HTH(T)"

    friend bool operator==(const CoinPoint&, const CoinPoint&) = default;
    friend auto operator<=>(const CoinPoint&, const CoinPoint&) = default;

private:
    std::string prefix_;
    char tail_;
};

std::ostream& operator<<(std::ostream&, const CoinPoint&);

// Largest index set supported for a single event (after refinement of two
// operands to their common index set).
constexpr std::size_t kMaxCoinIndices = 20;

// Member of the coin-toss event algebra: a union of cylinders over a finite
// index set, adjusted by finite point sets. The represented set is
// (base U plus) \ minus, where base is the union over `atoms` of the
// cylinders fixing the symbols at `indices`.
//
// Canonical form: `indices` is minimal (no index whose H/T split is full on
// every atom), `plus` is disjoint from base, `minus` lies inside base, and
// all vectors are sorted and duplicate-free.
class CoinEvent {
public:
    CoinEvent() = default;

    static CoinEvent empty() { return CoinEvent(); }
    static CoinEvent omega();
    // Single cylinder fixing the given (index, symbol) pairs; indices must be
    // distinct and >= 1, symbols 'H' or 'T'.
    static CoinEvent cylinder(std::vector<std::pair<uint32_t, char>> fixes);
    static CoinEvent points(std::vector<CoinPoint> pts);
    // General constructor from raw parts with semantics (base U plus) \ minus;
    // the result is canonicalized. `indices` must be strictly increasing and
    // >= 1; atom masks use bit k for indices[k], set bit = 'T'.
    static CoinEvent make(std::vector<uint32_t> indices, std::vector<uint64_t> atoms,
                          std::vector<CoinPoint> plus, std::vector<CoinPoint> minus);

    bool is_empty() const { return atoms_.empty() && plus_.empty(); }
    bool is_omega() const { return indices_.empty() && atoms_.size() == 1 && plus_.empty() && minus_.empty(); }

    const std::vector<uint32_t>& indices() const { return indices_; }
    const std::vector<uint64_t>& atoms() const { return atoms_; }
    const std::vector<CoinPoint>& plus() const { return plus_; }
    const std::vector<CoinPoint>& minus() const { return minus_; }

    bool contains(const CoinPoint& p) const;

    // Largest index the event depends on (cylinder indices and point
    // prefixes); 0 for events independent of every toss.
    uint32_t max_used_index() const;

    friend CoinEvent operator|(const CoinEvent& a, const CoinEvent& b);
    friend CoinEvent operator&(const CoinEvent& a, const CoinEvent& b);
    friend CoinEvent operator-(const CoinEvent& a, const CoinEvent& b);
    friend CoinEvent operator~(const CoinEvent& a);

    friend bool operator==(const CoinEvent&, const CoinEvent&) = default;

    bool is_subset_of(const CoinEvent& other) const { return (*this - other).is_empty(); }

    // Throws ValidationError if any canonical-form invariant is violated.
    void validate() const;

private:
    bool base_contains(const CoinPoint& p) const;
    uint64_t mask_of(const CoinPoint& p) const;

    static CoinEvent boolean_op(const CoinEvent& a, const CoinEvent& b, bool (*op)(bool, bool));
    static void minimize_indices(std::vector<uint32_t>& indices, std::vector<uint64_t>& atoms);

    std::vector<uint32_t> indices_;
    std::vector<uint64_t> atoms_;
    std::vector<CoinPoint> plus_;
    std::vector<CoinPoint> minus_;
};

std::ostream& operator<<(std::ostream&, const CoinEvent&);

} // namespace numero

#endif
