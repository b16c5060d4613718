#ifndef NUMERO_MEASURES_HPP
#define NUMERO_MEASURES_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "numero/event.hpp"
#include "numero/numerosity.hpp"

namespace numero {

// Extended non-negative real restricted to exactly-representable values:
// a rational >= 0 or +infinity. Addition saturates: x + inf = inf.
class MeasureValue {
public:
    MeasureValue() : value_(0) {}
    MeasureValue(Rational value); // NOLINT: implicit by design; rejects negatives
    MeasureValue(long value) : MeasureValue(Rational(value)) {} // NOLINT
    static MeasureValue infinity();

    bool is_infinite() const { return infinite_; }
    // Finite value; throws DomainError on infinity.
    const Rational& rational() const;

    friend MeasureValue operator+(const MeasureValue& a, const MeasureValue& b);
    friend bool operator==(const MeasureValue&, const MeasureValue&) = default;
    friend bool operator<(const MeasureValue& a, const MeasureValue& b);
    friend bool operator<=(const MeasureValue& a, const MeasureValue& b) { return !(b < a); }

    std::string to_string() const; // "p/q" or "inf"

private:
    bool infinite_ = false;
    Rational value_;
};

std::ostream& operator<<(std::ostream&, const MeasureValue&);

// Kolmogorov pre-measure on the represented coin algebra: |atoms| / 2^|I|;
// finite point adjustments are null.
MeasureValue kolmogorov_measure(const CoinEvent& e);

// Lebesgue measure of a represented interval event: total base length;
// point adjustments are null.
MeasureValue lebesgue_measure(const IntervalEvent& e);

// Outer measure of a represented coin or interval event. Such events are
// measurable, so the outer measure equals the event's measure and is
// computed structurally; for finite-model sets use the FiniteMeasureSpace
// overload. Throws DomainError for a finite-model event.
MeasureValue outer_measure(const Event& e);

// Inner measure n_beta(e) with the context's beta; equals the structural
// measure on represented coin/interval events when beta is the unit.
MeasureValue inner_measure(const NumerosityContext& ctx, const Event& e);

using MeasureOracle = std::function<MeasureValue(const Event&)>;

struct CaratheodoryVerdict {
    bool holds = true;
    // Index into the witness list of the first failing Y, or -1.
    std::ptrdiff_t first_failure = -1;
};

// Checks M(Y) = M(X ∩ Y) + M(Y \ X) for every supplied witness Y.
CaratheodoryVerdict caratheodory_check(const MeasureOracle& M, const Event& x,
                                       const std::vector<Event>& witnesses);

// Finite sample space with a declared subalgebra (generated by generator
// sets) and an exact additive measure mu on it. The algebra is materialized
// as all unions of its atoms (the indistinguishability classes of the
// generators); mu is solved per-atom from the declared constraints.
class FiniteMeasureSpace {
public:
    // Throws ValidationError when the constraints mention non-algebra sets,
    // are inconsistent, leave some atom undetermined, or force a negative
    // value.
    static FiniteMeasureSpace build(FiniteSpacePtr space, std::vector<FiniteEvent> generators,
                                    std::vector<std::pair<FiniteEvent, Rational>> mu_constraints);

    const FiniteSpacePtr& space() const { return space_; }
    // All algebra members as masks, sorted ascending.
    const std::vector<std::uint64_t>& algebra() const { return algebra_; }
    const std::vector<std::uint64_t>& atom_masks() const { return atom_masks_; }
    const std::vector<Rational>& atom_masses() const { return atom_masses_; }

    bool in_algebra(const FiniteEvent& x) const;
    // Smallest algebra member containing x.
    FiniteEvent algebra_closure(const FiniteEvent& x) const;

    // mu on an algebra member; throws DomainError for non-members.
    MeasureValue mu(const FiniteEvent& x) const;
    // Outer measure: min mu over algebra members covering x.
    MeasureValue outer(const FiniteEvent& x) const;
    // Inner measure: st(|x| / beta) with the default beta.
    MeasureValue inner(const FiniteEvent& x) const;

    // Default scaling value: the smallest beta with inner <= outer on every
    // subset — max |A|/mu(A) over algebra members (equivalently atoms) when
    // every nonempty member has positive mu, otherwise omega (inner == 0).
    const NAValue& beta() const { return beta_; }

    std::uint64_t closure_mask(std::uint64_t mask) const;
    Rational mu_of_closed_mask(std::uint64_t mask) const;

private:
    FiniteMeasureSpace() = default;

    FiniteSpacePtr space_;
    std::vector<std::uint64_t> atom_masks_;
    std::vector<Rational> atom_masses_;
    std::vector<std::uint64_t> algebra_;
    NAValue beta_;
};

// Parses the finite-model spec format:
//   # comment
//   universe: a b c d
//   gen: a b
//   mu: a b = 1/2
// One universe line required; gen/mu lines optional and repeatable.
// Diagnostics carry 1-based line numbers.
FiniteMeasureSpace parse_finite_spec(const std::string& text);

// All Caratheodory sets of the outer measure: masks X with
// outer(Y) = outer(X ∩ Y) + outer(Y \ X) for every Y ⊆ Ω, exhaustively.
std::vector<std::uint64_t> caratheodory_family(const FiniteMeasureSpace& ms);

struct FiniteOracleReport {
    std::size_t universe_size = 0;
    std::size_t algebra_size = 0;
    std::size_t caratheodory_size = 0;
    std::string beta; // rendered default beta
    bool additivity = false;
    bool monotonicity = false;
    bool outer_regularity = false;
    bool inner_leq_outer = false;
    bool sigma_subadditivity = false;
    bool caratheodory_closed = false;
    // Informational, not part of all_passed: whether inner == mu on every
    // algebra member (holds iff mu is proportional to cardinality).
    bool equality_on_algebra = false;

    bool all_passed() const {
        return additivity && monotonicity && outer_regularity && inner_leq_outer &&
               sigma_subadditivity && caratheodory_closed;
    }
};

// Exhaustive brute-force validation over all 2^n subsets; n above `bound`
// is a DomainError.
FiniteOracleReport finite_oracle(const FiniteMeasureSpace& ms, std::size_t bound = 12);

} // namespace numero

#endif
