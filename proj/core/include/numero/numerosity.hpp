#ifndef NUMERO_NUMEROSITY_HPP
#define NUMERO_NUMEROSITY_HPP

#include "numero/event.hpp"
#include "numero/navalue.hpp"

namespace numero {

// Ground model plus the chosen numerosity unit and the scaling value beta.
//
// Units: n(Omega) = w for the coin model, n([0,1)) = w for the interval
// model, |universe| for the finite model. The single-monomial choice makes
// every headline ratio exact. `beta` is the default scaling reference
// for nbeta/inner measures; it must be positive.
struct NumerosityContext {
    Model model = Model::coin;
    NAValue unit = NAValue::omega();
    NAValue beta = NAValue::omega();
    int order = kDefaultTruncationOrder;

    static NumerosityContext coin(int order = kDefaultTruncationOrder);
    static NumerosityContext interval(int order = kDefaultTruncationOrder);
    static NumerosityContext finite(const FiniteSpacePtr& space,
                                    int order = kDefaultTruncationOrder);
};

// Exact numerosity of a canonical event:
//   coin:     |atoms| * unit / 2^|I| + |plus| - |minus|
//   interval: (sum of interval lengths) * unit + |plus| - |minus|
//   finite:   |members|
// Always >= 0, and = 0 iff the event is empty.
NAValue numerosity(const NumerosityContext& ctx, const Event& e);

// P(E) = n(E) / n(Omega); exact whenever the unit is a monomial.
DivResult probability(const NumerosityContext& ctx, const CoinEvent& e);

// P(E|F) = n(E ∩ F) / n(F); throws DomainError when F is empty.
DivResult conditional(const NumerosityContext& ctx, const CoinEvent& e, const CoinEvent& f);

// n_beta(E) = st(n(E) / beta); throws DomainError unless beta > 0.
ExtendedReal nbeta(const NumerosityContext& ctx, const Event& e, const NAValue& beta);
ExtendedReal nbeta(const NumerosityContext& ctx, const Event& e);

struct MonotonicityVerdict {
    bool proper = false; // e1 is a proper subset of e2
    bool holds = false;  // n1 < n2 when proper, n1 == n2 otherwise
    NAValue n1;
    NAValue n2;
};

// Precondition (checked): e1 ⊆ e2; throws DomainError otherwise.
MonotonicityVerdict check_strict_monotonicity(const NumerosityContext& ctx, const Event& e1,
                                              const Event& e2);

} // namespace numero

#endif
