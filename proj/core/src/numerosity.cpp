#include "numero/numerosity.hpp"

#include <string>

#include "numero/errors.hpp"

namespace numero {

namespace {

void require_model(const NumerosityContext& ctx, const Event& e) {
    Model m = model_of(e);
    if (m != ctx.model) {
        throw ModelMismatchError(std::string("context model ") +
                                 std::string(model_name(ctx.model)) + " given " +
                                 std::string(model_name(m)) + " event");
    }
}

void require_order(int order) {
    if (order < 1) throw DomainError("truncation order must be >= 1");
}

} // namespace

NumerosityContext NumerosityContext::coin(int order) {
    require_order(order);
    return {Model::coin, NAValue::omega(), NAValue::omega(), order};
}

NumerosityContext NumerosityContext::interval(int order) {
    require_order(order);
    return {Model::interval, NAValue::omega(), NAValue::omega(), order};
}

NumerosityContext NumerosityContext::finite(const FiniteSpacePtr& space, int order) {
    require_order(order);
    if (!space) throw ValidationError("null finite space");
    NAValue n(static_cast<long>(space->size()));
    return {Model::finite, n, n, order};
}

NAValue numerosity(const NumerosityContext& ctx, const Event& e) {
    require_model(ctx, e);
    if (const auto* ce = std::get_if<CoinEvent>(&e)) {
        Rational weight = make_rational(Integer(ce->atoms().size()),
                                        Integer(1) << ce->indices().size());
        NAValue adj(Integer(ce->plus().size()) - Integer(ce->minus().size()));
        return NAValue(weight) * ctx.unit + adj;
    }
    if (const auto* ie = std::get_if<IntervalEvent>(&e)) {
        NAValue adj(Integer(ie->plus().size()) - Integer(ie->minus().size()));
        return NAValue(ie->length()) * ctx.unit + adj;
    }
    const auto& fe = std::get<FiniteEvent>(e);
    return NAValue(Integer(fe.cardinality()));
}

DivResult probability(const NumerosityContext& ctx, const CoinEvent& e) {
    if (ctx.model != Model::coin) throw ModelMismatchError("probability needs the coin model");
    return divide(numerosity(ctx, Event(e)), ctx.unit, ctx.order);
}

DivResult conditional(const NumerosityContext& ctx, const CoinEvent& e, const CoinEvent& f) {
    if (ctx.model != Model::coin) throw ModelMismatchError("conditional needs the coin model");
    if (f.is_empty()) throw DomainError("conditioning on the empty event");
    return divide(numerosity(ctx, Event(e & f)), numerosity(ctx, Event(f)), ctx.order);
}

ExtendedReal nbeta(const NumerosityContext& ctx, const Event& e, const NAValue& beta) {
    if (beta.sign() <= 0) throw DomainError("beta must be positive");
    return divide(numerosity(ctx, e), beta, ctx.order).value.standard_part();
}

ExtendedReal nbeta(const NumerosityContext& ctx, const Event& e) {
    return nbeta(ctx, e, ctx.beta);
}

MonotonicityVerdict check_strict_monotonicity(const NumerosityContext& ctx, const Event& e1,
                                              const Event& e2) {
    if (!event_is_subset(e1, e2)) {
        throw DomainError("strict-monotonicity check requires e1 ⊆ e2");
    }
    MonotonicityVerdict v;
    v.proper = !event_is_equal(e1, e2);
    v.n1 = numerosity(ctx, e1);
    v.n2 = numerosity(ctx, e2);
    v.holds = v.proper ? v.n1 < v.n2 : v.n1 == v.n2;
    return v;
}

} // namespace numero
