#include "numero/event.hpp"

#include <utility>

#include "numero/errors.hpp"

namespace numero {

std::string_view model_name(Model m) {
    switch (m) {
        case Model::coin: return "coin";
        case Model::interval: return "interval";
        case Model::finite: return "finite";
    }
    return "?";
}

Model model_of(const Event& e) {
    switch (e.index()) {
        case 0: return Model::coin;
        case 1: return Model::interval;
        default: return Model::finite;
    }
}

namespace {

[[noreturn]] void mismatch(const Event& a, const Event& b) {
    throw ModelMismatchError(std::string("model mismatch: ") +
                             std::string(model_name(model_of(a))) + " vs " +
                             std::string(model_name(model_of(b))));
}

template <typename F>
auto same_model_visit(const Event& a, const Event& b, F f) {
    using R = decltype(f(std::get<CoinEvent>(a), std::get<CoinEvent>(b)));
    return std::visit(
        [&](const auto& x, const auto& y) -> R {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::decay_t<decltype(y)>>) {
                return f(x, y);
            } else {
                mismatch(a, b);
            }
        },
        a, b);
}

} // namespace

Event event_union(const Event& a, const Event& b) {
    return same_model_visit(a, b, [](const auto& x, const auto& y) { return Event(x | y); });
}

Event event_intersect(const Event& a, const Event& b) {
    return same_model_visit(a, b, [](const auto& x, const auto& y) { return Event(x & y); });
}

Event event_difference(const Event& a, const Event& b) {
    return same_model_visit(a, b, [](const auto& x, const auto& y) { return Event(x - y); });
}

Event event_complement(const Event& e) {
    return std::visit(
        [](const auto& x) -> Event {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, IntervalEvent>) {
                throw DomainError("absolute complement is unsupported in the interval model");
            } else {
                return Event(~x);
            }
        },
        e);
}

bool event_is_subset(const Event& a, const Event& b) {
    return same_model_visit(a, b, [](const auto& x, const auto& y) { return x.is_subset_of(y); });
}

bool event_is_equal(const Event& a, const Event& b) {
    return same_model_visit(a, b, [](const auto& x, const auto& y) { return x == y; });
}

bool event_is_empty(const Event& e) {
    return std::visit([](const auto& x) { return x.is_empty(); }, e);
}

bool event_contains(const Event& e, const Point& p) {
    if (const auto* ce = std::get_if<CoinEvent>(&e)) {
        if (const auto* cp = std::get_if<CoinPoint>(&p)) return ce->contains(*cp);
        throw ModelMismatchError("coin event needs a coin point");
    }
    if (const auto* ie = std::get_if<IntervalEvent>(&e)) {
        if (const auto* r = std::get_if<Rational>(&p)) return ie->contains(*r);
        throw ModelMismatchError("interval event needs a rational point");
    }
    const auto& fe = std::get<FiniteEvent>(e);
    if (const auto* label = std::get_if<std::string>(&p)) return fe.contains(*label);
    throw ModelMismatchError("finite event needs a label point");
}

Event event_normalize(const Event& e) {
    if (const auto* ce = std::get_if<CoinEvent>(&e)) {
        return Event(CoinEvent::make(ce->indices(), ce->atoms(), ce->plus(), ce->minus()));
    }
    if (const auto* ie = std::get_if<IntervalEvent>(&e)) {
        return Event(IntervalEvent::make(ie->intervals(), ie->plus(), ie->minus()));
    }
    const auto& fe = std::get<FiniteEvent>(e);
    return Event(FiniteEvent::from_mask(fe.space(), fe.mask()));
}

void event_validate(const Event& e) {
    std::visit([](const auto& x) { x.validate(); }, e);
}

} // namespace numero
