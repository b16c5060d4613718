#include "numero/random_events.hpp"

#include <algorithm>
#include <set>

#include "numero/errors.hpp"

namespace numero {

Rational random_rational(Rng& rng, long num_bound, long den_bound) {
    return make_rational(rng.range(-num_bound, num_bound), rng.range(1, den_bound));
}

namespace {

Rational random_exponent(Rng& rng, long exp_bound) {
    // Integer or half-integer exponent in [-exp_bound, exp_bound].
    long doubled = rng.range(-2 * exp_bound, 2 * exp_bound);
    return make_rational(doubled, 2);
}

Rational random_nonzero_coefficient(Rng& rng) {
    Rational c = random_rational(rng, 9, 6);
    return c == 0 ? Rational(1) : c;
}

} // namespace

NAValue random_navalue(Rng& rng, std::size_t max_terms, long exp_bound) {
    NAValue v;
    std::size_t terms = rng.below(max_terms + 1);
    for (std::size_t i = 0; i < terms; ++i) {
        v += NAValue::monomial(random_nonzero_coefficient(rng), random_exponent(rng, exp_bound));
    }
    return v;
}

NAValue random_finite_navalue(Rng& rng, std::size_t max_terms, long exp_bound) {
    NAValue v;
    std::size_t terms = rng.below(max_terms + 1);
    for (std::size_t i = 0; i < terms; ++i) {
        Rational e = random_exponent(rng, exp_bound);
        if (e > 0) e = -e;
        v += NAValue::monomial(random_nonzero_coefficient(rng), e);
    }
    return v;
}

CoinPoint random_coin_point(Rng& rng, std::uint32_t max_prefix) {
    std::string prefix;
    std::uint32_t len = static_cast<std::uint32_t>(rng.below(max_prefix + 1));
    for (std::uint32_t i = 0; i < len; ++i) prefix += rng.coin() ? 'T' : 'H';
    return CoinPoint(prefix, rng.coin() ? 'T' : 'H');
}

CoinEvent random_coin_event(Rng& rng, std::uint32_t max_index, std::size_t index_count,
                            std::size_t max_points) {
    std::set<std::uint32_t> picked;
    std::size_t want = rng.below(index_count + 1);
    while (picked.size() < want && picked.size() < max_index) {
        picked.insert(static_cast<std::uint32_t>(1 + rng.below(max_index)));
    }
    std::vector<std::uint32_t> indices(picked.begin(), picked.end());

    std::vector<std::uint64_t> atoms;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << indices.size()); ++a) {
        if (rng.coin()) atoms.push_back(a);
    }

    std::vector<CoinPoint> plus, minus;
    for (std::size_t i = rng.below(max_points + 1); i > 0; --i) {
        plus.push_back(random_coin_point(rng, max_index));
    }
    for (std::size_t i = rng.below(max_points + 1); i > 0; --i) {
        minus.push_back(random_coin_point(rng, max_index));
    }
    return CoinEvent::make(std::move(indices), std::move(atoms), std::move(plus),
                           std::move(minus));
}

IntervalEvent random_interval_event(Rng& rng, std::size_t max_intervals,
                                    std::size_t max_points) {
    std::vector<std::pair<Rational, Rational>> intervals;
    for (std::size_t i = rng.below(max_intervals + 1); i > 0; --i) {
        Rational a = random_rational(rng, 12, 6);
        Rational len = random_rational(rng, 8, 6);
        if (len < 0) len = -len;
        if (len == 0) len = 1;
        intervals.emplace_back(a, a + len);
    }
    std::vector<Rational> plus, minus;
    for (std::size_t i = rng.below(max_points + 1); i > 0; --i) {
        plus.push_back(random_rational(rng, 12, 6));
    }
    for (std::size_t i = rng.below(max_points + 1); i > 0; --i) {
        minus.push_back(random_rational(rng, 12, 6));
    }
    return IntervalEvent::make(std::move(intervals), std::move(plus), std::move(minus));
}

FiniteEvent random_finite_event(Rng& rng, const FiniteSpacePtr& space) {
    if (!space) throw ValidationError("null finite space");
    std::uint64_t full = space->size() == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << space->size()) - 1;
    return FiniteEvent::from_mask(space, rng.next() & full);
}

Event random_event(Rng& rng, Model model, const FiniteSpacePtr& space) {
    switch (model) {
        case Model::coin: return Event(random_coin_event(rng));
        case Model::interval: return Event(random_interval_event(rng));
        case Model::finite: return Event(random_finite_event(rng, space));
    }
    throw DomainError("unknown model");
}

} // namespace numero
