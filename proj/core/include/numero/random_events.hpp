#ifndef NUMERO_RANDOM_EVENTS_HPP
#define NUMERO_RANDOM_EVENTS_HPP

#include <cstdint>

#include "numero/event.hpp"
#include "numero/navalue.hpp"

namespace numero {

// Deterministic, platform-independent generator (splitmix64). Test and
// oracle reproducibility depends only on the seed, never on the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform-ish value in [lo, hi] (inclusive).
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return next() & 1u; }

private:
    std::uint64_t state_;
};

// Rational with |numerator| <= num_bound and denominator in [1, den_bound].
Rational random_rational(Rng& rng, long num_bound = 20, long den_bound = 12);

// Sparse field value with up to max_terms terms; exponents are integers or
// half-integers in [-exp_bound, exp_bound], coefficients small nonzero
// rationals.
NAValue random_navalue(Rng& rng, std::size_t max_terms = 4, long exp_bound = 3);

// Variant with all exponents <= 0 (finite value; standard part exists).
NAValue random_finite_navalue(Rng& rng, std::size_t max_terms = 4, long exp_bound = 3);

CoinPoint random_coin_point(Rng& rng, std::uint32_t max_prefix = 6);

// Cylinder-union event over up to index_count indices drawn from
// {1..max_index}, adjusted by up to max_points plus/minus points.
CoinEvent random_coin_event(Rng& rng, std::uint32_t max_index = 8, std::size_t index_count = 4,
                            std::size_t max_points = 3);

IntervalEvent random_interval_event(Rng& rng, std::size_t max_intervals = 3,
                                    std::size_t max_points = 3);

FiniteEvent random_finite_event(Rng& rng, const FiniteSpacePtr& space);

Event random_event(Rng& rng, Model model, const FiniteSpacePtr& space = nullptr);

} // namespace numero

#endif
