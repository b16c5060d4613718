#ifndef NUMERO_ESTIMATE_HPP
#define NUMERO_ESTIMATE_HPP

#include <cstdint>

#include "numero/coin.hpp"
#include "numero/rational.hpp"

namespace numero {

// Monte-Carlo estimation of st(P(E)) for coin-model events.
//
// Sampling contract (the output depends only on seed/samples/horizon, never
// on worker count or platform): sample i draws coin values for indices
// 1..horizon from a counter-based splitmix64 derivation, where the k-th
// index of sample i reads bit (k-1) mod 64 of sample_block(seed, i,
// (k-1)/64). Indices beyond the horizon are 'H'.
struct EstimateConfig {
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;
    std::uint32_t horizon = 64;
};

struct EstimateReport {
    std::uint64_t samples = 0;
    std::uint32_t horizon = 0;
    std::uint64_t hits = 0;
    Rational frequency;          // hits / samples, exact
    Rational exact_probability;  // st(P(E)), exact
    Rational gap;                // |frequency - exact_probability|, exact
    bool within_three_sigma = false; // gap^2 * samples <= 9 p (1-p), exact test
    double half_width = 0.0;         // 3 * sqrt(p(1-p)/samples), display only
};

// Stateless per-sample block derivation used by the estimator.
std::uint64_t sample_block(std::uint64_t seed, std::uint64_t sample, std::uint64_t block);

// Draw the sampled point for one counter value (exposed for tests).
CoinPoint sample_point(std::uint64_t seed, std::uint64_t sample, std::uint32_t horizon);

// Throws DomainError when samples == 0 or horizon < e.max_used_index().
EstimateReport estimate_probability(const CoinEvent& e, const EstimateConfig& config);

} // namespace numero

#endif // NUMERO_ESTIMATE_HPP
