#include "numero/estimate.hpp"

#include <cmath>
#include <string>

#include "numero/errors.hpp"
#include "numero/event.hpp"
#include "numero/numerosity.hpp"

namespace numero {

namespace {

std::uint64_t mix_step(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t sample_block(std::uint64_t seed, std::uint64_t sample, std::uint64_t block) {
    std::uint64_t z = seed;
    z = mix_step(z + 0x9E3779B97F4A7C15ull * (sample + 1));
    z = mix_step(z + 0x9E3779B97F4A7C15ull * (block + 1));
    return z;
}

CoinPoint sample_point(std::uint64_t seed, std::uint64_t sample, std::uint32_t horizon) {
    std::string prefix(horizon, 'H');
    std::uint64_t bits = 0;
    for (std::uint32_t k = 0; k < horizon; ++k) {
        if (k % 64 == 0) bits = sample_block(seed, sample, k / 64);
        if ((bits >> (k % 64)) & 1u) prefix[k] = 'T';
    }
    return CoinPoint(std::move(prefix), 'H');
}

EstimateReport estimate_probability(const CoinEvent& e, const EstimateConfig& config) {
    if (config.samples == 0) throw DomainError("sample count must be at least 1");
    if (config.horizon < e.max_used_index()) {
        throw DomainError("horizon " + std::to_string(config.horizon) +
                          " is smaller than the largest referenced index " +
                          std::to_string(e.max_used_index()));
    }

    EstimateReport report;
    report.samples = config.samples;
    report.horizon = config.horizon;
    for (std::uint64_t i = 0; i < config.samples; ++i) {
        if (e.contains(sample_point(config.seed, i, config.horizon))) ++report.hits;
    }
    report.frequency = make_rational(Integer(report.hits), Integer(config.samples));

    NumerosityContext ctx = NumerosityContext::coin();
    ExtendedReal st = probability(ctx, e).value.standard_part();
    report.exact_probability = st.rational(); // always finite: P(E) is in [0,1]

    report.gap = report.frequency - report.exact_probability;
    if (report.gap < 0) report.gap = -report.gap;

    const Rational& p = report.exact_probability;
    Rational variance_bound = Rational(9) * p * (1 - p);
    report.within_three_sigma =
        report.gap * report.gap * Rational(Integer(config.samples)) <= variance_bound;
    report.half_width = std::sqrt(static_cast<double>(variance_bound) /
                                  static_cast<double>(config.samples));
    return report;
}

} // namespace numero
