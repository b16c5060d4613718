#include <benchmark/benchmark.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "numero/dsl.hpp"
#include "numero/estimate.hpp"
#include "numero/event.hpp"
#include "numero/measures.hpp"
#include "numero/navalue.hpp"
#include "numero/numerosity.hpp"
#include "numero/random_events.hpp"

namespace {

using namespace numero;

std::vector<NAValue> sample_values(std::size_t count, std::size_t max_terms, long exp_bound) {
    Rng rng(7);
    std::vector<NAValue> vals;
    vals.reserve(count);
    for (std::size_t i = 0; i < count; ++i) vals.push_back(random_navalue(rng, max_terms, exp_bound));
    return vals;
}

void BM_NAValueAdd(benchmark::State& state) {
    auto vals = sample_values(64, static_cast<std::size_t>(state.range(0)), 6);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vals[i & 63] + vals[(i + 17) & 63]);
        ++i;
    }
}
BENCHMARK(BM_NAValueAdd)->Arg(4)->Arg(16);

void BM_NAValueMultiply(benchmark::State& state) {
    auto vals = sample_values(64, static_cast<std::size_t>(state.range(0)), 6);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vals[i & 63] * vals[(i + 17) & 63]);
        ++i;
    }
}
BENCHMARK(BM_NAValueMultiply)->Arg(4)->Arg(16);

void BM_NAValueDivideTruncated(benchmark::State& state) {
    // Non-terminating series: quotient truncated at the requested order.
    NAValue num = NAValue::omega() + NAValue(3);
    NAValue den = NAValue::omega() - NAValue(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(divide(num, den, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_NAValueDivideTruncated)->Arg(4)->Arg(16)->Arg(64);

void BM_CoinBooleanOps(benchmark::State& state) {
    Rng rng(11);
    std::vector<CoinEvent> events;
    for (int i = 0; i < 64; ++i) {
        events.push_back(random_coin_event(rng, static_cast<std::uint32_t>(state.range(0)),
                                           static_cast<std::size_t>(state.range(0)) / 2, 3));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const CoinEvent& a = events[i & 63];
        const CoinEvent& b = events[(i + 29) & 63];
        benchmark::DoNotOptimize(a | b);
        benchmark::DoNotOptimize(a & b);
        benchmark::DoNotOptimize(a - b);
        ++i;
    }
}
BENCHMARK(BM_CoinBooleanOps)->Arg(8)->Arg(16);

void BM_IntervalBooleanOps(benchmark::State& state) {
    Rng rng(13);
    std::vector<IntervalEvent> events;
    for (int i = 0; i < 64; ++i) {
        events.push_back(random_interval_event(rng, static_cast<std::size_t>(state.range(0)), 3));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const IntervalEvent& a = events[i & 63];
        const IntervalEvent& b = events[(i + 29) & 63];
        benchmark::DoNotOptimize(a | b);
        benchmark::DoNotOptimize(a & b);
        benchmark::DoNotOptimize(a - b);
        ++i;
    }
}
BENCHMARK(BM_IntervalBooleanOps)->Arg(3)->Arg(8);

void BM_ParseAndElaborate(benchmark::State& state) {
    const std::string expr =
        "(C(1:H,2:T) | {HTH(T),TTH(H)} & ~C(3:H)) \\ {HH(T)} | C(2:T,4:H,6:T)";
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_to_event(expr, Model::coin));
    }
}
BENCHMARK(BM_ParseAndElaborate);

void BM_RenderRoundTrip(benchmark::State& state) {
    Rng rng(17);
    std::vector<Event> events;
    for (int i = 0; i < 64; ++i) events.push_back(Event(random_coin_event(rng)));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(render(events[i & 63]));
        ++i;
    }
}
BENCHMARK(BM_RenderRoundTrip);

void BM_Numerosity(benchmark::State& state) {
    Rng rng(19);
    NumerosityContext ctx = NumerosityContext::coin();
    std::vector<Event> events;
    for (int i = 0; i < 64; ++i) events.push_back(Event(random_coin_event(rng, 12, 6, 3)));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(numerosity(ctx, events[i & 63]));
        ++i;
    }
}
BENCHMARK(BM_Numerosity);

void BM_Estimate(benchmark::State& state) {
    CoinEvent e = std::get<CoinEvent>(parse_to_event("C(1:H,2:T)", Model::coin));
    EstimateConfig config;
    config.seed = 42;
    config.samples = static_cast<std::uint64_t>(state.range(0));
    config.horizon = 64;
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_probability(e, config));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Estimate)->Arg(1024)->Arg(16384);

void BM_FiniteOracle(benchmark::State& state) {
    auto space = std::make_shared<const FiniteSpace>(
        std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g", "h"});
    FiniteMeasureSpace ms = FiniteMeasureSpace::build(
        space,
        {FiniteEvent::of(space, {"a", "b"}), FiniteEvent::of(space, {"c", "d", "e"})},
        {{FiniteEvent::of(space, {"a", "b"}), make_rational(1, 4)},
         {FiniteEvent::of(space, {"c", "d", "e"}), make_rational(1, 4)},
         {FiniteEvent::omega(space), Rational(1)}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(finite_oracle(ms));
    }
}
BENCHMARK(BM_FiniteOracle);

} // namespace

BENCHMARK_MAIN();
