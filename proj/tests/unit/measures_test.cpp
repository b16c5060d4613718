#include "numero/measures.hpp"

#include <gtest/gtest.h>

#include <bit>

#include "numero/random_events.hpp"

namespace numero {
namespace {

Rational r(long num, long den = 1) { return make_rational(num, den); }

FiniteSpacePtr abcd() {
    static const FiniteSpacePtr s =
        std::make_shared<const FiniteSpace>(std::vector<std::string>{"a", "b", "c", "d"});
    return s;
}

FiniteEvent fe(const std::vector<std::string>& members) {
    return FiniteEvent::of(abcd(), members);
}

// algebra {∅, {a,b}, {c,d}, Ω} with mu = 1/2 on each generator.
FiniteMeasureSpace half_half() {
    return FiniteMeasureSpace::build(
        abcd(), {fe({"a", "b"})},
        {{fe({"a", "b"}), r(1, 2)}, {fe({"c", "d"}), r(1, 2)}});
}

TEST(MeasureValue, ArithmeticAndRendering) {
    EXPECT_EQ(MeasureValue(r(1, 2)).to_string(), "1/2");
    EXPECT_EQ(MeasureValue::infinity().to_string(), "inf");
    EXPECT_EQ(MeasureValue(r(1, 2)) + MeasureValue(r(1, 3)), MeasureValue(r(5, 6)));
    EXPECT_EQ(MeasureValue(r(1, 2)) + MeasureValue::infinity(), MeasureValue::infinity());
    EXPECT_TRUE(MeasureValue(r(1, 2)) < MeasureValue::infinity());
    EXPECT_TRUE(MeasureValue(r(1, 3)) < MeasureValue(r(1, 2)));
    EXPECT_THROW(MeasureValue(r(-1, 2)), ValidationError);
    EXPECT_THROW(MeasureValue::infinity().rational(), DomainError);
}

TEST(Kolmogorov, Examples) {
    EXPECT_EQ(kolmogorov_measure(CoinEvent::cylinder({{1, 'H'}, {2, 'T'}, {5, 'H'}})),
              MeasureValue(r(1, 8)));
    CoinEvent two = CoinEvent::cylinder({{1, 'H'}, {2, 'T'}}) |
                    CoinEvent::cylinder({{1, 'T'}, {2, 'H'}});
    EXPECT_EQ(kolmogorov_measure(two), MeasureValue(r(1, 2)));
    // Finite point sets are null; oracle: st(P) of the same event.
    CoinEvent pts = CoinEvent::points({CoinPoint("H", 'T'), CoinPoint("TTH", 'T')});
    EXPECT_EQ(kolmogorov_measure(pts), MeasureValue(r(0)));
    NumerosityContext ctx = NumerosityContext::coin();
    EXPECT_EQ(probability(ctx, pts).value.standard_part(), ExtendedReal(r(0)));
    EXPECT_EQ(kolmogorov_measure(CoinEvent::omega()), MeasureValue(r(1)));
    EXPECT_EQ(kolmogorov_measure(CoinEvent::empty()), MeasureValue(r(0)));
}

TEST(Lebesgue, Examples) {
    EXPECT_EQ(lebesgue_measure(IntervalEvent::interval(r(0), r(3, 4))), MeasureValue(r(3, 4)));
    IntervalEvent punctured =
        IntervalEvent::interval(r(0), r(1)) - IntervalEvent::points({r(1, 2)});
    EXPECT_EQ(lebesgue_measure(punctured), MeasureValue(r(1)));
    EXPECT_EQ(lebesgue_measure(IntervalEvent::empty()), MeasureValue(r(0)));
}

TEST(OuterMeasure, StructuralOnRepresentedEvents) {
    EXPECT_EQ(outer_measure(Event(CoinEvent::cylinder({{1, 'H'}, {2, 'T'}}))),
              MeasureValue(r(1, 4)));
    EXPECT_EQ(outer_measure(Event(IntervalEvent::points({r(1), r(2), r(3)}))),
              MeasureValue(r(0)));
    EXPECT_EQ(outer_measure(Event(IntervalEvent::interval(r(-1), r(5, 2)))),
              MeasureValue(r(7, 2)));
    // Finite-model sets need the declared measure space.
    EXPECT_THROW(outer_measure(Event(fe({"a"}))), DomainError);
}

TEST(InnerMeasure, EqualsOuterOnRepresentedEvents) {
    NumerosityContext ictx = NumerosityContext::interval();
    Event unit = Event(IntervalEvent::interval(r(1), r(2)));
    EXPECT_EQ(inner_measure(ictx, unit), MeasureValue(r(1)));
    EXPECT_EQ(inner_measure(ictx, unit), outer_measure(unit));
    NumerosityContext cctx = NumerosityContext::coin();
    Event half = Event(CoinEvent::cylinder({{3, 'H'}}));
    EXPECT_EQ(inner_measure(cctx, half), MeasureValue(r(1, 2)));
    EXPECT_EQ(inner_measure(cctx, half), outer_measure(half));
}

TEST(FiniteMeasureSpace, HalfHalfAtomsAndOuter) {
    FiniteMeasureSpace ms = half_half();
    EXPECT_EQ(ms.atom_masks().size(), 2u);
    EXPECT_EQ(ms.algebra().size(), 4u);
    EXPECT_EQ(ms.mu(fe({"a", "b"})), MeasureValue(r(1, 2)));
    EXPECT_EQ(ms.mu(FiniteEvent::omega(abcd())), MeasureValue(r(1)));
    EXPECT_THROW(ms.mu(fe({"a"})), DomainError);
    // Outer measure of a non-member comes from the smallest cover.
    EXPECT_EQ(ms.outer(fe({"a"})), MeasureValue(r(1, 2)));
    EXPECT_EQ(ms.outer(fe({"a", "c"})), MeasureValue(r(1)));
    EXPECT_EQ(ms.outer(FiniteEvent::empty(abcd())), MeasureValue(r(0)));
    EXPECT_EQ(ms.algebra_closure(fe({"a"})), fe({"a", "b"}));
    EXPECT_TRUE(ms.in_algebra(fe({"c", "d"})));
    EXPECT_FALSE(ms.in_algebra(fe({"a", "c"})));
}

TEST(FiniteMeasureSpace, DefaultBetaAndInner) {
    // Atom masses 1/2 over atoms of size 2: beta = max |A|/mu(A) = 4.
    FiniteMeasureSpace ms = half_half();
    EXPECT_EQ(ms.beta(), NAValue(4));
    EXPECT_EQ(ms.inner(fe({"a"})), MeasureValue(r(1, 4)));
    EXPECT_TRUE(ms.inner(fe({"a"})) < ms.outer(fe({"a"})));
    // Inner underestimates even some algebra members here (mu is not
    // proportional to cardinality once we skew the masses).
    FiniteMeasureSpace skewed = FiniteMeasureSpace::build(
        abcd(), {fe({"a", "b"})},
        {{fe({"a", "b"}), r(3, 4)}, {fe({"c", "d"}), r(1, 4)}});
    EXPECT_EQ(skewed.beta(), NAValue(8)); // max(2/(3/4), 2/(1/4)) = 8
    EXPECT_EQ(skewed.inner(fe({"a", "b"})), MeasureValue(r(1, 4)));
    EXPECT_EQ(skewed.mu(fe({"a", "b"})), MeasureValue(r(3, 4)));
}

TEST(FiniteMeasureSpace, NullAtomForcesInfiniteBeta) {
    FiniteMeasureSpace ms = FiniteMeasureSpace::build(
        abcd(), {fe({"a", "b"})},
        {{fe({"a", "b"}), r(0)}, {fe({"c", "d"}), r(1)}});
    EXPECT_EQ(ms.beta(), NAValue::omega());
    EXPECT_EQ(ms.inner(fe({"c", "d"})), MeasureValue(r(0)));
    EXPECT_EQ(ms.inner(FiniteEvent::omega(abcd())), MeasureValue(r(0)));
}

TEST(FiniteMeasureSpace, BuildDiagnostics) {
    // Inconsistent: {a,b} gets 1/2 but Omega gets 2 while {c,d} gets 1/2.
    EXPECT_THROW(FiniteMeasureSpace::build(abcd(), {fe({"a", "b"})},
                                           {{fe({"a", "b"}), r(1, 2)},
                                            {fe({"c", "d"}), r(1, 2)},
                                            {FiniteEvent::omega(abcd()), r(2)}}),
                 ValidationError);
    // Undetermined: only one of two atoms constrained.
    EXPECT_THROW(FiniteMeasureSpace::build(abcd(), {fe({"a", "b"})},
                                           {{fe({"a", "b"}), r(1, 2)}}),
                 ValidationError);
    // Negative atom forced: mu({a,b}) = 2 but mu(Omega) = 1.
    EXPECT_THROW(FiniteMeasureSpace::build(abcd(), {fe({"a", "b"})},
                                           {{fe({"a", "b"}), r(2)},
                                            {FiniteEvent::omega(abcd()), r(1)}}),
                 ValidationError);
    // Constraint set outside the algebra.
    EXPECT_THROW(FiniteMeasureSpace::build(abcd(), {fe({"a", "b"})},
                                           {{fe({"a"}), r(1, 4)},
                                            {fe({"a", "b"}), r(1, 2)},
                                            {fe({"c", "d"}), r(1, 2)}}),
                 ValidationError);
}

TEST(Caratheodory, HalfHalfSplittingFailure) {
    FiniteMeasureSpace ms = half_half();
    MeasureOracle M = [&](const Event& e) { return ms.outer(std::get<FiniteEvent>(e)); };
    // x = {a} fails against Y = {a,b}: 1/2 != 1/2 + 1/2.
    CaratheodoryVerdict v = caratheodory_check(
        M, Event(fe({"a"})), {Event(fe({"a", "b"}))});
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(v.first_failure, 0);
    // Measurable x passes against every witness.
    std::vector<Event> all;
    for (std::uint64_t m = 0; m < 16; ++m) all.push_back(Event(FiniteEvent::from_mask(abcd(), m)));
    EXPECT_TRUE(caratheodory_check(M, Event(fe({"a", "b"})), all).holds);
    EXPECT_TRUE(caratheodory_check(M, Event(FiniteEvent::empty(abcd())), all).holds);
    EXPECT_FALSE(caratheodory_check(M, Event(fe({"a"})), all).holds);
}

TEST(Caratheodory, ExhaustiveFamilyMatchesAlgebra) {
    FiniteMeasureSpace ms = half_half();
    std::vector<std::uint64_t> family = caratheodory_family(ms);
    // For the half/half outer measure the Caratheodory sets are exactly the
    // algebra members.
    EXPECT_EQ(family, ms.algebra());
}

TEST(FiniteOracle, PowersetCountingMeasure) {
    auto space = abcd();
    std::vector<FiniteEvent> gens;
    std::vector<std::pair<FiniteEvent, Rational>> mus;
    for (const auto& label : space->labels()) {
        gens.push_back(FiniteEvent::of(space, {label}));
        mus.push_back({FiniteEvent::of(space, {label}), r(1, 4)});
    }
    FiniteMeasureSpace ms = FiniteMeasureSpace::build(space, gens, mus);
    FiniteOracleReport report = finite_oracle(ms);
    EXPECT_TRUE(report.all_passed());
    EXPECT_EQ(report.universe_size, 4u);
    EXPECT_EQ(report.algebra_size, 16u);
    EXPECT_EQ(report.caratheodory_size, 16u);
    // Uniform mu is proportional to cardinality, so inner == mu on the algebra.
    EXPECT_TRUE(report.equality_on_algebra);
    EXPECT_EQ(report.beta, "4");
}

TEST(FiniteOracle, TrivialAlgebra) {
    auto space = abcd();
    FiniteMeasureSpace ms = FiniteMeasureSpace::build(
        space, {}, {{FiniteEvent::omega(space), r(1)}});
    EXPECT_EQ(ms.algebra().size(), 2u);
    // Every nonempty subset is covered only by Omega.
    for (std::uint64_t m = 1; m < 16; ++m) {
        EXPECT_EQ(ms.outer(FiniteEvent::from_mask(space, m)), MeasureValue(r(1)));
    }
    FiniteOracleReport report = finite_oracle(ms);
    EXPECT_TRUE(report.all_passed());
    EXPECT_EQ(report.algebra_size, 2u);
    // Only ∅ and Ω split every witness under this outer measure.
    EXPECT_EQ(report.caratheodory_size, 2u);
}

TEST(FiniteOracle, ZeroMeasureMakesEverythingCaratheodory) {
    auto two = std::make_shared<const FiniteSpace>(std::vector<std::string>{"a", "b"});
    FiniteMeasureSpace ms = FiniteMeasureSpace::build(
        two, {}, {{FiniteEvent::omega(two), r(0)}});
    FiniteOracleReport report = finite_oracle(ms);
    EXPECT_TRUE(report.all_passed());
    EXPECT_EQ(report.caratheodory_size, 4u);
    EXPECT_EQ(ms.beta(), NAValue::omega());
}

TEST(FiniteOracle, HalfHalfReport) {
    FiniteOracleReport report = finite_oracle(half_half());
    EXPECT_TRUE(report.all_passed());
    // Equal-size atoms with equal masses: mu is proportional to cardinality,
    // so inner == mu on algebra members (strictness lives off the algebra,
    // e.g. inner({a}) = 1/4 < 1/2 = outer({a})).
    EXPECT_TRUE(report.equality_on_algebra);
    EXPECT_EQ(report.caratheodory_size, 4u);

    FiniteOracleReport skewed = finite_oracle(FiniteMeasureSpace::build(
        abcd(), {fe({"a", "b"})},
        {{fe({"a", "b"}), r(3, 4)}, {fe({"c", "d"}), r(1, 4)}}));
    EXPECT_TRUE(skewed.all_passed());
    EXPECT_FALSE(skewed.equality_on_algebra); // inner({a,b}) = 2/8 < 3/4 = mu
}

TEST(FiniteOracle, SizeBound) {
    auto with_size = [](int n) {
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
        auto space = std::make_shared<const FiniteSpace>(labels);
        return FiniteMeasureSpace::build(space, {}, {{FiniteEvent::omega(space), Rational(1)}});
    };
    EXPECT_THROW(finite_oracle(with_size(13)), DomainError);       // default bound 12
    EXPECT_NO_THROW(finite_oracle(with_size(13), 13));             // raised bound
    EXPECT_THROW(finite_oracle(with_size(15), 100), DomainError);  // hard cap stays 14
}

TEST(ParseFiniteSpec, WellFormed) {
    FiniteMeasureSpace ms = parse_finite_spec(
        "# half/half example\n"
        "universe: a b c d\n"
        "gen: a b\n"
        "mu: a b = 1/2\n"
        "mu: c d = 1/2\n");
    EXPECT_EQ(ms.space()->labels(), (std::vector<std::string>{"a", "b", "c", "d"}));
    EXPECT_EQ(ms.algebra().size(), 4u);
    EXPECT_EQ(ms.mu(FiniteEvent::of(ms.space(), {"a", "b"})), MeasureValue(r(1, 2)));
}

TEST(ParseFiniteSpec, Diagnostics) {
    auto message_of = [](const std::string& text) {
        try {
            parse_finite_spec(text);
        } catch (const ValidationError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_EQ(message_of("gen: a\nuniverse: a b\n"), "line 1: gen before universe");
    EXPECT_EQ(message_of("universe: a\nuniverse: a\n"), "line 2: duplicate universe line");
    EXPECT_EQ(message_of("universe: a b\nmu: a = x\n"), "line 2: malformed rational: x");
    EXPECT_EQ(message_of("universe: a b\nmu: a\n"), "line 2: expected 'mu: labels... = p/q'");
    EXPECT_EQ(message_of("universe: a b\nbogus: a\n"),
              "line 2: unrecognized line (expected universe:/gen:/mu:)");
    EXPECT_EQ(message_of(""), "finite spec has no universe line");
    EXPECT_EQ(message_of("universe: a b\nmu: a = -1/2\n"), "line 2: mu values are non-negative");
}

TEST(InnerLeqOuterExhaustive, SmallSpaces) {
    // Brute-force inner-vs-outer comparison over every subset of a small
    // universe for a skewed measure.
    std::vector<std::string> labels;
    for (int i = 0; i < 6; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    auto space = std::make_shared<const FiniteSpace>(labels);
    FiniteMeasureSpace ms = FiniteMeasureSpace::build(
        space, {FiniteEvent::of(space, {"a", "b", "c"}), FiniteEvent::of(space, {"d"})},
        {{FiniteEvent::of(space, {"a", "b", "c"}), r(1, 6)},
         {FiniteEvent::of(space, {"d"}), r(1, 3)},
         {FiniteEvent::of(space, {"e", "f"}), r(1, 2)}});
    bool strict_somewhere = false;
    for (std::uint64_t m = 0; m < (1u << 6); ++m) {
        FiniteEvent x = FiniteEvent::from_mask(space, m);
        MeasureValue inner = ms.inner(x), outer = ms.outer(x);
        ASSERT_TRUE(inner <= outer) << m;
        if (ms.in_algebra(x)) {
            ASSERT_EQ(ms.mu(x), outer);
        } else if (inner < outer) {
            strict_somewhere = true;
        }
    }
    EXPECT_TRUE(strict_somewhere);
}

} // namespace
} // namespace numero
