#include "numero/interval.hpp"

#include <gtest/gtest.h>

#include "numero/random_events.hpp"

namespace numero {
namespace {

Rational r(long num, long den = 1) { return make_rational(num, den); }

IntervalEvent iv(long a_num, long a_den, long b_num, long b_den) {
    return IntervalEvent::interval(r(a_num, a_den), r(b_num, b_den));
}

TEST(IntervalEvent, AdjacentIntervalsMerge) {
    IntervalEvent e = iv(0, 1, 1, 1) | iv(1, 1, 2, 1);
    EXPECT_EQ(e, iv(0, 1, 2, 1));
    EXPECT_EQ(e.intervals().size(), 1u);
    EXPECT_EQ(e.length(), r(2));
    // Overlap merges too.
    EXPECT_EQ(iv(0, 1, 3, 2) | iv(1, 1, 2, 1), iv(0, 1, 2, 1));
    // A gap does not.
    EXPECT_EQ((iv(0, 1, 1, 1) | iv(3, 2, 2, 1)).intervals().size(), 2u);
}

TEST(IntervalEvent, MakeValidatesAndCanonicalizes) {
    EXPECT_THROW(IntervalEvent::interval(r(1), r(1)), ValidationError);
    EXPECT_THROW(IntervalEvent::interval(r(2), r(1)), ValidationError);
    // Raw overlapping parts canonicalize.
    IntervalEvent e = IntervalEvent::make({{r(1), r(2)}, {r(0), r(1)}}, {}, {});
    EXPECT_EQ(e, iv(0, 1, 2, 1));
    // Plus inside base dropped, minus outside base dropped, minus wins.
    IntervalEvent f = IntervalEvent::make({{r(0), r(1)}}, {r(1, 2), r(3)}, {r(3), r(7)});
    EXPECT_EQ(f, iv(0, 1, 1, 1));
}

TEST(IntervalEvent, HalfOpenMembership) {
    IntervalEvent e = iv(0, 1, 1, 1);
    EXPECT_TRUE(e.contains(r(0)));
    EXPECT_TRUE(e.contains(r(1, 2)));
    EXPECT_FALSE(e.contains(r(1))); // half-open on the right
    EXPECT_FALSE(e.contains(r(-1, 2)));
}

TEST(IntervalEvent, PointAdjustments) {
    IntervalEvent e = iv(0, 1, 1, 1) - IntervalEvent::points({r(1, 2)});
    EXPECT_FALSE(e.contains(r(1, 2)));
    EXPECT_TRUE(e.contains(r(1, 4)));
    EXPECT_EQ(e.minus(), std::vector<Rational>{r(1, 2)});
    EXPECT_EQ(e.intervals().size(), 1u); // interior minus point does not split

    // Removing the left endpoint keeps the interval and records the point.
    IntervalEvent g = iv(0, 1, 1, 1) - IntervalEvent::points({r(0)});
    EXPECT_FALSE(g.contains(r(0)));
    EXPECT_EQ(g.intervals().size(), 1u);
    EXPECT_EQ(g.minus(), std::vector<Rational>{r(0)});

    IntervalEvent h = e | IntervalEvent::points({r(2)});
    EXPECT_TRUE(h.contains(r(2)));
    EXPECT_EQ(h.plus(), std::vector<Rational>{r(2)});
}

TEST(IntervalEvent, DifferenceSplitsBase) {
    IntervalEvent e = iv(0, 1, 3, 1) - iv(1, 1, 2, 1);
    EXPECT_EQ(e, iv(0, 1, 1, 1) | iv(2, 1, 3, 1));
    EXPECT_EQ(e.length(), r(2));
}

TEST(IntervalEvent, IntersectionTrims) {
    EXPECT_EQ(iv(0, 1, 2, 1) & iv(1, 1, 3, 1), iv(1, 1, 2, 1));
    EXPECT_TRUE((iv(0, 1, 1, 1) & iv(2, 1, 3, 1)).is_empty());
    // Touching intervals share no point: [0,1) & [1,2) = empty.
    EXPECT_TRUE((iv(0, 1, 1, 1) & iv(1, 1, 2, 1)).is_empty());
}

TEST(IntervalEvent, SubsetDecisions) {
    EXPECT_TRUE(iv(0, 1, 1, 2).is_subset_of(iv(0, 1, 1, 1)));
    EXPECT_FALSE(iv(0, 1, 1, 1).is_subset_of(iv(0, 1, 1, 2)));
    IntervalEvent punctured = iv(0, 1, 1, 1) - IntervalEvent::points({r(1, 2)});
    EXPECT_TRUE(punctured.is_subset_of(iv(0, 1, 1, 1)));
    EXPECT_FALSE(iv(0, 1, 1, 1).is_subset_of(punctured));
}

TEST(IntervalEvent, MembershipHomomorphismRandom) {
    Rng rng(19);
    for (int i = 0; i < 300; ++i) {
        IntervalEvent a = random_interval_event(rng), b = random_interval_event(rng);
        IntervalEvent u = a | b, n = a & b, d = a - b;
        for (int k = 0; k < 8; ++k) {
            Rational x = random_rational(rng, 12, 6);
            bool ina = a.contains(x), inb = b.contains(x);
            ASSERT_EQ(u.contains(x), ina || inb);
            ASSERT_EQ(n.contains(x), ina && inb);
            ASSERT_EQ(d.contains(x), ina && !inb);
        }
        u.validate();
        n.validate();
        d.validate();
    }
}

TEST(IntervalEvent, EndpointMembershipAtCuts) {
    // Regression guard for the sweep: membership evaluated exactly at the
    // operand endpoints.
    IntervalEvent a = iv(0, 1, 1, 1) | iv(2, 1, 3, 1);
    IntervalEvent b = iv(1, 2, 5, 2);
    IntervalEvent u = a | b;
    for (long num = -2; num <= 8; ++num) {
        Rational x = r(num, 2);
        ASSERT_EQ(u.contains(x), a.contains(x) || b.contains(x)) << num;
    }
    EXPECT_EQ(u, iv(0, 1, 3, 1));
}

TEST(IntervalEvent, LengthAdditivity) {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        IntervalEvent a = random_interval_event(rng), b = random_interval_event(rng);
        // length(a) + length(b) = length(a|b) + length(a&b)
        ASSERT_EQ(a.length() + b.length(), (a | b).length() + (a & b).length());
    }
}

} // namespace
} // namespace numero
