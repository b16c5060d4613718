#include "numero/navalue.hpp"

#include <gtest/gtest.h>

#include "numero/errors.hpp"
#include "numero/random_events.hpp"

namespace numero {
namespace {

NAValue w() { return NAValue::omega(); }
NAValue mono(long c_num, long c_den, long e_num, long e_den = 1) {
    return NAValue::monomial(make_rational(c_num, c_den), make_rational(e_num, e_den));
}

TEST(ExtendedReal, Basics) {
    EXPECT_EQ(ExtendedReal(make_rational(3, 4)).to_string(), "3/4");
    EXPECT_EQ(ExtendedReal::pos_infinity().to_string(), "inf");
    EXPECT_EQ(ExtendedReal::neg_infinity().to_string(), "-inf");
    EXPECT_TRUE(ExtendedReal(Rational(0)).is_finite());
    EXPECT_FALSE(ExtendedReal::pos_infinity().is_finite());
    EXPECT_THROW(ExtendedReal::pos_infinity().rational(), DomainError);
    EXPECT_EQ(ExtendedReal(Rational(2)).rational(), Rational(2));
}

TEST(NAValue, AdditionCancellation) {
    // (w + 1) + (-1) = w
    EXPECT_EQ((w() + NAValue(1)) + NAValue(-1), w());
    // (1/2 w^-1) + (1/2 w^-1) = w^-1
    EXPECT_EQ(mono(1, 2, -1) + mono(1, 2, -1), mono(1, 1, -1));
    // (2w^2 + 3) + (-2w^2 + 1/3) = 10/3
    NAValue a = mono(2, 1, 2) + NAValue(3);
    NAValue b = mono(-2, 1, 2) + NAValue(make_rational(1, 3));
    EXPECT_EQ(a + b, NAValue(make_rational(10, 3)));
}

TEST(NAValue, Multiplication) {
    // (w + 1)(w - 1) = w^2 - 1
    EXPECT_EQ((w() + NAValue(1)) * (w() - NAValue(1)), mono(1, 1, 2) - NAValue(1));
    // w^(1/2) * w^(1/2) = w
    EXPECT_EQ(mono(1, 1, 1, 2) * mono(1, 1, 1, 2), w());
    // (2 + w^-1) * 3 = 6 + 3 w^-1
    EXPECT_EQ((NAValue(2) + mono(1, 1, -1)) * NAValue(3), NAValue(6) + mono(3, 1, -1));
}

TEST(NAValue, CanonicalFormDropsZeros) {
    EXPECT_TRUE((w() - w()).is_zero());
    EXPECT_EQ(NAValue::monomial(Rational(0), Rational(5)), NAValue());
    EXPECT_EQ(NAValue(0).term_count(), 0u);
    NAValue x = mono(1, 2, 3) + mono(-1, 2, 3);
    EXPECT_TRUE(x.is_zero());
    EXPECT_EQ(x, NAValue());
}

TEST(NAValue, DivisionMonomial) {
    // div(w/2, w) = (1/2, exact)
    DivResult r = divide(mono(1, 2, 1), w());
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, NAValue(make_rational(1, 2)));
    // div(w - 1, w) = (1 - w^-1, exact)
    r = divide(w() - NAValue(1), w());
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, NAValue(1) - mono(1, 1, -1));
}

TEST(NAValue, DivisionTruncatedSeries) {
    // div(1, 1 - w^-1, 3) = (1 + w^-1 + w^-2, inexact); oracle:
    // (1 - w^-1) * result = 1 - w^-3 exactly.
    NAValue y = NAValue(1) - mono(1, 1, -1);
    DivResult r = divide(NAValue(1), y, 3);
    EXPECT_FALSE(r.exact);
    EXPECT_EQ(r.value, NAValue(1) + mono(1, 1, -1) + mono(1, 1, -2));
    EXPECT_EQ(y * r.value, NAValue(1) - mono(1, 1, -3));
}

TEST(NAValue, DivisionTerminatingSeriesIsExact) {
    // (w^2 - 1) / (w - 1) = w + 1: series terminates inside the truncation.
    NAValue x = mono(1, 1, 2) - NAValue(1);
    NAValue y = w() - NAValue(1);
    DivResult r = divide(x, y, 16);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, w() + NAValue(1));
    EXPECT_EQ(r.value * y, x);
}

TEST(NAValue, DivisionErrors) {
    EXPECT_THROW(divide(w(), NAValue(0)), DomainError);
    EXPECT_THROW(divide(w(), w(), 0), DomainError);
    DivResult zero = divide(NAValue(0), w() - NAValue(1), 2);
    EXPECT_TRUE(zero.exact);
    EXPECT_TRUE(zero.value.is_zero());
}

TEST(NAValue, Compare) {
    EXPECT_GT(mono(1, 1, -1), NAValue(0));              // w^-1 > 0
    EXPECT_GT(w(), NAValue(1000000000L));               // w > 10^9
    EXPECT_GT(mono(1, 2, 1), mono(1, 3, 1));            // w/2 > w/3
    EXPECT_LT(NAValue(-1) * w(), NAValue(-1000000000L));
    EXPECT_LT(w(), mono(1, 1, 2));                      // w < w^2
    EXPECT_LT(w() - NAValue(1), w());
    EXPECT_EQ(w() <=> w(), std::strong_ordering::equal);
}

TEST(NAValue, StandardPart) {
    // st(3 + 5 w^-1) = 3
    EXPECT_EQ((NAValue(3) + mono(5, 1, -1)).standard_part(), ExtendedReal(Rational(3)));
    EXPECT_EQ(w().standard_part(), ExtendedReal::pos_infinity());
    // st(-2 w^(1/2) + 100) = -inf
    EXPECT_EQ((mono(-2, 1, 1, 2) + NAValue(100)).standard_part(), ExtendedReal::neg_infinity());
    EXPECT_EQ(NAValue(0).standard_part(), ExtendedReal(Rational(0)));
    EXPECT_EQ(mono(-7, 2, -1).standard_part(), ExtendedReal(Rational(0)));
}

TEST(NAValue, Classify) {
    EXPECT_EQ(mono(1, 1, -1).classify(), NAValue::Kind::infinitesimal);
    EXPECT_EQ(NAValue(make_rational(7, 3)).classify(), NAValue::Kind::finite);
    // 1 / w^-1 is infinite.
    DivResult r = divide(NAValue(1), mono(1, 1, -1));
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value.classify(), NAValue::Kind::infinite);
    EXPECT_EQ(NAValue(0).classify(), NAValue::Kind::zero);
    EXPECT_EQ((mono(1, 1, 1) + NAValue(3)).classify(), NAValue::Kind::infinite);
}

TEST(NAValue, Rendering) {
    EXPECT_EQ(NAValue(0).to_string(), "0");
    EXPECT_EQ(w().to_string(), "w");
    EXPECT_EQ(mono(1, 4, 1).to_string(), "1/4*w");
    EXPECT_EQ((w() + NAValue(-1)).to_string(), "w + -1");
    EXPECT_EQ((mono(1, 2, 1) + NAValue(-3) + mono(2, 1, -1)).to_string(),
              "1/2*w + -3 + 2*w^-1");
    EXPECT_EQ(mono(-1, 1, 1).to_string(), "-1*w");
    EXPECT_EQ(mono(1, 1, 1, 2).to_string(), "w^1/2");
    EXPECT_EQ(mono(3, 1, -2).to_string(), "3*w^-2");
}

TEST(NAValue, Pow) {
    EXPECT_EQ(pow(w() + NAValue(1), 0), NAValue(1));
    EXPECT_EQ(pow(w() + NAValue(1), 2), mono(1, 1, 2) + mono(2, 1, 1) + NAValue(1));
    EXPECT_EQ(pow(NAValue(0), 3), NAValue(0));
}

TEST(NAValue, InfinitelyClose) {
    EXPECT_TRUE(infinitely_close(NAValue(3), NAValue(3) + mono(1, 1, -1)));
    EXPECT_FALSE(infinitely_close(NAValue(3), NAValue(4)));
    EXPECT_FALSE(infinitely_close(w(), w() + NAValue(1)));
    EXPECT_TRUE(infinitely_close(w(), w() + mono(5, 1, -2)));
}

TEST(NAValue, LeadingTermAccessors) {
    NAValue x = mono(1, 2, 1) + NAValue(-3);
    EXPECT_EQ(x.leading_exponent(), Rational(1));
    EXPECT_EQ(x.leading_coefficient(), make_rational(1, 2));
    EXPECT_EQ(x.coefficient(Rational(0)), Rational(-3));
    EXPECT_EQ(x.coefficient(Rational(7)), Rational(0));
    EXPECT_THROW(NAValue(0).leading_exponent(), DomainError);
}

// Randomized field-law smoke test; the full suite lives in run_property_suite
// and the acceptance gate.
TEST(NAValue, RandomFieldLaws) {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        NAValue x = random_navalue(rng), y = random_navalue(rng), z = random_navalue(rng);
        ASSERT_EQ(x + y, y + x);
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x + (-x), NAValue(0));
        if (!y.is_zero()) {
            DivResult q = divide(x, y, 8);
            if (q.exact) {
                ASSERT_EQ(q.value * y, x);
            }
        }
    }
}

} // namespace
} // namespace numero
