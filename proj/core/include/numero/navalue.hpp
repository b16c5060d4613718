#ifndef NUMERO_NAVALUE_HPP
#define NUMERO_NAVALUE_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <string>

#include "numero/rational.hpp"

namespace numero {

// Extended real: an exact rational or one of the two infinities. Codomain of
// standard_part.
class ExtendedReal {
public:
    enum class Kind { finite, pos_infinity, neg_infinity };

    ExtendedReal() : kind_(Kind::finite), value_(0) {}
    explicit ExtendedReal(Rational value) : kind_(Kind::finite), value_(std::move(value)) {}
    static ExtendedReal pos_infinity() { return ExtendedReal(Kind::pos_infinity); }
    static ExtendedReal neg_infinity() { return ExtendedReal(Kind::neg_infinity); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }

    // Finite value; throws DomainError on infinities.
    const Rational& rational() const;

    std::string to_string() const;

    friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

private:
    explicit ExtendedReal(Kind k) : kind_(k), value_(0) {}

    Kind kind_;
    Rational value_;
};

std::ostream& operator<<(std::ostream&, const ExtendedReal&);

// Element of the computable subfield of a non-Archimedean ordered field
// extending the rationals: a finite sum of terms c * w^e with nonzero
// rational coefficients c and pairwise distinct rational exponents e, where
// w is a fixed positive infinite unit. The empty sum is 0. Values are
// immutable once built up; all operations are pure.
class NAValue {
public:
    enum class Kind { zero, infinitesimal, finite, infinite };

    // Exponents kept in descending order so begin() is the leading term.
    using TermMap = std::map<Rational, Rational, std::greater<Rational>>;

    NAValue() = default;
    NAValue(long value) : NAValue(Rational(value)) {} // NOLINT: implicit by design
    NAValue(const Rational& value);                   // NOLINT: implicit by design

    static NAValue omega() { return monomial(Rational(1), Rational(1)); }
    static NAValue monomial(const Rational& coefficient, const Rational& exponent);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Leading term = term with the largest exponent. Undefined on 0.
    const Rational& leading_exponent() const;
    const Rational& leading_coefficient() const;

    // Coefficient at a given exponent, 0 if absent.
    Rational coefficient(const Rational& exponent) const;

    Kind classify() const;
    ExtendedReal standard_part() const;

    // Sign of the value under the field order: -1, 0, +1.
    int sign() const;

    NAValue operator-() const;
    NAValue& operator+=(const NAValue& rhs);
    NAValue& operator-=(const NAValue& rhs);
    NAValue& operator*=(const NAValue& rhs);

    friend NAValue operator+(NAValue lhs, const NAValue& rhs) { return lhs += rhs; }
    friend NAValue operator-(NAValue lhs, const NAValue& rhs) { return lhs -= rhs; }
    friend NAValue operator*(NAValue lhs, const NAValue& rhs) { return lhs *= rhs; }

    friend bool operator==(const NAValue& lhs, const NAValue& rhs) { return lhs.terms_ == rhs.terms_; }
    friend std::strong_ordering operator<=>(const NAValue& lhs, const NAValue& rhs);

    std::string to_string() const;

private:
    void insert_term(const Rational& exponent, const Rational& coefficient);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream&, const NAValue&);

constexpr int kDefaultTruncationOrder = 16;

struct DivResult {
    NAValue value;
    bool exact = false;
};

// Quotient x / y. If y is a single monomial the quotient is exact. Otherwise
// y is written as m * (1 + d) with m its leading monomial and d infinitesimal,
// and the expansion x/m * sum_k (-d)^k is evaluated by leading-term long
// division, truncated after `order` quotient terms; exact is set only when
// the expansion terminates within the truncation (zero remainder).
// y == 0 or order < 1 is a DomainError.
DivResult divide(const NAValue& x, const NAValue& y, int order = kDefaultTruncationOrder);

// x^k for k >= 0.
NAValue pow(const NAValue& x, unsigned k);

inline NAValue::Kind classify(const NAValue& x) { return x.classify(); }
inline ExtendedReal standard_part(const NAValue& x) { return x.standard_part(); }

// x and y differ by an infinitesimal (or are equal).
inline bool infinitely_close(const NAValue& x, const NAValue& y) {
    NAValue::Kind k = (x - y).classify();
    return k == NAValue::Kind::zero || k == NAValue::Kind::infinitesimal;
}

} // namespace numero

#endif
