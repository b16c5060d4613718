#include "numero/navalue.hpp"

#include <ostream>

namespace numero {

const Rational& ExtendedReal::rational() const {
    if (!is_finite()) throw DomainError("extended real is infinite");
    return value_;
}

std::string ExtendedReal::to_string() const {
    switch (kind_) {
        case Kind::pos_infinity: return "inf";
        case Kind::neg_infinity: return "-inf";
        case Kind::finite: break;
    }
    return rational_to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) {
    return os << x.to_string();
}

NAValue::NAValue(const Rational& value) {
    if (value != 0) terms_.emplace(Rational(0), value);
}

NAValue NAValue::monomial(const Rational& coefficient, const Rational& exponent) {
    NAValue v;
    if (coefficient != 0) v.terms_.emplace(exponent, coefficient);
    return v;
}

const Rational& NAValue::leading_exponent() const {
    if (terms_.empty()) throw DomainError("leading term of zero");
    return terms_.begin()->first;
}

const Rational& NAValue::leading_coefficient() const {
    if (terms_.empty()) throw DomainError("leading term of zero");
    return terms_.begin()->second;
}

Rational NAValue::coefficient(const Rational& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

NAValue::Kind NAValue::classify() const {
    if (terms_.empty()) return Kind::zero;
    const Rational& lead = leading_exponent();
    if (lead > 0) return Kind::infinite;
    if (lead < 0) return Kind::infinitesimal;
    return Kind::finite;
}

ExtendedReal NAValue::standard_part() const {
    if (terms_.empty()) return ExtendedReal(Rational(0));
    if (leading_exponent() > 0) {
        return leading_coefficient() > 0 ? ExtendedReal::pos_infinity()
                                         : ExtendedReal::neg_infinity();
    }
    return ExtendedReal(coefficient(Rational(0)));
}

int NAValue::sign() const {
    if (terms_.empty()) return 0;
    return sign_of(leading_coefficient());
}

void NAValue::insert_term(const Rational& exponent, const Rational& coefficient) {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        if (coefficient != 0) terms_.emplace(exponent, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

NAValue NAValue::operator-() const {
    NAValue result;
    for (const auto& [e, c] : terms_) result.terms_.emplace(e, -c);
    return result;
}

NAValue& NAValue::operator+=(const NAValue& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
}

NAValue& NAValue::operator-=(const NAValue& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
    return *this;
}

NAValue& NAValue::operator*=(const NAValue& rhs) {
    NAValue result;
    for (const auto& [ex, cx] : terms_) {
        for (const auto& [ey, cy] : rhs.terms_) {
            result.insert_term(ex + ey, cx * cy);
        }
    }
    terms_ = std::move(result.terms_);
    return *this;
}

std::strong_ordering operator<=>(const NAValue& lhs, const NAValue& rhs) {
    int s = (lhs - rhs).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string NAValue::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (e == 0) {
            out += rational_to_string(c);
        } else {
            // "1*" is elided; "-1" is kept explicit.
            if (c != 1) {
                out += rational_to_string(c);
                out += "*";
            }
            out += "w";
            if (e != 1) {
                out += "^";
                out += rational_to_string(e);
            }
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const NAValue& x) {
    return os << x.to_string();
}

NAValue pow(const NAValue& x, unsigned k) {
    NAValue result(1);
    for (unsigned i = 0; i < k; ++i) result *= x;
    return result;
}

DivResult divide(const NAValue& x, const NAValue& y, int order) {
    if (y.is_zero()) throw DomainError("division by zero");
    if (order < 1) throw DomainError("truncation order must be positive");
    if (x.is_zero()) return {NAValue(), true};

    NAValue lead_inverse = NAValue::monomial(Rational(1) / y.leading_coefficient(),
                                             -y.leading_exponent());
    if (y.is_monomial()) return {x * lead_inverse, true};

    // y = m * (1 + d): the quotient expansion x/m * sum_k (-d)^k is produced
    // by leading-term long division, truncated after `order` quotient terms.
    // The remainder vanishes exactly when the expansion terminates, which is
    // what the exact flag reports.
    NAValue quotient;
    NAValue remainder = x;
    for (int i = 0; i < order && !remainder.is_zero(); ++i) {
        NAValue t = NAValue::monomial(remainder.leading_coefficient() / y.leading_coefficient(),
                                      remainder.leading_exponent() - y.leading_exponent());
        quotient += t;
        remainder -= t * y;
    }
    return {quotient, remainder.is_zero()};
}

} // namespace numero
