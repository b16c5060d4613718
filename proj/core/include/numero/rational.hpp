#ifndef NUMERO_RATIONAL_HPP
#define NUMERO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "numero/errors.hpp"

namespace numero {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

// Exact arbitrary-precision rational, always stored in lowest terms with a
// positive denominator. Expression templates are disabled so arithmetic
// results are plain values.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Boost's (num, den) constructor rejects negative denominators; normalize
// the sign here. den == 0 is a DomainError.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Reduced "p/q" with "/1" omitted; the canonical wire rendering.
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

inline int sign_of(const Rational& r) { return r.sign(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// 2^k as an exact rational, k >= 0.
inline Rational pow2_rational(unsigned k) {
    Integer p = Integer(1) << k;
    return Rational(p);
}

// Parses "p" or "p/q" (optional leading '-' on p, q a positive integer);
// nullopt on any other shape.
inline std::optional<Rational> try_parse_rational(std::string_view s) {
    auto digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    bool negative = !s.empty() && s.front() == '-';
    if (negative) s.remove_prefix(1);
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!digits(num) || !digits(den)) return std::nullopt;
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) return std::nullopt;
    if (negative) n = -n;
    return make_rational(std::move(n), std::move(d));
}

} // namespace numero

#endif
