#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "cdgraph/errors.hpp"

namespace cdgraph {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

inline Integer floor_of(const Rational& r)
{
    Integer q = numerator_of(r) / denominator_of(r); // truncates toward zero
    if (r < 0 && !is_integral(r)) q -= 1;
    return q;
}

inline Integer ceil_of(const Rational& r)
{
    Integer q = numerator_of(r) / denominator_of(r);
    if (r > 0 && !is_integral(r)) q += 1;
    return q;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Accepts "p" or "p/q" with an optional leading minus sign.
inline Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && s[0] == '-') i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    // GMP reads a leading 0 as an octal prefix
    auto decimal = [](std::string_view s) {
        bool negative = !s.empty() && s[0] == '-';
        if (negative) s.remove_prefix(1);
        while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
        return Integer((negative ? "-" : "") + std::string{s});
    };
    Integer d = decimal(den);
    if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(decimal(num), d);
}

} // namespace cdgraph
