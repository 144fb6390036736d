#ifndef TAUTCHECK_RATIONAL_HPP
#define TAUTCHECK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "tautcheck/error.hpp"

namespace tautcheck {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds p/q in lowest terms.
inline Rational make_rational(long p, long q = 1)
{
    if (q == 0)
        throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Canonical rendering: "p/q" in lowest terms, "p" when q == 1.
inline std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    if (slash == std::string::npos) {
        if (!valid_int(s))
            throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
        return Rational(Integer(strip_plus(s)));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
    Integer d(strip_plus(den));
    if (d == 0)
        throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator: '" + s + "'");
    Rational r(Integer(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline Integer pow2(unsigned long e)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

inline int sign(const Rational& r) { return sgn(r); }

} // namespace tautcheck

#endif // TAUTCHECK_RATIONAL_HPP
