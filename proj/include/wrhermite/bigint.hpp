#ifndef WRHERMITE_BIGINT_HPP
#define WRHERMITE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wrhermite {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a division that must be exact leaves a remainder; every
/// coefficient formula here is integral, so this means a bug, not bad input.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what)
{
    if (den == 0)
        throw InexactDivision(what + ": division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw InexactDivision(what + ": " + num.str() + " not divisible by " + den.str());
    return q;
}

inline BigInt factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative number");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/// n! / m! for 0 <= m <= n.
inline BigInt falling_ratio(int n, int m)
{
    if (m < 0 || m > n)
        throw std::invalid_argument("falling_ratio requires 0 <= m <= n");
    BigInt f = 1;
    for (int i = m + 1; i <= n; ++i)
        f *= i;
    return f;
}

inline BigInt binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt b = 1;
    for (int i = 1; i <= k; ++i)
        b = b * (n - k + i) / i;
    return b;
}

inline BigInt ipow(const BigInt& base, int e)
{
    BigInt r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Natural log of |v| without overflowing a double, v != 0.
inline double log_abs(const BigInt& v)
{
    BigInt a = boost::multiprecision::abs(v);
    const unsigned bits = boost::multiprecision::msb(a);
    if (bits < 1000)
        return std::log(a.convert_to<double>());
    const unsigned shift = bits - 60;
    BigInt top = a >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

/// Converts to long double (x87 extended range on the supported targets).
inline long double to_long_double(const BigInt& v) { return v.convert_to<long double>(); }

} // namespace wrhermite

#endif
