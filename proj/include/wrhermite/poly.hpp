#ifndef WRHERMITE_POLY_HPP
#define WRHERMITE_POLY_HPP

#include "wrhermite/bigint.hpp"

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wrhermite {

/// Dense univariate polynomial over Z. coeffs()[i] is the coefficient of x^i;
/// the leading stored coefficient is never zero and the zero polynomial has no
/// coefficients.
class ExactPoly {
public:
    ExactPoly() = default;
    ExactPoly(std::initializer_list<BigInt> c) : ExactPoly(std::vector<BigInt>(c)) {}
    explicit ExactPoly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }

    static ExactPoly constant(const BigInt& v) { return ExactPoly(std::vector<BigInt>{v}); }
    static ExactPoly monomial(int degree, const BigInt& coeff = 1)
    {
        std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 0);
        c.back() = coeff;
        return ExactPoly(std::move(c));
    }

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    BigInt coeff(int power) const
    {
        return power >= 0 && power <= degree() ? c_[static_cast<std::size_t>(power)] : BigInt(0);
    }
    const BigInt& leading() const { return c_.back(); }

    ExactPoly& operator+=(const ExactPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    ExactPoly& operator-=(const ExactPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    ExactPoly& operator*=(const BigInt& s)
    {
        for (auto& v : c_)
            v *= s;
        trim();
        return *this;
    }

    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
    friend ExactPoly operator*(ExactPoly a, const BigInt& s) { return a *= s; }
    friend ExactPoly operator*(const BigInt& s, ExactPoly a) { return a *= s; }
    friend ExactPoly operator-(ExactPoly a)
    {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return ExactPoly(std::move(r));
    }
    friend bool operator==(const ExactPoly&, const ExactPoly&) = default;

    /// x * p
    ExactPoly shifted(int by = 1) const
    {
        if (is_zero())
            return {};
        std::vector<BigInt> r(static_cast<std::size_t>(by), 0);
        r.insert(r.end(), c_.begin(), c_.end());
        return ExactPoly(std::move(r));
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// Human-readable form, highest power first, e.g. "x^3 - 2".
inline std::string to_string(const ExactPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        BigInt c = p.coeff(i);
        if (c == 0)
            continue;
        const bool neg = c < 0;
        if (neg)
            c = -c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (c != 1 || i == 0)
            s += c.str();
        if (i > 0)
            s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s;
}

/// Polynomial quotient a / b over Z; throws InexactDivision if b does not
/// divide a in Z[x].
inline ExactPoly exact_div(const ExactPoly& a, const ExactPoly& b, const std::string& what)
{
    if (b.is_zero())
        throw InexactDivision(what + ": division by the zero polynomial");
    if (a.is_zero())
        return {};
    if (a.degree() < b.degree())
        throw InexactDivision(what + ": dividend degree below divisor degree");
    std::vector<BigInt> rem = a.coeffs();
    std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    for (std::size_t i = quo.size(); i-- > 0;) {
        const BigInt& top = rem[i + db];
        if (top == 0)
            continue;
        BigInt q = exact_div(top, bc[db], what);
        quo[i] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i + j] -= q * bc[j];
    }
    for (const auto& r : rem)
        if (r != 0)
            throw InexactDivision(what + ": nonzero polynomial remainder");
    return ExactPoly(std::move(quo));
}

/// Divides every coefficient by d, asserting exactness.
inline ExactPoly exact_div(const ExactPoly& a, const BigInt& d, const std::string& what)
{
    std::vector<BigInt> c = a.coeffs();
    for (auto& v : c)
        v = exact_div(v, d, what);
    return ExactPoly(std::move(c));
}

inline ExactPoly derivative(const ExactPoly& p)
{
    if (p.degree() < 1)
        return {};
    std::vector<BigInt> c(static_cast<std::size_t>(p.degree()));
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        c[i - 1] = p.coeffs()[i] * static_cast<int>(i);
    return ExactPoly(std::move(c));
}

inline Rational evaluate(const ExactPoly& p, const Rational& z)
{
    Rational acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * z + Rational(p.coeffs()[i]);
    return acc;
}

inline BigInt evaluate(const ExactPoly& p, const BigInt& z)
{
    BigInt acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * z + p.coeffs()[i];
    return acc;
}

inline std::complex<double> evaluate(const ExactPoly& p, std::complex<double> z)
{
    std::complex<double> acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * z + p.coeffs()[i].convert_to<double>();
    return acc;
}

/// He_n: He_0 = 1, He_1 = x, He_{n+1} = x He_n - n He_{n-1}.
inline ExactPoly hermite_prob(int n)
{
    if (n < 0)
        throw std::invalid_argument("hermite degree must be non-negative");
    ExactPoly prev = ExactPoly::constant(1);
    if (n == 0)
        return prev;
    ExactPoly cur = ExactPoly::monomial(1);
    for (int k = 1; k < n; ++k) {
        ExactPoly next = cur.shifted() - prev * BigInt(k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// H_n: H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}.
inline ExactPoly hermite_phys(int n)
{
    if (n < 0)
        throw std::invalid_argument("hermite degree must be non-negative");
    ExactPoly prev = ExactPoly::constant(1);
    if (n == 0)
        return prev;
    ExactPoly cur = ExactPoly::monomial(1, 2);
    for (int k = 1; k < n; ++k) {
        ExactPoly next = cur.shifted() * BigInt(2) - prev * BigInt(2 * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Appell family of exp(xt - t^q/q): Q_n = x^n for n < q, otherwise
/// Q_n = x Q_{n-1} - (n-1)!/(n-q)! Q_{n-q}. q = 2 gives He_n.
inline ExactPoly q_poly(int n, int q)
{
    if (n < 0)
        throw std::invalid_argument("degree must be non-negative");
    if (q < 2)
        throw std::invalid_argument("stride q must be at least 2");
    std::vector<ExactPoly> seq;
    seq.reserve(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        if (m < q)
            seq.push_back(ExactPoly::monomial(m));
        else
            seq.push_back(seq[static_cast<std::size_t>(m - 1)].shifted() -
                          seq[static_cast<std::size_t>(m - q)] * falling_ratio(m - 1, m - q));
    }
    return seq.back();
}

using PolyMatrix = std::vector<std::vector<ExactPoly>>;

/// Laplace expansion along the first row. O(r!), for small matrices and
/// cross-checks.
inline ExactPoly determinant_cofactor(const PolyMatrix& m)
{
    const std::size_t r = m.size();
    if (r == 0)
        return ExactPoly::constant(1);
    if (r == 1)
        return m[0][0];
    ExactPoly det;
    for (std::size_t col = 0; col < r; ++col) {
        if (m[0][col].is_zero())
            continue;
        PolyMatrix minor(r - 1);
        for (std::size_t i = 1; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (j != col)
                    minor[i - 1].push_back(m[i][j]);
        ExactPoly term = m[0][col] * determinant_cofactor(minor);
        if (col % 2)
            det -= term;
        else
            det += term;
    }
    return det;
}

/// Fraction-free (Bareiss) elimination over Z[x]. Every intermediate entry is
/// a minor of the input, so each division by the previous pivot is exact.
inline ExactPoly determinant_bareiss(PolyMatrix m)
{
    const std::size_t r = m.size();
    if (r == 0)
        return ExactPoly::constant(1);
    for (const auto& row : m)
        if (row.size() != r)
            throw std::invalid_argument("determinant requires a square matrix");
    bool negate = false;
    ExactPoly prev_pivot = ExactPoly::constant(1);
    for (std::size_t k = 0; k + 1 < r; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < r && m[swap_row][k].is_zero())
                ++swap_row;
            if (swap_row == r)
                return {};
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < r; ++i) {
            for (std::size_t j = k + 1; j < r; ++j) {
                ExactPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev_pivot, "Bareiss step");
            }
            m[i][k] = ExactPoly{};
        }
        prev_pivot = m[k][k];
    }
    ExactPoly det = m[r - 1][r - 1];
    return negate ? -det : det;
}

/// Wr[p_1..p_r]: determinant of the matrix whose row i holds the i-th
/// derivatives.
inline ExactPoly wronskian(const std::vector<ExactPoly>& ps)
{
    if (ps.empty())
        throw std::invalid_argument("wronskian of an empty sequence");
    const std::size_t r = ps.size();
    PolyMatrix m(r, std::vector<ExactPoly>(r));
    for (std::size_t j = 0; j < r; ++j) {
        ExactPoly d = ps[j];
        for (std::size_t i = 0; i < r; ++i) {
            m[i][j] = d;
            d = derivative(d);
        }
    }
    return r <= 4 ? determinant_cofactor(m) : determinant_bareiss(std::move(m));
}

enum class Basis { monomial, hermite_like };

inline const char* to_string(Basis b) { return b == Basis::monomial ? "monomial" : "hermite"; }

/// coeffs[k] multiplies x^(n - stride*k) (monomial) or the degree n - stride*k
/// member of the stride-q Appell family (hermite_like: He for stride 2, Q_n
/// otherwise).
struct BasisExpansion {
    Basis basis = Basis::monomial;
    int stride = 2;
    int degree = 0;
    std::vector<BigInt> coeffs;

    friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

inline BasisExpansion monomial_to_hermite(int m)
{
    if (m < 0)
        throw std::invalid_argument("degree must be non-negative");
    BasisExpansion e{Basis::hermite_like, 2, m, {}};
    const BigInt mf = factorial(m);
    for (int k = 0; 2 * k <= m; ++k)
        e.coeffs.push_back(exact_div(mf, ipow(2, k) * factorial(k) * factorial(m - 2 * k),
                                     "monomial_to_hermite"));
    return e;
}

inline ExactPoly reconstruct(const BasisExpansion& e)
{
    if (e.stride < 2)
        throw std::invalid_argument("stride q must be at least 2");
    ExactPoly p;
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
        const int deg = e.degree - e.stride * static_cast<int>(k);
        if (deg < 0)
            throw std::invalid_argument("expansion longer than floor(n/q)+1");
        if (e.coeffs[k] == 0)
            continue;
        ExactPoly b = e.basis == Basis::monomial ? ExactPoly::monomial(deg) : q_poly(deg, e.stride);
        p += b * e.coeffs[k];
    }
    return p;
}

/// Monomial coefficients a_j of x^(n - q j) of a polynomial of degree n that
/// only has powers congruent to n mod q. Throws std::domain_error otherwise.
inline BasisExpansion monomial_expansion(const ExactPoly& p, int q)
{
    if (q < 2)
        throw std::invalid_argument("stride q must be at least 2");
    if (p.is_zero())
        throw std::domain_error("zero polynomial has no stride expansion");
    const int n = p.degree();
    BasisExpansion e{Basis::monomial, q, n, {}};
    for (int i = 0; i <= n; ++i)
        if ((n - i) % q != 0 && p.coeff(i) != 0)
            throw std::domain_error("polynomial has a power not congruent to its degree mod q");
    for (int k = 0; q * k <= n; ++k)
        e.coeffs.push_back(p.coeff(n - q * k));
    return e;
}

} // namespace wrhermite

#endif
