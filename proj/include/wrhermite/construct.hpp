#ifndef WRHERMITE_CONSTRUCT_HPP
#define WRHERMITE_CONSTRUCT_HPP

#include "wrhermite/bigint.hpp"
#include "wrhermite/characters.hpp"
#include "wrhermite/partition.hpp"
#include "wrhermite/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wrhermite {

namespace detail {
inline void require_nonempty(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("construction requires a nonempty partition");
}

inline void require_stride(int q)
{
    if (q < 2)
        throw std::invalid_argument("stride q must be at least 2");
}

inline std::string where(const Partition& lambda, int q, int k)
{
    return "lambda=" + to_string(lambda) + " q=" + std::to_string(q) + " k=" + std::to_string(k);
}

template <class Family>
ExactPoly normalized_wronskian(const Partition& lambda, Family family)
{
    const DegreeVector dv = degree_vector(lambda);
    std::vector<ExactPoly> columns;
    for (int d : dv.entries())
        columns.push_back(family(d));
    try {
        return exact_div(wronskian(columns), vandermonde(dv), "Vandermonde division");
    } catch (const InexactDivision& e) {
        throw InexactDivision(std::string("Vandermonde division failed for ") + to_string(lambda) +
                              ": " + e.what());
    }
}
} // namespace detail

/// He_lambda = Wr[He_{n_1}, ..., He_{n_r}] / Delta(n_lambda); the reference route.
inline ExactPoly he_lambda_wronskian(const Partition& lambda)
{
    detail::require_nonempty(lambda);
    return detail::normalized_wronskian(lambda, [](int d) { return hermite_prob(d); });
}

/// Q_lambda = Wr[Q_{n_1}, ..., Q_{n_r}] / Delta(n_lambda).
inline ExactPoly q_lambda_wronskian(const Partition& lambda, int q)
{
    detail::require_nonempty(lambda);
    detail::require_stride(q);
    return detail::normalized_wronskian(lambda, [q](int d) { return q_poly(d, q); });
}

/// Monomial coefficients from characters:
/// a_k = (-1)^k H(lambda) chi^lambda(q^k 1^(n-qk)) / (q^k k! (n-qk)!).
inline BasisExpansion q_lambda_monomial_coeffs(const Partition& lambda, int q)
{
    detail::require_nonempty(lambda);
    detail::require_stride(q);
    const int n = lambda.weight();
    const BigInt hook = hook_product(lambda);
    BasisExpansion a{Basis::monomial, q, n, {}};
    for (int k = 0; q * k <= n; ++k) {
        BigInt num = hook * character(lambda, cycle_type(n, q, k));
        if (k % 2)
            num = -num;
        const BigInt den = ipow(q, k) * factorial(k) * factorial(n - q * k);
        a.coeffs.push_back(exact_div(num, den, "character coefficient " + detail::where(lambda, q, k)));
    }
    return a;
}

inline ExactPoly q_lambda_character(const Partition& lambda, int q)
{
    return reconstruct(q_lambda_monomial_coeffs(lambda, q));
}

inline ExactPoly he_lambda_character(const Partition& lambda)
{
    return q_lambda_character(lambda, 2);
}

/// Hermite-basis coefficients b_k = H(lambda) K_{lambda', (2^k 1^(n-2k))} / (k! (n-2k)!).
inline BasisExpansion he_lambda_hermite_expansion(const Partition& lambda)
{
    detail::require_nonempty(lambda);
    const int n = lambda.weight();
    const BigInt hook = hook_product(lambda);
    const Partition dual = conjugate(lambda);
    BasisExpansion b{Basis::hermite_like, 2, n, {}};
    for (int k = 0; 2 * k <= n; ++k) {
        const BigInt num = hook * kostka(dual, cycle_type(n, 2, k));
        const BigInt den = factorial(k) * factorial(n - 2 * k);
        b.coeffs.push_back(exact_div(num, den, "Kostka coefficient " + detail::where(lambda, 2, k)));
    }
    return b;
}

/// Rewrites a stride-q monomial expansion in the Q (He for q = 2) basis:
/// b_k = sum_{j<=k} (n-qj)! / (q^(k-j) (k-j)! (n-qk)!) a_j.
inline BasisExpansion base_change(const BasisExpansion& a, int q)
{
    detail::require_stride(q);
    if (a.basis != Basis::monomial)
        throw std::invalid_argument("base_change expects a monomial expansion");
    if (a.stride != q)
        throw std::invalid_argument("expansion stride does not match q");
    const int n = a.degree;
    BasisExpansion b{Basis::hermite_like, q, n, {}};
    for (int k = 0; k < static_cast<int>(a.coeffs.size()); ++k) {
        // Common denominator q^k k! (n-qk)!; term j contributes
        // (n-qj)! q^j k!/(k-j)! a_j over it.
        BigInt num = 0;
        for (int j = 0; j <= k; ++j)
            num += factorial(n - q * j) * ipow(q, j) * falling_ratio(k, k - j) *
                   a.coeffs[static_cast<std::size_t>(j)];
        const BigInt den = ipow(q, k) * factorial(k) * factorial(n - q * k);
        b.coeffs.push_back(exact_div(num, den, "base change k=" + std::to_string(k)));
    }
    return b;
}

/// Q-basis coefficients b_k = H(lambda) S^lambda_{q,k} / (q^k k! (n-qk)!).
inline BasisExpansion q_lambda_expansion(const Partition& lambda, int q)
{
    detail::require_nonempty(lambda);
    detail::require_stride(q);
    const int n = lambda.weight();
    const BigInt hook = hook_product(lambda);
    BasisExpansion b{Basis::hermite_like, q, n, {}};
    for (int k = 0; q * k <= n; ++k) {
        const BigInt num = hook * s_qk_sum(lambda, q, k);
        const BigInt den = ipow(q, k) * factorial(k) * factorial(n - q * k);
        b.coeffs.push_back(exact_div(num, den, "character-sum coefficient " + detail::where(lambda, q, k)));
    }
    return b;
}

/// Checks a_j(lambda) = (-1)^((q+1) j) a_j(lambda') on the Wronskian-route
/// monomial coefficients. This is the integer form of
/// Q_lambda(x) = (-w)^n Q_lambda'(-x/w), w = exp(i pi / q).
inline bool conjugation_check(const Partition& lambda, int q)
{
    detail::require_nonempty(lambda);
    detail::require_stride(q);
    const BasisExpansion a = monomial_expansion(q_lambda_wronskian(lambda, q), q);
    const BasisExpansion b = monomial_expansion(q_lambda_wronskian(conjugate(lambda), q), q);
    if (a.coeffs.size() != b.coeffs.size())
        return false;
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
        const bool flip = ((q + 1) * j) % 2 == 1;
        if (a.coeffs[j] != (flip ? BigInt(-b.coeffs[j]) : b.coeffs[j]))
            return false;
    }
    return true;
}

} // namespace wrhermite

#endif
