#ifndef WRHERMITE_BOUNDS_HPP
#define WRHERMITE_BOUNDS_HPP

#include "wrhermite/bigint.hpp"
#include "wrhermite/construct.hpp"
#include "wrhermite/partition.hpp"
#include "wrhermite/poly.hpp"
#include "wrhermite/roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrhermite {

/// Szego's bound for H_n rescaled to He_n: 2(n-1)/sqrt(n+2).
inline double szego_bound(int n)
{
    if (n < 1)
        throw std::invalid_argument("szego_bound requires n >= 1");
    return 2.0 * (n - 1) / std::sqrt(static_cast<double>(n + 2));
}

/// x_{n,n} + sum_{k<n} |alpha_k / alpha_n|^(1/(n-k)) for P = sum alpha_k He_k.
inline double turan_bound(const BasisExpansion& e)
{
    if (e.basis != Basis::hermite_like || e.stride != 2)
        throw std::invalid_argument("turan_bound expects a stride-2 Hermite expansion");
    if (e.coeffs.empty() || e.coeffs.front() == 0)
        throw std::invalid_argument("turan_bound requires a nonzero leading coefficient");
    double bound = e.degree >= 1 ? hermite_largest_root(e.degree) : 0.0;
    const double lead = log_abs(e.coeffs.front());
    // coeffs[k] multiplies He_{n-2k}, so its root index is n - (n-2k) = 2k.
    for (std::size_t k = 1; k < e.coeffs.size(); ++k)
        if (e.coeffs[k] != 0)
            bound += std::exp((log_abs(e.coeffs[k]) - lead) / (2.0 * static_cast<double>(k)));
    return bound;
}

/// 2 (sqrt(e) lambda2 + sqrt(2)) sqrt(lambda1 + 1), a strict bound on the
/// root moduli of He_(lambda1, lambda2).
inline double two_part_bound(int lambda1, int lambda2)
{
    if (lambda2 < 1 || lambda1 < lambda2)
        throw std::invalid_argument("not a partition");
    return 2.0 * (std::sqrt(std::numbers::e) * lambda2 + std::sqrt(2.0)) *
           std::sqrt(static_cast<double>(lambda1) + 1.0);
}

/// Closed-form Hermite coefficient of He_(lambda1, lambda2):
/// (lambda1+1)! lambda2! / ((lambda1-k+1)! (lambda2-k)! k!) for k <= lambda2, else 0.
inline BigInt two_part_bk(int lambda1, int lambda2, int k)
{
    if (lambda2 < 1 || lambda1 < lambda2)
        throw std::invalid_argument("not a partition");
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    if (k > lambda2)
        return 0;
    return exact_div(factorial(lambda1 + 1) * factorial(lambda2),
                     factorial(lambda1 - k + 1) * factorial(lambda2 - k) * factorial(k),
                     "two_part_bk");
}

/// x_n with n = |lambda|: bounds every real or purely imaginary root.
inline double real_imag_bound(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("bound requires a nonempty partition");
    return hermite_largest_root(lambda.weight());
}

/// x_{lambda_1 + r - 1}: bounds every real root.
inline double real_bound_sharp(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("bound requires a nonempty partition");
    return hermite_largest_root(lambda[0] + static_cast<int>(lambda.length()) - 1);
}

/// Largest positive real root of Q_n (0 when n < q, where Q_n = x^n).
inline double q_largest_real_root(int n, int q, double tol = 1e-7)
{
    if (n < 1)
        throw std::invalid_argument("q_largest_real_root requires n >= 1");
    const RootReport r = classify(all_roots(q_poly(n, q)), q, tol);
    double best = 0.0;
    for (std::size_t i = 0; i < r.roots.size(); ++i)
        if (r.tags[i].kind == RootKind::real)
            best = std::max(best, r.roots[i].real());
    return best;
}

/// One bound compared against one observed quantity.
struct BoundCheck {
    std::string bound;     ///< szego, turan, two_part, real_imag, real_sharp, star
    std::string observed;  ///< which roots were measured: all, real, imaginary, star
    double value = 0.0;
    double observed_max = 0.0;
    std::size_t roots_checked = 0;
    bool strict = false;
    double margin() const { return value - observed_max; }
    bool violated = false;
};

struct BoundReport {
    Partition partition;
    int q = 2;
    double tol = 0.0;
    std::map<std::string, double> bounds;
    double max_modulus = 0.0;
    double max_real_modulus = 0.0;
    double max_imag_modulus = 0.0;
    double max_star_modulus = 0.0;
    std::vector<BoundCheck> checks;
    RootReport roots;

    bool ok() const
    {
        return std::none_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.violated; });
    }
};

/// Computes and classifies the roots of He_lambda (q = 2) or Q_lambda (q >= 3)
/// and checks every applicable bound. q = 2: turan always; two_part when
/// r = 2; szego when r = 1; real_imag against real and imaginary roots;
/// real_sharp against real roots. q >= 3: roots on the 2q-star against the
/// largest real root of Q_n. Non-strict bounds are violated when the margin is
/// below -tol; the strict two-part bound when the margin is not positive.
inline BoundReport verify_bounds(const Partition& lambda, int q, double tol)
{
    if (lambda.empty())
        throw std::invalid_argument("bound requires a nonempty partition");
    if (q < 2)
        throw std::invalid_argument("stride q must be at least 2");
    BoundReport rep;
    rep.partition = lambda;
    rep.q = q;
    rep.tol = tol;
    const ExactPoly poly = q == 2 ? he_lambda_wronskian(lambda) : q_lambda_wronskian(lambda, q);
    rep.roots = classify(all_roots(poly), q, tol);

    std::size_t n_all = 0, n_real = 0, n_imag = 0, n_star = 0;
    for (std::size_t i = 0; i < rep.roots.roots.size(); ++i) {
        const double m = std::abs(rep.roots.roots[i]);
        const RootTag& t = rep.roots.tags[i];
        rep.max_modulus = std::max(rep.max_modulus, m);
        ++n_all;
        if (t.kind == RootKind::real) {
            rep.max_real_modulus = std::max(rep.max_real_modulus, m);
            ++n_real;
        }
        if (t.kind == RootKind::imaginary) {
            rep.max_imag_modulus = std::max(rep.max_imag_modulus, m);
            ++n_imag;
        }
        if (t.ray >= 0) {
            rep.max_star_modulus = std::max(rep.max_star_modulus, m);
            ++n_star;
        }
    }

    auto add = [&](const std::string& name, const std::string& observed, double value, double obs,
                   std::size_t count, bool strict) {
        rep.bounds[name] = value;
        BoundCheck c{name, observed, value, obs, count, strict};
        c.violated = strict ? !(c.margin() > 0.0) : c.margin() < -tol;
        if (count == 0)
            c.violated = false;
        rep.checks.push_back(c);
    };

    const int n = lambda.weight();
    if (q == 2) {
        if (lambda.length() == 1)
            add("szego", "all", szego_bound(n), rep.max_modulus, n_all, false);
        add("turan", "all", turan_bound(he_lambda_hermite_expansion(lambda)), rep.max_modulus, n_all, false);
        if (lambda.length() == 2)
            add("two_part", "all", two_part_bound(lambda[0], lambda[1]), rep.max_modulus, n_all, true);
        const double ri = real_imag_bound(lambda);
        add("real_imag", "real", ri, rep.max_real_modulus, n_real, false);
        add("real_imag", "imaginary", ri, rep.max_imag_modulus, n_imag, false);
        add("real_sharp", "real", real_bound_sharp(lambda), rep.max_real_modulus, n_real, false);
    } else {
        add("star", "star", q_largest_real_root(n, q, tol), rep.max_star_modulus, n_star, false);
    }
    return rep;
}

} // namespace wrhermite

#endif
