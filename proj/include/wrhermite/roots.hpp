#ifndef WRHERMITE_ROOTS_HPP
#define WRHERMITE_ROOTS_HPP

#include "wrhermite/bigint.hpp"
#include "wrhermite/poly.hpp"

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrhermite {

enum class RootKind { real, imaginary, star_ray, generic };

inline const char* to_string(RootKind k)
{
    switch (k) {
    case RootKind::real: return "real";
    case RootKind::imaginary: return "imaginary";
    case RootKind::star_ray: return "star_ray";
    case RootKind::generic: return "generic";
    }
    return "generic";
}

/// `ray` is the index l of the nearest ray l*pi/q of the 2q-star when the root
/// lies on it (also set for real and imaginary roots that do), otherwise -1.
struct RootTag {
    RootKind kind = RootKind::generic;
    int ray = -1;
};

struct RootReport {
    std::vector<std::complex<double>> roots;
    /// |P(z)| / sum |c_j| |z|^j, evaluated in 50-digit arithmetic.
    std::vector<double> residuals;
    /// Empty until classify() runs.
    std::vector<RootTag> tags;
    double residual_tol = 0.0;
    double classify_tol = 0.0;
    int stride = 0;
    int iterations = 0;
};

struct RootOptions {
    double residual_tol = 1e-9;
    int max_iterations = 2000;
};

/// Thrown when simultaneous iteration fails to produce roots within the
/// residual tolerance; carries whatever was computed.
class RootFindingError : public std::runtime_error {
public:
    RootFindingError(const std::string& what, RootReport partial)
        : std::runtime_error(what), partial_(std::move(partial))
    {
    }
    const RootReport& partial() const noexcept { return partial_; }

private:
    RootReport partial_;
};

namespace detail {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

inline Float50 to_float50(const BigInt& v) { return Float50(v); }

// Relative backward error of z as a root of the integer polynomial `c`.
inline Float50 backward_error(const std::vector<Float50>& c, const Complex50& z)
{
    Complex50 acc = 0;
    Float50 scale = 0;
    const Float50 az = abs(z);
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * z + c[i];
        scale = scale * az + abs(c[i]);
    }
    return scale == 0 ? Float50(0) : Float50(abs(acc) / scale);
}

// Newton steps in 50-digit arithmetic, each accepted only while it lowers the
// backward error and stays within max_step of the start (so a root cannot
// jump onto a neighbour).
inline Complex50 polish(const std::vector<Float50>& c, Complex50 z, double max_step)
{
    const Complex50 start = z;
    Float50 err = backward_error(c, z);
    for (int it = 0; it < 8 && err > 0; ++it) {
        Complex50 p = 0, dp = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[i];
        }
        if (dp == Complex50(0))
            break;
        Complex50 next = z - p / dp;
        if (abs(next - start) > max_step)
            break;
        Float50 next_err = backward_error(c, next);
        if (!(next_err < err))
            break;
        z = next;
        err = next_err;
    }
    return z;
}

} // namespace detail

/// All complex roots of p (degree >= 1). Zero roots are split off exactly by
/// stripping trailing zero coefficients; the rest are found by Aberth-Ehrlich
/// iteration on a rescaled double-precision copy, then polished against the
/// exact coefficients. Roots are returned sorted by (real, imag).
inline RootReport all_roots(const ExactPoly& p, const RootOptions& opt = {})
{
    if (p.degree() < 1)
        throw std::invalid_argument("root finding requires degree >= 1");
    const auto& full = p.coeffs();
    std::size_t zeros = 0;
    while (full[zeros] == 0)
        ++zeros;
    const std::vector<BigInt> c(full.begin() + static_cast<std::ptrdiff_t>(zeros), full.end());
    const int d = static_cast<int>(c.size()) - 1;

    RootReport report;
    report.residual_tol = opt.residual_tol;

    std::vector<std::complex<double>> z;
    if (d > 0) {
        // Scale x = s*y with s = max_k |c_{d-k}/c_d|^(1/k) so the roots of the
        // monic y-polynomial are O(1). Done in logs: coefficients grow
        // factorially.
        const double lead_log = log_abs(c.back());
        double log_s = -1e300;
        for (int k = 1; k <= d; ++k) {
            const BigInt& ck = c[static_cast<std::size_t>(d - k)];
            if (ck != 0)
                log_s = std::max(log_s, (log_abs(ck) - lead_log) / k);
        }
        const double s = std::exp(log_s);
        std::vector<double> a(static_cast<std::size_t>(d) + 1, 0.0);
        for (int j = 0; j <= d; ++j) {
            const BigInt& cj = c[static_cast<std::size_t>(j)];
            if (cj == 0)
                continue;
            const double mag = std::exp(log_abs(cj) - lead_log - (d - j) * log_s);
            a[static_cast<std::size_t>(j)] = cj < 0 ? -mag : mag;
        }
        if (c.back() < 0)
            for (auto& v : a)
                v = -v;
        a.back() = 1.0;

        double cauchy = 0.0;
        for (int j = 0; j < d; ++j)
            cauchy = std::max(cauchy, std::abs(a[static_cast<std::size_t>(j)]));
        cauchy += 1.0;

        std::vector<std::complex<double>> y(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) {
            const double angle = 2.0 * std::numbers::pi * k / d + 0.4;
            y[static_cast<std::size_t>(k)] = std::polar(cauchy, angle);
        }

        std::vector<bool> done(static_cast<std::size_t>(d), false);
        const double eps = 1e-15;
        int it = 0;
        std::size_t remaining = static_cast<std::size_t>(d);
        for (; it < opt.max_iterations && remaining > 0; ++it) {
            for (std::size_t i = 0; i < y.size(); ++i) {
                if (done[i])
                    continue;
                std::complex<double> pv = 0, dv = 0;
                double bound = 0.0;
                const double ay = std::abs(y[i]);
                for (std::size_t j = a.size(); j-- > 0;) {
                    dv = dv * y[i] + pv;
                    pv = pv * y[i] + a[j];
                    bound = bound * ay + std::abs(a[j]);
                }
                if (std::abs(pv) <= 8.0 * eps * bound) {
                    done[i] = true;
                    --remaining;
                    continue;
                }
                const std::complex<double> ratio = pv / dv;
                std::complex<double> repulsion = 0;
                for (std::size_t j = 0; j < y.size(); ++j)
                    if (j != i)
                        repulsion += 1.0 / (y[i] - y[j]);
                const std::complex<double> step = ratio / (1.0 - ratio * repulsion);
                y[i] -= step;
                if (std::abs(step) <= eps * std::max(1.0, std::abs(y[i]))) {
                    done[i] = true;
                    --remaining;
                }
            }
        }
        report.iterations = it;
        for (const auto& v : y)
            z.push_back(v * s);
    }

    std::vector<detail::Float50> exact(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        exact[i] = detail::to_float50(c[i]);

    bool ok = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const auto& root = z[i];
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i)
                nearest = std::min(nearest, std::abs(root - z[j]));
        const double max_step = std::isinf(nearest) ? 1e300 : 0.5 * nearest;
        const detail::Complex50 polished =
            detail::polish(exact, detail::Complex50(root.real(), root.imag()), max_step);
        const std::complex<double> rz(static_cast<double>(polished.real()),
                                      static_cast<double>(polished.imag()));
        const double res =
            static_cast<double>(detail::backward_error(exact, detail::Complex50(rz.real(), rz.imag())));
        report.roots.push_back(rz);
        report.residuals.push_back(res);
        if (!(res <= opt.residual_tol))
            ok = false;
    }
    for (std::size_t i = 0; i < zeros; ++i) {
        report.roots.emplace_back(0.0, 0.0);
        report.residuals.push_back(0.0);
    }

    std::vector<std::size_t> order(report.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const auto& a = report.roots[x];
        const auto& b = report.roots[y];
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    RootReport sorted = report;
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted.roots[i] = report.roots[order[i]];
        sorted.residuals[i] = report.residuals[order[i]];
    }

    if (!ok)
        throw RootFindingError("root finder did not converge to residual tolerance after " +
                                   std::to_string(report.iterations) + " iterations",
                               std::move(sorted));
    return sorted;
}

/// Largest eigenvalue of the Jacobi matrix of the He recurrence (zero
/// diagonal, off-diagonal sqrt(k)), i.e. the largest root x_{n,n} of He_n.
inline double hermite_largest_root(int n)
{
    if (n < 1)
        throw std::invalid_argument("hermite_largest_root requires n >= 1");
    if (n == 1)
        return 0.0;
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (int k = 1; k < n; ++k)
        sub(k - 1) = std::sqrt(static_cast<double>(k));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("tridiagonal eigensolver failed");
    return solver.eigenvalues().maxCoeff();
}

/// x_{n,n} by Newton's method started from the upper bound 2(n-1)/sqrt(n+2).
/// He_n is convex to the right of its largest root, so the iterates decrease
/// monotonically onto it.
inline double hermite_largest_root_newton(int n)
{
    if (n < 1)
        throw std::invalid_argument("hermite_largest_root requires n >= 1");
    if (n == 1)
        return 0.0;
    long double x = 2.0L * (n - 1) / std::sqrt(static_cast<long double>(n + 2));
    for (int it = 0; it < 500; ++it) {
        // He_n(x) and He_{n-1}(x) by the three-term recurrence; He_n' = n He_{n-1}.
        long double prev = 1.0L, cur = x;
        for (int k = 1; k < n; ++k) {
            const long double next = x * cur - k * prev;
            prev = cur;
            cur = next;
        }
        const long double step = cur / (n * prev);
        x -= step;
        if (std::fabs(step) <= 1e-18L * std::max(1.0L, std::fabs(x)))
            break;
    }
    return static_cast<double>(x);
}

/// Tags each root: real if |Im z| <= tol (1+|z|), else imaginary if
/// |Re z| <= tol (1+|z|), else star_ray if within tol (1+|z|) of a ray l*pi/q
/// (l = 0..2q-1), else generic.
inline RootReport classify(RootReport report, int q, double tol)
{
    if (q < 2)
        throw std::invalid_argument("stride q must be at least 2");
    report.stride = q;
    report.classify_tol = tol;
    report.tags.clear();
    for (const auto& z : report.roots) {
        const double slack = tol * (1.0 + std::abs(z));
        RootTag tag;
        double best = slack;
        for (int l = 0; l < 2 * q; ++l) {
            const std::complex<double> u = std::polar(1.0, std::numbers::pi * l / q);
            const std::complex<double> w = z * std::conj(u);
            const double dist = w.real() >= 0 ? std::abs(w.imag()) : std::abs(z);
            if (dist <= best) {
                best = dist;
                tag.ray = l;
                if (dist == 0.0)
                    break;
            }
        }
        if (std::abs(z.imag()) <= slack)
            tag.kind = RootKind::real;
        else if (std::abs(z.real()) <= slack)
            tag.kind = RootKind::imaginary;
        else if (tag.ray >= 0)
            tag.kind = RootKind::star_ray;
        report.tags.push_back(tag);
    }
    return report;
}

} // namespace wrhermite

#endif
