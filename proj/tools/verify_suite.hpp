#ifndef WRHERMITE_TOOLS_VERIFY_SUITE_HPP
#define WRHERMITE_TOOLS_VERIFY_SUITE_HPP

#include "wrhermite/wrhermite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace wrhermite::cli {

/// Unit a check iterates over: every partition of n, or one case per n.
enum class Scope { partitions, degrees };

struct CheckFailure {
    std::string subject;
    std::string detail;
};

struct CheckResult {
    std::string name;
    Scope scope = Scope::partitions;
    std::size_t checked = 0;
    std::vector<CheckFailure> failures;
    bool ok() const { return failures.empty(); }
};

struct CheckContext {
    int q = 2;
    double tol = 1e-7;
};

struct CheckSpec {
    std::string name;
    Scope scope;
    /// Largest n the check runs for; 0 means n_max.
    int max_n = 0;
    /// Returns an empty optional on success, a description on failure.
    std::function<std::optional<std::string>(const Partition&, const CheckContext&)> on_partition;
    std::function<std::optional<std::string>(int, const CheckContext&)> on_degree;
};

namespace detail {

inline std::string poly_mismatch(const char* a, const ExactPoly& pa, const char* b, const ExactPoly& pb)
{
    return std::string(a) + " = " + to_string(pa) + " but " + b + " = " + to_string(pb);
}

inline std::optional<std::string> triple_equality(const Partition& l, const CheckContext&)
{
    const ExactPoly w = he_lambda_wronskian(l);
    const ExactPoly c = he_lambda_character(l);
    const ExactPoly k = reconstruct(he_lambda_hermite_expansion(l));
    if (w != c)
        return poly_mismatch("wronskian", w, "character", c);
    if (w != k)
        return poly_mismatch("wronskian", w, "kostka", k);
    return std::nullopt;
}

inline std::optional<std::string> q_equality(const Partition& l, const CheckContext& ctx)
{
    const ExactPoly w = q_lambda_wronskian(l, ctx.q);
    const ExactPoly c = q_lambda_character(l, ctx.q);
    const ExactPoly s = reconstruct(q_lambda_expansion(l, ctx.q));
    if (w != c)
        return poly_mismatch("wronskian", w, "character", c);
    if (w != s)
        return poly_mismatch("wronskian", w, "character-sum expansion", s);
    return std::nullopt;
}

inline std::optional<std::string> base_change_check(const Partition& l, const CheckContext& ctx)
{
    const BasisExpansion a = monomial_expansion(q_lambda_wronskian(l, ctx.q), ctx.q);
    const BasisExpansion b = base_change(a, ctx.q);
    const BasisExpansion ref = ctx.q == 2 ? he_lambda_hermite_expansion(l) : q_lambda_expansion(l, ctx.q);
    if (b != ref)
        return std::string("base change of the monomial coefficients differs from the direct expansion");
    return std::nullopt;
}

inline std::optional<std::string> kostka_identity(const Partition& l, const CheckContext&)
{
    const int n = l.weight();
    const Partition dual = conjugate(l);
    for (int k = 0; 2 * k <= n; ++k) {
        const BigInt lhs = s_qk_sum(l, 2, k);
        const BigInt rhs = ipow(2, k) * kostka(dual, cycle_type(n, 2, k));
        if (lhs != rhs)
            return "k=" + std::to_string(k) + ": S=" + lhs.str() + " vs 2^k K=" + rhs.str();
    }
    return std::nullopt;
}

inline std::optional<std::string> nonneg_bk(const Partition& l, const CheckContext& ctx)
{
    const BasisExpansion b = q_lambda_expansion(l, ctx.q);
    if (b.coeffs.front() != 1)
        return "b_0 = " + b.coeffs.front().str();
    const Partition dual = conjugate(l);
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) {
        if (b.coeffs[k] < 0)
            return "b_" + std::to_string(k) + " = " + b.coeffs[k].str();
        if (ctx.q == 2) {
            const bool positive = b.coeffs[k] > 0;
            const bool dom = dominates(dual, cycle_type(l.weight(), 2, static_cast<int>(k)));
            if (positive != dom)
                return "b_" + std::to_string(k) + " positivity disagrees with dominance";
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> pieri_route(const Partition& l, const CheckContext& ctx)
{
    const int n = l.weight();
    for (int k = 0; ctx.q * k <= n; ++k) {
        const BigInt a = s_qk_sum(l, ctx.q, k);
        const BigInt b = s_qk_via_pieri(l, ctx.q, k);
        if (a != b)
            return "k=" + std::to_string(k) + ": character sum " + a.str() + " vs Pieri " + b.str();
        if (a < 0)
            return "k=" + std::to_string(k) + ": negative S = " + a.str();
    }
    return std::nullopt;
}

inline std::optional<std::string> characters_frobenius(const Partition& l, const CheckContext&)
{
    for (const Partition& mu : partitions_of(l.weight())) {
        const BigInt a = character(l, mu);
        const BigInt b = character_frobenius_oracle(l, mu);
        if (a != b)
            return "mu=" + to_string(mu) + ": " + a.str() + " vs oracle " + b.str();
    }
    return std::nullopt;
}

inline std::optional<std::string> kostka_dominance(const Partition& l, const CheckContext&)
{
    const int n = l.weight();
    for (const Partition& mu : partitions_of(n))
        if ((kostka(l, mu) > 0) != dominates(l, mu))
            return "mu=" + to_string(mu) + ": positivity disagrees with dominance";
    if (kostka(l, cycle_type(n, 1, n)) != dimension(l))
        return std::string("K(lambda, 1^n) differs from the dimension");
    return std::nullopt;
}

inline std::optional<std::string> conjugation(const Partition& l, const CheckContext& ctx)
{
    if (!conjugation_check(l, ctx.q))
        return std::string("coefficient relation with the conjugate fails");
    return std::nullopt;
}

inline std::optional<std::string> bounds(const Partition& l, const CheckContext& ctx)
{
    const BoundReport r = verify_bounds(l, ctx.q, ctx.tol);
    for (const auto& c : r.checks)
        if (c.violated)
            return c.bound + " vs " + c.observed + ": bound " + std::to_string(c.value) + " observed " +
                   std::to_string(c.observed_max);
    return std::nullopt;
}

inline std::optional<std::string> burnside(int n, const CheckContext&)
{
    BigInt sum = 0;
    for (const Partition& l : partitions_of(n)) {
        const BigInt f = dimension(l);
        sum += f * f;
    }
    if (sum != factorial(n))
        return "sum of squared dimensions " + sum.str() + " != n!";
    return std::nullopt;
}

inline std::optional<std::string> hermite_roots(int n, const CheckContext& ctx)
{
    const RootReport r = classify(all_roots(hermite_prob(n)), 2, ctx.tol);
    for (std::size_t i = 0; i < r.roots.size(); ++i)
        if (r.tags[i].kind != RootKind::real)
            return "non-real root " + std::to_string(r.roots[i].real()) + "+" + std::to_string(r.roots[i].imag()) + "i";
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
        if (i > 0 && r.roots[i].real() - r.roots[i - 1].real() <= 1e-8)
            return std::string("repeated root");
        if (std::abs(r.roots[i].real() + r.roots[r.roots.size() - 1 - i].real()) > 1e-8)
            return std::string("roots not symmetric about 0");
    }
    const double eig = hermite_largest_root(n);
    if (std::abs(eig - hermite_largest_root_newton(n)) > 1e-10)
        return std::string("eigenvalue and Newton largest roots disagree");
    if (std::abs(eig - r.roots.back().real()) > 1e-8)
        return std::string("eigenvalue largest root disagrees with polynomial roots");
    if (eig > szego_bound(n))
        return std::string("largest root exceeds the Szego bound");
    return std::nullopt;
}

inline std::optional<std::string> q_roots(int n, const CheckContext& ctx)
{
    const RootReport r = classify(all_roots(q_poly(n, ctx.q)), ctx.q, ctx.tol);
    std::vector<double> positive;
    for (std::size_t i = 0; i < r.roots.size(); ++i)
        if (r.tags[i].kind == RootKind::real && r.roots[i].real() > ctx.tol)
            positive.push_back(r.roots[i].real());
    if (static_cast<int>(positive.size()) != n / ctx.q)
        return std::to_string(positive.size()) + " positive real roots, expected " + std::to_string(n / ctx.q);
    for (std::size_t i = 1; i < positive.size(); ++i)
        if (positive[i] - positive[i - 1] <= 1e-8)
            return std::string("positive real roots not simple");
    return std::nullopt;
}

} // namespace detail

inline const std::vector<CheckSpec>& all_checks()
{
    static const std::vector<CheckSpec> checks = {
        {"triple-equality", Scope::partitions, 0, detail::triple_equality, {}},
        {"q-equality", Scope::partitions, 0, detail::q_equality, {}},
        {"base-change", Scope::partitions, 0, detail::base_change_check, {}},
        {"kostka-identity", Scope::partitions, 0, detail::kostka_identity, {}},
        {"nonneg-bk", Scope::partitions, 0, detail::nonneg_bk, {}},
        {"pieri-route", Scope::partitions, 0, detail::pieri_route, {}},
        {"characters", Scope::partitions, 6, detail::characters_frobenius, {}},
        {"burnside", Scope::degrees, 0, {}, detail::burnside},
        {"kostka-dominance", Scope::partitions, 0, detail::kostka_dominance, {}},
        {"conjugation", Scope::partitions, 0, detail::conjugation, {}},
        {"bounds", Scope::partitions, 0, detail::bounds, {}},
        {"hermite-roots", Scope::degrees, 0, {}, detail::hermite_roots},
        {"q-roots", Scope::degrees, 0, {}, detail::q_roots},
    };
    return checks;
}

inline const CheckSpec* find_check(const std::string& name)
{
    for (const auto& c : all_checks())
        if (c.name == name)
            return &c;
    return nullptr;
}

/// Runs one check over 1 <= n <= n_max on `jobs` threads. Results are
/// collected per case and reported in canonical order regardless of which
/// thread produced them.
inline CheckResult run_check(const CheckSpec& spec, int n_max, const CheckContext& ctx, int jobs)
{
    const int top = spec.max_n > 0 ? std::min(n_max, spec.max_n) : n_max;
    std::vector<Partition> parts;
    std::vector<int> degrees;
    for (int n = 1; n <= top; ++n) {
        if (spec.scope == Scope::degrees)
            degrees.push_back(n);
        else
            for (auto& p : partitions_of(n))
                parts.push_back(std::move(p));
    }
    const std::size_t count = spec.scope == Scope::degrees ? degrees.size() : parts.size();
    std::vector<std::optional<std::string>> outcome(count);

    auto work = [&](std::size_t i) {
        try {
            outcome[i] = spec.scope == Scope::degrees ? spec.on_degree(degrees[i], ctx)
                                                      : spec.on_partition(parts[i], ctx);
        } catch (const std::exception& e) {
            outcome[i] = std::string("exception: ") + e.what();
        }
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            work(i);
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    CheckResult res{spec.name, spec.scope, count, {}};
    for (std::size_t i = 0; i < count; ++i)
        if (outcome[i]) {
            const std::string subject = spec.scope == Scope::degrees ? "n=" + std::to_string(degrees[i])
                                                                     : "lambda=" + to_string(parts[i]);
            res.failures.push_back({subject, *outcome[i]});
        }
    return res;
}

} // namespace wrhermite::cli

#endif
