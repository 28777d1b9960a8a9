#ifndef WRHERMITE_PARTITION_HPP
#define WRHERMITE_PARTITION_HPP

#include "wrhermite/bigint.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrhermite {

/// Integer partition stored as its positive parts in weakly decreasing order.
/// Trailing zeros supplied on construction are dropped, so two partitions that
/// differ only by zero parts compare equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// 0-based access; returns 0 past the stored parts.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// Parts padded with zeros to length n (n >= length()).
    std::vector<int> padded(std::size_t n) const
    {
        std::vector<int> v(parts_);
        v.resize(std::max(n, v.size()), 0);
        return v;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Partition& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

/// (q^k 1^(n-qk)): k cycles of length q, the rest fixed points.
inline Partition cycle_type(int n, int q, int k)
{
    if (k < 0 || q < 1 || q * k > n)
        throw std::invalid_argument("cycle_type requires 0 <= q*k <= n");
    std::vector<int> parts(static_cast<std::size_t>(k), q);
    parts.resize(static_cast<std::size_t>(k + n - q * k), 1);
    return Partition(std::move(parts));
}

inline Partition conjugate(const Partition& lambda)
{
    std::vector<int> c(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda)
        for (int j = 0; j < part; ++j)
            ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

/// Strictly increasing vector (lambda_r, lambda_{r-1}+1, ..., lambda_1+r-1).
class DegreeVector {
public:
    explicit DegreeVector(std::vector<int> entries) : entries_(std::move(entries))
    {
        for (std::size_t i = 1; i < entries_.size(); ++i)
            if (entries_[i] <= entries_[i - 1])
                throw std::invalid_argument("degree vector entries must be strictly increasing");
        if (!entries_.empty() && entries_.front() < 0)
            throw std::invalid_argument("degree vector entries must be non-negative");
    }
    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_.at(i); }
    friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

private:
    std::vector<int> entries_;
};

inline DegreeVector degree_vector(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("degree vector undefined for empty partition");
    const std::size_t r = lambda.length();
    std::vector<int> v(r);
    for (std::size_t i = 0; i < r; ++i)
        v[i] = lambda[r - 1 - i] + static_cast<int>(i);
    return DegreeVector(std::move(v));
}

inline bool dominates(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        return false;
    int sl = 0, sm = 0;
    for (std::size_t i = 0; i < mu.length(); ++i) {
        sl += lambda[i];
        sm += mu[i];
        if (sl < sm)
            return false;
    }
    return true;
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

/// Partition together with the height of the border strip that was added to
/// (or removed from) a source partition to produce it.
struct HookAddition {
    Partition result;
    int height = 0;
    friend bool operator==(const HookAddition&, const HookAddition&) = default;
};

namespace detail {
// Beta numbers lambda_i + m - i (i = 1..m) of lambda padded to m rows,
// stored decreasing.
inline std::vector<int> beta_set(const Partition& lambda, std::size_t m)
{
    std::vector<int> b(m);
    for (std::size_t i = 0; i < m; ++i)
        b[i] = lambda[i] + static_cast<int>(m - 1 - i);
    return b;
}

inline Partition from_beta(std::vector<int> b)
{
    std::sort(b.begin(), b.end(), std::greater<>());
    const std::size_t m = b.size();
    std::vector<int> parts(m);
    for (std::size_t i = 0; i < m; ++i)
        parts[i] = b[i] - static_cast<int>(m - 1 - i);
    return Partition(std::move(parts));
}

// Moving one bead by +delta (delta may be negative) adds or removes a border
// strip of |delta| cells; the strip height is the number of beads jumped.
inline std::vector<HookAddition> shift_beads(const std::vector<int>& beta, int delta)
{
    std::vector<HookAddition> out;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] + delta;
        if (target < 0)
            continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        const int lo = std::min(beta[i], target), hi = std::max(beta[i], target);
        int height = 0;
        for (int b : beta)
            if (b > lo && b < hi)
                ++height;
        std::vector<int> moved(beta);
        moved[i] = target;
        out.push_back({from_beta(std::move(moved)), height});
    }
    std::sort(out.begin(), out.end(),
              [](const HookAddition& a, const HookAddition& b) { return a.result > b.result; });
    return out;
}
} // namespace detail

/// Every mu with at most max_rows rows such that mu / lambda is a border strip
/// of q cells, in reverse-lexicographic order of mu.
inline std::vector<HookAddition> q_hook_additions(const Partition& lambda, int q, int max_rows)
{
    if (q < 1)
        throw std::invalid_argument("hook size must be positive");
    if (max_rows < 1)
        throw std::invalid_argument("max_rows must be positive");
    if (lambda.length() > static_cast<std::size_t>(max_rows))
        return {};
    return detail::shift_beads(detail::beta_set(lambda, static_cast<std::size_t>(max_rows)), q);
}

/// Every nu such that lambda / nu is a border strip of q cells.
inline std::vector<HookAddition> q_hook_removals(const Partition& lambda, int q)
{
    if (q < 1)
        throw std::invalid_argument("hook size must be positive");
    return detail::shift_beads(detail::beta_set(lambda, lambda.length()), -q);
}

/// prod_{j>i} (v_j - v_i); 1 for a single entry.
inline BigInt vandermonde(const DegreeVector& v)
{
    BigInt d = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            d *= v[j] - v[i];
    return d;
}

/// H(lambda) = prod n_i! / Delta(n_lambda), the product of the hook lengths.
inline BigInt hook_product(const Partition& lambda)
{
    const DegreeVector v = degree_vector(lambda);
    BigInt num = 1;
    for (int e : v.entries())
        num *= factorial(e);
    return exact_div(num, vandermonde(v), "hook_product " + to_string(lambda));
}

} // namespace wrhermite

#endif
