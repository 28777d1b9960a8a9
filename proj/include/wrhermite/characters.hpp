#ifndef WRHERMITE_CHARACTERS_HPP
#define WRHERMITE_CHARACTERS_HPP

#include "wrhermite/bigint.hpp"
#include "wrhermite/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wrhermite {

/// Conjugacy class of S_n, identified by its cycle type.
struct ConjugacyClass {
    Partition cycle_type;
    int order() const { return cycle_type.weight(); }
};

/// Integer combination of Schur functions; zero coefficients are never stored.
class SchurCombination {
public:
    using Terms = std::map<Partition, BigInt>;

    void add(const Partition& p, const BigInt& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    BigInt coefficient(const Partition& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

private:
    Terms terms_;
};

namespace detail {

class CharacterRecursion {
public:
    explicit CharacterRecursion(std::vector<int> cycles) : cycles_(std::move(cycles)) {}

    BigInt eval(const Partition& shape, std::size_t idx)
    {
        if (idx == cycles_.size())
            return shape.empty() ? BigInt(1) : BigInt(0);
        const auto key = std::make_pair(shape, idx);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        BigInt sum = 0;
        for (const auto& [rest, height] : q_hook_removals(shape, cycles_[idx])) {
            BigInt v = eval(rest, idx + 1);
            if (height % 2)
                sum -= v;
            else
                sum += v;
        }
        memo_.emplace(key, sum);
        return sum;
    }

private:
    std::vector<int> cycles_;
    std::map<std::pair<Partition, std::size_t>, BigInt> memo_;
};

} // namespace detail

/// chi^lambda(mu) by the Murnaghan-Nakayama border-strip recursion, stripping
/// the longest cycles first.
inline BigInt character(const Partition& lambda, const ConjugacyClass& mu)
{
    if (lambda.weight() != mu.order())
        throw std::invalid_argument("character arguments of unequal weight");
    detail::CharacterRecursion rec(mu.cycle_type.parts());
    return rec.eval(lambda, 0);
}

inline BigInt character(const Partition& lambda, const Partition& cycle_type)
{
    return character(lambda, ConjugacyClass{cycle_type});
}

/// chi^lambda(mu) read off as the coefficient of x^(lambda + delta) in
/// p_mu(x_1..x_n) * W_0(x_1..x_n); both factors are expanded in full.
/// Exponential in n; test oracle only.
inline BigInt character_frobenius_oracle(const Partition& lambda, const ConjugacyClass& mu)
{
    const int n = lambda.weight();
    if (n != mu.order())
        throw std::invalid_argument("character arguments of unequal weight");
    if (n > 7)
        throw std::invalid_argument("oracle restricted to small n");
    if (n == 0)
        return 1;

    using Exponent = std::vector<int>;
    using Sparse = std::map<Exponent, BigInt>;
    const auto nn = static_cast<std::size_t>(n);

    Sparse power_sum{{Exponent(nn, 0), BigInt(1)}};
    for (int m : mu.cycle_type) {
        Sparse next;
        for (const auto& [e, c] : power_sum)
            for (std::size_t v = 0; v < nn; ++v) {
                Exponent f = e;
                f[v] += m;
                next[f] += c;
            }
        power_sum = std::move(next);
    }

    // W_0 = det[x_i^(n-j)] = sum over permutations of sign * prod x_i^(n-1-perm[i]).
    Sparse vandermonde;
    std::vector<int> perm(nn);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t j = i + 1; j < nn; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Exponent e(nn);
        for (std::size_t i = 0; i < nn; ++i)
            e[i] = n - 1 - perm[i];
        vandermonde[e] += (inversions % 2) ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::vector<int> padded = lambda.padded(nn);
    Exponent target(nn);
    for (std::size_t i = 0; i < nn; ++i)
        target[i] = padded[i] + n - 1 - static_cast<int>(i);

    // Only one coefficient of the product is needed: pair each W_0 term with
    // the p_mu monomial that completes it to the target exponent.
    BigInt coefficient = 0;
    for (const auto& [e2, c2] : vandermonde) {
        Exponent e1(nn);
        bool valid = true;
        for (std::size_t i = 0; i < nn && valid; ++i) {
            e1[i] = target[i] - e2[i];
            valid = e1[i] >= 0;
        }
        if (!valid)
            continue;
        if (auto it = power_sum.find(e1); it != power_sum.end())
            coefficient += it->second * c2;
    }
    return coefficient;
}

inline BigInt character_frobenius_oracle(const Partition& lambda, const Partition& cycle_type)
{
    return character_frobenius_oracle(lambda, ConjugacyClass{cycle_type});
}

namespace detail {

// Places the next value of the content as a horizontal strip on top of
// `shape`, row by row; `prev` holds the row lengths before this value.
// Subtrees are memoized on (value, shape filled so far), so the count never
// walks individual tableaux.
class TableauCounter {
public:
    TableauCounter(const Partition& shape, const Partition& content)
        : target_(shape.parts()), content_(content.parts()), rows_(target_.size(), 0)
    {
    }

    BigInt count() { return place_value(0); }

private:
    BigInt place_value(std::size_t value)
    {
        if (value == content_.size())
            return rows_ == target_ ? 1 : 0;
        auto key = std::make_pair(value, rows_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        const std::vector<int> before = rows_;
        BigInt total = fill_row(value, 0, content_[value], before);
        rows_ = before;
        memo_.emplace(std::move(key), total);
        return total;
    }

    BigInt fill_row(std::size_t value, std::size_t row, int left, const std::vector<int>& before)
    {
        if (left == 0)
            return place_value(value + 1);
        if (row == rows_.size())
            return 0;
        // Column strictness: a cell in this row may only sit below a cell
        // that held a smaller value, i.e. within the previous row's old length.
        const int cap = row == 0 ? target_[row] : std::min(target_[row], before[row - 1]);
        const int room = cap - before[row];
        BigInt total = 0;
        for (int add = std::min(room, left); add >= 0; --add) {
            rows_[row] = before[row] + add;
            total += fill_row(value, row + 1, left - add, before);
        }
        rows_[row] = before[row];
        return total;
    }

    std::vector<int> target_;
    std::vector<int> content_;
    std::vector<int> rows_;
    std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo_;
};

} // namespace detail

/// Number of semistandard tableaux of shape lambda and content mu, counted by
/// backtracking over fillings; 0 when the weights differ.
inline BigInt kostka(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        return 0;
    detail::TableauCounter counter(lambda, mu);
    return counter.count();
}

/// F_lambda = |lambda|! / H(lambda).
inline BigInt dimension(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("dimension requires a nonempty partition");
    return exact_div(factorial(lambda.weight()), hook_product(lambda),
                     "dimension " + to_string(lambda));
}

namespace detail {
inline void check_qk(const Partition& lambda, int q, int k)
{
    if (q < 2)
        throw std::invalid_argument("stride q must be at least 2");
    if (k < 0 || q * k > lambda.weight())
        throw std::invalid_argument("k exceeds ⌊n/q⌋");
}
} // namespace detail

/// S^lambda_{q,k} = sum_j (-1)^j C(k,j) chi^lambda(q^j 1^(n-qj)).
inline BigInt s_qk_sum(const Partition& lambda, int q, int k)
{
    detail::check_qk(lambda, q, k);
    const int n = lambda.weight();
    BigInt sum = 0;
    for (int j = 0; j <= k; ++j) {
        BigInt term = binomial(k, j) * character(lambda, cycle_type(n, q, j));
        if (j % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

/// p_1 * s: add one box in every admissible way, keeping at most max_rows rows.
inline SchurCombination pieri_box(const SchurCombination& s, int max_rows)
{
    SchurCombination out;
    for (const auto& [rho, c] : s.terms())
        for (const auto& add : q_hook_additions(rho, 1, max_rows))
            out.add(add.result, c);
    return out;
}

/// (p_1^q - p_q) * s. The p_1^q part counts labelled-square additions; each
/// q-hook addition then shifts that count by +1 (even number of rows) or -1
/// (odd number of rows).
inline SchurCombination power_difference_step(const SchurCombination& s, int q, int max_rows)
{
    SchurCombination out;
    for (const auto& [rho, c] : s.terms()) {
        SchurCombination single;
        single.add(rho, 1);
        for (int i = 0; i < q; ++i)
            single = pieri_box(single, max_rows);
        for (const auto& [gamma, alpha] : single.terms())
            out.add(gamma, c * alpha);
        for (const auto& hook : q_hook_additions(rho, q, max_rows)) {
            const int rows_spanned = hook.height + 1;
            out.add(hook.result, rows_spanned % 2 == 0 ? c : BigInt(-c));
        }
    }
    return out;
}

/// S^lambda_{q,k} as the coefficient of s_lambda in p_1^(n-qk) (p_1^q - p_q)^k,
/// expanded in n variables.
inline BigInt s_qk_via_pieri(const Partition& lambda, int q, int k)
{
    detail::check_qk(lambda, q, k);
    const int n = lambda.weight();
    const int rows = std::max(n, 1);
    SchurCombination s;
    s.add(Partition{}, 1);
    for (int i = 0; i < n - q * k; ++i)
        s = pieri_box(s, rows);
    for (int i = 0; i < k; ++i)
        s = power_difference_step(s, q, rows);
    return s.coefficient(lambda);
}

} // namespace wrhermite

#endif
