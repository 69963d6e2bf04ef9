#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lvt/bijections.hpp"
#include "lvt/core.hpp"
#include "lvt/di_map.hpp"
#include "lvt/vacillating.hpp"

namespace lvt {

/// a_k = Σ_{j=1}^k S(k,j) Σ_{λ⊢j} f^λ, with a_0 = 1.
inline BigInt a_k_formula(int k)
{
    detail::require(k >= 0, "a_k_formula: k must be nonnegative");
    if (k == 0)
        return 1;
    BigInt sum = 0;
    for (int j = 1; j <= k; ++j) {
        BigInt syt = 0;
        for (const auto& lam : partitions_of(j))
            syt += hook_length_count(lam);
        sum += stirling2(k, j) * syt;
    }
    return sum;
}

/// c_k = Σ_{m=1}^k 2^(k-m) S(k,m), the k-th term of A004211 (c_0 = 1).
inline BigInt c_k_formula(int k)
{
    detail::require(k >= 0, "c_k_formula: k must be nonnegative");
    if (k == 0)
        return 1;
    BigInt sum = 0;
    for (int m = 1; m <= k; ++m)
        sum += (BigInt(1) << (k - m)) * stirling2(k, m);
    return sum;
}

/// Number of n-vacillating tableaux of shape lam and length 2k, counted by
/// walking Young's lattice directly at sizes n and n-1. Does not need n >= 2k.
inline BigInt count_n_vacillating(const Partition& lam, int n, int k)
{
    detail::require(n >= 1 && k >= 0, "count_n_vacillating: need n >= 1 and k >= 0");
    std::map<Partition, BigInt> layer{{Partition{n}, BigInt(1)}};
    for (int j = 0; j < k; ++j) {
        std::map<Partition, BigInt> half;
        for (const auto& [p, c] : layer)
            for (auto cell : p.corners())
                half[p.without(cell)] += c;
        std::map<Partition, BigInt> full;
        for (const auto& [p, c] : half)
            for (auto cell : p.addable_cells())
                full[p.with(cell)] += c;
        layer = std::move(full);
    }
    auto it = layer.find(lam);
    return it == layer.end() ? BigInt(0) : it->second;
}

/// m_k^λ. For n >= 2k this is |SVT_k(λ*)|; below that bound the simplified
/// correspondence fails and the n-vacillating walks are counted directly.
inline BigInt m_k_lambda(const Partition& lam, int n, int k)
{
    detail::require(lam.size() == n, "m_k_lambda: shape does not partition n");
    detail::require(k >= 0, "m_k_lambda: k must be nonnegative");
    if (n < 2 * k)
        return count_n_vacillating(lam, n, k);
    const auto star = strip_first_row(lam);
    if (star.size() > k)
        return 0;
    return enumerate_simplified(k, star, k);
}

enum class IdentityMethod { formula, sweep };

struct IdentityRow {
    Partition shape;
    BigInt f;
    BigInt m;
    BigInt product;
    std::optional<BigInt> swept; // DI images landing on this shape (sweep only)

    friend bool operator==(const IdentityRow&, const IdentityRow&) = default;
};

/// Both sides of n^k = Σ_{λ⊢n} f^λ m_k^λ, row by row.
struct IdentityReport {
    int n = 0;
    int k = 0;
    BigInt lhs;
    std::vector<IdentityRow> rows;
    BigInt rhs;
    bool holds = false;
    bool in_hypothesis = true; // n >= 2k
    IdentityMethod method = IdentityMethod::formula;

    /// Sweep only: every shape's DI bin equals f^λ m_k^λ.
    bool bins_match() const
    {
        for (const auto& r : rows)
            if (r.swept && *r.swept != r.product)
                return false;
        return true;
    }

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

inline IdentityReport verify_identity(int n, int k, IdentityMethod method = IdentityMethod::formula)
{
    detail::require(n >= 1, "verify_identity: n must be positive");
    detail::require(k >= 0, "verify_identity: k must be nonnegative");

    IdentityReport rep;
    rep.n = n;
    rep.k = k;
    rep.method = method;
    rep.in_hypothesis = n >= 2 * k;
    rep.lhs = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(k));

    std::map<Partition, BigInt> bins;
    if (method == IdentityMethod::sweep)
        for_each_sequence(n, k, [&](const IntegerSequence& seq) { ++bins[di_forward(seq, n).shape]; });

    rep.rhs = 0;
    for (auto& lam : partitions_of(n)) {
        IdentityRow row{lam, hook_length_count(lam), m_k_lambda(lam, n, k), 0, std::nullopt};
        row.product = row.f * row.m;
        if (method == IdentityMethod::sweep) {
            auto it = bins.find(lam);
            row.swept = it == bins.end() ? BigInt(0) : it->second;
        }
        rep.rhs += row.product;
        rep.rows.push_back(std::move(row));
    }
    rep.holds = rep.lhs == rep.rhs && rep.bins_match();
    return rep;
}

/// Σ_j S(k,j) I(j) = Σ_t S(k,t) 2^(k-t), and φ maps the pairs (B, σ)
/// injectively onto valid bi-colored partitions whose number is the right side.
inline bool theorem4_check(int k)
{
    detail::require(k >= 1, "theorem4_check: k must be positive");
    BigInt left = 0;
    for (int j = 1; j <= k; ++j)
        left += stirling2(k, j) * involution_count(j);
    const BigInt right = c_k_formula(k);
    if (left != right)
        return false;

    std::set<std::pair<std::vector<SetPartition::Block>, std::vector<Color>>> images;
    std::size_t pairs = 0;
    for (const auto& b : all_set_partitions(k)) {
        for (const auto& sigma : all_involutions(b.block_count())) {
            auto bc = phi(b, sigma);
            images.emplace(bc.partition().blocks(), bc.colors());
            ++pairs;
        }
    }
    return BigInt(pairs) == left && BigInt(images.size()) == right;
}

} // namespace lvt
