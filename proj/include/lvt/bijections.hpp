#pragma once

// ψ: simplified vacillating tableaux ↔ (set partition B, partial tableau T
// with content(T) ⊆ max(B)); restricted to limiting tableaux it hits exactly
// the pairs with content(T) = max(B).
//
// φ: (set partition, involution on its blocks) ↔ bi-colored set partitions.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lvt/core.hpp"
#include "lvt/tableau_ops.hpp"
#include "lvt/vacillating.hpp"

namespace lvt {

/// Set partition of [k]; each block sorted, blocks ordered by minimum.
class SetPartition {
public:
    using Block = std::vector<int>;

    SetPartition() = default;

    explicit SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks))
    {
        std::vector<int> all;
        for (auto& b : blocks_) {
            detail::require(!b.empty(), "set partition blocks must be nonempty");
            std::sort(b.begin(), b.end());
            all.insert(all.end(), b.begin(), b.end());
        }
        std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            detail::require(all[i] == static_cast<int>(i + 1), "set partition blocks must be disjoint and cover [k]");
        k_ = static_cast<int>(all.size());
    }

    SetPartition(std::initializer_list<Block> blocks) : SetPartition(std::vector<Block>(blocks)) {}

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    int k() const noexcept { return k_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }

    /// 0-based index of the block holding x.
    int block_of(int x) const
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x))
                return static_cast<int>(i);
        throw DomainError("element " + std::to_string(x) + " is not in the set partition");
    }

    /// max(B), sorted.
    std::vector<int> maxima() const
    {
        std::vector<int> out;
        for (const auto& b : blocks_)
            out.push_back(b.back());
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    std::vector<Block> blocks_;
    int k_ = 0;
};

/// Involution of [j] stored as its image table.
class Involution {
public:
    Involution() = default;

    /// From disjoint 1- and 2-cycles; points of [j] not mentioned are fixed.
    Involution(int j, const std::vector<std::vector<int>>& cycles) : image_(static_cast<std::size_t>(j))
    {
        detail::require(j >= 0, "involution size must be nonnegative");
        std::iota(image_.begin(), image_.end(), 1);
        std::vector<bool> used(static_cast<std::size_t>(j) + 1, false);
        for (const auto& cyc : cycles) {
            detail::require(cyc.size() == 1 || cyc.size() == 2, "involution cycles must have length 1 or 2");
            for (int x : cyc) {
                detail::require(x >= 1 && x <= j, "involution cycle entry out of range");
                detail::require(!used[static_cast<std::size_t>(x)], "involution cycles must be disjoint");
                used[static_cast<std::size_t>(x)] = true;
            }
            if (cyc.size() == 2) {
                image_[static_cast<std::size_t>(cyc[0] - 1)] = cyc[1];
                image_[static_cast<std::size_t>(cyc[1] - 1)] = cyc[0];
            }
        }
    }

    static Involution identity(int j) { return Involution(j, {}); }

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int x) const { return image_.at(static_cast<std::size_t>(x - 1)); }

    /// Every cycle including fixed points, each written (a) or (a b) with
    /// a < b, ordered by a.
    std::vector<std::vector<int>> cycles() const
    {
        std::vector<std::vector<int>> out;
        for (int x = 1; x <= size(); ++x) {
            const int y = (*this)(x);
            if (y == x)
                out.push_back({x});
            else if (x < y)
                out.push_back({x, y});
        }
        return out;
    }

    friend bool operator==(const Involution&, const Involution&) = default;

private:
    std::vector<int> image_;
};

enum class Color { red, blue };

/// Set partition of [k] with every element colored; block minima are red.
class BiColoredSetPartition {
public:
    BiColoredSetPartition() = default;

    BiColoredSetPartition(SetPartition blocks, std::vector<Color> colors)
        : blocks_(std::move(blocks)), colors_(std::move(colors))
    {
        detail::require(static_cast<int>(colors_.size()) == blocks_.k(), "one color per element of [k] is required");
        for (const auto& b : blocks_.blocks())
            detail::require(color(b.front()) == Color::red,
                            "block minimum " + std::to_string(b.front()) + " must be red");
    }

    const SetPartition& partition() const noexcept { return blocks_; }
    const std::vector<Color>& colors() const noexcept { return colors_; }
    Color color(int x) const { return colors_.at(static_cast<std::size_t>(x - 1)); }

    friend bool operator==(const BiColoredSetPartition&, const BiColoredSetPartition&) = default;

private:
    SetPartition blocks_;
    std::vector<Color> colors_;
};

/// Ordered pair (m, j) with m < j.
struct Edge {
    int from = 0;
    int to = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};
using EdgeSet = std::vector<Edge>;

/// (E_i, T_i) at one index of the ψ recursion.
struct PsiState {
    EdgeSet edges;
    PartialTableau tableau;

    friend bool operator==(const PsiState&, const PsiState&) = default;
};

struct PsiImage {
    SetPartition blocks;
    PartialTableau tableau;

    friend bool operator==(const PsiImage&, const PsiImage&) = default;
};

namespace detail {

inline SetPartition components(int k, const EdgeSet& edges)
{
    std::vector<int> parent(static_cast<std::size_t>(k) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& e : edges)
        parent[static_cast<std::size_t>(find(e.to))] = find(e.from);
    std::vector<SetPartition::Block> by_root(static_cast<std::size_t>(k) + 1);
    for (int x = 1; x <= k; ++x)
        by_root[static_cast<std::size_t>(find(x))].push_back(x);
    std::vector<SetPartition::Block> blocks;
    for (auto& b : by_root)
        if (!b.empty())
            blocks.push_back(std::move(b));
    return SetPartition(std::move(blocks));
}

} // namespace detail

/// The (E_j, T_j) sequence at every index 0, 1/2, 1, ..., k.
inline std::vector<PsiState> psi_trace(const VacillatingTableau& v)
{
    detail::require(v.flavor() == Flavor::simplified, "psi: input must be simplified");
    if (auto check = validate_simplified(v); !check)
        throw DomainError("psi: " + check.violation);

    std::vector<PsiState> trace{PsiState{}};
    for (int j = 1; j <= v.k(); ++j) {
        PsiState state = trace.back();
        const auto& before = v.at(j - 1);
        const auto& half = v.half_after(j - 1);
        if (half != before) {
            auto removed = *added_cell(half, before);
            auto [smaller, m] = rsk_uninsert(state.tableau, removed);
            state.tableau = std::move(smaller);
            state.edges.push_back({m, j});
            std::sort(state.edges.begin(), state.edges.end());
        }
        trace.push_back(state);
        const auto& after = v.at(j);
        if (after != half) {
            auto added = *added_cell(half, after);
            auto rows = state.tableau.rows();
            if (added.row > static_cast<int>(rows.size()))
                rows.emplace_back();
            rows[static_cast<std::size_t>(added.row - 1)].push_back(j);
            state.tableau = PartialTableau(std::move(rows));
        }
        trace.push_back(std::move(state));
    }
    return trace;
}

inline PsiImage psi(const VacillatingTableau& v)
{
    auto trace = psi_trace(v);
    auto& last = trace.back();
    return {detail::components(v.k(), last.edges), std::move(last.tableau)};
}

/// Inverse of ψ. Each block b_1 < b_2 < ... < b_r contributes the edges
/// (b_1, b_2), (b_2, b_3), ...; walking j = k, ..., 1 backwards, the full
/// step removes j if it sits in the tableau and the half step re-inserts the
/// predecessor of j in its block.
inline VacillatingTableau psi_inverse(const SetPartition& b, const PartialTableau& t, int k)
{
    detail::require(b.k() == k, "psi_inverse: blocks must cover [k]");
    const auto maxima = b.maxima();
    for (int x : t.content())
        detail::require(std::binary_search(maxima.begin(), maxima.end(), x),
                        "psi_inverse: tableau entry " + std::to_string(x) + " is not a block maximum");

    std::vector<int> predecessor(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& block : b.blocks())
        for (std::size_t i = 1; i < block.size(); ++i)
            predecessor[static_cast<std::size_t>(block[i])] = block[i - 1];

    std::vector<Partition> steps(static_cast<std::size_t>(2 * k + 1));
    auto cur = t;
    steps.back() = cur.shape();
    for (int j = k; j >= 1; --j) {
        if (auto pos = cur.find(j)) {
            auto rows = cur.rows();
            auto& row = rows[static_cast<std::size_t>(pos->row - 1)];
            detail::require(row.back() == j, "psi_inverse: inconsistent tableau");
            row.pop_back();
            if (row.empty())
                rows.pop_back();
            cur = PartialTableau(std::move(rows));
        }
        steps[static_cast<std::size_t>(2 * j - 1)] = cur.shape();
        if (int m = predecessor[static_cast<std::size_t>(j)]; m != 0)
            cur = rsk_insert(cur, m).tableau;
        steps[static_cast<std::size_t>(2 * j - 2)] = cur.shape();
    }
    detail::require(cur.empty(), "psi_inverse: pair is not in the image of psi");
    return VacillatingTableau::simplified(std::move(steps));
}

inline BiColoredSetPartition phi(const SetPartition& b, const Involution& sigma)
{
    detail::require(sigma.size() == b.block_count(), "phi: involution size must equal the number of blocks");

    std::vector<SetPartition::Block> merged;
    for (const auto& cyc : sigma.cycles()) {
        auto block = b.blocks()[static_cast<std::size_t>(cyc[0] - 1)];
        if (cyc.size() == 2) {
            const auto& other = b.blocks()[static_cast<std::size_t>(cyc[1] - 1)];
            block.insert(block.end(), other.begin(), other.end());
        }
        merged.push_back(std::move(block));
    }
    SetPartition out(std::move(merged));

    std::vector<Color> colors(static_cast<std::size_t>(b.k()), Color::blue);
    for (const auto& block : out.blocks()) {
        const int home = b.block_of(block.front());
        for (int x : block)
            if (b.block_of(x) == home)
                colors[static_cast<std::size_t>(x - 1)] = Color::red;
    }
    return BiColoredSetPartition(std::move(out), std::move(colors));
}

struct PhiPreimage {
    SetPartition blocks;
    Involution sigma;

    friend bool operator==(const PhiPreimage&, const PhiPreimage&) = default;
};

inline PhiPreimage phi_inverse(const BiColoredSetPartition& bc)
{
    // (red part, blue part) of every block; blue may be empty.
    std::vector<std::pair<SetPartition::Block, SetPartition::Block>> halves;
    std::vector<SetPartition::Block> split;
    for (const auto& block : bc.partition().blocks()) {
        SetPartition::Block red, blue;
        for (int x : block)
            (bc.color(x) == Color::red ? red : blue).push_back(x);
        split.push_back(red);
        if (!blue.empty())
            split.push_back(blue);
        halves.emplace_back(std::move(red), std::move(blue));
    }
    SetPartition b(std::move(split));

    std::vector<std::vector<int>> cycles;
    for (const auto& [red, blue] : halves)
        if (!blue.empty())
            cycles.push_back({b.block_of(red.front()) + 1, b.block_of(blue.front()) + 1});
    return {b, Involution(b.block_count(), cycles)};
}

/// All set partitions of [k], generated from restricted growth strings in
/// lexicographic order.
inline std::vector<SetPartition> all_set_partitions(int k)
{
    detail::require(k >= 0, "all_set_partitions: k must be nonnegative");
    std::vector<SetPartition> out;
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int blocks) -> void {
        if (pos == k) {
            std::vector<SetPartition::Block> bl(static_cast<std::size_t>(blocks));
            for (int x = 0; x < k; ++x)
                bl[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])].push_back(x + 1);
            out.emplace_back(std::move(bl));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[static_cast<std::size_t>(pos)] = b;
            self(self, pos + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// All involutions of [j].
inline std::vector<Involution> all_involutions(int j)
{
    detail::require(j >= 0, "all_involutions: j must be nonnegative");
    std::vector<Involution> out;
    std::vector<std::vector<int>> cycles;
    std::vector<bool> used(static_cast<std::size_t>(j) + 1, false);
    auto rec = [&](auto&& self) -> void {
        int x = 1;
        while (x <= j && used[static_cast<std::size_t>(x)])
            ++x;
        if (x > j) {
            out.emplace_back(j, cycles);
            return;
        }
        used[static_cast<std::size_t>(x)] = true;
        self(self);
        for (int y = x + 1; y <= j; ++y) {
            if (used[static_cast<std::size_t>(y)])
                continue;
            used[static_cast<std::size_t>(y)] = true;
            cycles.push_back({x, y});
            self(self);
            cycles.pop_back();
            used[static_cast<std::size_t>(y)] = false;
        }
        used[static_cast<std::size_t>(x)] = false;
    };
    rec(rec);
    return out;
}

} // namespace lvt
