#pragma once

// Partitions, partial tableaux and the elementary counting primitives
// (hook lengths, involution numbers, Stirling numbers of the second kind).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lvt/error.hpp"

namespace lvt {

/// Exact integer used for every count.
using BigInt = boost::multiprecision::cpp_int;

/// Box position, 1-based: row 1 is the top row, column 1 the leftmost.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition stored as its nonzero parts in weakly decreasing order.
/// The empty partition is the empty list.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            detail::require(parts_[i] >= 1, "partition parts must be positive");
            detail::require(i == 0 || parts_[i - 1] >= parts_[i],
                            "partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// |λ|
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Number of nonzero rows.
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    bool empty() const noexcept { return parts_.empty(); }

    /// Length of row r (1-based); 0 beyond the last row.
    int row(int r) const noexcept
    {
        return (r >= 1 && r <= length()) ? parts_[static_cast<std::size_t>(r - 1)] : 0;
    }

    bool is_corner(Cell c) const noexcept
    {
        return c.row >= 1 && c.row <= length() && c.col == row(c.row) && row(c.row + 1) < c.col;
    }

    bool is_addable(Cell c) const noexcept
    {
        return c.row >= 1 && c.row <= length() + 1 && c.col == row(c.row) + 1 &&
               (c.row == 1 || row(c.row - 1) >= c.col);
    }

    /// Removable boxes, top row first.
    std::vector<Cell> corners() const
    {
        std::vector<Cell> out;
        for (int r = 1; r <= length(); ++r)
            if (row(r + 1) < row(r))
                out.push_back({r, row(r)});
        return out;
    }

    /// Boxes whose addition yields a partition, top row first.
    std::vector<Cell> addable_cells() const
    {
        std::vector<Cell> out;
        for (int r = 1; r <= length() + 1; ++r)
            if (r == 1 || row(r - 1) > row(r))
                out.push_back({r, row(r) + 1});
        return out;
    }

    Partition without(Cell c) const
    {
        detail::require(is_corner(c), "cell is not a corner of the partition");
        auto p = parts_;
        if (--p[static_cast<std::size_t>(c.row - 1)] == 0)
            p.pop_back();
        return Partition(std::move(p));
    }

    Partition with(Cell c) const
    {
        detail::require(is_addable(c), "cell is not addable to the partition");
        auto p = parts_;
        if (c.row > length())
            p.push_back(1);
        else
            ++p[static_cast<std::size_t>(c.row - 1)];
        return Partition(std::move(p));
    }

    /// Diagram containment λ ⊇ μ.
    bool contains(const Partition& mu) const noexcept
    {
        if (mu.length() > length())
            return false;
        for (int r = 1; r <= mu.length(); ++r)
            if (mu.row(r) > row(r))
                return false;
        return true;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// If `outer` is `inner` plus exactly one box, that box.
inline std::optional<Cell> added_cell(const Partition& inner, const Partition& outer)
{
    if (outer.size() != inner.size() + 1 || !outer.contains(inner))
        return std::nullopt;
    for (int r = 1; r <= outer.length(); ++r)
        if (outer.row(r) != inner.row(r))
            return Cell{r, outer.row(r)};
    return std::nullopt;
}

/// λ* = (λ_2, ..., λ_t)
inline Partition strip_first_row(const Partition& p)
{
    if (p.empty())
        return {};
    return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

/// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n)
{
    detail::require(n >= 0, "partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Rows of distinct integers increasing along rows and down columns,
/// with weakly decreasing row lengths.
class PartialTableau {
public:
    using Row = std::vector<int>;

    PartialTableau() = default;

    explicit PartialTableau(std::vector<Row> rows) : rows_(std::move(rows))
    {
        if (auto why = violation(rows_))
            throw DomainError("invalid partial tableau: " + *why);
    }

    PartialTableau(std::initializer_list<Row> rows) : PartialTableau(std::vector<Row>(rows)) {}

    /// First broken invariant of a candidate row list, if any.
    static std::optional<std::string> violation(const std::vector<Row>& rows)
    {
        std::vector<int> seen;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto& row = rows[r];
            if (row.empty())
                return "row " + std::to_string(r + 1) + " is empty";
            if (r > 0 && rows[r - 1].size() < row.size())
                return "row lengths must weakly decrease";
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (row[c] < 1)
                    return "entries must be positive";
                if (c > 0 && row[c - 1] >= row[c])
                    return "row " + std::to_string(r + 1) + " is not increasing";
                if (r > 0 && rows[r - 1][c] >= row[c])
                    return "column " + std::to_string(c + 1) + " is not increasing";
                seen.push_back(row[c]);
            }
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            return "entries must be distinct";
        return std::nullopt;
    }

    const std::vector<Row>& rows() const noexcept { return rows_; }

    Partition shape() const
    {
        std::vector<int> parts;
        parts.reserve(rows_.size());
        for (const auto& row : rows_)
            parts.push_back(static_cast<int>(row.size()));
        return Partition(std::move(parts));
    }

    int size() const noexcept
    {
        int n = 0;
        for (const auto& row : rows_)
            n += static_cast<int>(row.size());
        return n;
    }

    bool empty() const noexcept { return rows_.empty(); }

    /// Sorted entries.
    std::vector<int> content() const
    {
        std::vector<int> out;
        for (const auto& row : rows_)
            out.insert(out.end(), row.begin(), row.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    std::optional<Cell> find(int x) const noexcept
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto it = std::lower_bound(rows_[r].begin(), rows_[r].end(), x);
            if (it != rows_[r].end() && *it == x)
                return Cell{static_cast<int>(r + 1), static_cast<int>(it - rows_[r].begin() + 1)};
        }
        return std::nullopt;
    }

    bool contains(int x) const noexcept { return find(x).has_value(); }

    int at(Cell c) const
    {
        return rows_.at(static_cast<std::size_t>(c.row - 1)).at(static_cast<std::size_t>(c.col - 1));
    }

    /// Content is exactly {1, ..., size()}.
    bool is_standard() const
    {
        auto c = content();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != static_cast<int>(i + 1))
                return false;
        return true;
    }

    friend bool operator==(const PartialTableau&, const PartialTableau&) = default;

private:
    std::vector<Row> rows_;
};

using StandardYoungTableau = PartialTableau;

inline Partition shape(const PartialTableau& t) { return t.shape(); }

/// The one-row SYT 1 2 ... n.
inline PartialTableau single_row(int n)
{
    if (n <= 0)
        return {};
    std::vector<int> row(static_cast<std::size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    return PartialTableau({row});
}

inline BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/// f^λ by the hook-length formula.
inline BigInt hook_length_count(const Partition& p)
{
    BigInt hooks = 1;
    for (int r = 1; r <= p.length(); ++r) {
        for (int c = 1; c <= p.row(r); ++c) {
            int leg = 0;
            while (p.row(r + leg + 1) >= c)
                ++leg;
            hooks *= (p.row(r) - c) + leg + 1;
        }
    }
    return factorial(p.size()) / hooks;
}

/// All standard Young tableaux of shape p, by backtracking: the value v is
/// placed in each available outer box in turn, top row first.
inline std::vector<StandardYoungTableau> enumerate_syt(const Partition& p, int max_size = 10)
{
    if (p.size() > max_size)
        throw BoundError("enumerate_syt: |shape| = " + std::to_string(p.size()) +
                         " exceeds bound " + std::to_string(max_size));
    std::vector<StandardYoungTableau> out;
    std::vector<PartialTableau::Row> rows(static_cast<std::size_t>(p.length()));
    const int n = p.size();
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.emplace_back(rows);
            return;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto len = rows[r].size();
            if (static_cast<int>(len) >= p.parts()[r])
                continue;
            if (r > 0 && rows[r - 1].size() <= len)
                continue;
            rows[r].push_back(v);
            self(self, v + 1);
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Number of involutions in S_j: I(j) = I(j-1) + (j-1) I(j-2).
inline BigInt involution_count(int j)
{
    detail::require(j >= 0, "involution_count: j must be nonnegative");
    BigInt prev = 1, cur = 1;
    for (int i = 2; i <= j; ++i) {
        BigInt next = cur + BigInt(i - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Stirling number of the second kind S(k, m).
inline BigInt stirling2(int k, int m)
{
    detail::require(k >= 0 && m >= 0, "stirling2: arguments must be nonnegative");
    if (m > k)
        return 0;
    // row[m] holds S(i, m) for the current i.
    std::vector<BigInt> row(static_cast<std::size_t>(m + 1), 0);
    row[0] = 1;
    for (int i = 1; i <= k; ++i) {
        for (int t = std::min(i, m); t >= 1; --t)
            row[static_cast<std::size_t>(t)] =
                BigInt(t) * row[static_cast<std::size_t>(t)] + row[static_cast<std::size_t>(t - 1)];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(m)];
}

} // namespace lvt
