#pragma once

// RSK row insertion and jeu de taquin deletion on partial tableaux, each
// paired with its exact inverse.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lvt/core.hpp"

namespace lvt {

struct Insertion {
    PartialTableau tableau;
    Cell cell; // box added by the insertion
};

struct Uninsertion {
    PartialTableau tableau;
    int value = 0; // entry bumped out of the first row
};

struct Deletion {
    PartialTableau tableau;
    Cell cell; // corner box that disappeared
};

/// x →RSK t
inline Insertion rsk_insert(const PartialTableau& t, int x)
{
    detail::require(x >= 1, "rsk_insert: entries must be positive");
    detail::require(!t.contains(x), "rsk_insert: duplicate entry " + std::to_string(x));

    auto rows = t.rows();
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            return {PartialTableau(std::move(rows)), Cell{static_cast<int>(r + 1), 1}};
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            const int col = static_cast<int>(row.size());
            return {PartialTableau(std::move(rows)), Cell{static_cast<int>(r + 1), col}};
        }
        std::swap(*it, x);
    }
}

/// Reverse bumping from a corner: undoes the insertion that created it.
inline Uninsertion rsk_uninsert(const PartialTableau& t, Cell corner)
{
    detail::require(t.shape().is_corner(corner), "rsk_uninsert: cell is not a corner box");

    auto rows = t.rows();
    auto r = static_cast<std::size_t>(corner.row - 1);
    int y = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty())
        rows.pop_back();
    while (r-- > 0) {
        auto& row = rows[r];
        // largest entry smaller than y; exists because the entry above y's column is smaller
        auto it = std::lower_bound(row.begin(), row.end(), y);
        --it;
        std::swap(*it, y);
    }
    return {PartialTableau(std::move(rows)), y};
}

/// x ←jdt t: delete x and slide the hole out to a corner.
inline Deletion jdt_delete(const PartialTableau& t, int x)
{
    auto pos = t.find(x);
    detail::require(pos.has_value(), "jdt_delete: entry " + std::to_string(x) + " not present");

    auto rows = t.rows();
    auto i = static_cast<std::size_t>(pos->row - 1);
    auto j = static_cast<std::size_t>(pos->col - 1);
    for (;;) {
        const bool has_below = i + 1 < rows.size() && j < rows[i + 1].size();
        const bool has_right = j + 1 < rows[i].size();
        if (!has_below && !has_right)
            break;
        if (has_below && (!has_right || rows[i + 1][j] < rows[i][j + 1])) {
            rows[i][j] = rows[i + 1][j];
            ++i;
        } else {
            rows[i][j] = rows[i][j + 1];
            ++j;
        }
    }
    rows[i].pop_back();
    if (rows[i].empty())
        rows.pop_back();
    return {PartialTableau(std::move(rows)), Cell{static_cast<int>(i + 1), static_cast<int>(j + 1)}};
}

/// Inverse of jdt_delete: open a hole at `corner`, slide it backwards past
/// every larger left/up neighbour, then deposit x.
inline PartialTableau jdt_undelete(const PartialTableau& t, int x, Cell corner)
{
    detail::require(x >= 1, "jdt_undelete: entries must be positive");
    detail::require(!t.contains(x), "jdt_undelete: entry " + std::to_string(x) + " collides with content");
    detail::require(t.shape().is_addable(corner), "jdt_undelete: cell is not an addable corner");

    auto rows = t.rows();
    auto i = static_cast<std::size_t>(corner.row - 1);
    auto j = static_cast<std::size_t>(corner.col - 1);
    if (i == rows.size())
        rows.emplace_back();
    rows[i].push_back(0);
    for (;;) {
        const int up = i > 0 ? rows[i - 1][j] : 0;
        const int left = j > 0 ? rows[i][j - 1] : 0;
        if (std::max(up, left) < x)
            break;
        if (up > left) {
            rows[i][j] = up;
            --i;
        } else {
            rows[i][j] = left;
            --j;
        }
    }
    rows[i][j] = x;
    return PartialTableau(std::move(rows));
}

} // namespace lvt
