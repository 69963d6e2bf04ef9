#pragma once

// The delete-insert bijection DI_n^k between [n]^k and pairs (SYT of shape λ,
// n-vacillating tableau of shape λ), its inverse, the limiting vacillating
// tableau of a sequence, and the realization of a limiting tableau by a
// sequence.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "lvt/core.hpp"
#include "lvt/tableau_ops.hpp"
#include "lvt/vacillating.hpp"

namespace lvt {

using IntegerSequence = std::vector<int>;

struct DIImage {
    StandardYoungTableau tableau;
    VacillatingTableau vt; // n-vacillating flavour
    Partition shape;

    friend bool operator==(const DIImage&, const DIImage&) = default;
};

namespace detail {

inline int max_entry(const IntegerSequence& seq)
{
    int m = 0;
    for (int x : seq)
        m = std::max(m, x);
    return m;
}

inline DIImage delete_insert(const IntegerSequence& seq, int n, std::vector<PartialTableau>* trace)
{
    detail::require(n >= 1, "di_forward: n must be positive");
    for (int x : seq)
        detail::require(x >= 1 && x <= n,
                        "di_forward: sequence entry " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");

    auto t = single_row(n);
    std::vector<Partition> shapes{t.shape()};
    if (trace)
        trace->push_back(t);
    for (int x : seq) {
        t = jdt_delete(t, x).tableau;
        shapes.push_back(t.shape());
        if (trace)
            trace->push_back(t);
        t = rsk_insert(t, x).tableau;
        shapes.push_back(t.shape());
        if (trace)
            trace->push_back(t);
    }
    auto lambda = t.shape();
    return {std::move(t), VacillatingTableau::n_vacillating(std::move(shapes), n), std::move(lambda)};
}

} // namespace detail

inline DIImage di_forward(const IntegerSequence& seq, int n)
{
    return detail::delete_insert(seq, n, nullptr);
}

/// T^(0), T^(1/2), ..., T^(k) of the delete-insert run.
inline std::vector<PartialTableau> di_trace(const IntegerSequence& seq, int n)
{
    std::vector<PartialTableau> trace;
    detail::delete_insert(seq, n, &trace);
    return trace;
}

/// Runs the delete-insert process backwards: at each integer step the box
/// added by the vacillating tableau is reverse-bumped out, which yields the
/// sequence entry, and that entry is slid back into the box the preceding
/// half step removed.
inline IntegerSequence di_inverse(const DIImage& img, int n)
{
    if (auto check = validate_n_vacillating(img.vt, n); !check)
        throw DomainError("di_inverse: " + check.violation);
    detail::require(img.shape == img.vt.final_shape(), "di_inverse: shape disagrees with the vacillating tableau");
    detail::require(img.tableau.shape() == img.shape, "di_inverse: tableau shape disagrees with the vacillating tableau");
    detail::require(img.tableau.is_standard(), "di_inverse: tableau is not standard");

    const int k = img.vt.k();
    IntegerSequence seq(static_cast<std::size_t>(k));
    auto t = img.tableau;
    for (int j = k - 1; j >= 0; --j) {
        const auto added = added_cell(img.vt.half_after(j), img.vt.at(j + 1));
        const auto removed = added_cell(img.vt.half_after(j), img.vt.at(j));
        auto [smaller, x] = rsk_uninsert(t, *added);
        t = jdt_undelete(smaller, x, *removed);
        seq[static_cast<std::size_t>(j)] = x;
    }
    detail::require(t == single_row(n), "di_inverse: pair is not in the image of the delete-insert map");
    return seq;
}

inline VacillatingTableau limiting_vt(const IntegerSequence& seq)
{
    for (int x : seq)
        detail::require(x >= 1, "limiting_vt: sequence entries must be positive");
    const int k = static_cast<int>(seq.size());
    const int m = std::max(detail::max_entry(seq), 1) + 2 * k + 1;
    return simplify(di_forward(seq, m).vt);
}

/// Executable stabilization check: the simplified tableau of DI_m^k(i) is the
/// same for every m in (n+2k, n+2k+margin], n = max(i).
inline bool check_stabilization(const IntegerSequence& seq, int margin)
{
    detail::require(margin >= 1, "check_stabilization: margin must be positive");
    const int k = static_cast<int>(seq.size());
    const int base = std::max(detail::max_entry(seq), 1) + 2 * k;
    const auto first = simplify(di_forward(seq, base + 1).vt);
    for (int m = base + 2; m <= base + margin; ++m)
        if (simplify(di_forward(seq, m).vt) != first)
            return false;
    return true;
}

/// During DI_m^k(i) with m > max(i)+2k, every entry above max(i)+k stays in
/// the first row of every intermediate tableau.
inline bool large_entries_stay_in_first_row(const IntegerSequence& seq, int m)
{
    const int k = static_cast<int>(seq.size());
    const int n = std::max(detail::max_entry(seq), 1);
    detail::require(m > n + 2 * k, "large_entries_stay_in_first_row: m must exceed max(i)+2k");
    for (const auto& t : di_trace(seq, m))
        for (std::size_t r = 1; r < t.rows().size(); ++r)
            for (int x : t.rows()[r])
                if (x > n + k)
                    return false;
    return true;
}

/// A sequence whose limiting vacillating tableau is v.
inline IntegerSequence realize_sequence(const VacillatingTableau& v)
{
    detail::require(v.flavor() == Flavor::simplified, "realize_sequence: input must be simplified");
    if (auto check = validate_limiting(v); !check)
        throw DomainError("realize_sequence: not a limiting vacillating tableau: " + check.violation);

    const int k = v.k();
    const int ell = v.final_shape().size();
    const int n = 2 * k + 1;
    auto padded = unsimplify(v, n);

    // F: first row 1..2k-ℓ, 2k+1..n; the ℓ entries 2k-ℓ+1..2k fill the lower
    // rows in reading order.
    std::vector<PartialTableau::Row> rows(1);
    for (int x = 1; x <= 2 * k - ell; ++x)
        rows[0].push_back(x);
    for (int x = 2 * k + 1; x <= n; ++x)
        rows[0].push_back(x);
    int next = 2 * k - ell + 1;
    for (int len : v.final_shape().parts()) {
        auto& row = rows.emplace_back();
        for (int c = 0; c < len; ++c)
            row.push_back(next++);
    }
    DIImage img{PartialTableau(std::move(rows)), padded, padded.final_shape()};
    return di_inverse(img, n);
}

/// Visits every sequence in [n]^k in lexicographic order.
inline void for_each_sequence(int n, int k, const std::function<void(const IntegerSequence&)>& visit)
{
    detail::require(n >= 1 && k >= 0, "for_each_sequence: need n >= 1 and k >= 0");
    IntegerSequence seq(static_cast<std::size_t>(k), 1);
    for (;;) {
        visit(seq);
        int pos = k - 1;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n)
            seq[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0)
            return;
        ++seq[static_cast<std::size_t>(pos)];
    }
}

} // namespace lvt
