#pragma once

// Vacillating tableaux: the n-vacillating and simplified flavours, their
// validators, the first-row strip between them, and dynamic-programming
// enumeration of simplified (and limiting) vacillating tableaux.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lvt/core.hpp"

namespace lvt {

enum class Flavor { n_vacillating, simplified };

/// Shape sequence λ^(0), λ^(1/2), λ^(1), ..., λ^(k) stored flat: index 2j is
/// λ^(j) and index 2j+1 is λ^(j+1/2). Simplified tableaux carry no n.
class VacillatingTableau {
public:
    VacillatingTableau() : steps_(1) {}

    static VacillatingTableau simplified(std::vector<Partition> steps)
    {
        return VacillatingTableau(std::move(steps), std::nullopt);
    }

    static VacillatingTableau n_vacillating(std::vector<Partition> steps, int n)
    {
        return VacillatingTableau(std::move(steps), n);
    }

    Flavor flavor() const noexcept { return n_ ? Flavor::n_vacillating : Flavor::simplified; }
    std::optional<int> n() const noexcept { return n_; }
    const std::vector<Partition>& steps() const noexcept { return steps_; }
    int k() const noexcept { return static_cast<int>(steps_.size() - 1) / 2; }

    /// λ^(j)
    const Partition& at(int j) const { return steps_.at(static_cast<std::size_t>(2 * j)); }
    /// λ^(j+1/2)
    const Partition& half_after(int j) const { return steps_.at(static_cast<std::size_t>(2 * j + 1)); }
    const Partition& final_shape() const { return steps_.back(); }

    friend bool operator==(const VacillatingTableau&, const VacillatingTableau&) = default;

private:
    VacillatingTableau(std::vector<Partition> steps, std::optional<int> n)
        : steps_(std::move(steps)), n_(n)
    {
        detail::require(steps_.size() % 2 == 1, "vacillating tableau must have odd length 2k+1");
    }

    std::vector<Partition> steps_;
    std::optional<int> n_;
};

/// Outcome of a validator; `violation` names the first failed condition.
struct Validation {
    bool ok = true;
    std::string violation;

    explicit operator bool() const noexcept { return ok; }

    static Validation fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

inline std::string step_name(std::size_t idx)
{
    return idx % 2 == 0 ? std::to_string(idx / 2) : std::to_string(idx / 2) + "+1/2";
}

inline bool removes_one_box(const Partition& from, const Partition& to)
{
    return added_cell(to, from).has_value();
}

inline bool adds_one_box(const Partition& from, const Partition& to)
{
    return added_cell(from, to).has_value();
}

} // namespace detail

inline Validation validate_n_vacillating(const VacillatingTableau& v, int n)
{
    using detail::step_name;
    const auto& s = v.steps();
    if (v.n() && *v.n() != n)
        return Validation::fail("tableau is tagged with n = " + std::to_string(*v.n()));
    if (n < 1)
        return Validation::fail("n must be positive");
    if (s[0] != Partition{n})
        return Validation::fail("(a) step 0 must be the one-row shape (n)");
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int want = i % 2 == 0 ? n : n - 1;
        if (s[i].size() != want)
            return Validation::fail("(a) step " + step_name(i) + " must have " + std::to_string(want) + " boxes");
    }
    for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
        if (!detail::removes_one_box(s[i], s[i + 1]))
            return Validation::fail("(b) step " + step_name(i + 1) + " must remove one box from step " + step_name(i));
        if (!detail::adds_one_box(s[i + 1], s[i + 2]))
            return Validation::fail("(c) step " + step_name(i + 2) + " must add one box to step " + step_name(i + 1));
    }
    return {};
}

namespace detail {

inline Validation validate_walk(const VacillatingTableau& v, bool strict_add)
{
    const auto& s = v.steps();
    if (!s[0].empty())
        return Validation::fail("step 0 must be the empty partition");
    for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
        if (s[i + 1] != s[i] && !removes_one_box(s[i], s[i + 1]))
            return Validation::fail("(a) step " + step_name(i + 1) + " must equal or delete one box from step " +
                                    step_name(i));
        if (strict_add) {
            if (!adds_one_box(s[i + 1], s[i + 2]))
                return Validation::fail("(b) step " + step_name(i + 2) + " must add one box to step " +
                                        step_name(i + 1));
        } else if (s[i + 2] != s[i + 1] && !adds_one_box(s[i + 1], s[i + 2])) {
            return Validation::fail("(b) step " + step_name(i + 2) + " must equal or add one box to step " +
                                    step_name(i + 1));
        }
    }
    return {};
}

} // namespace detail

inline Validation validate_simplified(const VacillatingTableau& v)
{
    return detail::validate_walk(v, false);
}

/// Simplified-valid and every full step adds a box: exactly the limiting
/// vacillating tableaux.
inline Validation validate_limiting(const VacillatingTableau& v)
{
    return detail::validate_walk(v, true);
}

inline VacillatingTableau simplify(const VacillatingTableau& v)
{
    detail::require(v.n().has_value(), "simplify: input must be an n-vacillating tableau");
    if (auto check = validate_n_vacillating(v, *v.n()); !check)
        throw DomainError("simplify: " + check.violation);
    std::vector<Partition> out;
    out.reserve(v.steps().size());
    for (const auto& p : v.steps())
        out.push_back(strip_first_row(p));
    return VacillatingTableau::simplified(std::move(out));
}

/// Prepends to every shape the first row that brings it to n boxes (integer
/// steps) or n-1 boxes (half steps).
inline VacillatingTableau unsimplify(const VacillatingTableau& v, int n)
{
    detail::require(v.flavor() == Flavor::simplified, "unsimplify: input must be simplified");
    if (auto check = validate_simplified(v); !check)
        throw DomainError("unsimplify: " + check.violation);
    detail::require(n >= 2 * v.k(), "unsimplify: n must be at least 2k");
    std::vector<Partition> out;
    out.reserve(v.steps().size());
    for (std::size_t i = 0; i < v.steps().size(); ++i) {
        const auto& mu = v.steps()[i];
        const int first = (i % 2 == 0 ? n : n - 1) - mu.size();
        detail::require(first >= std::max(mu.row(1), 1),
                        "unsimplify: n too small to keep the first row weakly dominant");
        std::vector<int> parts{first};
        parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
        out.emplace_back(std::move(parts));
    }
    return VacillatingTableau::n_vacillating(std::move(out), n);
}

/// (shape, count) pairs sorted lexicographically by shape.
struct ShapeCount {
    Partition shape;
    BigInt count;

    friend bool operator==(const ShapeCount&, const ShapeCount&) = default;
};
using CountTable = std::vector<ShapeCount>;

inline BigInt total(const CountTable& table)
{
    BigInt sum = 0;
    for (const auto& row : table)
        sum += row.count;
    return sum;
}

/// Which walks through Young's lattice are counted.
enum class WalkKind {
    simplified, // half steps delete or stay, full steps add or stay
    limiting,   // half steps delete or stay, full steps must add
};

struct EnumerationBounds {
    int count_k = 10;
    int list_k = 6;
};

namespace detail {

inline void check_bound(int k, int bound, const char* what)
{
    detail::require(k >= 0, std::string(what) + ": k must be nonnegative");
    if (k > bound)
        throw BoundError(std::string(what) + ": k = " + std::to_string(k) + " exceeds bound " +
                         std::to_string(bound));
}

inline std::vector<Partition> half_step_moves(const Partition& p)
{
    std::vector<Partition> out{p};
    for (auto c : p.corners())
        out.push_back(p.without(c));
    return out;
}

inline std::vector<Partition> full_step_moves(const Partition& p, WalkKind kind)
{
    std::vector<Partition> out;
    if (kind == WalkKind::simplified)
        out.push_back(p);
    for (auto c : p.addable_cells())
        out.push_back(p.with(c));
    return out;
}

} // namespace detail

/// Number of walks of length 2k from ∅, per end shape.
inline CountTable count_walks(int k, WalkKind kind, int bound = EnumerationBounds{}.count_k)
{
    detail::check_bound(k, bound, "count_walks");
    std::map<Partition, BigInt> layer{{Partition{}, BigInt(1)}};
    for (int j = 0; j < k; ++j) {
        std::map<Partition, BigInt> half;
        for (const auto& [p, c] : layer)
            for (auto& q : detail::half_step_moves(p))
                half[q] += c;
        std::map<Partition, BigInt> full;
        for (const auto& [p, c] : half)
            for (auto& q : detail::full_step_moves(p, kind))
                full[q] += c;
        layer = std::move(full);
    }
    CountTable out;
    for (auto& [p, c] : layer)
        out.push_back({p, c});
    return out;
}

inline BigInt count_walks(int k, WalkKind kind, const Partition& end, int bound = EnumerationBounds{}.count_k)
{
    for (const auto& row : count_walks(k, kind, bound))
        if (row.shape == end)
            return row.count;
    return 0;
}

/// Explicit walks of length 2k, optionally restricted to an end shape, in
/// lexicographic order of their shape sequences.
inline std::vector<VacillatingTableau> list_walks(int k, WalkKind kind, const std::optional<Partition>& end = {},
                                                  int bound = EnumerationBounds{}.list_k)
{
    detail::check_bound(k, bound, "list_walks");
    std::vector<VacillatingTableau> out;
    std::vector<Partition> path{Partition{}};
    auto rec = [&](auto&& self) -> void {
        const auto idx = path.size() - 1;
        if (idx == static_cast<std::size_t>(2 * k)) {
            if (!end || path.back() == *end)
                out.push_back(VacillatingTableau::simplified(path));
            return;
        }
        auto next = idx % 2 == 0 ? detail::half_step_moves(path.back())
                                 : detail::full_step_moves(path.back(), kind);
        std::sort(next.begin(), next.end());
        for (auto& q : next) {
            path.push_back(q);
            self(self);
            path.pop_back();
        }
    };
    rec(rec);
    return out;
}

inline CountTable enumerate_simplified(int k, int bound = EnumerationBounds{}.count_k)
{
    return count_walks(k, WalkKind::simplified, bound);
}

/// |SVT_k(end)|
inline BigInt enumerate_simplified(int k, const Partition& end, int bound = EnumerationBounds{}.count_k)
{
    return count_walks(k, WalkKind::simplified, end, bound);
}

inline CountTable enumerate_limiting(int k, int bound = EnumerationBounds{}.count_k)
{
    return count_walks(k, WalkKind::limiting, bound);
}

inline BigInt enumerate_limiting(int k, const Partition& end, int bound = EnumerationBounds{}.count_k)
{
    return count_walks(k, WalkKind::limiting, end, bound);
}

} // namespace lvt
