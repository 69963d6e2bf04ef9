#pragma once

// nlohmann::json encodings of the library's value types. Partitions are
// integer arrays, tableaux arrays of rows, half steps of a vacillating
// tableau are positional. Counts that do not fit in 64 bits are written as
// decimal strings.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "lvt/bijections.hpp"
#include "lvt/core.hpp"
#include "lvt/counting.hpp"
#include "lvt/di_map.hpp"
#include "lvt/vacillating.hpp"

NLOHMANN_JSON_NAMESPACE_BEGIN

template <>
struct adl_serializer<lvt::BigInt> {
    template <typename J>
    static void to_json(J& j, const lvt::BigInt& x)
    {
        if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
            j = x.convert_to<std::int64_t>();
        else
            j = x.str();
    }

    template <typename J>
    static void from_json(const J& j, lvt::BigInt& x)
    {
        if (j.is_string())
            x = lvt::BigInt(j.template get<std::string>());
        else
            x = j.template get<std::int64_t>();
    }
};

NLOHMANN_JSON_NAMESPACE_END

namespace lvt {

template <typename J>
void to_json(J& j, const Cell& c)
{
    j = J{{"row", c.row}, {"col", c.col}};
}

template <typename J>
void from_json(const J& j, Cell& c)
{
    c.row = j.at("row").template get<int>();
    c.col = j.at("col").template get<int>();
}

template <typename J>
void to_json(J& j, const Partition& p)
{
    j = p.parts();
}

template <typename J>
void from_json(const J& j, Partition& p)
{
    p = Partition(j.template get<std::vector<int>>());
}

template <typename J>
void to_json(J& j, const PartialTableau& t)
{
    j = t.rows();
}

template <typename J>
void from_json(const J& j, PartialTableau& t)
{
    t = PartialTableau(j.template get<std::vector<PartialTableau::Row>>());
}

/// {"flavor": "simplified", "steps": [...]} or
/// {"flavor": "n-vacillating", "n": N, "steps": [...]}
template <typename J>
void to_json(J& j, const VacillatingTableau& v)
{
    j = J::object();
    if (v.n()) {
        j["flavor"] = "n-vacillating";
        j["n"] = *v.n();
    } else {
        j["flavor"] = "simplified";
    }
    j["steps"] = v.steps();
}

/// Also accepts a bare array of partitions, read as a simplified tableau.
template <typename J>
void from_json(const J& j, VacillatingTableau& v)
{
    if (j.is_array()) {
        v = VacillatingTableau::simplified(j.template get<std::vector<Partition>>());
        return;
    }
    auto steps = j.at("steps").template get<std::vector<Partition>>();
    const auto flavor = j.at("flavor").template get<std::string>();
    if (flavor == "simplified")
        v = VacillatingTableau::simplified(std::move(steps));
    else if (flavor == "n-vacillating")
        v = VacillatingTableau::n_vacillating(std::move(steps), j.at("n").template get<int>());
    else
        throw DomainError("unknown vacillating tableau flavor '" + flavor + "'");
}

template <typename J>
void to_json(J& j, const ShapeCount& sc)
{
    j = J{{"shape", sc.shape}, {"count", sc.count}};
}

template <typename J>
void from_json(const J& j, ShapeCount& sc)
{
    sc.shape = j.at("shape").template get<Partition>();
    sc.count = j.at("count").template get<BigInt>();
}

template <typename J>
void to_json(J& j, const DIImage& img)
{
    j = J::object();
    j["tableau"] = img.tableau;
    j["vt"] = img.vt;
    j["shape"] = img.shape;
}

template <typename J>
void from_json(const J& j, DIImage& img)
{
    img.tableau = j.at("tableau").template get<PartialTableau>();
    img.vt = j.at("vt").template get<VacillatingTableau>();
    img.shape = j.at("shape").template get<Partition>();
}

template <typename J>
void to_json(J& j, const SetPartition& b)
{
    j = b.blocks();
}

template <typename J>
void from_json(const J& j, SetPartition& b)
{
    b = SetPartition(j.template get<std::vector<SetPartition::Block>>());
}

template <typename J>
void to_json(J& j, const Involution& s)
{
    j = s.cycles();
}

/// The size is the largest point mentioned; pass it explicitly through
/// involution_from_json when trailing fixed points may be omitted.
template <typename J>
void from_json(const J& j, Involution& s)
{
    auto cycles = j.template get<std::vector<std::vector<int>>>();
    int size = 0;
    for (const auto& c : cycles)
        for (int x : c)
            size = std::max(size, x);
    s = Involution(size, cycles);
}

template <typename J>
Involution involution_from_json(const J& j, int size)
{
    return Involution(size, j.template get<std::vector<std::vector<int>>>());
}

template <typename J>
void to_json(J& j, const BiColoredSetPartition& bc)
{
    j = J::array();
    for (const auto& block : bc.partition().blocks()) {
        J arr = J::array();
        for (int x : block)
            arr.push_back(J{{"value", x}, {"color", bc.color(x) == Color::red ? "r" : "b"}});
        j.push_back(std::move(arr));
    }
}

template <typename J>
void from_json(const J& j, BiColoredSetPartition& bc)
{
    std::vector<SetPartition::Block> blocks;
    std::vector<std::pair<int, Color>> colored;
    for (const auto& arr : j) {
        auto& block = blocks.emplace_back();
        for (const auto& item : arr) {
            const int x = item.at("value").template get<int>();
            const auto c = item.at("color").template get<std::string>();
            if (c != "r" && c != "b")
                throw DomainError("color must be \"r\" or \"b\", got \"" + c + "\"");
            block.push_back(x);
            colored.emplace_back(x, c == "r" ? Color::red : Color::blue);
        }
    }
    SetPartition b(std::move(blocks));
    std::vector<Color> colors(static_cast<std::size_t>(b.k()));
    for (auto [x, c] : colored)
        colors[static_cast<std::size_t>(x - 1)] = c;
    bc = BiColoredSetPartition(std::move(b), std::move(colors));
}

template <typename J>
void to_json(J& j, const Edge& e)
{
    j = J::array({e.from, e.to});
}

template <typename J>
void from_json(const J& j, Edge& e)
{
    e.from = j.at(0).template get<int>();
    e.to = j.at(1).template get<int>();
}

template <typename J>
void to_json(J& j, const PsiState& s)
{
    j = J::object();
    j["edges"] = s.edges;
    j["tableau"] = s.tableau;
}

template <typename J>
void from_json(const J& j, PsiState& s)
{
    s.edges = j.at("edges").template get<EdgeSet>();
    s.tableau = j.at("tableau").template get<PartialTableau>();
}

template <typename J>
void to_json(J& j, const PsiImage& p)
{
    j = J::object();
    j["blocks"] = p.blocks;
    j["tableau"] = p.tableau;
}

template <typename J>
void from_json(const J& j, PsiImage& p)
{
    p.blocks = j.at("blocks").template get<SetPartition>();
    p.tableau = j.at("tableau").template get<PartialTableau>();
}

template <typename J>
void to_json(J& j, const PhiPreimage& p)
{
    j = J::object();
    j["blocks"] = p.blocks;
    j["involution"] = p.sigma;
}

template <typename J>
void from_json(const J& j, PhiPreimage& p)
{
    p.blocks = j.at("blocks").template get<SetPartition>();
    p.sigma = involution_from_json(j.at("involution"), p.blocks.block_count());
}

template <typename J>
void to_json(J& j, const IdentityReport& r)
{
    j = J::object();
    j["n"] = r.n;
    j["k"] = r.k;
    j["lhs"] = r.lhs;
    J rows = J::array();
    for (const auto& row : r.rows) {
        J o = J::object();
        o["shape"] = row.shape;
        o["f"] = row.f;
        o["m"] = row.m;
        o["product"] = row.product;
        if (row.swept)
            o["swept"] = *row.swept;
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    j["rhs"] = r.rhs;
    j["holds"] = r.holds;
    j["method"] = r.method == IdentityMethod::sweep ? "sweep" : "formula";
    j["in_hypothesis"] = r.in_hypothesis;
    if (r.method == IdentityMethod::sweep)
        j["bins_match"] = r.bins_match();
}

template <typename J>
void from_json(const J& j, IdentityReport& r)
{
    r.n = j.at("n").template get<int>();
    r.k = j.at("k").template get<int>();
    r.lhs = j.at("lhs").template get<BigInt>();
    r.rows.clear();
    for (const auto& o : j.at("rows")) {
        IdentityRow row{o.at("shape").template get<Partition>(), o.at("f").template get<BigInt>(),
                        o.at("m").template get<BigInt>(), o.at("product").template get<BigInt>(), std::nullopt};
        if (o.contains("swept"))
            row.swept = o.at("swept").template get<BigInt>();
        r.rows.push_back(std::move(row));
    }
    r.rhs = j.at("rhs").template get<BigInt>();
    r.holds = j.at("holds").template get<bool>();
    const auto method = j.at("method").template get<std::string>();
    detail::require(method == "sweep" || method == "formula", "unknown identity method '" + method + "'");
    r.method = method == "sweep" ? IdentityMethod::sweep : IdentityMethod::formula;
    r.in_hypothesis = j.value("in_hypothesis", r.n >= 2 * r.k);
}

} // namespace lvt
