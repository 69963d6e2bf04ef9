#pragma once

// Command-line front end. `run` parses an argument list, executes one
// subcommand and returns its JSON payload; the `lvt` tool prints it.
//
// Exit codes: 0 ok, 1 domain error, 2 usage error (bad flags, malformed
// JSON, unreadable files, size guards).

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lvt/bijections.hpp"
#include "lvt/core.hpp"
#include "lvt/counting.hpp"
#include "lvt/di_map.hpp"
#include "lvt/json.hpp"
#include "lvt/tableau_ops.hpp"
#include "lvt/vacillating.hpp"

namespace lvt::cli {

using Json = nlohmann::ordered_json;

enum class Status { ok, error };

struct CommandResult {
    Status status = Status::ok;
    Json payload;                         // null on error
    std::vector<std::string> diagnostics; // error messages
    std::string text;                     // help / version output
    int exit_code = 0;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

/// Size guards; `--force` lifts them.
struct Limits {
    int count_k = 10; // counting enumerations and formulas
    int list_k = 6;   // explicit listings
    int sweep_n = 9;  // exhaustive DI sweeps over [n]^k

    /// Defaults overridden by LVT_MAX_COUNT_K, LVT_MAX_LIST_K, LVT_MAX_SWEEP_N.
    static Limits from_env()
    {
        Limits lim;
        auto read = [](const char* name, int& slot) {
            if (const char* v = std::getenv(name)) {
                try {
                    slot = std::stoi(v);
                } catch (const std::exception&) {
                    // unparsable override: keep the default
                }
            }
        };
        read("LVT_MAX_COUNT_K", lim.count_k);
        read("LVT_MAX_LIST_K", lim.list_k);
        read("LVT_MAX_SWEEP_N", lim.sweep_n);
        return lim;
    }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> out;
    std::string s = text;
    if (!s.empty() && s.front() == '[' && s.back() == ']')
        s = s.substr(1, s.size() - 2);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw UsageError(std::string(what) + ": empty list item in '" + text + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw UsageError(std::string(what) + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

inline Json read_json(const std::string& path)
{
    std::string data;
    if (path == "-") {
        data.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw UsageError("cannot read file '" + path + "'");
        data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return Json::parse(data);
}

inline void guard(int value, int limit, bool force, const std::string& what)
{
    if (!force && value > limit)
        throw BoundError(what + " = " + std::to_string(value) + " exceeds the guard " + std::to_string(limit) +
                         " (pass --force to override)");
}

} // namespace detail

inline CommandResult run(const std::vector<std::string>& args, const Limits& limits = Limits::from_env())
{
    CLI::App app{"Limiting vacillating tableaux: delete-insert dynamics, bijections and counts", "lvt"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "lvt 1.0.0");

    std::vector<std::pair<CLI::App*, std::function<Json()>>> commands;
    auto add = [&](const char* name, const char* desc) {
        auto* sub = app.add_subcommand(name, desc);
        commands.emplace_back(sub, nullptr);
        return sub;
    };
    auto bind = [&](std::function<Json()> fn) { commands.back().second = std::move(fn); };

    int n = 0, k = 0, margin = 4;
    std::string seq_text, input, vt_file, blocks_file, tableau_file, involution_file, shape_text, flavor;
    bool limiting = false, list = false, sweep = false, force = false, trace = false;

    auto seq = [&] { return detail::parse_int_list(seq_text, "--seq"); };

    {
        auto* s = add("di", "DI_n^k of a sequence: SYT, n-vacillating tableau and shape");
        s->add_option("--n", n, "alphabet size")->required();
        s->add_option("--seq", seq_text, "comma-separated sequence")->required();
        bind([&] { return Json(di_forward(seq(), n)); });
    }
    {
        auto* s = add("di-inverse", "recover the sequence from a DIImage");
        s->add_option("--n", n)->required();
        s->add_option("--input", input, "DIImage JSON file ('-' for stdin)")->required();
        bind([&] { return Json(di_inverse(detail::read_json(input).get<DIImage>(), n)); });
    }
    {
        auto* s = add("limit", "limiting vacillating tableau of a sequence");
        s->add_option("--seq", seq_text)->required();
        bind([&] { return Json(limiting_vt(seq()).steps()); });
    }
    {
        auto* s = add("stabilize-check", "check that simplified DI tableaux agree for m in (n+2k, n+2k+margin]");
        s->add_option("--seq", seq_text)->required();
        s->add_option("--margin", margin)->default_val(4);
        bind([&] {
            Json out;
            out["seq"] = seq();
            out["margin"] = margin;
            out["stable"] = check_stabilization(seq(), margin);
            return out;
        });
    }
    {
        auto* s = add("realize", "a sequence whose limiting vacillating tableau is the input");
        s->add_option("--vt", vt_file, "simplified vacillating tableau JSON")->required();
        bind([&] { return Json(realize_sequence(detail::read_json(vt_file).get<VacillatingTableau>())); });
    }
    {
        auto* s = add("enumerate", "count or list simplified / limiting vacillating tableaux");
        s->add_option("--k", k)->required();
        s->add_flag("--limiting", limiting, "full steps must add a box");
        s->add_option("--shape", shape_text, "end shape, e.g. 2,1 or [2,1]; '' for the empty shape");
        s->add_flag("--list", list, "list the tableaux instead of counting");
        s->add_flag("--force", force);
        bind([&, s]() -> Json {
            const auto kind = limiting ? WalkKind::limiting : WalkKind::simplified;
            std::optional<Partition> end;
            if (s->count("--shape"))
                end = Partition(detail::parse_int_list(shape_text, "--shape"));
            if (list) {
                detail::guard(k, limits.list_k, force, "listing k");
                Json out = Json::array();
                for (const auto& v : list_walks(k, kind, end, std::max(k, 0)))
                    out.push_back(v);
                return out;
            }
            detail::guard(k, limits.count_k, force, "enumeration k");
            auto table = count_walks(k, kind, std::max(k, 0));
            if (end) {
                BigInt c = 0;
                for (const auto& row : table)
                    if (row.shape == *end)
                        c = row.count;
                table = {{*end, c}};
            }
            return Json(table);
        });
    }
    {
        auto* s = add("verify-identity", "both sides of n^k = sum f^lambda m_k^lambda");
        s->add_option("--n", n)->required();
        s->add_option("--k", k)->required();
        s->add_flag("--sweep", sweep, "also bin DI images of all of [n]^k by shape");
        s->add_flag("--force", force);
        bind([&] {
            detail::guard(k, limits.count_k, force, "k");
            if (sweep)
                detail::guard(n, limits.sweep_n, force, "sweep n");
            return Json(verify_identity(n, k, sweep ? IdentityMethod::sweep : IdentityMethod::formula));
        });
    }
    {
        auto* s = add("count", "a_k (limiting tableaux) against c_k (A004211)");
        s->add_option("--k", k)->required();
        s->add_flag("--force", force);
        bind([&] {
            detail::guard(k, limits.count_k, force, "k");
            const auto a = a_k_formula(k);
            const auto c = c_k_formula(k);
            Json out;
            out["a_k"] = a;
            out["c_k"] = c;
            out["agree"] = a == c;
            return out;
        });
    }
    {
        auto* s = add("psi", "limiting / simplified vacillating tableau -> (set partition, partial tableau)");
        s->add_option("--vt", vt_file)->required();
        s->add_flag("--trace", trace, "include the (E_j, T_j) sequence");
        bind([&] {
            const auto v = detail::read_json(vt_file).get<VacillatingTableau>();
            Json out = psi(v);
            if (trace)
                out["trace"] = psi_trace(v);
            return out;
        });
    }
    {
        auto* s = add("psi-inverse", "(set partition, partial tableau) -> simplified vacillating tableau");
        s->add_option("--blocks", blocks_file)->required();
        s->add_option("--tableau", tableau_file)->required();
        s->add_option("--k", k)->required();
        bind([&] {
            return Json(psi_inverse(detail::read_json(blocks_file).get<SetPartition>(),
                                    detail::read_json(tableau_file).get<PartialTableau>(), k));
        });
    }
    {
        auto* s = add("phi", "(set partition, involution on its blocks) -> bi-colored set partition");
        s->add_option("--blocks", blocks_file)->required();
        s->add_option("--involution", involution_file, "cycles; omitted points are fixed")->required();
        bind([&] {
            const auto b = detail::read_json(blocks_file).get<SetPartition>();
            return Json(phi(b, involution_from_json(detail::read_json(involution_file), b.block_count())));
        });
    }
    {
        auto* s = add("phi-inverse", "bi-colored set partition -> (set partition, involution)");
        s->add_option("--input", input)->required();
        bind([&] { return Json(phi_inverse(detail::read_json(input).get<BiColoredSetPartition>())); });
    }
    {
        auto* s = add("validate", "check a vacillating tableau");
        s->add_option("--vt", vt_file)->required();
        s->add_option("--flavor", flavor, "n | simplified | limiting (default: from the file)")
            ->check(CLI::IsMember({"n", "simplified", "limiting"}));
        s->add_option("--n", n);
        bind([&, s] {
            const auto v = detail::read_json(vt_file).get<VacillatingTableau>();
            std::string fl = flavor.empty() ? (v.n() ? "n" : "simplified") : flavor;
            Validation res;
            if (fl == "n") {
                const int size = s->count("--n") ? n : v.n().value_or(0);
                if (size == 0)
                    throw UsageError("validate: --n is required for an untagged tableau");
                res = validate_n_vacillating(v, size);
            } else if (fl == "simplified") {
                res = validate_simplified(v);
            } else {
                res = validate_limiting(v);
            }
            Json out;
            out["valid"] = res.ok;
            out["flavor"] = fl;
            out["violation"] = res.ok ? Json(nullptr) : Json(res.violation);
            return out;
        });
    }

    CommandResult result;
    auto fail = [&](int code, std::string msg) {
        result.status = Status::error;
        result.payload = nullptr;
        result.diagnostics.push_back(std::move(msg));
        result.exit_code = code;
        return result;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
        for (auto& [sub, fn] : commands)
            if (sub->parsed())
                result.payload = fn();
    } catch (const CLI::CallForHelp&) {
        result.text = app.help();
        for (auto& [sub, fn] : commands)
            if (sub->parsed())
                result.text = sub->help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.text = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::CallForVersion&) {
        result.text = app.version();
        return result;
    } catch (const CLI::ParseError& e) {
        return fail(exit_usage, std::string("usage error: ") + e.what());
    } catch (const UsageError& e) {
        return fail(exit_usage, std::string("usage error: ") + e.what());
    } catch (const BoundError& e) {
        return fail(exit_usage, std::string("bound exceeded: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(exit_usage, std::string("malformed JSON: ") + e.what());
    } catch (const DomainError& e) {
        return fail(exit_domain, std::string("domain error: ") + e.what());
    } catch (const std::exception& e) {
        return fail(exit_domain, std::string("error: ") + e.what());
    }
    return result;
}

} // namespace lvt::cli
