#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "lvt/cli.hpp"
#include "lvt/json.hpp"
#include "lvt/lvt.hpp"

using lvt::cli::Json;
using lvt::cli::Status;

namespace {

template <typename T>
T roundtrip(const T& x)
{
    return Json(x).get<T>();
}

class TempFiles {
public:
    TempFiles()
        : dir_(std::filesystem::temp_directory_path() /
               ("lvt_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this))))
    {
        std::filesystem::create_directories(dir_);
    }
    ~TempFiles() { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& body)
    {
        auto p = dir_ / name;
        std::ofstream(p) << body;
        return p.string();
    }

private:
    std::filesystem::path dir_;
};

lvt::cli::CommandResult run(std::vector<std::string> args)
{
    return lvt::cli::run(args, lvt::cli::Limits{});
}

} // namespace

TEST(Json, BigIntAsNumberOrString)
{
    EXPECT_EQ(Json(lvt::BigInt(257)).dump(), "257");
    const lvt::BigInt big = lvt::involution_count(40);
    const Json j = big;
    EXPECT_TRUE(j.is_string());
    EXPECT_EQ(j.get<lvt::BigInt>(), big);
}

TEST(Json, Roundtrips)
{
    EXPECT_EQ(roundtrip(lvt::Partition{3, 1}), (lvt::Partition{3, 1}));
    EXPECT_EQ(roundtrip(lvt::PartialTableau{{1, 3}, {2}}), (lvt::PartialTableau{{1, 3}, {2}}));
    auto img = lvt::di_forward({4, 4}, 6);
    EXPECT_EQ(roundtrip(img), img);
    auto simp = lvt::limiting_vt({2, 1});
    EXPECT_EQ(roundtrip(simp), simp);
    EXPECT_EQ(roundtrip(img.vt), img.vt);
    lvt::SetPartition b{{1, 3, 4}, {2}};
    EXPECT_EQ(roundtrip(b), b);
    auto bc = lvt::phi({{1}, {2}, {3}}, lvt::Involution(3, {{1, 2}}));
    EXPECT_EQ(roundtrip(bc), bc);
    auto pre = lvt::phi_inverse(bc);
    EXPECT_EQ(roundtrip(pre), pre);
    auto state = lvt::psi_trace(lvt::VacillatingTableau::simplified({{}, {}, {1}, {}, {1}})).back();
    EXPECT_EQ(roundtrip(state), state);
}

TEST(Json, Shapes)
{
    EXPECT_EQ(Json(lvt::limiting_vt({4, 4})).dump(), R"({"flavor":"simplified","steps":[[],[],[1],[1],[2]]})");
    EXPECT_EQ(Json(lvt::Involution(3, {{1, 3}})).dump(), "[[1,3],[2]]");
    EXPECT_EQ(Json(lvt::phi({{1}, {2}}, lvt::Involution(2, {{1, 2}}))).dump(),
              R"([[{"value":1,"color":"r"},{"value":2,"color":"b"}]])");
}

TEST(Json, BareArrayReadsAsSimplified)
{
    auto v = Json::parse("[[],[],[1]]").get<lvt::VacillatingTableau>();
    EXPECT_EQ(v, lvt::VacillatingTableau::simplified({{}, {}, {1}}));
}

TEST(Cli, Di)
{
    auto r = run({"di", "--n", "5", "--seq", "4,4"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.payload["tableau"].dump(), "[[1,2,3,4],[5]]");
    EXPECT_EQ(r.payload["shape"].dump(), "[4,1]");
    EXPECT_EQ(r.payload["vt"]["steps"].dump(), "[[5],[4],[4,1],[3,1],[4,1]]");
}

TEST(Cli, DiInverseRoundtrip)
{
    TempFiles tmp;
    auto img = run({"di", "--n", "6", "--seq", "3,1,6"});
    ASSERT_EQ(img.exit_code, 0);
    auto path = tmp.write("img.json", img.payload.dump());
    auto back = run({"di-inverse", "--n", "6", "--input", path});
    ASSERT_EQ(back.exit_code, 0);
    EXPECT_EQ(back.payload.dump(), "[3,1,6]");
}

TEST(Cli, Limit)
{
    EXPECT_EQ(run({"limit", "--seq", "4,4"}).payload.dump(), "[[],[],[1],[1],[2]]");
    EXPECT_EQ(run({"limit", "--seq", "1,2"}).payload.dump(), "[[],[],[1],[],[1]]");
    EXPECT_EQ(run({"limit", "--seq", ""}).payload.dump(), "[[]]");
}

TEST(Cli, StabilizeCheck)
{
    auto r = run({"stabilize-check", "--seq", "4,4", "--margin", "5"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.payload["stable"], true);
}

TEST(Cli, Realize)
{
    TempFiles tmp;
    auto path = tmp.write("vt.json", "[[],[],[1],[1],[1,1]]");
    auto r = run({"realize", "--vt", path});
    ASSERT_EQ(r.exit_code, 0);
    auto seq = r.payload.get<std::vector<int>>();
    ASSERT_EQ(seq.size(), 2u);
    EXPECT_GT(seq[0], seq[1]);

    auto bad = tmp.write("bad.json", "[[],[],[],[],[]]");
    EXPECT_EQ(run({"realize", "--vt", bad}).exit_code, 1);
}

TEST(Cli, Enumerate)
{
    auto table = run({"enumerate", "--k", "3", "--limiting"});
    ASSERT_EQ(table.exit_code, 0);
    EXPECT_EQ(table.payload.get<lvt::CountTable>(), lvt::enumerate_limiting(3));

    auto one = run({"enumerate", "--k", "2", "--shape", ""});
    ASSERT_EQ(one.exit_code, 0);
    ASSERT_EQ(one.payload.size(), 1u);
    EXPECT_EQ(one.payload[0]["count"], 2);

    auto listed = run({"enumerate", "--k", "2", "--list", "--shape", "[1]"});
    ASSERT_EQ(listed.exit_code, 0);
    EXPECT_EQ(listed.payload.size(), 3u);

    EXPECT_EQ(run({"enumerate", "--k", "11"}).exit_code, 2);
    EXPECT_EQ(run({"enumerate", "--k", "7", "--list"}).exit_code, 2);
    EXPECT_EQ(run({"enumerate", "--k", "-1"}).exit_code, 1);
}

TEST(Cli, VerifyIdentity)
{
    auto r = run({"verify-identity", "--n", "4", "--k", "2", "--sweep"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.payload["lhs"], 16);
    EXPECT_EQ(r.payload["rhs"], 16);
    EXPECT_EQ(r.payload["holds"], true);
    EXPECT_EQ(r.payload["bins_match"], true);
    EXPECT_EQ(run({"verify-identity", "--n", "10", "--k", "2", "--sweep"}).exit_code, 2);
}

TEST(Cli, Count)
{
    auto r = run({"count", "--k", "5"});
    EXPECT_EQ(r.payload.dump(), R"({"a_k":257,"c_k":257,"agree":true})");
    EXPECT_EQ(run({"count", "--k", "30", "--force"}).payload["agree"], true);
}

TEST(Cli, PsiAndInverse)
{
    TempFiles tmp;
    auto vt = tmp.write("vt.json", "[[],[],[1],[1],[1,1],[1],[2],[1],[1,1]]");
    auto r = run({"psi", "--vt", vt, "--trace"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.payload["blocks"].dump(), "[[1,3,4],[2]]");
    EXPECT_EQ(r.payload["tableau"].dump(), "[[2],[4]]");
    EXPECT_EQ(r.payload["trace"].size(), 9u);
    EXPECT_EQ(r.payload["trace"][8]["edges"].dump(), "[[1,3],[3,4]]");

    auto blocks = tmp.write("b.json", r.payload["blocks"].dump());
    auto tableau = tmp.write("t.json", r.payload["tableau"].dump());
    auto back = run({"psi-inverse", "--blocks", blocks, "--tableau", tableau, "--k", "4"});
    ASSERT_EQ(back.exit_code, 0);
    EXPECT_EQ(back.payload["steps"].dump(), "[[],[],[1],[1],[1,1],[1],[2],[1],[1,1]]");

    auto wrong = tmp.write("w.json", "[[1]]");
    EXPECT_EQ(run({"psi-inverse", "--blocks", blocks, "--tableau", wrong, "--k", "4"}).exit_code, 1);
}

TEST(Cli, PhiAndInverse)
{
    TempFiles tmp;
    auto blocks = tmp.write("b.json", "[[1,3,4,8],[2,5],[6],[7,9,10]]");
    auto sigma = tmp.write("s.json", "[[1,4],[2,3]]");
    auto r = run({"phi", "--blocks", blocks, "--involution", sigma});
    ASSERT_EQ(r.exit_code, 0);
    auto bc = r.payload.get<lvt::BiColoredSetPartition>();
    EXPECT_EQ(bc.partition(), (lvt::SetPartition{{1, 3, 4, 7, 8, 9, 10}, {2, 5, 6}}));
    EXPECT_EQ(bc.color(7), lvt::Color::blue);
    EXPECT_EQ(bc.color(8), lvt::Color::red);

    auto in = tmp.write("bc.json", r.payload.dump());
    auto back = run({"phi-inverse", "--input", in});
    ASSERT_EQ(back.exit_code, 0);
    EXPECT_EQ(back.payload["blocks"].dump(), "[[1,3,4,8],[2,5],[6],[7,9,10]]");
    EXPECT_EQ(back.payload["involution"].dump(), "[[1,4],[2,3]]");

    auto blue_min = tmp.write("bad.json", R"([[{"value":1,"color":"b"}]])");
    EXPECT_EQ(run({"phi-inverse", "--input", blue_min}).exit_code, 1);
    auto short_sigma = tmp.write("s2.json", "[[1,5]]");
    EXPECT_EQ(run({"phi", "--blocks", blocks, "--involution", short_sigma}).exit_code, 1);
}

TEST(Cli, Validate)
{
    TempFiles tmp;
    auto nvt = tmp.write("n.json", R"({"flavor":"n-vacillating","n":4,"steps":[[4],[3],[4],[3],[4]]})");
    auto r = run({"validate", "--vt", nvt});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.payload["valid"], true);
    EXPECT_EQ(r.payload["flavor"], "n");

    auto simp = tmp.write("s.json", "[[],[],[],[],[]]");
    EXPECT_EQ(run({"validate", "--vt", simp}).payload["valid"], true);
    auto lim = run({"validate", "--vt", simp, "--flavor", "limiting"});
    EXPECT_EQ(lim.payload["valid"], false);
    EXPECT_TRUE(lim.payload["violation"].is_string());
    EXPECT_EQ(run({"validate", "--vt", simp, "--flavor", "n"}).exit_code, 2);
    EXPECT_EQ(run({"validate", "--vt", simp, "--flavor", "other"}).exit_code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).exit_code, 2);
    EXPECT_EQ(run({"di", "--n", "4"}).exit_code, 2);
    EXPECT_EQ(run({"di", "--n", "4", "--seq", "4,x"}).exit_code, 2);
    EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
    EXPECT_EQ(run({"realize", "--vt", "/nonexistent/vt.json"}).exit_code, 2);

    TempFiles tmp;
    auto junk = tmp.write("junk.json", "{not json");
    EXPECT_EQ(run({"realize", "--vt", junk}).exit_code, 2);
}

TEST(Cli, DomainErrors)
{
    auto r = run({"di", "--n", "4", "--seq", "5"});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.status, Status::error);
    EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Cli, HelpAndVersion)
{
    auto h = run({"--help"});
    EXPECT_EQ(h.exit_code, 0);
    EXPECT_NE(h.text.find("enumerate"), std::string::npos);
    auto v = run({"--version"});
    EXPECT_EQ(v.exit_code, 0);
    EXPECT_NE(v.text.find("1.0.0"), std::string::npos);
}

TEST(Cli, Deterministic)
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"enumerate", "--k", "4", "--list"}, {"verify-identity", "--n", "6", "--k", "3", "--sweep"}}) {
        auto a = run(args);
        auto b = run(args);
        ASSERT_EQ(a.exit_code, 0);
        EXPECT_EQ(a.payload.dump(), b.payload.dump());
        EXPECT_EQ(Json::parse(a.payload.dump()), a.payload);
    }
}
