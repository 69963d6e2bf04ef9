#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lvt/di_map.hpp"

using lvt::IntegerSequence;
using lvt::Partition;
using lvt::PartialTableau;
using lvt::VacillatingTableau;

namespace {

VacillatingTableau simp(std::vector<Partition> steps)
{
    return VacillatingTableau::simplified(std::move(steps));
}

const Partition E{};
const Partition B1{1};

} // namespace

TEST(DiForward, FourFourAtFourFiveSix)
{
    auto four = lvt::di_forward({4, 4}, 4);
    EXPECT_EQ(four.tableau, (PartialTableau{{1, 2, 3, 4}}));
    EXPECT_EQ(four.vt, VacillatingTableau::n_vacillating({{4}, {3}, {4}, {3}, {4}}, 4));
    EXPECT_EQ(lvt::simplify(four.vt), simp({E, E, E, E, E}));

    auto five = lvt::di_forward({4, 4}, 5);
    EXPECT_EQ(five.tableau, (PartialTableau{{1, 2, 3, 4}, {5}}));
    EXPECT_EQ(five.vt, VacillatingTableau::n_vacillating({{5}, {4}, {4, 1}, {3, 1}, {4, 1}}, 5));
    EXPECT_EQ(lvt::simplify(five.vt), simp({E, E, B1, B1, B1}));

    auto six = lvt::di_forward({4, 4}, 6);
    EXPECT_EQ(six.tableau, (PartialTableau{{1, 2, 3, 4}, {5, 6}}));
    EXPECT_EQ(six.shape, (Partition{4, 2}));
    EXPECT_EQ(lvt::simplify(six.vt), simp({E, E, B1, B1, {2}}));
}

TEST(DiForward, TraceAtFive)
{
    auto t = lvt::di_trace({4, 4}, 5);
    ASSERT_EQ(t.size(), 5u);
    EXPECT_EQ(t[0], (PartialTableau{{1, 2, 3, 4, 5}}));
    EXPECT_EQ(t[1], (PartialTableau{{1, 2, 3, 5}}));
    EXPECT_EQ(t[2], (PartialTableau{{1, 2, 3, 4}, {5}}));
    EXPECT_EQ(t[3], (PartialTableau{{1, 2, 3}, {5}}));
    EXPECT_EQ(t[4], (PartialTableau{{1, 2, 3, 4}, {5}}));
}

TEST(DiForward, Errors)
{
    EXPECT_THROW(lvt::di_forward({5}, 4), lvt::DomainError);
    EXPECT_THROW(lvt::di_forward({0}, 4), lvt::DomainError);
    EXPECT_THROW(lvt::di_forward({}, 0), lvt::DomainError);
}

TEST(DiForward, EmptySequence)
{
    auto img = lvt::di_forward({}, 3);
    EXPECT_EQ(img.tableau, (PartialTableau{{1, 2, 3}}));
    EXPECT_EQ(img.vt.k(), 0);
    EXPECT_EQ(lvt::di_inverse(img, 3), IntegerSequence{});
}

TEST(DiInverse, Examples)
{
    lvt::DIImage five{PartialTableau{{1, 2, 3, 4}, {5}},
                      VacillatingTableau::n_vacillating({{5}, {4}, {4, 1}, {3, 1}, {4, 1}}, 5),
                      Partition{4, 1}};
    EXPECT_EQ(lvt::di_inverse(five, 5), (IntegerSequence{4, 4}));

    lvt::DIImage four{PartialTableau{{1, 2, 3, 4}}, VacillatingTableau::n_vacillating({{4}, {3}, {4}, {3}, {4}}, 4),
                      Partition{4}};
    EXPECT_EQ(lvt::di_inverse(four, 4), (IntegerSequence{4, 4}));
}

TEST(DiInverse, RejectsMismatchedInput)
{
    auto img = lvt::di_forward({4, 4}, 5);
    auto wrong_shape = img;
    wrong_shape.tableau = PartialTableau{{1, 2, 3, 4, 5}};
    EXPECT_THROW(lvt::di_inverse(wrong_shape, 5), lvt::DomainError);
    EXPECT_THROW(lvt::di_inverse(img, 6), lvt::DomainError);
}

TEST(DiForward, BijectiveOnGrid)
{
    for (int k = 0; k <= 3; ++k)
        for (int n = std::max(2 * k, 1); n <= 7; ++n) {
            std::set<std::pair<std::vector<std::vector<int>>, std::vector<Partition>>> seen;
            std::size_t count = 0;
            lvt::for_each_sequence(n, k, [&](const IntegerSequence& seq) {
                auto img = lvt::di_forward(seq, n);
                ASSERT_TRUE(lvt::validate_n_vacillating(img.vt, n));
                ASSERT_TRUE(img.tableau.is_standard());
                ASSERT_EQ(lvt::di_inverse(img, n), seq);
                seen.insert({img.tableau.rows(), img.vt.steps()});
                ++count;
            });
            std::size_t pow = 1;
            for (int i = 0; i < k; ++i)
                pow *= static_cast<std::size_t>(n);
            EXPECT_EQ(count, pow);
            EXPECT_EQ(seen.size(), pow) << "n=" << n << " k=" << k;
        }
}

TEST(ForEachSequence, LexicographicOrder)
{
    std::vector<IntegerSequence> all;
    lvt::for_each_sequence(2, 2, [&](const IntegerSequence& s) { all.push_back(s); });
    EXPECT_EQ(all, (std::vector<IntegerSequence>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
}

TEST(LimitingVt, Examples)
{
    EXPECT_EQ(lvt::limiting_vt({4, 4}), simp({E, E, B1, B1, {2}}));
    EXPECT_EQ(lvt::limiting_vt({1, 2}), simp({E, E, B1, E, B1}));
    EXPECT_EQ(lvt::limiting_vt({2, 1}), simp({E, E, B1, B1, {1, 1}}));
    EXPECT_EQ(lvt::limiting_vt({}), simp({E}));
    EXPECT_THROW(lvt::limiting_vt({0, 1}), lvt::DomainError);
}

TEST(LimitingVt, KTwoClassification)
{
    const auto a = simp({E, E, B1, E, B1});
    const auto b = simp({E, E, B1, B1, {2}});
    const auto c = simp({E, E, B1, B1, {1, 1}});
    for (int i1 = 1; i1 <= 8; ++i1)
        for (int i2 = 1; i2 <= 8; ++i2) {
            const auto& want = (i2 == i1 + 1 || (i1 == 1 && i2 == 1)) ? a : (i1 > i2 ? c : b);
            EXPECT_EQ(lvt::limiting_vt({i1, i2}), want) << i1 << "," << i2;
        }
}

TEST(LimitingVt, AlwaysLimitingValid)
{
    for (int k = 0; k <= 3; ++k)
        lvt::for_each_sequence(5, k, [](const IntegerSequence& seq) {
            ASSERT_TRUE(lvt::validate_limiting(lvt::limiting_vt(seq)));
        });
}

TEST(Stabilization, Examples)
{
    EXPECT_TRUE(lvt::check_stabilization({4, 4}, 5));
    EXPECT_TRUE(lvt::check_stabilization({}, 5));
    EXPECT_THROW(lvt::check_stabilization({1}, 0), lvt::DomainError);
}

TEST(Stabilization, ExhaustiveOverFourLetters)
{
    for (int k = 0; k <= 3; ++k)
        lvt::for_each_sequence(4, k, [](const IntegerSequence& seq) {
            ASSERT_TRUE(lvt::check_stabilization(seq, 4));
            const int m = std::max(lvt::detail::max_entry(seq), 1) + 2 * static_cast<int>(seq.size()) + 1;
            ASSERT_TRUE(lvt::large_entries_stay_in_first_row(seq, m));
            ASSERT_TRUE(lvt::large_entries_stay_in_first_row(seq, m + 3));
        });
}

TEST(Stabilization, SeededRandomSequences)
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> len(0, 4), entry(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        IntegerSequence seq(static_cast<std::size_t>(len(rng)));
        for (auto& x : seq)
            x = entry(rng);
        ASSERT_TRUE(lvt::check_stabilization(seq, 4));
        const int m = std::max(lvt::detail::max_entry(seq), 1) + 2 * static_cast<int>(seq.size()) + 1;
        ASSERT_TRUE(lvt::large_entries_stay_in_first_row(seq, m));
    }
}

TEST(Stabilization, EntryLocationNeedsLargeM)
{
    EXPECT_THROW(lvt::large_entries_stay_in_first_row({4, 4}, 8), lvt::DomainError);
}

TEST(RealizeSequence, RoundtripOverLimitingListings)
{
    for (int k = 0; k <= 4; ++k) {
        const auto listing = lvt::list_walks(k, lvt::WalkKind::limiting);
        if (k == 3) {
            EXPECT_EQ(listing.size(), 11u);
        }
        for (const auto& v : listing) {
            auto seq = lvt::realize_sequence(v);
            ASSERT_EQ(static_cast<int>(seq.size()), k);
            ASSERT_EQ(lvt::limiting_vt(seq), v);
        }
    }
}

TEST(RealizeSequence, CaseA)
{
    auto seq = lvt::realize_sequence(simp({E, E, B1, E, B1}));
    ASSERT_EQ(seq.size(), 2u);
    EXPECT_TRUE(seq[1] == seq[0] + 1 || (seq[0] == 1 && seq[1] == 1));
}

TEST(RealizeSequence, RejectsNonLimiting)
{
    EXPECT_THROW(lvt::realize_sequence(simp({E, E, E, E, E})), lvt::DomainError);
    EXPECT_THROW(lvt::realize_sequence(VacillatingTableau::n_vacillating({{4}, {3}, {4}}, 4)), lvt::DomainError);
}
