#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "helpers.hpp"
#include "polymat/polymatroid.hpp"

using namespace polymat;
using testutil::table_of;

namespace {

// Brute-force exchange axiom: for u, v in D with |u| < |v| there is w in D
// with u < w <= u v v.
void check_exchange(const DiscretePolymatroid& d) {
    auto vs = d.vectors();
    for (const IntVec& u : vs)
        for (const IntVec& v : vs) {
            if (vec::sum(u) >= vec::sum(v)) continue;
            IntVec top = vec::join(u, v);
            bool found = false;
            for (const IntVec& w : vs)
                if (vec::lt(u, w) && vec::leq(w, top)) { found = true; break; }
            CHECK_MESSAGE(found, "exchange fails between ", vec::show(u), " and ", vec::show(v));
            if (!found) return;
        }
}

}  // namespace

TEST_CASE("rank_validate accepts the worked tables") {
    CHECK(!rank_validate(table_of("ex6_table").table()));
    CHECK(!rank_validate(table_of("ex7_table").table()));
    CHECK(!rank_validate(table_of("ingleton_table").table()));
}

TEST_CASE("rank_validate reports the failing axiom") {
    // rho(empty) = 1
    auto v3 = rank_validate(RankTable(1, {1, 1}));
    REQUIRE(v3);
    CHECK(v3->axiom == "D3");
    // monotonicity: rho({1}) > rho({1,2})
    auto v1 = rank_validate(RankTable(2, {0, 2, 1, 1}));
    REQUIRE(v1);
    CHECK(v1->axiom == "D1");
    // submodularity: singletons 1, pair 3
    auto v2 = rank_validate(RankTable(2, {0, 1, 1, 3}));
    REQUIRE(v2);
    CHECK(v2->axiom == "D2");
    CHECK_THROWS_AS(DiscretePolymatroid{RankTable(2, {0, 1, 1, 3})}, std::invalid_argument);
}

TEST_CASE("membership") {
    auto d = table_of("ex7_table");
    CHECK(d.contains({1, 1, 1}));
    CHECK(!d.contains({2, 2, 1}));
    CHECK(d.contains({0, 0, 0}));
    CHECK_THROWS_AS(d.contains({1, 1}), std::invalid_argument);
}

TEST_CASE("vectors of the worked examples") {
    auto d6 = table_of("ex6_table");
    std::vector<IntVec> want = {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1},
                                {0, 1, 2}, {0, 2, 0}, {0, 2, 1}, {0, 2, 2}, {1, 0, 0},
                                {1, 0, 1}, {1, 1, 0}, {1, 1, 1}, {1, 2, 0}, {1, 2, 1}};
    CHECK(d6.vectors() == want);

    DiscretePolymatroid zero{RankTable(2, {0, 0, 0, 0})};
    CHECK(zero.vectors() == std::vector<IntVec>{{0, 0}});

    auto du24 = table_of("d_u24_table");
    CHECK(du24.vectors().size() == 11);
    for (const IntVec& u : du24.vectors()) CHECK(vec::sum(u) <= 2);
}

TEST_CASE("bases of the worked examples") {
    auto d5 = table_of("ex5_table");
    CHECK(d5.bases() == std::vector<IntVec>{{0, 5}, {1, 4}, {2, 3}, {3, 2}});
    auto d6 = table_of("ex6_table");
    CHECK(d6.bases() == std::vector<IntVec>{{0, 2, 2}, {1, 2, 1}});
    auto d7 = table_of("ex7_table");
    CHECK(d7.bases() == std::vector<IntVec>{{1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
    // the 19 basis vectors of 2D(U_{2,4})
    auto d2 = table_of("d_u24_table").scale(2);
    std::vector<IntVec> want = {
        {0, 0, 2, 2}, {0, 1, 1, 2}, {0, 1, 2, 1}, {0, 2, 0, 2}, {0, 2, 1, 1}, {0, 2, 2, 0},
        {1, 0, 1, 2}, {1, 0, 2, 1}, {1, 1, 0, 2}, {1, 1, 1, 1}, {1, 1, 2, 0}, {1, 2, 0, 1},
        {1, 2, 1, 0}, {2, 0, 0, 2}, {2, 0, 1, 1}, {2, 0, 2, 0}, {2, 1, 0, 1}, {2, 1, 1, 0},
        {2, 2, 0, 0}};
    CHECK(d2.bases() == want);
}

TEST_CASE("excluded vectors") {
    auto d7 = table_of("ex7_table");
    std::vector<IntVec> want = {{0, 2, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2, 0}, {2, 2, 1}};
    CHECK(d7.excluded_vectors() == want);

    auto du24 = table_of("d_u24_table");
    auto exc = du24.excluded_vectors();
    CHECK(exc.size() == 5);
    CHECK(std::count(exc.begin(), exc.end(), IntVec{1, 1, 1, 1}) == 1);

    // free polymatroid: no excluded vectors
    DiscretePolymatroid free{RankTable(2, {0, 1, 2, 3})};
    CHECK(free.excluded_vectors().empty());
}

TEST_CASE("minimal excluded vectors") {
    auto d5 = table_of("ex5_table");
    CHECK(d5.minimal_excluded_vectors() == std::vector<IntVec>{{1, 5}, {2, 4}, {3, 3}});
    auto d7 = table_of("ex7_table");
    CHECK(d7.minimal_excluded_vectors() == std::vector<IntVec>{{0, 2, 1}, {2, 1, 1}, {2, 2, 0}});
    auto du24 = table_of("d_u24_table");
    CHECK(du24.minimal_excluded_vectors() ==
          std::vector<IntVec>{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
}

TEST_CASE("unit and reduced unit minimal excluded vectors") {
    auto d2 = table_of("d_u24_table").scale(2);
    CHECK(d2.reduced_unit_mev(1) == std::vector<IntVec>{{1, 0, 2, 2}, {1, 2, 0, 2}, {1, 2, 2, 0}});
    CHECK(d2.unit_mev(1).size() == 6);
    auto d9 = table_of("ex9_table");
    CHECK(d9.reduced_unit_mev(4) == std::vector<IntVec>{{1, 1, 1, 1}});
    DiscretePolymatroid free{RankTable(2, {0, 1, 2, 3})};
    CHECK(free.unit_mev(1).empty());
    CHECK_THROWS_AS(free.unit_mev(3), std::invalid_argument);
}

TEST_CASE("scaling") {
    auto du24 = table_of("d_u24_table");
    auto d2 = du24.scale(2);
    for (Mask a = 0; a < 16; ++a)
        CHECK(d2.rho(a) == std::min<unsigned>(2 * std::popcount(a), 4));
    CHECK(du24.scale(1).table() == du24.table());
    CHECK_THROWS_AS(du24.scale(0), std::invalid_argument);
    // nb is a basis vector of nD for a basis vector b of D
    auto b2 = d2.bases();
    CHECK(std::find(b2.begin(), b2.end(), IntVec{2, 2, 0, 0}) != b2.end());
}

TEST_CASE("rank_from_vectors round trips") {
    auto d6 = table_of("ex6_table");
    CHECK(rank_from_vectors(3, d6.vectors()) == d6.table());
    CHECK(rank_from_vectors(2, std::vector<IntVec>{{0, 0}}) == RankTable(2, {0, 0, 0, 0}));
    auto d5 = table_of("ex5_table");
    auto t = rank_from_vectors(2, d5.bases());
    CHECK(t.singleton(1) == 3);
    CHECK(t.singleton(2) == 5);
    CHECK(t[3] == 5);
    CHECK_THROWS_AS(rank_from_vectors(2, std::vector<IntVec>{}), std::invalid_argument);
}

TEST_CASE("ingleton check") {
    auto bad = table_of("ingleton_table");
    auto v = ingleton_check(bad);
    REQUIRE(v);
    CHECK(v->lhs == 16);
    CHECK(v->rhs == 15);
    CHECK((v->x1 | v->x2 | v->x3 | v->x4) == 0xF);

    CHECK(!ingleton_check(table_of("ex7_table")));
    DiscretePolymatroid free{RankTable(3, {0, 1, 1, 2, 1, 2, 2, 3})};
    CHECK(!ingleton_check(free));
    CHECK(!ingleton_check(table_of("ex7_table"), IngletonScope::AllSubsets));
}

TEST_CASE("caps raise CapExceeded") {
    auto d5 = table_of("ex5_table");
    CHECK_THROWS_AS(d5.vectors(3), CapExceeded);
}

TEST_CASE("exchange axiom and basis-sum equality on small instances") {
    std::mt19937_64 rng(31);
    std::vector<DiscretePolymatroid> corpus = {
        table_of("ex5_table"),  table_of("ex6_table"),   table_of("ex7_table"),
        table_of("ex9_table"),  table_of("d_u24_table"), table_of("ingleton_table")};
    for (int t = 0; t < 12; ++t)
        corpus.push_back(testutil::random_dpm(3 + t % 2, 3, gf::Field(2, 1), rng));
    for (const auto& d : corpus) {
        if (d.ground_size() > 4 || d.rho_max() > 4) continue;
        check_exchange(d);
        unsigned rank = d.rank();
        for (const IntVec& b : d.bases()) CHECK(vec::sum(b) == rank);
        // D = integral subvectors of its basis vectors
        std::set<IntVec> closure;
        for (const IntVec& b : d.bases()) {
            IntVec u(b.size(), 0);
            while (true) {
                closure.insert(u);
                std::size_t i = 0;
                while (i < u.size() && u[i] == b[i]) u[i++] = 0;
                if (i == u.size()) break;
                ++u[i];
            }
        }
        auto vs = d.vectors();
        CHECK(std::set<IntVec>(vs.begin(), vs.end()) == closure);
        // rank table round trip
        CHECK(rank_from_vectors(d.ground_size(), vs) == d.table());
        // minimal excluded vectors form an antichain inside the excluded set
        auto exc = d.excluded_vectors();
        auto mev = d.minimal_excluded_vectors();
        std::set<IntVec> excset(exc.begin(), exc.end());
        for (const IntVec& u : mev) CHECK(excset.count(u) == 1);
        for (const IntVec& u : mev)
            for (const IntVec& v : mev) CHECK(!vec::lt(u, v));
    }
}
