#include <doctest.h>

#include "helpers.hpp"

using namespace polymat;
using io::json;

TEST_CASE("json round trips through every schema") {
    // field
    for (auto f : {gf::Field(2, 1), gf::Field(2, 2), gf::Field(3, 2)}) {
        gf::Field back = io::field_from_json(io::field_to_json(f));
        CHECK(back == f);
    }
    // matrix
    gf::Field f3(3, 1);
    gf::Matrix m(f3, {{1, 2, 0}, {0, 1, 2}});
    CHECK(io::matrix_from_json(io::matrix_to_json(m), f3) == m);
    // polymatroid table
    RankTable t = testutil::table_of("ex7_table").table();
    CHECK(io::table_from_json(io::table_to_json(t)) == t);
    // representation
    auto rep = testutil::rep_of("ex8_rep");
    auto rep2 = io::rep_from_json(io::rep_to_json(rep));
    CHECK(rep2.blocks() == rep.blocks());
    // network
    auto net = testutil::net_of("fig8_network");
    CHECK(io::network_from_json(io::network_to_json(net)) == net);
    // solution
    auto sol = testutil::sol_of("fig8_sol");
    auto sol2 = io::solution_from_json(io::solution_to_json(sol));
    CHECK(sol2.encodings == sol.encodings);
    CHECK(sol2.dims.k == sol.dims.k);
    // script
    auto script = testutil::script_of("table4_script");
    auto script2 = io::script_from_json(io::script_to_json(script));
    CHECK(script2.step1 == script.step1);
    CHECK(script2.step2.size() == script.step2.size());
    CHECK(script2.step3[0].u == script.step3[0].u);
    // problem
    auto p = testutil::problem_of("ex31_problem");
    auto p2 = io::problem_from_json(io::problem_to_json(p));
    CHECK(p2.messages() == p.messages());
    CHECK(p2.receivers() == p.receivers());
    // code
    auto code = testutil::code_of("ex31_code_gf4");
    auto code2 = io::code_from_json(io::code_to_json(code));
    CHECK(code2.encoding == code.encoding);
    CHECK(code2.n == code.n);
    CHECK(code2.c == code.c);
}

TEST_CASE("bundled manifest is complete and self-consistent") {
    CHECK(bundled_examples().size() >= 18);
    CHECK_THROWS_AS(bundled("nonexistent"), std::invalid_argument);

    // every bundled representation matches its polymatroid
    CHECK(is_representation(testutil::rep_of("ex8_rep"), testutil::table_of("ex7_table")));
    CHECK(is_representation(testutil::rep_of("ex9_rep"), testutil::table_of("ex9_table")));
    CHECK(is_representation(testutil::rep_of("ex10_rep"), testutil::table_of("ex10_table")));
    CHECK(is_representation(testutil::rep_of("ex2_rep"), testutil::table_of("d_u24_table")));
    CHECK(is_representation(testutil::rep_of("ex3_rep"),
                            testutil::table_of("d_u24_table").scale(2)));
    CHECK(is_representation(testutil::rep_of("ex4_rep"), preset("nonpappus").dpm().scale(2)));
    CHECK(!rank_validate(rank_fn_of(testutil::rep_of("eq1_rep"))));

    // every bundled network/solution pair verifies
    CHECK(verify_fnc_solution(testutil::net_of("fig5_network"), testutil::sol_of("fig5_sol1")).ok);
    CHECK(verify_fnc_solution(testutil::net_of("fig5_network"), testutil::sol_of("fig5_sol2")).ok);
    CHECK(verify_fnc_solution(testutil::net_of("fig8_network"), testutil::sol_of("fig8_sol")).ok);
    CHECK(verify_fnc_solution(testutil::net_of("fig9_network"), testutil::sol_of("fig9_sol")).ok);

    // the bundled problem/code pair verifies and is perfect
    auto p = testutil::problem_of("ex31_problem");
    auto code = testutil::code_of("ex31_code_gf4");
    CHECK(verify_index_code(p, code).ok);
    CHECK(is_perfect(p, code));

    // scripts rebuild the bundled figure networks (kept in test_network.cpp
    // for the full four-way comparison; spot-check one here)
    auto [n8, f8] = construct_network_alg2(testutil::table_of("ex9_table"),
                                           testutil::script_of("table3_script"));
    CHECK(n8 == testutil::net_of("fig8_network"));
}
