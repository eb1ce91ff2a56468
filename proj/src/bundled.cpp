#include "polymat/bundled.hpp"

#include <map>
#include <stdexcept>

#include <bit>

#include "polymat/json_io.hpp"
#include "polymat/matroid.hpp"

namespace polymat {

namespace {

using io::json;

gf::Field f2() { return gf::Field(2, 1); }
gf::Field f3() { return gf::Field(3, 1); }
gf::Field f4() { return gf::Field(2, 2); }

gf::Matrix mat(const gf::Field& f, std::vector<std::vector<unsigned>> rows) {
    return gf::Matrix(f, rows);
}

// Rank table on r elements from an explicit list of (subset, rank) pairs;
// subsets are given as element lists, everything else defaults per size.
RankTable table_from_rules(unsigned r, unsigned dflt_small, unsigned cap,
                           std::vector<std::pair<std::vector<unsigned>, unsigned>> rules) {
    (void)dflt_small;
    std::vector<unsigned> v(std::size_t(1) << r, cap);
    v[0] = 0;
    std::map<Mask, unsigned> special;
    for (auto& [elems, val] : rules) {
        Mask m = 0;
        for (unsigned e : elems) m |= Mask(1) << (e - 1);
        special[m] = val;
    }
    for (Mask a = 1; a < (Mask(1) << r); ++a) {
        auto it = special.find(a);
        if (it != special.end()) v[a] = it->second;
    }
    return RankTable(r, v);
}

std::string dump_table(const RankTable& t) { return io::table_to_json(t).dump(); }

std::string dump_rep(const gf::Field& f, unsigned ambient, std::vector<gf::Matrix> blocks) {
    return io::rep_to_json(Representation(f, ambient, std::move(blocks))).dump();
}

// ---- rank tables -------------------------------------------------------

std::string ex5_table() {
    return dump_table(table_from_rules(2, 0, 5, {{{1}, 3}, {{2}, 5}, {{1, 2}, 5}}));
}

std::string ex6_table() {
    return dump_table(table_from_rules(
        3, 0, 4, {{{1}, 1}, {{2}, 2}, {{3}, 2}, {{1, 2}, 3}, {{1, 3}, 2}, {{2, 3}, 4}}));
}

std::string ex7_table() {
    return dump_table(table_from_rules(3, 0, 3, {{{1}, 2}, {{2}, 2}, {{3}, 1}, {{2, 3}, 2}}));
}

std::string ex9_table() {
    return dump_table(table_from_rules(4, 0, 3,
                                       {{{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 2},
                                        {{1, 2}, 2}, {{1, 3}, 2}, {{1, 4}, 2}, {{2, 3}, 2}}));
}

std::string ex10_table() {
    return dump_table(table_from_rules(5, 0, 4,
                                       {{{2}, 1}, {{3}, 1},
                                        {{1}, 2}, {{4}, 2}, {{5}, 2}, {{2, 3}, 2}, {{3, 5}, 2},
                                        {{1, 2}, 3}, {{1, 3}, 3}, {{2, 4}, 3}, {{2, 5}, 3},
                                        {{3, 4}, 3}, {{2, 3, 5}, 3}}));
}

std::string ingleton_table() {
    return dump_table(table_from_rules(4, 0, 4,
                                       {{{1}, 2}, {{2}, 2}, {{3}, 2}, {{4}, 2},
                                        {{1, 2}, 3}, {{1, 3}, 3}, {{1, 4}, 3},
                                        {{2, 3}, 3}, {{2, 4}, 3}}));
}

std::string d_u24_table() {
    std::vector<unsigned> v(16);
    for (Mask a = 0; a < 16; ++a) v[a] = std::min<unsigned>(std::popcount(a), 2);
    return dump_table(RankTable(4, v));
}

std::string matroid_json(const Matroid& m) {
    json j = io::table_to_json(m.table());
    j["kind"] = "matroid";
    return j.dump();
}

// ---- representations ---------------------------------------------------

std::string ex2_rep() {
    auto f = f3();
    return dump_rep(f, 2, {mat(f, {{1}, {0}}), mat(f, {{0}, {1}}),
                           mat(f, {{1}, {1}}), mat(f, {{1}, {2}})});
}

std::string ex3_rep() {
    auto f = f2();
    return dump_rep(f, 4,
                    {mat(f, {{1, 0}, {0, 1}, {0, 0}, {0, 0}}),
                     mat(f, {{0, 0}, {0, 0}, {1, 0}, {0, 1}}),
                     mat(f, {{1, 0}, {0, 1}, {0, 1}, {1, 0}}),
                     mat(f, {{1, 0}, {0, 1}, {1, 0}, {1, 1}})});
}

std::string ex4_rep() {
    auto f = f3();
    return dump_rep(f, 6,
                    {mat(f, {{1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}),
                     mat(f, {{1, 0}, {0, 1}, {0, 0}, {0, 0}, {1, 0}, {0, 1}}),
                     mat(f, {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 1}}),
                     mat(f, {{1, 0}, {0, 1}, {1, 0}, {0, 2}, {0, 1}, {2, 1}}),
                     mat(f, {{0, 0}, {0, 0}, {1, 0}, {0, 1}, {0, 0}, {0, 0}}),
                     mat(f, {{1, 0}, {0, 1}, {2, 1}, {2, 0}, {0, 1}, {2, 1}}),
                     mat(f, {{1, 0}, {0, 1}, {0, 1}, {1, 2}, {0, 0}, {0, 0}}),
                     mat(f, {{1, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {1, 0}}),
                     mat(f, {{0, 0}, {0, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}})});
}

std::string ex8_rep() {
    auto f = f2();
    return dump_rep(f, 3, {mat(f, {{1, 0}, {0, 1}, {0, 0}}),
                           mat(f, {{0, 1}, {0, 1}, {1, 1}}),
                           mat(f, {{0}, {0}, {1}})});
}

std::string ex9_rep() {
    auto f = f2();
    return dump_rep(f, 3, {mat(f, {{1}, {0}, {0}}), mat(f, {{0}, {1}, {0}}),
                           mat(f, {{0}, {0}, {1}}), mat(f, {{1, 0}, {0, 1}, {0, 1}})});
}

std::string ex10_rep() {
    auto f = f2();
    return dump_rep(f, 4,
                    {mat(f, {{1, 0}, {0, 1}, {0, 0}, {0, 0}}), mat(f, {{0}, {0}, {1}, {0}}),
                     mat(f, {{0}, {0}, {0}, {1}}), mat(f, {{1, 1}, {1, 0}, {1, 1}, {1, 0}}),
                     mat(f, {{0, 0}, {0, 1}, {0, 1}, {1, 0}})});
}

// 8x2 block with single 1s at rows r1 (col 0) and r2 (col 1), 1-based.
gf::Matrix pair_block(unsigned r1, unsigned r2) {
    gf::Matrix m(f2(), 8, 2);
    m.set(r1 - 1, 0, 1);
    m.set(r2 - 1, 1, 1);
    return m;
}

std::vector<gf::Matrix> eq1_blocks() {
    return {pair_block(1, 2), pair_block(3, 4), pair_block(5, 6), pair_block(7, 8),
            pair_block(1, 4), pair_block(2, 3), pair_block(5, 8), pair_block(6, 7),
            pair_block(2, 5), pair_block(2, 8), pair_block(3, 5), pair_block(3, 8)};
}

std::string eq1_rep() { return dump_rep(f2(), 8, eq1_blocks()); }

// ---- construction scripts ---------------------------------------------

std::string table1_script() {
    ConstructionScript s;
    s.step1 = {2, 2, 0, 0};
    s.step2 = {{3, {2, 2, 1, 0}}, {4, {2, 2, 0, 1}}};
    s.step3 = {{2, {2, 1, 2, 0}}, {1, {1, 2, 2, 0}}, {2, {2, 1, 0, 2}},
               {1, {1, 2, 0, 2}}, {1, {1, 0, 2, 2}}, {2, {0, 1, 2, 2}}};
    return io::script_to_json(s).dump();
}

std::string table2_script() {
    auto v = [](std::vector<std::pair<unsigned, unsigned>> at) {
        IntVec u(12, 0);
        for (auto [i, val] : at) u[i - 1] = val;
        return u;
    };
    ConstructionScript s;
    s.step1 = v({{1, 2}, {2, 2}, {3, 2}, {4, 2}});
    s.step2 = {{5, v({{1, 2}, {2, 2}, {5, 1}})},
               {6, v({{1, 2}, {2, 2}, {6, 1}})},
               {7, v({{3, 2}, {4, 2}, {7, 1}})},
               {8, v({{3, 2}, {4, 2}, {8, 1}})},
               {9, v({{6, 2}, {7, 2}, {9, 1}})},
               {10, v({{6, 2}, {7, 2}, {10, 1}})},
               {11, v({{6, 2}, {7, 2}, {11, 1}})},
               {12, v({{6, 2}, {7, 2}, {12, 1}})}};
    s.step3 = {{1, v({{1, 1}, {5, 2}, {6, 2}})},  {1, v({{1, 1}, {5, 2}, {9, 2}})},
               {1, v({{1, 1}, {5, 2}, {10, 2}})}, {2, v({{2, 1}, {5, 2}, {6, 2}})},
               {2, v({{2, 1}, {5, 2}, {11, 2}})}, {2, v({{2, 1}, {5, 2}, {12, 2}})},
               {3, v({{3, 1}, {7, 2}, {8, 2}})},  {3, v({{3, 1}, {8, 2}, {9, 2}})},
               {3, v({{3, 1}, {8, 2}, {11, 2}})}, {4, v({{4, 1}, {7, 2}, {8, 2}})},
               {4, v({{4, 1}, {8, 2}, {10, 2}})}, {4, v({{4, 1}, {8, 2}, {12, 2}})}};
    return io::script_to_json(s).dump();
}

std::string table3_script() {
    ConstructionScript s;
    s.step1 = {1, 1, 1, 0};
    s.step2 = {{4, {1, 1, 1, 1}}};
    s.step3 = {{1, {1, 0, 0, 2}}, {2, {0, 1, 1, 2}}, {3, {0, 1, 1, 2}}};
    return io::script_to_json(s).dump();
}

std::string table4_script() {
    ConstructionScript s;
    s.step1 = {2, 1, 1, 0, 0};
    s.step2 = {{4, {2, 1, 1, 1, 0}}, {5, {0, 1, 1, 2, 1}}};
    s.step3 = {{2, {2, 1, 0, 2, 0}}, {3, {2, 0, 1, 2, 0}}, {2, {2, 1, 0, 0, 2}},
               {1, {1, 1, 1, 2, 0}}, {2, {0, 1, 0, 2, 2}}, {1, {1, 0, 0, 2, 2}},
               {3, {0, 0, 1, 0, 2}}};
    return io::script_to_json(s).dump();
}

// ---- networks and solutions --------------------------------------------

Network make_network(std::vector<std::string> nodes,
                     std::vector<std::tuple<std::string, std::string, std::string>> edges,
                     std::vector<std::string> sources,
                     std::map<std::string, std::vector<unsigned>> demands) {
    std::vector<Edge> es;
    for (auto& [id, src, dst] : edges)
        es.push_back({id, src.empty() ? std::nullopt : std::optional<std::string>(src), dst});
    return Network(std::move(nodes), std::move(es), std::move(sources), std::move(demands));
}

// The M-network: two source nodes with two messages each, private relays
// a1/a2, a shared middle node w, and the four two-message receivers.
Network fig5_network() {
    return make_network(
        {"n1", "n2", "a1", "w", "a2", "r1", "r2", "r3", "r4"},
        {{"1", "", "n1"},    {"2", "", "n1"},    {"3", "", "n2"},    {"4", "", "n2"},
         {"5", "n1", "a1"},  {"6", "n1", "w"},   {"7", "n2", "w"},   {"8", "n2", "a2"},
         {"9", "w", "r1"},   {"10", "w", "r2"},  {"11", "w", "r3"},  {"12", "w", "r4"},
         {"13", "a1", "r1"}, {"14", "a1", "r2"}, {"15", "a1", "r3"}, {"16", "a1", "r4"},
         {"17", "a2", "r1"}, {"18", "a2", "r2"}, {"19", "a2", "r3"}, {"20", "a2", "r4"}},
        {"1", "2", "3", "4"},
        {{"r1", {1, 3}}, {"r2", {1, 4}}, {"r3", {2, 3}}, {"r4", {2, 4}}});
}

std::string fig5_sol1() {
    auto blocks = eq1_blocks();
    FncSolution s{f2(), {{2, 2, 2, 2}, 2}, {}};
    for (unsigned i = 1; i <= 12; ++i) s.encodings.emplace(std::to_string(i), blocks[i - 1]);
    for (unsigned e = 13; e <= 16; ++e) s.encodings.emplace(std::to_string(e), blocks[4]);
    for (unsigned e = 17; e <= 20; ++e) s.encodings.emplace(std::to_string(e), blocks[7]);
    return io::solution_to_json(s).dump();
}

std::string fig5_sol2() {
    auto blocks = eq1_blocks();
    FncSolution s{f2(), {{2, 2, 2, 2}, 2}, {}};
    for (unsigned i = 1; i <= 12; ++i) s.encodings.emplace(std::to_string(i), blocks[i - 1]);
    auto single = [&](unsigned row) {  // 8x2 with one 1 in column 0
        gf::Matrix m(f2(), 8, 2);
        m.set(row - 1, 0, 1);
        return m;
    };
    s.encodings.emplace("13", single(1));
    s.encodings.emplace("14", single(1));
    s.encodings.emplace("15", single(4));
    s.encodings.emplace("16", single(4));
    s.encodings.emplace("17", single(6));
    s.encodings.emplace("18", single(7));
    s.encodings.emplace("19", single(6));
    s.encodings.emplace("20", single(7));
    return io::solution_to_json(s).dump();
}

std::string fig5_f1() {
    EdgeMap f;
    for (unsigned i = 1; i <= 12; ++i) f[std::to_string(i)] = i;
    for (unsigned e = 13; e <= 16; ++e) f[std::to_string(e)] = 5;
    for (unsigned e = 17; e <= 20; ++e) f[std::to_string(e)] = 8;
    return io::edge_map_to_json(f).dump();
}

// Fig. 6: built from 2D(U_{2,4}); no scalar binary solution exists.
Network fig6_network() {
    return make_network(
        {"1", "2", "3p", "3", "4p", "4", "5", "6", "7", "8", "9", "10"},
        {{"e1", "", "1"},    {"e2", "", "2"},
         {"1-3p", "1", "3p"}, {"2-3p", "2", "3p"}, {"3p-3", "3p", "3"},
         {"1-4p", "1", "4p"}, {"2-4p", "2", "4p"}, {"4p-4", "4p", "4"},
         {"1-5", "1", "5"},  {"3-5", "3", "5"},
         {"2-6", "2", "6"},  {"3-6", "3", "6"},
         {"1-7", "1", "7"},  {"4-7", "4", "7"},
         {"2-8", "2", "8"},  {"4-8", "4", "8"},
         {"3-9", "3", "9"},  {"4-9", "4", "9"},
         {"3-10", "3", "10"}, {"4-10", "4", "10"}},
        {"e1", "e2"},
        {{"5", {2}}, {"6", {1}}, {"7", {2}}, {"8", {1}}, {"9", {1}}, {"10", {2}}});
}

// Fig. 7: built from the M-network polymatroid D(V_1..V_12).
Network fig7_network() {
    std::vector<std::string> nodes = {"1", "2", "3", "4"};
    std::vector<std::tuple<std::string, std::string, std::string>> edges = {
        {"e1", "", "1"}, {"e2", "", "2"}, {"e3", "", "3"}, {"e4", "", "4"}};
    auto relay = [&](unsigned i, std::vector<unsigned> from) {
        std::string prim = std::to_string(i) + "p";
        std::string plain = std::to_string(i);
        nodes.push_back(prim);
        nodes.push_back(plain);
        for (unsigned j : from)
            edges.push_back({std::to_string(j) + "-" + prim, std::to_string(j), prim});
        edges.push_back({prim + "-" + plain, prim, plain});
    };
    relay(5, {1, 2});
    relay(6, {1, 2});
    relay(7, {3, 4});
    relay(8, {3, 4});
    relay(9, {6, 7});
    relay(10, {6, 7});
    relay(11, {6, 7});
    relay(12, {6, 7});
    std::map<std::string, std::vector<unsigned>> demands;
    unsigned next = 12;
    auto receiver = [&](std::vector<unsigned> from, unsigned msg) {
        std::string name = std::to_string(++next);
        nodes.push_back(name);
        for (unsigned j : from)
            edges.push_back({std::to_string(j) + "-" + name, std::to_string(j), name});
        demands[name] = {msg};
    };
    receiver({5, 6}, 1);
    receiver({5, 9}, 1);
    receiver({5, 10}, 1);
    receiver({5, 6}, 2);
    receiver({5, 11}, 2);
    receiver({5, 12}, 2);
    receiver({7, 8}, 3);
    receiver({8, 9}, 3);
    receiver({8, 11}, 3);
    receiver({7, 8}, 4);
    receiver({8, 10}, 4);
    receiver({8, 12}, 4);
    return make_network(nodes, edges, {"e1", "e2", "e3", "e4"}, demands);
}

// Fig. 8: the (1,1,1;2) network of the first ALGORITHM 2 example.
Network fig8_network() {
    return make_network(
        {"1", "2", "3", "4p", "4", "5", "6", "7"},
        {{"e1", "", "1"},    {"e2", "", "2"},    {"e3", "", "3"},
         {"1-4p", "1", "4p"}, {"2-4p", "2", "4p"}, {"3-4p", "3", "4p"}, {"4p-4", "4p", "4"},
         {"4-5", "4", "5"},
         {"3-6", "3", "6"},  {"4-6", "4", "6"},
         {"2-7", "2", "7"},  {"4-7", "4", "7"}},
        {"e1", "e2", "e3"}, {{"5", {1}}, {"6", {2}}, {"7", {3}}});
}

std::string fig8_sol() {
    auto f = f2();
    FncSolution s{f, {{1, 1, 1}, 2}, {}};
    auto pad = [&](unsigned row) {  // 3x2, single 1 in column 0
        gf::Matrix m(f, 3, 2);
        m.set(row - 1, 0, 1);
        return m;
    };
    gf::Matrix a4 = mat(f, {{1, 0}, {0, 1}, {0, 1}});
    s.encodings.emplace("e1", mat(f, {{1}, {0}, {0}}));
    s.encodings.emplace("e2", mat(f, {{0}, {1}, {0}}));
    s.encodings.emplace("e3", mat(f, {{0}, {0}, {1}}));
    s.encodings.emplace("1-4p", pad(1));
    s.encodings.emplace("2-4p", pad(2));
    s.encodings.emplace("3-4p", pad(3));
    s.encodings.emplace("4p-4", a4);
    s.encodings.emplace("4-5", a4);
    s.encodings.emplace("3-6", pad(3));
    s.encodings.emplace("4-6", a4);
    s.encodings.emplace("2-7", pad(2));
    s.encodings.emplace("4-7", a4);
    return io::solution_to_json(s).dump();
}

// Fig. 9: the (2,1,1;2) network of the second ALGORITHM 2 example.
Network fig9_network() {
    return make_network(
        {"1", "2", "3", "4p", "4", "5p", "5", "6", "7", "8", "9", "10", "11", "12"},
        {{"e1", "", "1"},    {"e2", "", "2"},    {"e3", "", "3"},
         {"1-4p", "1", "4p"}, {"2-4p", "2", "4p"}, {"3-4p", "3", "4p"}, {"4p-4", "4p", "4"},
         {"2-5p", "2", "5p"}, {"3-5p", "3", "5p"}, {"4-5p", "4", "5p"}, {"5p-5", "5p", "5"},
         {"1-6", "1", "6"},  {"4-6", "4", "6"},
         {"1-7", "1", "7"},  {"4-7", "4", "7"},
         {"1-8", "1", "8"},  {"5-8", "5", "8"},
         {"2-9", "2", "9"},  {"3-9", "3", "9"},  {"4-9", "4", "9"},
         {"4-10", "4", "10"}, {"5-10", "5", "10"},
         {"4-11", "4", "11"}, {"5-11", "5", "11"},
         {"5-12", "5", "12"}},
        {"e1", "e2", "e3"},
        {{"6", {2}}, {"7", {3}}, {"8", {2}}, {"9", {1}}, {"10", {2}}, {"11", {1}},
         {"12", {3}}});
}

std::string fig9_sol() {
    auto f = f2();
    FncSolution s{f, {{2, 1, 1}, 2}, {}};
    gf::Matrix a1 = mat(f, {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
    gf::Matrix a4 = mat(f, {{1, 1}, {1, 0}, {1, 1}, {1, 0}});
    gf::Matrix a5 = mat(f, {{0, 0}, {0, 1}, {0, 1}, {1, 0}});
    auto pad = [&](unsigned row) {
        gf::Matrix m(f, 4, 2);
        m.set(row - 1, 0, 1);
        return m;
    };
    s.encodings.emplace("e1", a1);
    s.encodings.emplace("e2", mat(f, {{0}, {0}, {1}, {0}}));
    s.encodings.emplace("e3", mat(f, {{0}, {0}, {0}, {1}}));
    s.encodings.emplace("1-4p", a1);
    s.encodings.emplace("2-4p", pad(3));
    s.encodings.emplace("3-4p", pad(4));
    s.encodings.emplace("4p-4", a4);
    s.encodings.emplace("2-5p", pad(3));
    s.encodings.emplace("3-5p", pad(4));
    s.encodings.emplace("4-5p", a4);
    s.encodings.emplace("5p-5", a5);
    s.encodings.emplace("1-6", a1);
    s.encodings.emplace("4-6", a4);
    s.encodings.emplace("1-7", a1);
    s.encodings.emplace("4-7", a4);
    s.encodings.emplace("1-8", a1);
    s.encodings.emplace("5-8", a5);
    s.encodings.emplace("2-9", pad(3));
    s.encodings.emplace("3-9", pad(4));
    s.encodings.emplace("4-9", a4);
    s.encodings.emplace("4-10", a4);
    s.encodings.emplace("5-10", a5);
    s.encodings.emplace("4-11", a4);
    s.encodings.emplace("5-11", a5);
    s.encodings.emplace("5-12", a5);
    return io::solution_to_json(s).dump();
}

// ---- index coding ------------------------------------------------------

std::string ex31_problem() {
    DiscretePolymatroid d{io::table_from_json(json::parse(ex7_table()))};
    return io::problem_to_json(construct_problem(d)).dump();
}

// The scalar perfect GF(4) code f(Z) = y + x A; the element 1+alpha
// encodes as 3.
std::string ex31_code_gf4() {
    auto f = f4();
    gf::Matrix enc(f, 8, 5);
    std::vector<std::vector<unsigned>> a = {{1, 0, 1, 1, 0}, {0, 1, 1, 1, 0}, {0, 0, 3, 1, 1}};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 5; ++j) enc.set(i, j, static_cast<gf::Value>(a[i][j]));
    for (unsigned t = 0; t < 5; ++t) enc.set(3 + t, t, 1);
    IndexCode code{f, 1, 5, std::move(enc)};
    return io::code_to_json(code).dump();
}

std::vector<BundledEntry> build_all() {
    std::vector<BundledEntry> out;
    auto add = [&](std::string name, std::string kind, std::string js) {
        out.push_back({std::move(name), std::move(kind), std::move(js)});
    };
    add("ex5_table", "polymatroid", ex5_table());
    add("ex6_table", "polymatroid", ex6_table());
    add("ex7_table", "polymatroid", ex7_table());
    add("ex9_table", "polymatroid", ex9_table());
    add("ex10_table", "polymatroid", ex10_table());
    add("ingleton_table", "polymatroid", ingleton_table());
    add("d_u24_table", "polymatroid", d_u24_table());
    add("u24_matroid", "matroid", matroid_json(preset("u24")));
    add("nonpappus_matroid", "matroid", matroid_json(preset("nonpappus")));
    add("ex2_rep", "representation", ex2_rep());
    add("ex3_rep", "representation", ex3_rep());
    add("ex4_rep", "representation", ex4_rep());
    add("ex8_rep", "representation", ex8_rep());
    add("ex9_rep", "representation", ex9_rep());
    add("ex10_rep", "representation", ex10_rep());
    add("eq1_rep", "representation", eq1_rep());
    add("table1_script", "script", table1_script());
    add("table2_script", "script", table2_script());
    add("table3_script", "script", table3_script());
    add("table4_script", "script", table4_script());
    add("fig5_network", "network", io::network_to_json(fig5_network()).dump());
    add("fig6_network", "network", io::network_to_json(fig6_network()).dump());
    add("fig7_network", "network", io::network_to_json(fig7_network()).dump());
    add("fig8_network", "network", io::network_to_json(fig8_network()).dump());
    add("fig9_network", "network", io::network_to_json(fig9_network()).dump());
    add("fig5_sol1", "solution", fig5_sol1());
    add("fig5_sol2", "solution", fig5_sol2());
    add("fig5_f1", "edge_map", fig5_f1());
    add("fig8_sol", "solution", fig8_sol());
    add("fig9_sol", "solution", fig9_sol());
    add("ex31_problem", "problem", ex31_problem());
    add("ex31_code_gf4", "code", ex31_code_gf4());
    return out;
}

}  // namespace

const std::vector<BundledEntry>& bundled_examples() {
    static const std::vector<BundledEntry> all = build_all();
    return all;
}

const BundledEntry& bundled(const std::string& name) {
    for (const BundledEntry& e : bundled_examples())
        if (e.name == name) return e;
    throw std::invalid_argument("no bundled example named " + name);
}

}  // namespace polymat
