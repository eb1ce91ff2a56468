#pragma once

// JSON (de)serialization for every file format the CLI speaks. Schemas:
//   field          {"p": int, "k": int, ["modulus": [ints, low-order first]]}
//   matrix         {"rows": int, "cols": int, "entries": [row-major ints]}
//   polymatroid    {"r": int, "rank": [2^r ints indexed by bitmask,
//                    bit i-1 <=> ground element i], ["kind": "matroid"]}
//   representation {"field", "ambient": int, "blocks": [matrix...]}
//   network        {"nodes", "edges": [{"id", "head": origin|null, "tail"}],
//                    "sources": [{"edge", "message": 1-based}],
//                    "demands": {node: [1-based message indices]}}
//   solution       {"field", "k": [ints], "n": int, "encodings": {edge: matrix}}
//   script         {"step1": [ints], "step2"/"step3": [{"i": 1-based, "u"}],
//                    "step4": [[ints]...]}
//   problem        {"messages": [ids], "n": int,
//                    "receivers": [{"demand", "side": [ids]}]}
//   code           {"field", "n", "c", "messages": [ids], "encoding": matrix}
//   edge map       {edge id: 1-based ground element}

#include <json.hpp>

#include "polymat/gf.hpp"
#include "polymat/index_coding.hpp"
#include "polymat/matroid.hpp"
#include "polymat/network.hpp"
#include "polymat/polymatroid.hpp"
#include "polymat/representation.hpp"

namespace polymat::io {

using nlohmann::json;

json field_to_json(const gf::Field& f);
gf::Field field_from_json(const json& j);

json matrix_to_json(const gf::Matrix& m);
gf::Matrix matrix_from_json(const json& j, const gf::Field& f);

json table_to_json(const RankTable& t);
RankTable table_from_json(const json& j);

json rep_to_json(const Representation& r);
Representation rep_from_json(const json& j);

json network_to_json(const Network& n);
Network network_from_json(const json& j);

json solution_to_json(const FncSolution& s);
FncSolution solution_from_json(const json& j);

json script_to_json(const ConstructionScript& s);
ConstructionScript script_from_json(const json& j);

json problem_to_json(const IndexProblem& p);
IndexProblem problem_from_json(const json& j);

json code_to_json(const IndexCode& c, const std::vector<std::string>* messages = nullptr);
IndexCode code_from_json(const json& j);

json edge_map_to_json(const EdgeMap& f);
EdgeMap edge_map_from_json(const json& j);

json vectors_to_json(const std::vector<IntVec>& vs);

}  // namespace polymat::io
