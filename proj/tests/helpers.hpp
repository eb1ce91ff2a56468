#pragma once

// Shared fixture loaders and small generators for the test suites.

#include <random>

#include "polymat/bundled.hpp"
#include "polymat/index_coding.hpp"
#include "polymat/json_io.hpp"
#include "polymat/matroid.hpp"

namespace testutil {

using namespace polymat;
using io::json;

inline DiscretePolymatroid table_of(const std::string& name) {
    return DiscretePolymatroid{io::table_from_json(json::parse(bundled(name).json))};
}

inline Representation rep_of(const std::string& name) {
    return io::rep_from_json(json::parse(bundled(name).json));
}

inline Network net_of(const std::string& name) {
    return io::network_from_json(json::parse(bundled(name).json));
}

inline FncSolution sol_of(const std::string& name) {
    return io::solution_from_json(json::parse(bundled(name).json));
}

inline ConstructionScript script_of(const std::string& name) {
    return io::script_from_json(json::parse(bundled(name).json));
}

inline IndexProblem problem_of(const std::string& name) {
    return io::problem_from_json(json::parse(bundled(name).json));
}

inline IndexCode code_of(const std::string& name) {
    return io::code_from_json(json::parse(bundled(name).json));
}

inline gf::Matrix random_matrix(const gf::Field& f, std::size_t rows, std::size_t cols,
                                std::mt19937_64& rng) {
    gf::Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, static_cast<gf::Value>(rng() % f.size()));
    return m;
}

// Random small discrete polymatroids via random subspace arrangements
// (always valid and representable by construction).
inline DiscretePolymatroid random_dpm(unsigned r, unsigned ambient, const gf::Field& f,
                                      std::mt19937_64& rng) {
    std::vector<gf::Matrix> blocks;
    for (unsigned i = 0; i < r; ++i) {
        std::size_t cols = rng() % (ambient + 1);
        blocks.push_back(gf::column_space_basis(random_matrix(f, ambient, cols, rng)));
    }
    Representation rep = Representation::normalized(f, blocks);
    return DiscretePolymatroid{rank_fn_of(rep)};
}

}  // namespace testutil
