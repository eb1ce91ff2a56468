#pragma once

// Finite-field representations of discrete polymatroids: one generator
// matrix per ground element, rank-function extraction, the exhaustive
// canonical representation search, and basis-identity normalization.

#include <cstdint>
#include <optional>

#include "polymat/gf.hpp"
#include "polymat/polymatroid.hpp"

namespace polymat {

/// Vector subspaces V_1..V_r of field^ambient, each given by a generator
/// matrix of full column rank. Normal form keeps ambient equal to the
/// dimension of V_1 + ... + V_r.
class Representation {
public:
    Representation(gf::Field field, unsigned ambient, std::vector<gf::Matrix> blocks);

    const gf::Field& field() const { return field_; }
    unsigned ambient() const { return ambient_; }
    unsigned ground_size() const { return static_cast<unsigned>(blocks_.size()); }
    const std::vector<gf::Matrix>& blocks() const { return blocks_; }
    const gf::Matrix& block(unsigned i) const { return blocks_.at(i - 1); }  // i 1-based

    /// Re-embeds into ambient = dim(sum of blocks) when the given ambient is
    /// larger, expressing every block in a row basis of the total span.
    static Representation normalized(gf::Field field, const std::vector<gf::Matrix>& blocks);

private:
    gf::Field field_;
    unsigned ambient_;
    std::vector<gf::Matrix> blocks_;
};

/// rho(X) = dim(sum of V_i over X) for every subset X.
RankTable rank_fn_of(const Representation& rep);

/// Exact equality of rank_fn_of(rep) with d's table.
bool is_representation(const Representation& rep, const DiscretePolymatroid& d);

/// Depth-first search over canonical subspace tuples: block i ranges over
/// the canonical dim-rho({i}) subspaces of field^ambient, pruning as soon as
/// a subset of the placed blocks misses its rank. Returns the first
/// representation in canonical order, or nullopt after exhaustion.
/// ambient must equal rank(d) (the normalized search space).
std::optional<Representation> find_representation(const DiscretePolymatroid& d,
                                                  const gf::Field& field, unsigned ambient,
                                                  std::uint64_t cap = kDefaultEnumCap);

/// Left-multiplies every block by B^{-1}, where B concatenates the b_i
/// leading columns of each block i. The selected columns become the
/// identity; the rank function is unchanged. Throws std::domain_error when
/// the selection is singular.
Representation normalize_basis_identity(const Representation& rep, const IntVec& b);

/// For a basis vector b of the represented polymatroid, picks b_i columns
/// from each block i such that the chosen columns jointly have full rank
/// rank(D) (the Lemma-7 subspaces V'_i). Greedy with backtracking; throws
/// std::domain_error if no selection exists.
std::vector<gf::Matrix> select_basis_subblocks(const Representation& rep, const IntVec& b);

}  // namespace polymat
