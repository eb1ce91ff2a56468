#pragma once

// Matroids as the special case rho(X) <= |X| of a discrete polymatroid,
// conversions in both directions, circuits/bases via the excluded-vector
// machinery, hard-coded presets, and the multi-linear representation check.

#include <string>
#include <vector>

#include "polymat/polymatroid.hpp"
#include "polymat/representation.hpp"

namespace polymat {

class Matroid {
public:
    /// Rank table must satisfy (D1)-(D3) and rho(X) <= |X|.
    explicit Matroid(RankTable table);

    const RankTable& table() const { return d_.table(); }
    unsigned ground_size() const { return d_.ground_size(); }
    unsigned rank() const { return d_.rank(); }
    bool independent(Mask x) const;  // rho(X) == |X|

    const DiscretePolymatroid& dpm() const { return d_; }

    bool operator==(const Matroid& o) const { return d_ == o.d_; }

private:
    DiscretePolymatroid d_;
};

struct MatroidAxiomViolation {
    std::string axiom;   // "I1", "I2" or "I3"
    Mask a = 0, b = 0;   // witness sets
    std::string describe() const;
};

/// Builds a matroid from an independence family after checking the three
/// axioms (contains the empty set; downward closed; exchange). Throws
/// std::invalid_argument carrying the violation description.
Matroid matroid_from_independents(unsigned ground_size, const std::vector<Mask>& independents);

/// The identity embedding M -> D(M): same rank table.
DiscretePolymatroid matroid_to_dpm(const Matroid& m);

/// Inverse direction; rejects tables with rho(X) > |X|.
Matroid dpm_to_matroid(const DiscretePolymatroid& d);

/// Supports of the minimal excluded vectors of D(M): the circuits.
std::vector<Mask> circuits(const Matroid& m);

/// Supports of the basis vectors of D(M): the basis sets.
std::vector<Mask> basis_sets(const Matroid& m);

/// "u24" (the uniform matroid U_{2,4}) or "nonpappus" (rank-3 matroid on
/// 9 points whose dependent lines are hard-coded; see preset_nonpappus_lines).
Matroid preset(const std::string& name);

/// The nine 3-point lines used by the non-Pappus preset.
const std::vector<Mask>& preset_nonpappus_lines();

/// True iff dim(sum of V_i over X) = n * rank_M(X) for every subset X;
/// equivalently, rep is a representation of the scaled polymatroid nD(M).
bool multilinear_rep_check(const Matroid& m, const Representation& rep, unsigned n);

}  // namespace polymat
