#pragma once

// Discrete polymatroids over a ground set {1..r}: rank-axiom validation,
// vector/basis enumeration, excluded and minimal excluded vectors, the
// reduced i-unit sets driving the network constructions, scaling, and the
// Ingleton representability test.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polymat/errors.hpp"

namespace polymat {

/// Vector in Z_{>=0}^r, indexed 0-based internally (component i-1 holds the
/// value for ground element i).
using IntVec = std::vector<unsigned>;
using Mask = std::uint32_t;  // subset of the ground set; bit i-1 <=> element i

namespace vec {
unsigned sum(const IntVec& u);
unsigned sum_on(const IntVec& u, Mask a);
bool leq(const IntVec& u, const IntVec& v);
bool lt(const IntVec& u, const IntVec& v);
IntVec join(const IntVec& u, const IntVec& v);   // componentwise max
Mask support(const IntVec& u);
IntVec unit(unsigned i, unsigned r);             // epsilon_{i,r}, i 1-based
std::string show(const IntVec& u);               // "(1,2,0)"
}  // namespace vec

constexpr unsigned kMaxGroundSize = 16;
constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

/// Set function on all 2^r subsets, stored flat and indexed by bitmask.
class RankTable {
public:
    RankTable(unsigned ground_size, std::vector<unsigned> values);

    unsigned ground_size() const { return r_; }
    unsigned operator[](Mask a) const { return v_[a]; }
    unsigned singleton(unsigned i) const { return v_[Mask(1) << (i - 1)]; }  // i 1-based
    Mask full_mask() const { return (Mask(1) << r_) - 1; }
    const std::vector<unsigned>& values() const { return v_; }

    bool operator==(const RankTable& o) const { return r_ == o.r_ && v_ == o.v_; }
    bool operator!=(const RankTable& o) const { return !(*this == o); }

private:
    unsigned r_;
    std::vector<unsigned> v_;
};

struct RankViolation {
    std::string axiom;  // "D1", "D2" or "D3"
    Mask a = 0, b = 0;  // witness subsets
    std::string describe() const;
};

/// Checks (D1) monotonicity, (D2) submodularity, (D3) rho(empty) = 0.
/// Submodularity is verified through the equivalent local exchange condition
/// rho(A+i) + rho(A+j) >= rho(A+i+j) + rho(A); the first violation in
/// bitmask order is reported.
std::optional<RankViolation> rank_validate(const RankTable& t);

class DiscretePolymatroid {
public:
    /// Throws std::invalid_argument when the table fails rank_validate.
    explicit DiscretePolymatroid(RankTable table);

    const RankTable& table() const { return t_; }
    unsigned ground_size() const { return t_.ground_size(); }
    unsigned rank() const { return t_[t_.full_mask()]; }
    unsigned rho(Mask a) const { return t_[a]; }
    unsigned rho_singleton(unsigned i) const { return t_.singleton(i); }
    unsigned rho_max() const;

    /// Membership: |u(A)| <= rho(A) for every subset A.
    bool contains(const IntVec& u) const;

    /// Maximal vectors; all share component sum rank(). Cached.
    const std::vector<IntVec>& bases() const;

    /// All vectors of the polymatroid, sorted lexicographically. The box
    /// product prod(rho({i})+1) is checked against the cap first.
    const std::vector<IntVec>& vectors(std::uint64_t cap = kDefaultEnumCap) const;

    /// In-box vectors not in the polymatroid, sorted lexicographically.
    std::vector<IntVec> excluded_vectors(std::uint64_t cap = kDefaultEnumCap) const;

    /// Excluded vectors with no excluded vector strictly below them.
    std::vector<IntVec> minimal_excluded_vectors(std::uint64_t cap = kDefaultEnumCap) const;

    /// C'_i: minimal excluded vectors whose i-th component is exactly one.
    std::vector<IntVec> unit_mev(unsigned i, std::uint64_t cap = kDefaultEnumCap) const;

    /// C_i: elements of C'_i whose support is minimal within C'_i.
    std::vector<IntVec> reduced_unit_mev(unsigned i, std::uint64_t cap = kDefaultEnumCap) const;

    /// Rank table multiplied by n >= 1 (the discrete polymatroid nD).
    DiscretePolymatroid scale(unsigned n) const;

    bool operator==(const DiscretePolymatroid& o) const { return t_ == o.t_; }

private:
    RankTable t_;
    mutable std::vector<IntVec> bases_;
    mutable bool bases_done_ = false;
    mutable std::vector<IntVec> vectors_;
    mutable bool vectors_done_ = false;
};

/// rho(A) = max |u(A)| over the given vectors (must be nonempty).
RankTable rank_from_vectors(unsigned ground_size, std::span<const IntVec> vectors);

struct IngletonViolation {
    Mask x1, x2, x3, x4;
    unsigned lhs, rhs;
    std::string describe() const;
};

enum class IngletonScope { Singletons, AllSubsets };

/// Evaluates the Ingleton inequality
///   rho(X1)+rho(X2)+rho(X123)+rho(X124)+rho(X34)
///     <= rho(X12)+rho(X13)+rho(X14)+rho(X23)+rho(X24)
/// over the requested quadruples; reports the first violation. A violation
/// certifies that the polymatroid is not representable over any field.
std::optional<IngletonViolation> ingleton_check(
    const DiscretePolymatroid& d, IngletonScope scope = IngletonScope::Singletons,
    std::uint64_t cap = kDefaultEnumCap);
std::optional<IngletonViolation> ingleton_check(
    const DiscretePolymatroid& d, std::span<const std::array<Mask, 4>> quadruples);

}  // namespace polymat
