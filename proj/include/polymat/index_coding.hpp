#pragma once

// Index coding with side information: problems, linear codes and their
// verification, perfectness, the rank-condition certificate (C1)/(C2)
// linking codes to representable discrete polymatroids, the canonical
// problem built from a discrete polymatroid, and the randomized
// Gamma-matrix code construction with its field-size threshold N(D).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polymat/gf.hpp"
#include "polymat/network.hpp"  // CheckResult
#include "polymat/polymatroid.hpp"
#include "polymat/representation.hpp"

namespace polymat {

/// One sender broadcasting to receivers that each demand one message while
/// holding a side-information subset. Receivers are kept deduplicated and
/// sorted (the receiver collection is a set).
class IndexProblem {
public:
    struct Receiver {
        std::string demand;
        std::vector<std::string> side;  // sorted message ids, demand excluded
        bool operator==(const Receiver& o) const = default;
        auto operator<=>(const Receiver& o) const = default;
    };

    IndexProblem(std::vector<std::string> messages, std::vector<Receiver> receivers);

    const std::vector<std::string>& messages() const { return messages_; }
    const std::vector<Receiver>& receivers() const { return receivers_; }
    unsigned message_count() const { return static_cast<unsigned>(messages_.size()); }
    unsigned index_of(const std::string& id) const;  // 1-based

private:
    std::vector<std::string> messages_;
    std::vector<Receiver> receivers_;
};

/// Linear index code of dimension n and length c: the broadcast is
/// y * encoding for the concatenated message row vector y of length n*m.
struct IndexCode {
    gf::Field field;
    unsigned n = 1;
    unsigned c = 0;
    gf::Matrix encoding;  // (n*m) x c
};

/// Maximum number of receivers sharing one exact side-information set; the
/// lower bound on c/n for any solution.
unsigned m_of(const IndexProblem& p);

/// Every receiver can decode: its demand selector lies in the span of the
/// encoding columns together with its side-information selectors.
CheckResult verify_index_code(const IndexProblem& p, const IndexCode& code);

/// c = n * m_of(p) exactly. Throws std::invalid_argument when the code does
/// not verify.
bool is_perfect(const IndexProblem& p, const IndexCode& code);

/// The rank conditions tying a representation on ground {1..m+1} to an
/// (n, c) linear solution: rank nm total, (C1) singleton ranks n with the
/// first m jointly full and rho({m+1}) = c, (C2) decodability ranks per
/// receiver.
CheckResult thm5_check(const IndexProblem& p, const Representation& rep, unsigned n, unsigned c);

/// Forward direction: normalize the message blocks to the identity and read
/// off block m+1 as the encoding.
IndexCode code_from_thm5_rep(const IndexProblem& p, const Representation& rep, unsigned n,
                             unsigned c);

/// Backward direction: message selector blocks plus the encoding matrix as
/// block m+1. The encoding must have full column rank.
Representation thm5_rep_from_code(const IndexProblem& p, const IndexCode& code);

/// The canonical index coding problem of a discrete polymatroid: messages
/// x1..xk plus y_i_j (j up to rho({i})), receiver classes S1 (per basis
/// vector), S2 (per minimal excluded vector) and R3 (y-messages against X).
IndexProblem construct_problem(const DiscretePolymatroid& d,
                               std::uint64_t cap = kDefaultEnumCap);

/// Field-size threshold for the randomized construction:
///   max_i sum over bases b with b_i > 0 of
///     C(rho({i}), b_i - 1) * prod_{j in supp(b), j != i} C(rho({j}), b_j).
/// Fields strictly larger admit a successful Gamma assignment.
std::uint64_t n_bound(const DiscretePolymatroid& d);

/// From a verified perfect dimension-n solution of construct_problem(d),
/// recover a representation of the scaled polymatroid nD by normalizing the
/// y-block of the encoding to the identity and slicing the x-block.
Representation rep_from_perfect_code(const DiscretePolymatroid& d, const IndexCode& code);

struct Thm7Options {
    std::uint64_t seed = 1;
    unsigned retry_limit = 0;        // 0: default 64 * ground size
    std::uint64_t exhaustive_cap = kDefaultEnumCap;
    unsigned* attempts_used = nullptr;  // optional: 0 means the identity assignment worked
};

/// Builds a perfect dimension-n code for construct_problem(d) from a
/// representation of nD over a prime field, lifted into target_field:
/// samples square Gamma_i until all are invertible and every basis-indexed
/// column-block choice of [A_1 Gamma_1 .. A_r Gamma_r] is invertible, then
/// emits f(Z) = y + x * [G_1 .. G_r]. The identity assignment is tried
/// first, then seeded random draws, then exhaustive enumeration.
IndexCode code_from_representation_thm7(const DiscretePolymatroid& d,
                                        const Representation& rep_of_nd,
                                        const gf::Field& target_field,
                                        const Thm7Options& opts = {});

/// Exhausts the canonical c-dimensional subspaces of field^(nm) as encoding
/// column spans (code equivalence under invertible right multiplication is
/// quotiented away) and returns the first verified perfect code.
std::optional<IndexCode> search_perfect_code(const IndexProblem& p, const gf::Field& field,
                                             unsigned n, std::uint64_t cap = kDefaultEnumCap);

}  // namespace polymat
