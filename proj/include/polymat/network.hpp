#pragma once

// The network-coding side: acyclic networks with message-generating input
// edges, fractional linear solutions and their verification, the
// (G)DN conditions tying a network to a discrete polymatroid, the
// solution <-> representation translations, the two construction
// algorithms driven by reduced unit minimal excluded vectors, and the
// exhaustive linear solution search.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polymat/gf.hpp"
#include "polymat/polymatroid.hpp"
#include "polymat/representation.hpp"

namespace polymat {

/// Directed edge. In the file format the origin vertex is called the
/// "head"; input edges (the message generators) have no origin.
struct Edge {
    std::string id;
    std::optional<std::string> src;  // nullopt for input edges
    std::string dst;
};

/// Directed acyclic network whose messages are generated at the input edges,
/// listed in message order. Demands name messages by 1-based index.
class Network {
public:
    Network(std::vector<std::string> nodes, std::vector<Edge> edges,
            std::vector<std::string> source_edges,
            std::map<std::string, std::vector<unsigned>> demands);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(const std::string& id) const;
    const std::vector<std::string>& sources() const { return sources_; }
    const std::map<std::string, std::vector<unsigned>>& demands() const { return demands_; }
    unsigned message_count() const { return static_cast<unsigned>(sources_.size()); }

    bool is_source(const std::string& edge_id) const;
    unsigned message_of_source(const std::string& edge_id) const;  // 1-based

    /// Ancestral ordering: input edges in message order, then intermediate
    /// edges such that every edge entering src(e) precedes e.
    const std::vector<std::string>& ancestral_edges() const { return ancestral_; }
    /// Topological node order (every intermediate edge goes forward).
    const std::vector<std::string>& topo_nodes() const { return topo_nodes_; }

    std::vector<std::string> in_edges(const std::string& node) const;
    std::vector<std::string> out_edges(const std::string& node) const;

    bool operator==(const Network& o) const;

private:
    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::string> sources_;
    std::map<std::string, std::vector<unsigned>> demands_;
    std::vector<std::string> ancestral_;
    std::vector<std::string> topo_nodes_;
    std::map<std::string, std::size_t> edge_index_;
};

/// Edge id -> ground element (1-based) of a discrete polymatroid.
using EdgeMap = std::map<std::string, unsigned>;

struct Dims {
    std::vector<unsigned> k;  // message dimensions k_1..k_m
    unsigned n = 0;           // intermediate edge dimension
    unsigned total() const;
    bool uniform() const;
};

/// Linear FNC solution: one global encoding matrix per edge, shape
/// (sum k_i) x k_i for source edge i and (sum k_i) x n otherwise.
struct FncSolution {
    gf::Field field;
    Dims dims;
    std::map<std::string, gf::Matrix> encodings;
};

struct CheckResult {
    bool ok = true;
    std::string condition;  // violated condition, e.g. "N2" or "GDN3"
    std::string detail;
    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string cond, std::string detail);
    explicit operator bool() const { return ok; }
};

/// Selector block of message j (1-based): columns of the identity on the
/// k_j coordinates of message j.
gf::Matrix message_selector(const gf::Field& f, const Dims& dims, unsigned j);

/// (N1) source matrices are the canonical selectors, (N3) every
/// intermediate edge lies in the span of its origin's inputs, (N2) every
/// demand is decodable from the incoming spans.
CheckResult verify_fnc_solution(const Network& n, const FncSolution& sol);

/// (DN1) f one-one on sources, (DN2) rho_max(D) times the source indicator
/// lies in D, (DN3) rho(f(In(x))) = rho(f(In(x) u Out(x))) at every node,
/// with Out(x) the outgoing intermediate edges together with the source
/// edges of the demanded messages.
CheckResult is_dpm_network(const Network& n, const DiscretePolymatroid& d, const EdgeMap& f,
                           unsigned k);

/// The fractional generalization: (GDN1) injectivity, (GDN2) the k-weighted
/// source indicator lies in D, (GDN3) rho({f(i)}) = k_i on sources and the
/// intermediate maximum equals n, (GDN4) as DN3.
CheckResult is_gdpm_network(const Network& n, const DiscretePolymatroid& d, const EdgeMap& f,
                            const Dims& dims);

/// Builds the solution M_e = A_{f(e)} from a representation after
/// normalizing the source blocks to the identity; intermediate blocks are
/// zero-padded to n columns. Precondition: is_gdpm_network holds for the
/// represented polymatroid restricted to the image of f.
FncSolution solution_from_representation(const Network& n, const Representation& rep,
                                         const EdgeMap& f, const Dims& dims);

/// Converse direction of the representability theorems: one block per edge
/// (the column span of its encoding matrix), f mapping the i-th edge in
/// ancestral order to ground element i.
std::pair<Representation, EdgeMap> dpm_from_solution(const Network& n, const FncSolution& sol);

/// Replayable record of every choice the construction algorithms leave
/// open. Step-2/3 entries name the ground element and the chosen reduced
/// i-unit minimal excluded vector; step 4 lists basis vectors.
struct ConstructionScript {
    IntVec step1;
    struct Pick {
        unsigned i = 0;  // 1-based ground element
        IntVec u;
    };
    std::vector<Pick> step2;
    std::vector<Pick> step3;
    std::vector<IntVec> step4;
};

/// ALGORITHM 1: step-1 vector must be a basis vector whose nonzero
/// components all equal rho_max(D). Postcondition (asserted): the result is
/// discrete polymatroidal with respect to D.
std::pair<Network, EdgeMap> construct_network_alg1(const DiscretePolymatroid& d,
                                                   const ConstructionScript& script);

/// ALGORITHM 2: step-1 basis vector b must satisfy rho({i}) = b_i on its
/// support. Postcondition (asserted): (k_i = b_i; n = rho_max(D))-discrete
/// polymatroidal with respect to D.
std::pair<Network, EdgeMap> construct_network_alg2(const DiscretePolymatroid& d,
                                                   const ConstructionScript& script);

/// Exhaustive depth-first search for a linear FNC solution: intermediate
/// edges are assigned in ancestral order from the span of their origin's
/// inputs, pruning whenever some demand has become unreachable. Returns the
/// canonically first solution; throws CapExceeded when the candidate budget
/// is exhausted (distinct from a completed "none").
std::optional<FncSolution> search_fnc_solution(const Network& n, const gf::Field& field,
                                               const Dims& dims,
                                               std::uint64_t cap = kDefaultEnumCap);

struct Rational {
    long long num = 0, den = 1;  // reduced, den > 0
    std::string show() const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

struct Rates {
    std::vector<Rational> per_message;  // k_i / n
    Rational average;
    bool uniform = false;
};

Rates rates(const FncSolution& sol);

}  // namespace polymat
