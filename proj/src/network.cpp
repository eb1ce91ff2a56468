#include "polymat/network.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace polymat {

Network::Network(std::vector<std::string> nodes, std::vector<Edge> edges,
                 std::vector<std::string> source_edges,
                 std::map<std::string, std::vector<unsigned>> demands)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      sources_(std::move(source_edges)),
      demands_(std::move(demands)) {
    std::set<std::string> node_set(nodes_.begin(), nodes_.end());
    if (node_set.size() != nodes_.size()) throw std::invalid_argument("duplicate node id");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edge_index_.count(edges_[i].id)) throw std::invalid_argument("duplicate edge id");
        edge_index_[edges_[i].id] = i;
        if (!node_set.count(edges_[i].dst))
            throw std::invalid_argument("unknown edge destination " + edges_[i].dst);
        if (edges_[i].src && !node_set.count(*edges_[i].src))
            throw std::invalid_argument("unknown edge origin " + *edges_[i].src);
    }
    // The input edges (no origin) must be exactly the declared sources.
    std::set<std::string> inputs;
    for (const Edge& e : edges_)
        if (!e.src) inputs.insert(e.id);
    std::set<std::string> declared(sources_.begin(), sources_.end());
    if (declared.size() != sources_.size()) throw std::invalid_argument("duplicate source edge");
    if (inputs != declared)
        throw std::invalid_argument("sources must be exactly the edges with in-degree zero");
    for (const auto& [node, msgs] : demands_) {
        if (!node_set.count(node)) throw std::invalid_argument("demand at unknown node " + node);
        for (unsigned m : msgs)
            if (m < 1 || m > sources_.size())
                throw std::invalid_argument("demanded message index out of range");
    }
    // Every origin node must itself be fed, otherwise its outgoing edges
    // would be undeclared in-degree-zero edges.
    std::map<std::string, unsigned> in_deg;
    for (const Edge& e : edges_) ++in_deg[e.dst];
    for (const Edge& e : edges_)
        if (e.src && in_deg[*e.src] == 0)
            throw std::invalid_argument("edge " + e.id + " originates at an unfed node");

    // Topological node order over the intermediate edges (Kahn).
    std::map<std::string, unsigned> pred;
    for (const std::string& v : nodes_) pred[v] = 0;
    for (const Edge& e : edges_)
        if (e.src) ++pred[e.dst];
    std::vector<std::string> queue;
    for (const std::string& v : nodes_)
        if (pred[v] == 0) queue.push_back(v);
    std::sort(queue.begin(), queue.end());
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.erase(queue.begin());
        topo_nodes_.push_back(v);
        std::vector<std::string> released;
        for (const Edge& e : edges_)
            if (e.src && *e.src == v && --pred[e.dst] == 0) released.push_back(e.dst);
        std::sort(released.begin(), released.end());
        queue.insert(queue.end(), released.begin(), released.end());
    }
    if (topo_nodes_.size() != nodes_.size()) throw std::invalid_argument("network has a cycle");

    std::map<std::string, std::size_t> topo_idx;
    for (std::size_t i = 0; i < topo_nodes_.size(); ++i) topo_idx[topo_nodes_[i]] = i;
    ancestral_ = sources_;
    std::vector<std::string> inter;
    for (const Edge& e : edges_)
        if (e.src) inter.push_back(e.id);
    std::sort(inter.begin(), inter.end(), [&](const std::string& a, const std::string& b) {
        const Edge& ea = edge(a);
        const Edge& eb = edge(b);
        auto ka = std::tuple(topo_idx.at(*ea.src), topo_idx.at(ea.dst), a);
        auto kb = std::tuple(topo_idx.at(*eb.src), topo_idx.at(eb.dst), b);
        return ka < kb;
    });
    ancestral_.insert(ancestral_.end(), inter.begin(), inter.end());
}

const Edge& Network::edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw std::invalid_argument("unknown edge " + id);
    return edges_[it->second];
}

bool Network::is_source(const std::string& edge_id) const {
    return std::find(sources_.begin(), sources_.end(), edge_id) != sources_.end();
}

unsigned Network::message_of_source(const std::string& edge_id) const {
    auto it = std::find(sources_.begin(), sources_.end(), edge_id);
    if (it == sources_.end()) throw std::invalid_argument(edge_id + " is not a source edge");
    return static_cast<unsigned>(it - sources_.begin()) + 1;
}

std::vector<std::string> Network::in_edges(const std::string& node) const {
    std::vector<std::string> out;
    for (const Edge& e : edges_)
        if (e.dst == node) out.push_back(e.id);
    return out;
}

std::vector<std::string> Network::out_edges(const std::string& node) const {
    std::vector<std::string> out;
    for (const Edge& e : edges_)
        if (e.src && *e.src == node) out.push_back(e.id);
    return out;
}

bool Network::operator==(const Network& o) const {
    auto key = [](const Network& n) {
        std::vector<std::string> nodes = n.nodes_;
        std::sort(nodes.begin(), nodes.end());
        std::vector<std::tuple<std::string, std::string, std::string>> edges;
        for (const Edge& e : n.edges_)
            edges.emplace_back(e.id, e.src.value_or(""), e.dst);
        std::sort(edges.begin(), edges.end());
        return std::tuple(nodes, edges, n.sources_, n.demands_);
    };
    return key(*this) == key(o);
}

unsigned Dims::total() const { return std::accumulate(k.begin(), k.end(), 0u); }

bool Dims::uniform() const {
    return std::all_of(k.begin(), k.end(), [&](unsigned v) { return v == k[0]; });
}

CheckResult CheckResult::fail(std::string cond, std::string detail) {
    return {false, std::move(cond), std::move(detail)};
}

gf::Matrix message_selector(const gf::Field& f, const Dims& dims, unsigned j) {
    const unsigned total = dims.total();
    unsigned offset = 0;
    for (unsigned i = 0; i + 1 < j; ++i) offset += dims.k[i];
    gf::Matrix sel(f, total, dims.k[j - 1]);
    for (unsigned c = 0; c < dims.k[j - 1]; ++c) sel.set(offset + c, c, 1);
    return sel;
}

namespace {

// Stacked in-edge encodings of a node; zero-width when it has none.
gf::Matrix stacked_inputs(const Network& n, const FncSolution& sol, const std::string& node) {
    std::vector<gf::Matrix> blocks;
    for (const std::string& id : n.in_edges(node)) blocks.push_back(sol.encodings.at(id));
    if (blocks.empty()) return gf::Matrix(sol.field, sol.dims.total(), 0);
    return gf::hconcat(blocks);
}

}  // namespace

CheckResult verify_fnc_solution(const Network& n, const FncSolution& sol) {
    const Dims& dims = sol.dims;
    if (dims.k.size() != n.message_count())
        throw std::invalid_argument("message dimension count mismatch");
    const unsigned total = dims.total();
    for (const Edge& e : n.edges()) {
        auto it = sol.encodings.find(e.id);
        if (it == sol.encodings.end())
            throw std::invalid_argument("missing encoding for edge " + e.id);
        const gf::Matrix& m = it->second;
        std::size_t want = n.is_source(e.id) ? dims.k[n.message_of_source(e.id) - 1] : dims.n;
        if (m.rows() != total || m.cols() != want)
            throw std::invalid_argument("encoding shape mismatch at edge " + e.id);
        if (m.field() != sol.field) throw std::invalid_argument("encoding field mismatch");
    }
    // (N1): source matrices are the canonical selector blocks.
    for (const std::string& s : n.sources()) {
        unsigned j = n.message_of_source(s);
        if (sol.encodings.at(s) != message_selector(sol.field, dims, j))
            return CheckResult::fail("N1", "source edge " + s + " is not the message selector");
    }
    // (N3): every intermediate edge within the span of its origin's inputs.
    for (const Edge& e : n.edges()) {
        if (!e.src) continue;
        gf::Matrix gen = stacked_inputs(n, sol, *e.src);
        if (!gf::in_span(sol.encodings.at(e.id), gen))
            return CheckResult::fail(
                "N3", "edge " + e.id + " leaves the span of node " + *e.src + " inputs");
    }
    // (N2): every demand decodable from the node's incoming spans.
    for (const auto& [node, msgs] : n.demands()) {
        gf::Matrix gen = stacked_inputs(n, sol, node);
        for (unsigned j : msgs) {
            if (!gf::in_span(message_selector(sol.field, dims, j), gen))
                return CheckResult::fail(
                    "N2", "message " + std::to_string(j) + " undecodable at node " + node);
        }
    }
    return CheckResult::pass();
}

namespace {

// The (G)DN conditions only evaluate the rank function on a handful of
// subsets, so they run against an oracle; this keeps solution-derived
// polymatroids (one ground element per edge, possibly more than 16) out of
// the flat-table representation.
using Mask64 = std::uint64_t;
using RhoFn = std::function<unsigned(Mask64)>;

Mask64 f_mask(const EdgeMap& f, const std::vector<std::string>& edge_ids) {
    Mask64 m = 0;
    for (const std::string& id : edge_ids) m |= Mask64(1) << (f.at(id) - 1);
    return m;
}

void check_edge_map(const Network& n, unsigned r, const EdgeMap& f) {
    if (r > 64) throw std::invalid_argument("ground sets beyond 64 elements are unsupported");
    for (const Edge& e : n.edges()) {
        auto it = f.find(e.id);
        if (it == f.end()) throw std::invalid_argument("edge map misses edge " + e.id);
        if (it->second < 1 || it->second > r)
            throw std::invalid_argument("edge map value out of range at " + e.id);
    }
}

// rho(f(In(x))) = rho(f(In(x) u Out(x))) at every node, with Out = outgoing
// intermediate edges plus the source edges of the demanded messages.
CheckResult check_dn3(const Network& n, const RhoFn& rho, const EdgeMap& f, const char* name) {
    for (const std::string& v : n.nodes()) {
        Mask64 in = f_mask(f, n.in_edges(v));
        Mask64 out = f_mask(f, n.out_edges(v));
        auto dem = n.demands().find(v);
        if (dem != n.demands().end())
            for (unsigned j : dem->second) out |= Mask64(1) << (f.at(n.sources()[j - 1]) - 1);
        if (rho(in) != rho(in | out))
            return CheckResult::fail(name, "rank grows across node " + v);
    }
    return CheckResult::pass();
}

CheckResult check_source_injective(const Network& n, const EdgeMap& f, const char* name) {
    std::set<unsigned> seen;
    for (const std::string& s : n.sources())
        if (!seen.insert(f.at(s)).second)
            return CheckResult::fail(name, "f not one-one on source edges");
    return CheckResult::pass();
}

// Membership of a vector supported on the source image: it suffices to
// check |u(A)| <= rho(A) for A inside the support, since any other subset
// only sees a restriction of u.
bool weighted_sources_inside(const RhoFn& rho, const std::vector<std::pair<unsigned, unsigned>>&
                                                   elem_weight) {
    const std::size_t m = elem_weight.size();
    for (Mask64 pick = 1; pick < (Mask64(1) << m); ++pick) {
        Mask64 mask = 0;
        unsigned sum = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (pick & (Mask64(1) << i)) {
                mask |= Mask64(1) << (elem_weight[i].first - 1);
                sum += elem_weight[i].second;
            }
        if (sum > rho(mask)) return false;
    }
    return true;
}

CheckResult gdn_core(const Network& n, unsigned r, const RhoFn& rho, const EdgeMap& f,
                     const Dims& dims, bool generalized) {
    check_edge_map(n, r, f);
    const char* c1 = generalized ? "GDN1" : "DN1";
    const char* c2 = generalized ? "GDN2" : "DN2";
    const char* c4 = generalized ? "GDN4" : "DN3";
    if (auto res = check_source_injective(n, f, c1); !res) return res;
    std::vector<std::pair<unsigned, unsigned>> weights;
    for (const std::string& s : n.sources())
        weights.emplace_back(f.at(s), dims.k[n.message_of_source(s) - 1]);
    if (!weighted_sources_inside(rho, weights))
        return CheckResult::fail(c2, "weighted source indicator escapes the polymatroid");
    if (generalized) {
        for (const std::string& s : n.sources()) {
            unsigned ki = dims.k[n.message_of_source(s) - 1];
            if (rho(Mask64(1) << (f.at(s) - 1)) != ki)
                return CheckResult::fail("GDN3", "rho({f(" + s + ")}) != k_i");
        }
        unsigned max_inter = 0;
        bool has_inter = false;
        for (const Edge& e : n.edges())
            if (e.src) {
                has_inter = true;
                max_inter = std::max(max_inter, rho(Mask64(1) << (f.at(e.id) - 1)));
            }
        if (has_inter && max_inter != dims.n)
            return CheckResult::fail("GDN3", "max intermediate singleton rank != n");
    }
    return check_dn3(n, rho, f, c4);
}

RhoFn table_rho(const DiscretePolymatroid& d) {
    return [&d](Mask64 a) { return d.rho(static_cast<Mask>(a)); };
}

// Rank oracle over a representation's blocks, memoized per subset.
struct RepRho {
    const Representation* rep;
    mutable std::map<Mask64, unsigned> cache;
    unsigned operator()(Mask64 a) const {
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
        std::vector<gf::Matrix> sel;
        for (unsigned i = 0; i < rep->ground_size(); ++i)
            if (a & (Mask64(1) << i)) sel.push_back(rep->blocks()[i]);
        unsigned dim = sel.empty() ? 0 : static_cast<unsigned>(gf::subspace_dim(sel));
        cache.emplace(a, dim);
        return dim;
    }
};

}  // namespace

CheckResult is_dpm_network(const Network& n, const DiscretePolymatroid& d, const EdgeMap& f,
                           unsigned k) {
    Dims dims;
    dims.k.assign(n.message_count(), k);
    dims.n = k;
    return gdn_core(n, d.ground_size(), table_rho(d), f, dims, false);
}

CheckResult is_gdpm_network(const Network& n, const DiscretePolymatroid& d, const EdgeMap& f,
                            const Dims& dims) {
    if (dims.k.size() != n.message_count())
        throw std::invalid_argument("message dimension count mismatch");
    return gdn_core(n, d.ground_size(), table_rho(d), f, dims, true);
}

FncSolution solution_from_representation(const Network& n, const Representation& rep,
                                         const EdgeMap& f, const Dims& dims) {
    // Restrict the representation to the image of f and renumber; the
    // restriction keeps the network discrete polymatroidal.
    std::vector<unsigned> image;
    for (const Edge& e : n.edges()) image.push_back(f.at(e.id));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::map<unsigned, unsigned> renum;
    std::vector<gf::Matrix> blocks;
    for (unsigned g : image) {
        renum[g] = static_cast<unsigned>(blocks.size()) + 1;
        blocks.push_back(rep.block(g));
    }
    Representation sub = Representation::normalized(rep.field(), blocks);
    EdgeMap fr;
    for (const Edge& e : n.edges()) fr[e.id] = renum.at(f.at(e.id));
    if (dims.k.size() != n.message_count())
        throw std::invalid_argument("message dimension count mismatch");
    RepRho rho{&sub, {}};
    if (auto r = gdn_core(n, sub.ground_size(), std::ref(rho), fr, dims, true); !r)
        throw std::invalid_argument("network is not (k_1..k_m;n)-discrete polymatroidal: " +
                                    r.condition + " (" + r.detail + ")");
    if (sub.ambient() != dims.total())
        throw std::invalid_argument("representation rank does not match total message dimension");
    // Normalize so the source blocks concatenate to the identity.
    IntVec sel(sub.ground_size(), 0);
    for (const std::string& s : n.sources())
        sel[fr.at(s) - 1] = dims.k[n.message_of_source(s) - 1];
    Representation norm = normalize_basis_identity(sub, sel);

    FncSolution sol{rep.field(), dims, {}};
    for (const Edge& e : n.edges()) {
        if (!e.src) {
            sol.encodings.emplace(
                e.id, message_selector(rep.field(), dims, n.message_of_source(e.id)));
            continue;
        }
        const gf::Matrix& a = norm.block(fr.at(e.id));
        gf::Matrix m(rep.field(), a.rows(), dims.n);  // zero-pad to n columns
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
        sol.encodings.emplace(e.id, std::move(m));
    }
    if (auto r = verify_fnc_solution(n, sol); !r)
        throw std::logic_error("constructed solution failed verification: " + r.condition);
    return sol;
}

std::pair<Representation, EdgeMap> dpm_from_solution(const Network& n, const FncSolution& sol) {
    if (auto r = verify_fnc_solution(n, sol); !r)
        throw std::invalid_argument("invalid solution: " + r.condition + " (" + r.detail + ")");
    std::vector<gf::Matrix> blocks;
    EdgeMap f;
    for (const std::string& id : n.ancestral_edges()) {
        blocks.push_back(gf::column_space_basis(sol.encodings.at(id)));
        f[id] = static_cast<unsigned>(blocks.size());
    }
    Representation rep = Representation::normalized(sol.field, blocks);
    RepRho rho{&rep, {}};
    if (auto r = gdn_core(n, rep.ground_size(), std::ref(rho), f, sol.dims, true); !r)
        throw std::logic_error("solution-induced polymatroid fails GDN: " + r.condition);
    return {std::move(rep), std::move(f)};
}

namespace {

std::pair<Network, EdgeMap> construct_network(const DiscretePolymatroid& d,
                                              const ConstructionScript& script, bool alg2) {
    const unsigned r = d.ground_size();
    const IntVec& b = script.step1;
    if (b.size() != r) throw std::invalid_argument("step-1 vector length mismatch");
    const auto& bases = d.bases();
    if (std::find(bases.begin(), bases.end(), b) == bases.end())
        throw std::invalid_argument("step-1 vector " + vec::show(b) + " is not a basis vector");
    const unsigned rho_max = d.rho_max();
    for (unsigned i = 0; i < r; ++i) {
        if (b[i] == 0) continue;
        if (!alg2 && b[i] != rho_max)
            throw std::invalid_argument(
                "step-1 vector must have all nonzero components equal to rho_max");
        if (alg2 && d.rho_singleton(i + 1) != b[i])
            throw std::invalid_argument(
                "step-1 basis vector must satisfy rho({i}) = b_i on its support");
    }

    std::vector<std::string> nodes;
    std::vector<Edge> edges;
    std::vector<std::string> sources;
    std::map<std::string, std::vector<unsigned>> demands;
    EdgeMap f;

    Mask t_mask = vec::support(b);
    const Mask m_mask = t_mask;
    std::map<unsigned, unsigned> msg_index;  // ground element -> 1-based message
    for (unsigned i = 1; i <= r; ++i) {
        if (!(t_mask & (Mask(1) << (i - 1)))) continue;
        nodes.push_back(std::to_string(i));
        std::string eid = "e" + std::to_string(i);
        edges.push_back({eid, std::nullopt, std::to_string(i)});
        sources.push_back(eid);
        f[eid] = i;
        msg_index[i] = static_cast<unsigned>(sources.size());
    }

    auto check_pick = [&](const ConstructionScript::Pick& p, const char* step) {
        if (p.i < 1 || p.i > r) throw std::invalid_argument("script ground element out of range");
        auto ci = d.reduced_unit_mev(p.i);
        if (std::find(ci.begin(), ci.end(), p.u) == ci.end())
            throw std::invalid_argument(std::string(step) + " choice " + vec::show(p.u) +
                                        " is not a reduced " + std::to_string(p.i) +
                                        "-unit minimal excluded vector");
    };

    for (const auto& p : script.step2) {
        check_pick(p, "step-2");
        Mask bit = Mask(1) << (p.i - 1);
        if (t_mask & bit)
            throw std::invalid_argument("step-2 element " + std::to_string(p.i) +
                                        " already built");
        Mask conn = vec::support(p.u) & ~bit;
        if ((conn & t_mask) != conn)
            throw std::invalid_argument("step-2 support of " + vec::show(p.u) + " not inside T");
        std::string prim = std::to_string(p.i) + "p";
        std::string plain = std::to_string(p.i);
        nodes.push_back(prim);
        nodes.push_back(plain);
        for (unsigned j = 1; j <= r; ++j) {
            if (!(conn & (Mask(1) << (j - 1)))) continue;
            std::string eid = std::to_string(j) + "-" + prim;
            edges.push_back({eid, std::to_string(j), prim});
            f[eid] = j;
        }
        std::string eid = prim + "-" + plain;
        edges.push_back({eid, prim, plain});
        f[eid] = p.i;
        t_mask |= bit;
    }

    unsigned next_node = r;
    auto add_receiver = [&](Mask conn, const std::vector<unsigned>& msgs) {
        std::string name = std::to_string(++next_node);
        nodes.push_back(name);
        for (unsigned j = 1; j <= r; ++j) {
            if (!(conn & (Mask(1) << (j - 1)))) continue;
            std::string eid = std::to_string(j) + "-" + name;
            edges.push_back({eid, std::to_string(j), name});
            f[eid] = j;
        }
        demands[name] = msgs;
    };

    for (const auto& p : script.step3) {
        check_pick(p, "step-3");
        Mask bit = Mask(1) << (p.i - 1);
        if (!(m_mask & bit))
            throw std::invalid_argument("step-3 element " + std::to_string(p.i) +
                                        " is not a source element");
        Mask sup = vec::support(p.u);
        if ((sup & t_mask) != sup)
            throw std::invalid_argument("step-3 support of " + vec::show(p.u) + " not inside T");
        add_receiver(sup & ~bit, {msg_index.at(p.i)});
    }

    for (const IntVec& sb : script.step4) {
        if (std::find(bases.begin(), bases.end(), sb) == bases.end())
            throw std::invalid_argument("step-4 vector " + vec::show(sb) +
                                        " is not a basis vector");
        Mask sup = vec::support(sb);
        if ((sup & t_mask) != sup)
            throw std::invalid_argument("step-4 support of " + vec::show(sb) + " not inside T");
        std::vector<unsigned> all;
        for (auto& [g, idx] : msg_index) all.push_back(idx);
        std::sort(all.begin(), all.end());
        add_receiver(sup, all);
    }

    Network net(std::move(nodes), std::move(edges), std::move(sources), std::move(demands));

    // Theorem guarantee for the constructed network; a failure here means a
    // broken construction, not bad input.
    if (!alg2) {
        if (auto r2 = is_dpm_network(net, d, f, rho_max); !r2)
            throw std::logic_error("constructed network fails " + r2.condition);
    } else {
        Dims dims;
        for (const std::string& s : net.sources()) dims.k.push_back(b[f.at(s) - 1]);
        dims.n = rho_max;
        if (auto r2 = is_gdpm_network(net, d, f, dims); !r2)
            throw std::logic_error("constructed network fails " + r2.condition);
    }
    return {std::move(net), std::move(f)};
}

}  // namespace

std::pair<Network, EdgeMap> construct_network_alg1(const DiscretePolymatroid& d,
                                                   const ConstructionScript& script) {
    return construct_network(d, script, false);
}

std::pair<Network, EdgeMap> construct_network_alg2(const DiscretePolymatroid& d,
                                                   const ConstructionScript& script) {
    return construct_network(d, script, true);
}

namespace {

struct SearchState {
    const Network& net;
    gf::Field field;
    Dims dims;
    std::map<std::string, gf::Matrix> enc;  // assigned so far
    std::uint64_t budget;
    std::vector<std::string> order;  // intermediate edges, ancestral order
};

// Upper bound on what can still reach each node: assigned edges contribute
// their actual span, unassigned ones the full potential of their origin.
// A demand whose selector escapes this bound can never be satisfied.
bool demands_reachable(SearchState& st) {
    std::map<std::string, gf::Matrix> reach;
    for (const std::string& v : st.net.topo_nodes()) {
        std::vector<gf::Matrix> parts;
        for (const std::string& id : st.net.in_edges(v)) {
            auto it = st.enc.find(id);
            if (it != st.enc.end())
                parts.push_back(it->second);
            else
                parts.push_back(reach.at(*st.net.edge(id).src));
        }
        gf::Matrix span = parts.empty() ? gf::Matrix(st.field, st.dims.total(), 0)
                                        : gf::column_space_basis(gf::hconcat(parts));
        auto dem = st.net.demands().find(v);
        if (dem != st.net.demands().end())
            for (unsigned j : dem->second)
                if (!gf::in_span(message_selector(st.field, st.dims, j), span)) return false;
        reach.emplace(v, std::move(span));
    }
    return true;
}

bool search_edges(SearchState& st, std::size_t pos, FncSolution& out) {
    if (pos == st.order.size()) {
        FncSolution sol{st.field, st.dims, st.enc};
        if (verify_fnc_solution(st.net, sol)) {
            out = std::move(sol);
            return true;
        }
        return false;
    }
    const std::string& id = st.order[pos];
    const Edge& e = st.net.edge(id);
    const auto in_ids = st.net.in_edges(*e.src);
    // Equivalence reduction: an edge out of a single-input node may carry
    // the whole input. Any solution stays a solution after this swap (its
    // downstream spans only grow), so one canonical candidate suffices.
    if (in_ids.size() == 1 && st.enc.at(in_ids[0]).cols() <= st.dims.n) {
        if (st.budget == 0) throw CapExceeded("network solution search cap exceeded");
        --st.budget;
        const gf::Matrix& g = st.enc.at(in_ids[0]);
        gf::Matrix m(st.field, g.rows(), st.dims.n);
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) m.set(i, j, g.at(i, j));
        st.enc.emplace(id, std::move(m));
        if (demands_reachable(st) && search_edges(st, pos + 1, out)) return true;
        st.enc.erase(id);
        return false;
    }
    std::vector<gf::Matrix> parts;
    for (const std::string& in : in_ids) parts.push_back(st.enc.at(in));
    gf::Matrix basis = parts.empty() ? gf::Matrix(st.field, st.dims.total(), 0)
                                     : gf::column_space_basis(gf::hconcat(parts));
    const unsigned q = st.field.size();
    const std::size_t wn = basis.cols() * st.dims.n;
    // Odometer over the coefficient matrix W; candidates M = basis * W are
    // pairwise distinct because basis has full column rank.
    std::vector<gf::Value> w(wn, 0);
    while (true) {
        if (st.budget == 0) throw CapExceeded("network solution search cap exceeded");
        --st.budget;
        gf::Matrix wm(st.field, basis.cols(), st.dims.n, std::vector<gf::Value>(w));
        st.enc.emplace(id, basis * wm);
        if (demands_reachable(st) && search_edges(st, pos + 1, out)) return true;
        st.enc.erase(id);
        std::size_t t = wn;
        while (t > 0 && w[t - 1] + 1u == q) w[--t] = 0;
        if (t == 0) return false;
        ++w[t - 1];
    }
}

}  // namespace

std::optional<FncSolution> search_fnc_solution(const Network& n, const gf::Field& field,
                                               const Dims& dims, std::uint64_t cap) {
    if (dims.k.size() != n.message_count())
        throw std::invalid_argument("message dimension count mismatch");
    SearchState st{n, field, dims, {}, cap, {}};
    for (const std::string& s : n.sources())
        st.enc.emplace(s, message_selector(field, dims, n.message_of_source(s)));
    for (const std::string& id : n.ancestral_edges())
        if (!n.is_source(id)) st.order.push_back(id);
    FncSolution out{field, dims, {}};
    if (!demands_reachable(st)) return std::nullopt;
    if (search_edges(st, 0, out)) return out;
    return std::nullopt;
}

std::string Rational::show() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

namespace {
Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    long long g = std::gcd(num, den);
    if (g) {
        num /= g;
        den /= g;
    }
    return {num, den};
}
}  // namespace

Rates rates(const FncSolution& sol) {
    Rates r;
    for (unsigned ki : sol.dims.k) r.per_message.push_back(make_rational(ki, sol.dims.n));
    long long sum = 0;
    for (unsigned ki : sol.dims.k) sum += ki;
    r.average = make_rational(sum, (long long)sol.dims.n * sol.dims.k.size());
    r.uniform = sol.dims.uniform();
    return r;
}

}  // namespace polymat
