#include "polymat/json_io.hpp"

namespace polymat::io {

json field_to_json(const gf::Field& f) {
    json j{{"p", f.characteristic()}, {"k", f.degree()}};
    if (f.degree() > 1) j["modulus"] = f.modulus();
    return j;
}

gf::Field field_from_json(const json& j) {
    unsigned p = j.at("p").get<unsigned>();
    unsigned k = j.at("k").get<unsigned>();
    if (j.contains("modulus"))
        return gf::Field(p, k, j.at("modulus").get<std::vector<unsigned>>());
    return gf::Field(p, k);
}

json matrix_to_json(const gf::Matrix& m) {
    std::vector<unsigned> entries(m.entries().begin(), m.entries().end());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

gf::Matrix matrix_from_json(const json& j, const gf::Field& f) {
    auto raw = j.at("entries").get<std::vector<unsigned>>();
    std::vector<gf::Value> entries(raw.begin(), raw.end());
    return gf::Matrix(f, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                      std::move(entries));
}

json table_to_json(const RankTable& t) {
    return json{{"r", t.ground_size()}, {"rank", t.values()}};
}

RankTable table_from_json(const json& j) {
    return RankTable(j.at("r").get<unsigned>(), j.at("rank").get<std::vector<unsigned>>());
}

json rep_to_json(const Representation& r) {
    json blocks = json::array();
    for (const gf::Matrix& b : r.blocks()) blocks.push_back(matrix_to_json(b));
    return json{{"field", field_to_json(r.field())}, {"ambient", r.ambient()},
                {"blocks", std::move(blocks)}};
}

Representation rep_from_json(const json& j) {
    gf::Field f = field_from_json(j.at("field"));
    std::vector<gf::Matrix> blocks;
    for (const json& b : j.at("blocks")) blocks.push_back(matrix_from_json(b, f));
    return Representation::normalized(f, blocks);
}

json network_to_json(const Network& n) {
    json edges = json::array();
    for (const Edge& e : n.edges()) {
        json je{{"id", e.id}, {"tail", e.dst}};
        je["head"] = e.src ? json(*e.src) : json(nullptr);
        edges.push_back(std::move(je));
    }
    json sources = json::array();
    for (const std::string& s : n.sources())
        sources.push_back(json{{"edge", s}, {"message", n.message_of_source(s)}});
    json demands = json::object();
    for (const auto& [node, msgs] : n.demands()) demands[node] = msgs;
    return json{{"nodes", n.nodes()}, {"edges", std::move(edges)},
                {"sources", std::move(sources)}, {"demands", std::move(demands)}};
}

Network network_from_json(const json& j) {
    std::vector<Edge> edges;
    for (const json& je : j.at("edges")) {
        Edge e;
        e.id = je.at("id").get<std::string>();
        e.dst = je.at("tail").get<std::string>();
        if (je.contains("head") && !je.at("head").is_null())
            e.src = je.at("head").get<std::string>();
        edges.push_back(std::move(e));
    }
    // Sources carry explicit message indices; order them accordingly.
    std::vector<std::pair<unsigned, std::string>> srcs;
    for (const json& js : j.at("sources"))
        srcs.emplace_back(js.at("message").get<unsigned>(), js.at("edge").get<std::string>());
    std::sort(srcs.begin(), srcs.end());
    std::vector<std::string> sources;
    for (auto& [msg, id] : srcs) {
        if (msg != sources.size() + 1)
            throw std::invalid_argument("source message indices must be 1..m");
        sources.push_back(id);
    }
    std::map<std::string, std::vector<unsigned>> demands;
    if (j.contains("demands"))
        for (auto it = j.at("demands").begin(); it != j.at("demands").end(); ++it)
            demands[it.key()] = it.value().get<std::vector<unsigned>>();
    return Network(j.at("nodes").get<std::vector<std::string>>(), std::move(edges),
                   std::move(sources), std::move(demands));
}

json solution_to_json(const FncSolution& s) {
    json enc = json::object();
    for (const auto& [id, m] : s.encodings) enc[id] = matrix_to_json(m);
    return json{{"field", field_to_json(s.field)}, {"k", s.dims.k}, {"n", s.dims.n},
                {"encodings", std::move(enc)}};
}

FncSolution solution_from_json(const json& j) {
    gf::Field f = field_from_json(j.at("field"));
    Dims dims{j.at("k").get<std::vector<unsigned>>(), j.at("n").get<unsigned>()};
    FncSolution s{f, std::move(dims), {}};
    const json& enc = j.at("encodings");
    for (auto it = enc.begin(); it != enc.end(); ++it)
        s.encodings.emplace(it.key(), matrix_from_json(it.value(), f));
    return s;
}

json script_to_json(const ConstructionScript& s) {
    auto picks = [](const std::vector<ConstructionScript::Pick>& ps) {
        json out = json::array();
        for (const auto& p : ps) out.push_back(json{{"i", p.i}, {"u", p.u}});
        return out;
    };
    return json{{"step1", s.step1}, {"step2", picks(s.step2)}, {"step3", picks(s.step3)},
                {"step4", s.step4}};
}

ConstructionScript script_from_json(const json& j) {
    ConstructionScript s;
    s.step1 = j.at("step1").get<IntVec>();
    auto picks = [](const json& arr) {
        std::vector<ConstructionScript::Pick> out;
        for (const json& p : arr)
            out.push_back({p.at("i").get<unsigned>(), p.at("u").get<IntVec>()});
        return out;
    };
    if (j.contains("step2")) s.step2 = picks(j.at("step2"));
    if (j.contains("step3")) s.step3 = picks(j.at("step3"));
    if (j.contains("step4")) s.step4 = j.at("step4").get<std::vector<IntVec>>();
    return s;
}

json problem_to_json(const IndexProblem& p) {
    json recv = json::array();
    for (const auto& r : p.receivers())
        recv.push_back(json{{"demand", r.demand}, {"side", r.side}});
    return json{{"messages", p.messages()}, {"n", 1}, {"receivers", std::move(recv)}};
}

IndexProblem problem_from_json(const json& j) {
    std::vector<IndexProblem::Receiver> recv;
    for (const json& r : j.at("receivers"))
        recv.push_back({r.at("demand").get<std::string>(),
                        r.at("side").get<std::vector<std::string>>()});
    return IndexProblem(j.at("messages").get<std::vector<std::string>>(), std::move(recv));
}

json code_to_json(const IndexCode& c, const std::vector<std::string>* messages) {
    json j{{"field", field_to_json(c.field)}, {"n", c.n}, {"c", c.c},
           {"encoding", matrix_to_json(c.encoding)}};
    if (messages) j["messages"] = *messages;
    return j;
}

IndexCode code_from_json(const json& j) {
    gf::Field f = field_from_json(j.at("field"));
    return IndexCode{f, j.at("n").get<unsigned>(), j.at("c").get<unsigned>(),
                     matrix_from_json(j.at("encoding"), f)};
}

json edge_map_to_json(const EdgeMap& f) {
    json out = json::object();
    for (const auto& [id, g] : f) out[id] = g;
    return out;
}

EdgeMap edge_map_from_json(const json& j) {
    EdgeMap f;
    for (auto it = j.begin(); it != j.end(); ++it) f[it.key()] = it.value().get<unsigned>();
    return f;
}

json vectors_to_json(const std::vector<IntVec>& vs) {
    json out = json::array();
    for (const IntVec& v : vs) out.push_back(v);
    return out;
}

}  // namespace polymat::io
