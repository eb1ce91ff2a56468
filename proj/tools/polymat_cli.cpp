// Command-line front door: every subcommand is a thin adapter over the
// library with JSON files (or bundled example names) as inputs.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "polymat/bundled.hpp"
#include "polymat/index_coding.hpp"
#include "polymat/json_io.hpp"
#include "polymat/matroid.hpp"

using namespace polymat;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // verified-false / none found
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::uint64_t enum_cap(std::uint64_t flag_value) {
    if (flag_value) return flag_value;
    if (const char* env = std::getenv("POLYMAT_CAP")) return std::strtoull(env, nullptr, 10);
    return kDefaultEnumCap;
}

// Inputs may be file paths or bundled example names.
json load(const std::string& ref) {
    if (std::filesystem::exists(ref)) {
        std::ifstream in(ref);
        if (!in) throw std::invalid_argument("cannot open " + ref);
        return json::parse(in);
    }
    for (const BundledEntry& e : bundled_examples())
        if (e.name == ref) return json::parse(e.json);
    throw std::invalid_argument("no such file or bundled example: " + ref);
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

gf::Field parse_field(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("field must be given as p,k");
    return gf::Field(std::stoul(s.substr(0, comma)), std::stoul(s.substr(comma + 1)));
}

Dims parse_dims(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("dims must be given as k1,..,km:n");
    Dims d;
    std::string ks = s.substr(0, colon);
    std::size_t pos = 0;
    while (pos <= ks.size()) {
        auto next = ks.find(',', pos);
        if (next == std::string::npos) next = ks.size();
        d.k.push_back(std::stoul(ks.substr(pos, next - pos)));
        pos = next + 1;
    }
    d.n = std::stoul(s.substr(colon + 1));
    return d;
}

DiscretePolymatroid load_dpm(const std::string& ref) {
    return DiscretePolymatroid{io::table_from_json(load(ref))};
}

json check_to_json(const CheckResult& r) {
    json j{{"ok", r.ok}};
    if (!r.ok) {
        j["condition"] = r.condition;
        j["detail"] = r.detail;
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete polymatroids, network coding and index coding toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "write JSON output to a file instead of stdout");
    std::uint64_t cap_flag = 0;
    app.add_option("--cap", cap_flag,
                   "enumeration/search cap (overrides POLYMAT_CAP; default 10^7)");

    // common option storage
    std::string in1, in2, in3, field_s, dims_s, script_s, name;
    unsigned alg = 1, n_opt = 1, c_opt = 0, unit_i = 0, scale_n = 1;
    std::uint64_t seed = 1;
    bool reduced = false, all_subsets = false, list_only = false;
    std::string dump_dir;
    int ambient = -1;

    auto* validate = app.add_subcommand("validate", "check the (D1)-(D3) rank axioms");
    validate->add_option("table", in1)->required();

    auto* bases_cmd = app.add_subcommand("bases", "basis vectors of a discrete polymatroid");
    bases_cmd->add_option("table", in1)->required();

    auto* mev = app.add_subcommand("mev", "minimal excluded vectors");
    mev->add_option("table", in1)->required();
    mev->add_option("--unit", unit_i, "restrict to i-unit vectors (1-based element)");
    mev->add_flag("--reduced", reduced, "reduced i-unit vectors (requires --unit)");

    auto* scale_cmd = app.add_subcommand("scale", "multiply the rank function by n");
    scale_cmd->add_option("table", in1)->required();
    scale_cmd->add_option("n", scale_n)->required();

    auto* ingleton = app.add_subcommand("ingleton", "Ingleton inequality check");
    ingleton->add_option("table", in1)->required();
    ingleton->add_flag("--all-subsets", all_subsets,
                       "test all subset quadruples (cost grows as 16^r)");

    auto* rep_check = app.add_subcommand("rep-check", "does a representation match a polymatroid");
    rep_check->add_option("rep", in1)->required();
    rep_check->add_option("table", in2)->required();

    auto* rep_search = app.add_subcommand("rep-search", "exhaustive representation search");
    rep_search->add_option("table", in1)->required();
    rep_search->add_option("--field", field_s, "field as p,k")->required();
    rep_search->add_option("--ambient", ambient, "defaults to rank(D)");

    auto* net_construct = app.add_subcommand("net-construct", "build a network from a polymatroid");
    net_construct->add_option("table", in1)->required();
    net_construct->add_option("--alg", alg, "1 or 2")->required();
    net_construct->add_option("--script", script_s, "construction script")->required();

    auto* net_verify = app.add_subcommand("net-verify", "verify an FNC solution");
    net_verify->add_option("network", in1)->required();
    net_verify->add_option("solution", in2)->required();

    auto* net_search = app.add_subcommand("net-search", "exhaustive linear FNC solution search");
    net_search->add_option("network", in1)->required();
    net_search->add_option("--field", field_s)->required();
    net_search->add_option("--dims", dims_s, "k1,..,km:n")->required();

    auto* net_from_rep = app.add_subcommand("net-from-rep", "solution from a representation");
    net_from_rep->add_option("network", in1)->required();
    net_from_rep->add_option("rep", in2)->required();
    net_from_rep->add_option("--map", in3, "edge map JSON")->required();
    net_from_rep->add_option("--dims", dims_s)->required();

    auto* rates_cmd = app.add_subcommand("rates", "achievable rates of a solution");
    rates_cmd->add_option("solution", in1)->required();

    auto* idx_construct = app.add_subcommand("idx-construct", "index problem from a polymatroid");
    idx_construct->add_option("table", in1)->required();

    auto* idx_verify = app.add_subcommand("idx-verify", "verify an index code");
    idx_verify->add_option("problem", in1)->required();
    idx_verify->add_option("code", in2)->required();

    auto* idx_search = app.add_subcommand("idx-search", "exhaustive perfect code search");
    idx_search->add_option("problem", in1)->required();
    idx_search->add_option("--field", field_s)->required();
    idx_search->add_option("--n", n_opt, "code dimension");

    auto* idx_nbound = app.add_subcommand("idx-nbound", "field-size threshold N(D)");
    idx_nbound->add_option("table", in1)->required();

    auto* idx_from_rep =
        app.add_subcommand("idx-from-rep", "index code from a rank-condition representation");
    idx_from_rep->add_option("problem", in1)->required();
    idx_from_rep->add_option("rep", in2)->required();
    idx_from_rep->add_option("--n", n_opt)->required();
    idx_from_rep->add_option("--c", c_opt)->required();

    auto* idx_thm7 = app.add_subcommand("idx-thm7", "randomized perfect code construction");
    idx_thm7->add_option("table", in1)->required();
    idx_thm7->add_option("rep", in2, "representation of nD over a prime field")->required();
    idx_thm7->add_option("--field", field_s, "target field p,k")->required();
    idx_thm7->add_option("--seed", seed);

    auto* thm5 = app.add_subcommand("thm5-check", "check the (C1)/(C2) rank conditions");
    thm5->add_option("problem", in1)->required();
    thm5->add_option("rep", in2)->required();
    thm5->add_option("--n", n_opt)->required();
    thm5->add_option("--c", c_opt)->required();

    auto* examples = app.add_subcommand("examples", "bundled machine-readable examples");
    examples->add_flag("--list", list_only, "print the manifest only");
    examples->add_option("--name", name, "emit one bundled example");
    examples->add_option("--dump-dir", dump_dir, "write every example as <name>.json");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::uint64_t cap = enum_cap(cap_flag);
        if (*validate) {
            RankTable t = io::table_from_json(load(in1));
            auto v = rank_validate(t);
            if (!v) {
                emit(json{{"ok", true}}, out_path);
                return kExitOk;
            }
            emit(json{{"ok", false}, {"axiom", v->axiom}, {"witness", {v->a, v->b}},
                      {"detail", v->describe()}},
                 out_path);
            return kExitNegative;
        }
        if (*bases_cmd) {
            auto d = load_dpm(in1);
            emit(json{{"rank", d.rank()}, {"bases", io::vectors_to_json(d.bases())}}, out_path);
            return kExitOk;
        }
        if (*mev) {
            auto d = load_dpm(in1);
            std::vector<IntVec> vs;
            if (unit_i == 0)
                vs = d.minimal_excluded_vectors(cap);
            else
                vs = reduced ? d.reduced_unit_mev(unit_i, cap) : d.unit_mev(unit_i, cap);
            emit(json{{"vectors", io::vectors_to_json(vs)}}, out_path);
            return kExitOk;
        }
        if (*scale_cmd) {
            emit(io::table_to_json(load_dpm(in1).scale(scale_n).table()), out_path);
            return kExitOk;
        }
        if (*ingleton) {
            auto d = load_dpm(in1);
            auto v = ingleton_check(
                d, all_subsets ? IngletonScope::AllSubsets : IngletonScope::Singletons, cap);
            if (!v) {
                emit(json{{"ok", true}}, out_path);
                return kExitOk;
            }
            emit(json{{"ok", false}, {"quadruple", {v->x1, v->x2, v->x3, v->x4}},
                      {"lhs", v->lhs}, {"rhs", v->rhs}, {"detail", v->describe()}},
                 out_path);
            return kExitNegative;
        }
        if (*rep_check) {
            bool ok = is_representation(io::rep_from_json(load(in1)), load_dpm(in2));
            emit(json{{"ok", ok}}, out_path);
            return ok ? kExitOk : kExitNegative;
        }
        if (*rep_search) {
            auto d = load_dpm(in1);
            unsigned amb = ambient >= 0 ? static_cast<unsigned>(ambient) : d.rank();
            auto r = find_representation(d, parse_field(field_s), amb, cap);
            if (!r) {
                emit(json{{"found", false}}, out_path);
                return kExitNegative;
            }
            json j = io::rep_to_json(*r);
            j["found"] = true;
            emit(j, out_path);
            return kExitOk;
        }
        if (*net_construct) {
            auto d = load_dpm(in1);
            auto script = io::script_from_json(load(script_s));
            auto [net, f] =
                alg == 1 ? construct_network_alg1(d, script) : construct_network_alg2(d, script);
            emit(json{{"network", io::network_to_json(net)},
                      {"edge_map", io::edge_map_to_json(f)}},
                 out_path);
            return kExitOk;
        }
        if (*net_verify) {
            auto net = io::network_from_json(load(in1));
            auto r = verify_fnc_solution(net, io::solution_from_json(load(in2)));
            emit(check_to_json(r), out_path);
            return r.ok ? kExitOk : kExitNegative;
        }
        if (*net_search) {
            auto net = io::network_from_json(load(in1));
            auto s = search_fnc_solution(net, parse_field(field_s), parse_dims(dims_s), cap);
            if (!s) {
                emit(json{{"found", false}}, out_path);
                return kExitNegative;
            }
            json j = io::solution_to_json(*s);
            j["found"] = true;
            emit(j, out_path);
            return kExitOk;
        }
        if (*net_from_rep) {
            auto net = io::network_from_json(load(in1));
            auto sol = solution_from_representation(net, io::rep_from_json(load(in2)),
                                                    io::edge_map_from_json(load(in3)),
                                                    parse_dims(dims_s));
            emit(io::solution_to_json(sol), out_path);
            return kExitOk;
        }
        if (*rates_cmd) {
            Rates r = rates(io::solution_from_json(load(in1)));
            json per = json::array();
            for (const Rational& q : r.per_message) per.push_back(q.show());
            emit(json{{"rates", per}, {"average", r.average.show()}, {"uniform", r.uniform}},
                 out_path);
            return kExitOk;
        }
        if (*idx_construct) {
            emit(io::problem_to_json(construct_problem(load_dpm(in1), cap)), out_path);
            return kExitOk;
        }
        if (*idx_verify) {
            auto p = io::problem_from_json(load(in1));
            auto code = io::code_from_json(load(in2));
            auto r = verify_index_code(p, code);
            json j = check_to_json(r);
            if (r.ok) j["perfect"] = is_perfect(p, code);
            emit(j, out_path);
            return r.ok ? kExitOk : kExitNegative;
        }
        if (*idx_search) {
            auto p = io::problem_from_json(load(in1));
            auto code = search_perfect_code(p, parse_field(field_s), n_opt, cap);
            if (!code) {
                emit(json{{"found", false}}, out_path);
                return kExitNegative;
            }
            json j = io::code_to_json(*code, &p.messages());
            j["found"] = true;
            emit(j, out_path);
            return kExitOk;
        }
        if (*idx_nbound) {
            emit(json{{"n_bound", n_bound(load_dpm(in1))}}, out_path);
            return kExitOk;
        }
        if (*idx_from_rep) {
            auto p = io::problem_from_json(load(in1));
            auto code = code_from_thm5_rep(p, io::rep_from_json(load(in2)), n_opt, c_opt);
            emit(io::code_to_json(code, &p.messages()), out_path);
            return kExitOk;
        }
        if (*idx_thm7) {
            auto d = load_dpm(in1);
            Thm7Options opts;
            opts.seed = seed;
            unsigned attempts = 0;
            opts.attempts_used = &attempts;
            auto code = code_from_representation_thm7(d, io::rep_from_json(load(in2)),
                                                      parse_field(field_s), opts);
            IndexProblem p = construct_problem(d, cap);
            json j = io::code_to_json(code, &p.messages());
            j["attempts"] = attempts;
            emit(j, out_path);
            return kExitOk;
        }
        if (*thm5) {
            auto r = thm5_check(io::problem_from_json(load(in1)), io::rep_from_json(load(in2)),
                                n_opt, c_opt);
            emit(check_to_json(r), out_path);
            return r.ok ? kExitOk : kExitNegative;
        }
        if (*examples) {
            if (!name.empty()) {
                emit(json::parse(bundled(name).json), out_path);
                return kExitOk;
            }
            if (!dump_dir.empty()) {
                std::filesystem::create_directories(dump_dir);
                for (const BundledEntry& e : bundled_examples()) {
                    std::ofstream out(std::filesystem::path(dump_dir) / (e.name + ".json"));
                    out << json::parse(e.json).dump(2) << "\n";
                }
                emit(json{{"written", bundled_examples().size()}, {"dir", dump_dir}}, out_path);
                return kExitOk;
            }
            (void)list_only;
            json manifest = json::array();
            for (const BundledEntry& e : bundled_examples())
                manifest.push_back(json{{"name", e.name}, {"kind", e.kind}});
            emit(json{{"examples", manifest}}, out_path);
            return kExitOk;
        }
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
