#include "polymat/index_coding.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace polymat {

IndexProblem::IndexProblem(std::vector<std::string> messages, std::vector<Receiver> receivers)
    : messages_(std::move(messages)) {
    std::set<std::string> ids(messages_.begin(), messages_.end());
    if (ids.size() != messages_.size()) throw std::invalid_argument("duplicate message id");
    for (Receiver& r : receivers) {
        if (!ids.count(r.demand)) throw std::invalid_argument("unknown demand " + r.demand);
        std::sort(r.side.begin(), r.side.end());
        r.side.erase(std::unique(r.side.begin(), r.side.end()), r.side.end());
        for (const std::string& s : r.side) {
            if (!ids.count(s)) throw std::invalid_argument("unknown side message " + s);
            if (s == r.demand)
                throw std::invalid_argument("receiver holds its own demand " + s);
        }
    }
    std::sort(receivers.begin(), receivers.end());
    receivers.erase(std::unique(receivers.begin(), receivers.end()), receivers.end());
    receivers_ = std::move(receivers);
}

unsigned IndexProblem::index_of(const std::string& id) const {
    auto it = std::find(messages_.begin(), messages_.end(), id);
    if (it == messages_.end()) throw std::invalid_argument("unknown message " + id);
    return static_cast<unsigned>(it - messages_.begin()) + 1;
}

unsigned m_of(const IndexProblem& p) {
    std::map<std::vector<std::string>, unsigned> by_side;
    unsigned best = 0;
    for (const auto& r : p.receivers()) best = std::max(best, ++by_side[r.side]);
    return best;
}

namespace {

// n columns of the identity on message j's coordinates, j 1-based.
gf::Matrix msg_selector(const gf::Field& f, unsigned m, unsigned n, unsigned j) {
    gf::Matrix sel(f, std::size_t(n) * m, n);
    for (unsigned c = 0; c < n; ++c) sel.set(std::size_t(n) * (j - 1) + c, c, 1);
    return sel;
}

}  // namespace

namespace {

CheckResult verify_receivers(const IndexProblem& p, const IndexCode& code,
                             const std::vector<IndexProblem::Receiver>& order) {
    const unsigned m = p.message_count();
    const unsigned n = code.n;
    if (code.encoding.rows() != std::size_t(n) * m || code.encoding.cols() != code.c)
        throw std::invalid_argument("encoding shape mismatch");
    for (const auto& r : order) {
        std::vector<gf::Matrix> gens = {code.encoding};
        for (const std::string& s : r.side)
            gens.push_back(msg_selector(code.field, m, n, p.index_of(s)));
        if (!gf::in_span(msg_selector(code.field, m, n, p.index_of(r.demand)),
                         gf::hconcat(gens)))
            return CheckResult::fail("decode", "receiver (" + r.demand + ") cannot decode");
    }
    return CheckResult::pass();
}

}  // namespace

CheckResult verify_index_code(const IndexProblem& p, const IndexCode& code) {
    return verify_receivers(p, code, p.receivers());
}

bool is_perfect(const IndexProblem& p, const IndexCode& code) {
    if (auto r = verify_index_code(p, code); !r)
        throw std::invalid_argument("code does not verify: " + r.detail);
    return code.c == std::uint64_t(code.n) * m_of(p);
}

CheckResult thm5_check(const IndexProblem& p, const Representation& rep, unsigned n, unsigned c) {
    const unsigned m = p.message_count();
    if (rep.ground_size() != m + 1)
        throw std::invalid_argument("representation must have m+1 blocks");
    auto rho = [&](Mask a) {
        std::vector<gf::Matrix> sel;
        for (unsigned i = 0; i < m + 1; ++i)
            if (a & (Mask(1) << i)) sel.push_back(rep.blocks()[i]);
        return sel.empty() ? 0u : static_cast<unsigned>(gf::subspace_dim(sel));
    };
    const Mask full = (Mask(1) << (m + 1)) - 1;
    const Mask first_m = full >> 1;
    if (rho(full) != n * m) return CheckResult::fail("rank", "rank(D) != nm");
    for (unsigned i = 1; i <= m; ++i)
        if (rho(Mask(1) << (i - 1)) != n)
            return CheckResult::fail("C1", "rho({" + std::to_string(i) + "}) != n");
    if (rho(first_m) != n * m) return CheckResult::fail("C1", "rho({1..m}) != nm");
    if (rho(Mask(1) << m) != c) return CheckResult::fail("C1", "rho({m+1}) != c");
    for (const auto& r : p.receivers()) {
        Mask h = Mask(1) << m;  // always includes the code element m+1
        for (const std::string& s : r.side) h |= Mask(1) << (p.index_of(s) - 1);
        Mask hx = h | (Mask(1) << (p.index_of(r.demand) - 1));
        if (rho(hx) != rho(h))
            return CheckResult::fail("C2", "receiver (" + r.demand + ") rank condition fails");
    }
    return CheckResult::pass();
}

IndexCode code_from_thm5_rep(const IndexProblem& p, const Representation& rep, unsigned n,
                             unsigned c) {
    if (auto r = thm5_check(p, rep, n, c); !r)
        throw std::invalid_argument("representation fails (C1)/(C2): " + r.detail);
    const unsigned m = p.message_count();
    IntVec sel(m + 1, 0);
    for (unsigned i = 0; i < m; ++i) sel[i] = n;
    Representation norm = normalize_basis_identity(rep, sel);
    IndexCode code{rep.field(), n, c, norm.block(m + 1)};
    if (auto r = verify_index_code(p, code); !r)
        throw std::logic_error("theorem-5 code failed verification");
    return code;
}

Representation thm5_rep_from_code(const IndexProblem& p, const IndexCode& code) {
    if (auto r = verify_index_code(p, code); !r)
        throw std::invalid_argument("code does not verify: " + r.detail);
    const unsigned m = p.message_count();
    if (gf::rank(code.encoding) != code.c)
        throw std::invalid_argument("encoding must have full column rank");
    std::vector<gf::Matrix> blocks;
    for (unsigned j = 1; j <= m; ++j) blocks.push_back(msg_selector(code.field, m, code.n, j));
    blocks.push_back(code.encoding);
    Representation rep(code.field, std::size_t(code.n) * m, std::move(blocks));
    if (auto r = thm5_check(p, rep, code.n, code.c); !r)
        throw std::logic_error("code-induced representation fails (C1)/(C2)");
    return rep;
}

namespace {

std::string y_name(unsigned i, unsigned j) {
    return "y_" + std::to_string(i) + "_" + std::to_string(j);
}

// All size-t subsets of {1..count}, as sorted index lists.
void combinations(unsigned count, unsigned t, std::vector<std::vector<unsigned>>& out) {
    out.clear();
    if (t > count) return;
    std::vector<unsigned> comb(t);
    for (unsigned i = 0; i < t; ++i) comb[i] = i + 1;
    while (true) {
        out.push_back(comb);
        std::size_t k = comb.size();
        bool advanced = false;
        while (k-- > 0) {
            if (comb[k] < count - (comb.size() - 1 - k)) {
                ++comb[k];
                for (std::size_t j = k + 1; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
}

}  // namespace

IndexProblem construct_problem(const DiscretePolymatroid& d, std::uint64_t cap) {
    const unsigned r = d.ground_size();
    const unsigned k = d.rank();
    std::vector<std::string> messages;
    for (unsigned j = 1; j <= k; ++j) messages.push_back("x" + std::to_string(j));
    for (unsigned i = 1; i <= r; ++i)
        for (unsigned j = 1; j <= d.rho_singleton(i); ++j) messages.push_back(y_name(i, j));

    std::vector<IndexProblem::Receiver> receivers;
    std::uint64_t budget = cap;
    auto spend = [&](std::uint64_t amount) {
        if (amount > budget) throw CapExceeded("index problem construction cap exceeded");
        budget -= amount;
    };

    // Per-element eta_l choices get stitched together with a product
    // odometer over the support positions.
    auto product_sides = [&](const std::vector<std::vector<std::vector<unsigned>>>& choice_sets,
                             const std::vector<unsigned>& elements,
                             const std::vector<std::string>& extra) {
        std::vector<std::vector<std::string>> sides;
        std::uint64_t total = 1;
        for (const auto& cs : choice_sets) total *= cs.size();
        spend(total);
        std::vector<std::size_t> idx(choice_sets.size(), 0);
        while (true) {
            std::vector<std::string> side = extra;
            for (std::size_t t = 0; t < choice_sets.size(); ++t)
                for (unsigned j : choice_sets[t][idx[t]]) side.push_back(y_name(elements[t], j));
            std::sort(side.begin(), side.end());
            sides.push_back(std::move(side));
            std::size_t t = idx.size();
            while (t > 0 && ++idx[t - 1] == choice_sets[t - 1].size()) idx[--t] = 0;
            if (t == 0) break;
        }
        return sides;
    };

    // R1: for every basis vector b, every choice of b_l copies per support
    // element, every x_j demands against that side.
    for (const IntVec& b : d.bases()) {
        std::vector<std::vector<std::vector<unsigned>>> choice_sets;
        std::vector<unsigned> elements;
        for (unsigned i = 1; i <= r; ++i) {
            if (b[i - 1] == 0) continue;
            std::vector<std::vector<unsigned>> cs;
            combinations(d.rho_singleton(i), b[i - 1], cs);
            choice_sets.push_back(std::move(cs));
            elements.push_back(i);
        }
        for (auto& side : product_sides(choice_sets, elements, {}))
            for (unsigned j = 1; j <= k; ++j)
                receivers.push_back({"x" + std::to_string(j), side});
    }

    // R2: for every minimal excluded vector c, demand each y_j^p against
    // c_l-sized choices elsewhere and (c_j - 1)-sized choices within zeta_j.
    for (const IntVec& c : d.minimal_excluded_vectors(cap)) {
        for (unsigned j = 1; j <= r; ++j) {
            if (c[j - 1] == 0) continue;
            for (unsigned pickp = 1; pickp <= d.rho_singleton(j); ++pickp) {
                std::vector<std::vector<std::vector<unsigned>>> choice_sets;
                std::vector<unsigned> elements;
                for (unsigned l = 1; l <= r; ++l) {
                    if (l == j || c[l - 1] == 0) continue;
                    std::vector<std::vector<unsigned>> cs;
                    combinations(d.rho_singleton(l), c[l - 1], cs);
                    choice_sets.push_back(std::move(cs));
                    elements.push_back(l);
                }
                // Gamma_2 within zeta_j avoiding y_j^p.
                std::vector<unsigned> pool;
                for (unsigned t = 1; t <= d.rho_singleton(j); ++t)
                    if (t != pickp) pool.push_back(t);
                std::vector<std::vector<unsigned>> g2_idx;
                combinations(static_cast<unsigned>(pool.size()), c[j - 1] - 1, g2_idx);
                std::vector<std::vector<unsigned>> g2;
                for (auto& ix : g2_idx) {
                    std::vector<unsigned> pick;
                    for (unsigned t : ix) pick.push_back(pool[t - 1]);
                    g2.push_back(std::move(pick));
                }
                choice_sets.push_back(std::move(g2));
                elements.push_back(j);
                for (auto& side : product_sides(choice_sets, elements, {}))
                    receivers.push_back({y_name(j, pickp), side});
            }
        }
    }

    // R3: every y message demands against the whole of X.
    std::vector<std::string> xs(messages.begin(), messages.begin() + k);
    for (unsigned i = 1; i <= r; ++i)
        for (unsigned j = 1; j <= d.rho_singleton(i); ++j) {
            spend(1);
            receivers.push_back({y_name(i, j), xs});
        }

    return IndexProblem(std::move(messages), std::move(receivers));
}

std::uint64_t n_bound(const DiscretePolymatroid& d) {
    auto binom = [](unsigned n, unsigned kk) -> std::uint64_t {
        if (kk > n) return 0;
        unsigned __int128 v = 1;
        for (unsigned i = 1; i <= kk; ++i) v = v * (n - kk + i) / i;
        return static_cast<std::uint64_t>(v);
    };
    std::uint64_t best = 0;
    for (unsigned i = 1; i <= d.ground_size(); ++i) {
        std::uint64_t sum = 0;
        for (const IntVec& b : d.bases()) {
            if (b[i - 1] == 0) continue;
            std::uint64_t term = binom(d.rho_singleton(i), b[i - 1] - 1);
            for (unsigned j = 1; j <= d.ground_size(); ++j)
                if (j != i && b[j - 1] > 0) term *= binom(d.rho_singleton(j), b[j - 1]);
            sum += term;
        }
        best = std::max(best, sum);
    }
    return best;
}

Representation rep_from_perfect_code(const DiscretePolymatroid& d, const IndexCode& code) {
    IndexProblem p = construct_problem(d);
    if (!is_perfect(p, code))
        throw std::invalid_argument("code is not a perfect solution of the canonical problem");
    const unsigned n = code.n;
    const unsigned k = d.rank();
    unsigned sum_rho = 0;
    for (unsigned i = 1; i <= d.ground_size(); ++i) sum_rho += d.rho_singleton(i);
    // encoding = [C; D] with C on the x rows and D square on the y rows.
    gf::Matrix cpart(code.field, std::size_t(n) * k, code.c);
    gf::Matrix dpart(code.field, std::size_t(n) * sum_rho, code.c);
    for (std::size_t j = 0; j < code.c; ++j) {
        for (std::size_t i = 0; i < cpart.rows(); ++i) cpart.set(i, j, code.encoding.at(i, j));
        for (std::size_t i = 0; i < dpart.rows(); ++i)
            dpart.set(i, j, code.encoding.at(cpart.rows() + i, j));
    }
    gf::Matrix dinv(code.field, 0, 0);
    try {
        dinv = gf::inverse(dpart);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("code's y-block is singular");
    }
    gf::Matrix cnorm = cpart * dinv;
    std::vector<gf::Matrix> blocks;
    std::size_t col = 0;
    for (unsigned i = 1; i <= d.ground_size(); ++i) {
        std::vector<std::size_t> idx;
        for (unsigned t = 0; t < n * d.rho_singleton(i); ++t) idx.push_back(col++);
        blocks.push_back(cnorm.columns(idx));
    }
    Representation rep(code.field, std::size_t(n) * k, std::move(blocks));
    if (!is_representation(rep, d.scale(n)))
        throw std::logic_error("perfect code did not induce a representation of nD");
    return rep;
}

namespace {

// Every basis-indexed choice of column blocks of [G_1 .. G_r] must be
// invertible; these are the P(b) polynomial families. On failure the
// offending basis vector is reported through last_failure.
bool gamma_choice_ok(const DiscretePolymatroid& d, const std::vector<gf::Matrix>& g, unsigned n,
                     std::string* last_failure = nullptr) {
    const unsigned k = d.rank();
    for (const IntVec& b : d.bases()) {
        std::vector<std::vector<std::vector<unsigned>>> per_elem;
        std::vector<unsigned> elements;
        for (unsigned i = 1; i <= d.ground_size(); ++i) {
            if (b[i - 1] == 0) continue;
            std::vector<std::vector<unsigned>> cs;
            combinations(d.rho_singleton(i), b[i - 1], cs);
            per_elem.push_back(std::move(cs));
            elements.push_back(i);
        }
        std::vector<std::size_t> idx(per_elem.size(), 0);
        while (true) {
            std::vector<gf::Matrix> picked;
            for (std::size_t t = 0; t < per_elem.size(); ++t) {
                const gf::Matrix& gi = g[elements[t] - 1];
                for (unsigned j : per_elem[t][idx[t]]) {
                    std::vector<std::size_t> cols;
                    for (unsigned cc = 0; cc < n; ++cc)
                        cols.push_back(std::size_t(n) * (j - 1) + cc);
                    picked.push_back(gi.columns(cols));
                }
            }
            std::size_t dim = picked.empty() ? 0 : gf::subspace_dim(picked);
            if (dim != std::size_t(n) * k) {
                if (last_failure) *last_failure = "P(" + vec::show(b) + ")";
                return false;
            }
            if (per_elem.empty()) break;
            std::size_t t = idx.size();
            while (t > 0 && ++idx[t - 1] == per_elem[t - 1].size()) idx[--t] = 0;
            if (t == 0) break;
        }
    }
    return true;
}

bool gamma_invertible(const gf::Matrix& m) {
    return m.rows() == m.cols() && gf::rank(m) == m.rows();
}

}  // namespace

IndexCode code_from_representation_thm7(const DiscretePolymatroid& d,
                                        const Representation& rep_of_nd,
                                        const gf::Field& target_field, const Thm7Options& opts) {
    const unsigned r = d.ground_size();
    // Infer n from the block widths.
    unsigned n = 0;
    for (unsigned i = 1; i <= r; ++i) {
        if (d.rho_singleton(i) == 0) continue;
        unsigned cols = static_cast<unsigned>(rep_of_nd.block(i).cols());
        if (cols % d.rho_singleton(i) != 0)
            throw std::invalid_argument("block width is not a multiple of rho({i})");
        unsigned ni = cols / d.rho_singleton(i);
        if (n == 0) n = ni;
        if (ni != n) throw std::invalid_argument("inconsistent block widths");
    }
    if (n == 0) n = 1;
    if (!is_representation(rep_of_nd, d.scale(n)))
        throw std::invalid_argument("input is not a representation of nD");

    std::vector<gf::Matrix> lifted;
    for (const gf::Matrix& b : rep_of_nd.blocks())
        lifted.push_back(rep_of_nd.field() == target_field ? b
                                                           : gf::lift_to_extension(b, target_field));

    const unsigned k = d.rank();
    unsigned sum_rho = 0;
    for (unsigned i = 1; i <= r; ++i) sum_rho += d.rho_singleton(i);

    std::mt19937_64 rng(opts.seed);
    const unsigned q = target_field.size();
    unsigned retry_limit = opts.retry_limit ? opts.retry_limit : 64 * std::max(1u, r);

    std::string last_failure = "det(Gamma_i)";
    auto try_gammas = [&](const std::vector<gf::Matrix>& gammas)
        -> std::optional<std::vector<gf::Matrix>> {
        std::vector<gf::Matrix> g;
        for (unsigned i = 0; i < r; ++i) {
            if (!gamma_invertible(gammas[i])) {
                last_failure = "det(Gamma_" + std::to_string(i + 1) + ")";
                return std::nullopt;
            }
            g.push_back(lifted[i] * gammas[i]);
        }
        if (!gamma_choice_ok(d, g, n, &last_failure)) return std::nullopt;
        return g;
    };

    std::optional<std::vector<gf::Matrix>> g;
    unsigned attempts = 0;
    for (unsigned attempt = 0; attempt <= retry_limit && !g; ++attempt) {
        attempts = attempt;
        std::vector<gf::Matrix> gammas;
        for (unsigned i = 1; i <= r; ++i) {
            std::size_t side = std::size_t(n) * d.rho_singleton(i);
            if (attempt == 0) {
                gammas.push_back(gf::Matrix::identity(target_field, side));
            } else {
                gf::Matrix gm(target_field, side, side);
                for (std::size_t a = 0; a < side; ++a)
                    for (std::size_t b2 = 0; b2 < side; ++b2)
                        gm.set(a, b2, static_cast<gf::Value>(rng() % q));
                gammas.push_back(std::move(gm));
            }
        }
        g = try_gammas(gammas);
    }
    if (!g) {
        // Exhaustive fallback for tiny fields: odometer over all entries of
        // all Gamma matrices jointly.
        std::size_t total_entries = 0;
        for (unsigned i = 1; i <= r; ++i) {
            std::size_t side = std::size_t(n) * d.rho_singleton(i);
            total_entries += side * side;
        }
        unsigned __int128 space = 1;
        for (std::size_t t = 0; t < total_entries; ++t) {
            space *= q;
            if (space > opts.exhaustive_cap)
                throw CapExceeded("exhaustive Gamma enumeration cap exceeded");
        }
        std::vector<gf::Value> flat(total_entries, 0);
        while (!g) {
            std::vector<gf::Matrix> gammas;
            std::size_t off = 0;
            for (unsigned i = 1; i <= r; ++i) {
                std::size_t side = std::size_t(n) * d.rho_singleton(i);
                gf::Matrix gm(target_field, side, side,
                              std::vector<gf::Value>(flat.begin() + off,
                                                     flat.begin() + off + side * side));
                off += side * side;
                gammas.push_back(std::move(gm));
            }
            g = try_gammas(gammas);
            if (g) break;
            std::size_t t = total_entries;
            while (t > 0 && flat[t - 1] + 1u == q) flat[--t] = 0;
            if (t == 0)
                throw std::domain_error(
                    "no Gamma assignment satisfies the polynomial families; last failing: " +
                    last_failure);
            ++flat[t - 1];
        }
    }

    // f(Z) = y + x * [G_1 .. G_r]: x-block rows carry the G blocks, y-block
    // rows the identity.
    const unsigned m = k + sum_rho;
    gf::Matrix enc(target_field, std::size_t(n) * m, std::size_t(n) * sum_rho);
    std::size_t col = 0;
    for (unsigned i = 0; i < r; ++i) {
        const gf::Matrix& gi = (*g)[i];
        for (std::size_t j = 0; j < gi.cols(); ++j) {
            for (std::size_t a = 0; a < gi.rows(); ++a) enc.set(a, col, gi.at(a, j));
            ++col;
        }
    }
    for (std::size_t t = 0; t < std::size_t(n) * sum_rho; ++t)
        enc.set(std::size_t(n) * k + t, t, 1);

    IndexCode code{target_field, n, static_cast<unsigned>(n * sum_rho), std::move(enc)};
    if (opts.attempts_used) *opts.attempts_used = attempts;
    IndexProblem p = construct_problem(d);
    if (!is_perfect(p, code))
        throw std::logic_error("theorem-7 construction produced a non-perfect code");
    return code;
}

std::optional<IndexCode> search_perfect_code(const IndexProblem& p, const gf::Field& field,
                                             unsigned n, std::uint64_t cap) {
    const unsigned m = p.message_count();
    const unsigned c = n * m_of(p);
    if (c == 0) {
        IndexCode code{field, n, 0, gf::Matrix(field, std::size_t(n) * m, 0)};
        return code;
    }
    // Receivers with small side sets reject candidates fastest.
    std::vector<IndexProblem::Receiver> order = p.receivers();
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.side.size() < b.side.size(); });
    gf::SubspaceEnumerator en(field, n * m, c, cap);
    while (auto gen = en.next()) {
        IndexCode code{field, n, c, std::move(*gen)};
        if (verify_receivers(p, code, order)) return code;
    }
    return std::nullopt;
}

}  // namespace polymat
