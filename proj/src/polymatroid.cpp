#include "polymat/polymatroid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace polymat {

namespace vec {

unsigned sum(const IntVec& u) {
    unsigned s = 0;
    for (unsigned c : u) s += c;
    return s;
}

unsigned sum_on(const IntVec& u, Mask a) {
    unsigned s = 0;
    while (a) {
        unsigned i = std::countr_zero(a);
        s += u[i];
        a &= a - 1;
    }
    return s;
}

bool leq(const IntVec& u, const IntVec& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

bool lt(const IntVec& u, const IntVec& v) { return leq(u, v) && u != v; }

IntVec join(const IntVec& u, const IntVec& v) {
    IntVec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::max(u[i], v[i]);
    return w;
}

Mask support(const IntVec& u) {
    Mask m = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > 0) m |= Mask(1) << i;
    return m;
}

IntVec unit(unsigned i, unsigned r) {
    IntVec u(r, 0);
    u[i - 1] = 1;
    return u;
}

std::string show(const IntVec& u) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i];
    os << ")";
    return os.str();
}

}  // namespace vec

namespace {

std::string mask_show(Mask a) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (unsigned i = 0; i < 32; ++i)
        if (a & (Mask(1) << i)) {
            os << (first ? "" : ",") << (i + 1);
            first = false;
        }
    os << "}";
    return os.str();
}

struct VecHash {
    std::size_t operator()(const IntVec& u) const {
        std::size_t h = 1469598103934665603ull;
        for (unsigned c : u) {
            h ^= c + 1;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

RankTable::RankTable(unsigned ground_size, std::vector<unsigned> values)
    : r_(ground_size), v_(std::move(values)) {
    if (r_ > kMaxGroundSize) throw std::invalid_argument("ground set larger than 16");
    if (v_.size() != (std::size_t(1) << r_))
        throw std::invalid_argument("rank table must have 2^r entries");
}

std::string RankViolation::describe() const {
    std::ostringstream os;
    os << "(" << axiom << ") violated at " << mask_show(a) << ", " << mask_show(b);
    return os.str();
}

std::optional<RankViolation> rank_validate(const RankTable& t) {
    const unsigned r = t.ground_size();
    if (t[0] != 0) return RankViolation{"D3", 0, 0};
    const Mask full = t.full_mask();
    for (Mask a = 0; a <= full; ++a) {
        for (unsigned i = 0; i < r; ++i) {
            if (a & (Mask(1) << i)) continue;
            Mask ai = a | (Mask(1) << i);
            if (t[ai] < t[a]) return RankViolation{"D1", a, ai};
            for (unsigned j = i + 1; j < r; ++j) {
                if (a & (Mask(1) << j)) continue;
                Mask aj = a | (Mask(1) << j);
                if (t[ai] + t[aj] < t[ai | aj] + t[a])
                    return RankViolation{"D2", ai, aj};
            }
        }
        if (a == full) break;
    }
    return std::nullopt;
}

DiscretePolymatroid::DiscretePolymatroid(RankTable table) : t_(std::move(table)) {
    if (auto v = rank_validate(t_))
        throw std::invalid_argument("not a discrete polymatroid rank function: " + v->describe());
}

unsigned DiscretePolymatroid::rho_max() const {
    unsigned m = 0;
    for (unsigned i = 1; i <= ground_size(); ++i) m = std::max(m, rho_singleton(i));
    return m;
}

bool DiscretePolymatroid::contains(const IntVec& u) const {
    if (u.size() != ground_size()) throw std::invalid_argument("vector length mismatch");
    const Mask full = t_.full_mask();
    // Subset sums share structure: |u(A)| = |u(A minus lowest bit)| + u[low].
    std::vector<unsigned> s(std::size_t(full) + 1, 0);
    for (Mask a = 1; a <= full; ++a) {
        unsigned low = std::countr_zero(a);
        s[a] = s[a & (a - 1)] + u[low];
        if (s[a] > t_[a]) return false;
    }
    return true;
}

namespace {

// Depth-first enumeration over prefixes. A partial assignment (u_1..u_t) is
// extendable iff |u(A)| <= rho(A) for all A inside the prefix; only subsets
// containing the newest element need rechecking.
void enumerate_dfs(const RankTable& t, unsigned depth, IntVec& u,
                   std::vector<unsigned>& sums, const std::vector<unsigned>& suffix_rho,
                   bool bases_only, std::vector<IntVec>& out) {
    const unsigned r = t.ground_size();
    if (depth == r) {
        if (!bases_only || vec::sum(u) == t[t.full_mask()]) out.push_back(u);
        return;
    }
    const Mask prefix = (Mask(1) << depth) - 1;
    const Mask bit = Mask(1) << depth;
    const unsigned cap = t[bit];
    for (unsigned v = 0; v <= cap; ++v) {
        u[depth] = v;
        bool ok = true;
        for (Mask m = prefix;; m = (m - 1) & prefix) {
            Mask a = m | bit;
            unsigned s = sums[m] + v;
            sums[a] = s;
            if (s > t[a]) { ok = false; break; }
            if (m == 0) break;
        }
        if (ok && bases_only) {
            // Residual bound: the suffix can contribute at most its ranks.
            unsigned partial = sums[prefix | bit];
            if (partial + suffix_rho[depth + 1] < t[t.full_mask()]) ok = false;
        }
        if (ok) enumerate_dfs(t, depth + 1, u, sums, suffix_rho, bases_only, out);
    }
    u[depth] = 0;
}

std::vector<IntVec> enumerate_vectors(const RankTable& t, bool bases_only) {
    const unsigned r = t.ground_size();
    // suffix_rho[d] = sum of rho({i}) over 0-based indices i >= d.
    std::vector<unsigned> suffix_rho(r + 1, 0);
    for (unsigned d = r; d-- > 0;) suffix_rho[d] = suffix_rho[d + 1] + t.singleton(d + 1);
    std::vector<unsigned> sums(std::size_t(1) << r, 0);
    IntVec u(r, 0);
    std::vector<IntVec> out;
    enumerate_dfs(t, 0, u, sums, suffix_rho, bases_only, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::vector<IntVec>& DiscretePolymatroid::bases() const {
    if (!bases_done_) {
        bases_ = enumerate_vectors(t_, true);
        bases_done_ = true;
    }
    return bases_;
}

const std::vector<IntVec>& DiscretePolymatroid::vectors(std::uint64_t cap) const {
    if (!vectors_done_) {
        unsigned __int128 box = 1;
        for (unsigned i = 1; i <= ground_size(); ++i) {
            box *= rho_singleton(i) + 1;
            if (box > cap) throw CapExceeded("polymatroid enumeration cap exceeded");
        }
        vectors_ = enumerate_vectors(t_, false);
        vectors_done_ = true;
    }
    return vectors_;
}

std::vector<IntVec> DiscretePolymatroid::excluded_vectors(std::uint64_t cap) const {
    const auto& inside = vectors(cap);
    std::unordered_set<IntVec, VecHash> member(inside.begin(), inside.end());
    const unsigned r = ground_size();
    std::vector<IntVec> out;
    IntVec u(r, 0);
    // Odometer over the whole box, keeping only non-members.
    while (true) {
        if (!member.count(u)) out.push_back(u);
        unsigned i = 0;
        while (i < r && u[i] == rho_singleton(i + 1)) u[i++] = 0;
        if (i == r) break;
        ++u[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> DiscretePolymatroid::minimal_excluded_vectors(std::uint64_t cap) const {
    const auto& inside = vectors(cap);
    std::unordered_set<IntVec, VecHash> member(inside.begin(), inside.end());
    const unsigned r = ground_size();
    std::unordered_set<IntVec, VecHash> result;
    // Every minimal excluded vector is v + e_i for some v in D: all its
    // one-step subvectors are members, so step up from members only.
    for (const IntVec& v : inside) {
        IntVec u = v;
        for (unsigned i = 0; i < r; ++i) {
            if (u[i] + 1 > rho_singleton(i + 1)) continue;
            ++u[i];
            if (!member.count(u)) {
                bool minimal = true;
                for (unsigned j = 0; j < r && minimal; ++j) {
                    if (u[j] == 0) continue;
                    --u[j];
                    if (!member.count(u)) minimal = false;
                    ++u[j];
                }
                if (minimal) result.insert(u);
            }
            --u[i];
        }
    }
    std::vector<IntVec> out(result.begin(), result.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> DiscretePolymatroid::unit_mev(unsigned i, std::uint64_t cap) const {
    if (i < 1 || i > ground_size()) throw std::invalid_argument("ground element out of range");
    std::vector<IntVec> out;
    for (const IntVec& u : minimal_excluded_vectors(cap))
        if (u[i - 1] == 1) out.push_back(u);
    return out;
}

std::vector<IntVec> DiscretePolymatroid::reduced_unit_mev(unsigned i, std::uint64_t cap) const {
    auto cu = unit_mev(i, cap);
    std::vector<IntVec> out;
    for (const IntVec& u : cu) {
        Mask su = vec::support(u);
        bool reduced = true;
        for (const IntVec& v : cu) {
            Mask sv = vec::support(v);
            if (v != u && (sv & su) == sv && sv != su) { reduced = false; break; }
        }
        if (reduced) out.push_back(u);
    }
    return out;
}

DiscretePolymatroid DiscretePolymatroid::scale(unsigned n) const {
    if (n == 0) throw std::invalid_argument("scale factor must be >= 1");
    std::vector<unsigned> v = t_.values();
    for (unsigned& x : v) x *= n;
    return DiscretePolymatroid(RankTable(ground_size(), std::move(v)));
}

RankTable rank_from_vectors(unsigned ground_size, std::span<const IntVec> vectors) {
    if (vectors.empty()) throw std::invalid_argument("rank_from_vectors needs a nonempty set");
    const Mask full = (Mask(1) << ground_size) - 1;
    std::vector<unsigned> v(std::size_t(full) + 1, 0);
    for (const IntVec& u : vectors) {
        if (u.size() != ground_size) throw std::invalid_argument("vector length mismatch");
        for (Mask a = 1; a <= full; ++a)
            v[a] = std::max(v[a], vec::sum_on(u, a));
    }
    return RankTable(ground_size, std::move(v));
}

std::string IngletonViolation::describe() const {
    std::ostringstream os;
    os << "Ingleton violated at (" << mask_show(x1) << "," << mask_show(x2) << ","
       << mask_show(x3) << "," << mask_show(x4) << "): lhs " << lhs << " > rhs " << rhs;
    return os.str();
}

std::optional<IngletonViolation> ingleton_check(
    const DiscretePolymatroid& d, std::span<const std::array<Mask, 4>> quadruples) {
    const RankTable& t = d.table();
    for (const auto& q : quadruples) {
        Mask x1 = q[0], x2 = q[1], x3 = q[2], x4 = q[3];
        unsigned lhs = t[x1] + t[x2] + t[x1 | x2 | x3] + t[x1 | x2 | x4] + t[x3 | x4];
        unsigned rhs = t[x1 | x2] + t[x1 | x3] + t[x1 | x4] + t[x2 | x3] + t[x2 | x4];
        if (lhs > rhs) return IngletonViolation{x1, x2, x3, x4, lhs, rhs};
    }
    return std::nullopt;
}

std::optional<IngletonViolation> ingleton_check(const DiscretePolymatroid& d,
                                                IngletonScope scope, std::uint64_t cap) {
    const unsigned r = d.ground_size();
    std::vector<std::array<Mask, 4>> quads;
    if (scope == IngletonScope::Singletons) {
        for (unsigned a = 0; a < r; ++a)
            for (unsigned b = 0; b < r; ++b)
                for (unsigned c = 0; c < r; ++c)
                    for (unsigned e = 0; e < r; ++e)
                        quads.push_back({Mask(1) << a, Mask(1) << b, Mask(1) << c, Mask(1) << e});
    } else {
        const std::uint64_t n = std::uint64_t(1) << r;
        if (n * n * n * n > cap) throw CapExceeded("polymatroid enumeration cap exceeded");
        for (Mask a = 0; a < n; ++a)
            for (Mask b = 0; b < n; ++b)
                for (Mask c = 0; c < n; ++c)
                    for (Mask e = 0; e < n; ++e) quads.push_back({a, b, c, e});
    }
    return ingleton_check(d, quads);
}

}  // namespace polymat
