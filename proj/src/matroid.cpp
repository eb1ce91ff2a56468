#include "polymat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polymat {

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

}  // namespace

Matroid::Matroid(RankTable table) : d_(std::move(table)) {
    const RankTable& t = d_.table();
    for (Mask a = 0; a <= t.full_mask(); ++a) {
        if (t[a] > static_cast<unsigned>(std::popcount(a)))
            throw std::invalid_argument("matroid rank exceeds set size at " + mask_show(a));
        if (a == t.full_mask()) break;
    }
}

bool Matroid::independent(Mask x) const {
    return table()[x] == static_cast<unsigned>(std::popcount(x));
}

std::string MatroidAxiomViolation::describe() const {
    std::ostringstream os;
    os << "(" << axiom << ") violated: " << mask_show(a);
    if (axiom != "I1") os << ", " << mask_show(b);
    return os.str();
}

Matroid matroid_from_independents(unsigned ground_size, const std::vector<Mask>& independents) {
    if (independents.empty()) throw std::invalid_argument("independence family is empty");
    std::set<Mask> fam(independents.begin(), independents.end());
    auto fail = [](const MatroidAxiomViolation& v) {
        throw std::invalid_argument("not a matroid: " + v.describe());
    };
    if (!fam.count(0)) fail({"I1", 0, 0});
    for (Mask x : fam) {
        for (unsigned i = 0; i < ground_size; ++i) {
            if (!(x & (Mask(1) << i))) continue;
            Mask y = x & ~(Mask(1) << i);
            if (!fam.count(y)) fail({"I2", x, y});
        }
    }
    for (Mask u : fam)
        for (Mask v : fam) {
            if (std::popcount(u) != std::popcount(v) + 1) continue;
            bool found = false;
            for (unsigned i = 0; i < ground_size && !found; ++i) {
                Mask bit = Mask(1) << i;
                if ((u & bit) && !(v & bit) && fam.count(v | bit)) found = true;
            }
            if (!found) fail({"I3", u, v});
        }
    const Mask full = (Mask(1) << ground_size) - 1;
    std::vector<unsigned> values(std::size_t(full) + 1, 0);
    for (Mask a = 0; a <= full; ++a) {
        unsigned best = 0;
        for (Mask x : fam)
            if ((x & a) == x) best = std::max(best, static_cast<unsigned>(std::popcount(x)));
        values[a] = best;
        if (a == full) break;
    }
    return Matroid(RankTable(ground_size, std::move(values)));
}

DiscretePolymatroid matroid_to_dpm(const Matroid& m) { return m.dpm(); }

Matroid dpm_to_matroid(const DiscretePolymatroid& d) {
    return Matroid(d.table());  // constructor re-checks rho(X) <= |X|
}

std::vector<Mask> circuits(const Matroid& m) {
    std::vector<Mask> out;
    for (const IntVec& u : m.dpm().minimal_excluded_vectors()) out.push_back(vec::support(u));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> basis_sets(const Matroid& m) {
    std::vector<Mask> out;
    for (const IntVec& b : m.dpm().bases()) out.push_back(vec::support(b));
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Mask>& preset_nonpappus_lines() {
    // Labeling follows the reference 9-point rank-2 multi-linear
    // representation over GF(3): 1,2,3 and 4,5,6 are the two full lines,
    // 7,8,9 the cross intersection points, and the ninth Pappus line is
    // absent. The eight dependent lines below are exactly the 3-subsets X
    // with dim(sum V_i) = 4 in that representation; the matroid tests
    // re-derive them from the matrices.
    auto to_mask = [](std::initializer_list<unsigned> pts) {
        Mask m = 0;
        for (unsigned p : pts) m |= Mask(1) << (p - 1);
        return m;
    };
    static const std::vector<Mask> lines = {
        to_mask({1, 2, 3}), to_mask({4, 5, 6}), to_mask({1, 5, 7}),
        to_mask({2, 4, 7}), to_mask({1, 6, 8}), to_mask({3, 4, 8}),
        to_mask({2, 6, 9}), to_mask({3, 5, 9}),
    };
    return lines;
}

Matroid preset(const std::string& name) {
    if (name == "u24") {
        const unsigned r = 4;
        const Mask full = (Mask(1) << r) - 1;
        std::vector<unsigned> values(std::size_t(full) + 1);
        for (Mask a = 0; a <= full; ++a) {
            values[a] = std::min<unsigned>(std::popcount(a), 2);
            if (a == full) break;
        }
        return Matroid(RankTable(r, std::move(values)));
    }
    if (name == "nonpappus") {
        const unsigned r = 9;
        const auto& lines = preset_nonpappus_lines();
        const Mask full = (Mask(1) << r) - 1;
        std::vector<unsigned> values(std::size_t(full) + 1);
        for (Mask a = 0; a <= full; ++a) {
            unsigned sz = std::popcount(a);
            if (sz <= 2) values[a] = sz;
            else if (sz >= 4) values[a] = 3;
            else {
                bool on_line = std::find(lines.begin(), lines.end(), a) != lines.end();
                values[a] = on_line ? 2 : 3;
            }
            if (a == full) break;
        }
        return Matroid(RankTable(r, std::move(values)));
    }
    throw std::invalid_argument("unknown matroid preset: " + name);
}

bool multilinear_rep_check(const Matroid& m, const Representation& rep, unsigned n) {
    if (rep.ground_size() != m.ground_size())
        throw std::invalid_argument("ground set size mismatch");
    return is_representation(rep, m.dpm().scale(n));
}

}  // namespace polymat
