#include "polymat/representation.hpp"

#include <algorithm>

namespace polymat {

Representation::Representation(gf::Field field, unsigned ambient, std::vector<gf::Matrix> blocks)
    : field_(std::move(field)), ambient_(ambient), blocks_(std::move(blocks)) {
    for (const gf::Matrix& b : blocks_) {
        if (b.field() != field_) throw std::invalid_argument("block field mismatch");
        if (b.rows() != ambient_) throw std::invalid_argument("block ambient mismatch");
        if (gf::rank(b) != b.cols())
            throw std::invalid_argument("representation blocks must have full column rank");
    }
}

Representation Representation::normalized(gf::Field field, const std::vector<gf::Matrix>& blocks) {
    if (blocks.empty()) return Representation(std::move(field), 0, {});
    gf::Matrix all = gf::hconcat(blocks);
    auto [r, pivots] = gf::rref(all.transpose());
    const std::size_t dim = pivots.size();
    if (dim == blocks[0].rows())  // already in normal form
        return Representation(std::move(field), static_cast<unsigned>(dim), blocks);
    // Rows of r form a basis of the total span; express each block in that
    // basis by solving basis * X = block.
    gf::Matrix basis(field, blocks[0].rows(), dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < blocks[0].rows(); ++j) basis.set(j, i, r.at(i, j));
    std::vector<gf::Matrix> out;
    out.reserve(blocks.size());
    for (const gf::Matrix& b : blocks) {
        auto x = gf::in_span(b, basis);
        if (!x) throw std::logic_error("block escapes its own span");  // unreachable
        out.push_back(std::move(*x));
    }
    return Representation(std::move(field), static_cast<unsigned>(dim), std::move(out));
}

RankTable rank_fn_of(const Representation& rep) {
    const unsigned r = rep.ground_size();
    const Mask full = (Mask(1) << r) - 1;
    std::vector<unsigned> values(std::size_t(full) + 1, 0);
    for (Mask a = 1; a <= full; ++a) {
        std::vector<gf::Matrix> sel;
        for (unsigned i = 0; i < r; ++i)
            if (a & (Mask(1) << i)) sel.push_back(rep.blocks()[i]);
        values[a] = static_cast<unsigned>(gf::subspace_dim(sel));
        if (a == full) break;
    }
    return RankTable(r, std::move(values));
}

bool is_representation(const Representation& rep, const DiscretePolymatroid& d) {
    if (rep.ground_size() != d.ground_size())
        throw std::invalid_argument("ground set size mismatch");
    return rank_fn_of(rep) == d.table();
}

namespace {

// Incremental pruning for the representation search: after placing block t
// (0-based), every subset of the placed blocks that contains t must already
// meet its rank.
bool placement_consistent(const std::vector<gf::Matrix>& placed, const RankTable& t) {
    const unsigned n = static_cast<unsigned>(placed.size());
    const Mask newest = Mask(1) << (n - 1);
    const Mask prefix = (Mask(1) << (n - 1)) - 1;
    for (Mask m = prefix;; m = (m - 1) & prefix) {
        Mask a = m | newest;
        std::vector<gf::Matrix> sel;
        for (unsigned i = 0; i < n; ++i)
            if (a & (Mask(1) << i)) sel.push_back(placed[i]);
        if (gf::subspace_dim(sel) != t[a]) return false;
        if (m == 0) break;
    }
    return true;
}

bool search_blocks(const DiscretePolymatroid& d, const gf::Field& field, unsigned ambient,
                   std::vector<gf::Matrix>& placed, std::uint64_t cap, std::uint64_t& budget) {
    const unsigned r = d.ground_size();
    const unsigned t = static_cast<unsigned>(placed.size());
    if (t == r) return true;
    gf::SubspaceEnumerator en(field, ambient, d.rho_singleton(t + 1), cap);
    while (auto m = en.next()) {
        if (budget == 0) throw CapExceeded("representation search cap exceeded");
        --budget;
        placed.push_back(std::move(*m));
        if (placement_consistent(placed, d.table()) &&
            search_blocks(d, field, ambient, placed, cap, budget))
            return true;
        placed.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Representation> find_representation(const DiscretePolymatroid& d,
                                                  const gf::Field& field, unsigned ambient,
                                                  std::uint64_t cap) {
    if (ambient != d.rank())
        throw std::invalid_argument("normalized search requires ambient = rank(D)");
    std::vector<gf::Matrix> placed;
    std::uint64_t budget = cap;
    if (search_blocks(d, field, ambient, placed, cap, budget))
        return Representation(field, ambient, std::move(placed));
    return std::nullopt;
}

Representation normalize_basis_identity(const Representation& rep, const IntVec& b) {
    if (b.size() != rep.ground_size()) throw std::invalid_argument("selection length mismatch");
    std::vector<gf::Matrix> sel;
    for (unsigned i = 0; i < b.size(); ++i) {
        if (b[i] == 0) continue;
        if (b[i] > rep.blocks()[i].cols())
            throw std::invalid_argument("selection exceeds block width");
        std::vector<std::size_t> idx(b[i]);
        for (unsigned j = 0; j < b[i]; ++j) idx[j] = j;
        sel.push_back(rep.blocks()[i].columns(idx));
    }
    gf::Matrix bmat = gf::hconcat(sel);
    if (bmat.rows() != bmat.cols())
        throw std::invalid_argument("selected columns do not form a square matrix");
    gf::Matrix binv = gf::inverse(bmat);  // throws std::domain_error when singular
    std::vector<gf::Matrix> out;
    out.reserve(rep.ground_size());
    for (const gf::Matrix& blk : rep.blocks()) out.push_back(binv * blk);
    return Representation(rep.field(), rep.ambient(), std::move(out));
}

namespace {

bool select_rec(const Representation& rep, const IntVec& b, unsigned i,
                std::vector<gf::Matrix>& chosen, unsigned target) {
    if (i == b.size()) {
        return gf::subspace_dim(chosen) == target;
    }
    if (b[i] == 0) return select_rec(rep, b, i + 1, chosen, target);
    const gf::Matrix& blk = rep.blocks()[i];
    if (b[i] > blk.cols()) return false;
    // All b_i-subsets of the block's columns, in lexicographic order.
    std::vector<std::size_t> comb(b[i]);
    for (unsigned j = 0; j < b[i]; ++j) comb[j] = j;
    while (true) {
        chosen.push_back(blk.columns(comb));
        // Partial full-rank requirement: the chosen columns so far must be
        // independent, otherwise the total can never reach the target.
        std::size_t want = 0;
        for (const gf::Matrix& c : chosen) want += c.cols();
        if (gf::subspace_dim(chosen) == want && select_rec(rep, b, i + 1, chosen, target))
            return true;
        chosen.pop_back();
        // next combination
        std::size_t k = comb.size();
        bool advanced = false;
        while (k-- > 0) {
            if (comb[k] < blk.cols() - comb.size() + k) {
                ++comb[k];
                for (std::size_t j = k + 1; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return false;
    }
}

}  // namespace

std::vector<gf::Matrix> select_basis_subblocks(const Representation& rep, const IntVec& b) {
    if (b.size() != rep.ground_size()) throw std::invalid_argument("basis length mismatch");
    unsigned target = vec::sum(b);
    std::vector<gf::Matrix> chosen;
    if (!select_rec(rep, b, 0, chosen, target))
        throw std::domain_error("no full-rank basis sub-block selection exists");
    return chosen;
}

}  // namespace polymat
