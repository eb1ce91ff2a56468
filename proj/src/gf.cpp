#include "polymat/gf.hpp"

#include <algorithm>
#include <sstream>

namespace polymat::gf {

namespace {

using Poly = std::vector<unsigned>;  // coefficients mod p, low-order first

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod m over GF(p); m monic.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    poly_trim(a);
    while (a.size() >= m.size()) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - m.size();
        if (lead != 0)
            for (std::size_t i = 0; i < m.size(); ++i)
                a[i + shift] = (a[i + shift] + p - (lead * m[i]) % p) % p;
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), m, p);
}

Poly value_to_poly(unsigned v, unsigned p) {
    Poly c;
    while (v) { c.push_back(v % p); v /= p; }
    return c;
}

unsigned poly_to_value(const Poly& c, unsigned p) {
    unsigned v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

// Irreducibility over GF(p) by trial division against all monic polynomials
// of degree 1..deg/2.
bool poly_irreducible(const Poly& m, unsigned p) {
    const unsigned deg = static_cast<unsigned>(m.size()) - 1;
    if (deg == 0) return false;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        unsigned long long cnt = 1;
        for (unsigned i = 0; i < d; ++i) cnt *= p;
        for (unsigned long long low = 0; low < cnt; ++low) {
            Poly div = value_to_poly(static_cast<unsigned>(low), p);
            div.resize(d + 1, 0);
            div[d] = 1;
            Poly rem = poly_mod(m, div, p);
            if (rem.empty()) return false;
        }
    }
    return true;
}

std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> f;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) { n /= d; ++e; }
            f.emplace_back(d, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(unsigned p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field degree must be >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field size exceeds 2^16");
    }
    if (k == 1) {
        build(p, k, Poly{0, 1});  // canonical placeholder: the polynomial x
        return;
    }
    // Lexicographically smallest monic irreducible of degree k: ascend over
    // the low-order coefficient block read as a base-p integer, high-order
    // coefficient most significant.
    unsigned long long block = 1;
    for (unsigned i = 0; i < k; ++i) block *= p;
    for (unsigned long long low = 0; low < block; ++low) {
        Poly m = value_to_poly(static_cast<unsigned>(low), p);
        m.resize(k + 1, 0);
        m[k] = 1;
        if (poly_irreducible(m, p)) {
            build(p, k, std::move(m));
            return;
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field(unsigned p, unsigned k, const std::vector<unsigned>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field degree must be >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field size exceeds 2^16");
    }
    Poly m = modulus;
    for (unsigned& c : m) c %= p;
    poly_trim(m);
    if (k == 1) {
        if (m != Poly{0, 1})
            throw std::invalid_argument("prime field modulus must be the polynomial x");
    } else if (m.size() != k + 1 || m[k] != 1 || !poly_irreducible(m, p)) {
        throw std::invalid_argument("modulus must be monic, degree k, and irreducible");
    }
    build(p, k, std::move(m));
}

void Field::build(unsigned p, unsigned k, Poly modulus) {
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = k;
    t->q = 1;
    for (unsigned i = 0; i < k; ++i) t->q *= p;
    t->modulus = std::move(modulus);

    const unsigned q = t->q;
    // Multiplication of encoded elements, used only while building tables.
    auto raw_mul = [&](unsigned a, unsigned b) -> unsigned {
        Poly prod = poly_mulmod(value_to_poly(a, p), value_to_poly(b, p), t->modulus, p);
        return poly_to_value(prod, p);
    };
    auto raw_pow = [&](unsigned a, unsigned e) -> unsigned {
        unsigned r = 1;
        while (e) {
            if (e & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    // Find a multiplicative generator: order of g is q-1 iff g^((q-1)/f) != 1
    // for every prime factor f of q-1.
    const unsigned n = q - 1;
    auto factors = factorize(n);
    unsigned gen = 0;
    for (unsigned g = 2; g < q; ++g) {
        bool ok = true;
        for (auto [f, e] : factors) {
            (void)e;
            if (raw_pow(g, n / f) == 1) { ok = false; break; }
        }
        if (ok) { gen = g; break; }
    }
    if (gen == 0 && q == 2) gen = 1;  // GF(2): the unit group is trivial
    if (gen == 0) throw std::logic_error("no multiplicative generator found");

    t->exp_tab.assign(2 * n + 2, 1);
    t->log_tab.assign(q, 0);
    unsigned cur = 1;
    for (unsigned i = 0; i < n; ++i) {
        t->exp_tab[i] = static_cast<Value>(cur);
        t->log_tab[cur] = static_cast<Value>(i);
        cur = raw_mul(cur, gen);
    }
    for (unsigned i = n; i < 2 * n + 2; ++i) t->exp_tab[i] = t->exp_tab[i - n];
    t_ = std::move(t);
}

Value Field::add(Value a, Value b) const {
    const unsigned p = t_->p;
    if (p == 2) return a ^ b;
    unsigned r = 0, mult = 1;
    unsigned x = a, y = b;
    for (unsigned i = 0; i < t_->k; ++i) {
        r += ((x + y) % p) * mult;
        x /= p;
        y /= p;
        mult *= p;
    }
    return static_cast<Value>(r);
}

Value Field::neg(Value a) const {
    const unsigned p = t_->p;
    if (p == 2) return a;
    unsigned r = 0, mult = 1;
    unsigned x = a;
    for (unsigned i = 0; i < t_->k; ++i) {
        r += ((p - x % p) % p) * mult;
        x /= p;
        mult *= p;
    }
    return static_cast<Value>(r);
}

Value Field::sub(Value a, Value b) const { return add(a, neg(b)); }

Value Field::mul(Value a, Value b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp_tab[t_->log_tab[a] + t_->log_tab[b]];
}

Value Field::inv(Value a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const unsigned n = t_->q - 1;
    return t_->exp_tab[(n - t_->log_tab[a]) % n];
}

Value Field::div(Value a, Value b) const {
    if (b == 0) throw std::domain_error("division by zero");
    if (a == 0) return 0;
    const unsigned n = t_->q - 1;
    return t_->exp_tab[(t_->log_tab[a] + n - t_->log_tab[b]) % n];
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << t_->q << ")";
    return os.str();
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : field_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw std::invalid_argument("entry count mismatch");
    for (Value v : e_)
        if (v >= f.size()) throw std::invalid_argument("entry out of field range");
}

Matrix::Matrix(const Field& f, const std::vector<std::vector<unsigned>>& rows)
    : field_(f), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged row list");
        for (unsigned v : r) {
            if (v >= f.size()) throw std::invalid_argument("entry out of field range");
            e_.push_back(static_cast<Value>(v));
        }
    }
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw std::invalid_argument("field mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Value a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                Value b = o.at(k, j);
                if (b == 0) continue;
                r.set(i, j, field_.add(r.at(i, j), field_.mul(a, b)));
            }
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix r(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw std::invalid_argument("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
    }
    return r;
}

std::string Matrix::describe() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " over " << field_.describe();
    return os.str();
}

Matrix hconcat(std::span<const Matrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("hconcat of no blocks");
    std::size_t rows = blocks[0].rows(), cols = 0;
    for (const Matrix& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("row count mismatch");
        if (b.field() != blocks[0].field()) throw std::invalid_argument("field mismatch");
        cols += b.cols();
    }
    Matrix r(blocks[0].field(), rows, cols);
    std::size_t off = 0;
    for (const Matrix& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r.set(i, off + j, b.at(i, j));
        off += b.cols();
    }
    return r;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    const Matrix blocks[] = {a, b};
    return hconcat(std::span<const Matrix>(blocks, 2));
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t sel = row;
        while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row)
            for (std::size_t j = col; j < r.cols(); ++j) {
                Value tmp = r.at(row, j);
                r.set(row, j, r.at(sel, j));
                r.set(sel, j, tmp);
            }
        Value piv = r.at(row, col);
        if (piv != 1) {
            Value pinv = f.inv(piv);
            for (std::size_t j = col; j < r.cols(); ++j) r.set(row, j, f.mul(r.at(row, j), pinv));
        }
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            Value factor = r.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::size_t subspace_dim(std::span<const Matrix> blocks) {
    return rank(hconcat(blocks));
}

std::optional<Matrix> in_span(const Matrix& target, const Matrix& generators) {
    if (target.rows() != generators.rows()) throw std::invalid_argument("row count mismatch");
    if (target.field() != generators.field()) throw std::invalid_argument("field mismatch");
    auto [r, pivots] = rref(hconcat(generators, target));
    const std::size_t gc = generators.cols();
    for (std::size_t p : pivots)
        if (p >= gc) return std::nullopt;
    Matrix x(target.field(), gc, target.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < target.cols(); ++j)
            x.set(pivots[i], j, r.at(i, gc + j));
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    auto [r, pivots] = rref(hconcat(m, Matrix::identity(m.field(), m.rows())));
    if (pivots.size() != m.rows() || (m.rows() > 0 && pivots.back() != m.rows() - 1))
        throw std::domain_error("matrix is singular");
    Matrix inv(m.field(), m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) inv.set(i, j, r.at(i, m.rows() + j));
    return inv;
}

Matrix column_space_basis(const Matrix& m) {
    auto [r, pivots] = rref(m.transpose());
    Matrix basis(m.field(), m.rows(), pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) basis.set(j, i, r.at(i, j));
    return basis;
}

Matrix lift_to_extension(const Matrix& m, const Field& target) {
    const Field& src = m.field();
    if (src.degree() != 1)
        throw std::invalid_argument("lift_to_extension supports prime-field sources only");
    if (src.characteristic() != target.characteristic())
        throw std::invalid_argument("characteristic mismatch in field lift");
    // Prime-field values encode constant polynomials in the extension as-is.
    return Matrix(target, m.rows(), m.cols(), m.entries());
}

std::uint64_t gaussian_binomial(unsigned ambient, unsigned dim, unsigned q) {
    if (dim > ambient) return 0;
    constexpr std::uint64_t kSat = (std::uint64_t(1) << 63) - 1;
    auto sat_add = [](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        unsigned __int128 s = (unsigned __int128)a + b;
        return s > kSat ? kSat : static_cast<std::uint64_t>(s);
    };
    auto sat_mul = [](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        unsigned __int128 s = (unsigned __int128)a * b;
        return s > kSat ? kSat : static_cast<std::uint64_t>(s);
    };
    // Pascal-style recurrence [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q with
    // saturating arithmetic; values below the saturation bound are exact.
    std::vector<std::uint64_t> qpow(dim + 1, 1);
    for (unsigned i = 1; i <= dim; ++i) qpow[i] = sat_mul(qpow[i - 1], q);
    std::vector<std::vector<std::uint64_t>> g(ambient + 1, std::vector<std::uint64_t>(dim + 1, 0));
    for (unsigned n = 0; n <= ambient; ++n) {
        g[n][0] = 1;
        for (unsigned k = 1; k <= dim && k <= n; ++k)
            g[n][k] = sat_add(g[n - 1][k - 1], sat_mul(qpow[k], g[n - 1][k]));
    }
    return g[ambient][dim];
}

SubspaceEnumerator::SubspaceEnumerator(const Field& f, unsigned ambient, unsigned dim,
                                       std::uint64_t cap)
    : field_(f), ambient_(ambient), dim_(dim), count_(0), done_(false), fresh_combo_(true) {
    if (dim > ambient) throw std::invalid_argument("subspace dimension exceeds ambient");
    count_ = gaussian_binomial(ambient, dim, f.size());
    if (count_ > cap) throw CapExceeded("subspace enumeration cap exceeded");
    pivots_.resize(dim_);
    for (unsigned i = 0; i < dim_; ++i) pivots_[i] = i;
    if (dim_ == 0) done_ = false;  // the single zero-dimensional subspace
    reset_free();
}

void SubspaceEnumerator::reset_free() {
    free_pos_.clear();
    // Free entries of the RREF: row i, column j > pivots_[i], j not a pivot.
    for (unsigned i = 0; i < dim_; ++i)
        for (std::size_t j = pivots_[i] + 1; j < ambient_; ++j)
            if (std::find(pivots_.begin(), pivots_.end(), j) == pivots_.end())
                free_pos_.emplace_back(i, j);
    free_val_.assign(free_pos_.size(), 0);
    fresh_combo_ = true;
}

Matrix SubspaceEnumerator::build() const {
    // Generator = transpose of the dim x ambient RREF.
    Matrix g(field_, ambient_, dim_);
    for (unsigned i = 0; i < dim_; ++i) g.set(pivots_[i], i, 1);
    for (std::size_t t = 0; t < free_pos_.size(); ++t)
        g.set(free_pos_[t].second, free_pos_[t].first, free_val_[t]);
    return g;
}

bool SubspaceEnumerator::advance_free() {
    // Row-major odometer over the free entries, ascending field value.
    for (std::size_t t = free_val_.size(); t-- > 0;) {
        if (free_val_[t] + 1u < field_.size()) {
            ++free_val_[t];
            std::fill(free_val_.begin() + t + 1, free_val_.end(), 0);
            return true;
        }
    }
    return false;
}

bool SubspaceEnumerator::advance_pivots() {
    // Next lexicographic combination of dim pivots out of ambient.
    if (dim_ == 0) return false;
    std::size_t i = dim_;
    while (i-- > 0) {
        if (pivots_[i] < ambient_ - dim_ + i) {
            ++pivots_[i];
            for (std::size_t j = i + 1; j < dim_; ++j) pivots_[j] = pivots_[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::optional<Matrix> SubspaceEnumerator::next() {
    if (done_) return std::nullopt;
    if (dim_ == 0) {
        done_ = true;
        return Matrix(field_, ambient_, 0);
    }
    if (fresh_combo_) {
        fresh_combo_ = false;
        return build();
    }
    if (advance_free()) return build();
    if (advance_pivots()) {
        reset_free();
        fresh_combo_ = false;
        return build();
    }
    done_ = true;
    return std::nullopt;
}

std::vector<Matrix> enumerate_subspaces(const Field& f, unsigned ambient, unsigned dim,
                                        std::uint64_t cap) {
    SubspaceEnumerator en(f, ambient, dim, cap);
    std::vector<Matrix> out;
    while (auto m = en.next()) out.push_back(std::move(*m));
    return out;
}

}  // namespace polymat::gf
