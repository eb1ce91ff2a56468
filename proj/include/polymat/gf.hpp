#pragma once

// Exact arithmetic over small finite fields GF(p^k), p^k <= 2^16, together
// with the dense matrix algebra (RREF, rank, span membership, subspace
// enumeration) used by the polymatroid, network and index coding layers.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polymat/errors.hpp"

namespace polymat {
namespace gf {

using Value = std::uint16_t;

/// GF(p^k) with elements encoded as integers in [0, p^k): the base-p digits
/// of the encoding are the polynomial coefficients, low-order digit first.
/// Arithmetic is table-driven (log/exp over a multiplicative generator), so
/// Field values are cheap shared handles and safe to copy.
class Field {
public:
    // Smallest monic irreducible modulus of degree k over GF(p), ordered by
    // coefficient tuple with the high-order coefficient most significant.
    Field(unsigned p, unsigned k);
    // Explicit modulus, low-order coefficient first; must be monic of degree
    // k and irreducible over GF(p). For k = 1 the modulus is the polynomial x.
    Field(unsigned p, unsigned k, const std::vector<unsigned>& modulus);

    unsigned characteristic() const { return t_->p; }
    unsigned degree() const { return t_->k; }
    unsigned size() const { return t_->q; }
    const std::vector<unsigned>& modulus() const { return t_->modulus; }

    Value add(Value a, Value b) const;
    Value sub(Value a, Value b) const;
    Value neg(Value a) const;
    Value mul(Value a, Value b) const;
    Value div(Value a, Value b) const;   // b != 0
    Value inv(Value a) const;            // a != 0

    bool operator==(const Field& o) const {
        return t_ == o.t_ || (t_->p == o.t_->p && t_->modulus == o.t_->modulus);
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const;  // e.g. "GF(4)"

private:
    struct Tables {
        unsigned p, k, q;
        std::vector<unsigned> modulus;      // length k+1, low-order first
        std::vector<Value> log_tab;         // index: element, valid for != 0
        std::vector<Value> exp_tab;         // length 2(q-1)
    };
    std::shared_ptr<const Tables> t_;
    void build(unsigned p, unsigned k, std::vector<unsigned> modulus);
};

bool is_prime(unsigned n);

/// Dense row-major matrix over one Field.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Value> entries);
    // Convenience for fixtures/tests: nested row lists of integer encodings.
    Matrix(const Field& f, const std::vector<std::vector<unsigned>>& rows);

    static Matrix identity(const Field& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Value at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Value v) { e_[r * cols_ + c] = v; }
    const std::vector<Value>& entries() const { return e_; }

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    std::string describe() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Value> e_;
};

/// Horizontal concatenation [a | b | ...]; all blocks share rows and field.
Matrix hconcat(std::span<const Matrix> blocks);
Matrix hconcat(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix r;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Unique reduced row echelon form. rank = pivots.size().
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// dim of the sum of the column spans of the blocks (rank of [b1|b2|...]).
std::size_t subspace_dim(std::span<const Matrix> blocks);

/// Coefficients X with generators * X = target, if every target column lies
/// in the column span of the generators. Free variables are set to zero, so
/// the result is deterministic.
std::optional<Matrix> in_span(const Matrix& target, const Matrix& generators);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Canonical generator matrix (ambient x dim, full column rank) of the
/// column span of m: the transposed nonzero rows of rref(transpose(m)).
Matrix column_space_basis(const Matrix& m);

/// Re-encode a matrix over a prime field into an extension field of the same
/// characteristic (entries become constant-coefficient elements). Ranks are
/// preserved. Sources with degree > 1 are rejected.
Matrix lift_to_extension(const Matrix& m, const Field& target);

/// Number of dim-dimensional subspaces of field^ambient; saturates at 2^63-1.
std::uint64_t gaussian_binomial(unsigned ambient, unsigned dim, unsigned q);

/// Streams one canonical generator matrix (ambient x dim; the transpose of a
/// full-rank RREF) per dim-dimensional subspace of field^ambient, pivot
/// combinations in lexicographic order. The constructor checks the subspace
/// count against the cap.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(const Field& f, unsigned ambient, unsigned dim,
                       std::uint64_t cap = kDefaultCap);
    std::optional<Matrix> next();
    std::uint64_t count() const { return count_; }

    static constexpr std::uint64_t kDefaultCap = 10'000'000;

private:
    Field field_;
    unsigned ambient_, dim_;
    std::uint64_t count_;
    bool done_;
    std::vector<std::size_t> pivots_;          // current pivot combination
    std::vector<std::pair<std::size_t, std::size_t>> free_pos_;  // (row, col)
    std::vector<Value> free_val_;
    bool fresh_combo_;
    Matrix build() const;
    bool advance_free();
    bool advance_pivots();
    void reset_free();
};

std::vector<Matrix> enumerate_subspaces(const Field& f, unsigned ambient, unsigned dim,
                                        std::uint64_t cap = SubspaceEnumerator::kDefaultCap);

}  // namespace gf
}  // namespace polymat
