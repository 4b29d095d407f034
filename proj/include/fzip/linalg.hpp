#ifndef FZIP_LINALG_HPP
#define FZIP_LINALG_HPP

#include <optional>
#include <vector>

#include "fzip/gf.hpp"

namespace fzip {

// Dense exact matrix over GF(p^k).  Entries are field-element indices,
// row-major.  Intended regime is n <= ~24.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldRef f, unsigned rows, unsigned cols)
        : field_(std::move(f)), rows_(rows), cols_(cols),
          entries_(static_cast<size_t>(rows) * cols, 0) {}

    static Matrix identity(const FieldRef& f, unsigned n);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const FieldRef& field() const { return field_; }

    unsigned at(unsigned r, unsigned c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    void set(unsigned r, unsigned c, unsigned v) { entries_[static_cast<size_t>(r) * cols_ + c] = v; }
    const std::vector<unsigned>& entries() const { return entries_; }

    Matrix mul(const Matrix& o) const;
    Matrix transpose() const;
    std::vector<unsigned> apply(const std::vector<unsigned>& v) const;  // M v
    std::optional<Matrix> inverse() const;
    bool invertible() const { return inverse().has_value(); }
    unsigned rank() const;

    // Entrywise x -> x^q ("twist"); a group homomorphism on GL_n.
    Matrix frobenius() const;
    Matrix frobenius_inverse() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    FieldRef field_;
    unsigned rows_ = 0, cols_ = 0;
    std::vector<unsigned> entries_;
};

// Reduced row-echelon form; returns the RREF matrix (zero rows dropped when
// requested by Subspace) and the pivot columns in increasing order.
struct RrefResult {
    Matrix mat;
    std::vector<unsigned> pivots;
};
RrefResult rref(const Matrix& m);

// Canonical subspace of F^n: the row space of a full-rank RREF matrix with
// strictly increasing pivots.  Equality of subspaces is record equality.
class Subspace {
public:
    Subspace() = default;
    // Span of the rows of m.
    static Subspace span(const Matrix& m, unsigned ambient_dim);
    static Subspace zero(const FieldRef& f, unsigned n);
    static Subspace full(const FieldRef& f, unsigned n);
    // Span of coordinate vectors e_i for i in idx (0-based).
    static Subspace coordinate(const FieldRef& f, unsigned n, const std::vector<unsigned>& idx);

    unsigned ambient_dim() const { return n_; }
    unsigned dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<unsigned>& pivots() const { return pivots_; }
    const FieldRef& field() const { return basis_.field(); }

    bool contains(const std::vector<unsigned>& v) const;
    bool contains(const Subspace& other) const;

    // Reduce v modulo this subspace (eliminate its pivot coordinates).
    std::vector<unsigned> reduce(std::vector<unsigned> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    bool operator<(const Subspace& o) const;  // arbitrary total order for maps

private:
    unsigned n_ = 0;
    Matrix basis_;
    std::vector<unsigned> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Deterministic complement of inner in outer: extend the RREF basis of inner
// by outer-basis rows that raise the rank, in row order.
Subspace complement_in(const Subspace& inner, const Subspace& outer);

// Entrywise q-power of a spanning set; preserves dimension.
Subspace frobenius_twist_subspace(const Subspace& s);
Subspace frobenius_twist_inverse_subspace(const Subspace& s);

Matrix frobenius_twist_matrix(const Matrix& m);

// Image g(s) under an invertible matrix acting on column vectors.
Subspace apply_matrix(const Matrix& g, const Subspace& s);

// Right kernel {v : m v = 0}.
Subspace kernel(const Matrix& m);
Subspace column_space(const Matrix& m);

// Solve B x = v where the columns of B are independent; throws if v is not
// in the column span.
std::vector<unsigned> solve_in_column_space(const Matrix& b, const std::vector<unsigned>& v);

}  // namespace fzip

#endif
