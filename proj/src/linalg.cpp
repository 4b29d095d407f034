#include "fzip/linalg.hpp"

#include <algorithm>

namespace fzip {

Matrix Matrix::identity(const FieldRef& f, unsigned n) {
    Matrix m(f, n, n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    const auto& F = *field_;
    Matrix r(field_, rows_, o.cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            unsigned a = at(i, k);
            if (a == 0) continue;
            for (unsigned j = 0; j < o.cols_; ++j) {
                unsigned prod = F.mul(a, o.at(k, j));
                r.set(i, j, F.add(r.at(i, j), prod));
            }
        }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

std::vector<unsigned> Matrix::apply(const std::vector<unsigned>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    const auto& F = *field_;
    std::vector<unsigned> r(rows_, 0);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            r[i] = F.add(r[i], F.mul(at(i, j), v[j]));
    return r;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const auto& F = *field_;
    Matrix a = *this;
    Matrix inv = identity(field_, rows_);
    for (unsigned col = 0, row = 0; col < cols_; ++col, ++row) {
        unsigned piv = row;
        while (piv < rows_ && a.at(piv, col) == 0) ++piv;
        if (piv == rows_) return std::nullopt;
        if (piv != row)
            for (unsigned j = 0; j < cols_; ++j) {
                std::swap(a.entries_[static_cast<size_t>(piv) * cols_ + j],
                          a.entries_[static_cast<size_t>(row) * cols_ + j]);
                std::swap(inv.entries_[static_cast<size_t>(piv) * cols_ + j],
                          inv.entries_[static_cast<size_t>(row) * cols_ + j]);
            }
        unsigned s = F.inv(a.at(row, col));
        for (unsigned j = 0; j < cols_; ++j) {
            a.set(row, j, F.mul(a.at(row, j), s));
            inv.set(row, j, F.mul(inv.at(row, j), s));
        }
        for (unsigned i = 0; i < rows_; ++i) {
            if (i == row) continue;
            unsigned c = a.at(i, col);
            if (c == 0) continue;
            for (unsigned j = 0; j < cols_; ++j) {
                a.set(i, j, F.sub(a.at(i, j), F.mul(c, a.at(row, j))));
                inv.set(i, j, F.sub(inv.at(i, j), F.mul(c, inv.at(row, j))));
            }
        }
    }
    return inv;
}

unsigned Matrix::rank() const { return static_cast<unsigned>(rref(*this).pivots.size()); }

Matrix Matrix::frobenius() const {
    Matrix r = *this;
    for (auto& e : r.entries_) e = field_->frob_q(e);
    return r;
}

Matrix Matrix::frobenius_inverse() const {
    Matrix r = *this;
    for (auto& e : r.entries_) e = field_->frob_q_inv(e);
    return r;
}

RrefResult rref(const Matrix& m) {
    const auto& F = *m.field();
    Matrix a = m;
    std::vector<unsigned> pivots;
    unsigned row = 0;
    for (unsigned col = 0; col < a.cols() && row < a.rows(); ++col) {
        unsigned piv = row;
        while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (unsigned j = 0; j < a.cols(); ++j) {
                unsigned t = a.at(piv, j);
                a.set(piv, j, a.at(row, j));
                a.set(row, j, t);
            }
        unsigned s = F.inv(a.at(row, col));
        for (unsigned j = 0; j < a.cols(); ++j) a.set(row, j, F.mul(a.at(row, j), s));
        for (unsigned i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            unsigned c = a.at(i, col);
            if (c == 0) continue;
            for (unsigned j = 0; j < a.cols(); ++j)
                a.set(i, j, F.sub(a.at(i, j), F.mul(c, a.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

Subspace Subspace::span(const Matrix& m, unsigned ambient_dim) {
    if (m.cols() != ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
    auto r = rref(m);
    Subspace s;
    s.n_ = ambient_dim;
    s.pivots_ = r.pivots;
    Matrix basis(m.field(), static_cast<unsigned>(r.pivots.size()), ambient_dim);
    for (unsigned i = 0; i < r.pivots.size(); ++i)
        for (unsigned j = 0; j < ambient_dim; ++j) basis.set(i, j, r.mat.at(i, j));
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::zero(const FieldRef& f, unsigned n) {
    Subspace s;
    s.n_ = n;
    s.basis_ = Matrix(f, 0, n);
    return s;
}

Subspace Subspace::full(const FieldRef& f, unsigned n) {
    return span(Matrix::identity(f, n), n);
}

Subspace Subspace::coordinate(const FieldRef& f, unsigned n, const std::vector<unsigned>& idx) {
    Matrix m(f, static_cast<unsigned>(idx.size()), n);
    for (unsigned i = 0; i < idx.size(); ++i) {
        if (idx[i] >= n) throw std::invalid_argument("coordinate index out of range");
        m.set(i, idx[i], 1);
    }
    return span(m, n);
}

bool Subspace::contains(const std::vector<unsigned>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](unsigned x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (unsigned i = 0; i < other.dim(); ++i) {
        std::vector<unsigned> row(n_);
        for (unsigned j = 0; j < n_; ++j) row[j] = other.basis_.at(i, j);
        if (!contains(row)) return false;
    }
    return true;
}

std::vector<unsigned> Subspace::reduce(std::vector<unsigned> v) const {
    const auto& F = *field();
    for (unsigned i = 0; i < dim(); ++i) {
        unsigned c = v[pivots_[i]];
        if (c == 0) continue;
        for (unsigned j = 0; j < n_; ++j) v[j] = F.sub(v[j], F.mul(c, basis_.at(i, j)));
    }
    return v;
}

bool Subspace::operator<(const Subspace& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_.entries() < o.basis_.entries();
}

namespace {
Matrix stack(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    for (unsigned i = 0; i < a.rows(); ++i)
        for (unsigned j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (unsigned i = 0; i < b.rows(); ++i)
        for (unsigned j = 0; j < b.cols(); ++j) m.set(a.rows() + i, j, b.at(i, j));
    return m;
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || !a.field()->same(*b.field()))
        throw std::invalid_argument("subspace_sum: ambient mismatch");
    return Subspace::span(stack(a.basis(), b.basis()), a.ambient_dim());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || !a.field()->same(*b.field()))
        throw std::invalid_argument("subspace_intersect: ambient mismatch");
    // Zassenhaus: row-reduce [A|A; B|0]; rows with zero left half carry the
    // intersection in the right half.
    const unsigned n = a.ambient_dim();
    Matrix big(a.field(), a.dim() + b.dim(), 2 * n);
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < n; ++j) {
            big.set(i, j, a.basis().at(i, j));
            big.set(i, n + j, a.basis().at(i, j));
        }
    for (unsigned i = 0; i < b.dim(); ++i)
        for (unsigned j = 0; j < n; ++j) big.set(a.dim() + i, j, b.basis().at(i, j));
    auto r = rref(big);
    std::vector<std::vector<unsigned>> rows;
    for (unsigned i = 0; i < r.mat.rows(); ++i) {
        bool left_zero = true;
        for (unsigned j = 0; j < n && left_zero; ++j)
            if (r.mat.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<unsigned> row(n);
        bool nonzero = false;
        for (unsigned j = 0; j < n; ++j) {
            row[j] = r.mat.at(i, n + j);
            nonzero |= row[j] != 0;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    Matrix m(a.field(), static_cast<unsigned>(rows.size()), n);
    for (unsigned i = 0; i < rows.size(); ++i)
        for (unsigned j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
    return Subspace::span(m, n);
}

Subspace complement_in(const Subspace& inner, const Subspace& outer) {
    if (inner.ambient_dim() != outer.ambient_dim())
        throw std::invalid_argument("complement_in: ambient mismatch");
    if (!outer.contains(inner))
        throw std::invalid_argument("complement_in: inner is not contained in outer");
    const unsigned n = inner.ambient_dim();
    Matrix work = inner.basis();
    std::vector<std::vector<unsigned>> chosen;
    unsigned rank = inner.dim();
    for (unsigned i = 0; i < outer.dim() && rank < outer.dim(); ++i) {
        std::vector<unsigned> row(n);
        for (unsigned j = 0; j < n; ++j) row[j] = outer.basis().at(i, j);
        Matrix cand(inner.field(), work.rows() + 1, n);
        for (unsigned r = 0; r < work.rows(); ++r)
            for (unsigned j = 0; j < n; ++j) cand.set(r, j, work.at(r, j));
        for (unsigned j = 0; j < n; ++j) cand.set(work.rows(), j, row[j]);
        if (cand.rank() > rank) {
            chosen.push_back(row);
            work = cand;
            ++rank;
        }
    }
    Matrix m(inner.field(), static_cast<unsigned>(chosen.size()), n);
    for (unsigned i = 0; i < chosen.size(); ++i)
        for (unsigned j = 0; j < n; ++j) m.set(i, j, chosen[i][j]);
    return Subspace::span(m, n);
}

Subspace frobenius_twist_subspace(const Subspace& s) {
    return Subspace::span(s.basis().frobenius(), s.ambient_dim());
}

Subspace frobenius_twist_inverse_subspace(const Subspace& s) {
    return Subspace::span(s.basis().frobenius_inverse(), s.ambient_dim());
}

Matrix frobenius_twist_matrix(const Matrix& m) { return m.frobenius(); }

Subspace apply_matrix(const Matrix& g, const Subspace& s) {
    // rows of the basis are vectors; g acts on column vectors
    return Subspace::span(s.basis().mul(g.transpose()), s.ambient_dim());
}

Subspace kernel(const Matrix& m) {
    auto r = rref(m);
    const unsigned n = m.cols();
    const auto& F = *m.field();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<unsigned>> rows;
    for (unsigned free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<unsigned> v(n, 0);
        v[free] = 1;
        for (unsigned i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = F.neg(r.mat.at(i, free));
        rows.push_back(std::move(v));
    }
    Matrix b(m.field(), static_cast<unsigned>(rows.size()), n);
    for (unsigned i = 0; i < rows.size(); ++i)
        for (unsigned j = 0; j < n; ++j) b.set(i, j, rows[i][j]);
    return Subspace::span(b, n);
}

Subspace column_space(const Matrix& m) {
    return Subspace::span(m.transpose(), m.rows());
}

std::vector<unsigned> solve_in_column_space(const Matrix& b, const std::vector<unsigned>& v) {
    // Row-reduce [B | v].
    Matrix aug(b.field(), b.rows(), b.cols() + 1);
    for (unsigned i = 0; i < b.rows(); ++i) {
        for (unsigned j = 0; j < b.cols(); ++j) aug.set(i, j, b.at(i, j));
        aug.set(i, b.cols(), v[i]);
    }
    auto r = rref(aug);
    std::vector<unsigned> x(b.cols(), 0);
    for (unsigned i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == b.cols())
            throw std::invalid_argument("solve_in_column_space: inconsistent system");
        x[r.pivots[i]] = r.mat.at(i, b.cols());
    }
    // With independent columns every pivot lands on a column of B.
    return x;
}

}  // namespace fzip
