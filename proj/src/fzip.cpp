#include "fzip/fzip.hpp"

#include <algorithm>
#include <sstream>

namespace fzip {

TypeFunction::TypeFunction(std::map<int, unsigned> support) : support_(std::move(support)) {
    for (auto it = support_.begin(); it != support_.end();) {
        if (it->second == 0)
            it = support_.erase(it);
        else {
            height_ += it->second;
            ++it;
        }
    }
    if (support_.empty()) throw std::invalid_argument("type function has empty support");
}

std::vector<int> TypeFunction::indices() const {
    std::vector<int> out;
    for (const auto& [i, v] : support_) out.push_back(i);
    return out;
}

unsigned TypeFunction::dim_desc(int i) const {
    unsigned d = 0;
    for (const auto& [j, v] : support_)
        if (j >= i) d += v;
    return d;
}

unsigned TypeFunction::dim_asc(int i) const {
    unsigned d = 0;
    for (const auto& [j, v] : support_)
        if (j <= i) d += v;
    return d;
}

TypeFunction TypeFunction::dual() const {
    std::map<int, unsigned> s;
    for (const auto& [i, v] : support_) s[-i] = v;
    return TypeFunction(std::move(s));
}

TypeFunction TypeFunction::convolve(const TypeFunction& o) const {
    std::map<int, unsigned> s;
    for (const auto& [i, v] : support_)
        for (const auto& [j, w] : o.support_) s[i + j] += v * w;
    return TypeFunction(std::move(s));
}

TypeComposition TypeFunction::parabolic_type() const {
    std::vector<unsigned> parts;  // (n_r, ..., n_1)
    for (auto it = support_.rbegin(); it != support_.rend(); ++it) parts.push_back(it->second);
    return composition_to_subset(parts);
}

TypeComposition TypeFunction::opposite_type() const {
    std::vector<unsigned> parts;  // (n_1, ..., n_r)
    for (const auto& [i, v] : support_) parts.push_back(v);
    return composition_to_subset(parts);
}

Flag::Flag(FlagDirection dir, unsigned n, FieldRef field, std::map<int, Subspace> members)
    : dir_(dir), n_(n), field_(std::move(field)), members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("flag needs at least one member");
    for (const auto& [i, s] : members_)
        if (s.ambient_dim() != n_) throw std::invalid_argument("flag member ambient mismatch");
}

Subspace Flag::at(int i) const {
    if (dir_ == FlagDirection::descending) {
        // constant on (i_{j-1}, i_j], full below, zero above
        if (i <= members_.begin()->first) return Subspace::full(field_, n_);
        auto it = members_.lower_bound(i);
        if (it == members_.end()) return Subspace::zero(field_, n_);
        return it->second;
    }
    if (i >= members_.rbegin()->first) return Subspace::full(field_, n_);
    auto it = members_.upper_bound(i);
    if (it == members_.begin()) return Subspace::zero(field_, n_);
    return std::prev(it)->second;
}

Chain Flag::chain() const {
    Chain c;
    c.push_back(Subspace::zero(field_, n_));
    std::vector<Subspace> mids;
    for (const auto& [i, s] : members_) mids.push_back(s);
    std::sort(mids.begin(), mids.end(),
              [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
    for (auto& s : mids) {
        if (s.dim() == 0 || s.dim() == n_) continue;
        if (s.dim() == c.back().dim()) continue;  // repeated member
        c.push_back(s);
    }
    c.push_back(Subspace::full(field_, n_));
    return c;
}

TypeFunction Flag::type() const {
    std::map<int, unsigned> s;
    if (dir_ == FlagDirection::descending) {
        for (const auto& [i, sub] : members_) {
            unsigned below = at(i + 1).dim();
            if (sub.dim() > below) s[i] = sub.dim() - below;
        }
    } else {
        for (const auto& [i, sub] : members_) {
            unsigned below = at(i - 1).dim();
            if (sub.dim() > below) s[i] = sub.dim() - below;
        }
    }
    return TypeFunction(std::move(s));
}

Matrix graded_lifts(const Subspace& w, const Subspace& wsub) {
    const unsigned n = w.ambient_dim();
    std::vector<std::vector<unsigned>> rows;
    std::set<unsigned> subpiv(wsub.pivots().begin(), wsub.pivots().end());
    for (unsigned i = 0; i < w.dim(); ++i) {
        if (subpiv.count(w.pivots()[i])) continue;
        std::vector<unsigned> row(n);
        for (unsigned j = 0; j < n; ++j) row[j] = w.basis().at(i, j);
        rows.push_back(wsub.reduce(std::move(row)));
    }
    Matrix m(w.field(), static_cast<unsigned>(rows.size()), n);
    for (unsigned i = 0; i < rows.size(); ++i)
        for (unsigned j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
    return m;
}

std::vector<unsigned> graded_coords(const Subspace& w, const Subspace& wsub,
                                    const std::vector<unsigned>& v) {
    auto lifts = graded_lifts(w, wsub);
    auto vred = wsub.reduce(v);
    return solve_in_column_space(lifts.transpose(), vred);
}

namespace {

std::string index_str(int i) {
    std::ostringstream os;
    os << i;
    return os.str();
}

}  // namespace

ValidationReport validate(const FZip& z) {
    ValidationReport rep;
    auto problem = [&](const std::string& s) { rep.problems.push_back(s); };

    if (!z.field) {
        problem("missing field");
        return rep;
    }
    if (z.type.height() != z.n) problem("type height differs from n");
    if (z.C.direction() != FlagDirection::descending) problem("C flag is not descending");
    if (z.D.direction() != FlagDirection::ascending) problem("D flag is not ascending");

    // nesting and tails
    for (int i : z.type.indices()) {
        if (!z.C.at(i).contains(z.C.at(i + 1)))
            problem("C flag not nested at index " + index_str(i));
        if (!z.D.at(i).contains(z.D.at(i - 1)))
            problem("D flag not nested at index " + index_str(i));
    }
    // graded dimensions against the type
    for (int i : z.type.indices()) {
        unsigned gc = z.C.at(i).dim() - z.C.at(i + 1).dim();
        unsigned gd = z.D.at(i).dim() - z.D.at(i - 1).dim();
        if (gc != z.type.at(i)) problem("C graded dimension mismatch at index " + index_str(i));
        if (gd != z.type.at(i)) problem("D graded dimension mismatch at index " + index_str(i));
    }
    // phi exactly on the support, square and invertible
    for (const auto& [i, m] : z.phi) {
        if (z.type.at(i) == 0) {
            problem("phi present at index " + index_str(i) + " outside the support");
            continue;
        }
        if (m.rows() != z.type.at(i) || m.cols() != z.type.at(i))
            problem("phi block shape mismatch at index " + index_str(i));
        else if (!m.invertible())
            problem("phi is not an isomorphism at index " + index_str(i));
    }
    for (int i : z.type.indices())
        if (!z.phi.count(i)) problem("phi missing at index " + index_str(i));

    rep.type = z.type;
    return rep;
}

FZip standard_fzip(const TypeFunction& tau, const WeylElement& u, unsigned p) {
    auto J = tau.parabolic_type();
    auto K = tau.opposite_type();
    const unsigned n = tau.height();
    if (u.kind() != WeylKind::A || u.rank() != n)
        throw std::invalid_argument("standard_fzip: u must be a permutation of {1..n}");
    for (unsigned i : J.subset.included)
        if (has_left_descent(u, i))
            throw std::invalid_argument("standard_fzip: u is not minimal in W_J u");

    auto field = FieldParams::make(p, 1, 1);
    auto x = double_coset_x(J.subset, K.subset);
    auto uinv = u.inverse();

    auto idx = tau.indices();
    const unsigned r = static_cast<unsigned>(idx.size());
    std::vector<unsigned> m(r + 1, 0);  // m_j = n_1 + ... + n_j
    for (unsigned j = 1; j <= r; ++j) m[j] = m[j - 1] + tau.at(idx[j - 1]);

    std::map<int, Subspace> cmem, dmem;
    for (unsigned j = 1; j <= r; ++j) {
        std::vector<unsigned> cols;
        for (unsigned l = 1; l <= n - m[j - 1]; ++l)
            cols.push_back(static_cast<unsigned>(uinv.apply(static_cast<int>(l)) - 1));
        cmem.emplace(idx[j - 1], Subspace::coordinate(field, n, cols));
        std::vector<unsigned> pref;
        for (unsigned l = 1; l <= m[j]; ++l) pref.push_back(l - 1);
        dmem.emplace(idx[j - 1], Subspace::coordinate(field, n, pref));
    }

    FZip z;
    z.field = field;
    z.n = n;
    z.type = tau;
    z.C = Flag(FlagDirection::descending, n, field, std::move(cmem));
    z.D = Flag(FlagDirection::ascending, n, field, std::move(dmem));

    // phi_{i_j} is induced by e_{u^{-1}(l)} -> e_{x(l)}.  The canonical
    // graded basis of gr^{i_j}_C is {e_{u^{-1}(l)} : n-m_j < l <= n-m_{j-1}}
    // in increasing coordinate order, which (u minimal in W_J u) is the
    // order of increasing l; the target basis is e_{m_{j-1}+1..m_j}.
    for (unsigned j = 1; j <= r; ++j) {
        unsigned sz = tau.at(idx[j - 1]);
        Matrix block(field, sz, sz);
        for (unsigned c = 0; c < sz; ++c) {
            unsigned l = n - m[j] + 1 + c;
            unsigned row = static_cast<unsigned>(x.apply(static_cast<int>(l))) - m[j - 1] - 1;
            block.set(row, c, 1);
        }
        z.phi.emplace(idx[j - 1], std::move(block));
    }
    return z;
}

std::vector<std::string> validate_dieudonne(const DieudonneModule& d) {
    std::vector<std::string> problems;
    if (d.F_mat.rows() != d.n || d.F_mat.cols() != d.n || d.V_mat.rows() != d.n ||
        d.V_mat.cols() != d.n) {
        problems.push_back("operator matrices must be n x n");
        return problems;
    }
    auto kerF = frobenius_twist_inverse_subspace(kernel(d.F_mat));
    auto imF = column_space(d.F_mat);
    auto kerV = frobenius_twist_subspace(kernel(d.V_mat));
    auto imV = column_space(d.V_mat);
    if (!(kerF == imV)) problems.push_back("Ker(F) != Im(V)");
    if (!(imF == kerV)) problems.push_back("Im(F) != Ker(V)");
    return problems;
}

namespace {

Matrix columns_matrix(const FieldRef& f, const std::vector<std::vector<unsigned>>& cols,
                      unsigned n) {
    Matrix m(f, n, static_cast<unsigned>(cols.size()));
    for (unsigned j = 0; j < cols.size(); ++j)
        for (unsigned i = 0; i < n; ++i) m.set(i, j, cols[j][i]);
    return m;
}

std::vector<unsigned> row_of(const Matrix& m, unsigned i) {
    std::vector<unsigned> r(m.cols());
    for (unsigned j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
    return r;
}

// Matrix of the linear map v -> graded class of v in W/W', as a
// (dim W - dim W') x n matrix (defined on W; columns indexed by e_j).
Matrix class_projection(const Subspace& w, const Subspace& wsub) {
    const auto f = w.field();
    const unsigned n = w.ambient_dim();
    auto lifts = graded_lifts(w, wsub);
    Matrix proj(f, lifts.rows(), n);
    for (unsigned j = 0; j < n; ++j) {
        std::vector<unsigned> e(n, 0);
        e[j] = 1;
        if (!w.contains(e)) continue;  // projection only used on vectors of W
        auto c = graded_coords(w, wsub, e);
        for (unsigned i = 0; i < proj.rows(); ++i) proj.set(i, j, c[i]);
    }
    return proj;
}

}  // namespace

DieudonneModule to_dieudonne(const FZip& z) {
    for (int i : z.type.indices())
        if (i != 0 && i != 1)
            throw std::invalid_argument("to_dieudonne: type support must lie in {0,1}");
    const auto& f = z.field;
    const unsigned n = z.n;
    DieudonneModule d;
    d.field = f;
    d.n = n;
    d.F_mat = Matrix(f, n, n);
    d.V_mat = Matrix(f, n, n);

    const auto C1 = z.C.at(1);
    const auto D0 = z.D.at(0);
    if (z.type.at(0) > 0) {
        // F = (lift to D_0) . phi_0 . sigma(class projection V -> gr^0_C)
        auto gr0 = class_projection(Subspace::full(f, n), C1);
        Matrix lift = z.D.at(0).basis().transpose();  // columns = D_0 basis
        d.F_mat = lift.mul(z.phi.at(0)).mul(gr0.frobenius());
    }
    if (z.type.at(1) > 0) {
        // V = (lift to C^1) . sigma^{-1}(phi_1^{-1} . class projection V -> gr_1^D)
        auto gr1 = class_projection(Subspace::full(f, n), D0);
        Matrix lift = C1.basis().transpose();
        auto phi1_inv = z.phi.at(1).inverse();
        if (!phi1_inv) throw std::invalid_argument("to_dieudonne: phi_1 is singular");
        d.V_mat = lift.mul(phi1_inv->mul(gr1).frobenius_inverse());
    }
    return d;
}

FZip from_dieudonne(const DieudonneModule& d) {
    auto problems = validate_dieudonne(d);
    if (!problems.empty())
        throw std::invalid_argument("from_dieudonne: " + problems.front());
    const auto& f = d.field;
    const unsigned n = d.n;
    auto C1 = frobenius_twist_inverse_subspace(kernel(d.F_mat));
    auto D0 = column_space(d.F_mat);
    unsigned t1 = C1.dim(), t0 = n - t1;

    std::map<int, unsigned> supp;
    if (t0) supp[0] = t0;
    if (t1) supp[1] = t1;
    TypeFunction tau{supp};

    std::map<int, Subspace> cmem, dmem;
    if (t0) {
        cmem.emplace(0, Subspace::full(f, n));
        dmem.emplace(0, D0);
    }
    if (t1) {
        cmem.emplace(1, C1);
        dmem.emplace(1, Subspace::full(f, n));
    }
    FZip z;
    z.field = f;
    z.n = n;
    z.type = tau;
    z.C = Flag(FlagDirection::descending, n, f, std::move(cmem));
    z.D = Flag(FlagDirection::ascending, n, f, std::move(dmem));

    if (t0) {
        // phi_0 column s: D_0-coordinates of F(w_s) for the canonical basis
        // classes w_s of V / C^1
        auto lifts = graded_lifts(Subspace::full(f, n), C1);
        std::vector<std::vector<unsigned>> cols;
        for (unsigned s = 0; s < lifts.rows(); ++s) {
            auto img = d.F_mat.apply([&] {
                auto v = row_of(lifts, s);
                for (auto& e : v) e = f->frob_q(e);
                return v;
            }());
            cols.push_back(solve_in_column_space(D0.basis().transpose(), img));
        }
        z.phi.emplace(0, columns_matrix(f, cols, t0));
    }
    if (t1) {
        // Vbar: gr_1^D -> C^1; phi_1 = sigma(Vbar)^{-1}
        auto lifts = graded_lifts(Subspace::full(f, n), D0);
        std::vector<std::vector<unsigned>> cols;
        for (unsigned s = 0; s < lifts.rows(); ++s) {
            auto v = row_of(lifts, s);
            for (auto& e : v) e = f->frob_q_inv(e);
            auto img = d.V_mat.apply(v);
            cols.push_back(solve_in_column_space(C1.basis().transpose(), img));
        }
        auto vbar = columns_matrix(f, cols, t1).frobenius();
        auto inv = vbar.inverse();
        if (!inv) throw std::invalid_argument("from_dieudonne: V does not induce an isomorphism");
        z.phi.emplace(1, *inv);
    }
    return z;
}

namespace {

Subspace annihilator(const Subspace& s) {
    if (s.dim() == 0) return Subspace::full(s.field(), s.ambient_dim());
    return kernel(s.basis());
}

// Pairing matrix <rows of a, rows of b> under the standard dot product.
Matrix pairing_matrix(const Matrix& a, const Matrix& b) {
    return a.mul(b.transpose());
}

}  // namespace

FZip dual(const FZip& z) {
    const auto& f = z.field;
    const unsigned n = z.n;
    TypeFunction tau = z.type.dual();

    std::map<int, Subspace> cmem, dmem;
    for (int i : tau.indices()) {
        cmem.emplace(i, annihilator(z.C.at(1 - i)));
        dmem.emplace(i, annihilator(z.D.at(-1 - i)));
    }
    FZip out;
    out.field = f;
    out.n = n;
    out.type = tau;
    out.C = Flag(FlagDirection::descending, n, f, std::move(cmem));
    out.D = Flag(FlagDirection::ascending, n, f, std::move(dmem));

    for (int i : tau.indices()) {
        // P_C[s][t] = <dual C-lift_s at i, C-lift_t at -i>, and likewise for D.
        auto lc_dual = graded_lifts(out.C.at(i), out.C.at(i + 1));
        auto lc = graded_lifts(z.C.at(-i), z.C.at(-i + 1));
        auto ld_dual = graded_lifts(out.D.at(i), out.D.at(i - 1));
        auto ld = graded_lifts(z.D.at(-i), z.D.at(-i - 1));
        auto pc = pairing_matrix(lc_dual, lc);
        auto pd = pairing_matrix(ld_dual, ld);
        auto phi_inv = z.phi.at(-i).inverse();
        if (!phi_inv) throw std::invalid_argument("dual: phi is singular");
        // phi_dual satisfies phi_dual^T . P_D . phi = sigma(P_C)
        auto pd_inv = pd.inverse();
        if (!pd_inv) throw std::logic_error("dual: degenerate graded pairing");
        auto phi_dual_t = pc.frobenius().mul(*phi_inv).mul(*pd_inv);
        out.phi.emplace(i, phi_dual_t.transpose());
    }
    return out;
}

FZip tensor(const FZip& a, const FZip& b) {
    if (!a.field->same(*b.field))
        throw std::invalid_argument("tensor: field mismatch");
    const auto& f = a.field;
    const unsigned n = a.n * b.n;
    TypeFunction tau = a.type.convolve(b.type);

    auto kron_vec = [&](const std::vector<unsigned>& u, const std::vector<unsigned>& v) {
        std::vector<unsigned> r(n);
        for (unsigned s = 0; s < a.n; ++s)
            for (unsigned t = 0; t < b.n; ++t) r[s * b.n + t] = f->mul(u[s], v[t]);
        return r;
    };

    // C^i(ab) = sum_{j+k=i} C^j_a (x) C^k_b
    std::map<int, Subspace> cmem, dmem;
    for (int i : tau.indices()) {
        // the sum over j+k=i only jumps where j or k crosses a support index
        auto a_idx = a.type.indices();
        std::set<int> js(a_idx.begin(), a_idx.end());
        for (int k : b.type.indices()) js.insert(i - k);
        std::vector<std::vector<unsigned>> crows, drows;
        for (int j : js) {
            auto ca = a.C.at(j);
            auto cb = b.C.at(i - j);
            for (unsigned s = 0; s < ca.dim(); ++s)
                for (unsigned t = 0; t < cb.dim(); ++t)
                    crows.push_back(kron_vec(row_of(ca.basis(), s), row_of(cb.basis(), t)));
            auto da = a.D.at(j);
            auto db = b.D.at(i - j);
            for (unsigned s = 0; s < da.dim(); ++s)
                for (unsigned t = 0; t < db.dim(); ++t)
                    drows.push_back(kron_vec(row_of(da.basis(), s), row_of(db.basis(), t)));
        }
        Matrix cm(f, static_cast<unsigned>(crows.size()), n);
        for (unsigned r0 = 0; r0 < crows.size(); ++r0)
            for (unsigned c0 = 0; c0 < n; ++c0) cm.set(r0, c0, crows[r0][c0]);
        Matrix dm(f, static_cast<unsigned>(drows.size()), n);
        for (unsigned r0 = 0; r0 < drows.size(); ++r0)
            for (unsigned c0 = 0; c0 < n; ++c0) dm.set(r0, c0, drows[r0][c0]);
        cmem.emplace(i, Subspace::span(cm, n));
        dmem.emplace(i, Subspace::span(dm, n));
    }

    FZip out;
    out.field = f;
    out.n = n;
    out.type = tau;
    out.C = Flag(FlagDirection::descending, n, f, std::move(cmem));
    out.D = Flag(FlagDirection::ascending, n, f, std::move(dmem));

    for (int i : tau.indices()) {
        // classes of l^{Ca}_j (x) l^{Cb}_{i-j} form a basis of gr^i; T_C is
        // the transition to the canonical graded basis
        std::vector<std::vector<unsigned>> tc_cols, td_cols;
        std::vector<std::pair<int, int>> blocks;
        for (int j : a.type.indices()) {
            int k = i - j;
            if (a.type.at(j) == 0 || b.type.at(k) == 0) continue;
            blocks.emplace_back(j, k);
            auto la = graded_lifts(a.C.at(j), a.C.at(j + 1));
            auto lb = graded_lifts(b.C.at(k), b.C.at(k + 1));
            for (unsigned s = 0; s < la.rows(); ++s)
                for (unsigned t = 0; t < lb.rows(); ++t)
                    tc_cols.push_back(graded_coords(out.C.at(i), out.C.at(i + 1),
                                                    kron_vec(row_of(la, s), row_of(lb, t))));
            auto da = graded_lifts(a.D.at(j), a.D.at(j - 1));
            auto db = graded_lifts(b.D.at(k), b.D.at(k - 1));
            for (unsigned s = 0; s < da.rows(); ++s)
                for (unsigned t = 0; t < db.rows(); ++t)
                    td_cols.push_back(graded_coords(out.D.at(i), out.D.at(i - 1),
                                                    kron_vec(row_of(da, s), row_of(db, t))));
        }
        unsigned sz = tau.at(i);
        auto tc = columns_matrix(f, tc_cols, sz);
        auto td = columns_matrix(f, td_cols, sz);
        // block diagonal of phi^a_j (x) phi^b_k in the same ordering
        Matrix big(f, sz, sz);
        unsigned off = 0;
        for (auto [j, k] : blocks) {
            const auto& pa = a.phi.at(j);
            const auto& pb = b.phi.at(k);
            unsigned bs = pa.rows() * pb.rows();
            for (unsigned s1 = 0; s1 < pa.rows(); ++s1)
                for (unsigned t1 = 0; t1 < pb.rows(); ++t1)
                    for (unsigned s2 = 0; s2 < pa.cols(); ++s2)
                        for (unsigned t2 = 0; t2 < pb.cols(); ++t2)
                            big.set(off + s1 * pb.rows() + t1, off + s2 * pb.cols() + t2,
                                    f->mul(pa.at(s1, s2), pb.at(t1, t2)));
            off += bs;
        }
        auto tc_inv = tc.frobenius().inverse();
        if (!tc_inv) throw std::logic_error("tensor: transition matrix singular");
        out.phi.emplace(i, td.mul(big).mul(*tc_inv));
    }
    return out;
}

FZip base_change(const FZip& z, const FieldRef& target) {
    if (z.field->same(*target)) return z;
    auto conv_matrix = [&](const Matrix& m) {
        Matrix out(target, m.rows(), m.cols());
        for (unsigned i = 0; i < m.rows(); ++i)
            for (unsigned j = 0; j < m.cols(); ++j)
                out.set(i, j, embed_index(*z.field, m.at(i, j), *target));
        return out;
    };
    FZip out;
    out.field = target;
    out.n = z.n;
    out.type = z.type;
    std::map<int, Subspace> cmem, dmem;
    for (const auto& [i, s] : z.C.members())
        cmem.emplace(i, Subspace::span(conv_matrix(s.basis()), z.n));
    for (const auto& [i, s] : z.D.members())
        dmem.emplace(i, Subspace::span(conv_matrix(s.basis()), z.n));
    out.C = Flag(FlagDirection::descending, z.n, target, std::move(cmem));
    out.D = Flag(FlagDirection::ascending, z.n, target, std::move(dmem));
    for (const auto& [i, m] : z.phi) out.phi.emplace(i, conv_matrix(m));
    return out;
}

FZip apply_gl(const Matrix& g, const FZip& z) {
    if (g.rows() != z.n || g.cols() != z.n)
        throw std::invalid_argument("apply_gl: shape mismatch");
    if (!g.invertible()) throw std::invalid_argument("apply_gl: singular matrix");
    const auto& f = z.field;

    FZip out;
    out.field = f;
    out.n = z.n;
    out.type = z.type;
    std::map<int, Subspace> cmem, dmem;
    for (const auto& [i, s] : z.C.members()) cmem.emplace(i, apply_matrix(g, s));
    for (const auto& [i, s] : z.D.members()) dmem.emplace(i, apply_matrix(g, s));
    out.C = Flag(FlagDirection::descending, z.n, f, std::move(cmem));
    out.D = Flag(FlagDirection::ascending, z.n, f, std::move(dmem));

    for (int i : z.type.indices()) {
        // induced maps on graded pieces, in canonical bases
        auto hc = [&] {
            auto lifts = graded_lifts(z.C.at(i), z.C.at(i + 1));
            std::vector<std::vector<unsigned>> cols;
            for (unsigned s = 0; s < lifts.rows(); ++s)
                cols.push_back(graded_coords(out.C.at(i), out.C.at(i + 1),
                                             g.apply(row_of(lifts, s))));
            return columns_matrix(f, cols, z.type.at(i));
        }();
        auto hd = [&] {
            auto lifts = graded_lifts(z.D.at(i), z.D.at(i - 1));
            std::vector<std::vector<unsigned>> cols;
            for (unsigned s = 0; s < lifts.rows(); ++s)
                cols.push_back(graded_coords(out.D.at(i), out.D.at(i - 1),
                                             g.apply(row_of(lifts, s))));
            return columns_matrix(f, cols, z.type.at(i));
        }();
        auto hc_inv = hc.frobenius().inverse();
        if (!hc_inv) throw std::logic_error("apply_gl: induced graded map singular");
        out.phi.emplace(i, hd.mul(z.phi.at(i)).mul(*hc_inv));
    }
    return out;
}

uint64_t Rng::next() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

unsigned Rng::below(unsigned bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return static_cast<unsigned>(v % bound);
}

Matrix random_invertible(const FieldRef& f, unsigned n, Rng& rng) {
    for (;;) {
        Matrix m(f, n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m.set(i, j, rng.below(f->card()));
        if (m.invertible()) return m;
    }
}

FZip random_fzip(const TypeFunction& tau, const FieldRef& field, uint64_t seed) {
    Rng rng(seed);
    const unsigned n = tau.height();
    auto gc = random_invertible(field, n, rng);
    auto gd = random_invertible(field, n, rng);

    std::map<int, Subspace> cmem, dmem;
    for (int i : tau.indices()) {
        std::vector<unsigned> cidx, didx;
        for (unsigned l = 0; l < tau.dim_desc(i); ++l) cidx.push_back(l);
        for (unsigned l = 0; l < tau.dim_asc(i); ++l) didx.push_back(l);
        cmem.emplace(i, apply_matrix(gc, Subspace::coordinate(field, n, cidx)));
        dmem.emplace(i, apply_matrix(gd, Subspace::coordinate(field, n, didx)));
    }
    FZip z;
    z.field = field;
    z.n = n;
    z.type = tau;
    z.C = Flag(FlagDirection::descending, n, field, std::move(cmem));
    z.D = Flag(FlagDirection::ascending, n, field, std::move(dmem));
    for (int i : tau.indices()) {
        unsigned sz = tau.at(i);
        Matrix m(field, sz, sz);
        do {
            for (unsigned r0 = 0; r0 < sz; ++r0)
                for (unsigned c0 = 0; c0 < sz; ++c0) m.set(r0, c0, rng.below(field->card()));
        } while (!m.invertible());
        z.phi.emplace(i, std::move(m));
    }
    return z;
}

}  // namespace fzip
