#include "fzip/forms.hpp"

#include <algorithm>
#include <sstream>

namespace fzip {

std::vector<std::string> validate_form(const BilinearForm& form) {
    std::vector<std::string> problems;
    const auto& g = form.gram;
    const auto& f = g.field();
    const unsigned n = g.rows();
    if (g.cols() != n) {
        problems.push_back("gram matrix is not square");
        return problems;
    }
    if (!g.invertible()) problems.push_back("gram matrix is singular (pairing not perfect)");
    if (form.kind == FormKind::symplectic) {
        if (n % 2 != 0) problems.push_back("symplectic form needs even dimension");
        for (unsigned i = 0; i < n; ++i) {
            if (g.at(i, i) != 0) {
                problems.push_back("symplectic gram matrix has nonzero diagonal");
                break;
            }
        }
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (g.at(i, j) != f->neg(g.at(j, i))) {
                    problems.push_back("symplectic gram matrix is not antisymmetric");
                    return problems;
                }
    } else {
        if (f->p() == 2) problems.push_back("symmetric forms require characteristic != 2");
        if (n % 2 != 1) problems.push_back("orthogonal case requires odd dimension");
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (g.at(i, j) != g.at(j, i)) {
                    problems.push_back("gram matrix is not symmetric");
                    return problems;
                }
    }
    return problems;
}

BilinearForm standard_form(FormKind kind, const FieldRef& f, unsigned n) {
    Matrix g(f, n, n);
    if (kind == FormKind::symplectic) {
        for (unsigned i = 0; i < n / 2; ++i) {
            g.set(i, n - 1 - i, 1);
            g.set(n - 1 - i, i, f->neg(1));
        }
    } else {
        for (unsigned i = 0; i < n; ++i) g.set(i, n - 1 - i, 1);
    }
    return {kind, std::move(g)};
}

Subspace perp(const Subspace& s, const BilinearForm& form) {
    if (s.ambient_dim() != form.dim())
        throw std::invalid_argument("perp: ambient mismatch");
    if (s.dim() == 0) return Subspace::full(s.field(), s.ambient_dim());
    // v in perp  <=>  (basis . gram^T) v = 0
    return kernel(s.basis().mul(form.gram.transpose()));
}

bool admissible(const TypeFunction& tau) {
    auto idx = tau.indices();
    for (size_t a = 0; a < idx.size(); ++a)
        if (tau.at(idx[a]) != tau.at(idx[idx.size() - 1 - a])) return false;
    return true;
}

namespace {

std::string index_pair(int i, int j) {
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    return os.str();
}

// Pairing matrix between graded lifts: P[s][t] = psi(lift_s, lift_t).
Matrix graded_pairing(const Matrix& lifts_a, const Matrix& lifts_b, const BilinearForm& form) {
    return lifts_a.mul(form.gram).mul(lifts_b.transpose());
}

}  // namespace

PolarizedReport validate_polarized(const PolarizedFZip& z) {
    PolarizedReport rep;
    auto problem = [&](const std::string& s) { rep.problems.push_back(s); };

    for (const auto& p : validate_form(z.form)) problem(p);
    if (z.form.dim() != z.zip.n) problem("form dimension differs from height");
    auto zrep = validate(z.zip);
    for (const auto& p : zrep.problems) problem("underlying zip: " + p);
    if (!rep.ok()) return rep;

    const auto& tau = z.zip.type;
    if (!admissible(tau)) {
        problem("type is not admissible (multiplicities not palindromic)");
        return rep;
    }

    auto idx = tau.indices();
    const size_t r = idx.size();
    // support pairing i_a <-> i_{r+1-a}; the perp relations pin the indices
    for (size_t a = 0; a < r; ++a) {
        int i = idx[a];
        int j = idx[r - 1 - a];
        if (!(perp(z.zip.C.at(i), z.form) == z.zip.C.at(j + 1)))
            problem("C flag not self-perpendicular at " + index_pair(i, j));
        if (!(perp(z.zip.D.at(i - 1), z.form) == z.zip.D.at(j)))
            problem("D flag not self-perpendicular at " + index_pair(i, j));
    }
    if (!rep.ok()) return rep;

    // commutative square: phi_j^T . B_{ji} . phi_i = sigma(A_{ji}) where
    // A, B pair gr^j against gr^i through psi
    for (size_t a = 0; a < r; ++a) {
        int i = idx[a];
        int j = idx[r - 1 - a];
        auto lc_j = graded_lifts(z.zip.C.at(j), z.zip.C.at(j + 1));
        auto lc_i = graded_lifts(z.zip.C.at(i), z.zip.C.at(i + 1));
        auto ld_j = graded_lifts(z.zip.D.at(j), z.zip.D.at(j - 1));
        auto ld_i = graded_lifts(z.zip.D.at(i), z.zip.D.at(i - 1));
        auto A = graded_pairing(lc_j, lc_i, z.form);
        auto B = graded_pairing(ld_j, ld_i, z.form);
        auto lhs = z.zip.phi.at(j).transpose().mul(B).mul(z.zip.phi.at(i));
        if (!(lhs == A.frobenius()))
            problem("compatibility square fails at " + index_pair(i, j));
    }
    return rep;
}

ClassicalGroupData classical_data(const TypeFunction& tau, FormKind kind) {
    const unsigned n = tau.height();
    ClassicalGroupData data;
    if (kind == FormKind::symplectic) {
        if (n % 2 != 0) throw std::invalid_argument("symplectic case needs even height");
        data.rank = n / 2;
        data.target = IotaTarget::Sp;
    } else {
        if (n % 2 != 1) throw std::invalid_argument("orthogonal case needs odd height");
        data.rank = n / 2;
        data.target = IotaTarget::SOodd;
    }
    // generators dropped at the isotropic member dimensions
    data.J1 = SimpleSubset::full(WeylKind::BC, data.rank);
    for (int i : tau.indices()) {
        unsigned d = tau.dim_desc(i + 1);  // proper C-member dimension
        if (d == 0 || d >= n) continue;
        unsigned iso = std::min(d, n - d);
        data.J1.included.erase(iso);
    }
    return data;
}

WeylElement iota(const WeylElement& u1, FormKind kind) {
    return iota_embed(u1, kind == FormKind::symplectic ? IotaTarget::Sp : IotaTarget::SOodd);
}

PolarizedClassifyResult classify_polarized(const PolarizedFZip& z) {
    auto rep = validate_polarized(z);
    if (!rep.ok())
        throw std::invalid_argument("classify_polarized: invalid input: " + rep.problems.front());

    PolarizedClassifyResult out;
    out.group = classical_data(z.zip.type, z.form.kind);
    out.u2 = classify(z.zip).u;
    for (const auto& cand : min_coset_reps(out.group.J1)) {
        if (iota_embed(cand, out.group.target) == out.u2) {
            out.u1 = cand;
            return out;
        }
    }
    throw std::logic_error(
        "classify_polarized: GL invariant has no preimage in the classical Weyl group");
}

}  // namespace fzip
