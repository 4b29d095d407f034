#include "fzip/classify.hpp"

#include <algorithm>

namespace fzip {

SimpleSubset chain_type(const Chain& c) {
    const unsigned n = c.back().ambient_dim();
    SimpleSubset J = SimpleSubset::full(WeylKind::A, n);
    for (const auto& s : c)
        if (s.dim() > 0 && s.dim() < n) J.included.erase(s.dim());
    return J;
}

namespace {

std::vector<unsigned> chain_dims(const Chain& c) {
    std::vector<unsigned> d;
    for (const auto& s : c) d.push_back(s.dim());
    return d;
}

// Block intersection profile c[a][b] = increments of dim(A_a ∩ B_b).
std::vector<std::vector<unsigned>> block_profile(const Chain& a, const Chain& b) {
    const size_t s = a.size(), t = b.size();
    std::vector<std::vector<unsigned>> meet(s, std::vector<unsigned>(t, 0));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < t; ++j) {
            // dim(A_i ∩ B_j) via the rank of the sum
            unsigned ds = subspace_sum(a[i], b[j]).dim();
            meet[i][j] = a[i].dim() + b[j].dim() - ds;
        }
    std::vector<std::vector<unsigned>> c(s - 1, std::vector<unsigned>(t - 1, 0));
    for (size_t i = 1; i < s; ++i)
        for (size_t j = 1; j < t; ++j)
            c[i - 1][j - 1] =
                meet[i][j] - meet[i - 1][j] - meet[i][j - 1] + meet[i - 1][j - 1];
    return c;
}

// Minimal-length permutation with the given block profile: positions in
// A-range a (ascending) receive, for b ascending, the next unused values of
// B-range b; returning the inverse lands the element in ^JW^K.
WeylElement relpos_from_profile(const std::vector<std::vector<unsigned>>& c,
                                const std::vector<unsigned>& adims,
                                const std::vector<unsigned>& bdims) {
    const unsigned n = adims.back();
    std::vector<int> v(n, 0);
    std::vector<unsigned> next_value(bdims.size() - 1);
    for (size_t b = 0; b + 1 < bdims.size(); ++b) next_value[b] = bdims[b] + 1;
    unsigned pos = 1;
    for (size_t a = 0; a + 1 < adims.size(); ++a)
        for (size_t b = 0; b + 1 < bdims.size(); ++b)
            for (unsigned k = 0; k < c[a][b]; ++k) v[pos++ - 1] = static_cast<int>(next_value[b]++);
    WeylElement w(WeylKind::A, std::move(v));
    return w.inverse();
}

}  // namespace

WeylElement flag_relpos(const Chain& a, const Chain& b) {
    if (a.back().ambient_dim() != b.back().ambient_dim() ||
        !a.back().field()->same(*b.back().field()))
        throw std::invalid_argument("flag_relpos: ambient mismatch");
    auto w = relpos_from_profile(block_profile(a, b), chain_dims(a), chain_dims(b));
    if (!is_min_coset_rep(chain_type(a), w, chain_type(b)))
        throw std::logic_error("flag_relpos: representative not minimal");
    return w;
}

WeylElement flag_relpos(const Flag& gamma, const Flag& delta) {
    return flag_relpos(gamma.chain(), delta.chain());
}

WeylElement flag_relpos_bruteforce(const Chain& a, const Chain& b) {
    const unsigned n = a.back().ambient_dim();
    const auto f = a.back().field();
    auto adims = chain_dims(a);
    auto bdims = chain_dims(b);
    auto profile = [&](const Chain& x, const Chain& y) {
        std::vector<unsigned> p;
        for (const auto& s : x)
            for (const auto& t : y) p.push_back(subspace_sum(s, t).dim());
        return p;
    };
    auto target = profile(a, b);
    for (const auto& w : min_coset_reps(chain_type(a), chain_type(b))) {
        // model pair: A = w-image of the prefix flag, B = the prefix flag
        auto winv = w.inverse();
        Chain ma, mb;
        for (unsigned d : adims) {
            std::vector<unsigned> idx;
            for (unsigned l = 1; l <= d; ++l)
                idx.push_back(static_cast<unsigned>(winv.apply(static_cast<int>(l))) - 1);
            ma.push_back(Subspace::coordinate(f, n, idx));
        }
        for (unsigned d : bdims) {
            std::vector<unsigned> idx;
            for (unsigned l = 0; l < d; ++l) idx.push_back(l);
            mb.push_back(Subspace::coordinate(f, n, idx));
        }
        if (profile(ma, mb) == target) return w;
    }
    throw std::logic_error("flag_relpos_bruteforce: no matching representative");
}

Chain refine_chain(const Chain& a, const Chain& b) {
    std::vector<Subspace> members = a;
    for (size_t i = 0; i + 1 < a.size(); ++i)
        for (const auto& h : b)
            members.push_back(subspace_sum(subspace_intersect(a[i + 1], h), a[i]));
    std::sort(members.begin(), members.end(),
              [](const Subspace& x, const Subspace& y) { return x.dim() < y.dim(); });
    Chain out;
    for (auto& s : members) {
        if (!out.empty() && s == out.back()) continue;
        if (!out.empty() && s.dim() == out.back().dim())
            throw std::logic_error("refine_chain: members are not totally ordered");
        out.push_back(std::move(s));
    }
    return out;
}

Chain twist_chain(const Matrix& g, const Chain& c) {
    Chain out;
    for (const auto& s : c) out.push_back(apply_matrix(g, frobenius_twist_subspace(s)));
    return out;
}

namespace {

Matrix splitting_block(const FZip& z, int i, bool c_side,
                       const std::optional<Splittings>& opt) {
    if (opt) {
        const auto& m = c_side ? opt->A : opt->B;
        auto it = m.find(i);
        if (it == m.end()) throw std::invalid_argument("build_g: missing splitting block");
        return it->second;
    }
    if (c_side) return graded_lifts(z.C.at(i), z.C.at(i + 1)).frobenius().transpose();
    return graded_lifts(z.D.at(i), z.D.at(i - 1)).transpose();
}

}  // namespace

Matrix build_g(const FZip& z, const std::optional<Splittings>& splittings) {
    const auto& f = z.field;
    const unsigned n = z.n;
    Matrix v(f, n, n), u(f, n, n);
    unsigned col = 0;
    for (int i : z.type.indices()) {
        const unsigned sz = z.type.at(i);
        Matrix a = splitting_block(z, i, true, splittings);   // n x sz columns
        Matrix b = splitting_block(z, i, false, splittings);  // n x sz columns
        if (a.rows() != n || a.cols() != sz || b.rows() != n || b.cols() != sz)
            throw std::invalid_argument("build_g: splitting block shape mismatch");

        // class coordinates of the splitting columns in the canonical bases
        auto tc = frobenius_twist_subspace(z.C.at(i));
        auto tc1 = frobenius_twist_subspace(z.C.at(i + 1));
        std::vector<std::vector<unsigned>> mcols, ncols;
        for (unsigned j = 0; j < sz; ++j) {
            std::vector<unsigned> colv(n);
            for (unsigned r = 0; r < n; ++r) colv[r] = a.at(r, j);
            mcols.push_back(graded_coords(tc, tc1, colv));
            for (unsigned r = 0; r < n; ++r) colv[r] = b.at(r, j);
            ncols.push_back(graded_coords(z.D.at(i), z.D.at(i - 1), colv));
        }
        Matrix mi(f, sz, sz), ni(f, sz, sz);
        for (unsigned j = 0; j < sz; ++j)
            for (unsigned r = 0; r < sz; ++r) {
                mi.set(r, j, mcols[j][r]);
                ni.set(r, j, ncols[j][r]);
            }
        auto ni_inv = ni.inverse();
        auto mi_check = mi.inverse();
        if (!ni_inv || !mi_check)
            throw std::invalid_argument("build_g: blocks do not split the filtration");

        Matrix target = b.mul(ni_inv->mul(z.phi.at(i)).mul(mi));
        for (unsigned j = 0; j < sz; ++j, ++col)
            for (unsigned r = 0; r < n; ++r) {
                v.set(r, col, a.at(r, j));
                u.set(r, col, target.at(r, j));
            }
    }
    auto v_inv = v.inverse();
    if (!v_inv) throw std::invalid_argument("build_g: splitting does not span");
    return u.mul(*v_inv);
}

Splittings random_splittings(const FZip& z, uint64_t seed) {
    Rng rng(seed);
    const auto& f = z.field;
    const unsigned n = z.n;
    Splittings s;
    for (int i : z.type.indices()) {
        auto perturb = [&](const Matrix& lifts_rows, const Subspace& lower) {
            // add a random element of the lower member to each basis vector
            Matrix cols(f, n, lifts_rows.rows());
            for (unsigned r = 0; r < lifts_rows.rows(); ++r) {
                std::vector<unsigned> vec(n);
                for (unsigned j = 0; j < n; ++j) vec[j] = lifts_rows.at(r, j);
                for (unsigned l = 0; l < lower.dim(); ++l) {
                    unsigned coef = rng.below(f->card());
                    if (coef == 0) continue;
                    for (unsigned j = 0; j < n; ++j)
                        vec[j] = f->add(vec[j], f->mul(coef, lower.basis().at(l, j)));
                }
                for (unsigned j = 0; j < n; ++j) cols.set(j, r, vec[j]);
            }
            return cols;
        };
        auto tc = frobenius_twist_subspace(z.C.at(i));
        auto tc1 = frobenius_twist_subspace(z.C.at(i + 1));
        s.A.emplace(i, perturb(graded_lifts(tc, tc1), tc1));
        s.B.emplace(i, perturb(graded_lifts(z.D.at(i), z.D.at(i - 1)), z.D.at(i - 1)));
    }
    return s;
}

ClassifyResult classify(const FZip& z, const std::optional<Splittings>& splittings) {
    auto rep = validate(z);
    if (!rep.ok())
        throw std::invalid_argument("classify: invalid F-zip: " + rep.problems.front());

    const auto Jtype = z.type.parabolic_type().subset;
    const auto Ktype = z.type.opposite_type().subset;
    const auto x = double_coset_x(Jtype, Ktype);

    ClassificationTrace trace;
    trace.g = build_g(z, splittings);

    Chain gamma = z.C.chain();
    Chain delta = z.D.chain();
    const unsigned max_iter = static_cast<unsigned>(Jtype.included.size()) + 2;

    for (unsigned iter = 0;; ++iter) {
        if (iter > max_iter) throw std::logic_error("classify: refinement failed to stabilize");

        TraceStep step;
        step.J = chain_type(gamma);
        step.K = chain_type(delta);
        step.gamma = gamma;
        step.delta = delta;
        step.u = flag_relpos(gamma, delta);

        // the defining condition of the iteration: relpos(Delta, g sigma Gamma) = x
        if (!(flag_relpos(delta, twist_chain(trace.g, gamma)) == x))
            throw std::logic_error("classify: x-position lost during iteration");
        if (!trace.steps.empty()) {
            const auto& prev = trace.steps.back();
            // u_{n+1} lies in W_{J_{n+1}} u_n W_{K_n}
            if (!(min_double_coset_rep(step.J, step.u, prev.K) ==
                  min_double_coset_rep(step.J, prev.u, prev.K)))
                throw std::logic_error("classify: coset membership violated");
            if (!step.J.is_subset_of(prev.J) || !step.K.is_subset_of(prev.K))
                throw std::logic_error("classify: types failed to shrink");
        }
        trace.steps.push_back(step);

        Chain gamma1 = refine_chain(gamma, delta);
        Chain delta1 = refine_chain(delta, twist_chain(trace.g, gamma1));
        if (chain_dims(gamma1) == chain_dims(gamma) && chain_dims(delta1) == chain_dims(delta)) {
            trace.iterations = iter;
            break;
        }
        gamma = std::move(gamma1);
        delta = std::move(delta1);
    }

    trace.u_infinity = trace.steps.back().u;
    if (!is_min_coset_rep(Jtype, trace.u_infinity, SimpleSubset::empty(WeylKind::A, z.n)))
        throw std::logic_error("classify: invariant not minimal in W_J u");
    return {trace.u_infinity, std::move(trace)};
}

namespace {

// J_{n+1} = J_n ∩ ^{u_n x}(J_n), computed reflection by reflection.
SimpleSubset next_subset(const SimpleSubset& Jn, const WeylElement& un, const WeylElement& x) {
    auto w = un.compose(x);
    auto winv = w.inverse();
    SimpleSubset out{Jn.kind, Jn.rank, {}};
    for (unsigned t : Jn.included) {
        auto conj = w.compose(WeylElement::generator(Jn.kind, Jn.rank, t)).compose(winv);
        for (unsigned s : Jn.included)
            if (conj == WeylElement::generator(Jn.kind, Jn.rank, s)) {
                out.included.insert(s);
                break;
            }
    }
    return out;
}

bool search_sequence(const SimpleSubset& Jn, const SimpleSubset& Kn, const WeylElement& un,
                     const WeylElement& x, const WeylElement& target,
                     std::vector<WeylElement>& acc, std::vector<std::vector<WeylElement>>& found) {
    acc.push_back(un);
    auto Jn1 = next_subset(Jn, un, x);
    if (Jn1 == Jn) {
        if (un == target) found.push_back(acc);
    } else {
        auto Kn1 = conjugate_subset(x, Jn1);
        for (const auto& cand : min_coset_reps(Jn1, Kn1)) {
            if (!(min_double_coset_rep(Jn1, cand, Kn) == min_double_coset_rep(Jn1, un, Kn)))
                continue;
            search_sequence(Jn1, Kn1, cand, x, target, acc, found);
        }
    }
    acc.pop_back();
    return !found.empty();
}

}  // namespace

TSequence t_sequence(const TypeFunction& tau, const WeylElement& u) {
    auto J = tau.parabolic_type().subset;
    auto K = tau.opposite_type().subset;
    auto x = double_coset_x(J, K);
    if (!is_min_coset_rep(J, u, SimpleSubset::empty(WeylKind::A, tau.height())))
        throw std::invalid_argument("t_sequence: u is not minimal in W_J u");

    std::vector<std::vector<WeylElement>> found;
    std::vector<WeylElement> acc;
    for (const auto& u0 : min_coset_reps(J, K))
        search_sequence(J, K, u0, x, u, acc, found);
    if (found.size() != 1)
        throw std::logic_error("t_sequence: expected exactly one sequence, found " +
                               std::to_string(found.size()));
    return {found.front()};
}

WeylElement u_from_sequence(const TypeFunction& tau, const TSequence& seq) {
    auto J = tau.parabolic_type().subset;
    auto K = tau.opposite_type().subset;
    auto x = double_coset_x(J, K);
    if (seq.entries.empty()) throw std::invalid_argument("u_from_sequence: empty sequence");
    auto Jn = J;
    auto Kn = K;
    for (size_t n = 0; n < seq.entries.size(); ++n) {
        const auto& un = seq.entries[n];
        if (!is_min_coset_rep(Jn, un, Kn))
            throw std::invalid_argument("u_from_sequence: entry not in ^{J_n}W^{K_n}");
        auto Jn1 = next_subset(Jn, un, x);
        if (n + 1 < seq.entries.size()) {
            const auto& un1 = seq.entries[n + 1];
            if (!(min_double_coset_rep(Jn1, un1, Kn) == min_double_coset_rep(Jn1, un, Kn)))
                throw std::invalid_argument("u_from_sequence: coset condition violated");
        }
        Jn = Jn1;
        Kn = conjugate_subset(x, Jn1);
    }
    return seq.entries.back();
}

unsigned codim(const WeylElement& u, const SimpleSubset& J) {
    SimpleSubset none = SimpleSubset::empty(J.kind, J.rank);
    if (!is_min_coset_rep(J, u, none))
        throw std::invalid_argument("codim: u is not minimal in W_J u");
    unsigned d = dim_par(J);
    unsigned l = length(u);
    if (l > d) throw std::logic_error("codim: length exceeds dim Par_J");
    return d - l;
}

bool is_ordinary(const WeylElement& u, const SimpleSubset& J) { return codim(u, J) == 0; }

unsigned a_number(const FZip& z) {
    for (int i : z.type.indices())
        if (i != 0 && i != 1)
            throw std::invalid_argument("a_number: type support must lie in {0,1}");
    return subspace_intersect(z.C.at(1), z.D.at(0)).dim();
}

std::vector<EoStratum> eo_partition(const std::vector<std::pair<std::string, FZip>>& family) {
    if (family.empty()) return {};
    const auto& tau = family.front().second.type;
    for (const auto& [label, z] : family)
        if (!(z.type == tau))
            throw std::invalid_argument("eo_partition: mixed types in family");
    auto J = tau.parabolic_type().subset;
    std::map<std::vector<int>, EoStratum> strata;
    for (const auto& [label, z] : family) {
        auto res = classify(z);
        auto& st = strata[res.u.window()];
        if (st.labels.empty()) {
            st.u = res.u;
            st.codim = codim(res.u, J);
            st.ordinary = is_ordinary(res.u, J);
        }
        st.labels.push_back(label);
    }
    std::vector<EoStratum> out;
    for (auto& [w, st] : strata) out.push_back(std::move(st));
    std::sort(out.begin(), out.end(),
              [](const EoStratum& a, const EoStratum& b) { return a.codim < b.codim; });
    return out;
}

}  // namespace fzip
