#include "fzip/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fzip {

unsigned long long gaussian_binomial(unsigned n, unsigned d, unsigned q) {
    if (d > n) return 0;
    // q-Pascal: [i j] = [i-1 j-1] + q^j [i-1 j]
    std::vector<std::vector<unsigned long long>> dp(n + 1,
                                                    std::vector<unsigned long long>(d + 1, 0));
    for (unsigned i = 0; i <= n; ++i) dp[i][0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= std::min(i, d); ++j) {
            unsigned long long qpow = 1;
            for (unsigned t = 0; t < j; ++t) qpow *= q;
            dp[i][j] = dp[i - 1][j - 1] + qpow * dp[i - 1][j];
        }
    return dp[n][d];
}

unsigned long long gl_order(unsigned n, unsigned q) {
    unsigned long long qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    unsigned long long order = 1, qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

std::vector<Subspace> enumerate_subspaces(unsigned n, unsigned d, const FieldRef& f,
                                          const OracleLimits& limits) {
    if (d > n) throw std::invalid_argument("enumerate_subspaces: d > n");
    auto count = gaussian_binomial(n, d, f->card());
    if (count > limits.max_subspaces)
        throw std::invalid_argument("enumerate_subspaces: count bound exceeded");
    std::vector<Subspace> out;
    out.reserve(static_cast<size_t>(count));
    if (d == 0) {
        out.push_back(Subspace::zero(f, n));
        return out;
    }
    // choose pivot columns, then fill the free entries
    std::vector<unsigned> piv(d);
    std::iota(piv.begin(), piv.end(), 0);
    for (;;) {
        // free positions: (i, j) with j > piv[i], j not a pivot
        std::vector<std::pair<unsigned, unsigned>> free_pos;
        std::vector<bool> is_piv(n, false);
        for (auto p : piv) is_piv[p] = true;
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        std::vector<unsigned> vals(free_pos.size(), 0);
        for (;;) {
            Matrix m(f, d, n);
            for (unsigned i = 0; i < d; ++i) m.set(i, piv[i], 1);
            for (size_t t = 0; t < free_pos.size(); ++t)
                m.set(free_pos[t].first, free_pos[t].second, vals[t]);
            out.push_back(Subspace::span(m, n));
            size_t t = 0;
            while (t < vals.size() && ++vals[t] == f->card()) vals[t++] = 0;
            if (t == vals.size()) break;
        }
        // next pivot combination
        int i = static_cast<int>(d) - 1;
        while (i >= 0 && piv[i] == n - d + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (unsigned t = i + 1; t < d; ++t) piv[t] = piv[t - 1] + 1;
    }
    if (out.size() != count) throw std::logic_error("enumerate_subspaces: count mismatch");
    return out;
}

std::vector<Chain> enumerate_chains(unsigned n, const std::vector<unsigned>& dims,
                                    const FieldRef& f, const OracleLimits& limits) {
    std::vector<Chain> chains{{Subspace::zero(f, n)}};
    for (unsigned d : dims) {
        if (d == 0 || d >= n) continue;
        auto layer = enumerate_subspaces(n, d, f, limits);
        std::vector<Chain> next;
        for (const auto& c : chains)
            for (const auto& s : layer)
                if (s.contains(c.back())) {
                    auto cc = c;
                    cc.push_back(s);
                    next.push_back(std::move(cc));
                }
        chains = std::move(next);
        if (chains.size() > limits.max_fzips)
            throw std::invalid_argument("enumerate_chains: count bound exceeded");
    }
    for (auto& c : chains) c.push_back(Subspace::full(f, n));
    return chains;
}

std::vector<Matrix> enumerate_invertible(unsigned n, const FieldRef& f,
                                         const OracleLimits& limits) {
    if (gl_order(n, f->card()) > limits.max_group)
        throw std::invalid_argument("enumerate_invertible: group bound exceeded");
    std::vector<Matrix> out;
    const unsigned card = f->card();
    std::vector<unsigned> vals(static_cast<size_t>(n) * n, 0);
    for (;;) {
        Matrix m(f, n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m.set(i, j, vals[static_cast<size_t>(i) * n + j]);
        if (m.invertible()) out.push_back(std::move(m));
        size_t t = 0;
        while (t < vals.size() && ++vals[t] == card) vals[t++] = 0;
        if (t == vals.size()) break;
    }
    return out;
}

namespace {

std::vector<unsigned> chain_interior_dims(const TypeFunction& tau, bool descending) {
    std::vector<unsigned> dims;
    for (int i : tau.indices()) {
        unsigned d = descending ? tau.dim_desc(i + 1) : tau.dim_asc(i);
        if (d > 0 && d < tau.height()) dims.push_back(d);
    }
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    return dims;
}

Flag flag_from_chain(const TypeFunction& tau, const Chain& chain, FlagDirection dir,
                     const FieldRef& f) {
    const unsigned n = tau.height();
    std::map<int, Subspace> members;
    for (int i : tau.indices()) {
        unsigned d = dir == FlagDirection::descending ? tau.dim_desc(i) : tau.dim_asc(i);
        for (const auto& s : chain)
            if (s.dim() == d) {
                members.emplace(i, s);
                break;
            }
    }
    return Flag(dir, n, f, std::move(members));
}

std::string zip_key(const FZip& z) {
    std::ostringstream os;
    for (const auto& [i, s] : z.C.members()) {
        os << 'C' << i << ':';
        for (unsigned e : s.basis().entries()) os << e << ',';
    }
    for (const auto& [i, s] : z.D.members()) {
        os << 'D' << i << ':';
        for (unsigned e : s.basis().entries()) os << e << ',';
    }
    for (const auto& [i, m] : z.phi) {
        os << 'P' << i << ':';
        for (unsigned e : m.entries()) os << e << ',';
    }
    return os.str();
}

struct UnionFind {
    std::vector<unsigned> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    unsigned find(unsigned a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(unsigned a, unsigned b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<FZip> enumerate_fzips(const TypeFunction& tau, const FieldRef& f,
                                  const OracleLimits& limits) {
    const unsigned n = tau.height();
    auto cchains = enumerate_chains(n, chain_interior_dims(tau, true), f, limits);
    auto dchains = enumerate_chains(n, chain_interior_dims(tau, false), f, limits);

    // phi blocks per support index
    std::vector<std::vector<Matrix>> blocks;
    unsigned long long phi_count = 1;
    for (int i : tau.indices()) {
        OracleLimits block_limits = limits;
        block_limits.max_group = limits.max_group;
        blocks.push_back(enumerate_invertible(tau.at(i), f, block_limits));
        phi_count *= blocks.back().size();
    }
    unsigned long long total =
        static_cast<unsigned long long>(cchains.size()) * dchains.size() * phi_count;
    if (total > limits.max_fzips)
        throw std::invalid_argument("enumerate_fzips: count bound exceeded");

    auto idx = tau.indices();
    std::vector<FZip> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<size_t> sel(idx.size(), 0);
    for (const auto& cc : cchains)
        for (const auto& dc : dchains) {
            std::fill(sel.begin(), sel.end(), 0);
            for (;;) {
                FZip z;
                z.field = f;
                z.n = n;
                z.type = tau;
                z.C = flag_from_chain(tau, cc, FlagDirection::descending, f);
                z.D = flag_from_chain(tau, dc, FlagDirection::ascending, f);
                for (size_t t = 0; t < idx.size(); ++t) z.phi.emplace(idx[t], blocks[t][sel[t]]);
                out.push_back(std::move(z));
                size_t t = 0;
                while (t < sel.size() && ++sel[t] == blocks[t].size()) sel[t++] = 0;
                if (t == sel.size()) break;
            }
        }
    return out;
}

OrbitReport gl_orbits(const std::vector<FZip>& items, const FieldRef& f,
                      const OracleLimits& limits) {
    if (items.empty()) throw std::invalid_argument("gl_orbits: empty input");
    const unsigned n = items.front().n;
    OrbitReport rep;
    rep.type = items.front().type;
    rep.field = f;
    rep.total_count = items.size();

    std::map<std::string, unsigned> index;
    for (unsigned i = 0; i < items.size(); ++i) index.emplace(zip_key(items[i]), i);

    auto group = enumerate_invertible(n, f, limits);
    UnionFind uf(items.size());
    for (unsigned i = 0; i < items.size(); ++i) {
        for (const auto& g : group) {
            auto moved = apply_gl(g, items[i]);
            auto it = index.find(zip_key(moved));
            if (it == index.end())
                throw std::invalid_argument("gl_orbits: input not closed under the action");
            uf.unite(i, it->second);
        }
    }

    std::vector<WeylElement> invariants;
    invariants.reserve(items.size());
    for (const auto& z : items) invariants.push_back(classify(z).u);

    std::map<unsigned, OrbitEntry> orbits;
    rep.invariant_constant_on_orbits = true;
    for (unsigned i = 0; i < items.size(); ++i) {
        unsigned root = uf.find(i);
        auto it = orbits.find(root);
        if (it == orbits.end()) {
            OrbitEntry e;
            e.representative = items[i];
            e.size = 1;
            e.invariant = invariants[i];
            orbits.emplace(root, std::move(e));
        } else {
            ++it->second.size;
            if (!(it->second.invariant == invariants[i]))
                rep.invariant_constant_on_orbits = false;
        }
    }
    unsigned long long size_sum = 0;
    for (auto& [root, e] : orbits) {
        size_sum += e.size;
        rep.orbits.push_back(std::move(e));
    }
    std::sort(rep.orbits.begin(), rep.orbits.end(), [](const OrbitEntry& a, const OrbitEntry& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.invariant.window() < b.invariant.window();
    });
    rep.sizes_sum_to_total = size_sum == rep.total_count;

    std::set<std::vector<int>> classes;
    for (const auto& w : invariants) classes.insert(w.window());
    rep.invariant_class_count = static_cast<unsigned>(classes.size());
    rep.expected_class_count =
        static_cast<unsigned>(min_coset_reps(rep.type.parabolic_type().subset).size());
    rep.all_classes_realized = rep.invariant_class_count == rep.expected_class_count;
    return rep;
}

PointCount count_points(const TypeFunction& tau, const FieldRef& f, const OracleLimits& limits) {
    auto zips = enumerate_fzips(tau, f, limits);
    PointCount pc;
    pc.count = zips.size();
    double qd = 1.0;
    for (unsigned i = 0; i < tau.height() * tau.height(); ++i) qd *= f->card();
    pc.dim_g_ratio = static_cast<double>(pc.count) / qd;
    return pc;
}

}  // namespace fzip
