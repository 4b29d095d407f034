#include "fzip/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fzip {

WeylElement::WeylElement(WeylKind kind, std::vector<int> window)
    : kind_(kind), window_(std::move(window)) {
    const unsigned n = rank();
    if (n == 0) throw std::invalid_argument("empty window");
    std::vector<bool> seen(n + 1, false);
    for (int v : window_) {
        int a = std::abs(v);
        if (a < 1 || a > static_cast<int>(n) || seen[a])
            throw std::invalid_argument("window is not a (signed) permutation");
        if (kind_ == WeylKind::A && v < 0)
            throw std::invalid_argument("negative entry in type A window");
        seen[a] = true;
    }
}

WeylElement WeylElement::identity(WeylKind kind, unsigned rank) {
    std::vector<int> w(rank);
    std::iota(w.begin(), w.end(), 1);
    return WeylElement(kind, std::move(w));
}

WeylElement WeylElement::generator(WeylKind kind, unsigned rank, unsigned i) {
    auto w = identity(kind, rank);
    if (kind == WeylKind::A) {
        if (i < 1 || i >= rank) throw std::invalid_argument("generator index out of range");
        std::swap(w.window_[i - 1], w.window_[i]);
    } else {
        if (i < 1 || i > rank) throw std::invalid_argument("generator index out of range");
        if (i < rank)
            std::swap(w.window_[i - 1], w.window_[i]);
        else
            w.window_[rank - 1] = -w.window_[rank - 1];
    }
    return w;
}

int WeylElement::apply(int v) const {
    int a = std::abs(v);
    int img = window_[a - 1];
    return v > 0 ? img : -img;
}

WeylElement WeylElement::compose(const WeylElement& o) const {
    if (kind_ != o.kind_ || rank() != o.rank())
        throw std::invalid_argument("composing elements of different groups");
    std::vector<int> w(rank());
    for (unsigned i = 0; i < rank(); ++i) w[i] = apply(o.window_[i]);
    return WeylElement(kind_, std::move(w));
}

WeylElement WeylElement::inverse() const {
    std::vector<int> w(rank());
    for (unsigned i = 0; i < rank(); ++i) {
        int v = window_[i];
        if (v > 0)
            w[v - 1] = static_cast<int>(i + 1);
        else
            w[-v - 1] = -static_cast<int>(i + 1);
    }
    return WeylElement(kind_, std::move(w));
}

bool WeylElement::is_identity() const {
    for (unsigned i = 0; i < rank(); ++i)
        if (window_[i] != static_cast<int>(i + 1)) return false;
    return true;
}

std::string WeylElement::str() const {
    std::ostringstream os;
    os << '[';
    for (unsigned i = 0; i < rank(); ++i) {
        if (i) os << ',';
        os << window_[i];
    }
    os << ']';
    return os.str();
}

SimpleSubset SimpleSubset::full(WeylKind kind, unsigned rank) {
    SimpleSubset s{kind, rank, {}};
    for (unsigned i = 1; i <= s.generator_count(); ++i) s.included.insert(i);
    return s;
}

SimpleSubset SimpleSubset::empty(WeylKind kind, unsigned rank) { return {kind, rank, {}}; }

bool SimpleSubset::is_subset_of(const SimpleSubset& o) const {
    return std::includes(o.included.begin(), o.included.end(), included.begin(),
                         included.end());
}

namespace {

// Length in the Björner–Brenti convention (sign change on the *first*
// coordinate): inv(w) + sum of |w(i)| over negative entries.
unsigned length_bb(const std::vector<int>& w) {
    unsigned l = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++l;
    for (int v : w)
        if (v < 0) l += static_cast<unsigned>(-v);
    return l;
}

// Conjugate by the coordinate reversal i <-> m+1-i, which maps our Bourbaki
// generators (flip on the last coordinate) to the BB ones.
std::vector<int> reverse_conjugate(const std::vector<int>& w) {
    const int m = static_cast<int>(w.size());
    std::vector<int> r(w.size());
    for (int i = 1; i <= m; ++i) {
        int v = w[m - i];  // w(m+1-i)
        r[i - 1] = v > 0 ? m + 1 - v : -(m + 1 - (-v));
    }
    return r;
}

}  // namespace

unsigned length(const WeylElement& w) {
    const auto& win = w.window();
    if (w.kind() == WeylKind::A) {
        unsigned l = 0;
        for (size_t i = 0; i < win.size(); ++i)
            for (size_t j = i + 1; j < win.size(); ++j)
                if (win[i] > win[j]) ++l;
        return l;
    }
    return length_bb(reverse_conjugate(win));
}

bool has_left_descent(const WeylElement& w, unsigned i) {
    auto s = WeylElement::generator(w.kind(), w.rank(), i);
    return length(s.compose(w)) < length(w);
}

bool has_right_descent(const WeylElement& w, unsigned i) {
    auto s = WeylElement::generator(w.kind(), w.rank(), i);
    return length(w.compose(s)) < length(w);
}

bool is_min_coset_rep(const SimpleSubset& J, const WeylElement& w, const SimpleSubset& K) {
    for (unsigned i : J.included)
        if (has_left_descent(w, i)) return false;
    for (unsigned i : K.included)
        if (has_right_descent(w, i)) return false;
    return true;
}

WeylElement longest_element(WeylKind kind, unsigned rank) {
    return longest_element(SimpleSubset::full(kind, rank));
}

WeylElement longest_element(const SimpleSubset& J) {
    auto w = WeylElement::identity(J.kind, J.rank);
    unsigned l = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (unsigned i : J.included) {
            auto cand = w.compose(WeylElement::generator(J.kind, J.rank, i));
            unsigned cl = length(cand);
            if (cl > l) {
                w = std::move(cand);
                l = cl;
                grew = true;
                break;
            }
        }
    }
    return w;
}

WeylElement min_double_coset_rep(const SimpleSubset& J, const WeylElement& w,
                                 const SimpleSubset& K) {
    auto v = w;
    unsigned l = length(v);
    bool shrank = true;
    while (shrank) {
        shrank = false;
        for (unsigned i : J.included) {
            auto cand = WeylElement::generator(v.kind(), v.rank(), i).compose(v);
            if (length(cand) < l) {
                v = std::move(cand);
                --l;
                shrank = true;
                break;
            }
        }
        if (shrank) continue;
        for (unsigned i : K.included) {
            auto cand = v.compose(WeylElement::generator(v.kind(), v.rank(), i));
            if (length(cand) < l) {
                v = std::move(cand);
                --l;
                shrank = true;
                break;
            }
        }
    }
    return v;
}

namespace {
std::mutex g_enum_mutex;
std::map<std::pair<WeylKind, unsigned>, std::vector<WeylElement>> g_enum_cache;
}  // namespace

std::vector<WeylElement> enumerate_weyl(WeylKind kind, unsigned rank) {
    unsigned long long size = 1;
    for (unsigned i = 1; i <= rank; ++i) size *= i;
    if (kind == WeylKind::BC)
        for (unsigned i = 0; i < rank; ++i) size *= 2;
    if (size > 2'000'000ULL)
        throw std::invalid_argument("enumerate_weyl: group too large");
    {
        std::lock_guard<std::mutex> lock(g_enum_mutex);
        auto it = g_enum_cache.find({kind, rank});
        if (it != g_enum_cache.end()) return it->second;
    }

    std::vector<int> base(rank);
    std::iota(base.begin(), base.end(), 1);
    std::vector<WeylElement> out;
    out.reserve(static_cast<size_t>(size));
    std::sort(base.begin(), base.end());
    do {
        if (kind == WeylKind::A) {
            out.emplace_back(kind, base);
        } else {
            for (unsigned mask = 0; mask < (1u << rank); ++mask) {
                std::vector<int> w(base.begin(), base.end());
                for (unsigned i = 0; i < rank; ++i)
                    if (mask & (1u << i)) w[i] = -w[i];
                out.emplace_back(kind, std::move(w));
            }
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::lock_guard<std::mutex> lock(g_enum_mutex);
    return g_enum_cache.emplace(std::make_pair(kind, rank), std::move(out)).first->second;
}

namespace {

// Position-block sizes (left to right) of the standard parabolic W_J in S_n.
std::vector<unsigned> blocks_of_subset(const SimpleSubset& J) {
    std::vector<unsigned> blocks;
    unsigned cur = 1;
    for (unsigned i = 1; i + 1 <= J.rank; ++i) {
        if (J.included.count(i))
            ++cur;
        else {
            blocks.push_back(cur);
            cur = 1;
        }
    }
    blocks.push_back(cur);
    return blocks;
}

void gen_type_a_reps(const std::vector<unsigned>& blocks, std::vector<int>& positions_of,
                     unsigned block_idx, std::vector<bool>& used, unsigned n,
                     std::vector<WeylElement>& out) {
    if (block_idx == blocks.size()) {
        // positions_of[l] = value at position l+1
        std::vector<int> w(positions_of.begin(), positions_of.end());
        out.emplace_back(WeylKind::A, std::move(w));
        return;
    }
    // Choose the positions receiving the next value block, ascending; the
    // values are then forced (increasing within the block).
    unsigned lo = 0;
    for (unsigned b = 0; b < block_idx; ++b) lo += blocks[b];
    unsigned size = blocks[block_idx];
    std::vector<unsigned> free;
    for (unsigned l = 0; l < n; ++l)
        if (!used[l]) free.push_back(l);
    // iterate over combinations of `free` of size `size`
    std::vector<unsigned> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    if (size > free.size()) return;
    for (;;) {
        for (unsigned t = 0; t < size; ++t) {
            unsigned pos = free[idx[t]];
            used[pos] = true;
            positions_of[pos] = static_cast<int>(lo + t + 1);
        }
        gen_type_a_reps(blocks, positions_of, block_idx + 1, used, n, out);
        for (unsigned t = 0; t < size; ++t) used[free[idx[t]]] = false;
        // next combination
        int t = static_cast<int>(size) - 1;
        while (t >= 0 && idx[t] == free.size() - size + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (unsigned s = t + 1; s < size; ++s) idx[s] = idx[s - 1] + 1;
    }
}

std::vector<WeylElement> min_left_reps_type_a(const SimpleSubset& J) {
    auto blocks = blocks_of_subset(J);
    const unsigned n = J.rank;
    // multinomial guard, computed as a product of binomials
    unsigned long long count = 1;
    {
        unsigned rem = n;
        for (unsigned b : blocks) {
            for (unsigned i = 1; i <= b; ++i) {
                count = count * (rem - b + i) / i;  // exact at each step
                if (count > 2'000'000ULL)
                    throw std::invalid_argument("min_coset_reps: coset space too large");
            }
            rem -= b;
        }
    }
    std::vector<WeylElement> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<int> positions_of(n, 0);
    std::vector<bool> used(n, false);
    gen_type_a_reps(blocks, positions_of, 0, used, n, out);
    return out;
}

// ^J W for BC with J = I \ {s_1}: cosets of W_J = {w : w(1) = 1} are indexed
// by the signature w^{-1}(1); minimal representatives are lifted along
// geodesics of the signature graph and then verified.
std::vector<WeylElement> min_left_reps_bc_drop_s1(const SimpleSubset& J) {
    const unsigned m = J.rank;
    const int M = static_cast<int>(m);
    auto sig_of = [&](const WeylElement& w) { return w.inverse().apply(1); };
    std::map<int, WeylElement> reps;
    std::vector<WeylElement> frontier{WeylElement::identity(WeylKind::BC, m)};
    reps.emplace(1, frontier.front());
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& u : frontier) {
            for (unsigned i = 1; i <= m; ++i) {
                auto cand = u.compose(WeylElement::generator(WeylKind::BC, m, i));
                int s = sig_of(cand);
                if (!reps.count(s)) {
                    next.push_back(cand);
                    reps.emplace(s, std::move(cand));
                }
            }
        }
        frontier = std::move(next);
    }
    if (reps.size() != 2 * m)
        throw std::logic_error("coset signature walk did not reach all cosets");
    std::vector<WeylElement> out;
    for (int a = 1; a <= M; ++a) out.push_back(reps.at(a));
    for (int a = 1; a <= M; ++a) out.push_back(reps.at(-a));
    for (const auto& u : out)
        if (!is_min_coset_rep(J, u, SimpleSubset::empty(WeylKind::BC, m)))
            throw std::logic_error("signature walk produced a non-minimal representative");
    return out;
}

}  // namespace

std::vector<WeylElement> min_coset_reps(const SimpleSubset& J, const SimpleSubset& K) {
    std::vector<WeylElement> reps;
    if (J.kind == WeylKind::A) {
        reps = min_left_reps_type_a(J);
    } else {
        SimpleSubset drop1 = SimpleSubset::full(WeylKind::BC, J.rank);
        drop1.included.erase(1);
        if (J == drop1) {
            reps = min_left_reps_bc_drop_s1(J);
        } else {
            auto all = enumerate_weyl(J.kind, J.rank);
            for (const auto& w : all)
                if (is_min_coset_rep(J, w, SimpleSubset::empty(J.kind, J.rank)))
                    reps.push_back(w);
        }
    }
    std::vector<WeylElement> out;
    for (const auto& w : reps) {
        bool ok = true;
        for (unsigned i : K.included)
            if (has_right_descent(w, i)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        unsigned la = length(a), lb = length(b);
        if (la != lb) return la < lb;
        return a.window() < b.window();
    });
    return out;
}

std::vector<WeylElement> min_coset_reps(const SimpleSubset& J) {
    return min_coset_reps(J, SimpleSubset::empty(J.kind, J.rank));
}

WeylElement double_coset_x(const SimpleSubset& J, const SimpleSubset& K) {
    auto w0 = longest_element(J.kind, J.rank);
    if (!(conjugate_subset(w0, J) == K))
        throw std::invalid_argument("double_coset_x: K is not opposite to J");
    auto x = min_double_coset_rep(K, w0, J);
    if (!(conjugate_subset(x, J) == K))
        throw std::logic_error("double_coset_x: ^xJ != K");
    return x;
}

SimpleSubset conjugate_subset(const WeylElement& w, const SimpleSubset& K) {
    SimpleSubset out{K.kind, K.rank, {}};
    auto winv = w.inverse();
    for (unsigned i : K.included) {
        auto t = w.compose(WeylElement::generator(K.kind, K.rank, i)).compose(winv);
        bool found = false;
        for (unsigned a = 1; a <= K.generator_count(); ++a) {
            if (t == WeylElement::generator(K.kind, K.rank, a)) {
                out.included.insert(a);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("conjugate_subset: conjugate leaves the simple reflections");
    }
    return out;
}

namespace {

bool bruhat_leq_type_a(const std::vector<int>& v, const std::vector<int>& w) {
    const unsigned n = static_cast<unsigned>(v.size());
    // dot criterion: counts of {a <= i : v(a) <= j} dominate those of w
    for (unsigned i = 1; i < n; ++i) {
        for (unsigned j = 1; j < n; ++j) {
            unsigned cv = 0, cw = 0;
            for (unsigned a = 0; a < i; ++a) {
                if (v[a] <= static_cast<int>(j)) ++cv;
                if (w[a] <= static_cast<int>(j)) ++cw;
            }
            if (cv < cw) return false;
        }
    }
    return true;
}

// Lifting property: for a left descent s of w,
//   v <= w  <=>  sv <= sw   when s is a left descent of v,
//   v <= w  <=>  v <= sw    otherwise.
bool bruhat_leq_lifting(WeylElement v, WeylElement w, unsigned lv, unsigned lw) {
    const unsigned gens = w.kind() == WeylKind::A ? w.rank() - 1 : w.rank();
    for (;;) {
        if (v == w) return true;
        if (lv >= lw) return false;
        for (unsigned i = 1; i <= gens; ++i) {
            auto s = WeylElement::generator(w.kind(), w.rank(), i);
            auto sw = s.compose(w);
            unsigned lsw = length(sw);
            if (lsw >= lw) continue;
            auto sv = s.compose(v);
            unsigned lsv = length(sv);
            if (lsv < lv) {
                v = std::move(sv);
                lv = lsv;
            }
            w = std::move(sw);
            lw = lsw;
            break;
        }
    }
}

}  // namespace

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
    if (v.kind() != w.kind() || v.rank() != w.rank())
        throw std::invalid_argument("bruhat_leq: kind/rank mismatch");
    if (v.kind() == WeylKind::A) return bruhat_leq_type_a(v.window(), w.window());
    return bruhat_leq_lifting(v, w, length(v), length(w));
}

unsigned positive_root_count(WeylKind kind, unsigned rank) {
    return kind == WeylKind::A ? rank * (rank - 1) / 2 : rank * rank;
}

unsigned dim_par(const SimpleSubset& J) {
    return positive_root_count(J.kind, J.rank) - length(longest_element(J));
}

WeylElement iota_embed(const WeylElement& w, IotaTarget target) {
    if (w.kind() != WeylKind::BC)
        throw std::invalid_argument("iota_embed: expected a signed permutation");
    const unsigned m = w.rank();
    const unsigned N = target == IotaTarget::Sp ? 2 * m : 2 * m + 1;
    std::vector<int> r(N, 0);
    auto place = [&](int v) { return v > 0 ? v : static_cast<int>(N) + 1 + v; };
    for (unsigned j = 1; j <= m; ++j) {
        int img = place(w.window()[j - 1]);
        r[j - 1] = img;
        r[N - j] = static_cast<int>(N) + 1 - img;
    }
    if (target == IotaTarget::SOodd) r[m] = static_cast<int>(m) + 1;
    return WeylElement(WeylKind::A, std::move(r));
}

TypeComposition composition_to_subset(const std::vector<unsigned>& parts) {
    unsigned n = 0;
    for (unsigned p : parts) {
        if (p == 0) throw std::invalid_argument("composition parts must be positive");
        n += p;
    }
    if (n == 0) throw std::invalid_argument("empty composition");
    TypeComposition out;
    out.parts = parts;
    out.subset = SimpleSubset::full(WeylKind::A, n);
    unsigned acc = 0;
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        acc += parts[i];
        out.subset.included.erase(acc);
    }
    return out;
}

}  // namespace fzip
