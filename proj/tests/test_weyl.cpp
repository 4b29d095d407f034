#include "doctest.h"

#include <map>
#include <queue>
#include <stdexcept>

#include "fzip/weyl.hpp"

using namespace fzip;

namespace {

// Word-length oracle: BFS over the Cayley graph from the identity.
std::map<std::vector<int>, unsigned> word_lengths(WeylKind kind, unsigned rank) {
    std::map<std::vector<int>, unsigned> dist;
    std::queue<WeylElement> q;
    auto id = WeylElement::identity(kind, rank);
    dist[id.window()] = 0;
    q.push(id);
    unsigned gens = kind == WeylKind::A ? rank - 1 : rank;
    while (!q.empty()) {
        auto w = q.front();
        q.pop();
        unsigned d = dist[w.window()];
        for (unsigned i = 1; i <= gens; ++i) {
            auto next = w.compose(WeylElement::generator(kind, rank, i));
            if (!dist.count(next.window())) {
                dist[next.window()] = d + 1;
                q.push(next);
            }
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("length agrees with the word-length oracle") {
    for (unsigned n : {2u, 3u, 4u}) {
        auto dist = word_lengths(WeylKind::A, n);
        for (const auto& [win, d] : dist) CHECK(length(WeylElement(WeylKind::A, win)) == d);
    }
    for (unsigned m : {1u, 2u, 3u}) {
        auto dist = word_lengths(WeylKind::BC, m);
        CHECK(dist.size() == (1u << m) * [m] {
            unsigned f = 1;
            for (unsigned i = 2; i <= m; ++i) f *= i;
            return f;
        }());
        for (const auto& [win, d] : dist) CHECK(length(WeylElement(WeylKind::BC, win)) == d);
    }
}

TEST_CASE("longest elements") {
    CHECK(longest_element(WeylKind::A, 3).window() == std::vector<int>{3, 2, 1});
    CHECK(length(longest_element(WeylKind::A, 4)) == 6);

    // block S_3 x S_1 inside S_4
    SimpleSubset J{WeylKind::A, 4, {1, 2}};
    CHECK(longest_element(J).window() == std::vector<int>{3, 2, 1, 4});

    auto w0b2 = longest_element(WeylKind::BC, 2);
    CHECK(w0b2.window() == std::vector<int>{-1, -2});
    CHECK(length(w0b2) == 4);
    CHECK(length(longest_element(WeylKind::BC, 3)) == 9);
}

TEST_CASE("min_coset_reps counts match multinomials") {
    // S_2, J empty
    CHECK(min_coset_reps(SimpleSubset::empty(WeylKind::A, 2)).size() == 2);
    // S_3, composition (2,1)
    auto tc = composition_to_subset({2, 1});
    CHECK(min_coset_reps(tc.subset).size() == 3);

    // all compositions of n <= 6: |^JW| = n! / prod n_j!
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<std::vector<unsigned>> comps;
        std::vector<unsigned> cur;
        auto rec = [&](auto&& self, unsigned left) -> void {
            if (left == 0) {
                comps.push_back(cur);
                return;
            }
            for (unsigned p = 1; p <= left; ++p) {
                cur.push_back(p);
                self(self, left - p);
                cur.pop_back();
            }
        };
        rec(rec, n);
        unsigned long long nfact = 1;
        for (unsigned i = 2; i <= n; ++i) nfact *= i;
        for (const auto& comp : comps) {
            unsigned long long expect = nfact;
            for (unsigned p : comp)
                for (unsigned i = 2; i <= p; ++i) expect /= i;
            auto reps = min_coset_reps(composition_to_subset(comp).subset);
            CHECK(reps.size() == expect);
            // each is minimal in its left coset, all cosets distinct
            for (const auto& u : reps)
                CHECK(is_min_coset_rep(composition_to_subset(comp).subset, u,
                                       SimpleSubset::empty(WeylKind::A, n)));
        }
    }
}

TEST_CASE("type-A coset generation agrees with enumeration filtering") {
    for (const auto& comp : std::vector<std::vector<unsigned>>{{2, 1}, {1, 1, 2}, {3, 2}}) {
        auto J = composition_to_subset(comp).subset;
        auto fast = min_coset_reps(J);
        std::vector<WeylElement> slow;
        for (const auto& w : enumerate_weyl(WeylKind::A, J.rank))
            if (is_min_coset_rep(J, w, SimpleSubset::empty(WeylKind::A, J.rank)))
                slow.push_back(w);
        std::sort(slow.begin(), slow.end(), [](const WeylElement& a, const WeylElement& b) {
            if (length(a) != length(b)) return length(a) < length(b);
            return a.window() < b.window();
        });
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
}

TEST_CASE("|^JW| = |W| / |W_J| for BC subsets, m <= 3") {
    for (unsigned m : {2u, 3u}) {
        auto all = enumerate_weyl(WeylKind::BC, m);
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            SimpleSubset J{WeylKind::BC, m, {}};
            for (unsigned i = 0; i < m; ++i)
                if (mask & (1u << i)) J.included.insert(i + 1);
            unsigned wj = 0;
            for (const auto& w : all) {
                bool in_wj = true;
                // W_J members: products of J generators; test by greedy descent
                auto v = min_double_coset_rep(J, w, SimpleSubset::empty(WeylKind::BC, m));
                in_wj = v.is_identity();
                if (in_wj) ++wj;
            }
            auto reps = min_coset_reps(J);
            CHECK(reps.size() * wj == all.size());
        }
    }
}

TEST_CASE("double_coset_x fixed examples and ^xJ = K") {
    // n=2, (1,1): x = transposition
    auto t2 = composition_to_subset({1, 1});
    auto k2 = composition_to_subset({1, 1});
    auto x2 = double_coset_x(t2.subset, k2.subset);
    CHECK(x2.window() == std::vector<int>{2, 1});

    // n=3, J trivial: x = w0
    auto t3 = composition_to_subset({1, 1, 1});
    auto x3 = double_coset_x(t3.subset, t3.subset);
    CHECK(x3.window() == std::vector<int>{3, 2, 1});

    // n=4, J from (2,2)
    auto t4 = composition_to_subset({2, 2});
    auto x4 = double_coset_x(t4.subset, t4.subset);
    CHECK(conjugate_subset(x4, t4.subset) == t4.subset);
    // exhaustive: x4 is the unique minimal element of W_K w0 W_J
    auto w0 = longest_element(WeylKind::A, 4);
    unsigned best = 1000;
    WeylElement bestw;
    for (const auto& a : enumerate_weyl(WeylKind::A, 4)) {
        auto va = min_double_coset_rep(t4.subset, a, t4.subset);
        auto vb = min_double_coset_rep(t4.subset, w0, t4.subset);
        if (va == vb && length(a) < best) {
            best = length(a);
            bestw = a;
        }
    }
    CHECK(x4 == bestw);

    // ^xJ = K for all compositions of n <= 5
    for (unsigned n = 2; n <= 5; ++n) {
        std::vector<unsigned> cur;
        auto rec = [&](auto&& self, unsigned left) -> void {
            if (left == 0) {
                std::vector<unsigned> rev(cur.rbegin(), cur.rend());
                auto J = composition_to_subset(cur).subset;
                auto K = composition_to_subset(rev).subset;
                auto x = double_coset_x(J, K);
                CHECK(conjugate_subset(x, J) == K);
                return;
            }
            for (unsigned p = 1; p <= left; ++p) {
                cur.push_back(p);
                self(self, left - p);
                cur.pop_back();
            }
        };
        rec(rec, n);
    }
}

TEST_CASE("conjugate_subset basics") {
    auto J = composition_to_subset({2, 2}).subset;  // S_4, J = {1, 3}
    auto id = WeylElement::identity(WeylKind::A, 4);
    CHECK(conjugate_subset(id, J) == J);
    // w0 reverses the Dynkin diagram
    auto w0 = longest_element(WeylKind::A, 4);
    auto Jrev = conjugate_subset(w0, composition_to_subset({1, 3}).subset);
    CHECK(Jrev == composition_to_subset({3, 1}).subset);
    // a conjugate leaving the simple reflections is rejected
    auto c = WeylElement(WeylKind::A, {3, 1, 2});
    SimpleSubset single{WeylKind::A, 3, {1}};
    CHECK_THROWS_AS(conjugate_subset(c, single), std::invalid_argument);
}

TEST_CASE("bruhat order") {
    auto id3 = WeylElement::identity(WeylKind::A, 3);
    auto w0 = longest_element(WeylKind::A, 3);
    for (const auto& w : enumerate_weyl(WeylKind::A, 3)) {
        CHECK(bruhat_leq(id3, w));
        CHECK(bruhat_leq(w, w0));
    }
    auto s1 = WeylElement::generator(WeylKind::A, 3, 1);
    auto s2 = WeylElement::generator(WeylKind::A, 3, 2);
    CHECK(!bruhat_leq(s1, s2));
    CHECK(!bruhat_leq(s2, s1));

    // subword oracle on B_2: v <= w iff some reduced word of w contains a
    // reduced word of v as a subword; checked via the standard recursive
    // characterization  v <= w  <=>  v = w, or exists descent s of w with
    // (sv <= sw if s descent of v, else v <= sw)
    auto leq_oracle = [&](auto&& self, const WeylElement& v, const WeylElement& w) -> bool {
        if (v == w) return true;
        if (length(v) >= length(w)) return false;
        for (unsigned i = 1; i <= w.rank(); ++i) {
            if (!has_left_descent(w, i)) continue;
            auto s = WeylElement::generator(w.kind(), w.rank(), i);
            if (has_left_descent(v, i)) return self(self, s.compose(v), s.compose(w));
            return self(self, v, s.compose(w));
        }
        return false;
    };
    for (unsigned m : {2u}) {
        auto all = enumerate_weyl(WeylKind::BC, m);
        for (const auto& v : all)
            for (const auto& w : all) CHECK(bruhat_leq(v, w) == leq_oracle(leq_oracle, v, w));
    }
}

TEST_CASE("dim_par values") {
    CHECK(dim_par(composition_to_subset({1, 1}).subset) == 1);
    CHECK(dim_par(composition_to_subset({2, 2}).subset) == 4);
    // type A closed form: sum of n_i n_j over i < j
    for (const auto& comp : std::vector<std::vector<unsigned>>{{1, 2, 3}, {4, 1}, {2, 2, 2}}) {
        unsigned expect = 0;
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j) expect += comp[i] * comp[j];
        CHECK(dim_par(composition_to_subset(comp).subset) == expect);
    }
    // B_10 minus the long-end generator: 100 - 81
    SimpleSubset J = SimpleSubset::full(WeylKind::BC, 10);
    J.included.erase(1);
    CHECK(dim_par(J) == 19);
}

TEST_CASE("max length over ^JW equals dim_par(J)") {
    for (unsigned n = 2; n <= 6; ++n) {
        std::vector<unsigned> cur;
        auto rec = [&](auto&& self, unsigned left) -> void {
            if (left == 0) {
                auto J = composition_to_subset(cur).subset;
                auto reps = min_coset_reps(J);
                unsigned maxlen = 0;
                for (const auto& u : reps) maxlen = std::max(maxlen, length(u));
                CHECK(maxlen == dim_par(J));
                return;
            }
            for (unsigned p = 1; p <= left; ++p) {
                cur.push_back(p);
                self(self, left - p);
                cur.pop_back();
            }
        };
        rec(rec, n);
    }
    for (unsigned m : {2u, 3u}) {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            SimpleSubset J{WeylKind::BC, m, {}};
            for (unsigned i = 0; i < m; ++i)
                if (mask & (1u << i)) J.included.insert(i + 1);
            unsigned maxlen = 0;
            for (const auto& u : min_coset_reps(J)) maxlen = std::max(maxlen, length(u));
            CHECK(maxlen == dim_par(J));
        }
    }
}

TEST_CASE("double coset representatives are Bruhat-minimal") {
    auto J = composition_to_subset({2, 1}).subset;
    auto K = composition_to_subset({1, 2}).subset;
    auto reps = min_coset_reps(J, K);
    for (const auto& w : reps)
        for (const auto& a : enumerate_weyl(WeylKind::A, 3)) {
            auto ra = min_double_coset_rep(J, a, K);
            if (ra == w) CHECK(bruhat_leq(w, a));
        }
}

TEST_CASE("iota embedding") {
    auto idb = WeylElement::identity(WeylKind::BC, 2);
    CHECK(iota_embed(idb, IotaTarget::Sp).is_identity());
    CHECK(iota_embed(idb, IotaTarget::SOodd).is_identity());

    // the C_1 sign flip maps to the transposition of S_2
    auto flip = WeylElement(WeylKind::BC, {-1});
    CHECK(iota_embed(flip, IotaTarget::Sp).window() == std::vector<int>{2, 1});

    // all 8 elements of B_2: distinct symmetric images satisfying
    // rho(j) + rho(5-j) = 5
    std::set<std::vector<int>> images;
    for (const auto& w : enumerate_weyl(WeylKind::BC, 2)) {
        auto rho = iota_embed(w, IotaTarget::Sp);
        for (int j = 1; j <= 4; ++j)
            CHECK(rho.apply(j) + rho.apply(5 - j) == 5);
        images.insert(rho.window());
    }
    CHECK(images.size() == 8);

    // homomorphism + order preservation, m <= 3
    for (unsigned m : {2u, 3u}) {
        auto all = enumerate_weyl(WeylKind::BC, m);
        for (const auto& v : all) {
            for (const auto& w : all) {
                for (auto target : {IotaTarget::Sp, IotaTarget::SOodd}) {
                    CHECK(iota_embed(v.compose(w), target) ==
                          iota_embed(v, target).compose(iota_embed(w, target)));
                }
                if (bruhat_leq(v, w)) {
                    CHECK(bruhat_leq(iota_embed(v, IotaTarget::Sp), iota_embed(w, IotaTarget::Sp)));
                    CHECK(bruhat_leq(iota_embed(v, IotaTarget::SOodd),
                                     iota_embed(w, IotaTarget::SOodd)));
                }
            }
        }
        // odd target fixes the middle point
        for (const auto& v : all)
            CHECK(iota_embed(v, IotaTarget::SOodd).apply(static_cast<int>(m) + 1) ==
                  static_cast<int>(m) + 1);
    }
}

TEST_CASE("K3 coset combinatorics in B_10") {
    SimpleSubset J = SimpleSubset::full(WeylKind::BC, 10);
    J.included.erase(1);
    auto reps = min_coset_reps(J);
    REQUIRE(reps.size() == 20);
    // lengths are exactly 0..19 (sorted by length by contract)
    for (unsigned j = 0; j < 20; ++j) CHECK(length(reps[j]) == j);
    // Bruhat: the chain is totally ordered
    for (unsigned a = 0; a < 20; ++a)
        for (unsigned b = a; b < 20; ++b) CHECK(bruhat_leq(reps[a], reps[b]));
}

TEST_CASE("composition_of_type shapes") {
    auto c1 = composition_to_subset({1, 1});
    CHECK(c1.subset.included.empty());
    auto c2 = composition_to_subset({2});
    CHECK(c2.subset == SimpleSubset{WeylKind::A, 2, {1}});
    auto c3 = composition_to_subset({1, 19, 1});
    CHECK(c3.subset.rank == 21);
    CHECK(!c3.subset.included.count(1));
    CHECK(!c3.subset.included.count(20));
    CHECK(c3.subset.included.size() == 18);
    CHECK(min_coset_reps(c3.subset).size() == 420);
}
