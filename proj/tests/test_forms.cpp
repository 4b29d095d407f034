#include "doctest.h"

#include <stdexcept>

#include "fzip/forms.hpp"
#include "fzip/oracle.hpp"

using namespace fzip;

namespace {

Subspace random_subspace(const FieldRef& f, unsigned n, unsigned d, Rng& rng) {
    Matrix m(f, d, n);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < n; ++j) m.set(i, j, rng.below(f->card()));
    return Subspace::span(m, n);
}

// All symplectic zips of type (1,1) on the standard form.
std::vector<PolarizedFZip> enumerate_polarized_h2(const FieldRef& f) {
    std::vector<PolarizedFZip> out;
    auto form = standard_form(FormKind::symplectic, f, 2);
    TypeFunction tau({{0, 1}, {1, 1}});
    for (const auto& z : enumerate_fzips(tau, f)) {
        PolarizedFZip pz{z, form};
        if (validate_polarized(pz).ok()) out.push_back(pz);
    }
    return out;
}

}  // namespace

TEST_CASE("perp basics and involution") {
    auto f3 = FieldParams::make(3, 1, 1);
    auto form = standard_form(FormKind::symmetric, f3, 5);
    CHECK(validate_form(form).empty());
    CHECK(perp(Subspace::zero(f3, 5), form) == Subspace::full(f3, 5));
    CHECK(perp(Subspace::full(f3, 5), form) == Subspace::zero(f3, 5));

    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned n = 5;
        auto s = random_subspace(f3, n, rng.below(n + 1), rng);
        auto pp = perp(perp(s, form), form);
        CHECK(pp == s);
        CHECK(perp(s, form).dim() + s.dim() == n);
    }

    // inclusion-reversing
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_subspace(f3, 5, 1 + rng.below(3), rng);
        auto b = subspace_sum(a, random_subspace(f3, 5, 1 + rng.below(2), rng));
        CHECK(perp(a, form).contains(perp(b, form)));
    }
}

TEST_CASE("form validation catches the classical restrictions") {
    auto f2 = FieldParams::make(2, 1, 1);
    auto f3 = FieldParams::make(3, 1, 1);
    CHECK(validate_form(standard_form(FormKind::symplectic, f2, 2)).empty());
    CHECK(validate_form(standard_form(FormKind::symplectic, f3, 4)).empty());
    // symmetric in characteristic 2 is rejected
    CHECK(!validate_form(standard_form(FormKind::symmetric, f2, 3)).empty());
    // even orthogonal is rejected
    CHECK(!validate_form(standard_form(FormKind::symmetric, f3, 4)).empty());
    // singular gram
    BilinearForm bad{FormKind::symplectic, Matrix(f3, 2, 2)};
    CHECK(!validate_form(bad).empty());
}

TEST_CASE("admissible types") {
    CHECK(admissible(TypeFunction({{0, 1}, {1, 1}})));
    CHECK(!admissible(TypeFunction({{0, 2}, {1, 1}})));
    CHECK(admissible(TypeFunction({{0, 1}, {1, 19}, {2, 1}})));
    CHECK(admissible(TypeFunction({{0, 3}})));
}

TEST_CASE("validate_polarized: perturbing a phi block breaks the square") {
    auto f3 = FieldParams::make(3, 1, 1);
    auto all = enumerate_polarized_h2(f3);
    REQUIRE(!all.empty());
    for (auto pz : all) {
        auto broken = pz;
        auto& m = broken.zip.phi.at(0);
        m.set(0, 0, f3->mul(m.at(0, 0), 2));  // rescale by a non-square
        auto rep = validate_polarized(broken);
        CHECK(!rep.ok());
        CHECK(rep.problems.front().find("square") != std::string::npos);
    }
}

TEST_CASE("orthogonal flags must be self-perpendicular") {
    auto f3 = FieldParams::make(3, 1, 1);
    auto form = standard_form(FormKind::symmetric, f3, 3);
    TypeFunction tau({{0, 1}, {1, 1}, {2, 1}});
    // C pairs correctly under the antidiagonal form; D is deliberately off
    std::map<int, Subspace> cm{{0, Subspace::full(f3, 3)},
                               {1, Subspace::coordinate(f3, 3, {0, 1})},
                               {2, Subspace::coordinate(f3, 3, {0})}};
    std::map<int, Subspace> dm{{0, Subspace::coordinate(f3, 3, {1})},
                               {1, Subspace::coordinate(f3, 3, {1, 2})},
                               {2, Subspace::full(f3, 3)}};
    FZip z;
    z.field = f3;
    z.n = 3;
    z.type = tau;
    z.C = Flag(FlagDirection::descending, 3, f3, cm);
    z.D = Flag(FlagDirection::ascending, 3, f3, dm);
    Matrix one(f3, 1, 1);
    one.set(0, 0, 1);
    for (int i : {0, 1, 2}) z.phi.emplace(i, one);
    REQUIRE(validate(z).ok());
    CHECK(perp(z.C.at(2), form) == z.C.at(1));
    auto rep = validate_polarized({z, form});
    CHECK(!rep.ok());
    CHECK(rep.problems.front().find("perpendicular") != std::string::npos);
}

TEST_CASE("classical group data: Siegel and K3 shapes") {
    // Siegel: n = 2g, tau = (g, g): J_1 drops the long-root generator s_g
    for (unsigned g = 1; g <= 3; ++g) {
        TypeFunction tau({{0, g}, {1, g}});
        auto data = classical_data(tau, FormKind::symplectic);
        CHECK(data.rank == g);
        CHECK(!data.J1.included.count(g));
        CHECK(data.J1.included.size() == g - 1);
        CHECK(min_coset_reps(data.J1).size() == (1u << g));
    }
    // K3: n = 21, tau = (1,19,1): J_1 = I minus s_1 in B_10
    TypeFunction k3({{0, 1}, {1, 19}, {2, 1}});
    auto data = classical_data(k3, FormKind::symmetric);
    CHECK(data.rank == 10);
    CHECK(!data.J1.included.count(1));
    CHECK(data.J1.included.size() == 9);
    CHECK(min_coset_reps(data.J1).size() == 20);
}

TEST_CASE("exhaustive polarized classification at height 2: exactly two classes") {
    for (unsigned p : {2u, 3u}) {
        auto f = FieldParams::make(p, 1, 1);
        auto all = enumerate_polarized_h2(f);
        REQUIRE(!all.empty());
        std::set<std::vector<int>> classes;
        for (const auto& pz : all) {
            auto res = classify_polarized(pz);
            classes.insert(res.u1.window());
            // iota-compatibility on every instance
            CHECK(iota(res.u1, pz.form.kind) == res.u2);
            CHECK(res.u2 == classify(pz.zip).u);
            CHECK(length(res.u1) <= dim_par(res.group.J1));
            auto c1 = pz.zip.C.at(1);
            auto d0 = pz.zip.D.at(0);
            bool transversal = subspace_intersect(c1, d0).dim() == 0;
            CHECK((length(res.u1) == 1) == transversal);
        }
        CHECK(classes.size() == 2);
    }
}

TEST_CASE("polarized classification is invariant under the symplectic group") {
    auto f3 = FieldParams::make(3, 1, 1);
    auto all = enumerate_polarized_h2(f3);
    std::vector<Matrix> sp;
    for (const auto& g : enumerate_invertible(2, f3)) {
        auto gt = g.transpose();
        if (gt.mul(all.front().form.gram).mul(g) == all.front().form.gram) sp.push_back(g);
    }
    CHECK(sp.size() == 24);  // |Sp_2(F_3)| = |SL_2(F_3)|
    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const auto& pz = all[rng.below(static_cast<unsigned>(all.size()))];
        const auto& g = sp[rng.below(static_cast<unsigned>(sp.size()))];
        PolarizedFZip moved{apply_gl(g, pz.zip), pz.form};
        REQUIRE(validate_polarized(moved).ok());
        CHECK(classify_polarized(moved).u1 == classify_polarized(pz).u1);
    }
}

TEST_CASE("iota-compatibility on polarized standard models at height 4") {
    auto f3 = FieldParams::make(3, 1, 1);
    TypeFunction tau({{0, 2}, {1, 2}});
    auto form = standard_form(FormKind::symplectic, f3, 4);
    unsigned valid = 0;
    for (const auto& u : min_coset_reps(tau.parabolic_type().subset)) {
        auto z = standard_fzip(tau, u, 3);
        PolarizedFZip pz{z, form};
        if (!validate_polarized(pz).ok()) continue;
        ++valid;
        auto res = classify_polarized(pz);
        CHECK(iota(res.u1, FormKind::symplectic) == classify(z).u);
    }
    CHECK(valid >= 1);
}

TEST_CASE("classify_polarized rejects inadmissible and invalid input") {
    auto f3 = FieldParams::make(3, 1, 1);
    TypeFunction bad_tau({{0, 2}, {1, 1}});
    auto z = random_fzip(bad_tau, f3, 4);
    PolarizedFZip pz{z, standard_form(FormKind::symmetric, f3, 3)};
    CHECK_THROWS_AS(classify_polarized(pz), std::invalid_argument);
}
