#include "doctest.h"

#include <stdexcept>

#include "fzip/oracle.hpp"

using namespace fzip;

TEST_CASE("gaussian binomials and subspace enumeration") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(4, 2, 3) == 130);

    auto f2 = FieldParams::make(2, 1, 1);
    auto f3 = FieldParams::make(3, 1, 1);
    CHECK(enumerate_subspaces(2, 1, f2).size() == 3);
    CHECK(enumerate_subspaces(3, 1, f2).size() == 7);
    CHECK(enumerate_subspaces(4, 2, f3).size() == 130);

    // canonical and duplicate-free across several (n, d, q)
    for (auto [n, d] : {std::pair{3u, 2u}, {4u, 1u}, {4u, 3u}}) {
        auto subs = enumerate_subspaces(n, d, f2);
        CHECK(subs.size() == gaussian_binomial(n, d, 2));
        std::set<std::vector<unsigned>> keys;
        for (const auto& s : subs) {
            CHECK(s.dim() == d);
            keys.insert(s.basis().entries());
        }
        CHECK(keys.size() == subs.size());
    }

    OracleLimits tight;
    tight.max_subspaces = 10;
    CHECK_THROWS_AS(enumerate_subspaces(4, 2, f3, tight), std::invalid_argument);
}

TEST_CASE("gl_order") {
    CHECK(gl_order(1, 2) == 1);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(2, 3) == 48);
    CHECK(gl_order(3, 2) == 168);
}

TEST_CASE("enumerate_fzips counts") {
    auto f2 = FieldParams::make(2, 1, 1);
    auto f3 = FieldParams::make(3, 1, 1);
    TypeFunction t11({{0, 1}, {1, 1}});
    CHECK(enumerate_fzips(t11, f2).size() == 9);
    CHECK(enumerate_fzips(t11, f3).size() == 64);
    TypeFunction t1({{0, 1}});
    CHECK(enumerate_fzips(t1, f2).size() == 1);   // q - 1
    CHECK(enumerate_fzips(t1, f3).size() == 2);
    TypeFunction t111({{0, 1}, {1, 1}, {2, 1}});
    CHECK(enumerate_fzips(t111, f2).size() == 441);

    for (const auto& z : enumerate_fzips(t11, f3)) CHECK(validate(z).ok());

    OracleLimits tight;
    tight.max_fzips = 100;
    CHECK_THROWS_AS(enumerate_fzips(t111, f2, tight), std::invalid_argument);
}

TEST_CASE("orbit report: n=2 over F_2 and F_3") {
    auto f2 = FieldParams::make(2, 1, 1);
    TypeFunction tau({{0, 1}, {1, 1}});
    auto rep = gl_orbits(enumerate_fzips(tau, f2), f2);
    CHECK(rep.total_count == 9);
    CHECK(rep.sizes_sum_to_total);
    CHECK(rep.invariant_constant_on_orbits);
    CHECK(rep.invariant_class_count == 2);
    CHECK(rep.expected_class_count == 2);
    CHECK(rep.all_classes_realized);
    CHECK(rep.consistent());
    // over F_2 the orbit partition matches the invariant partition: 3 + 6
    REQUIRE(rep.orbits.size() == 2);
    CHECK(rep.orbits[0].size == 3);
    CHECK(rep.orbits[1].size == 6);

    auto f3 = FieldParams::make(3, 1, 1);
    auto rep3 = gl_orbits(enumerate_fzips(tau, f3), f3);
    CHECK(rep3.total_count == 64);
    CHECK(rep3.consistent());
    CHECK(rep3.invariant_class_count == 2);
}

TEST_CASE("orbit report: n=1") {
    auto f3 = FieldParams::make(3, 1, 1);
    TypeFunction tau({{0, 1}});
    auto rep = gl_orbits(enumerate_fzips(tau, f3), f3);
    CHECK(rep.total_count == 2);
    CHECK(rep.consistent());
    CHECK(rep.invariant_class_count == 1);  // ^JW is a singleton
    for (const auto& o : rep.orbits) CHECK(o.invariant.is_identity());
}

TEST_CASE("orbit report: n=3 full flags over F_2") {
    auto f2 = FieldParams::make(2, 1, 1);
    TypeFunction tau({{0, 1}, {1, 1}, {2, 1}});
    auto rep = gl_orbits(enumerate_fzips(tau, f2), f2);
    CHECK(rep.total_count == 441);
    CHECK(rep.sizes_sum_to_total);
    CHECK(rep.invariant_constant_on_orbits);
    CHECK(rep.invariant_class_count == 6);
    CHECK(rep.expected_class_count == 6);
    CHECK(rep.consistent());
}

TEST_CASE("gl_orbits rejects non-closed input") {
    auto f2 = FieldParams::make(2, 1, 1);
    TypeFunction tau({{0, 1}, {1, 1}});
    auto all = enumerate_fzips(tau, f2);
    all.pop_back();
    CHECK_THROWS_AS(gl_orbits(all, f2), std::invalid_argument);
}

TEST_CASE("count_points: closed form (q^2-1)^2 and the dimension ratio") {
    TypeFunction tau({{0, 1}, {1, 1}});
    double prev = 0.0;
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = q == 4 ? FieldParams::make(2, 2, 1) : FieldParams::make(q, 1, 1);
        auto pc = count_points(tau, f);
        unsigned long long expect = static_cast<unsigned long long>(q * q - 1) * (q * q - 1);
        CHECK(pc.count == expect);
        CHECK(pc.dim_g_ratio > prev);  // ratio to q^{n^2} increases toward 1
        prev = pc.dim_g_ratio;
        CHECK(pc.dim_g_ratio < 1.0);
    }
    TypeFunction t1({{0, 1}});
    auto pc1 = count_points(t1, FieldParams::make(5, 1, 1));
    CHECK(pc1.count == 4);  // q - 1 against q^1
}
