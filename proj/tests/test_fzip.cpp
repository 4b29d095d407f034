#include "doctest.h"

#include <stdexcept>

#include "fzip/fzip.hpp"

using namespace fzip;

namespace {

std::vector<std::vector<unsigned>> compositions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned p = 1; p <= left; ++p) {
            cur.push_back(p);
            self(self, left - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

TypeFunction type_of_composition(const std::vector<unsigned>& parts) {
    std::map<int, unsigned> s;
    for (size_t i = 0; i < parts.size(); ++i) s[static_cast<int>(i)] = parts[i];
    return TypeFunction(s);
}

}  // namespace

TEST_CASE("type function bookkeeping") {
    TypeFunction tau({{0, 2}, {1, 1}});
    CHECK(tau.height() == 3);
    CHECK(tau.dim_desc(0) == 3);
    CHECK(tau.dim_desc(1) == 1);
    CHECK(tau.dim_desc(2) == 0);
    CHECK(tau.dim_asc(0) == 2);
    CHECK(tau.dual().at(-1) == 1);
    auto conv = tau.convolve(tau);
    CHECK(conv.height() == 9);
    CHECK(conv.at(0) == 4);
    CHECK(conv.at(1) == 4);
    CHECK(conv.at(2) == 1);
    // J = (n_r,...,n_1) = (1,2) excludes the partial sum 1
    CHECK(tau.parabolic_type().parts == std::vector<unsigned>{1, 2});
    CHECK(tau.parabolic_type().subset == SimpleSubset{WeylKind::A, 3, {2}});
    CHECK(tau.opposite_type().subset == SimpleSubset{WeylKind::A, 3, {1}});
}

TEST_CASE("standard zips for the height-2 Dieudonne type") {
    TypeFunction tau({{0, 1}, {1, 1}});
    auto f2 = FieldParams::make(2, 1, 1);

    auto zid = standard_fzip(tau, WeylElement::identity(WeylKind::A, 2));
    CHECK(zid.C.at(1) == Subspace::coordinate(f2, 2, {0}));
    CHECK(zid.D.at(0) == Subspace::coordinate(f2, 2, {0}));
    CHECK(validate(zid).ok());

    auto zs = standard_fzip(tau, WeylElement(WeylKind::A, {2, 1}));
    CHECK(zs.C.at(1) == Subspace::coordinate(f2, 2, {1}));
    CHECK(zs.D.at(0) == Subspace::coordinate(f2, 2, {0}));
    CHECK(validate(zs).ok());
}

TEST_CASE("height-1 standard zip") {
    TypeFunction tau({{0, 1}});
    auto z = standard_fzip(tau, WeylElement::identity(WeylKind::A, 1));
    CHECK(z.n == 1);
    CHECK(validate(z).ok());
    CHECK(z.phi.at(0).at(0, 0) == 1);
}

TEST_CASE("standard zips validate for every u in ^JW, n <= 4") {
    for (unsigned n = 1; n <= 4; ++n) {
        for (const auto& comp : compositions(n)) {
            auto tau = type_of_composition(comp);
            auto J = tau.parabolic_type().subset;
            for (const auto& u : min_coset_reps(J)) {
                auto z = standard_fzip(tau, u, 2);
                auto rep = validate(z);
                CHECK(rep.ok());
                CHECK(rep.type == tau);
            }
        }
    }
    // u outside ^JW is rejected
    TypeFunction tau({{0, 2}, {1, 1}});
    CHECK_THROWS_AS(standard_fzip(tau, WeylElement(WeylKind::A, {1, 3, 2})),
                    std::invalid_argument);
}

TEST_CASE("validate flags broken inputs with the failing index") {
    TypeFunction tau({{0, 1}, {1, 1}});
    auto z = standard_fzip(tau, WeylElement::identity(WeylKind::A, 2));
    auto broken = z;
    broken.phi.at(0) = Matrix(z.field, 1, 1);  // zero block
    auto rep = validate(broken);
    CHECK(!rep.ok());
    CHECK(rep.problems.front().find("0") != std::string::npos);

    // type mismatch between C and D
    auto f2 = z.field;
    std::map<int, Subspace> dm{{0, Subspace::zero(f2, 2)}, {1, Subspace::full(f2, 2)}};
    auto broken2 = z;
    broken2.D = Flag(FlagDirection::ascending, 2, f2, dm);
    CHECK(!validate(broken2).ok());
}

TEST_CASE("dieudonne dictionary: ordinary and supersingular elliptic p-kernels") {
    auto f2 = FieldParams::make(2, 1, 1);

    DieudonneModule ord;
    ord.field = f2;
    ord.n = 2;
    ord.F_mat = Matrix(f2, 2, 2);
    ord.F_mat.set(0, 0, 1);
    ord.V_mat = Matrix(f2, 2, 2);
    ord.V_mat.set(1, 1, 1);
    CHECK(validate_dieudonne(ord).empty());
    auto z = from_dieudonne(ord);
    CHECK(z.C.at(1) == Subspace::coordinate(f2, 2, {1}));
    CHECK(z.D.at(0) == Subspace::coordinate(f2, 2, {0}));
    CHECK(validate(z).ok());

    DieudonneModule ss;
    ss.field = f2;
    ss.n = 2;
    ss.F_mat = Matrix(f2, 2, 2);
    ss.F_mat.set(0, 1, 1);  // e2 -> e1, e1 -> 0
    ss.V_mat = Matrix(f2, 2, 2);
    ss.V_mat.set(0, 1, 1);
    CHECK(validate_dieudonne(ss).empty());
    auto zss = from_dieudonne(ss);
    CHECK(zss.C.at(1) == zss.D.at(0));

    DieudonneModule bad = ord;
    bad.V_mat = Matrix(f2, 2, 2);
    bad.V_mat.set(0, 0, 1);
    CHECK(!validate_dieudonne(bad).empty());
    CHECK_THROWS_AS(from_dieudonne(bad), std::invalid_argument);
}

TEST_CASE("dieudonne round trips") {
    // to . from = identity on valid modules derived from random zips
    for (auto [p, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 4u}}) {
        auto f = FieldParams::make(p, 1, 1);
        for (uint64_t seed = 0; seed < 5; ++seed) {
            TypeFunction tau({{0, n - 1}, {1, 1}});
            auto z = random_fzip(tau, f, seed + 1);
            auto d = to_dieudonne(z);
            CHECK(validate_dieudonne(d).empty());
            auto z2 = from_dieudonne(d);
            CHECK(z2 == z);
            auto d2 = to_dieudonne(z2);
            CHECK(d2.F_mat == d.F_mat);
            CHECK(d2.V_mat == d.V_mat);
        }
    }
    // degenerate supports at n = 2 over F_2: multiplicative and etale shapes
    auto f2 = FieldParams::make(2, 1, 1);
    for (auto tau : {TypeFunction({{0, 2}}), TypeFunction({{0, 1}, {1, 1}}),
                     TypeFunction({{1, 2}})}) {
        auto z = random_fzip(tau, f2, 9);
        auto z2 = from_dieudonne(to_dieudonne(z));
        CHECK(z2 == z);
    }
    TypeFunction wide({{0, 1}, {2, 1}});
    auto zwide = random_fzip(wide, f2, 3);
    CHECK_THROWS_AS(to_dieudonne(zwide), std::invalid_argument);
}

TEST_CASE("dual: involution on standard zips, type flips") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (const auto& comp : compositions(n)) {
            auto tau = type_of_composition(comp);
            for (const auto& u : min_coset_reps(tau.parabolic_type().subset)) {
                auto z = standard_fzip(tau, u, 3);
                auto zd = dual(z);
                CHECK(validate(zd).ok());
                for (int i : tau.indices()) CHECK(zd.type.at(-i) == tau.at(i));
                auto zdd = dual(zd);
                CHECK(zdd == z);
            }
        }
    }
}

TEST_CASE("tensor: unit object and height multiplicativity") {
    auto f3 = FieldParams::make(3, 1, 1);
    TypeFunction unit_type({{0, 1}});
    auto unit = standard_fzip(unit_type, WeylElement::identity(WeylKind::A, 1), 3);

    TypeFunction tau({{0, 1}, {1, 1}});
    auto z = random_fzip(tau, f3, 42);
    auto t = tensor(z, unit);
    CHECK(validate(t).ok());
    CHECK(t.n == z.n);
    CHECK(t.type == z.type);
    CHECK(t == z);  // unit acts as the identity on the nose

    auto t2 = tensor(z, z);
    CHECK(t2.n == z.n * z.n);
    CHECK(validate(t2).ok());
    TypeFunction expect({{0, 1}, {1, 2}, {2, 1}});
    CHECK(t2.type == expect);
}

TEST_CASE("base change preserves the type and embeds scalars") {
    auto f2 = FieldParams::make(2, 1, 1);
    auto f4 = FieldParams::make(2, 2, 1);
    TypeFunction tau({{0, 1}, {1, 1}});
    auto z = random_fzip(tau, f2, 5);
    CHECK(base_change(z, f2) == z);
    auto z4 = base_change(z, f4);
    CHECK(z4.field->card() == 4);
    CHECK(validate(z4).ok());
    CHECK(z4.type == z.type);
    auto f9 = FieldParams::make(3, 2, 1);
    CHECK_THROWS_AS(base_change(z, f9), std::invalid_argument);
}

TEST_CASE("apply_gl is a group action") {
    auto f3 = FieldParams::make(3, 1, 1);
    TypeFunction tau({{0, 2}, {1, 1}});
    Rng rng(77);
    for (uint64_t seed = 0; seed < 6; ++seed) {
        auto z = random_fzip(tau, f3, seed);
        CHECK(apply_gl(Matrix::identity(f3, 3), z) == z);
        auto g = random_invertible(f3, 3, rng);
        auto h = random_invertible(f3, 3, rng);
        CHECK(apply_gl(h, apply_gl(g, z)) == apply_gl(h.mul(g), z));
        CHECK(validate(apply_gl(g, z)).ok());
    }
    // scalar matrices keep the flags
    auto z = random_fzip(tau, f3, 1);
    Matrix two = Matrix::identity(f3, 3);
    for (unsigned i = 0; i < 3; ++i) two.set(i, i, 2);
    auto z2 = apply_gl(two, z);
    CHECK(z2.C.at(1) == z.C.at(1));
    CHECK(z2.D.at(0) == z.D.at(0));
    CHECK(validate(z2).ok());
    Matrix sing(f3, 3, 3);
    CHECK_THROWS_AS(apply_gl(sing, z), std::invalid_argument);
}

TEST_CASE("random_fzip: validity, determinism, and coverage at (1,1) over F_2") {
    TypeFunction tau({{0, 1}, {1, 1}});
    for (auto p : {2u, 3u}) {
        auto f = FieldParams::make(p, 1, 1);
        for (uint64_t seed = 1; seed <= 50; ++seed) {
            auto z = random_fzip(tau, f, seed);
            CHECK(validate(z).ok());
            CHECK(z == random_fzip(tau, f, seed));
        }
    }
    TypeFunction tau4({{0, 2}, {1, 1}, {2, 1}});
    auto f2 = FieldParams::make(2, 1, 1);
    for (uint64_t seed = 1; seed <= 20; ++seed)
        CHECK(validate(random_fzip(tau4, f2, seed)).ok());

    // all 9 zips of type (1,1) over F_2 appear among 500 seeds
    std::set<std::string> seen;
    for (uint64_t seed = 0; seed < 500; ++seed) {
        auto z = random_fzip(tau, f2, seed);
        auto c1 = z.C.at(1);
        auto d0 = z.D.at(0);
        std::string key;
        for (unsigned e : c1.basis().entries()) key += static_cast<char>('0' + e);
        key += '|';
        for (unsigned e : d0.basis().entries()) key += static_cast<char>('0' + e);
        for (unsigned e : z.phi.at(0).entries()) key += static_cast<char>('0' + e);
        for (unsigned e : z.phi.at(1).entries()) key += static_cast<char>('0' + e);
        seen.insert(key);
    }
    CHECK(seen.size() == 9);
}

TEST_CASE("graded lifts and coordinates") {
    auto f2 = FieldParams::make(2, 1, 1);
    // W = <e1+e2, e3>, W' = <e1+e2>
    Matrix m(f2, 2, 3);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 2, 1);
    auto w = Subspace::span(m, 3);
    Matrix msub(f2, 1, 3);
    msub.set(0, 0, 1);
    msub.set(0, 1, 1);
    auto wsub = Subspace::span(msub, 3);
    auto lifts = graded_lifts(w, wsub);
    CHECK(lifts.rows() == 1);
    std::vector<unsigned> v{1, 1, 1};  // e1+e2+e3, class of e3
    CHECK(graded_coords(w, wsub, v) == std::vector<unsigned>{1});
}
