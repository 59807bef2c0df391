#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supereinstein/algebra.hpp"
#include "supereinstein/linalg.hpp"

using namespace supereinstein;

namespace {

std::mt19937_64 rng(771204);

const SuperMatrix& pick(const AlgebraModel& alg) {
    std::uniform_int_distribution<std::size_t> d(0, alg.basis.size() - 1);
    return alg.basis[d(rng)].mat;
}

}  // namespace

TEST_CASE("sl(1|1) model") {
    auto alg = build_algebra(Family::sl11);
    REQUIRE(alg->dim() == 3);
    const SuperMatrix& x1 = alg->basis[0].mat;
    const SuperMatrix& x2 = alg->basis[1].mat;
    const SuperMatrix& x3 = alg->basis[2].mat;
    CHECK(graded_bracket(x2, x3) == x1);
    CHECK(graded_bracket(x1, x2).is_zero());
    CHECK(graded_bracket(x1, x3).is_zero());
    CHECK(alg->killing_ad(x2, x3).is_zero());  // Killing form vanishes identically
}

TEST_CASE("sl(3|2) dimensions") {
    auto alg = build_algebra(Family::sl, 3, 2);
    CHECK(alg->dim() == 24);  // (m+n)^2 - 1
    CHECK(alg->roots->positive_even.size() == 4);
    CHECK(alg->roots->positive_odd.size() == 6);
    // bracket closure on a sample of pairs
    for (int iter = 0; iter < 40; ++iter) {
        const SuperMatrix& x = pick(*alg);
        const SuperMatrix& y = pick(*alg);
        CHECK_NOTHROW(alg->expand(graded_bracket(x, y)));
    }
}

TEST_CASE("osp(2|4) dimensions") {
    auto alg = build_algebra(Family::osp, 2, 2);
    int even = 0, odd = 0;
    for (const auto& el : alg->basis) (el.parity == Parity::odd ? odd : even)++;
    CHECK(even == 11);  // so(2) + sp(4)
    CHECK(odd == 8);
    for (int iter = 0; iter < 40; ++iter) {
        const SuperMatrix& x = pick(*alg);
        const SuperMatrix& y = pick(*alg);
        CHECK_NOTHROW(alg->expand(graded_bracket(x, y)));
    }
}

TEST_CASE("supertrace of a bracket vanishes") {
    auto alg = build_algebra(Family::sl, 2, 2 + 1);  // sl(2|3)
    for (int iter = 0; iter < 30; ++iter) {
        SuperMatrix br = graded_bracket(pick(*alg), pick(*alg));
        CHECK(br.supertrace().is_zero());
    }
}

TEST_CASE("Q form values and invariance") {
    auto alg = build_algebra(Family::sl, 2, 1);
    RootSystem rs = *alg->roots;
    Weight e1_d1 = Weight::eps_unit(2, 1, 0) - Weight::delta_unit(2, 1, 0);
    // Q(E12, E21) with E12 = E(e1-e2)
    Weight e1_e2 = Weight::eps_unit(2, 1, 0) - Weight::eps_unit(2, 1, 1);
    CHECK(alg->q(alg->root_vector(e1_e2), alg->root_vector(-e1_e2)) == Scalar(-1));
    (void)e1_d1;
    // ad-invariance Q([X,Y],Z) = Q(X,[Y,Z]) on all basis triples
    for (const auto& x : alg->basis)
        for (const auto& y : alg->basis)
            for (const auto& z : alg->basis) {
                Scalar lhs = alg->q(graded_bracket(x.mat, y.mat), z.mat);
                Scalar rhs = alg->q(x.mat, graded_bracket(y.mat, z.mat));
                CHECK(lhs == rhs);
            }
    // non-degeneracy: Gram determinant over the basis is nonzero
    ScalarMatrix gram(alg->basis.size(), ScalarVector(alg->basis.size()));
    for (std::size_t i = 0; i < alg->basis.size(); ++i)
        for (std::size_t j = 0; j < alg->basis.size(); ++j)
            gram[i][j] = alg->q(alg->basis[i].mat, alg->basis[j].mat);
    CHECK_FALSE(determinant(gram).is_zero());
}

TEST_CASE("sl(n|n) center split form") {
    auto alg = build_algebra(Family::sl, 3, 3);
    SuperMatrix id = SuperMatrix::identity(3, 3);
    CHECK(alg->q(id, id) == Scalar(1));
    // Q(I, X) = 0 for X in the complement (root vectors and traceless Cartan parts)
    for (const auto& el : alg->basis) {
        if (el.label == "I") continue;
        CHECK(alg->q(id, el.mat).is_zero());
    }
    // ad-invariance holds with outer arguments in the complement
    std::uniform_int_distribution<std::size_t> d(0, alg->basis.size() - 1);
    for (int iter = 0; iter < 60; ++iter) {
        const auto& x = alg->basis[d(rng)];
        const auto& y = alg->basis[d(rng)];
        const auto& z = alg->basis[d(rng)];
        if (x.label == "I" || z.label == "I") continue;
        CHECK(alg->q(graded_bracket(x.mat, y.mat), z.mat) == alg->q(x.mat, graded_bracket(y.mat, z.mat)));
    }
    // Killing form is identically zero
    for (int iter = 0; iter < 10; ++iter) CHECK(alg->killing_ad(pick(*alg), pick(*alg)).is_zero());
}

TEST_CASE("q_dual is a right dual basis") {
    for (auto alg : {build_algebra(Family::sl, 2, 1), build_algebra(Family::sl, 3, 3),
                     build_algebra(Family::osp, 2, 2), build_algebra(Family::gl, 1, 1)}) {
        for (std::size_t i = 0; i < alg->basis.size(); ++i)
            for (std::size_t j = 0; j < alg->basis.size(); ++j) {
                Scalar v = alg->q(alg->basis[i].mat, alg->q_dual[j]);
                CHECK(v == (i == j ? Scalar(1) : Scalar(0)));
            }
    }
}

TEST_CASE("killing form closed expressions") {
    // sl(2|1): B(E12, E21) = 2(m-n) Str(E11) = 2
    auto alg = build_algebra(Family::sl, 2, 1);
    Weight e1_e2 = Weight::eps_unit(2, 1, 0) - Weight::eps_unit(2, 1, 1);
    Scalar b = alg->killing_ad(alg->root_vector(e1_e2), alg->root_vector(-e1_e2));
    CHECK(b == Scalar(2));
    // B = 2(m-n) Str(XY) on all basis pairs
    for (const auto& x : alg->basis)
        for (const auto& y : alg->basis)
            CHECK(alg->killing_ad(x.mat, y.mat) == alg->killing_closed(x.mat, y.mat));
    // osp(2|4): B = 2n Q = 4 Q on sampled pairs
    auto osp = build_algebra(Family::osp, 2, 2);
    for (int iter = 0; iter < 25; ++iter) {
        const SuperMatrix& x = pick(*osp);
        const SuperMatrix& y = pick(*osp);
        CHECK(osp->killing_ad(x, y) == Scalar(4) * osp->q(x, y));
        CHECK(osp->killing_ad(x, y) == osp->killing_closed(x, y));
    }
}

TEST_CASE("star operation") {
    auto alg = build_algebra(Family::sl, 2, 1);
    SuperMatrix e12 = SuperMatrix::unit(2, 1, 0, 1);
    SuperMatrix e21 = SuperMatrix::unit(2, 1, 1, 0);
    CHECK(alg->star(e12) == e21);
    CHECK(alg->star(Scalar::i() * e12) == -(Scalar::i() * e21));  // anti-linearity
    for (int iter = 0; iter < 30; ++iter) {
        const SuperMatrix& x = pick(*alg);
        const SuperMatrix& y = pick(*alg);
        CHECK(alg->star(alg->star(x)) == x);
        CHECK(alg->star(graded_bracket(x, y)) == graded_bracket(alg->star(y), alg->star(x)));
    }
    // type C star: E_alpha -> E_{-alpha}, H -> H, and the same identities
    auto osp = build_algebra(Family::osp, 2, 2);
    for (const auto& el : osp->basis) {
        if (el.is_cartan) {
            CHECK(osp->star(el.mat) == el.mat);
        } else {
            CHECK(osp->star(el.mat) == osp->root_vector(-el.root));
        }
    }
    for (int iter = 0; iter < 30; ++iter) {
        const SuperMatrix& x = pick(*osp);
        const SuperMatrix& y = pick(*osp);
        CHECK(osp->star(alg ? osp->star(x) : x) == x);
        CHECK(osp->star(graded_bracket(x, y)) == graded_bracket(osp->star(y), osp->star(x)));
    }
}

TEST_CASE("compact real basis") {
    auto alg = build_algebra(Family::sl, 2, 1);
    RealFormBasis rf = alg->compact_real_basis();
    REQUIRE(rf.elements.size() == 8);
    int even = 0, odd = 0;
    for (auto p : rf.parities) (p == Parity::odd ? odd : even)++;
    CHECK(even == 4);
    CHECK(odd == 4);
    for (std::size_t k = 0; k < rf.elements.size(); ++k) {
        const SuperMatrix& x = rf.elements[k];
        if (rf.parities[k] == Parity::even) {
            CHECK(alg->star(x) == -x);
        } else {
            CHECK(alg->star(x) == Scalar::i() * x);
        }
    }
    // real span is bracket-closed with rational structure constants
    for (std::size_t a = 0; a < rf.elements.size(); ++a)
        for (std::size_t b = 0; b < rf.elements.size(); ++b) {
            ScalarVector coords = expand_in_span(rf.elements, graded_bracket(rf.elements[a], rf.elements[b]));
            for (const auto& c : coords) CHECK_NOTHROW(c.as_rational());
        }
    // even part of the Killing form is negative semidefinite on basis diagonals
    for (std::size_t k = 0; k < rf.elements.size(); ++k) {
        if (rf.parities[k] != Parity::even) continue;
        Scalar bxx = alg->killing_ad(rf.elements[k], rf.elements[k]);
        CHECK(bxx.as_rational() <= Rational(0));
    }
}

TEST_CASE("compact real basis closure for osp") {
    auto alg = build_algebra(Family::osp, 2, 2);
    RealFormBasis rf = alg->compact_real_basis();
    CHECK(rf.elements.size() == static_cast<std::size_t>(alg->dim()));
    for (std::size_t a = 0; a < rf.elements.size(); ++a)
        for (std::size_t b = a; b < rf.elements.size(); ++b) {
            ScalarVector coords = expand_in_span(rf.elements, graded_bracket(rf.elements[a], rf.elements[b]));
            for (const auto& c : coords) CHECK_NOTHROW(c.as_rational());
        }
}

TEST_CASE("build_algebra validation") {
    CHECK_THROWS_AS(build_algebra(Family::sl, 2, 2), UnsupportedAlgebra);
    CHECK_THROWS_AS(build_algebra(Family::sl, 1, 0), UnsupportedAlgebra);
    CHECK_THROWS_AS(build_algebra(Family::osp, 3, 2), UnsupportedAlgebra);
    CHECK_THROWS_AS(build_algebra(Family::osp, 2, 1), UnsupportedAlgebra);
    CHECK_THROWS_AS(build_algebra("so", 3, 2), UnsupportedAlgebra);
    CHECK_NOTHROW(build_algebra("sl", 4, 0));  // classical corner is allowed
}
