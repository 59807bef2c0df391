#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supereinstein/linalg.hpp"
#include "supereinstein/supermatrix.hpp"

using namespace supereinstein;

TEST_CASE("entry bookkeeping and parity") {
    SuperMatrix a(1, 1);
    a.set(0, 1, Scalar(2));
    CHECK(a.parity() == Parity::odd);
    a.set(0, 0, Scalar(1));
    CHECK(a.parity() == Parity::mixed);
    a.set(0, 0, Scalar(0));
    CHECK(a.parity() == Parity::odd);
    CHECK(a.entry(0, 1) == Scalar(2));
    CHECK(a.entry(1, 0).is_zero());
    CHECK(SuperMatrix(2, 1).parity() == Parity::even);
}

TEST_CASE("supertrace conventions") {
    CHECK(SuperMatrix::identity(3, 2).supertrace() == Scalar(1));  // m - n
    SuperMatrix e11 = SuperMatrix::unit(1, 1, 0, 0);
    SuperMatrix e22 = SuperMatrix::unit(1, 1, 1, 1);
    CHECK(e11.supertrace() == Scalar(1));
    CHECK(e22.supertrace() == Scalar(-1));
}

TEST_CASE("graded bracket in gl(1|1)") {
    SuperMatrix e12 = SuperMatrix::unit(1, 1, 0, 1);
    SuperMatrix e21 = SuperMatrix::unit(1, 1, 1, 0);
    SuperMatrix br = graded_bracket(e12, e21);
    CHECK(br == SuperMatrix::identity(1, 1));  // anticommutator of odd elements
    // [X, X] = 0 for even X
    SuperMatrix h = SuperMatrix::unit(1, 1, 0, 0) - SuperMatrix::unit(1, 1, 1, 1);
    CHECK(graded_bracket(h, h).is_zero());
    CHECK_THROWS_AS(graded_bracket(e12, SuperMatrix::identity(2, 1)), DimensionMismatch);
}

TEST_CASE("super jacobi on gl(1|2) units") {
    // [x,[y,z]] = [[x,y],z] + (-1)^{[x][y]} [y,[x,z]] on homogeneous triples
    std::vector<SuperMatrix> els;
    std::vector<Parity> ps;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            SuperMatrix u = SuperMatrix::unit(1, 2, r, c);
            ps.push_back(u.parity());
            els.push_back(std::move(u));
        }
    for (std::size_t a = 0; a < els.size(); ++a)
        for (std::size_t b = 0; b < els.size(); ++b)
            for (std::size_t c = 0; c < els.size(); ++c) {
                SuperMatrix lhs = graded_bracket(els[a], graded_bracket(els[b], els[c]));
                SuperMatrix rhs = graded_bracket(graded_bracket(els[a], els[b]), els[c]);
                SuperMatrix tail = graded_bracket(els[b], graded_bracket(els[a], els[c]));
                if (bracket_sign(ps[a], ps[b]) < 0) {
                    rhs -= tail;
                } else {
                    rhs += tail;
                }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("dagger is an anti-involution") {
    SuperMatrix x(2, 1);
    x.set(0, 2, Scalar::i());
    x.set(1, 0, Scalar(Rational(1, 2)));
    SuperMatrix y(2, 1);
    y.set(2, 0, Scalar::sqrt_i());
    y.set(0, 1, Scalar(3));
    CHECK(x.dagger().dagger() == x);
    CHECK((x * y).dagger() == y.dagger() * x.dagger());
}

TEST_CASE("exact linear algebra") {
    ScalarMatrix a = {{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}};
    ScalarMatrix inv = invert(a);
    CHECK(inv[0][0] == Scalar(1));
    CHECK(inv[0][1] == Scalar(-1));
    CHECK(inv[1][0] == Scalar(-1));
    CHECK(inv[1][1] == Scalar(2));
    CHECK(determinant(a) == Scalar(1));
    ScalarMatrix sing = {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
    CHECK_THROWS_AS(invert(sing), DegenerateForm);
    CHECK(determinant(sing).is_zero());
    auto ns = nullspace(sing);
    REQUIRE(ns.size() == 1);
    CHECK((ns[0][0] * Scalar(1) + ns[0][1] * Scalar(2)).is_zero());
    ScalarVector sol = solve(a, {Scalar(3), Scalar(2)});
    CHECK(sol[0] == Scalar(1));
    CHECK(sol[1] == Scalar(1));
}
