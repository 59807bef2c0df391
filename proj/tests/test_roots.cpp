#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "supereinstein/roots.hpp"

using namespace supereinstein;

namespace {
Weight eps(const RootSystem& rs, int i) { return Weight::eps_unit(static_cast<int>(rs.eps_signs.size()), static_cast<int>(rs.delta_signs.size()), i); }
Weight del(const RootSystem& rs, int i) { return Weight::delta_unit(static_cast<int>(rs.eps_signs.size()), static_cast<int>(rs.delta_signs.size()), i); }
}  // namespace

TEST_CASE("root counts for type A") {
    for (int m = 1; m <= 5; ++m) {
        for (int n = 0; n <= 5; ++n) {
            if (m + n < 2 || (m == n && m < 3)) continue;
            RootSystem rs = root_system("sl", m, n);
            CHECK(static_cast<int>(rs.positive_even.size()) == m * (m - 1) / 2 + n * (n - 1) / 2);
            CHECK(static_cast<int>(rs.positive_odd.size()) == m * n);
            if (m >= 1 && n >= 1) {
                int odd_simples = 0;
                for (bool b : rs.simple_odd) odd_simples += b ? 1 : 0;
                CHECK(odd_simples == 1);
            }
            // every positive root is a nonnegative integer combination of simples
            for (const auto& [root, coords] : rs.simple_coords) {
                (void)root;
                for (const auto& c : coords) {
                    CHECK(c.is_integer());
                    CHECK(c >= Rational(0));
                }
            }
        }
    }
}

TEST_CASE("sl(3|2) roots match the worked flag example") {
    RootSystem rs = root_system("sl", 3, 2);
    std::set<Weight> odd(rs.positive_odd.begin(), rs.positive_odd.end());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) CHECK(odd.count(eps(rs, i) - del(rs, j)) == 1);
    CHECK(odd.size() == 6);
    // simple system: e1-e2, e2-e3, e3-d1, d1-d2 with the third one odd
    REQUIRE(rs.rank() == 4);
    CHECK(rs.simple[0] == eps(rs, 0) - eps(rs, 1));
    CHECK(rs.simple[2] == eps(rs, 2) - del(rs, 0));
    CHECK(rs.simple_odd[2]);
    // highest root decomposes with all coefficients 1
    Weight highest = eps(rs, 0) - del(rs, 1);
    for (const auto& c : rs.coords(highest)) CHECK(c == Rational(1));
}

TEST_CASE("sl(2|1) simple system") {
    RootSystem rs = root_system("sl", 2, 1);
    REQUIRE(rs.rank() == 2);
    CHECK(rs.simple[0] == eps(rs, 0) - eps(rs, 1));
    CHECK(rs.simple[1] == eps(rs, 1) - del(rs, 0));
    CHECK_FALSE(rs.simple_odd[0]);
    CHECK(rs.simple_odd[1]);
}

TEST_CASE("osp(2|4) roots") {
    RootSystem rs = root_system("osp", 2, 2);
    std::set<Weight> odd(rs.positive_odd.begin(), rs.positive_odd.end());
    CHECK(odd.count(eps(rs, 0) - del(rs, 0)) == 1);
    CHECK(odd.count(eps(rs, 0) + del(rs, 0)) == 1);
    CHECK(odd.count(eps(rs, 0) - del(rs, 1)) == 1);
    CHECK(odd.count(eps(rs, 0) + del(rs, 1)) == 1);
    CHECK(odd.size() == 4);
    CHECK(rs.positive_even.size() == 4);  // d1-d2, d1+d2, 2d1, 2d2
    // highest root e + d1 = a1 + 2 a2 + a3
    auto c = rs.coords(eps(rs, 0) + del(rs, 0));
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Rational(1));
    CHECK(c[1] == Rational(2));
    CHECK(c[2] == Rational(1));
}

TEST_CASE("weight inner products") {
    RootSystem a = root_system("sl", 3, 2);
    CHECK(weight_inner(a, eps(a, 0), eps(a, 0)) == Rational(-1));
    CHECK(weight_inner(a, del(a, 0), del(a, 0)) == Rational(1));
    CHECK(weight_inner(a, eps(a, 0), del(a, 0)) == Rational(0));
    Weight iso = eps(a, 0) - del(a, 1);
    CHECK(weight_inner(a, iso, iso) == Rational(0));  // isotropic odd root

    RootSystem c = root_system("osp", 2, 3);
    CHECK(weight_inner(c, eps(c, 0), eps(c, 0)) == Rational(-1, 2));
    CHECK(weight_inner(c, del(c, 0), del(c, 0)) == Rational(1, 2));
    Weight iso_c = eps(c, 0) + del(c, 0);
    CHECK(weight_inner(c, iso_c, iso_c) == Rational(0));
    Weight two_d1 = del(c, 0).scaled(Rational(2));
    CHECK(weight_inner(c, two_d1, two_d1) == Rational(2));
}

TEST_CASE("weyl vectors") {
    // 2 rho = sum (m-n-2i+1) e_i + sum (m+n-2mu+1) d_mu for sl(m|n)
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 1}, {2, 3}, {5, 2}}) {
        RootSystem rs = root_system("sl", m, n);
        Weight two_rho = weyl_vector(rs).scaled(Rational(2));
        for (int i = 0; i < m; ++i) CHECK(two_rho.eps[static_cast<std::size_t>(i)] == Rational(m - n - 2 * (i + 1) + 1));
        for (int mu = 0; mu < n; ++mu) CHECK(two_rho.delta[static_cast<std::size_t>(mu)] == Rational(m + n - 2 * (mu + 1) + 1));
    }
    // osp(2|2n): rho = -n e + sum (n-j+1) d_j
    for (int n = 2; n <= 5; ++n) {
        RootSystem rs = root_system("osp", 2, n);
        Weight rho = weyl_vector(rs);
        CHECK(rho.eps[0] == Rational(-n));
        for (int j = 1; j <= n; ++j) CHECK(rho.delta[static_cast<std::size_t>(j - 1)] == Rational(n - j + 1));
    }
    // empty subset -> zero
    RootSystem rs = root_system("sl", 3, 2);
    CHECK(weyl_vector(rs, std::vector<int>{}).is_zero());
    // (rho, a_i) = (a_i, a_i)/2 for non-isotropic simple roots
    Weight rho = weyl_vector(rs);
    for (int k = 0; k < rs.rank(); ++k) {
        Rational aa = weight_inner(rs, rs.simple[static_cast<std::size_t>(k)], rs.simple[static_cast<std::size_t>(k)]);
        if (aa.is_zero()) continue;
        CHECK(weight_inner(rs, rho, rs.simple[static_cast<std::size_t>(k)]) == aa / Rational(2));
    }
}

TEST_CASE("isotropy weyl vectors in closed form") {
    // one circled node p <= m on sl(m|n): the k-subsystem Weyl vector satisfies
    // 2 rho_k = sum_{i<=p} (p-2i+1) e_i + sum_{p<i<=m} (m+p-n-2i+1) e_i
    //          + sum_mu (m-p+n-2mu+1) d_mu
    for (auto [m, n, p] : std::vector<std::array<int, 3>>{{3, 2, 1}, {4, 1, 2}, {3, 2, 3}}) {
        RootSystem rs = root_system("sl", m, n);
        std::vector<int> k_simple;
        for (int k = 0; k < rs.rank(); ++k)
            if (k + 1 != p) k_simple.push_back(k);
        Weight two_rho = weyl_vector(rs, k_simple).scaled(Rational(2));
        for (int i = 1; i <= m; ++i) {
            Rational expect = i <= p ? Rational(p - 2 * i + 1) : Rational(m + p - n - 2 * i + 1);
            CHECK(two_rho.eps[static_cast<std::size_t>(i - 1)] == expect);
        }
        for (int mu = 1; mu <= n; ++mu)
            CHECK(two_rho.delta[static_cast<std::size_t>(mu - 1)] == Rational(m - p + n - 2 * mu + 1));
    }
    // osp(2|2n) with node p circled:
    // 2 rho_k = (1-p) e + sum_{j<p} (p-2j+1) d_j + sum_{j>=p} 2(n+1-j) d_j
    for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 3}}) {
        RootSystem rs = root_system("osp", 2, n);
        std::vector<int> k_simple;
        for (int k = 0; k < rs.rank(); ++k)
            if (k + 1 != p) k_simple.push_back(k);
        Weight two_rho = weyl_vector(rs, k_simple).scaled(Rational(2));
        CHECK(two_rho.eps[0] == Rational(1 - p));
        for (int j = 1; j <= n; ++j) {
            Rational expect = j < p ? Rational(p - 2 * j + 1) : Rational(2 * (n + 1 - j));
            CHECK(two_rho.delta[static_cast<std::size_t>(j - 1)] == expect);
        }
    }
}

TEST_CASE("closed-form casimir eigenvalues") {
    // one circled node p on sl(m|n): k-simples are all but node p; c1 = m-n for
    // highest weight e1 - dn
    for (auto [m, n, p] : std::vector<std::array<int, 3>>{{3, 2, 1}, {3, 2, 4}, {4, 1, 2}, {2, 3, 2}}) {
        RootSystem rs = root_system("sl", m, n);
        std::vector<int> k_simple;
        for (int k = 0; k < rs.rank(); ++k)
            if (k + 1 != p) k_simple.push_back(k);
        Weight lam = eps(rs, 0) - del(rs, n - 1);
        CHECK(casimir_closed(rs, k_simple, lam) == Rational(m - n));
    }
    // case 1 two circled nodes: lambda_2 = e1 - dn gives m-n+p-q
    {
        int m = 4, n = 1, p = 1, q = 2;
        RootSystem rs = root_system("sl", m, n);
        std::vector<int> k_simple;
        for (int k = 0; k < rs.rank(); ++k)
            if (k + 1 != p && k + 1 != q) k_simple.push_back(k);
        CHECK(casimir_closed(rs, k_simple, eps(rs, 0) - del(rs, n - 1)) == Rational(m - n + p - q));
    }
    // osp: lambda_1 = e + d_p gives -(2n-p+1)/2
    for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 3}}) {
        RootSystem rs = root_system("osp", 2, n);
        std::vector<int> k_simple;
        for (int k = 0; k < rs.rank(); ++k)
            if (k + 1 != p) k_simple.push_back(k);
        Weight lam = eps(rs, 0) + del(rs, p - 1);
        CHECK(casimir_closed(rs, k_simple, lam) == Rational(-(2 * n - p + 1), 2));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(root_system("sl", 2, 2), UnsupportedAlgebra);
    CHECK_THROWS_AS(root_system("sl", 1, 0), UnsupportedAlgebra);
    CHECK_THROWS_AS(root_system("osp", 2, 1), UnsupportedAlgebra);
    CHECK_THROWS_AS(root_system("osp", 3, 2), UnsupportedAlgebra);
    CHECK_THROWS_AS(root_system("so", 3, 2), UnsupportedAlgebra);
}
