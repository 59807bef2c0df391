#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supereinstein/scalar.hpp"

using namespace supereinstein;

namespace {

std::mt19937_64 rng(20240811);

Rational random_rational() {
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 12);
    return Rational(num(rng), den(rng));
}

Scalar random_scalar() { return Scalar(random_rational(), random_rational(), random_rational(), random_rational()); }

}  // namespace

TEST_CASE("bigint basics") {
    CHECK(BigInt(0).is_zero());
    CHECK((BigInt(7) + BigInt(-9)).to_string() == "-2");
    CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() == "998244359987710471");
    BigInt big = BigInt::pow(BigInt(10), 40) + BigInt(1);
    CHECK(big.to_string() == "10000000000000000000000000000000000000001");
    CHECK(BigInt("10000000000000000000000000000000000000001") == big);
    BigInt q, r;
    BigInt::divmod(big, BigInt::pow(BigInt(10), 20), q, r);
    CHECK(q.to_string() == "100000000000000000000");
    CHECK(r.to_string() == "1");
    CHECK(BigInt::gcd(BigInt(24), BigInt(-36)).to_string() == "12");
    // 2^200 round trip through decimal
    BigInt p = BigInt::pow(BigInt(2), 200);
    CHECK(BigInt(p.to_string()) == p);
    CHECK((p - p).is_zero());
    CHECK((p * p).to_string() == BigInt::pow(BigInt(2), 400).to_string());
    // division with large operands
    BigInt a = BigInt::pow(BigInt(7), 60), b = BigInt::pow(BigInt(7), 25);
    CHECK(a / b == BigInt::pow(BigInt(7), 35));
    CHECK((a % b).is_zero());
    CHECK((a + BigInt(5)) % b == BigInt(5));
}

TEST_CASE("bigint randomized divmod identity") {
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int iter = 0; iter < 300; ++iter) {
        BigInt a = BigInt::pow(BigInt(d(rng)), 3) + BigInt(d(rng));
        BigInt b = BigInt::pow(BigInt(d(rng)), 2) + BigInt(d(rng) % 97);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint multi-limb divmod stress") {
    // wide operands, including saturated-limb patterns that exercise the
    // correction branches of the long division
    auto random_wide = [&](int limbs, bool saturate) {
        BigInt v(saturate ? 0xffffffffLL : 1);
        std::uniform_int_distribution<long long> limb(0, 0xffffffffLL);
        for (int i = 0; i < limbs; ++i) {
            long long next = saturate ? 0xffffffffLL : limb(rng);
            v = v * BigInt(0x100000000LL) + BigInt(next);
        }
        std::uniform_int_distribution<int> flip(0, 1);
        return flip(rng) ? -v : v;
    };
    std::uniform_int_distribution<int> nlimbs(1, 9);
    for (int iter = 0; iter < 400; ++iter) {
        bool saturate = iter % 7 == 0;
        BigInt a = random_wide(nlimbs(rng), saturate);
        BigInt b = random_wide(nlimbs(rng) / 2 + 1, iter % 5 == 0);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
        // gcd consistency on the same operands
        BigInt g = BigInt::gcd(a, b);
        if (!g.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
    }
    // string round trips at width
    for (int iter = 0; iter < 40; ++iter) {
        BigInt v = random_wide(8, iter % 3 == 0);
        CHECK(BigInt(v.to_string()) == v);
    }
}

TEST_CASE("rational invariants") {
    Rational a(6, -4);
    CHECK(a.to_string() == "-3/2");
    CHECK(a.den() == BigInt(2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
}

TEST_CASE("scalar defining relations") {
    Scalar z = Scalar::sqrt_i();
    Scalar i = Scalar::i();
    CHECK(z * z == i);
    CHECK(i * i == Scalar(-1));
    Scalar one_plus_z = Scalar(1) + z;
    CHECK(one_plus_z / one_plus_z == Scalar(1));
}

TEST_CASE("scalar conjugation") {
    Scalar z = Scalar::sqrt_i();
    Scalar i = Scalar::i();
    CHECK(i.conjugate() == -i);
    // conj(z) = z^{-1} = -z^3
    CHECK(z.conjugate() == Scalar(Rational(0), Rational(0), Rational(0), Rational(-1)));
    CHECK(z.conjugate() * z == Scalar(1));
    CHECK(Scalar(Rational(3, 2)).conjugate() == Scalar(Rational(3, 2)));
    for (int iter = 0; iter < 50; ++iter) {
        Scalar a = random_scalar(), b = random_scalar();
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        // a * conj(a) is fixed by conjugation
        Scalar t = a * a.conjugate();
        CHECK(t.conjugate() == t);
        CHECK(t.is_real());
    }
}

TEST_CASE("as_rational") {
    CHECK(Scalar(Rational(5, 3)).as_rational() == Rational(5, 3));
    CHECK_THROWS_AS(Scalar::i().as_rational(), NonRational);
    Scalar z = Scalar::sqrt_i();
    Scalar v = z + (-z) + Scalar(7);
    CHECK(v.as_rational() == Rational(7));
}

TEST_CASE("scalar field axioms randomized") {
    for (int iter = 0; iter < 60; ++iter) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1));
            CHECK((b / a) * a == b);
        }
    }
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST_CASE("scalar display and order") {
    Scalar v(Rational(1, 2), Rational(3), Rational(-1), Rational(0));
    // display order: constants, i, sqrt(i), i*sqrt(i)
    CHECK(v.to_string() == "1/2 - i + 3*sqrt(i)");
    CHECK(Scalar().to_string() == "0");
    CHECK((-Scalar::i()).to_string() == "-i");
    CHECK((Scalar::i() * Scalar::sqrt_i()).to_string() == "i*sqrt(i)");
}
