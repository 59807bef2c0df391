#ifndef SUPEREINSTEIN_POLY_HPP
#define SUPEREINSTEIN_POLY_HPP

#include <array>
#include <map>
#include <vector>

#include "supereinstein/rational.hpp"

namespace supereinstein {

/// Sparse polynomial over the rationals in at most kMaxVars variables.
/// Used to certify continuous Einstein families by exact identity checking.
class Poly {
public:
    static constexpr int kMaxVars = 3;
    using Mono = std::array<int, kMaxVars>;

    Poly() = default;
    static Poly constant(Rational v);
    static Poly var(int k);
    static Poly monomial(Mono exponents, Rational coeff);

    bool is_zero() const { return terms_.empty(); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const Rational& f) const;

    /// Substitutes variable k by the given polynomial.
    Poly substituted(int k, const Poly& value) const;
    Rational eval(const std::vector<Rational>& point) const;

    const std::map<Mono, Rational>& terms() const { return terms_; }

private:
    std::map<Mono, Rational> terms_;
    void add_term(const Mono& m, const Rational& c);
};

}  // namespace supereinstein

#endif
