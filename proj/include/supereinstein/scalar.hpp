#ifndef SUPEREINSTEIN_SCALAR_HPP
#define SUPEREINSTEIN_SCALAR_HPP

#include <array>
#include <string>

#include "supereinstein/rational.hpp"

namespace supereinstein {

struct NonRational : ArithmeticError {
    explicit NonRational(const std::string& what) : ArithmeticError(what) {}
};

/// Element of Q[z]/(z^4 + 1), stored as c0 + c1*z + c2*z^2 + c3*z^3.
/// z plays the role of sqrt(i) = e^{i*pi/4}, so z^2 is the imaginary unit.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : c_{Rational(v), Rational(), Rational(), Rational()} {}  // NOLINT
    Scalar(Rational v) : c_{std::move(v), Rational(), Rational(), Rational()} {}  // NOLINT
    Scalar(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Scalar i() { return Scalar(Rational(0), Rational(0), Rational(1), Rational(0)); }
    static Scalar sqrt_i() { return Scalar(Rational(0), Rational(1), Rational(0), Rational(0)); }

    const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const;
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    /// True when fixed by conjugation, i.e. a real number c0 + c1*sqrt(2)/... shape.
    bool is_real() const { return c_[2].is_zero() && c_[3] == -c_[1]; }

    /// Returns c0 when the other coordinates vanish; throws NonRational otherwise.
    Rational as_rational() const;

    Scalar conjugate() const;  // complex conjugation: z -> -z^3
    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "a + b*i + c*sqrt(i) + d*i*sqrt(i)", omitting zero terms; "0" when zero.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& v);

private:
    std::array<Rational, 4> c_{};
};

Scalar operator*(const Rational& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Rational& b);

}  // namespace supereinstein

#endif
