#include "supereinstein/scalar.hpp"

#include <ostream>

namespace supereinstein {

bool Scalar::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Rational Scalar::as_rational() const {
    if (!is_rational()) throw NonRational("value is not rational: " + to_string());
    return c_[0];
}

Scalar Scalar::conjugate() const {
    // z -> z^{-1} = -z^3, hence z^2 -> -z^2 and z^3 -> -z.
    return Scalar(c_[0], -c_[3], -c_[2], -c_[1]);
}

Scalar Scalar::operator-() const { return Scalar(-c_[0], -c_[1], -c_[2], -c_[3]); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    // Convolution reduced modulo z^4 = -1.
    std::array<Rational, 4> out;
    for (int i = 0; i < 4; ++i) {
        if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.c_[static_cast<std::size_t>(j)].is_zero()) continue;
            Rational p = a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
            int k = i + j;
            if (k >= 4) {
                k -= 4;
                p = -p;
            }
            out[static_cast<std::size_t>(k)] += p;
        }
    }
    return Scalar(out[0], out[1], out[2], out[3]);
}

Scalar operator*(const Rational& a, const Scalar& b) {
    return Scalar(a * b.coeff(0), a * b.coeff(1), a * b.coeff(2), a * b.coeff(3));
}

Scalar operator*(const Scalar& a, const Rational& b) { return b * a; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Scalar(c_[0].inverse());
    // a * conj(a) has c2 = 0 and c3 = -c1 (it is real); multiplying by the
    // further factor (x0 - x1*z + x1*z^3) with x0, x1 from that product kills the
    // remaining z-part, leaving a rational norm. Equivalent to solving the 4x4
    // multiplication system; done here by two conjugation steps.
    Scalar cj = conjugate();
    Scalar t = *this * cj;  // real: t = x0 + x1*z - x1*z^3
    const Rational& x0 = t.c_[0];
    const Rational& x1 = t.c_[1];
    Scalar flip(x0, -x1, Rational(0), x1);  // Galois image of t under z -> -z
    Scalar norm = t * flip;
    Rational n = norm.as_rational();  // rational by construction
    if (n.is_zero()) throw DivisionByZero();
    Rational inv_n = n.inverse();
    Scalar adj = cj * flip;
    return Scalar(inv_n * adj.c_[0], inv_n * adj.c_[1], inv_n * adj.c_[2], inv_n * adj.c_[3]);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

std::string Scalar::to_string() const {
    static const char* units[4] = {"", "sqrt(i)", "i", "i*sqrt(i)"};
    // display order: 1, i, sqrt(i), i*sqrt(i) -> coordinates c0, c2, c1, c3
    static const int order[4] = {0, 2, 1, 3};
    std::string out;
    for (int pos = 0; pos < 4; ++pos) {
        int k = order[pos];
        const Rational& v = c_[static_cast<std::size_t>(k)];
        if (v.is_zero()) continue;
        std::string term;
        Rational mag = v.abs();
        if (k == 0) {
            term = mag.to_string();
        } else if (mag.is_one()) {
            term = units[k];
        } else {
            term = mag.to_string() + "*" + units[k];
        }
        if (out.empty()) {
            out = (v.is_negative() ? "-" : "") + term;
        } else {
            out += (v.is_negative() ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& v) { return os << v.to_string(); }

}  // namespace supereinstein
