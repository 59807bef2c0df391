#include "supereinstein/poly.hpp"

namespace supereinstein {

Poly Poly::constant(Rational v) {
    Poly p;
    p.add_term(Mono{0, 0, 0}, v);
    return p;
}

Poly Poly::var(int k) {
    Mono m{0, 0, 0};
    m[static_cast<std::size_t>(k)] = 1;
    Poly p;
    p.add_term(m, Rational(1));
    return p;
}

Poly Poly::monomial(Mono exponents, Rational coeff) {
    Poly p;
    p.add_term(exponents, coeff);
    return p;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Poly::Mono m;
            for (std::size_t k = 0; k < Poly::kMaxVars; ++k) m[k] = ma[k] + mb[k];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::scaled(const Rational& f) const {
    Poly out;
    if (f.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * f);
    return out;
}

Poly Poly::substituted(int k, const Poly& value) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Mono rest = m;
        int e = rest[static_cast<std::size_t>(k)];
        rest[static_cast<std::size_t>(k)] = 0;
        Poly term = Poly::monomial(rest, c);
        for (int i = 0; i < e; ++i) term *= value;
        out += term;
    }
    return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    Rational out;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t k = 0; k < kMaxVars; ++k) {
            for (int i = 0; i < m[k]; ++i) term *= point[k];
        }
        out += term;
    }
    return out;
}

}  // namespace supereinstein
