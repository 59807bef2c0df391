#ifndef SUPEREINSTEIN_ROOTS_HPP
#define SUPEREINSTEIN_ROOTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supereinstein/rational.hpp"

namespace supereinstein {

struct UnsupportedAlgebra : ArithmeticError {
    explicit UnsupportedAlgebra(const std::string& what) : ArithmeticError(what) {}
};

/// Weight in the (eps_1..eps_m, delta_1..delta_n) coordinate basis.
/// Type C uses a single eps slot.
struct Weight {
    std::vector<Rational> eps;
    std::vector<Rational> delta;

    Weight() = default;
    Weight(std::vector<Rational> e, std::vector<Rational> d) : eps(std::move(e)), delta(std::move(d)) {}
    static Weight zero(int m, int n);
    static Weight eps_unit(int m, int n, int i);    // eps_i (0-based)
    static Weight delta_unit(int m, int n, int mu); // delta_mu (0-based)

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(const Rational& f) const;
    bool operator==(const Weight& o) const { return eps == o.eps && delta == o.delta; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const;  // lexicographic, for map keys
    bool is_zero() const;

    /// Integer coordinate key "e1,e2,...|d1,d2,..." (requires integer coordinates).
    std::string key() const;
    std::string to_string() const;  // symbolic, e.g. "e1-d2"
};

enum class RootFamily { type_A, type_C };

struct RootSystem {
    RootFamily family;
    int m = 0, n = 0;
    std::vector<Weight> positive_even;
    std::vector<Weight> positive_odd;
    std::vector<Weight> simple;
    std::vector<bool> simple_odd;             // parity per simple root
    std::vector<Rational> eps_signs;          // (eps_i, eps_i)
    std::vector<Rational> delta_signs;        // (delta_mu, delta_mu)
    std::map<Weight, std::vector<Rational>> simple_coords;  // positive root -> simple coefficients

    int rank() const { return static_cast<int>(simple.size()); }
    bool is_positive_root(const Weight& w) const;
    bool is_root(const Weight& w) const;
    bool is_odd_root(const Weight& w) const;

    /// Coefficients of a root (either sign) over the simple system.
    std::vector<Rational> coords(const Weight& root) const;
};

/// Root data for sl(m|n) (type A; n or m may be zero) and osp(2|2n) (type C).
/// family_tag: "sl" or "osp".
RootSystem root_system(const std::string& family_tag, int m, int n);

Rational weight_inner(const RootSystem& rs, const Weight& a, const Weight& b);

/// Weyl vector rho = rho_even - rho_odd of the subsystem generated by the given
/// simple-root indices (all simples when subset is nullopt).
Weight weyl_vector(const RootSystem& rs, const std::optional<std::vector<int>>& subset = std::nullopt);

/// Casimir eigenvalue -(Lambda + 2 rho_k, Lambda) for the subsystem generated by k_simple.
Rational casimir_closed(const RootSystem& rs, const std::vector<int>& k_simple, const Weight& lambda);

}  // namespace supereinstein

#endif
