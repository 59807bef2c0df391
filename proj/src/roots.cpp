#include "supereinstein/roots.hpp"

#include <algorithm>
#include <sstream>

#include "supereinstein/linalg.hpp"

namespace supereinstein {

Weight Weight::zero(int m, int n) {
    return Weight(std::vector<Rational>(static_cast<std::size_t>(m)),
                  std::vector<Rational>(static_cast<std::size_t>(n)));
}

Weight Weight::eps_unit(int m, int n, int i) {
    Weight w = zero(m, n);
    w.eps[static_cast<std::size_t>(i)] = 1;
    return w;
}

Weight Weight::delta_unit(int m, int n, int mu) {
    Weight w = zero(m, n);
    w.delta[static_cast<std::size_t>(mu)] = 1;
    return w;
}

Weight Weight::operator+(const Weight& o) const {
    Weight out = *this;
    for (std::size_t i = 0; i < eps.size(); ++i) out.eps[i] += o.eps[i];
    for (std::size_t i = 0; i < delta.size(); ++i) out.delta[i] += o.delta[i];
    return out;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
    Weight out = *this;
    for (auto& v : out.eps) v = -v;
    for (auto& v : out.delta) v = -v;
    return out;
}

Weight Weight::scaled(const Rational& f) const {
    Weight out = *this;
    for (auto& v : out.eps) v *= f;
    for (auto& v : out.delta) v *= f;
    return out;
}

bool Weight::operator<(const Weight& o) const {
    for (std::size_t i = 0; i < eps.size() && i < o.eps.size(); ++i) {
        int c = eps[i].compare(o.eps[i]);
        if (c != 0) return c < 0;
    }
    if (eps.size() != o.eps.size()) return eps.size() < o.eps.size();
    for (std::size_t i = 0; i < delta.size() && i < o.delta.size(); ++i) {
        int c = delta[i].compare(o.delta[i]);
        if (c != 0) return c < 0;
    }
    return delta.size() < o.delta.size();
}

bool Weight::is_zero() const {
    for (const auto& v : eps)
        if (!v.is_zero()) return false;
    for (const auto& v : delta)
        if (!v.is_zero()) return false;
    return true;
}

std::string Weight::key() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < eps.size(); ++i) os << (i ? "," : "") << eps[i].to_string();
    os << "|";
    for (std::size_t i = 0; i < delta.size(); ++i) os << (i ? "," : "") << delta[i].to_string();
    return os.str();
}

std::string Weight::to_string() const {
    std::string out;
    auto emit = [&out](const Rational& v, const std::string& sym) {
        if (v.is_zero()) return;
        std::string mag = v.abs().is_one() ? sym : v.abs().to_string() + sym;
        if (out.empty()) {
            out = (v.is_negative() ? "-" : "") + mag;
        } else {
            out += (v.is_negative() ? "-" : "+") + mag;
        }
    };
    for (std::size_t i = 0; i < eps.size(); ++i) emit(eps[i], "e" + std::to_string(i + 1));
    for (std::size_t i = 0; i < delta.size(); ++i) emit(delta[i], "d" + std::to_string(i + 1));
    return out.empty() ? "0" : out;
}

bool RootSystem::is_positive_root(const Weight& w) const {
    return simple_coords.find(w) != simple_coords.end();
}

bool RootSystem::is_root(const Weight& w) const { return is_positive_root(w) || is_positive_root(-w); }

bool RootSystem::is_odd_root(const Weight& w) const {
    const Weight pos = is_positive_root(w) ? w : -w;
    for (const auto& r : positive_odd)
        if (r == pos) return true;
    return false;
}

std::vector<Rational> RootSystem::coords(const Weight& root) const {
    auto it = simple_coords.find(root);
    if (it != simple_coords.end()) return it->second;
    it = simple_coords.find(-root);
    if (it == simple_coords.end()) throw UnsupportedAlgebra("not a root: " + root.to_string());
    std::vector<Rational> out = it->second;
    for (auto& v : out) v = -v;
    return out;
}

namespace {

std::vector<Rational> solve_simple_coords(const RootSystem& rs, const Weight& root) {
    // Solve sum_k x_k * simple_k = root exactly: append the root as an extra
    // column and read the solution off the nullspace of the augmented matrix.
    const std::size_t dim = rs.simple[0].eps.size() + rs.simple[0].delta.size();
    const std::size_t ns = rs.simple.size();
    ScalarMatrix aug(dim, ScalarVector(ns + 1));
    for (std::size_t k = 0; k < ns; ++k) {
        const Weight& s = rs.simple[k];
        for (std::size_t i = 0; i < s.eps.size(); ++i) aug[i][k] = Scalar(s.eps[i]);
        for (std::size_t i = 0; i < s.delta.size(); ++i) aug[s.eps.size() + i][k] = Scalar(s.delta[i]);
    }
    for (std::size_t i = 0; i < root.eps.size(); ++i) aug[i][ns] = Scalar(root.eps[i]);
    for (std::size_t i = 0; i < root.delta.size(); ++i) aug[root.eps.size() + i][ns] = Scalar(root.delta[i]);
    auto null = nullspace(aug);
    for (const auto& v : null) {
        if (!v[ns].is_zero()) {
            Scalar inv = -(v[ns].inverse());
            std::vector<Rational> out(ns);
            for (std::size_t k = 0; k < ns; ++k) out[k] = (inv * v[k]).as_rational();
            return out;
        }
    }
    throw UnsupportedAlgebra("weight outside the simple-root span: " + root.to_string());
}

void finish(RootSystem& rs) {
    for (const auto& r : rs.positive_even) rs.simple_coords[r] = solve_simple_coords(rs, r);
    for (const auto& r : rs.positive_odd) rs.simple_coords[r] = solve_simple_coords(rs, r);
}

RootSystem make_type_A(int m, int n) {
    RootSystem rs;
    rs.family = RootFamily::type_A;
    rs.m = m;
    rs.n = n;
    rs.eps_signs.assign(static_cast<std::size_t>(m), Rational(-1));
    rs.delta_signs.assign(static_cast<std::size_t>(n), Rational(1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            rs.positive_even.push_back(Weight::eps_unit(m, n, i) - Weight::eps_unit(m, n, j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            rs.positive_even.push_back(Weight::delta_unit(m, n, i) - Weight::delta_unit(m, n, j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            rs.positive_odd.push_back(Weight::eps_unit(m, n, i) - Weight::delta_unit(m, n, j));
    for (int i = 0; i + 1 < m; ++i) {
        rs.simple.push_back(Weight::eps_unit(m, n, i) - Weight::eps_unit(m, n, i + 1));
        rs.simple_odd.push_back(false);
    }
    if (m >= 1 && n >= 1) {
        rs.simple.push_back(Weight::eps_unit(m, n, m - 1) - Weight::delta_unit(m, n, 0));
        rs.simple_odd.push_back(true);
    }
    for (int i = 0; i + 1 < n; ++i) {
        rs.simple.push_back(Weight::delta_unit(m, n, i) - Weight::delta_unit(m, n, i + 1));
        rs.simple_odd.push_back(false);
    }
    finish(rs);
    return rs;
}

RootSystem make_type_C(int n) {
    RootSystem rs;
    rs.family = RootFamily::type_C;
    rs.m = 1;  // single eps slot
    rs.n = n;
    rs.eps_signs.assign(1, Rational(-1, 2));
    rs.delta_signs.assign(static_cast<std::size_t>(n), Rational(1, 2));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            rs.positive_even.push_back(Weight::delta_unit(1, n, i) - Weight::delta_unit(1, n, j));
            rs.positive_even.push_back(Weight::delta_unit(1, n, i) + Weight::delta_unit(1, n, j));
        }
        rs.positive_even.push_back(Weight::delta_unit(1, n, i).scaled(Rational(2)));
    }
    for (int j = 0; j < n; ++j) {
        rs.positive_odd.push_back(Weight::eps_unit(1, n, 0) - Weight::delta_unit(1, n, j));
        rs.positive_odd.push_back(Weight::eps_unit(1, n, 0) + Weight::delta_unit(1, n, j));
    }
    rs.simple.push_back(Weight::eps_unit(1, n, 0) - Weight::delta_unit(1, n, 0));
    rs.simple_odd.push_back(true);
    for (int i = 0; i + 1 < n; ++i) {
        rs.simple.push_back(Weight::delta_unit(1, n, i) - Weight::delta_unit(1, n, i + 1));
        rs.simple_odd.push_back(false);
    }
    rs.simple.push_back(Weight::delta_unit(1, n, n - 1).scaled(Rational(2)));
    rs.simple_odd.push_back(false);
    finish(rs);
    return rs;
}

}  // namespace

RootSystem root_system(const std::string& family_tag, int m, int n) {
    if (family_tag == "sl" || family_tag == "gl" || family_tag == "su") {
        if (m < 0 || n < 0 || m + n < 2) throw UnsupportedAlgebra("type A requires m,n >= 0 and m+n >= 2");
        if (m == n && m < 3 && family_tag != "gl")
            throw UnsupportedAlgebra("sl(n|n) requires n >= 3");
        return make_type_A(m, n);
    }
    if (family_tag == "osp" || family_tag == "sosp") {
        if (m != 2) throw UnsupportedAlgebra("osp family is osp(2|2n): m must be 2");
        if (n < 2) throw UnsupportedAlgebra("osp(2|2n) requires n >= 2");
        return make_type_C(n);
    }
    throw UnsupportedAlgebra("unsupported family: " + family_tag);
}

Rational weight_inner(const RootSystem& rs, const Weight& a, const Weight& b) {
    Rational out;
    for (std::size_t i = 0; i < rs.eps_signs.size(); ++i) out += rs.eps_signs[i] * a.eps[i] * b.eps[i];
    for (std::size_t i = 0; i < rs.delta_signs.size(); ++i) out += rs.delta_signs[i] * a.delta[i] * b.delta[i];
    return out;
}

namespace {

bool generated_by(const RootSystem& rs, const Weight& positive_root, const std::vector<bool>& allowed) {
    const auto& coords = rs.simple_coords.at(positive_root);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k].is_zero() && !allowed[k]) return false;
    }
    return true;
}

}  // namespace

Weight weyl_vector(const RootSystem& rs, const std::optional<std::vector<int>>& subset) {
    std::vector<bool> allowed(static_cast<std::size_t>(rs.rank()), !subset.has_value());
    if (subset) {
        for (int k : *subset) allowed[static_cast<std::size_t>(k)] = true;
    }
    Weight twice = Weight::zero(static_cast<int>(rs.eps_signs.size()), static_cast<int>(rs.delta_signs.size()));
    for (const auto& r : rs.positive_even)
        if (generated_by(rs, r, allowed)) twice = twice + r;
    for (const auto& r : rs.positive_odd)
        if (generated_by(rs, r, allowed)) twice = twice - r;
    return twice.scaled(Rational(1, 2));
}

Rational casimir_closed(const RootSystem& rs, const std::vector<int>& k_simple, const Weight& lambda) {
    Weight rho_k = weyl_vector(rs, k_simple);
    return -(weight_inner(rs, lambda, lambda) + Rational(2) * weight_inner(rs, rho_k, lambda));
}

}  // namespace supereinstein
