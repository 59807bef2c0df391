#include "supereinstein/algebra.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "supereinstein/linalg.hpp"

namespace supereinstein {

const char* to_string(Family f) {
    switch (f) {
        case Family::gl: return "gl";
        case Family::sl: return "sl";
        case Family::osp: return "osp";
        default: return "sl11";
    }
}

Scalar supertrace(const SuperMatrix& x) { return x.supertrace(); }

int AlgebraModel::matrix_m() const { return family == Family::osp ? 2 : (family == Family::sl11 ? 1 : m); }
int AlgebraModel::matrix_n() const { return family == Family::osp ? 2 * n : (family == Family::sl11 ? 1 : n); }

SuperMatrix AlgebraModel::zero() const { return SuperMatrix(matrix_m(), matrix_n()); }

const SuperMatrix& AlgebraModel::root_vector(const Weight& alpha) const {
    auto it = root_index.find(alpha);
    if (it == root_index.end()) throw UnsupportedAlgebra("no root vector for " + alpha.to_string());
    return basis[it->second].mat;
}

Rational AlgebraModel::q_pairing(const Weight& alpha) const {
    return q(root_vector(alpha), root_vector(-alpha)).as_rational();
}

Scalar AlgebraModel::center_coefficient(const SuperMatrix& x) const {
    if (q_form != QFormKind::sl_nn_split) return Scalar(0);
    return x.trace_even_block() * Scalar(Rational(1, matrix_m()));
}

Scalar AlgebraModel::q(const SuperMatrix& x, const SuperMatrix& y) const {
    switch (q_form) {
        case QFormKind::minus_str:
        case QFormKind::osp_minus_str:
            return -(x * y).supertrace();
        case QFormKind::sl_nn_split: {
            // Q(I,I)=1, Q(I, complement)=0, -Str on the complement; -Str(XY) is
            // itself insensitive to shifts along the identity, so only the center
            // coefficients need separate treatment.
            Scalar lx = center_coefficient(x), ly = center_coefficient(y);
            return lx * ly - (x * y).supertrace();
        }
    }
    return Scalar(0);
}

Scalar AlgebraModel::killing_ad(const SuperMatrix& x, const SuperMatrix& y) const {
    // Str(ad x ad y) = sum_k (-1)^{[v_k]} Q([x,[y,v_k]], dual v_k)
    Scalar out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        SuperMatrix w = graded_bracket(x, graded_bracket(y, basis[k].mat));
        if (w.is_zero()) continue;
        Scalar term = q(w, q_dual[k]);
        out += basis[k].parity == Parity::odd ? -term : term;
    }
    return out;
}

Scalar AlgebraModel::killing_closed(const SuperMatrix& x, const SuperMatrix& y) const {
    switch (family) {
        case Family::sl:
            return Scalar(Rational(2) * Rational(m - n)) * (x * y).supertrace();
        case Family::osp:
            return Scalar(Rational(2) * Rational(n)) * q(x, y);
        case Family::sl11:
            return Scalar(0);
        case Family::gl: {
            // B_gl(X,Y) = 2(m-n) Str(XY) - 2 Str(X) Str(Y)
            return Scalar(Rational(2) * Rational(m - n)) * (x * y).supertrace() -
                   Scalar(2) * x.supertrace() * y.supertrace();
        }
    }
    return Scalar(0);
}

SuperMatrix AlgebraModel::star(const SuperMatrix& x) const {
    if (!star_twist) return x.dagger();
    return *star_twist * x.dagger() * *star_twist;
}

ScalarVector expand_in_span(const std::vector<SuperMatrix>& span, const SuperMatrix& x) {
    // Exact solve of sum_k c_k span_k = x over the union of entry positions.
    std::map<std::pair<int, int>, std::size_t> pos;
    auto visit = [&pos](const SuperMatrix& mat) {
        for (const auto& e : mat.entries()) pos.emplace(std::make_pair(e.row, e.col), pos.size());
    };
    for (const auto& b : span) visit(b);
    visit(x);
    const std::size_t rows = pos.size(), cols = span.size();
    ScalarMatrix aug(rows, ScalarVector(cols + 1));
    for (std::size_t k = 0; k < cols; ++k)
        for (const auto& e : span[k].entries()) aug[pos.at({e.row, e.col})][k] = e.value;
    for (const auto& e : x.entries()) aug[pos.at({e.row, e.col})][cols] = e.value;
    if (rows == 0) return ScalarVector(cols);
    for (const auto& v : nullspace(aug)) {
        if (!v[cols].is_zero()) {
            Scalar s = -(v[cols].inverse());
            ScalarVector out(cols);
            for (std::size_t k = 0; k < cols; ++k) out[k] = s * v[k];
            SuperMatrix check(x.block_m(), x.block_n());
            for (std::size_t k = 0; k < cols; ++k)
                if (!out[k].is_zero()) check += out[k] * span[k];
            if (check != x) throw UnsupportedAlgebra("element outside the span");
            return out;
        }
    }
    if (x.is_zero()) return ScalarVector(cols);
    throw UnsupportedAlgebra("element outside the span");
}

ScalarVector AlgebraModel::expand(const SuperMatrix& x) const {
    // coords = (P^dagger P)^{-1} P^dagger entries, with P the (positions x dim)
    // matrix of the basis; the Hermitian Gram is invertible for any independent
    // family, so the solver is built once and reused.
    const std::size_t dim_n = basis.size();
    std::lock_guard<std::mutex> guard(*expand_lock_);
    if (expand_solver_.empty()) {
        for (const auto& b : basis)
            for (const auto& e : b.mat.entries())
                expand_pos_.emplace(std::make_pair(e.row, e.col), expand_pos_.size());
        const std::size_t rows = expand_pos_.size();
        ScalarMatrix p(rows, ScalarVector(dim_n));
        for (std::size_t k = 0; k < dim_n; ++k)
            for (const auto& e : basis[k].mat.entries()) p[expand_pos_.at({e.row, e.col})][k] = e.value;
        ScalarMatrix gram(dim_n, ScalarVector(dim_n));
        for (std::size_t i = 0; i < dim_n; ++i)
            for (std::size_t j = 0; j < dim_n; ++j) {
                Scalar acc;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (p[r][i].is_zero() || p[r][j].is_zero()) continue;
                    acc += p[r][i].conjugate() * p[r][j];
                }
                gram[i][j] = acc;
            }
        ScalarMatrix inv = invert(gram);
        expand_solver_.assign(dim_n, ScalarVector(rows));
        for (std::size_t i = 0; i < dim_n; ++i)
            for (std::size_t r = 0; r < rows; ++r) {
                Scalar acc;
                for (std::size_t j = 0; j < dim_n; ++j) {
                    if (inv[i][j].is_zero() || p[r][j].is_zero()) continue;
                    acc += inv[i][j] * p[r][j].conjugate();
                }
                expand_solver_[i][r] = acc;
            }
    }
    ScalarVector out(dim_n);
    for (const auto& e : x.entries()) {
        auto it = expand_pos_.find({e.row, e.col});
        if (it == expand_pos_.end()) throw UnsupportedAlgebra("element outside the algebra span");
        for (std::size_t i = 0; i < dim_n; ++i) {
            if (!expand_solver_[i][it->second].is_zero())
                out[i] += expand_solver_[i][it->second] * e.value;
        }
    }
    if (from_coords(out) != x) throw UnsupportedAlgebra("element outside the algebra span");
    return out;
}

std::vector<Rational> AlgebraModel::real_form_coords(const SuperMatrix& x) const {
    ScalarVector cx = expand(x);
    std::vector<Rational> out;
    const Scalar i_unit = Scalar::i();
    const Scalar si = Scalar::sqrt_i();
    for (std::size_t k : cartan_indices) out.push_back((cx[k] / i_unit).as_rational());
    auto root_pairs = [&](const std::vector<Weight>& positives, bool odd) {
        for (const auto& alpha : positives) {
            Scalar cp = cx[root_index.at(alpha)];
            Scalar cm = cx[root_index.at(-alpha)];
            if (odd) {
                cp /= si;
                cm /= si;
            }
            out.push_back(((cp - cm) / Scalar(2)).as_rational());
            out.push_back(((cp + cm) / (Scalar(2) * i_unit)).as_rational());
        }
    };
    if (family == Family::sl11) {
        Scalar cp = cx[1] / si, cm = cx[2] / si;
        out.push_back(((cp - cm) / Scalar(2)).as_rational());
        out.push_back(((cp + cm) / (Scalar(2) * i_unit)).as_rational());
        return out;
    }
    root_pairs(roots->positive_even, false);
    root_pairs(roots->positive_odd, true);
    return out;
}

SuperMatrix AlgebraModel::from_coords(const ScalarVector& coords) const {
    SuperMatrix out = zero();
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k].is_zero()) out += coords[k] * basis[k].mat;
    }
    return out;
}

SuperMatrix AlgebraModel::real_A(const Weight& alpha) const {
    return root_vector(alpha) - root_vector(-alpha);
}

SuperMatrix AlgebraModel::real_B(const Weight& alpha) const {
    return Scalar::i() * (root_vector(alpha) + root_vector(-alpha));
}

RealFormBasis AlgebraModel::compact_real_basis() const {
    RealFormBasis out;
    for (std::size_t k : cartan_indices) {
        out.elements.push_back(Scalar::i() * basis[k].mat);
        out.parities.push_back(Parity::even);
        out.labels.push_back("i*" + basis[k].label);
    }
    if (family == Family::sl11) {
        SuperMatrix a = basis[1].mat - basis[2].mat;          // E12 - E21
        SuperMatrix b = Scalar::i() * (basis[1].mat + basis[2].mat);
        out.elements.push_back(Scalar::sqrt_i() * a);
        out.parities.push_back(Parity::odd);
        out.labels.push_back("si*A");
        out.elements.push_back(Scalar::sqrt_i() * b);
        out.parities.push_back(Parity::odd);
        out.labels.push_back("si*B");
        return out;
    }
    for (const auto& alpha : roots->positive_even) {
        out.elements.push_back(real_A(alpha));
        out.parities.push_back(Parity::even);
        out.labels.push_back("A(" + alpha.to_string() + ")");
        out.elements.push_back(real_B(alpha));
        out.parities.push_back(Parity::even);
        out.labels.push_back("B(" + alpha.to_string() + ")");
    }
    for (const auto& alpha : roots->positive_odd) {
        out.elements.push_back(Scalar::sqrt_i() * real_A(alpha));
        out.parities.push_back(Parity::odd);
        out.labels.push_back("si*A(" + alpha.to_string() + ")");
        out.elements.push_back(Scalar::sqrt_i() * real_B(alpha));
        out.parities.push_back(Parity::odd);
        out.labels.push_back("si*B(" + alpha.to_string() + ")");
    }
    return out;
}

namespace {

// Sort positive roots by (height, coordinate vector) for a stable basis order.
std::vector<Weight> ordered_positive(const RootSystem& rs, const std::vector<Weight>& roots) {
    std::vector<std::pair<std::vector<Rational>, Weight>> keyed;
    keyed.reserve(roots.size());
    for (const auto& r : roots) {
        const auto& c = rs.simple_coords.at(r);
        Rational height;
        for (const auto& v : c) height += v;
        std::vector<Rational> key;
        key.push_back(height);
        key.insert(key.end(), c.begin(), c.end());
        keyed.emplace_back(std::move(key), r);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.first.size() && i < b.first.size(); ++i) {
            int cmp = a.first[i].compare(b.first[i]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });
    std::vector<Weight> out;
    out.reserve(keyed.size());
    for (auto& kv : keyed) out.push_back(kv.second);
    return out;
}

void append_root_vectors(AlgebraModel& alg, const std::vector<Weight>& positives, Parity parity,
                         const std::function<SuperMatrix(const Weight&, bool)>& make) {
    for (bool negative : {false, true}) {
        for (const auto& alpha : positives) {
            Weight w = negative ? -alpha : alpha;
            BasisElement el;
            el.label = "E(" + w.to_string() + ")";
            el.mat = make(alpha, negative);
            el.parity = parity;
            el.is_cartan = false;
            el.root = w;
            alg.root_index[w] = alg.basis.size();
            alg.basis.push_back(std::move(el));
        }
    }
}

void build_q_duals(AlgebraModel& alg) {
    alg.q_dual.assign(alg.basis.size(), alg.zero());
    // Cartan block: invert its Q-Gram (small dense, nondegenerate for these models).
    const auto& ci = alg.cartan_indices;
    ScalarMatrix gram(ci.size(), ScalarVector(ci.size()));
    for (std::size_t i = 0; i < ci.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j)
            gram[i][j] = alg.q(alg.basis[ci[i]].mat, alg.basis[ci[j]].mat);
    ScalarMatrix inv = invert(gram);
    for (std::size_t i = 0; i < ci.size(); ++i) {
        SuperMatrix d = alg.zero();
        // right dual: Q(v_i, dual_j) = delta_ij with dual_j = sum_k (G^{-1})_{kj} v_k
        for (std::size_t k = 0; k < ci.size(); ++k) {
            if (!inv[k][i].is_zero()) d += inv[k][i] * alg.basis[ci[k]].mat;
        }
        alg.q_dual[ci[i]] = std::move(d);
    }
    // Root vectors pair across opposite roots.
    for (std::size_t k = 0; k < alg.basis.size(); ++k) {
        const auto& el = alg.basis[k];
        if (el.is_cartan) continue;
        const SuperMatrix& opposite = alg.root_vector(-el.root);
        Scalar pairing = alg.q(el.mat, opposite);
        alg.q_dual[k] = pairing.inverse() * opposite;
    }
}

}  // namespace

// Evaluates a weight on a diagonal Cartan element of the model.
Rational eval_weight_on_cartan(const AlgebraModel& alg, const Weight& w, const SuperMatrix& h) {
    Scalar out;
    if (alg.family == Family::osp) {
        out = w.eps[0] * h.entry(0, 0);
        for (std::size_t j = 0; j < w.delta.size(); ++j)
            out += w.delta[j] * h.entry(2 + static_cast<int>(j), 2 + static_cast<int>(j));
    } else {
        for (std::size_t i = 0; i < w.eps.size(); ++i)
            out += w.eps[i] * h.entry(static_cast<int>(i), static_cast<int>(i));
        for (std::size_t j = 0; j < w.delta.size(); ++j)
            out += w.delta[j] * h.entry(alg.m + static_cast<int>(j), alg.m + static_cast<int>(j));
    }
    return out.as_rational();
}

namespace {

void verify_root_property(const AlgebraModel& alg) {
    // [H, E_alpha] = alpha(H) E_alpha for every Cartan H.
    for (const auto& el : alg.basis) {
        if (el.is_cartan) continue;
        for (std::size_t c : alg.cartan_indices) {
            SuperMatrix br = graded_bracket(alg.basis[c].mat, el.mat);
            Scalar eig(eval_weight_on_cartan(alg, el.root, alg.basis[c].mat));
            if (br != eig * el.mat) throw UnsupportedAlgebra("root space verification failed for " + el.label);
        }
    }
}

// Locates the +1 / -1 slots of a type-A root e_i - e_j over the m+n coordinates.
std::pair<int, int> type_a_slots(const Weight& alpha, int m) {
    int plus = -1, minus = -1;
    for (std::size_t i = 0; i < alpha.eps.size(); ++i) {
        if (alpha.eps[i] == Rational(1)) plus = static_cast<int>(i);
        if (alpha.eps[i] == Rational(-1)) minus = static_cast<int>(i);
    }
    for (std::size_t j = 0; j < alpha.delta.size(); ++j) {
        if (alpha.delta[j] == Rational(1)) plus = m + static_cast<int>(j);
        if (alpha.delta[j] == Rational(-1)) minus = m + static_cast<int>(j);
    }
    return {plus, minus};
}

AlgebraModel build_type_a(Family family, int m, int n) {
    if (m < 0 || n < 0 || m + n < 2) throw UnsupportedAlgebra("type A requires m,n >= 0 and m+n >= 2");
    if (family == Family::sl && m == n && m < 3)
        throw UnsupportedAlgebra("sl(n|n) requires n >= 3 (odd root spaces degenerate below that)");
    AlgebraModel alg;
    alg.family = family;
    alg.m = m;
    alg.n = n;
    alg.roots = root_system(family == Family::gl ? "gl" : "sl", m, n);
    alg.star_kind = StarKind::type1_A;
    alg.q_form = (family == Family::sl && m == n) ? QFormKind::sl_nn_split : QFormKind::minus_str;

    auto unit = [&](int r, int c) { return SuperMatrix::unit(m, n, r, c); };
    if (family == Family::gl) {
        for (int i = 0; i < m + n; ++i) {
            BasisElement el;
            el.label = "E" + std::to_string(i + 1) + std::to_string(i + 1);
            el.mat = unit(i, i);
            el.is_cartan = true;
            alg.cartan_indices.push_back(alg.basis.size());
            alg.basis.push_back(std::move(el));
        }
    } else {
        for (int j = 0; j < m + n - 1; ++j) {
            if (m == n && j == m - 1) continue;  // replaced by the identity below
            BasisElement el;
            el.label = "h" + std::to_string(j + 1);
            el.mat = (j == m - 1 && n >= 1) ? unit(j, j) + unit(j + 1, j + 1)
                                            : unit(j, j) - unit(j + 1, j + 1);
            el.is_cartan = true;
            alg.cartan_indices.push_back(alg.basis.size());
            alg.basis.push_back(std::move(el));
        }
        if (m == n) {
            BasisElement el;
            el.label = "I";
            el.mat = SuperMatrix::identity(m, n);
            el.is_cartan = true;
            alg.cartan_indices.push_back(alg.basis.size());
            alg.basis.push_back(std::move(el));
        }
    }
    auto make = [&](const Weight& alpha, bool negative) {
        auto [plus, minus] = type_a_slots(alpha, m);
        return negative ? unit(minus, plus) : unit(plus, minus);
    };
    append_root_vectors(alg, ordered_positive(*alg.roots, alg.roots->positive_even), Parity::even, make);
    append_root_vectors(alg, ordered_positive(*alg.roots, alg.roots->positive_odd), Parity::odd, make);
    build_q_duals(alg);
    verify_root_property(alg);
    return alg;
}

AlgebraModel build_sl11() {
    AlgebraModel alg;
    alg.family = Family::sl11;
    alg.m = 1;
    alg.n = 1;
    alg.q_form = QFormKind::sl_nn_split;
    alg.star_kind = StarKind::type1_A;
    BasisElement x1;
    x1.label = "X1";
    x1.mat = SuperMatrix::identity(1, 1);
    x1.is_cartan = true;
    alg.cartan_indices.push_back(0);
    alg.basis.push_back(std::move(x1));
    BasisElement x2;
    x2.label = "X2";
    x2.mat = SuperMatrix::unit(1, 1, 0, 1);
    x2.parity = Parity::odd;
    alg.basis.push_back(std::move(x2));
    BasisElement x3;
    x3.label = "X3";
    x3.mat = SuperMatrix::unit(1, 1, 1, 0);
    x3.parity = Parity::odd;
    alg.basis.push_back(std::move(x3));
    // Q-duals: Q(I,I)=1; Q(E12,E21) = -Str(E11) = -1, Q(E21,E12) = +1.
    alg.q_dual.push_back(alg.basis[0].mat);
    alg.q_dual.push_back(Scalar(-1) * alg.basis[2].mat);
    alg.q_dual.push_back(alg.basis[1].mat);
    return alg;
}

// Gram matrix of the osp-defining form: [[0,1],[1,0]] on the even pair,
// [[0,I_n],[-I_n,0]] on the odd block.
SuperMatrix osp_form_gram(int n) {
    SuperMatrix w(2, 2 * n);
    w.set(0, 1, Scalar(1));
    w.set(1, 0, Scalar(1));
    for (int j = 0; j < n; ++j) {
        w.set(2 + j, 2 + n + j, Scalar(1));
        w.set(2 + n + j, 2 + j, Scalar(-1));
    }
    return w;
}

// Checks the orthosymplectic condition for a homogeneous matrix:
// sum_r X_{ra} W_{rb} + (-1)^{[X][a]} sum_s W_{as} X_{sb} = 0 for all a, b.
bool in_osp(const SuperMatrix& x, const SuperMatrix& w, bool x_odd) {
    SuperMatrix lhs = SuperMatrix(x.block_m(), x.block_n());
    // X^T W
    for (const auto& ex : x.entries())
        for (const auto& ew : w.entries())
            if (ex.row == ew.row) lhs.add_to(ex.col, ew.col, ex.value * ew.value);
    // +/- W X with the parity sign of row a
    for (const auto& ew : w.entries()) {
        for (const auto& ex : x.entries()) {
            if (ew.col != ex.row) continue;
            bool a_odd = ew.row >= x.block_m();
            Scalar v = ew.value * ex.value;
            lhs.add_to(ew.row, ex.col, (x_odd && a_odd) ? -v : v);
        }
    }
    return lhs.is_zero();
}

AlgebraModel build_osp(int n) {
    if (n < 2) throw UnsupportedAlgebra("osp(2|2n) requires n >= 2");
    AlgebraModel alg;
    alg.family = Family::osp;
    alg.m = 2;
    alg.n = n;
    alg.roots = root_system("osp", 2, n);
    alg.q_form = QFormKind::osp_minus_str;
    alg.star_kind = StarKind::type1_C;
    const SuperMatrix w = osp_form_gram(n);
    auto unit = [&](int r, int c) { return SuperMatrix::unit(2, 2 * n, r, c); };
    // Self-inverse diagonal twist making X -> S conj(X)^T S an osp-preserving
    // type (1) star operation: plain dagger does not preserve the odd part, and
    // the twist must act as a scalar on the symplectic block so that the even
    // part comes out compact. That forces S = diag(1, -1, I_n, I_n).
    {
        SuperMatrix s(2, 2 * n);
        s.set(0, 0, Scalar(1));
        s.set(1, 1, Scalar(-1));
        for (int j = 0; j < n; ++j) {
            s.set(2 + j, 2 + j, Scalar(1));
            s.set(2 + n + j, 2 + n + j, Scalar(1));
        }
        alg.star_twist = std::move(s);
    }

    // Cartan: diag(a, -a, f_1..f_n, -f_1..-f_n)
    {
        BasisElement el;
        el.label = "h1";
        el.mat = unit(0, 0) - unit(1, 1);
        el.is_cartan = true;
        alg.cartan_indices.push_back(alg.basis.size());
        alg.basis.push_back(std::move(el));
    }
    for (int j = 0; j < n; ++j) {
        BasisElement el;
        el.label = "h" + std::to_string(j + 2);
        el.mat = unit(2 + j, 2 + j) - unit(2 + n + j, 2 + n + j);
        el.is_cartan = true;
        alg.cartan_indices.push_back(alg.basis.size());
        alg.basis.push_back(std::move(el));
    }

    // Position weights: mu = (eps, -eps, d_1..d_n, -d_1..-d_n)
    auto mu = [&](int r) {
        Weight out = Weight::zero(1, n);
        if (r == 0) out.eps[0] = 1;
        else if (r == 1) out.eps[0] = -1;
        else if (r < 2 + n) out.delta[static_cast<std::size_t>(r - 2)] = 1;
        else out.delta[static_cast<std::size_t>(r - 2 - n)] = -1;
        return out;
    };
    auto root_space_vector = [&](const Weight& alpha, bool odd) {
        std::vector<std::pair<int, int>> positions;
        for (int r = 0; r < 2 + 2 * n; ++r)
            for (int c = 0; c < 2 + 2 * n; ++c)
                if (r != c && mu(r) - mu(c) == alpha) positions.emplace_back(r, c);
        if (positions.empty()) throw UnsupportedAlgebra("no matrix positions for root " + alpha.to_string());
        // Constraint rows over the candidate positions: osp condition at all (a,b).
        std::map<std::pair<int, int>, std::size_t> row_of;
        ScalarMatrix rows;
        auto row_for = [&](int a, int b) -> ScalarVector& {
            auto [it, inserted] = row_of.emplace(std::make_pair(a, b), rows.size());
            if (inserted) rows.emplace_back(positions.size());
            return rows[it->second];
        };
        for (std::size_t k = 0; k < positions.size(); ++k) {
            auto [r, c] = positions[k];
            // X_{rc} contributes to constraint (a=c', b): X^T W term at (c, W-col)
            for (const auto& ew : w.entries()) {
                if (ew.row == r) row_for(c, ew.col)[k] += ew.value;
            }
            for (const auto& ew : w.entries()) {
                if (ew.col == r) {
                    bool a_odd = ew.row >= 2;
                    Scalar v = ew.value;
                    row_for(ew.row, c)[k] += (odd && a_odd) ? -v : v;
                }
            }
        }
        if (rows.empty()) rows.emplace_back(positions.size());
        auto null = nullspace(rows);
        if (null.size() != 1)
            throw UnsupportedAlgebra("root space of " + alpha.to_string() + " is not one-dimensional");
        // Normalize: first position (in scan order) carries coefficient with value 1.
        ScalarVector v = null[0];
        std::size_t lead = 0;
        while (lead < v.size() && v[lead].is_zero()) ++lead;
        Scalar inv = v[lead].inverse();
        SuperMatrix out(2, 2 * n);
        for (std::size_t k = 0; k < positions.size(); ++k) {
            Scalar val = inv * v[k];
            if (!val.is_zero()) out.set(positions[k].first, positions[k].second, val);
        }
        if (!in_osp(out, w, odd)) throw UnsupportedAlgebra("constructed root vector violates the osp condition");
        return out;
    };

    auto make = [&](const Weight& alpha, bool negative) {
        bool odd = alg.roots->is_odd_root(alpha);
        if (!negative) return root_space_vector(alpha, odd);
        // E_{-alpha} := star(E_alpha) so that the type (1) star swaps the pair exactly.
        SuperMatrix neg = alg.star(root_space_vector(alpha, odd));
        if (!in_osp(neg, w, odd))
            throw UnsupportedAlgebra("star of root vector left osp for " + alpha.to_string());
        return neg;
    };
    append_root_vectors(alg, ordered_positive(*alg.roots, alg.roots->positive_even), Parity::even, make);
    append_root_vectors(alg, ordered_positive(*alg.roots, alg.roots->positive_odd), Parity::odd, make);
    build_q_duals(alg);
    verify_root_property(alg);
    return alg;
}

}  // namespace

AlgebraPtr build_algebra(Family family, int m, int n) {
    switch (family) {
        case Family::gl:
        case Family::sl: {
            auto alg = std::make_shared<AlgebraModel>(build_type_a(family, m, n));
            return alg;
        }
        case Family::osp: {
            if (m != 2) throw UnsupportedAlgebra("osp family is osp(2|2n): m must be 2");
            return std::make_shared<AlgebraModel>(build_osp(n));
        }
        case Family::sl11:
            return std::make_shared<AlgebraModel>(build_sl11());
    }
    throw UnsupportedAlgebra("unsupported family");
}

AlgebraPtr build_algebra(const std::string& family_tag, int m, int n) {
    if (family_tag == "gl") return build_algebra(Family::gl, m, n);
    if (family_tag == "sl" || family_tag == "su") return build_algebra(Family::sl, m, n);
    if (family_tag == "osp" || family_tag == "sosp") return build_algebra(Family::osp, m, n);
    if (family_tag == "sl11") return build_algebra(Family::sl11);
    throw UnsupportedAlgebra("unsupported family: " + family_tag +
                             " (basic types B, D, F, G are out of scope)");
}

}  // namespace supereinstein
