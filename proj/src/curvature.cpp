#include "supereinstein/curvature.hpp"

#include <algorithm>

#include "supereinstein/einstein.hpp"
#include "supereinstein/linalg.hpp"

namespace supereinstein {

std::vector<SuperMatrix> dual_basis(
    const std::vector<SuperMatrix>& basis,
    const std::function<Scalar(const SuperMatrix&, const SuperMatrix&)>& pairing) {
    const std::size_t d = basis.size();
    ScalarMatrix gram(d, ScalarVector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gram[i][j] = pairing(basis[i], basis[j]);
    ScalarMatrix inv;
    try {
        inv = invert(gram);
    } catch (const DegenerateForm&) {
        throw DegenerateForm("dual_basis: the form is degenerate on the span");
    }
    // dual_j = sum_k (G^{-1})_{kj} v_k gives pairing(v_i, dual_j) = delta_ij
    std::vector<SuperMatrix> out;
    out.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        SuperMatrix acc(basis[0].block_m(), basis[0].block_n());
        for (std::size_t k = 0; k < d; ++k) {
            if (!inv[k][j].is_zero()) acc += inv[k][j] * basis[k];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CosetGeometry

CosetGeometry::CosetGeometry(const IsotropyDecomposition& dec, DiagonalMetric metric)
    : dec_(&dec), metric_(std::move(metric)) {
    if (static_cast<int>(metric_.x.size()) != dec.summands())
        throw DimensionMismatch("metric has wrong number of block coefficients");
    for (const auto& x : metric_.x)
        if (x.is_zero()) throw DegenerateForm("diagonal metric coefficients must be nonzero");
    for (int i = 0; i < dec.summands(); ++i) {
        const auto& blk = dec.blocks[static_cast<std::size_t>(i)];
        std::vector<SuperMatrix> block_duals = dual_basis(
            blk.real_basis, [&](const SuperMatrix& a, const SuperMatrix& b) { return dec.algebra->q(a, b); });
        for (std::size_t k = 0; k < blk.real_basis.size(); ++k) {
            basis_.push_back(blk.real_basis[k]);
            parities_.push_back(blk.real_parities[k]);
            block_of_.push_back(i);
            q_dual_.push_back(block_duals[k]);
            Scalar scale = Scalar(metric_.x[static_cast<std::size_t>(i)].inverse());
            metric_dual_.push_back(scale * block_duals[k]);
        }
    }
    const int d = dim();
    dual_coords_.resize(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        for (int t = 0; t < d; ++t) {
            Scalar c = q(metric_dual_[static_cast<std::size_t>(a)], q_dual_[static_cast<std::size_t>(t)]);
            if (!c.is_zero()) dual_coords_[static_cast<std::size_t>(a)].emplace_back(t, std::move(c));
        }
    }
    gram_rows_.resize(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (block_of_[static_cast<std::size_t>(a)] != block_of_[static_cast<std::size_t>(b)]) continue;
            Scalar v = Scalar(metric_.x[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(a)])]) *
                       q(basis_[static_cast<std::size_t>(a)], basis_[static_cast<std::size_t>(b)]);
            if (!v.is_zero()) gram_rows_[static_cast<std::size_t>(a)].emplace_back(b, std::move(v));
        }
    }
    // Naturally reductive iff every interacting block triple carries one metric
    // coefficient: <[X,Y]_m, Z> - <X, [Y,Z]_m> = (x_k - x_i) Q([X,Y], Z).
    naturally_reductive_ = true;
    const int s = dec.summands();
    for (int i = 0; i < s && naturally_reductive_; ++i)
        for (int j = 0; j < s && naturally_reductive_; ++j)
            for (int k = 0; k < s && naturally_reductive_; ++k) {
                if (metric_.x[static_cast<std::size_t>(i)] == metric_.x[static_cast<std::size_t>(k)]) continue;
                if (blocks_interact(dec, i, j, k)) naturally_reductive_ = false;
            }
}

ScalarVector CosetGeometry::coords_of(const SuperMatrix& x) const {
    ScalarVector out(static_cast<std::size_t>(dim()));
    for (int t = 0; t < dim(); ++t) out[static_cast<std::size_t>(t)] = q(x, q_dual_[static_cast<std::size_t>(t)]);
    return out;
}

void CosetGeometry::ensure_tables() const {
    if (tables_ready_) return;
    const int d = dim();
    bm_coords_.assign(static_cast<std::size_t>(d), std::vector<SparseVec>(static_cast<std::size_t>(d)));
    k_part_.assign(static_cast<std::size_t>(d),
                   std::vector<SuperMatrix>(static_cast<std::size_t>(d), dec_->algebra->zero()));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            SuperMatrix full = graded_bracket(basis_[static_cast<std::size_t>(a)],
                                              basis_[static_cast<std::size_t>(b)]);
            SuperMatrix m_part = dec_->algebra->zero();
            for (int t = 0; t < d; ++t) {
                Scalar c = q(full, q_dual_[static_cast<std::size_t>(t)]);
                if (c.is_zero()) continue;
                bm_coords_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].emplace_back(t, c);
                m_part += c * basis_[static_cast<std::size_t>(t)];
            }
            k_part_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = full - m_part;
        }
    }
    // U-map coordinates: <U(X_a,X_b), dual_t> resolved against the Gram.
    u_coords_.assign(static_cast<std::size_t>(d), std::vector<SparseVec>(static_cast<std::size_t>(d)));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            int sign = (parities_[static_cast<std::size_t>(a)] == Parity::odd &&
                        parities_[static_cast<std::size_t>(b)] == Parity::odd)
                           ? -1
                           : 1;
            SparseVec out;
            for (int t = 0; t < d; ++t) {
                // [X_b, dual_t]_m and [X_a, dual_t]_m through the coordinate tables
                Scalar coeff;
                for (const auto& [s_idx, s_val] : dual_coords_[static_cast<std::size_t>(t)]) {
                    // <X_a, [X_b, X_s]_m> and <X_b, [X_a, X_s]_m>
                    const SparseVec& bs = bm_coords_[static_cast<std::size_t>(b)][static_cast<std::size_t>(s_idx)];
                    for (const auto& [w, wv] : bs) {
                        for (const auto& [g, gv] : gram_rows_[static_cast<std::size_t>(a)]) {
                            if (g == w) coeff -= s_val * wv * gv;
                        }
                    }
                    const SparseVec& as = bm_coords_[static_cast<std::size_t>(a)][static_cast<std::size_t>(s_idx)];
                    for (const auto& [w, wv] : as) {
                        for (const auto& [g, gv] : gram_rows_[static_cast<std::size_t>(b)]) {
                            if (g == w) coeff -= Scalar(sign) * s_val * wv * gv;
                        }
                    }
                }
                if (!coeff.is_zero()) out.emplace_back(t, std::move(coeff));
            }
            u_coords_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(out);
        }
    }
    tables_ready_ = true;
}

Scalar CosetGeometry::pair_sparse(const SparseVec& u, const SparseVec& v) const {
    Scalar acc;
    for (const auto& [a, av] : u) {
        for (const auto& [g, gv] : gram_rows_[static_cast<std::size_t>(a)]) {
            for (const auto& [b, bv] : v) {
                if (b == g) acc += av * gv * bv;
            }
        }
    }
    return acc;
}

CosetGeometry::SparseVec CosetGeometry::bracket_m_sparse(const SparseVec& u, const SparseVec& v) const {
    ScalarVector dense(static_cast<std::size_t>(dim()));
    for (const auto& [a, av] : u) {
        for (const auto& [b, bv] : v) {
            for (const auto& [t, tv] : bm_coords_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                dense[static_cast<std::size_t>(t)] += av * bv * tv;
        }
    }
    SparseVec out;
    for (int t = 0; t < dim(); ++t)
        if (!dense[static_cast<std::size_t>(t)].is_zero())
            out.emplace_back(t, std::move(dense[static_cast<std::size_t>(t)]));
    return out;
}

const CosetGeometry::SparseVec& CosetGeometry::k_bracket_coords(int a, int b, int c) const {
    auto key = std::make_tuple(a, b, c);
    auto it = k_bracket_memo_.find(key);
    if (it != k_bracket_memo_.end()) return it->second;
    const SuperMatrix& kp = k_part_[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
    SparseVec out;
    if (!kp.is_zero()) {
        SuperMatrix br = graded_bracket(basis_[static_cast<std::size_t>(a)], kp);
        for (int t = 0; t < dim(); ++t) {
            Scalar cv = q(br, q_dual_[static_cast<std::size_t>(t)]);
            if (!cv.is_zero()) out.emplace_back(t, std::move(cv));
        }
    }
    return k_bracket_memo_.emplace(key, std::move(out)).first->second;
}

// <R(X_i,X_j)X_k, X_l> * 4 over the precomputed tables.
Scalar CosetGeometry::component_sparse(int i, int j, int k, int l) const {
    ensure_tables();
    const int pa = parity(i) == Parity::odd, pb = parity(j) == Parity::odd;
    const int pc = parity(k) == Parity::odd, pd = parity(l) == Parity::odd;
    auto sgn = [](int e) { return e % 2 ? Scalar(-1) : Scalar(1); };
    auto unit = [&](int t) { return SparseVec{{t, Scalar(1)}}; };
    const SparseVec ei = unit(i), ej = unit(j), ek = unit(k), el = unit(l);
    auto bm = [&](int a, int b) -> const SparseVec& {
        return bm_coords_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    };
    const SparseVec &ab = bm(i, j), &cd = bm(k, l), &bc = bm(j, k);
    const SparseVec &ad = bm(i, l), &ac = bm(i, k), &bd = bm(j, l);

    Scalar acc;
    acc += Scalar(-2) * pair_sparse(ab, cd);
    acc += sgn(pa * (pb + pc)) * pair_sparse(bc, ad);
    acc -= sgn(pb * pc) * pair_sparse(ac, bd);
    acc -= pair_sparse(ei, bracket_m_sparse(bc, el));
    acc += pair_sparse(bracket_m_sparse(ei, bc), el);
    acc += sgn(pa * pb) * pair_sparse(ej, bracket_m_sparse(ac, el));
    acc += sgn(pb * pc) * pair_sparse(bracket_m_sparse(ac, ej), el);
    acc += sgn(pa * (pb + pc)) * pair_sparse(ej, bracket_m_sparse(ek, ad));
    acc += sgn(pa * pb + pc * pd) * pair_sparse(bracket_m_sparse(ej, ad), ek);
    acc -= sgn(pb * pc) * pair_sparse(ei, bracket_m_sparse(ek, bd));
    acc -= sgn(pc * pd) * pair_sparse(bracket_m_sparse(ei, bd), ek);
    // [X_j, [X_k,X_l]_g]_m = [X_j, [X_k,X_l]_m]_m + [X_j, k-part]_m
    {
        SparseVec jm = bracket_m_sparse(ej, cd);
        const SparseVec& jk = k_bracket_coords(j, k, l);
        Scalar t12 = pair_sparse(ei, jm) + pair_sparse(ei, jk);
        acc += Scalar(2) * t12;
        SparseVec am = bracket_m_sparse(ei, cd);
        const SparseVec& akp = k_bracket_coords(i, k, l);
        Scalar t13 = pair_sparse(ej, am) + pair_sparse(ej, akp);
        acc -= Scalar(2) * sgn(pa * pb) * t13;
    }
    const SparseVec& ubc = u_coords_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    const SparseVec& uad = u_coords_[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
    const SparseVec& uac = u_coords_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    const SparseVec& ubd = u_coords_[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
    acc += sgn(pa * (pb + pc)) * pair_sparse(ubc, uad);
    acc -= sgn(pb * pc) * pair_sparse(uac, ubd);
    return acc;
}

Scalar CosetGeometry::pair(const SuperMatrix& u, const SuperMatrix& v) const {
    Scalar acc;
    for (int a = 0; a < dim(); ++a) {
        Scalar cv = q(v, q_dual_[static_cast<std::size_t>(a)]);
        if (cv.is_zero()) continue;
        Scalar cu = q(u, basis_[static_cast<std::size_t>(a)]);
        if (cu.is_zero()) continue;
        acc += Scalar(metric_.x[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(a)])]) * cv * cu;
    }
    return acc;
}

SuperMatrix CosetGeometry::bracket_m(const SuperMatrix& x, const SuperMatrix& y) const {
    return dec_->project_m(graded_bracket(x, y));
}

SuperMatrix CosetGeometry::u_map(const SuperMatrix& x, const SuperMatrix& y) const {
    // Split mixed inputs into homogeneous parts; the map is bilinear.
    if (!x.is_homogeneous() || !y.is_homogeneous()) {
        SuperMatrix out = dec_->algebra->zero();
        for (const SuperMatrix& xp : {x.even_part(), x.odd_part()}) {
            if (xp.is_zero()) continue;
            for (const SuperMatrix& yp : {y.even_part(), y.odd_part()}) {
                if (yp.is_zero()) continue;
                out += u_map(xp, yp);
            }
        }
        return out;
    }
    int sign = bracket_sign(x.parity(), y.parity());
    SuperMatrix out = dec_->algebra->zero();
    for (int a = 0; a < dim(); ++a) {
        const SuperMatrix& dual_a = metric_dual_[static_cast<std::size_t>(a)];
        Scalar coeff = -pair(x, bracket_m(y, dual_a));
        Scalar second = pair(y, bracket_m(x, dual_a));
        coeff -= sign < 0 ? -second : second;
        if (!coeff.is_zero()) out += coeff * basis_[static_cast<std::size_t>(a)];
    }
    return out;
}

SuperMatrix CosetGeometry::nabla_at_base(const SuperMatrix& x, const SuperMatrix& y) const {
    SuperMatrix out = u_map(x, y) - bracket_m(x, y);
    return Scalar(Rational(1, 2)) * out;
}

Rational CosetGeometry::riemann_full(int i, int j, int k, int l) const {
    return (component_sparse(i, j, k, l) * Scalar(Rational(1, 4))).as_rational();
}

Rational CosetGeometry::riemann_reductive(int i, int j, int k, int l) const {
    const SuperMatrix& a = basis_[static_cast<std::size_t>(i)];
    const SuperMatrix& b = basis_[static_cast<std::size_t>(j)];
    const SuperMatrix& c = basis_[static_cast<std::size_t>(k)];
    const SuperMatrix& d = basis_[static_cast<std::size_t>(l)];
    const int pb = parity(j) == Parity::odd;
    const int pc = parity(k) == Parity::odd, pd = parity(l) == Parity::odd;
    auto sgn = [](int e) { return e % 2 ? Scalar(-1) : Scalar(1); };
    SuperMatrix cd = graded_bracket(c, d);
    SuperMatrix cd_m = dec_->project_m(cd);
    SuperMatrix cd_k = cd - cd_m;
    // Four-term simplification of the full curvature expression under natural
    // reductivity. The signs of the last two terms follow from the term-by-term
    // reduction of the 15-term formula (check: a bi-invariant metric gives
    // 4<R(a,b)c,d> = <[a,b],[c,d]>).
    Scalar acc;
    acc += Scalar(2) * pair(a, bracket_m(b, cd_m));
    acc += Scalar(4) * pair(a, dec_->project_m(graded_bracket(b, cd_k)));
    acc -= sgn(pb * pc) * pair(a, bracket_m(c, bracket_m(b, d)));
    acc += sgn((pb + pc) * pd) * pair(a, bracket_m(d, bracket_m(b, c)));
    return (acc * Scalar(Rational(1, 4))).as_rational();
}

Rational CosetGeometry::riemann_component(int i, int j, int k, int l) const {
    Rational full = riemann_full(i, j, k, l);
    if (naturally_reductive_) {
        Rational shortcut = riemann_reductive(i, j, k, l);
        if (shortcut != full)
            throw RouteDisagreement("naturally reductive Riemann shortcut disagrees: " + full.to_string() +
                                    " vs " + shortcut.to_string());
    }
    return full;
}

ScalarMatrix CosetGeometry::ricci_definition_gram() const {
    ensure_tables();
    const int d = dim();
    const Scalar quarter(Rational(1, 4));
    ScalarMatrix ric(static_cast<std::size_t>(d), ScalarVector(static_cast<std::size_t>(d)));
    for (int a = 0; a < d; ++a) {
        for (int c = 0; c < d; ++c) {
            Scalar acc;
            for (int j = 0; j < d; ++j) {
                // <R(X_a, X_j) X_c, dual_j> expanded over the dual's support
                Scalar term;
                for (const auto& [t, coord] : dual_coords_[static_cast<std::size_t>(j)]) {
                    term += coord * component_sparse(a, j, c, t) * quarter;
                }
                int pj = parity(j) == Parity::odd, pc = parity(c) == Parity::odd;
                acc += (pj + pj * pc) % 2 ? -term : term;
            }
            ric[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = acc;
        }
    }
    return ric;
}

std::vector<Rational> CosetGeometry::ricci_definition() const {
    ScalarMatrix ric = ricci_definition_gram();
    const int d = dim();
    std::vector<std::optional<Rational>> r(static_cast<std::size_t>(dec_->summands()));
    for (int a = 0; a < d; ++a) {
        for (int c = 0; c < d; ++c) {
            Scalar qv = q(basis_[static_cast<std::size_t>(a)], basis_[static_cast<std::size_t>(c)]);
            const Scalar& rv = ric[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
            if (block_of_[static_cast<std::size_t>(a)] != block_of_[static_cast<std::size_t>(c)] ||
                qv.is_zero()) {
                if (!rv.is_zero())
                    throw RouteDisagreement("definition-route Ricci is not block diagonal");
                continue;
            }
            Rational val = (rv / qv).as_rational();
            auto& slot = r[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(a)])];
            if (slot && *slot != val) throw RouteDisagreement("definition-route Ricci not scalar on a block");
            slot = val;
        }
    }
    std::vector<Rational> out;
    for (const auto& v : r) out.push_back(v.value_or(Rational(0)));
    return out;
}

std::vector<Rational> CosetGeometry::ricci_killing_route() const {
    ensure_tables();
    const int d = dim();
    std::vector<std::optional<Rational>> r(static_cast<std::size_t>(dec_->summands()));
    auto unit = [](int t) { return SparseVec{{t, Scalar(1)}}; };
    for (int a = 0; a < d; ++a) {
        const SuperMatrix& xa = basis_[static_cast<std::size_t>(a)];
        const SuperMatrix& da = metric_dual_[static_cast<std::size_t>(a)];
        const SparseVec& dac = dual_coords_[static_cast<std::size_t>(a)];
        const SparseVec ea = unit(a);
        Scalar acc = Scalar(Rational(-1, 2)) * dec_->algebra->killing_closed(xa, da);
        Scalar mid;
        for (int j = 0; j < d; ++j) {
            mid += pair_sparse(bracket_m_sparse(ea, dual_coords_[static_cast<std::size_t>(j)]),
                               bracket_m_sparse(unit(j), dac));
        }
        acc += Scalar(Rational(1, 2)) * mid;
        Scalar tail;
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                SparseVec djdk = bracket_m_sparse(dual_coords_[static_cast<std::size_t>(j)],
                                                  dual_coords_[static_cast<std::size_t>(k)]);
                if (djdk.empty()) continue;
                Scalar first = pair_sparse(ea, djdk);
                if (first.is_zero()) continue;
                tail += first *
                        pair_sparse(bm_coords_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)], dac);
            }
        }
        acc -= Scalar(Rational(1, 4)) * tail;
        Rational val =
            (Scalar(metric_.x[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(a)])]) * acc)
                .as_rational();
        auto& slot = r[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(a)])];
        if (slot && *slot != val)
            throw RouteDisagreement("killing-route Ricci is not scalar on a block");
        slot = val;
    }
    std::vector<Rational> out;
    for (const auto& v : r) out.push_back(v.value_or(Rational(0)));
    return out;
}

Rational CosetGeometry::scalar_from_gram(const ScalarMatrix& ric) const {
    // S = sum_a (-1)^{[a]} Ric(X_a, dual_a)
    const int d = dim();
    Scalar acc;
    for (int a = 0; a < d; ++a) {
        const SuperMatrix& da = metric_dual_[static_cast<std::size_t>(a)];
        Scalar term;
        for (int t = 0; t < d; ++t) {
            Scalar coord = q(da, q_dual_[static_cast<std::size_t>(t)]);
            if (coord.is_zero()) continue;
            term += coord * ric[static_cast<std::size_t>(a)][static_cast<std::size_t>(t)];
        }
        acc += parity(a) == Parity::odd ? -term : term;
    }
    return acc.as_rational();
}

Rational CosetGeometry::scalar_closed() const {
    // S = -1/2 sum_i B(dual_i, X_i) + 1/4 sum_{ij} <[dual_i, dual_j]_m, [X_j, X_i]_m>
    ensure_tables();
    const int d = dim();
    Scalar acc;
    for (int a = 0; a < d; ++a)
        acc -= Scalar(Rational(1, 2)) *
               dec_->algebra->killing_closed(metric_dual_[static_cast<std::size_t>(a)],
                                             basis_[static_cast<std::size_t>(a)]);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            SparseVec left = bracket_m_sparse(dual_coords_[static_cast<std::size_t>(i)],
                                              dual_coords_[static_cast<std::size_t>(j)]);
            if (left.empty()) continue;
            acc += Scalar(Rational(1, 4)) *
                   pair_sparse(left, bm_coords_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        }
    }
    return acc.as_rational();
}

RicciReport ricci_diagonal(const IsotropyDecomposition& dec, const DiagonalMetric& metric,
                           const std::vector<std::string>& routes) {
    CosetGeometry geom(dec, metric);
    std::vector<std::pair<std::string, std::vector<Rational>>> results;
    bool want_def = std::find(routes.begin(), routes.end(), "definition") != routes.end();
    bool want_thm = std::find(routes.begin(), routes.end(), "thmric") != routes.end();
    bool want_coef = std::find(routes.begin(), routes.end(), "coefficients") != routes.end();
    if (!want_def && !want_thm && !want_coef)
        throw RouteDisagreement("no recognized Ricci route requested");
    std::optional<BlockData> data;
    if (want_def) results.emplace_back("definition", geom.ricci_definition());
    if (want_thm) results.emplace_back("thmric", geom.ricci_killing_route());
    if (want_coef) {
        data = collect_block_data(dec);
        results.emplace_back("coefficients", ricci_coefficients(*data, metric));
    }
    for (std::size_t k = 1; k < results.size(); ++k) {
        if (results[k].second != results[0].second)
            throw RouteDisagreement("Ricci routes disagree: " + results[0].first + " vs " + results[k].first);
    }
    RicciReport report;
    report.r = results[0].second;
    for (auto& [tag, vals] : results) {
        (void)vals;
        report.routes.push_back(tag);
    }
    // Scalar curvature: supertrace route
    Rational s_trace;
    for (int i = 0; i < dec.summands(); ++i)
        s_trace += dec.blocks[static_cast<std::size_t>(i)].d * report.r[static_cast<std::size_t>(i)] /
                   metric.x[static_cast<std::size_t>(i)];
    Rational s_closed = geom.scalar_closed();
    if (s_trace != s_closed)
        throw RouteDisagreement("scalar curvature routes disagree: " + s_trace.to_string() + " vs " +
                                s_closed.to_string());
    if (data) {
        // block-data route: S = 1/2 sum b_i d_i / x_i - 1/4 sum [ijk] x_k/(x_i x_j)
        Rational s_blocks;
        for (int i = 0; i < data->s; ++i)
            s_blocks += data->b[static_cast<std::size_t>(i)] * data->d[static_cast<std::size_t>(i)] /
                        (Rational(2) * metric.x[static_cast<std::size_t>(i)]);
        for (int i = 0; i < data->s; ++i)
            for (int j = 0; j < data->s; ++j)
                for (int k = 0; k < data->s; ++k) {
                    const Rational& v = data->ijk.at(i, j, k);
                    if (v.is_zero()) continue;
                    s_blocks -= v * metric.x[static_cast<std::size_t>(k)] /
                                (Rational(4) * metric.x[static_cast<std::size_t>(i)] *
                                 metric.x[static_cast<std::size_t>(j)]);
                }
        if (s_blocks != s_trace)
            throw RouteDisagreement("block-data scalar curvature disagrees: " + s_blocks.to_string() +
                                    " vs " + s_trace.to_string());
    }
    report.scalar = s_trace;
    return report;
}

RicciReport ricci_group(const GroupGeometry& geom) {
    RicciReport out;
    out.gram = geom.ricci_gram();
    out.scalar = geom.scalar_curvature(out.gram);
    out.routes = {"group"};
    return out;
}

// ---------------------------------------------------------------------------
// GroupGeometry

GroupGeometry::GroupGeometry(std::vector<SuperMatrix> basis, std::vector<Parity> parities,
                             ScalarMatrix gram)
    : basis_(std::move(basis)), parities_(std::move(parities)), gram_(std::move(gram)) {
    const std::size_t d = basis_.size();
    if (gram_.size() != d || parities_.size() != d)
        throw DimensionMismatch("group metric Gram must match the basis size");
    for (std::size_t i = 0; i < d; ++i) {
        if (gram_[i].size() != d) throw DimensionMismatch("group metric Gram must be square");
        for (std::size_t j = 0; j < d; ++j) {
            bool oi = parities_[i] == Parity::odd, oj = parities_[j] == Parity::odd;
            if (oi != oj && !gram_[i][j].is_zero())
                throw DegenerateForm("group metric must be even (zero across parities)");
            if (!oi && !oj && gram_[i][j] != gram_[j][i])
                throw DegenerateForm("group metric must be symmetric on the even part");
            if (oi && oj && gram_[i][j] != -gram_[j][i])
                throw DegenerateForm("group metric must be skew on the odd part");
        }
    }
    ScalarMatrix gram_t(d, ScalarVector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gram_t[i][j] = gram_[j][i];
    gram_t_inv_ = invert(gram_t);
    bracket_.assign(d, std::vector<ScalarVector>(d));
    std::vector<SuperMatrix> span = basis_;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            bracket_[a][b] = expand_in_span(span, graded_bracket(basis_[a], basis_[b]));
    nabla_cache_.assign(d, std::vector<std::optional<ScalarVector>>(d));
}

ScalarVector GroupGeometry::coords(const SuperMatrix& x) const { return expand_in_span(basis_, x); }

SuperMatrix GroupGeometry::from_coords(const ScalarVector& v) const {
    SuperMatrix out(basis_[0].block_m(), basis_[0].block_n());
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out += v[k] * basis_[k];
    return out;
}

ScalarVector GroupGeometry::dual_coords(int a) const { return gram_t_inv_[static_cast<std::size_t>(a)]; }

Scalar GroupGeometry::pair_coords(const ScalarVector& u, const ScalarVector& v) const {
    Scalar acc;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero() || gram_[i][j].is_zero()) continue;
            acc += u[i] * gram_[i][j] * v[j];
        }
    }
    return acc;
}

ScalarVector GroupGeometry::bracket_coords(const ScalarVector& u, const ScalarVector& v) const {
    ScalarVector out(u.size());
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (u[a].is_zero()) continue;
        for (std::size_t b = 0; b < v.size(); ++b) {
            if (v[b].is_zero()) continue;
            Scalar f = u[a] * v[b];
            for (std::size_t k = 0; k < out.size(); ++k) out[k] += f * bracket_[a][b][k];
        }
    }
    return out;
}

int GroupGeometry::parity_of_coords(const ScalarVector& v) const {
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) return parity_bit(static_cast<int>(k));
    return 0;
}

ScalarVector GroupGeometry::nabla(int a, int b) const {
    auto& slot = nabla_cache_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    if (slot) return *slot;
    const std::size_t d = basis_.size();
    int sign_ab = (parity_bit(a) && parity_bit(b)) ? -1 : 1;
    ScalarVector ea(d), eb(d);
    ea[static_cast<std::size_t>(a)] = Scalar(1);
    eb[static_cast<std::size_t>(b)] = Scalar(1);
    ScalarVector ab = bracket_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    ScalarVector w(d);
    for (std::size_t c = 0; c < d; ++c) {
        ScalarVector ec(d);
        ec[c] = Scalar(1);
        Scalar v = pair_coords(ab, ec);
        v -= pair_coords(ea, bracket_[static_cast<std::size_t>(b)][c]);
        Scalar last = pair_coords(eb, bracket_[static_cast<std::size_t>(a)][c]);
        v -= sign_ab < 0 ? -last : last;
        w[c] = v * Scalar(Rational(1, 2));
    }
    // solve sum_i coords_i <X_i, X_c> = w_c
    ScalarVector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        Scalar acc;
        for (std::size_t c = 0; c < d; ++c) {
            if (w[c].is_zero() || gram_t_inv_[i][c].is_zero()) continue;
            acc += gram_t_inv_[i][c] * w[c];
        }
        out[i] = acc;
    }
    // gram_t_inv rows solve the transposed system; verify orientation cheaply
    slot = out;
    return out;
}

SuperMatrix GroupGeometry::levi_civita(const SuperMatrix& x, const SuperMatrix& y) const {
    ScalarVector cx = coords(x), cy = coords(y);
    const std::size_t d = basis_.size();
    ScalarVector out(d);
    for (std::size_t a = 0; a < d; ++a) {
        if (cx[a].is_zero()) continue;
        for (std::size_t b = 0; b < d; ++b) {
            if (cy[b].is_zero()) continue;
            ScalarVector nb = nabla(static_cast<int>(a), static_cast<int>(b));
            Scalar f = cx[a] * cy[b];
            for (std::size_t k = 0; k < d; ++k) out[k] += f * nb[k];
        }
    }
    return from_coords(out);
}

SuperMatrix GroupGeometry::u_map(const SuperMatrix& x, const SuperMatrix& y) const {
    // 2 nabla_X Y = [X,Y] + U(X,Y) for left-invariant metrics
    SuperMatrix twice = Scalar(2) * levi_civita(x, y);
    return twice - graded_bracket(x, y);
}

ScalarVector GroupGeometry::riemann(int a, int b, int c) const {
    const std::size_t d = basis_.size();
    ScalarVector out(d);
    // nabla_{[a,b]} c
    const ScalarVector& ab = bracket_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    for (std::size_t k = 0; k < d; ++k) {
        if (ab[k].is_zero()) continue;
        ScalarVector nk = nabla(static_cast<int>(k), c);
        for (std::size_t t = 0; t < d; ++t) out[t] += ab[k] * nk[t];
    }
    // - nabla_a nabla_b c
    ScalarVector nbc = nabla(b, c);
    for (std::size_t k = 0; k < d; ++k) {
        if (nbc[k].is_zero()) continue;
        ScalarVector nk = nabla(a, static_cast<int>(k));
        for (std::size_t t = 0; t < d; ++t) out[t] -= nbc[k] * nk[t];
    }
    // + (-1)^{[a][b]} nabla_b nabla_a c
    int sgn = (parity_bit(a) && parity_bit(b)) ? -1 : 1;
    ScalarVector nac = nabla(a, c);
    for (std::size_t k = 0; k < d; ++k) {
        if (nac[k].is_zero()) continue;
        ScalarVector nk = nabla(b, static_cast<int>(k));
        for (std::size_t t = 0; t < d; ++t) {
            Scalar v = nac[k] * nk[t];
            out[t] += sgn < 0 ? -v : v;
        }
    }
    return out;
}

Scalar GroupGeometry::riemann_pair(int i, int j, int k, int l) const {
    ScalarVector r = riemann(i, j, k);
    ScalarVector el(basis_.size());
    el[static_cast<std::size_t>(l)] = Scalar(1);
    return pair_coords(r, el);
}

ScalarMatrix GroupGeometry::ricci_gram() const {
    const std::size_t d = basis_.size();
    ScalarMatrix ric(d, ScalarVector(d));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t c = 0; c < d; ++c) {
            Scalar acc;
            for (std::size_t j = 0; j < d; ++j) {
                ScalarVector r = riemann(static_cast<int>(a), static_cast<int>(j), static_cast<int>(c));
                Scalar term = pair_coords(r, dual_coords(static_cast<int>(j)));
                int pj = parity_bit(static_cast<int>(j));
                int pc = parity_bit(static_cast<int>(c));
                acc += (pj + pj * pc) % 2 ? -term : term;
            }
            ric[a][c] = acc;
        }
    }
    return ric;
}

Rational GroupGeometry::scalar_curvature(const ScalarMatrix& ric) const {
    const std::size_t d = basis_.size();
    Scalar acc;
    for (std::size_t i = 0; i < d; ++i) {
        ScalarVector di = dual_coords(static_cast<int>(i));
        Scalar term;
        for (std::size_t t = 0; t < d; ++t) {
            if (di[t].is_zero()) continue;
            term += ric[i][t] * di[t];
        }
        acc += parity_bit(static_cast<int>(i)) ? -term : term;
    }
    return acc.as_rational();
}

}  // namespace supereinstein
