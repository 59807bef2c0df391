#include "supereinstein/flag.hpp"

#include <algorithm>
#include <sstream>

namespace supereinstein {

const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::A_one: return "A-one";
        case CaseTag::A_case1: return "A-case1";
        case CaseTag::A_case2: return "A-case2";
        case CaseTag::A_case3: return "A-case3";
        default: return "C";
    }
}

namespace {

std::string fiber_label(const std::vector<int>& fiber) {
    std::ostringstream os;
    if (fiber.size() == 1) {
        os << fiber[0];
    } else {
        os << "(";
        for (std::size_t i = 0; i < fiber.size(); ++i) os << (i ? "," : "") << fiber[i];
        os << ")";
    }
    return os.str();
}

void validate(const CircledDiagram& d) {
    if (!std::is_sorted(d.circled.begin(), d.circled.end()) ||
        std::adjacent_find(d.circled.begin(), d.circled.end()) != d.circled.end())
        throw UnsupportedDiagram("circled nodes must be strictly increasing");
    if (d.family == FlagFamily::su) {
        int rank = d.m + d.n - 1;
        if (d.circled.empty() || d.circled.size() > 2)
            throw UnsupportedDiagram("su diagrams support one or two circled nodes");
        for (int p : d.circled)
            if (p < 1 || p > rank) throw UnsupportedDiagram("circled node out of range");
    } else {
        if (d.circled.size() != 1) throw UnsupportedDiagram("osp diagrams support exactly one circled node");
        int p = d.circled[0];
        if (p < 2 || p > d.n) throw UnsupportedDiagram("osp circled node must satisfy 2 <= p <= n");
    }
}

}  // namespace

SuperMatrix IsotropyDecomposition::project_block(int i, const SuperMatrix& x) const {
    SuperMatrix out = algebra->zero();
    for (std::size_t idx : blocks[static_cast<std::size_t>(i)].complex_indices) {
        Scalar coeff = algebra->q(x, algebra->q_dual[idx]);
        if (!coeff.is_zero()) out += coeff * algebra->basis[idx].mat;
    }
    return out;
}

SuperMatrix IsotropyDecomposition::project_k(const SuperMatrix& x) const {
    SuperMatrix out = algebra->zero();
    for (std::size_t idx : k_complex) {
        Scalar coeff = algebra->q(x, algebra->q_dual[idx]);
        if (!coeff.is_zero()) out += coeff * algebra->basis[idx].mat;
    }
    return out;
}

SuperMatrix IsotropyDecomposition::project_m(const SuperMatrix& x) const {
    SuperMatrix out = algebra->zero();
    for (int i = 0; i < summands(); ++i) out += project_block(i, x);
    return out;
}

int IsotropyDecomposition::block_of_root(const Weight& root) const {
    for (int i = 0; i < summands(); ++i) {
        for (const auto& r : blocks[static_cast<std::size_t>(i)].positive_roots)
            if (r == root || -r == root) return i;
    }
    return -1;
}

namespace {

// Casimir operator of Q|_k applied to x: -sum_l (-1)^{[z_l]} [z_l, [dual z_l, x]].
SuperMatrix casimir_apply(const IsotropyDecomposition& dec, const SuperMatrix& x) {
    const auto& alg = *dec.algebra;
    SuperMatrix out = alg.zero();
    for (std::size_t idx : dec.k_complex) {
        SuperMatrix inner = graded_bracket(alg.q_dual[idx], x);
        if (inner.is_zero()) continue;
        SuperMatrix term = graded_bracket(alg.basis[idx].mat, inner);
        if (term.is_zero()) continue;
        out += alg.basis[idx].parity == Parity::odd ? term : -term;
    }
    return out;
}

Rational casimir_eigenvalue(const IsotropyDecomposition& dec, const MBlock& block) {
    std::optional<Rational> eig;
    for (std::size_t idx : block.complex_indices) {
        const SuperMatrix& v = dec.algebra->basis[idx].mat;
        SuperMatrix cv = casimir_apply(dec, v);
        // cv must be a scalar multiple of v
        Scalar lead;
        if (!cv.is_zero()) {
            const auto& probe = v.entries().front();
            lead = cv.entry(probe.row, probe.col) / probe.value;
        }
        if (cv != lead * v)
            throw CasimirNotScalar("Casimir is not scalar on block " + block.label);
        Rational value = lead.as_rational();
        if (eig && *eig != value)
            throw CasimirNotScalar("Casimir eigenvalue varies across block " + block.label);
        eig = value;
    }
    return eig.value_or(Rational(0));
}

Weight find_highest_weight(const IsotropyDecomposition& dec, const MBlock& block) {
    const auto& alg = *dec.algebra;
    const auto& rs = dec.roots();
    for (const auto& beta : block.positive_roots) {
        bool highest = true;
        for (int k : dec.k_simple) {
            const Weight& alpha = rs.simple[static_cast<std::size_t>(k)];
            if (!graded_bracket(alg.root_vector(alpha), alg.root_vector(beta)).is_zero()) {
                highest = false;
                break;
            }
        }
        if (highest) return beta;
    }
    throw UnsupportedDiagram("no highest-weight vector in block " + block.label);
}

Rational killing_ratio(const IsotropyDecomposition& dec, const MBlock& block) {
    // B = -b Q on the block, verified on every basis pair of the complex fiber.
    const auto& alg = *dec.algebra;
    std::optional<Rational> ratio;
    for (std::size_t a : block.complex_indices) {
        for (std::size_t bidx : block.complex_indices) {
            Scalar qv = alg.q(alg.basis[a].mat, alg.basis[bidx].mat);
            Scalar bv = alg.killing_closed(alg.basis[a].mat, alg.basis[bidx].mat);
            if (qv.is_zero()) {
                if (!bv.is_zero())
                    throw UnsupportedDiagram("Killing form not proportional to Q on block " + block.label);
                continue;
            }
            Rational r = (-(bv / qv)).as_rational();
            if (ratio && *ratio != r)
                throw UnsupportedDiagram("Killing/Q ratio varies on block " + block.label);
            ratio = r;
        }
    }
    return ratio.value_or(Rational(0));
}

}  // namespace

IsotropyDecomposition decompose(const CircledDiagram& diagram) {
    validate(diagram);
    IsotropyDecomposition dec;
    dec.diagram = diagram;
    dec.algebra = diagram.family == FlagFamily::su ? build_algebra(Family::sl, diagram.m, diagram.n)
                                                   : build_algebra(Family::osp, 2, diagram.n);
    const auto& alg = *dec.algebra;
    const RootSystem& rs = *alg.roots;

    for (int k = 0; k < rs.rank(); ++k) {
        if (std::find(diagram.circled.begin(), diagram.circled.end(), k + 1) == diagram.circled.end())
            dec.k_simple.push_back(k);
    }

    // Case tag and the ordered list of positive fibers.
    std::vector<std::vector<int>> fiber_order;
    if (diagram.family == FlagFamily::su) {
        if (diagram.circled.size() == 1) {
            dec.case_tag = CaseTag::A_one;
            fiber_order = {{1}};
        } else {
            int p = diagram.circled[0], q = diagram.circled[1];
            dec.case_tag = q <= diagram.m ? CaseTag::A_case1
                                          : (p < diagram.m ? CaseTag::A_case2 : CaseTag::A_case3);
            fiber_order = {{0, 1}, {1, 1}, {1, 0}};  // m1, m2, m3
        }
    } else {
        dec.case_tag = CaseTag::C;
        fiber_order = {{1}, {2}};
    }

    // Partition positive roots by their coefficients at the circled nodes.
    auto fiber_of = [&](const Weight& root) {
        const auto& coords = rs.simple_coords.at(root);
        std::vector<int> key;
        key.reserve(diagram.circled.size());
        for (int p : diagram.circled) {
            const Rational& c = coords[static_cast<std::size_t>(p - 1)];
            if (!c.is_integer()) throw UnsupportedDiagram("non-integer simple-root coefficient");
            key.push_back(static_cast<int>(c.num().to_int64()));
        }
        return key;
    };
    std::map<std::vector<int>, std::vector<Weight>> fibers;
    auto classify = [&](const std::vector<Weight>& roots) {
        for (const auto& r : roots) fibers[fiber_of(r)].push_back(r);
    };
    classify(rs.positive_even);
    classify(rs.positive_odd);

    // k: full Cartan plus the zero-fiber root vectors.
    for (std::size_t idx : alg.cartan_indices) dec.k_complex.push_back(idx);
    std::vector<int> zero_key(diagram.circled.size(), 0);
    for (const auto& [key, roots] : fibers) {
        if (key != zero_key) continue;
        for (const auto& r : roots) {
            dec.k_complex.push_back(alg.root_index.at(r));
            dec.k_complex.push_back(alg.root_index.at(-r));
        }
    }
    for (std::size_t idx : alg.cartan_indices) {
        dec.k_real.elements.push_back(Scalar::i() * alg.basis[idx].mat);
        dec.k_real.parities.push_back(Parity::even);
        dec.k_real.labels.push_back("i*" + alg.basis[idx].label);
    }
    auto push_real_pair = [&](RealFormBasis& out, const Weight& r, bool odd) {
        SuperMatrix a = alg.real_A(r), b = alg.real_B(r);
        if (odd) {
            out.elements.push_back(Scalar::sqrt_i() * a);
            out.parities.push_back(Parity::odd);
            out.labels.push_back("si*A(" + r.to_string() + ")");
            out.elements.push_back(Scalar::sqrt_i() * b);
            out.parities.push_back(Parity::odd);
            out.labels.push_back("si*B(" + r.to_string() + ")");
        } else {
            out.elements.push_back(a);
            out.parities.push_back(Parity::even);
            out.labels.push_back("A(" + r.to_string() + ")");
            out.elements.push_back(b);
            out.parities.push_back(Parity::even);
            out.labels.push_back("B(" + r.to_string() + ")");
        }
    };
    if (auto it = fibers.find(zero_key); it != fibers.end()) {
        for (const auto& r : it->second) push_real_pair(dec.k_real, r, rs.is_odd_root(r));
    }

    // Blocks in the designated order.
    for (const auto& key : fiber_order) {
        auto it = fibers.find(key);
        if (it == fibers.end() || it->second.empty())
            throw UnsupportedDiagram("empty isotropy fiber " + fiber_label(key));
        MBlock block;
        block.label = fiber_label(key);
        block.fiber = key;
        block.positive_roots = it->second;
        for (const auto& r : block.positive_roots) {
            block.complex_indices.push_back(alg.root_index.at(r));
            block.complex_indices.push_back(alg.root_index.at(-r));
            bool odd = rs.is_odd_root(r);
            RealFormBasis tmp;
            push_real_pair(tmp, r, odd);
            for (std::size_t k = 0; k < tmp.elements.size(); ++k) {
                block.real_basis.push_back(tmp.elements[k]);
                block.real_parities.push_back(tmp.parities[k]);
                block.real_labels.push_back(tmp.labels[k]);
            }
            (odd ? block.dim_odd : block.dim_even) += 2;
        }
        block.d = Rational(block.dim_even - block.dim_odd);
        dec.blocks.push_back(std::move(block));
    }

    // Sanity: every positive root is accounted for.
    std::size_t covered = 0;
    for (const auto& [key, roots] : fibers) {
        bool known = key == zero_key ||
                     std::find(fiber_order.begin(), fiber_order.end(), key) != fiber_order.end();
        if (!known)
            throw UnsupportedDiagram("unexpected isotropy fiber " + fiber_label(key));
        covered += roots.size();
    }
    if (covered != rs.positive_even.size() + rs.positive_odd.size())
        throw UnsupportedDiagram("root partition failure");

    // Block invariants.
    for (auto& block : dec.blocks) {
        block.highest_weight = find_highest_weight(dec, block);
        block.b = killing_ratio(dec, block);
        block.c = casimir_eigenvalue(dec, block);
        Rational closed = casimir_closed(rs, dec.k_simple, block.highest_weight);
        if (closed != block.c)
            throw CasimirNotScalar("operator and closed Casimir routes disagree on block " + block.label +
                                   ": " + block.c.to_string() + " vs " + closed.to_string());
    }
    return dec;
}

BlockInvariants block_invariants(const IsotropyDecomposition& dec) {
    BlockInvariants out;
    for (const auto& block : dec.blocks) {
        out.b.push_back(block.b);
        out.c.push_back(block.c);
        out.d.push_back(block.d);
    }
    return out;
}

namespace {

// Supertrace-route contribution Str_{m_j}(ad_{m_j}(e) ad_{m_k}(dual e)).
Rational sumstr_term(const IsotropyDecomposition& dec, std::size_t e_idx, int j, int k) {
    const auto& alg = *dec.algebra;
    const SuperMatrix& e = alg.basis[e_idx].mat;
    const SuperMatrix& e_dual = alg.q_dual[e_idx];
    Scalar acc;
    for (std::size_t v_idx : dec.blocks[static_cast<std::size_t>(j)].complex_indices) {
        const SuperMatrix& v = alg.basis[v_idx].mat;
        SuperMatrix w = graded_bracket(e_dual, v);
        if (w.is_zero()) continue;
        SuperMatrix wk = dec.project_block(k, w);
        if (wk.is_zero()) continue;
        SuperMatrix u = graded_bracket(e, wk);
        if (u.is_zero()) continue;
        Scalar diag = alg.q(u, alg.q_dual[v_idx]);
        acc += alg.basis[v_idx].parity == Parity::odd ? -diag : diag;
    }
    return acc.as_rational();
}

}  // namespace

Rational structure_constant_triple_sum(const IsotropyDecomposition& dec, int i, int j, int k) {
    const auto& alg = *dec.algebra;
    Scalar acc;
    for (std::size_t a : dec.blocks[static_cast<std::size_t>(i)].complex_indices) {
        for (std::size_t b : dec.blocks[static_cast<std::size_t>(j)].complex_indices) {
            SuperMatrix br = graded_bracket(alg.basis[a].mat, alg.basis[b].mat);
            if (br.is_zero()) continue;
            SuperMatrix br_k = dec.project_block(k, br);
            if (br_k.is_zero()) continue;
            SuperMatrix br_dual = graded_bracket(alg.q_dual[b], alg.q_dual[a]);
            if (br_dual.is_zero()) continue;
            SuperMatrix br_dual_k = dec.project_block(k, br_dual);
            if (br_dual_k.is_zero()) continue;
            for (std::size_t g : dec.blocks[static_cast<std::size_t>(k)].complex_indices) {
                Scalar first = alg.q(alg.basis[g].mat, br_k);
                if (first.is_zero()) continue;
                acc += first * alg.q(br_dual_k, alg.q_dual[g]);
            }
        }
    }
    return (-acc).as_rational();
}

StructureConstants structure_constants(const IsotropyDecomposition& dec, bool cross_check) {
    const auto& alg = *dec.algebra;
    const int s = dec.summands();
    StructureConstants out(s);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            for (int k = 0; k < s; ++k) {
                Scalar acc;
                for (std::size_t e_idx : dec.blocks[static_cast<std::size_t>(i)].complex_indices) {
                    Rational term = sumstr_term(dec, e_idx, j, k);
                    if (term.is_zero()) continue;
                    acc += alg.basis[e_idx].parity == Parity::odd ? Scalar(term) : Scalar(-term);
                }
                out.at(i, j, k) = acc.as_rational();
            }
        }
    }
    // Full symmetry in (i, j, k).
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            for (int k = 0; k < s; ++k) {
                int idx[3] = {i, j, k};
                for (const auto& p : perms) {
                    if (out.at(idx[p[0]], idx[p[1]], idx[p[2]]) != out.at(i, j, k))
                        throw SumRuleViolation("structure constants are not symmetric");
                }
            }
    // Sum rule.
    for (int i = 0; i < s; ++i) {
        Rational total;
        for (int j = 0; j < s; ++j)
            for (int k = 0; k < s; ++k) total += out.at(i, j, k);
        const auto& block = dec.blocks[static_cast<std::size_t>(i)];
        Rational expected = block.d * (block.b - Rational(2) * block.c);
        if (total != expected)
            throw SumRuleViolation("sum rule violated on block " + block.label + ": " + total.to_string() +
                                   " vs " + expected.to_string());
    }
    if (cross_check) {
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                for (int k = 0; k < s; ++k) {
                    Rational def = structure_constant_triple_sum(dec, i, j, k);
                    if (def != out.at(i, j, k))
                        throw SumRuleViolation("triple-sum route disagrees with supertrace route");
                }
    }
    return out;
}

bool blocks_interact(const IsotropyDecomposition& dec, int i, int j, int k) {
    const auto& alg = *dec.algebra;
    for (std::size_t a : dec.blocks[static_cast<std::size_t>(i)].complex_indices) {
        for (std::size_t b : dec.blocks[static_cast<std::size_t>(j)].complex_indices) {
            SuperMatrix br = graded_bracket(alg.basis[a].mat, alg.basis[b].mat);
            if (br.is_zero()) continue;
            if (!dec.project_block(k, br).is_zero()) return true;
        }
    }
    return false;
}

bool blocks_hit_k(const IsotropyDecomposition& dec, int i, int j) {
    const auto& alg = *dec.algebra;
    for (std::size_t a : dec.blocks[static_cast<std::size_t>(i)].complex_indices) {
        for (std::size_t b : dec.blocks[static_cast<std::size_t>(j)].complex_indices) {
            SuperMatrix br = graded_bracket(alg.basis[a].mat, alg.basis[b].mat);
            if (br.is_zero()) continue;
            if (!dec.project_k(br).is_zero()) return true;
        }
    }
    return false;
}

std::optional<std::pair<int, int>> selected_pairs(const IsotropyDecomposition& dec, int i) {
    const int s = dec.summands();
    std::vector<std::pair<int, int>> nonzero;
    for (int u = 0; u < s; ++u)
        for (int v = u; v < s; ++v)
            if (blocks_interact(dec, i, u, v)) nonzero.emplace_back(u, v);
    if (nonzero.empty()) return std::make_pair(0, 0);
    if (nonzero.size() == 1) return nonzero.front();
    return std::nullopt;
}

BlockData collect_block_data(const IsotropyDecomposition& dec, bool cross_check_ijk) {
    BlockData out;
    out.case_tag = dec.case_tag;
    out.s = dec.summands();
    BlockInvariants inv = block_invariants(dec);
    out.b = inv.b;
    out.c = inv.c;
    out.d = inv.d;
    out.ijk = structure_constants(dec, cross_check_ijk);
    for (int i = 0; i < out.s; ++i) out.selected.push_back(selected_pairs(dec, i));
    return out;
}

}  // namespace supereinstein
