#ifndef SUPEREINSTEIN_ALGEBRA_HPP
#define SUPEREINSTEIN_ALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "supereinstein/linalg.hpp"
#include "supereinstein/roots.hpp"
#include "supereinstein/supermatrix.hpp"

namespace supereinstein {

enum class Family { gl, sl, osp, sl11 };
enum class QFormKind { minus_str, sl_nn_split, osp_minus_str };
enum class StarKind { type1_A, type1_C };

const char* to_string(Family f);

struct BasisElement {
    std::string label;
    SuperMatrix mat;
    Parity parity = Parity::even;
    bool is_cartan = false;
    Weight root;  // meaningful when !is_cartan
};

struct RealFormBasis {
    std::vector<SuperMatrix> elements;
    std::vector<Parity> parities;
    std::vector<std::string> labels;
};

/// Concrete matrix model of gl(m|n), sl(m|n), sl(1|1) or osp(2|2n): complex
/// basis ordered Cartan / +even / -even / +odd / -odd roots, the invariant
/// form Q with its right dual basis, the Killing form and the star operation.
class AlgebraModel {
public:
    Family family = Family::sl;
    int m = 0, n = 0;           // algebra parameters; matrix shape is (m|n), osp uses (2|2n)
    QFormKind q_form = QFormKind::minus_str;
    StarKind star_kind = StarKind::type1_A;
    std::optional<RootSystem> roots;  // absent for sl11

    std::vector<BasisElement> basis;
    std::vector<SuperMatrix> q_dual;          // right Q-dual basis, aligned with basis
    std::vector<std::size_t> cartan_indices;
    std::map<Weight, std::size_t> root_index; // root -> basis index
    std::optional<SuperMatrix> star_twist;    // self-inverse diagonal twist (type C)

    // Cached exact expansion solver (built on first use, guarded for sharing).
    mutable std::map<std::pair<int, int>, std::size_t> expand_pos_;
    mutable ScalarMatrix expand_solver_;  // dim x positions: coords = solver * entries
    mutable std::shared_ptr<std::mutex> expand_lock_ = std::make_shared<std::mutex>();

    int dim() const { return static_cast<int>(basis.size()); }
    int matrix_m() const;
    int matrix_n() const;

    const SuperMatrix& root_vector(const Weight& alpha) const;
    const SuperMatrix& dual_of(std::size_t basis_index) const { return q_dual[basis_index]; }
    /// Q(E_alpha, E_{-alpha}) for either sign of alpha.
    Rational q_pairing(const Weight& alpha) const;

    /// The designated invariant form Q.
    Scalar q(const SuperMatrix& x, const SuperMatrix& y) const;
    /// Center coefficient of the eq-slQ2 split (zero unless sl(n|n)/sl(1|1)).
    Scalar center_coefficient(const SuperMatrix& x) const;

    /// Killing form by expanding ad over the basis (supertrace of ad x ad y).
    Scalar killing_ad(const SuperMatrix& x, const SuperMatrix& y) const;
    /// Closed form: 2(m-n) Str(XY) for sl, 2n Q for osp, 0 for sl(1|1).
    Scalar killing_closed(const SuperMatrix& x, const SuperMatrix& y) const;

    /// Type (1) star operation (conjugate transpose in these models).
    SuperMatrix star(const SuperMatrix& x) const;

    /// Exact expansion in the complex basis; throws if x lies outside the span.
    ScalarVector expand(const SuperMatrix& x) const;
    SuperMatrix from_coords(const ScalarVector& coords) const;

    /// Expansion over the compact real basis (same ordering as
    /// compact_real_basis); every coordinate must be rational.
    std::vector<Rational> real_form_coords(const SuperMatrix& x) const;

    RealFormBasis compact_real_basis() const;

    /// A_alpha = E_alpha - E_{-alpha}; B_alpha = i (E_alpha + E_{-alpha}).
    SuperMatrix real_A(const Weight& positive_root) const;
    SuperMatrix real_B(const Weight& positive_root) const;

    SuperMatrix zero() const;
};

using AlgebraPtr = std::shared_ptr<const AlgebraModel>;

/// Builds the requested model; family sl11 ignores m, n.
AlgebraPtr build_algebra(Family family, int m = 0, int n = 0);
AlgebraPtr build_algebra(const std::string& family_tag, int m = 0, int n = 0);

Scalar supertrace(const SuperMatrix& x);

/// Exact expansion of x over an arbitrary list of matrices (same shape);
/// throws UnsupportedAlgebra when x lies outside the span.
ScalarVector expand_in_span(const std::vector<SuperMatrix>& span, const SuperMatrix& x);

/// Evaluates a weight on a diagonal Cartan element of the model.
Rational eval_weight_on_cartan(const AlgebraModel& alg, const Weight& w, const SuperMatrix& h);

}  // namespace supereinstein

#endif
