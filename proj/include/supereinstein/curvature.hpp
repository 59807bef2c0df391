#ifndef SUPEREINSTEIN_CURVATURE_HPP
#define SUPEREINSTEIN_CURVATURE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "supereinstein/flag.hpp"

namespace supereinstein {

struct RouteDisagreement : ArithmeticError {
    explicit RouteDisagreement(const std::string& what) : ArithmeticError(what) {}
};

/// Right dual basis of an ordered homogeneous list: pair(v_i, dual_j) = delta_ij.
std::vector<SuperMatrix> dual_basis(
    const std::vector<SuperMatrix>& basis,
    const std::function<Scalar(const SuperMatrix&, const SuperMatrix&)>& pairing);

struct RicciReport {
    std::vector<Rational> r;          // per-block coefficients (diagonal case)
    ScalarMatrix gram;                // full Ricci Gram (group route)
    Rational scalar;                  // S
    std::vector<std::string> routes;  // routes that were computed and agreed
};

/// Curvature engine for a diagonal invariant metric on a flag decomposition.
/// Basis vectors are the concatenated real block bases; duals are exact.
class CosetGeometry {
public:
    CosetGeometry(const IsotropyDecomposition& dec, DiagonalMetric metric);

    int dim() const { return static_cast<int>(basis_.size()); }
    const IsotropyDecomposition& decomposition() const { return *dec_; }
    const DiagonalMetric& metric() const { return metric_; }
    const SuperMatrix& basis(int a) const { return basis_[static_cast<std::size_t>(a)]; }
    Parity parity(int a) const { return parities_[static_cast<std::size_t>(a)]; }
    int block_of(int a) const { return block_of_[static_cast<std::size_t>(a)]; }
    const SuperMatrix& metric_dual(int a) const { return metric_dual_[static_cast<std::size_t>(a)]; }
    bool naturally_reductive() const { return naturally_reductive_; }

    /// Metric pairing of m-elements: sum_i x_i Q|_{m_i}.
    Scalar pair(const SuperMatrix& u, const SuperMatrix& v) const;
    SuperMatrix project_m(const SuperMatrix& x) const { return dec_->project_m(x); }
    SuperMatrix bracket_m(const SuperMatrix& x, const SuperMatrix& y) const;

    /// U map of the Levi-Civita connection, eq-defU.
    SuperMatrix u_map(const SuperMatrix& x, const SuperMatrix& y) const;
    /// 2 (nabla_{X^dag} Y^dag)_K = -[X,Y]_m + U(X,Y).
    SuperMatrix nabla_at_base(const SuperMatrix& x, const SuperMatrix& y) const;

    /// <R(X_i,X_j)X_k, X_l> on basis indices; under a naturally reductive metric
    /// the short formula is recomputed and compared.
    Rational riemann_component(int i, int j, int k, int l) const;

    /// Ricci Gram over the basis by contracting the Riemann components.
    ScalarMatrix ricci_definition_gram() const;
    /// Ricci coefficients r_i via the definition route (checks block shape).
    std::vector<Rational> ricci_definition() const;
    /// Ricci coefficients via the killing-form route.
    std::vector<Rational> ricci_killing_route() const;
    /// Scalar curvature by the supertrace of a given Ricci Gram.
    Rational scalar_from_gram(const ScalarMatrix& ric) const;
    /// Scalar curvature via the double-bracket closed form.
    Rational scalar_closed() const;

    Scalar q(const SuperMatrix& u, const SuperMatrix& v) const { return dec_->algebra->q(u, v); }

    /// Coordinates over the flat basis (valid for m-elements).
    ScalarVector coords_of(const SuperMatrix& x) const;

private:
    using SparseVec = std::vector<std::pair<int, Scalar>>;

    const IsotropyDecomposition* dec_;
    DiagonalMetric metric_;
    std::vector<SuperMatrix> basis_;
    std::vector<Parity> parities_;
    std::vector<int> block_of_;
    std::vector<SuperMatrix> q_dual_;       // Q-duals of the real basis
    std::vector<SuperMatrix> metric_dual_;  // metric duals
    std::vector<SparseVec> dual_coords_;    // coordinates of metric duals over the basis
    std::vector<SparseVec> gram_rows_;      // metric Gram, sparse rows
    bool naturally_reductive_ = false;

    // Precomputed bracket data over basis pairs: m-part coordinates and k-part
    // matrices; U-map coordinates; memoized m-coordinates of [X_a, kpart(b,c)].
    mutable std::vector<std::vector<SparseVec>> bm_coords_;
    mutable std::vector<std::vector<SuperMatrix>> k_part_;
    mutable std::vector<std::vector<SparseVec>> u_coords_;
    mutable std::map<std::tuple<int, int, int>, SparseVec> k_bracket_memo_;
    mutable bool tables_ready_ = false;

    void ensure_tables() const;
    Scalar pair_sparse(const SparseVec& u, const SparseVec& v) const;
    SparseVec bracket_m_sparse(const SparseVec& u, const SparseVec& v) const;
    const SparseVec& k_bracket_coords(int a, int b, int c) const;
    Scalar component_sparse(int i, int j, int k, int l) const;

    Rational riemann_full(int i, int j, int k, int l) const;
    Rational riemann_reductive(int i, int j, int k, int l) const;
};

/// Diagonal-metric Ricci computation with route equivalence enforcement.
/// Routes: "definition", "thmric", "coefficients" (any subset, default all).
RicciReport ricci_diagonal(const IsotropyDecomposition& dec, const DiagonalMetric& metric,
                           const std::vector<std::string>& routes = {"definition", "thmric",
                                                                     "coefficients"});

class GroupGeometry;

/// Left-invariant (group) route: full Ricci Gram over the basis and the
/// scalar curvature via the graded supertrace.
RicciReport ricci_group(const GroupGeometry& geom);

/// Left-invariant metric on a real Lie superalgebra basis (group case).
class GroupGeometry {
public:
    GroupGeometry(std::vector<SuperMatrix> basis, std::vector<Parity> parities, ScalarMatrix gram);

    int dim() const { return static_cast<int>(basis_.size()); }
    const SuperMatrix& basis(int a) const { return basis_[static_cast<std::size_t>(a)]; }
    Parity parity(int a) const { return parities_[static_cast<std::size_t>(a)]; }
    const ScalarMatrix& gram() const { return gram_; }

    ScalarVector coords(const SuperMatrix& x) const;
    SuperMatrix from_coords(const ScalarVector& v) const;
    ScalarVector dual_coords(int a) const;  // coordinates of the right dual of X_a

    Scalar pair_coords(const ScalarVector& u, const ScalarVector& v) const;
    ScalarVector bracket_coords(const ScalarVector& u, const ScalarVector& v) const;

    /// Koszul connection: nabla_{X_a} X_b in coordinates.
    ScalarVector nabla(int a, int b) const;
    SuperMatrix levi_civita(const SuperMatrix& x, const SuperMatrix& y) const;
    /// U map with m = g (for the group treated as a coset of the trivial group).
    SuperMatrix u_map(const SuperMatrix& x, const SuperMatrix& y) const;

    /// R(X_a, X_b) X_c in coordinates.
    ScalarVector riemann(int a, int b, int c) const;
    Scalar riemann_pair(int i, int j, int k, int l) const;  // <R(Xi,Xj)Xk, Xl>

    /// Full Ricci Gram over the basis and the scalar curvature.
    ScalarMatrix ricci_gram() const;
    Rational scalar_curvature(const ScalarMatrix& ric) const;

private:
    std::vector<SuperMatrix> basis_;
    std::vector<Parity> parities_;
    ScalarMatrix gram_;
    ScalarMatrix gram_t_inv_;  // inverse of the transposed Gram
    std::vector<std::vector<ScalarVector>> bracket_;
    mutable std::vector<std::vector<std::optional<ScalarVector>>> nabla_cache_;

    int parity_bit(int a) const { return parities_[static_cast<std::size_t>(a)] == Parity::odd ? 1 : 0; }
    int parity_of_coords(const ScalarVector& v) const;
};

}  // namespace supereinstein

#endif
