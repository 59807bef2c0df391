#ifndef SUPEREINSTEIN_EINSTEIN_HPP
#define SUPEREINSTEIN_EINSTEIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "supereinstein/flag.hpp"

namespace supereinstein {

struct OutOfRange : ArithmeticError {
    explicit OutOfRange(const std::string& what) : ArithmeticError(what) {}
};
struct ReconciliationFailure : ArithmeticError {
    explicit ReconciliationFailure(const std::string& what) : ArithmeticError(what) {}
};
struct UnsupportedBlockPattern : ArithmeticError {
    explicit UnsupportedBlockPattern(const std::string& what) : ArithmeticError(what) {}
};
struct NoSelectedPair : ArithmeticError {
    explicit NoSelectedPair(const std::string& what) : ArithmeticError(what) {}
};

/// Ricci coefficients of a diagonal metric from block data: the d_i != 0 branch
/// and the selected-pair branch for d_i = 0.
std::vector<Rational> ricci_coefficients(const BlockData& data, const DiagonalMetric& metric);

enum class Positivity { pos_with_lambda_pos, pos_with_lambda_neg, never_pos };
const char* to_string(Positivity p);

enum class FamilyShape { none, sum, unconstrained };

struct EinsteinSolution {
    enum class Kind { ray, family };
    Kind kind = Kind::ray;
    std::vector<Rational> x;  // ray representative
    Rational c;               // Einstein constant of the representative
    FamilyShape family_shape = FamilyShape::none;
    int target = -1, u = -1, v = -1;  // family constraint x[target] = x[u] + x[v]
    Positivity positivity = Positivity::never_pos;
    bool ricci_flat = false;
    bool residual_certified = false;
    std::string label;

    /// Scale-normalized ray key: integer coordinates, gcd 1, first nonzero
    /// positive, with the Einstein constant rescaled accordingly.
    std::pair<std::vector<Rational>, Rational> normalized() const;
    std::string key() const;
    std::string render() const;  // bracket notation
};

struct EinsteinSolutionSet {
    std::vector<EinsteinSolution> solutions;
};

/// Exact solve of r_i = c x_i: closed-form candidates filtered by residual
/// substitution (the filter is authoritative).
EinsteinSolutionSet solve_diagonal(const BlockData& data);

struct ClassificationReport {
    std::string family;  // "su" or "osp"
    int m = 0, n = 0, p = 0;
    std::optional<int> q;
    CaseTag case_tag = CaseTag::A_one;
    std::vector<EinsteinSolution> solutions;
    std::string corollary_branch;
};

/// Closed-form classification reconciled against solve_diagonal on the actual
/// decomposition; q absent selects the one-summand case.
ClassificationReport classify_su(int m, int n, int p, std::optional<int> q = std::nullopt);
ClassificationReport classify_osp(int n, int p);

/// Applies positivity tags and checks the positive-solution branch table.
void positivity_filter(ClassificationReport& report);

/// Verifies that the solution set of (m,n,p,q) maps onto that of
/// (n,m,m+n-q,m+n-p) under x1 -> -x3, x2 -> -x2, x3 -> -x1.
bool duality_check(int m, int n, int p, int q);

}  // namespace supereinstein

#endif
