#ifndef SUPEREINSTEIN_FLAG_HPP
#define SUPEREINSTEIN_FLAG_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supereinstein/algebra.hpp"

namespace supereinstein {

struct UnsupportedDiagram : ArithmeticError {
    explicit UnsupportedDiagram(const std::string& what) : ArithmeticError(what) {}
};
struct CasimirNotScalar : ArithmeticError {
    explicit CasimirNotScalar(const std::string& what) : ArithmeticError(what) {}
};
struct SumRuleViolation : ArithmeticError {
    explicit SumRuleViolation(const std::string& what) : ArithmeticError(what) {}
};

enum class FlagFamily { su, osp };
enum class CaseTag { A_one, A_case1, A_case2, A_case3, C };
const char* to_string(CaseTag t);

struct CircledDiagram {
    FlagFamily family = FlagFamily::su;
    int m = 0, n = 0;
    std::vector<int> circled;  // 1-based node indices, strictly increasing
};

/// One irreducible isotropy summand: real basis from A/B vectors of its root
/// fiber, with superdimension d, Killing ratio b, Casimir eigenvalue c.
struct MBlock {
    std::string label;                       // "(0,1)" / "(1,1)" / "(1,0)" or "1" / "2"
    std::vector<int> fiber;                  // circled-node coefficients of the positive fiber
    std::vector<Weight> positive_roots;
    std::vector<std::size_t> complex_indices;  // algebra indices of fiber and -fiber vectors
    std::vector<SuperMatrix> real_basis;
    std::vector<Parity> real_parities;
    std::vector<std::string> real_labels;
    int dim_even = 0, dim_odd = 0;
    Rational d, b, c;
    Weight highest_weight;
};

struct IsotropyDecomposition {
    AlgebraPtr algebra;
    CircledDiagram diagram;
    CaseTag case_tag = CaseTag::A_one;
    std::vector<int> k_simple;                // 0-based uncircled simple-root indices
    std::vector<std::size_t> k_complex;       // algebra basis indices spanning k
    RealFormBasis k_real;
    std::vector<MBlock> blocks;

    int summands() const { return static_cast<int>(blocks.size()); }
    const RootSystem& roots() const { return *algebra->roots; }

    SuperMatrix project_block(int i, const SuperMatrix& x) const;
    SuperMatrix project_k(const SuperMatrix& x) const;
    SuperMatrix project_m(const SuperMatrix& x) const;
    /// Block index of a root of Delta_M (either sign), -1 for Delta_K.
    int block_of_root(const Weight& root) const;
};

IsotropyDecomposition decompose(const CircledDiagram& diagram);

/// Invariant metric sum_i x_i Q|_{m_i}; every x_i nonzero.
struct DiagonalMetric {
    std::vector<Rational> x;
};

/// Per-block (b, c, d); the Casimir eigenvalue is computed by the operator
/// route and must agree with the closed route on the highest weight.
struct BlockInvariants {
    std::vector<Rational> b, c, d;
};
BlockInvariants block_invariants(const IsotropyDecomposition& dec);

/// Totally symmetric structure constants [ijk] (0-based indices).
class StructureConstants {
public:
    explicit StructureConstants(int s) : s_(s), table_(static_cast<std::size_t>(s * s * s)) {}
    Rational& at(int i, int j, int k) { return table_[idx(i, j, k)]; }
    const Rational& at(int i, int j, int k) const { return table_[idx(i, j, k)]; }
    int summands() const { return s_; }

private:
    int s_;
    std::vector<Rational> table_;
    std::size_t idx(int i, int j, int k) const {
        return static_cast<std::size_t>((i * s_ + j) * s_ + k);
    }
};

/// Supertrace route of the structure constants; enforces full symmetry and the
/// sum rule sum_{jk}[ijk] = d_i (b_i - 2 c_i). When cross_check is set, the
/// triple-sum definition is recomputed independently and compared.
StructureConstants structure_constants(const IsotropyDecomposition& dec, bool cross_check = false);

/// The triple-sum definition, exposed as an independent oracle.
Rational structure_constant_triple_sum(const IsotropyDecomposition& dec, int i, int j, int k);

/// The unique (j,k), j <= k, carrying all bracket interaction of block i;
/// nullopt when no such pair exists. 0-based indices.
std::optional<std::pair<int, int>> selected_pairs(const IsotropyDecomposition& dec, int i);

/// True when [m_i, m_j] projected to m_k is nonzero.
bool blocks_interact(const IsotropyDecomposition& dec, int i, int j, int k);
/// True when [m_i, m_j] has a nonzero k-component.
bool blocks_hit_k(const IsotropyDecomposition& dec, int i, int j);

/// Everything the Einstein solver needs about a decomposition.
struct BlockData {
    CaseTag case_tag = CaseTag::A_one;
    int s = 0;
    std::vector<Rational> b, c, d;
    StructureConstants ijk{0};
    std::vector<std::optional<std::pair<int, int>>> selected;
};
BlockData collect_block_data(const IsotropyDecomposition& dec, bool cross_check_ijk = false);

}  // namespace supereinstein

#endif
