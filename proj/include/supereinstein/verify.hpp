#ifndef SUPEREINSTEIN_VERIFY_HPP
#define SUPEREINSTEIN_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "supereinstein/rational.hpp"

namespace supereinstein {

struct VerifyFailure : ArithmeticError {
    explicit VerifyFailure(const std::string& what) : ArithmeticError(what) {}
};

struct VerifyOptions {
    int max_size = 6;  // bound on m+n for the identity rosters
    int threads = 1;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    int passed() const;
    int failed() const;
    bool all_passed() const { return failed() == 0; }
};

/// suite is one of "identities", "tables", "einstein".
SuiteResult run_suite(const std::string& suite, const VerifyOptions& options);
std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

// Individual checks (throw VerifyFailure on violation). These are the exact
// workloads behind the acceptance criteria and the verify suites.
void check_sl11_einstein(int samples);
void check_casimir_tables(int max_mn, int max_osp_n, int threads);
void check_structure_constant_routes(int max_total, int max_osp_n);
void check_ricci_route_equivalence(int max_total, const std::vector<int>& osp_ns);
void check_su41_golden();
void check_osp24_golden();
void check_classification_grid(int max_mn, int threads);
void check_ricci_flat_families();
void check_ricci_closed_forms();
void check_solution_curvature_spot();
void check_algebra_identities(int max_size);
void check_root_identities(int max_size);
void check_decomposition_identities(int max_size);
void check_curvature_identities(int max_size);
void check_ijk_basis_independence();
void check_duality_tuples();

/// Deterministic partitioned parallel loop used by the grid suites.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

}  // namespace supereinstein

#endif
