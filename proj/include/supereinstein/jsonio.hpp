#ifndef SUPEREINSTEIN_JSONIO_HPP
#define SUPEREINSTEIN_JSONIO_HPP

#include <json.hpp>
#include <string>

#include "supereinstein/curvature.hpp"
#include "supereinstein/einstein.hpp"

namespace supereinstein {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "super-einstein/1";

Json rational_json(const Rational& v);
Rational rational_from_json(const Json& j);
Json scalar_json(const Scalar& v);
Scalar scalar_from_json(const Json& j);

/// Root as signed integer coefficients over (eps_1..eps_m, delta_1..delta_n)
/// plus a parity flag.
Json root_json(const RootSystem& rs, const Weight& root);

Json algebra_info_json(const AlgebraModel& alg);
std::string algebra_info_text(const AlgebraModel& alg);

/// Plain-data image of a decomposition report, for serialization round-trips.
struct FlagReportData {
    std::string family;
    int m = 0, n = 0;
    std::vector<int> circled;
    std::string case_tag;
    struct Block {
        std::string label;
        Rational d, b, c;
        int dim_even = 0, dim_odd = 0;
        std::vector<long long> highest_weight;
        bool operator==(const Block&) const = default;
    };
    std::vector<Block> blocks;
    std::vector<std::pair<std::string, Rational>> ijk;
    bool operator==(const FlagReportData&) const = default;
};

FlagReportData flag_report_data(const IsotropyDecomposition& dec, const BlockData& data);
Json flag_report_json(const IsotropyDecomposition& dec, const BlockData& data);
FlagReportData flag_report_from_json(const Json& j);
std::string flag_report_text(const IsotropyDecomposition& dec, const BlockData& data);

/// Reconstructs the basis matrices of an algebra-info report; used to verify
/// that the serialized model parses back into the same matrices.
std::vector<SuperMatrix> algebra_basis_from_json(const Json& j);

Json ricci_report_json(const RicciReport& report, const DiagonalMetric& metric,
                       std::optional<long long> timing_ms = std::nullopt);
RicciReport ricci_report_from_json(const Json& j);
std::string ricci_report_text(const RicciReport& report, const DiagonalMetric& metric);

Json solution_json(const EinsteinSolution& s);
EinsteinSolution solution_from_json(const Json& j);
Json classification_json(const ClassificationReport& report);
ClassificationReport classification_from_json(const Json& j);
std::string classification_text(const ClassificationReport& report);

bool operator==(const EinsteinSolution& a, const EinsteinSolution& b);
bool operator==(const ClassificationReport& a, const ClassificationReport& b);
bool operator==(const RicciReport& a, const RicciReport& b);

}  // namespace supereinstein

#endif
