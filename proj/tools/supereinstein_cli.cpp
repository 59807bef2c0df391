#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "supereinstein/jsonio.hpp"
#include "supereinstein/verify.hpp"

using namespace supereinstein;

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

struct Output {
    bool json = false;
    bool quiet = false;
    void emit(const Json& j, const std::string& text) const {
        if (quiet) return;
        if (json) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << text;
        }
    }
};

int run_cli(int argc, char** argv) {
    CLI::App app{"exact curvature and Einstein-metric classification on flag supermanifolds"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --json / --quiet after the subcommand
    bool json = false, quiet = false;
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_flag("--quiet", quiet, "suppress report output");

    // algebra
    auto* algebra_cmd = app.add_subcommand("algebra", "inspect a matrix Lie superalgebra model");
    std::string a_family = "sl";
    int a_m = 0, a_n = 0;
    std::string a_action = "info";
    algebra_cmd->add_option("--family", a_family, "gl | sl | osp | sl11")->required();
    algebra_cmd->add_option("--m", a_m, "first block size (2 for osp)");
    algebra_cmd->add_option("--n", a_n, "second block size (osp(2|2n) uses n)");
    algebra_cmd->add_option("action", a_action, "info")->check(CLI::IsMember({"info"}));

    // flag
    auto* flag_cmd = app.add_subcommand("flag", "decompose a circled Dynkin diagram");
    std::string f_family = "su";
    int f_m = 0, f_n = 0;
    std::string f_circle;
    std::string f_action = "decompose";
    flag_cmd->add_option("--family", f_family, "su | osp")->required();
    flag_cmd->add_option("--m", f_m, "m (su only)");
    flag_cmd->add_option("--n", f_n, "n")->required();
    flag_cmd->add_option("--circle", f_circle, "comma-separated circled node indices")->required();
    flag_cmd->add_option("action", f_action, "decompose")->check(CLI::IsMember({"decompose"}));

    // ricci
    auto* ricci_cmd = app.add_subcommand("ricci", "Ricci curvature of a diagonal invariant metric");
    std::string r_family = "su";
    int r_m = 0, r_n = 0;
    std::string r_circle, r_metric, r_route = "all";
    bool r_timing = false;
    ricci_cmd->add_option("--family", r_family, "su | osp")->required();
    ricci_cmd->add_option("--m", r_m, "m (su only)");
    ricci_cmd->add_option("--n", r_n, "n")->required();
    ricci_cmd->add_option("--circle", r_circle, "comma-separated circled node indices")->required();
    ricci_cmd->add_option("--metric", r_metric, "comma-separated nonzero rationals, one per block")
        ->required();
    ricci_cmd->add_option("--route", r_route, "all | definition | thmric | coefficients");
    ricci_cmd->add_flag("--timing", r_timing, "include timing in the JSON report");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify invariant Einstein metrics");
    std::string c_family = "su";
    int c_m = 0, c_n = 0, c_p = 0;
    std::optional<int> c_q;
    classify_cmd->add_option("--family", c_family, "su | osp")->required();
    classify_cmd->add_option("--m", c_m, "m (su only)");
    classify_cmd->add_option("--n", c_n, "n")->required();
    classify_cmd->add_option("--p", c_p, "first circled node")->required();
    int c_q_raw = -1;
    classify_cmd->add_option("--q", c_q_raw, "second circled node (su two-summand case)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant and oracle suites");
    std::string v_suite = "all";
    int v_max_size = 6, v_threads = 1;
    verify_cmd->add_option("--suite", v_suite, "identities | tables | einstein | all")
        ->check(CLI::IsMember({"identities", "tables", "einstein", "all"}));
    verify_cmd->add_option("--max-size", v_max_size, "bound on m+n for the rosters");
    verify_cmd->add_option("--threads", v_threads, "worker threads for the grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    Output out{json, quiet};

    if (algebra_cmd->parsed()) {
        auto alg = build_algebra(a_family, a_family == "osp" ? 2 : a_m, a_n);
        out.emit(algebra_info_json(*alg), algebra_info_text(*alg));
        return 0;
    }
    if (flag_cmd->parsed()) {
        CircledDiagram diagram{f_family == "osp" ? FlagFamily::osp : FlagFamily::su,
                               f_family == "osp" ? 2 : f_m, f_n, parse_int_list(f_circle)};
        IsotropyDecomposition dec = decompose(diagram);
        BlockData data = collect_block_data(dec);
        out.emit(flag_report_json(dec, data), flag_report_text(dec, data));
        return 0;
    }
    if (ricci_cmd->parsed()) {
        CircledDiagram diagram{r_family == "osp" ? FlagFamily::osp : FlagFamily::su,
                               r_family == "osp" ? 2 : r_m, r_n, parse_int_list(r_circle)};
        IsotropyDecomposition dec = decompose(diagram);
        DiagonalMetric metric{parse_rational_list(r_metric)};
        std::vector<std::string> routes;
        if (r_route == "all") {
            routes = {"definition", "thmric", "coefficients"};
        } else {
            routes = {r_route};
        }
        auto t0 = std::chrono::steady_clock::now();
        RicciReport rep = ricci_diagonal(dec, metric, routes);
        auto t1 = std::chrono::steady_clock::now();
        std::optional<long long> ms;
        if (r_timing)
            ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out.emit(ricci_report_json(rep, metric, ms), ricci_report_text(rep, metric));
        return 0;
    }
    if (classify_cmd->parsed()) {
        if (classify_cmd->count("--q") > 0) c_q = c_q_raw;
        ClassificationReport rep = c_family == "osp" ? classify_osp(c_n, c_p)
                                                     : classify_su(c_m, c_n, c_p, c_q);
        out.emit(classification_json(rep), classification_text(rep));
        return 0;
    }
    if (verify_cmd->parsed()) {
        VerifyOptions options;
        options.max_size = v_max_size;
        options.threads = v_threads;
        std::vector<SuiteResult> results;
        if (v_suite == "all") {
            results = run_all_suites(options);
        } else {
            results.push_back(run_suite(v_suite, options));
        }
        int failed = 0;
        Json jr = Json::array();
        for (const auto& suite : results) {
            failed += suite.failed();
            Json js;
            js["suite"] = suite.name;
            js["passed"] = suite.passed();
            js["failed"] = suite.failed();
            Json checks = Json::array();
            for (const auto& c : suite.checks) {
                Json jc;
                jc["name"] = c.name;
                jc["passed"] = c.passed;
                if (!c.passed) jc["detail"] = c.detail;
                checks.push_back(std::move(jc));
            }
            js["checks"] = std::move(checks);
            jr.push_back(std::move(js));
            if (!json && !quiet) {
                std::cout << "suite " << suite.name << ": " << suite.passed() << " passed, "
                          << suite.failed() << " failed\n";
                for (const auto& c : suite.checks) {
                    std::cout << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << "\n";
                    if (!c.passed) std::cout << "         " << c.detail << "\n";
                }
            }
        }
        if (json && !quiet) {
            Json top;
            top["schema"] = kSchema;
            top["suites"] = std::move(jr);
            std::cout << top.dump(2) << "\n";
        }
        return failed == 0 ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedAlgebra& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedDiagram& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateForm& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
