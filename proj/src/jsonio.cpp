#include "supereinstein/jsonio.hpp"

#include <iomanip>
#include <sstream>

namespace supereinstein {

Json rational_json(const Rational& v) { return v.to_string(); }

Rational rational_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

Json scalar_json(const Scalar& v) {
    Json out = Json::array();
    for (int k = 0; k < 4; ++k) out.push_back(v.coeff(k).to_string());
    return out;
}

Scalar scalar_from_json(const Json& j) {
    return Scalar(Rational::parse(j.at(0).get<std::string>()), Rational::parse(j.at(1).get<std::string>()),
                  Rational::parse(j.at(2).get<std::string>()), Rational::parse(j.at(3).get<std::string>()));
}

Json root_json(const RootSystem& rs, const Weight& root) {
    Json coeffs = Json::array();
    for (const auto& v : root.eps) coeffs.push_back(static_cast<long long>(v.num().to_int64()));
    for (const auto& v : root.delta) coeffs.push_back(static_cast<long long>(v.num().to_int64()));
    Json out;
    out["coeffs"] = std::move(coeffs);
    out["odd"] = rs.is_odd_root(root);
    out["label"] = root.to_string();
    return out;
}

Json algebra_info_json(const AlgebraModel& alg) {
    Json out;
    out["schema"] = kSchema;
    out["family"] = to_string(alg.family);
    out["m"] = alg.m;
    out["n"] = alg.n;
    out["dimension"] = alg.dim();
    int even = 0, odd = 0;
    for (const auto& el : alg.basis) (el.parity == Parity::odd ? odd : even)++;
    out["dim_even"] = even;
    out["dim_odd"] = odd;
    switch (alg.q_form) {
        case QFormKind::minus_str: out["q_form"] = "minus_str"; break;
        case QFormKind::sl_nn_split: out["q_form"] = "sl_nn_split"; break;
        case QFormKind::osp_minus_str: out["q_form"] = "osp_minus_str"; break;
    }
    out["star"] = alg.star_kind == StarKind::type1_A ? "type1_A" : "type1_C";
    if (alg.roots) {
        Json pos_even = Json::array(), pos_odd = Json::array(), simple = Json::array();
        for (const auto& r : alg.roots->positive_even) pos_even.push_back(root_json(*alg.roots, r));
        for (const auto& r : alg.roots->positive_odd) pos_odd.push_back(root_json(*alg.roots, r));
        for (const auto& r : alg.roots->simple) simple.push_back(root_json(*alg.roots, r));
        out["positive_even"] = std::move(pos_even);
        out["positive_odd"] = std::move(pos_odd);
        out["simple"] = std::move(simple);
    }
    Json basis = Json::array();
    for (const auto& el : alg.basis) {
        Json b;
        b["label"] = el.label;
        b["parity"] = to_string(el.parity);
        Json entries = Json::array();
        for (const auto& e : el.mat.entries()) {
            Json entry;
            entry["row"] = e.row;
            entry["col"] = e.col;
            entry["value"] = scalar_json(e.value);
            entries.push_back(std::move(entry));
        }
        b["entries"] = std::move(entries);
        basis.push_back(std::move(b));
    }
    out["basis"] = std::move(basis);
    return out;
}

std::string algebra_info_text(const AlgebraModel& alg) {
    std::ostringstream os;
    os << to_string(alg.family) << "(" << alg.m << "|" << alg.n << ")\n";
    os << "  dimension: " << alg.dim() << "\n";
    int even = 0, odd = 0;
    for (const auto& el : alg.basis) (el.parity == Parity::odd ? odd : even)++;
    os << "  even/odd:  " << even << "/" << odd << "\n";
    const char* form = alg.q_form == QFormKind::sl_nn_split
                           ? "center-split -Str form"
                           : "-Str(XY)";
    os << "  Q form:    " << form << "\n";
    if (alg.roots) {
        os << "  positive even roots (" << alg.roots->positive_even.size() << "):";
        for (const auto& r : alg.roots->positive_even) os << " " << r.to_string();
        os << "\n  positive odd roots (" << alg.roots->positive_odd.size() << "):";
        for (const auto& r : alg.roots->positive_odd) os << " " << r.to_string();
        os << "\n  simple system:";
        for (int k = 0; k < alg.roots->rank(); ++k) {
            os << " " << alg.roots->simple[static_cast<std::size_t>(k)].to_string();
            if (alg.roots->simple_odd[static_cast<std::size_t>(k)]) os << "(odd)";
        }
        os << "\n";
    }
    return os.str();
}

FlagReportData flag_report_data(const IsotropyDecomposition& dec, const BlockData& data) {
    FlagReportData out;
    out.family = dec.diagram.family == FlagFamily::su ? "su" : "osp";
    out.m = dec.diagram.m;
    out.n = dec.diagram.n;
    out.circled = dec.diagram.circled;
    out.case_tag = to_string(dec.case_tag);
    for (int i = 0; i < dec.summands(); ++i) {
        const auto& blk = dec.blocks[static_cast<std::size_t>(i)];
        FlagReportData::Block b;
        b.label = blk.label;
        b.d = blk.d;
        b.b = blk.b;
        b.c = blk.c;
        b.dim_even = blk.dim_even;
        b.dim_odd = blk.dim_odd;
        for (const auto& v : blk.highest_weight.eps) b.highest_weight.push_back(v.num().to_int64());
        for (const auto& v : blk.highest_weight.delta) b.highest_weight.push_back(v.num().to_int64());
        out.blocks.push_back(std::move(b));
    }
    for (int i = 0; i < data.s; ++i)
        for (int j = i; j < data.s; ++j)
            for (int k = j; k < data.s; ++k) {
                const Rational& v = data.ijk.at(i, j, k);
                if (v.is_zero()) continue;
                out.ijk.emplace_back(
                    std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1), v);
            }
    return out;
}

Json flag_report_json(const IsotropyDecomposition& dec, const BlockData& data) {
    FlagReportData rep = flag_report_data(dec, data);
    Json out;
    out["schema"] = kSchema;
    out["family"] = rep.family;
    out["m"] = rep.m;
    out["n"] = rep.n;
    out["circled"] = rep.circled;
    out["case"] = rep.case_tag;
    Json blocks = Json::array();
    for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
        const auto& blk = rep.blocks[i];
        Json b;
        b["label"] = blk.label;
        b["d"] = blk.d.to_string();
        b["b"] = blk.b.to_string();
        b["c"] = blk.c.to_string();
        b["dim_even"] = blk.dim_even;
        b["dim_odd"] = blk.dim_odd;
        Json hw;
        hw["coeffs"] = blk.highest_weight;
        hw["odd"] = dec.roots().is_odd_root(dec.blocks[i].highest_weight);
        hw["label"] = dec.blocks[i].highest_weight.to_string();
        b["highest_weight"] = std::move(hw);
        blocks.push_back(std::move(b));
    }
    out["blocks"] = std::move(blocks);
    Json ijk = Json::array();
    for (const auto& [key, value] : rep.ijk) {
        Json e;
        e["ijk"] = key;
        e["value"] = value.to_string();
        ijk.push_back(std::move(e));
    }
    out["structure_constants"] = std::move(ijk);
    return out;
}

FlagReportData flag_report_from_json(const Json& j) {
    FlagReportData out;
    out.family = j.at("family").get<std::string>();
    out.m = j.at("m").get<int>();
    out.n = j.at("n").get<int>();
    for (const auto& v : j.at("circled")) out.circled.push_back(v.get<int>());
    out.case_tag = j.at("case").get<std::string>();
    for (const auto& b : j.at("blocks")) {
        FlagReportData::Block blk;
        blk.label = b.at("label").get<std::string>();
        blk.d = rational_from_json(b.at("d"));
        blk.b = rational_from_json(b.at("b"));
        blk.c = rational_from_json(b.at("c"));
        blk.dim_even = b.at("dim_even").get<int>();
        blk.dim_odd = b.at("dim_odd").get<int>();
        for (const auto& v : b.at("highest_weight").at("coeffs"))
            blk.highest_weight.push_back(v.get<long long>());
        out.blocks.push_back(std::move(blk));
    }
    for (const auto& e : j.at("structure_constants"))
        out.ijk.emplace_back(e.at("ijk").get<std::string>(), rational_from_json(e.at("value")));
    return out;
}

std::vector<SuperMatrix> algebra_basis_from_json(const Json& j) {
    const int m = j.at("family") == "osp" ? 2 : j.at("m").get<int>();
    const int n = j.at("family") == "osp" ? 2 * j.at("n").get<int>() : j.at("n").get<int>();
    std::vector<SuperMatrix> out;
    for (const auto& b : j.at("basis")) {
        SuperMatrix mat(m, n);
        for (const auto& e : b.at("entries"))
            mat.set(e.at("row").get<int>(), e.at("col").get<int>(), scalar_from_json(e.at("value")));
        out.push_back(std::move(mat));
    }
    return out;
}

std::string flag_report_text(const IsotropyDecomposition& dec, const BlockData& data) {
    std::ostringstream os;
    os << (dec.diagram.family == FlagFamily::su ? "su" : "osp") << "(" << dec.diagram.m << "|"
       << dec.diagram.n << ") circled {";
    for (std::size_t i = 0; i < dec.diagram.circled.size(); ++i)
        os << (i ? "," : "") << dec.diagram.circled[i];
    os << "}  case " << to_string(dec.case_tag) << "\n";
    os << "  block  label   d       b       c       dim(even|odd)  highest weight\n";
    for (int i = 0; i < dec.summands(); ++i) {
        const auto& blk = dec.blocks[static_cast<std::size_t>(i)];
        os << "  m" << i + 1 << "     " << std::left << std::setw(8) << blk.label << std::setw(8)
           << blk.d.to_string() << std::setw(8) << blk.b.to_string() << std::setw(8)
           << blk.c.to_string() << std::setw(15)
           << (std::to_string(blk.dim_even) + "|" + std::to_string(blk.dim_odd))
           << blk.highest_weight.to_string() << "\n";
    }
    os << "  nonzero structure constants:";
    bool any = false;
    for (int i = 0; i < data.s; ++i)
        for (int j = i; j < data.s; ++j)
            for (int k = j; k < data.s; ++k) {
                const Rational& v = data.ijk.at(i, j, k);
                if (v.is_zero()) continue;
                os << " [" << i + 1 << j + 1 << k + 1 << "]=" << v.to_string();
                any = true;
            }
    if (!any) os << " none";
    os << "\n";
    return os.str();
}

Json ricci_report_json(const RicciReport& report, const DiagonalMetric& metric,
                       std::optional<long long> timing_ms) {
    Json out;
    out["schema"] = kSchema;
    Json x = Json::array();
    for (const auto& v : metric.x) x.push_back(v.to_string());
    out["metric"] = std::move(x);
    Json r = Json::array();
    for (const auto& v : report.r) r.push_back(v.to_string());
    out["r"] = std::move(r);
    out["S"] = report.scalar.to_string();
    out["routes"] = report.routes;
    if (timing_ms) out["timing_ms"] = *timing_ms;
    return out;
}

RicciReport ricci_report_from_json(const Json& j) {
    RicciReport out;
    for (const auto& v : j.at("r")) out.r.push_back(rational_from_json(v));
    out.scalar = rational_from_json(j.at("S"));
    for (const auto& v : j.at("routes")) out.routes.push_back(v.get<std::string>());
    return out;
}

std::string ricci_report_text(const RicciReport& report, const DiagonalMetric& metric) {
    std::ostringstream os;
    os << "metric (";
    for (std::size_t i = 0; i < metric.x.size(); ++i) os << (i ? ", " : "") << metric.x[i].to_string();
    os << ")\n  r = (";
    for (std::size_t i = 0; i < report.r.size(); ++i) os << (i ? ", " : "") << report.r[i].to_string();
    os << ")\n  S = " << report.scalar.to_string() << "\n  routes agreed:";
    for (const auto& t : report.routes) os << " " << t;
    os << "\n";
    return os.str();
}

Json solution_json(const EinsteinSolution& s) {
    Json out;
    out["kind"] = s.kind == EinsteinSolution::Kind::ray ? "ray" : "family";
    out["label"] = s.label;
    if (s.kind == EinsteinSolution::Kind::ray) {
        Json x = Json::array();
        for (const auto& v : s.x) x.push_back(v.to_string());
        out["x"] = std::move(x);
        out["c"] = s.c.to_string();
    } else {
        out["shape"] = s.family_shape == FamilyShape::unconstrained ? "unconstrained" : "sum";
        if (s.family_shape == FamilyShape::sum) {
            out["target"] = s.target + 1;
            out["u"] = s.u + 1;
            out["v"] = s.v + 1;
        }
        out["blocks"] = static_cast<int>(s.x.size());
        out["c"] = s.c.to_string();
    }
    out["positivity"] = to_string(s.positivity);
    out["ricci_flat"] = s.ricci_flat;
    out["residual_certified"] = s.residual_certified;
    return out;
}

EinsteinSolution solution_from_json(const Json& j) {
    EinsteinSolution s;
    if (j.at("kind").get<std::string>() == "ray") {
        s.kind = EinsteinSolution::Kind::ray;
        for (const auto& v : j.at("x")) s.x.push_back(rational_from_json(v));
    } else {
        s.kind = EinsteinSolution::Kind::family;
        s.family_shape = j.at("shape").get<std::string>() == "unconstrained" ? FamilyShape::unconstrained
                                                                             : FamilyShape::sum;
        if (s.family_shape == FamilyShape::sum) {
            s.target = j.at("target").get<int>() - 1;
            s.u = j.at("u").get<int>() - 1;
            s.v = j.at("v").get<int>() - 1;
        }
        s.x.assign(j.at("blocks").get<std::size_t>(), Rational(0));
    }
    s.label = j.at("label").get<std::string>();
    s.c = rational_from_json(j.at("c"));
    std::string pos = j.at("positivity").get<std::string>();
    s.positivity = pos == "pos_with_lambda_pos"
                       ? Positivity::pos_with_lambda_pos
                       : (pos == "pos_with_lambda_neg" ? Positivity::pos_with_lambda_neg
                                                       : Positivity::never_pos);
    s.ricci_flat = j.at("ricci_flat").get<bool>();
    s.residual_certified = j.at("residual_certified").get<bool>();
    return s;
}

Json classification_json(const ClassificationReport& report) {
    Json out;
    out["schema"] = kSchema;
    Json params;
    params["family"] = report.family;
    if (report.family == "su") params["m"] = report.m;
    params["n"] = report.n;
    params["p"] = report.p;
    if (report.q) params["q"] = *report.q;
    out["parameters"] = std::move(params);
    out["case"] = to_string(report.case_tag);
    Json sols = Json::array();
    for (const auto& s : report.solutions) sols.push_back(solution_json(s));
    out["solutions"] = std::move(sols);
    out["corollary_branch"] = report.corollary_branch;
    return out;
}

ClassificationReport classification_from_json(const Json& j) {
    ClassificationReport out;
    const Json& params = j.at("parameters");
    out.family = params.at("family").get<std::string>();
    out.m = out.family == "su" ? params.at("m").get<int>() : 2;
    out.n = params.at("n").get<int>();
    out.p = params.at("p").get<int>();
    if (params.contains("q")) out.q = params.at("q").get<int>();
    std::string tag = j.at("case").get<std::string>();
    for (CaseTag t : {CaseTag::A_one, CaseTag::A_case1, CaseTag::A_case2, CaseTag::A_case3, CaseTag::C}) {
        if (tag == to_string(t)) out.case_tag = t;
    }
    for (const auto& s : j.at("solutions")) out.solutions.push_back(solution_from_json(s));
    out.corollary_branch = j.at("corollary_branch").get<std::string>();
    return out;
}

std::string classification_text(const ClassificationReport& report) {
    std::ostringstream os;
    if (report.family == "su") {
        os << "su(" << report.m << "|" << report.n << ") circled {" << report.p;
        if (report.q) os << "," << *report.q;
        os << "}";
    } else {
        os << "osp(2|" << 2 * report.n << ") circled {" << report.p << "}";
    }
    os << "  case " << to_string(report.case_tag) << "\n";
    if (report.solutions.empty()) {
        os << "  no invariant Einstein metrics\n";
    } else {
        for (const auto& s : report.solutions) {
            os << "  " << std::left << std::setw(8) << s.label << s.render();
            os << "  " << to_string(s.positivity);
            if (s.ricci_flat) os << "  ricci-flat";
            os << "\n";
        }
    }
    if (!report.corollary_branch.empty()) os << "  branch: " << report.corollary_branch << "\n";
    return os.str();
}

bool operator==(const EinsteinSolution& a, const EinsteinSolution& b) {
    return a.kind == b.kind && a.x == b.x && a.c == b.c && a.family_shape == b.family_shape &&
           a.target == b.target && a.u == b.u && a.v == b.v && a.positivity == b.positivity &&
           a.ricci_flat == b.ricci_flat && a.residual_certified == b.residual_certified &&
           a.label == b.label;
}

bool operator==(const ClassificationReport& a, const ClassificationReport& b) {
    return a.family == b.family && a.m == b.m && a.n == b.n && a.p == b.p && a.q == b.q &&
           a.case_tag == b.case_tag && a.solutions == b.solutions &&
           a.corollary_branch == b.corollary_branch;
}

bool operator==(const RicciReport& a, const RicciReport& b) {
    return a.r == b.r && a.scalar == b.scalar && a.routes == b.routes;
}

}  // namespace supereinstein
