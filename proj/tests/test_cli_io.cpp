#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supereinstein/jsonio.hpp"

using namespace supereinstein;

TEST_CASE("solution rendering") {
    EinsteinSolution ray;
    ray.kind = EinsteinSolution::Kind::ray;
    ray.x = {Rational(4), Rational(2), Rational(2)};
    ray.c = Rational(1);
    CHECK(ray.render() == "[4 : 2 : 2 | c = 1]");
    ray.c = Rational(5, 4);
    CHECK(ray.render() == "[4 : 2 : 2 | c = 5/4]");

    EinsteinSolution fam;
    fam.kind = EinsteinSolution::Kind::family;
    fam.family_shape = FamilyShape::sum;
    fam.x = {Rational(0), Rational(0), Rational(0)};
    fam.target = 2;
    fam.u = 0;
    fam.v = 1;
    CHECK(fam.render() == "{(x1, x2, x1+x2), c = 0; x1 x2 != 0, x1+x2 != 0}");
}

TEST_CASE("empty classification text") {
    ClassificationReport rep = classify_su(3, 3, 2, 4);
    std::string text = classification_text(rep);
    CHECK(text.find("no invariant Einstein metrics") != std::string::npos);
}

TEST_CASE("classification json round trip") {
    for (ClassificationReport rep :
         {classify_su(4, 1, 1, 2), classify_osp(2, 2), classify_su(3, 3, 2, std::nullopt),
          classify_su(4, 2, 2, 4), classify_su(3, 3, 2, 4)}) {
        Json j = classification_json(rep);
        ClassificationReport back = classification_from_json(j);
        CHECK(back == rep);
        // byte-determinism of the serialized form
        CHECK(j.dump(2) == classification_json(rep).dump(2));
    }
}

TEST_CASE("json schema shape for the golden case") {
    ClassificationReport rep = classify_su(4, 1, 1, 2);
    Json j = classification_json(rep);
    CHECK(j.at("schema") == kSchema);
    CHECK(j.at("parameters").at("m") == 4);
    bool found = false;
    for (const auto& s : j.at("solutions")) {
        if (s.at("x") == Json::array({"4", "2", "2"})) {
            found = true;
            CHECK(s.at("c") == "1");
            CHECK(s.at("kind") == "ray");
            CHECK(s.at("residual_certified") == true);
        }
    }
    CHECK(found);
}

TEST_CASE("ricci report round trip") {
    auto dec = decompose(CircledDiagram{FlagFamily::su, 4, 1, {1, 2}});
    DiagonalMetric metric{{Rational(1), Rational(1), Rational(1)}};
    RicciReport rep = ricci_diagonal(dec, metric);
    Json j = ricci_report_json(rep, metric);
    RicciReport back = ricci_report_from_json(j);
    CHECK(back == rep);
    CHECK(j.at("S") == "15");
    CHECK(j.at("r") == Json::array({"5/2", "5/2", "5/2"}));
}

TEST_CASE("scalar and rational json") {
    Scalar v(Rational(1, 2), Rational(-3), Rational(0), Rational(7, 5));
    CHECK(scalar_from_json(scalar_json(v)) == v);
    CHECK(rational_from_json(rational_json(Rational(-22, 7))) == Rational(-22, 7));
}

TEST_CASE("flag and algebra reports serialize and round-trip") {
    auto dec = decompose(CircledDiagram{FlagFamily::osp, 2, 2, {2}});
    BlockData data = collect_block_data(dec);
    Json j = flag_report_json(dec, data);
    CHECK(j.at("case") == "C");
    CHECK(j.at("blocks").size() == 2);
    CHECK(j.at("blocks").at(0).at("d") == "0");
    CHECK(j.at("structure_constants").empty());  // [112] = 0 at p = 2
    CHECK(flag_report_from_json(j) == flag_report_data(dec, data));
    auto dec2 = decompose(CircledDiagram{FlagFamily::su, 3, 2, {1, 3}});
    BlockData data2 = collect_block_data(dec2);
    CHECK(flag_report_from_json(flag_report_json(dec2, data2)) == flag_report_data(dec2, data2));

    auto alg = build_algebra(Family::sl, 2, 1);
    Json ja = algebra_info_json(*alg);
    CHECK(ja.at("dimension") == 8);
    CHECK(ja.at("positive_odd").size() == 2);
    std::vector<SuperMatrix> mats = algebra_basis_from_json(ja);
    REQUIRE(mats.size() == alg->basis.size());
    for (std::size_t k = 0; k < mats.size(); ++k) CHECK(mats[k] == alg->basis[k].mat);
    auto osp = build_algebra(Family::osp, 2, 2);
    std::vector<SuperMatrix> omats = algebra_basis_from_json(algebra_info_json(*osp));
    for (std::size_t k = 0; k < omats.size(); ++k) CHECK(omats[k] == osp->basis[k].mat);
}
