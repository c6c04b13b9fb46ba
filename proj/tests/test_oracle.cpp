#include "kkblocks/shapovalov.hpp"

#include "kkblocks/serialize.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace kkb;
using kkb::test::wt;

TEST_CASE("verify_kk on A1 at generic level: finite slice only") {
    auto rs = RootSystem::build("A1");
    OracleOptions options;
    options.depth_cap = 2;

    auto report = verify_kk(rs, Level::generic(), wt(rs, {2}), options);
    CHECK(report.empty_difference());
    REQUIRE(report.singular.size() == 1);
    CHECK(report.singular[0].shifted == wt(rs, {-3}));
    CHECK(report.singular[0].depth == 0);
    CHECK(report.predicted == report.singular);
    CHECK(report.l0_convention == "aw");

    // shifted weight 0: both sides empty
    auto zero = verify_kk(rs, Level::generic(), wt(rs, {-1}), options);
    CHECK(zero.empty_difference());
    CHECK(zero.singular.empty());
    CHECK(zero.predicted.empty());

    // non-integral shifted weight at generic level: nothing on either side
    auto half = verify_kk(rs, Level::generic(), rs.weight_from_coords({Rat(-1, 2)}), options);
    CHECK(half.empty_difference());
    CHECK(half.singular.empty());
}

TEST_CASE("verify_kk at kappa = -2 matches the loop-level singular vectors") {
    auto rs = RootSystem::build("A1");
    OracleOptions options;
    options.depth_cap = 4;
    auto report = verify_kk(rs, Level::rational(Rat(-2)), wt(rs, {4}), options);
    CHECK(report.empty_difference());
    CHECK(report.singular.size() == 5);
    CHECK(report.predicted.size() == 5);
    CHECK(report.l0_convention == "aw");
}

TEST_CASE("verify_kk flags the reflect-translate orientation as discrepant") {
    // The opposite translation sign predicts cells with no singular vectors
    // and misses the real ones; this is the arbitration pin.
    auto rs = RootSystem::build("A1");
    OracleOptions options;
    options.depth_cap = 4;
    auto report = verify_kk(rs, Level::rational(Rat(-2)), wt(rs, {4}), options, StepRule::reflect_translate);
    CHECK_FALSE(report.empty_difference());
    CHECK_FALSE(report.missing.empty());
    CHECK_FALSE(report.extra.empty());
}

TEST_CASE("A2 finite slice at generic level: Weyl orbit through the wall") {
    auto rs = RootSystem::build("A2");
    OracleOptions options;
    options.depth_cap = 1;
    Weight lam = rs.zero_weight(); // shifted weight rho, regular dominant integral
    auto report = verify_kk(rs, Level::generic(), lam, options);
    CHECK(report.empty_difference());
    CHECK(report.singular.size() == 5); // |W| - 1 orbit points below rho
    for (const auto& cell : report.singular) CHECK(cell.depth == 0);
    // the orbit of rho minus rho itself
    std::set<Weight> expected;
    for (const auto& w : rs.weyl_elements())
        if (!(w.apply(rs.rho()) == rs.rho())) expected.insert(w.apply(rs.rho()));
    std::set<Weight> got;
    for (const auto& cell : report.singular) got.insert(cell.shifted);
    CHECK(got == expected);
}

TEST_CASE("L0 arbitration selects the aw form on decisive cells") {
    auto rs = RootSystem::build("A1");
    // lam = 0 is indifferent (both formulas vanish), the others decide
    auto both = l0_on_highest_weight(rs, Level::rational(Rat(-2)), rs.zero_weight());
    CHECK(both.convention == "both");
    auto omega = l0_on_highest_weight(rs, Level::rational(Rat(-2)), wt(rs, {1}));
    CHECK(omega.convention == "aw");
    CHECK(omega.value == "-3/8"); // (w, w+2rho)/2k = (3/2)/(-4)
    auto generic = l0_on_highest_weight(rs, Level::generic(), wt(rs, {2}));
    CHECK(generic.convention == "aw");
}

TEST_CASE("shapovalov cell report and weight space facade") {
    auto rs = RootSystem::build("A1");
    Weight lam = wt(rs, {3});
    auto info = verma_weight_space(rs, lam, 1, lam);
    CHECK(info.basis == std::vector<std::string>{"h1(-1)", "e1(-1)*f1"});
    CHECK(verma_weight_space(rs, lam, 0, rs.weight_from_coords({Rat(1, 2)})).basis.empty());

    auto cell = shapovalov_cell(rs, Level::rational(Rat(-2)), lam, 0, lam - rs.simple_roots()[0]);
    CHECK(cell.matrix == std::vector<std::vector<std::string>>{{"3"}});
    CHECK(cell.det == "3");
    CHECK(cell.kernel_dim == 0);
    CHECK(cell.l0 == "-15/8"); // (3w, 3w+2rho)/2k = (15/2)/(-4)

    CHECK_THROWS_AS(shapovalov_cell(rs, Level::rational(Rat(-2)), lam, 0, wt(rs, {2})), std::invalid_argument);

    // generic level: entries live in Q(k); L0 at depth 1 is (15/4)/k + 1
    auto gen_cell = shapovalov_cell(rs, Level::generic(), lam, 1, lam);
    CHECK(gen_cell.matrix.size() == 2);
    CHECK(gen_cell.l0 == "(k+15/4)/(k)");
}

TEST_CASE("verify_kk report serializes with the published fields") {
    auto rs = RootSystem::build("A1");
    OracleOptions options;
    options.depth_cap = 2;
    auto report = verify_kk(rs, Level::generic(), wt(rs, {2}), options);
    Json j = kk_report_to_json(report);
    CHECK(j.contains("singular"));
    CHECK(j.contains("predicted"));
    CHECK(j.contains("missing"));
    CHECK(j.contains("extra"));
    CHECK(j.contains("horizon"));
    CHECK(j["horizon"].contains("depth_cap"));
    CHECK(j["l0_convention"] == "aw");
    CHECK(j["missing"].empty());
    CHECK(j["extra"].empty());
}
