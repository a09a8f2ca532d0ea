#include "ellipcp/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ellipcp;

TEST_CASE("cp report internal consistency") {
    Report r = make_cp_report("eps + 4z", /*verify=*/true);
    REQUIRE(r.reduced);
    REQUIRE(r.unreduced);
    CHECK(*r.reduced == GradedDims{0, 4});
    CHECK(*r.unreduced == GradedDims{1, 5});
    CHECK(*r.unreduced - ec_t_point() == *r.reduced);
    CHECK(r.d_value == 4);
    CHECK(r.reduced->odd == *r.d_value);  // >= 2 isotypic components
    CHECK(r.ample);
    CHECK(r.self_intersection == 8);
    CHECK(r.euler_characteristic == 4);
    CHECK(r.coh_minus == CohDims{0, 0, 4});
    CHECK(r.coh_structure == CohDims{1, 2, 1});
    REQUIRE(r.oracle_checks.size() == 1);
    CHECK(r.oracle_checks[0].ok);
    CHECK(r.oracle_checks[0].count == 1);

    Report single = make_cp_report("3z^5");
    CHECK(*single.reduced == GradedDims{2, 2});
    CHECK(single.oracle_checks.empty());
}

TEST_CASE("sphere report") {
    Report r = make_sphere_report("x^0y^1 + 4x^1y^1");
    REQUIRE(r.sphere_value);
    CHECK(*r.sphere_value == GradedDims{4, 0});
    CHECK_FALSE(r.les.has_value());
    CHECK_FALSE(r.reduced.has_value());
    CHECK_THROWS_AS(make_sphere_report("x^0y^0"), std::invalid_argument);
}

TEST_CASE("JSON round-trips bit-for-bit") {
    std::mt19937 rng(83);
    std::uniform_int_distribution<Int> expo(-5, 5), mult(1, 4), n_terms(1, 3);
    auto random_input = [&] {
        std::string text;
        Int k = n_terms(rng);
        for (Int i = 0; i < k; ++i) {
            if (i) text += " + ";
            text += std::to_string(mult(rng)) + "z^" + std::to_string(expo(rng));
        }
        return text;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Report r = make_cp_report(random_input(), trial % 2 == 0);
        nlohmann::json j1 = to_json(r);
        Report r2 = report_from_json(j1);
        CHECK(r2 == r);
        nlohmann::json j2 = to_json(r2);
        CHECK(j1 == j2);
        CHECK(j1.dump() == j2.dump());
    }
    Report s = make_sphere_report("2x^1y^1 + y");
    CHECK(report_from_json(to_json(s)) == s);
    CHECK(to_json(report_from_json(to_json(s))).dump() == to_json(s).dump());
}

TEST_CASE("schema marker present") {
    nlohmann::json j = to_json(make_cp_report("z"));
    CHECK(j.at("schema") == "ellipcp/1");
    CHECK(j.at("command") == "cp");
}
