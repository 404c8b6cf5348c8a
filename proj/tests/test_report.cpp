#include <doctest.h>

#include <string>

#include "aalpha/fixtures.hpp"
#include "aalpha/report.hpp"

using namespace aalpha;

TEST_CASE("report carries the schema version and oracle deltas") {
    const json doc = analysis_report("g1", fixtures::g1(), {0.8});
    CHECK(doc.at("schema_version").get<std::string>() == kReportSchemaVersion);
    REQUIRE(doc.at("moments").size() == 1);
    const json& m = doc.at("moments")[0];
    CHECK(std::abs(m.at("p2_delta").get<double>()) <= 1e-9);
    CHECK(std::abs(m.at("p3_delta").get<double>()) <= 1e-9);
    CHECK(m.at("p2_graph").get<double>() == doctest::Approx(0.304863213668).epsilon(1e-9));
    CHECK(doc.at("verdicts").size() == 5);
    CHECK(doc.at("validity").at("alpha_weyl").get<double>() == doctest::Approx(0.746312603881));
}

TEST_CASE("json output round-trips byte for byte") {
    const json doc = analysis_report("g4", fixtures::g4(), make_grid(0.4, 1.0, 13), kPsdTol, true);
    const std::string once = doc.dump(2);
    const std::string twice = json::parse(once).dump(2);
    CHECK(once == twice);

    // And the report itself is reproducible.
    const json doc2 = analysis_report("g4", fixtures::g4(), make_grid(0.4, 1.0, 13), kPsdTol, true);
    CHECK(doc.dump(2) == doc2.dump(2));
}

TEST_CASE("non-finite sides are mapped to null") {
    const json doc = analysis_report("k4", fixtures::k4(), {1.0});
    bool saw_frobenius = false;
    for (const json& v : doc.at("verdicts")) {
        if (v.at("criterion") == "frobenius_ppt") {
            saw_frobenius = true;
            CHECK(v.at("rhs").is_null());  // infinite bound at alpha = 1
            CHECK(v.at("outcome") == "ppt_certified");
        }
    }
    CHECK(saw_frobenius);
}

TEST_CASE("csv has one row per alpha and criterion") {
    const json doc = analysis_report("p4", fixtures::p4(), make_grid(0.5, 1.0, 7));
    const std::string csv = report_to_csv(doc);
    std::size_t rows = 0;
    for (char c : csv) rows += c == '\n';
    CHECK(rows == 1 + 7 * 5);
    CHECK(csv.rfind("alpha,criterion,outcome,lhs,rhs,state_valid\n", 0) == 0);
}

TEST_CASE("text report names the validity interval and runs") {
    const json doc = analysis_report("p4", fixtures::p4(), make_grid(0.5, 1.0, 7));
    const std::string text = report_to_text(doc);
    CHECK(text.find("validity: alpha >= 0.5") != std::string::npos);
    CHECK(text.find("peres_horodecki") != std::string::npos);
}
