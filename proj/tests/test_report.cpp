#include <gtest/gtest.h>

#include <fstream>

#include "cat1/coxeter.hpp"
#include "cat1/report_json.hpp"

using namespace cat1;
using report::json;

TEST(Report, GoldenCoxeterReport) {
    std::ifstream in(std::string(CAT1_GOLDEN) + "/cb3_report.json");
    ASSERT_TRUE(in);
    const json want = json::parse(in);
    const auto K = coxeter::to_typed_complex(coxeter::build_coxeter_complex(coxeter::CoxeterDiagram::type_b(3)));
    EXPECT_EQ(report::to_json(checker::check_cat1_criteria(K)), want);
}

TEST(Report, Meta) {
    const auto m = report::meta("check", {{"input", "x"}});
    EXPECT_EQ(m["schema_version"], report::kSchemaVersion);
    EXPECT_EQ(m["tool_version"], report::kToolVersion);
    EXPECT_EQ(m["config"]["input"], "x");
}

TEST(Report, Tables) {
    const auto t = report::triples_json(checker::enumerate_short_triples());
    ASSERT_EQ(t.size(), 23u);
    for (const auto& row : t)
        if (row["n_alpha"] == 0 && row["n_beta"] == 0 && row["n_delta"] == 3)
            EXPECT_NEAR(row["sum"].get<double>(), 3 * sphere::pi / 4, 1e-12);
}

TEST(Report, CriteriaWithoutTimingsAreReproducible) {
    const auto a = report::to_json(verify::tables(), false), b = report::to_json(verify::tables(), false);
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_FALSE(a.contains("seconds"));
    EXPECT_EQ(a["status"], "pass");
}
