#include <cmath>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include <struvekit/inequalities.hpp>
#include <struvekit/report_json.hpp>

namespace sk = struvekit;

namespace {

sk::InequalityCase get(const std::string& id) {
    auto c = sk::find_case(id);
    if (!c) throw std::runtime_error("missing case " + id);
    return *c;
}

} // namespace

TEST(Catalog, ContainsEveryClaim) {
    std::set<std::string> ids;
    for (const auto& c : sk::catalog()) {
        EXPECT_TRUE(ids.insert(c.id).second) << "duplicate id " << c.id;
        EXPECT_FALSE(c.claim.empty()) << c.id;
    }
    for (const char* id :
         {"bound0", "ineqturan_lower", "ineqturan_upper", "quot1", "quot2_left", "quot2_right", "FX1", "bound1", "FX2",
          "FX3", "quot3_left", "quot3_right", "FX31", "theorem4_bilateral", "gammaineq_left", "gammaineq_right",
          "remark1", "remark2_turan_gamma", "remark2_ratio", "sign_m", "cm_probe_x", "cm_probe_nu", "logconvex_x",
          "logconvex_nu", "neg_m_cm", "h_negative_derivative"})
        EXPECT_EQ(ids.count(id), 1u) << id;
    EXPECT_TRUE(sk::find_case("FX3_raw").has_value());
    EXPECT_FALSE(sk::find_case("nosuch").has_value());
}

TEST(RunCase, Bound0SmallGrid) {
    const sk::GridSpec g{{0.0, 1.0, 2.0}, {1.0, 2.0}, {}, sk::Spacing::Linear};
    const auto r = sk::run_case(get("bound0"), g);
    EXPECT_EQ(r.case_id, "bound0");
    EXPECT_EQ(r.points_tested, 6);
    EXPECT_EQ(r.points_skipped, 0);
    EXPECT_TRUE(r.violations.empty());
    ASSERT_TRUE(r.min_margin.has_value());
    EXPECT_GT(*r.min_margin, 0.0);
}

TEST(RunCase, DomainFilterSkipsPoints) {
    const sk::GridSpec g{{0.4, 1.0, 2.0}, {0.5, 3.0}, {}, sk::Spacing::Linear};
    const auto r = sk::run_case(get("ineqturan_upper"), g);
    EXPECT_EQ(r.points_skipped, 2);
    EXPECT_EQ(r.points_tested, 4);
    EXPECT_TRUE(r.violations.empty());
}

TEST(RunCase, Quot3RightOnItsInterval) {
    const sk::GridSpec g{sk::linspace(-0.5, 0.0, 6), sk::standard_x_values(), {}, sk::Spacing::Linear};
    const auto r = sk::run_case(get("quot3_right"), g);
    EXPECT_EQ(r.points_tested, 6 * 25);
    EXPECT_TRUE(r.violations.empty());
    ASSERT_TRUE(r.min_margin.has_value());
    EXPECT_GT(*r.min_margin, 0.0);
}

TEST(RunCase, EmptyDomainThrows) {
    const sk::GridSpec g{{-0.2, 0.1, 0.4}, {1.0}, {}, sk::Spacing::Linear};
    EXPECT_THROW(sk::run_case(get("ineqturan_lower"), g), sk::EmptyDomainError);
}

TEST(RunCase, InvalidConfigRejected) {
    sk::QuadConfig c;
    c.max_level = 1;
    EXPECT_THROW(sk::run_case_standard(get("bound0"), c), sk::ConfigError);
}

TEST(RunCase, EvaluationErrorsAreRecordedPerPoint) {
    sk::InequalityCase c = get("bound0");
    c.margin = [](const sk::GridPoint& p, const sk::QuadConfig&) -> sk::Margin {
        if (p.x > 1.5) throw sk::NonConvergence("synthetic failure");
        return {1.0, 1.0};
    };
    const sk::GridSpec g{{1.0}, {1.0, 2.0}, {}, sk::Spacing::Linear};
    const auto r = sk::run_case(c, g);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_FALSE(r.violations[0].margin.has_value());
    EXPECT_NE(r.violations[0].error.find("synthetic"), std::string::npos);
}

TEST(RunCase, InconclusiveBand) {
    sk::InequalityCase c = get("bound0");
    c.margin = [](const sk::GridPoint& p, const sk::QuadConfig&) { return sk::Margin{p.x * 1e-10, 1.0}; };
    const sk::GridSpec g{{1.0}, {-5.0, 5.0, 50.0}, {}, sk::Spacing::Linear};
    c.domain = [](const sk::GridPoint&) { return true; };
    const auto r = sk::run_case(c, g);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_EQ(r.inconclusive.size(), 2u);
    EXPECT_DOUBLE_EQ(*r.min_margin, -5e-10);
}

TEST(RunAll, StandardGridsHaveNoViolations) {
    const auto outcomes = sk::run_all();
    EXPECT_EQ(outcomes.size(), sk::catalog().size());
    for (const auto& o : outcomes) {
        ASSERT_TRUE(o.report.has_value()) << o.case_id << ": " << o.error;
        EXPECT_TRUE(o.report->violations.empty()) << o.case_id << " first violation at nu = "
                                                  << o.report->violations.front().point.nu;
        EXPECT_GT(o.report->points_tested, 0) << o.case_id;
    }
    const auto gm = sk::global_min_margin(outcomes);
    ASSERT_TRUE(gm.has_value());
    EXPECT_GE(*gm, -sk::inconclusive_band);
}

TEST(RunAll, SharedGridReportsEmptyDomainPerCase) {
    const sk::GridSpec g{{-0.2}, {1.0}, {}, sk::Spacing::Linear};
    const auto outcomes = sk::run_all(g);
    int empty = 0;
    for (const auto& o : outcomes)
        if (!o.report) {
            ++empty;
            EXPECT_NE(o.error.find("no grid point"), std::string::npos) << o.case_id;
        }
    EXPECT_GT(empty, 0);
    EXPECT_LT(empty, static_cast<int>(outcomes.size()));
}

TEST(Flipped, ProducesViolations) {
    for (const char* id : {"bound0", "sign_m", "gammaineq_left"}) {
        const auto f = sk::flipped(get(id));
        EXPECT_EQ(f.id, std::string(id) + "_flipped");
        const auto r = sk::run_case_standard(f);
        EXPECT_FALSE(r.violations.empty()) << id;
    }
}

TEST(Determinism, IdenticalInputsGiveIdenticalReports) {
    for (const char* id : {"FX1", "quot2_right", "logconvex_nu"}) {
        const auto c = get(id);
        const auto a = sk::run_case_standard(c);
        const auto b = sk::run_case_standard(c);
        EXPECT_EQ(a, b) << id;
        EXPECT_EQ(sk::to_json(a).dump(), sk::to_json(b).dump()) << id;
    }
}

TEST(Sharpness, Bound0MarginVanishesAtZero) {
    const auto c = get("bound0");
    for (double nu : {-0.3, 0.0, 2.0}) {
        const double near = c.margin({nu, 1e-8, std::nullopt}, {}).normalized();
        const double far = c.margin({nu, 1.0, std::nullopt}, {}).normalized();
        EXPECT_GT(near, 0.0);
        EXPECT_LT(near, 1e-7);
        EXPECT_GT(far, 1e3 * near);
    }
}

TEST(Reversals, BothSidesOfThresholdAreOnStandardGrids) {
    struct R {
        const char* id;
        double threshold;
    };
    for (const R& r : {R{"bound1", 0.5}, R{"FX2", 1.5}, R{"remark1", 1.5}}) {
        const auto c = get(r.id);
        const auto g = c.standard_grid();
        bool below = false;
        bool above = false;
        for (double nu : g.nu_values) {
            below = below || nu < r.threshold;
            above = above || nu > r.threshold;
        }
        EXPECT_TRUE(below && above) << r.id;
        EXPECT_TRUE(sk::run_case(c, g).violations.empty()) << r.id;
    }
}

TEST(Comparison, Quot3BoundsAgainstQuot2) {
    for (double nu : sk::linspace(-0.5, 0.0, 11))
        for (double x : sk::standard_x_values()) {
            const double r = std::hypot(x, nu);
            const double q3_right = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * r * r));
            const double q3_left = 0.5 * (-1.0 - std::sqrt(1.0 + 4.0 * r * r));
            EXPECT_LE(q3_right, r);  // sharper upper bound
            EXPECT_LE(q3_left, -r);  // weaker lower bound
        }
}

TEST(Diagnostics, RawMLevelFx3FailsBelowMinusHalf) {
    const auto c = get("FX3_raw");
    const auto r = sk::run_case_standard(c);
    ASSERT_FALSE(r.violations.empty());
    for (const auto& v : r.violations) EXPECT_LT(v.point.nu, -0.5);
    const sk::GridSpec upper{{-0.5}, sk::logspace(1e-3, 20.0, 25), {}, sk::Spacing::Log};
    EXPECT_TRUE(sk::run_case(c, upper).violations.empty());
}

TEST(ReportJson, ExactKeysAndRoundTrip) {
    const auto r = sk::run_case_standard(sk::flipped(get("bound0")));
    const auto j = sk::to_json(r);
    std::set<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
    EXPECT_EQ(keys, (std::set<std::string>{"case_id", "points_tested", "points_skipped", "min_margin", "argmin",
                                           "violations", "inconclusive"}));
    EXPECT_FALSE(j.at("argmin").contains("y"));
    EXPECT_EQ(sk::report_from_json(nlohmann::json::parse(j.dump())), r);
}

TEST(ReportJson, ThreeArgumentPointsAndErrors) {
    sk::VerificationReport r;
    r.case_id = "synthetic";
    r.points_tested = 2;
    r.argmin = {1.0, 2.0, 3.0};
    r.min_margin = -0.25;
    r.violations.push_back({{1.0, 2.0, 3.0}, -0.25, {}});
    r.violations.push_back({{1.0, 4.0, 3.0}, std::nullopt, "no convergence"});
    const auto j = sk::to_json(r);
    EXPECT_TRUE(j.at("violations")[1].at("margin").is_null());
    EXPECT_EQ(j.at("argmin").at("y").get<double>(), 3.0);
    EXPECT_EQ(sk::report_from_json(nlohmann::json::parse(j.dump())), r);
}

TEST(ReportJson, FullCatalogRoundTrip) {
    for (const auto& o : sk::run_all()) {
        ASSERT_TRUE(o.report);
        EXPECT_EQ(sk::report_from_json(nlohmann::json::parse(sk::to_json(*o.report).dump())), *o.report) << o.case_id;
    }
}
