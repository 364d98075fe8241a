#include <gtest/gtest.h>

#include <cmath>

#include "neile/caratheodory.hpp"
#include "neile/errors.hpp"
#include "neile/oracle.hpp"
#include "neile/report.hpp"

using namespace neile;

TEST(OracleCstar, InteriorExample) {
    const OracleReport r = oracle_cstar(0.5, -0.5, {200, 256}, true);
    EXPECT_TRUE(r.pass) << r.details;
    EXPECT_NEAR(r.oracle_value, 16.0 / 65.0, 1e-6);
    EXPECT_LE(r.oracle_value, 16.0 / 65.0 + 1e-9);
}

TEST(OracleCstar, BoundaryExample) {
    const OracleReport r = oracle_cstar(0.3, 0.6, {200, 256}, true);
    EXPECT_TRUE(r.pass) << r.details;
    EXPECT_NEAR(r.oracle_value, 0.279041, 1e-6);
}

TEST(OracleCstar, ZeroCaseAndRejection) {
    const OracleReport r = oracle_cstar(0.0, Complex(0.3, 0.4), {50, 64}, true);
    EXPECT_TRUE(r.pass) << r.details;
    EXPECT_NEAR(r.closed_form, 0.25, 1e-15);
    EXPECT_LE(r.oracle_value, 0.25 + 1e-8);
    EXPECT_THROW(oracle_cstar(0.4, 0.4), DomainError);
}

TEST(OracleCstar, WithoutRefinementStaysBelow) {
    const OracleReport r = oracle_cstar(Complex(0.2, 0.5), Complex(-0.6, 0.1), {40, 64}, false);
    EXPECT_LE(r.oracle_value, r.closed_form + 1e-9);
}

TEST(CriticalScan, InteriorRegimeConvergesToAlpha0) {
    const CriticalScan s = critical_scan(0.5, -0.5, 64);
    EXPECT_TRUE(s.pass);
    EXPECT_EQ(s.starts, 64);
    ASSERT_FALSE(s.interior_maxima.empty());
    for (const Complex z : s.interior_maxima) EXPECT_LT(std::abs(z), 1e-6);
}

TEST(CriticalScan, BoundaryRegimeEscapes) {
    const CriticalScan s = critical_scan(0.3, 0.6, 64);
    EXPECT_TRUE(s.pass);
    EXPECT_TRUE(s.interior_maxima.empty());
    EXPECT_EQ(s.escaped, 64);
}

TEST(CriticalScan, ConjugateSymmetricPairHasRealMaximum) {
    const Complex l(0.4, 0.5);
    const CriticalScan s = critical_scan(l, std::conj(l), 32);
    EXPECT_TRUE(s.pass);
    for (const Complex z : s.interior_maxima) EXPECT_LE(std::abs(z.imag()), 1e-8);
}

TEST(Laplacian, OriginExample) {
    const OracleReport r = laplacian_identity_check(0.5, -0.5, 8, 1);
    EXPECT_TRUE(r.pass) << r.details;
    EXPECT_LE(r.abs_gap, 1e-4);
}

TEST(Laplacian, RandomPairs) {
    const Complex pairs[][2] = {{0.4, -0.3}, {Complex(0.3, 0.2), Complex(-0.5, 0.1)},
                                {Complex(0, 0.7), Complex(0.1, -0.6)}, {0.3, 0.6}};
    for (const auto& p : pairs) {
        const OracleReport r = laplacian_identity_check(p[0], p[1], 16, 2);
        EXPECT_TRUE(r.pass) << r.details;
    }
}

TEST(GRelation, Agrees) {
    const OracleReport r = g_relation_check(Complex(0.2, -0.3), Complex(0.6, 0.5), 1000, 3);
    EXPECT_TRUE(r.pass) << r.details;
    EXPECT_EQ(r.samples, 1000);
}

TEST(BoundaryComparison, Examples) {
    const OracleReport a = boundary_comparison_check(0.5, -0.5);
    EXPECT_TRUE(a.pass) << a.details;
    EXPECT_NEAR(a.closed_form, 16.0 / 65.0, 1e-15);
    EXPECT_LT(a.oracle_value, 1e-15);

    const OracleReport b = boundary_comparison_check(0.4, -0.3);
    EXPECT_TRUE(b.pass) << b.details;
    EXPECT_LT(b.oracle_value, b.closed_form);

    EXPECT_THROW(boundary_comparison_check(0.3, 0.6), DomainError);
}

TEST(RegimeContinuity, NearSwitch) {
    for (const Complex l : {Complex(0.5), Complex(0.2, 0.6), Complex(-0.8, 0.1)}) {
        const OracleReport r = regime_continuity_probe(l, 1e-6);
        EXPECT_TRUE(r.pass) << r.details;
        EXPECT_LE(r.abs_gap, 1e-5);
    }
}

TEST(RandomBlaschke, NeverExceedsClosedForm) {
    const OracleReport r = random_blaschke_lower_bound(0.5, -0.5, 10000, 3, 4);
    EXPECT_TRUE(r.pass) << r.details;
    EXPECT_LE(r.oracle_value, 16.0 / 65.0 + 1e-10);
    // The degree-one sweep reaches the extremal value.
    EXPECT_NEAR(r.oracle_value, 16.0 / 65.0, 1e-3);
}

TEST(MetricOracle, OriginExamples) {
    const NeilePoint o = parameterize(0.0);
    double s = -1, t = -1;
    const OracleReport a = metric_oracle(o, 1.0, 0.0, 2001, &s, &t);
    EXPECT_TRUE(a.pass);
    EXPECT_NEAR(a.oracle_value, 1.0, 1e-9);
    EXPECT_NEAR(t, 0.0, 1e-6);

    const OracleReport b = metric_oracle(o, 0.0, 1.0, 2001, &s, &t);
    EXPECT_TRUE(b.pass);
    EXPECT_NEAR(b.oracle_value, 1.0, 1e-9);
    EXPECT_NEAR(t, 1.0, 1e-6);
}

TEST(MetricOracle, GeneralPointMaximumAtCorner) {
    double s = -1, t = -1;
    const OracleReport r = metric_oracle(parameterize(0.5), 0.375, 0.5, 2001, &s, &t);
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.oracle_value, 8.0 / 15.0, 1e-9);
    EXPECT_DOUBLE_EQ(s, 1.0);
    EXPECT_DOUBLE_EQ(t, 0.0);
}

TEST(Suite, QuickProfilePassesAndIsDeterministic) {
    const SuiteReport a = run_suite({SuiteProfile::Quick, 42, false});
    EXPECT_TRUE(a.pass);
    for (const auto& r : a.reports) EXPECT_TRUE(r.pass) << r.quantity << ": " << r.details;
    const SuiteReport b = run_suite({SuiteProfile::Quick, 42, false});
    EXPECT_EQ(to_json(a).dump(2), to_json(b).dump(2));
}

TEST(Suite, InjectedFaultIsDetected) {
    const SuiteReport a = run_suite({SuiteProfile::Quick, 42, true});
    EXPECT_FALSE(a.pass);
}

TEST(Suite, SeedsChangeInstances) {
    const SuiteReport a = run_suite({SuiteProfile::Quick, 1, false});
    const SuiteReport b = run_suite({SuiteProfile::Quick, 2, false});
    EXPECT_TRUE(a.pass);
    EXPECT_TRUE(b.pass);
    EXPECT_NE(to_json(a).dump(), to_json(b).dump());
}
