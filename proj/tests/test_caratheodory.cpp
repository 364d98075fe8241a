#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "neile/caratheodory.hpp"
#include "neile/errors.hpp"
#include "neile/random.hpp"

using namespace neile;

namespace {

std::pair<Complex, Complex> random_pair(CounterRng& rng, double radius = 0.95) {
    for (;;) {
        const Complex l = rng.disk(radius), d = rng.disk(radius);
        if (std::abs(l) > 1e-3 && std::abs(d) > 1e-3 && std::abs(l - d) > 1e-3) return {l, d};
    }
}

double m(Complex a, Complex b) { return std::abs((a - b) / (1.0 - std::conj(a) * b)); }

}  // namespace

TEST(ExtremalParameters, Examples) {
    const ExtremalData e = extremal_parameters(0.5, -0.5);
    EXPECT_LT(std::abs(e.alpha0), 1e-15);
    EXPECT_LT(std::abs(e.beta1 - 1.5), 1e-15);
    EXPECT_LT(std::abs(e.beta2), 1e-15);
    EXPECT_EQ(e.regime, Regime::Interior);

    const ExtremalData b = extremal_parameters(0.3, 0.6);
    EXPECT_NEAR(b.alpha0.real(), 2.95, 1e-14);
    EXPECT_EQ(b.regime, Regime::Boundary);
    EXPECT_EQ(b.extremal_alpha.value(), Complex(1.0));

    const Complex l(0.2, 0.4);
    const ExtremalData s = extremal_parameters(l, l);
    EXPECT_EQ(s.mobius_value, 0.0);
    EXPECT_LT(std::abs(s.beta1), 1e-15);
    EXPECT_GT(std::abs(s.beta2), 0.1);

    EXPECT_THROW(extremal_parameters(0.0, 0.5), DomainError);
}

TEST(ExtremalParameters, AlgebraicIdentities) {
    CounterRng rng(31);
    for (int i = 0; i < 1000; ++i) {
        const auto [l, d] = random_pair(rng);
        const ExtremalData e = extremal_parameters(l, d);
        const auto c = [](Complex z) { return std::conj(z); };
        EXPECT_LT(std::abs(c(e.alpha0) + c(e.beta2) - (1.0 / l + 1.0 / d)), 1e-9 * std::abs(1.0 / l + 1.0 / d) + 1e-12);
        EXPECT_LT(std::abs(e.alpha0 - e.beta2 - (l + d)), 1e-12 * std::abs(e.alpha0) + 1e-12);
        EXPECT_LT(std::abs(c(e.alpha0) + c(e.beta1) - (1.0 / l + c(d))), 1e-12 * std::abs(1.0 / l) + 1e-12);
        EXPECT_LT(std::abs(e.alpha0 - e.beta1 - (l + 1.0 / c(d))), 1e-12 * std::abs(1.0 / d) + 1e-12);
        const Complex lhs = e.beta1 * e.beta1 - e.beta2 * e.beta2;
        const Complex rhs = -(1.0 - std::norm(l)) * (1.0 - std::norm(d)) / (c(l) * c(d));
        EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(e.beta1 * e.beta1)));
        EXPECT_EQ(e.regime == Regime::Interior, std::abs(e.alpha0) < 1.0 - kRegimeGuard);
    }
}

TEST(FEval, Examples) {
    EXPECT_NEAR(F_eval(0.0, 0.5, -0.5), 16.0 / 65.0, 1e-15);
    EXPECT_NEAR(F_form1(0.0, 0.5, -0.5), 16.0 / 65.0, 1e-15);
    EXPECT_NEAR(F_form2(0.0, 0.5, -0.5), 16.0 / 65.0, 1e-15);
    for (double t = 0.0; t < 6.28; t += 0.5) {
        EXPECT_NEAR(F_eval(std::polar(1.0, t), 0.3, 0.6), m(0.09, 0.36), 1e-14);
    }
}

TEST(FEval, ThreeFormsAgree) {
    CounterRng rng(32);
    for (int i = 0; i < 10000; ++i) {
        const auto [l, d] = random_pair(rng);
        const Complex a = rng.disk(1.0);
        const double f = F_eval(a, l, d);
        EXPECT_NEAR(F_form1(a, l, d), f, 1e-11);
        EXPECT_NEAR(F_form2(a, l, d), f, 1e-11);
    }
}

TEST(FEval, ConstantOnTheCircleAndBelowM) {
    CounterRng rng(33);
    for (int i = 0; i < 200; ++i) {
        const auto [l, d] = random_pair(rng);
        const double ring = m(l * l, d * d);
        for (int k = 0; k < 100; ++k) {
            EXPECT_NEAR(F_eval(rng.circle(), l, d), ring, 1e-11);
            EXPECT_LT(F_eval(rng.disk(1.0), l, d), m(l, d));
        }
    }
}

TEST(GEval, Examples) {
    const ExtremalData e = extremal_parameters(0.5, -0.5);
    EXPECT_NEAR(G_eval(0.0, 0.5, -0.5), 1.0 / 10.5625, 1e-15);
    EXPECT_NEAR(std::pow(16.0 / 65.0, 2), 0.64 * G_eval(0.0, 0.5, -0.5), 1e-15);
    const Complex l(0.3, 0.2), d(-0.4, 0.5);
    const ExtremalData f = extremal_parameters(l, d);
    const double ratio = (1.0 + std::norm(f.beta2)) / (1.0 + std::norm(f.beta1));
    EXPECT_NEAR(G_eval(0.0, l, d), ratio * ratio, 1e-13);
    (void)e;
}

TEST(GEval, RelationToF) {
    CounterRng rng(34);
    for (int i = 0; i < 2000; ++i) {
        const auto [l, d] = random_pair(rng);
        const Complex a = rng.disk(1.0);
        const ExtremalData e = extremal_parameters(l, d);
        const double f = F_eval(a, l, d);
        EXPECT_NEAR(f * f, m(l, d) * m(l, d) * G_eval(a - e.alpha0, l, d), 1e-11);
        EXPECT_GT(G_k(rng.disk(2.0), e.beta1), 0.0);
        EXPECT_GT(G_k(rng.disk(2.0), e.beta2), 0.0);
    }
}

TEST(CaratheodoryMobius, FrozenOracleValues) {
    // Values from an independent grid + simplex maximization of F.
    EXPECT_NEAR(caratheodory_mobius(0.5, -0.5), 0.24615384615384617, 1e-12);
    EXPECT_NEAR(caratheodory_mobius(0.3, 0.6), 0.27904092600248037, 1e-12);
    EXPECT_NEAR(caratheodory_mobius(0.4, -0.3), 0.1003075120808318, 1e-12);
    EXPECT_NEAR(caratheodory_mobius(Complex(0.3, 0.2), Complex(-0.5, 0.1)), 0.290522931936433, 1e-10);
    EXPECT_NEAR(caratheodory_mobius(Complex(0.0, 0.7), Complex(0.1, -0.6)), 0.5320913969342499, 1e-10);
}

TEST(CaratheodoryMobius, ZeroAndEqualCases) {
    const Complex l(0.3, -0.5);
    EXPECT_DOUBLE_EQ(caratheodory_mobius(0.0, l), std::norm(l));
    EXPECT_DOUBLE_EQ(caratheodory_mobius(l, 0.0), std::norm(l));
    EXPECT_EQ(caratheodory_mobius(l, l), 0.0);
    EXPECT_EQ(caratheodory_mobius(0.0, 0.0), 0.0);
}

TEST(CaratheodoryMobius, AcuteAngleGivesBoundaryRegime) {
    CounterRng rng(35);
    int tested = 0;
    while (tested < 10000) {
        const auto [l, d] = random_pair(rng);
        if ((l * std::conj(d)).real() <= 0.0) continue;
        ++tested;
        const ExtremalData e = extremal_parameters(l, d);
        ASSERT_EQ(e.regime, Regime::Boundary);
        EXPECT_NEAR(caratheodory_mobius(l, d), m(l * l, d * d), 1e-12);
    }
}

TEST(CaratheodoryMobius, BranchFormsAgreeInInterior) {
    CounterRng rng(36);
    int tested = 0;
    while (tested < 2000) {
        const auto [l, d] = random_pair(rng);
        if (extremal_parameters(l, d).regime != Regime::Interior) continue;
        ++tested;
        EXPECT_NEAR(caratheodory_mobius(l, d), caratheodory_mobius_direct(l, d), 1e-11);
    }
}

TEST(CaratheodoryMobius, IsSupremumOfF) {
    CounterRng rng(37);
    for (int i = 0; i < 300; ++i) {
        const auto [l, d] = random_pair(rng);
        const ExtremalData e = extremal_parameters(l, d);
        const double c = caratheodory_mobius(l, d);
        for (int k = 0; k < 100; ++k) EXPECT_GE(c, F_eval(rng.disk(1.0), l, d) - 1e-11);
        EXPECT_NEAR(F_eval(e.extremal_alpha, l, d), c, 1e-11);
        EXPECT_LT(c, m(l, d));
    }
}

TEST(CaratheodoryMobius, SymmetryAndRotationEquivariance) {
    CounterRng rng(38);
    for (int i = 0; i < 2000; ++i) {
        const auto [l, d] = random_pair(rng);
        const Complex w = rng.circle();
        EXPECT_NEAR(caratheodory_mobius(l, d), caratheodory_mobius(d, l), 1e-12);
        EXPECT_NEAR(caratheodory_mobius(w * l, w * d), caratheodory_mobius(l, d), 1e-12);
    }
}

TEST(CaratheodoryMobius, ContinuousAcrossRegimeSwitch) {
    // Walk d around -l until |alpha0| crosses 1.
    const Complex l(0.45, 0.2);
    double prev = caratheodory_mobius(l, -l);
    for (int k = 1; k <= 4000; ++k) {
        const Complex d = -l * std::polar(1.0, std::numbers::pi * k / 4000.0);
        if (std::abs(d - l) < 1e-9) break;
        const double cur = caratheodory_mobius(l, d);
        EXPECT_LT(std::abs(cur - prev), 2e-3);
        prev = cur;
    }
}

TEST(CaratheodoryDistance, Examples) {
    const NeilePoint x = parameterize(Complex(0.1, 0.2));
    EXPECT_EQ(caratheodory_distance(x, x), 0.0);
    EXPECT_NEAR(caratheodory_distance(parameterize(0.0), parameterize(0.5)), std::atanh(0.25), 1e-15);
    EXPECT_NEAR(caratheodory_distance(parameterize(0.5), parameterize(-0.5)), std::atanh(16.0 / 65.0), 1e-15);
}

TEST(CaratheodoryDistance, DominatedByKobayashi) {
    CounterRng rng(39);
    for (int i = 0; i < 10000; ++i) {
        const auto [l, d] = random_pair(rng, 0.999);
        EXPECT_LE(caratheodory_distance(parameterize(l), parameterize(d)),
                  kobayashi_distance(parameterize(l), parameterize(d)) + 1e-10);
    }
}

TEST(ExtremalFunction, Examples) {
    const BlaschkeProduct a = extremal_function(0.5, -0.5);
    EXPECT_EQ(a.order(), 3u);
    const Complex z(0.3, 0.4);
    EXPECT_LT(std::abs(a(z) + z * z * z), 1e-15);
    EXPECT_NEAR(m(a(0.5), a(-0.5)), 16.0 / 65.0, 1e-15);

    const BlaschkeProduct b = extremal_function(0.3, 0.6);
    EXPECT_EQ(b.order(), 2u);
    EXPECT_NEAR(m(b(0.3), b(0.6)), 0.27904092600248037, 1e-15);

    EXPECT_THROW(extremal_function(0.2, 0.2), DomainError);
    EXPECT_THROW(extremal_function(0.0, 0.2), DomainError);
}

TEST(ExtremalFunction, AttainsTheDistance) {
    CounterRng rng(40);
    for (int i = 0; i < 1000; ++i) {
        const auto [l, d] = random_pair(rng);
        const BlaschkeProduct b = extremal_function(l, d);
        EXPECT_NEAR(m(b(l), b(d)), caratheodory_mobius(l, d), 1e-12);
        EXPECT_NEAR(std::abs(b(rng.circle())), 1.0, 1e-12);
        EXPECT_LT(std::abs(b.derivative(0.0)), 1e-15);
    }
}

TEST(CaratheodoryMetric, Examples) {
    const NeilePoint o = parameterize(0.0);
    EXPECT_DOUBLE_EQ(caratheodory_metric(o, 0.0, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(caratheodory_metric(o, 1.0, 0.0), 1.0);
    EXPECT_DOUBLE_EQ(caratheodory_metric(o, 1.0, 2.0), 2.0);  // |v2| = 2|v1|: both branches give 2
    EXPECT_DOUBLE_EQ(caratheodory_metric(o, 1.0, 1.0), 1.25);
    EXPECT_NEAR(caratheodory_metric(parameterize(0.5), 0.375, 0.5), 8.0 / 15.0, 1e-15);
    EXPECT_THROW(caratheodory_metric(parameterize(0.5), 0.375, 0.6), DomainError);
}

TEST(CaratheodoryMetric, ContinuousAcrossOriginBranches) {
    const NeilePoint o = parameterize(0.0);
    for (double r = 1.9; r < 2.1; r += 0.001) {
        const double a = caratheodory_metric(o, 1.0, r);
        const double b = caratheodory_metric(o, 1.0, r + 0.001);
        EXPECT_LT(std::abs(a - b), 0.002);
    }
}

TEST(CaratheodoryMetric, MatchesDistanceAlongTheParameterRay) {
    // Symmetric slope of t -> c(p(l), p(l + t)): the distance has a kink at t = 0.
    CounterRng rng(41);
    for (int i = 0; i < 100; ++i) {
        Complex l = rng.disk(0.9);
        if (std::abs(l) < 0.05) l = 0.3;
        const double h = 1e-5;
        const double dp = caratheodory_distance(parameterize(l), parameterize(l + h));
        const double dm = caratheodory_distance(parameterize(l), parameterize(l - h));
        const double slope = (dp + dm) / (2 * h);
        const double metric = caratheodory_metric(parameterize(l), 3.0 * l * l, 2.0 * l);
        EXPECT_NEAR(slope, metric, 1e-4) << "l = " << l;
        EXPECT_NEAR(metric, 2.0 * std::abs(l) / (1.0 - std::pow(std::abs(l), 4)), 1e-12);
    }
}
