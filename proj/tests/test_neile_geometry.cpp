#include <gtest/gtest.h>

#include <cmath>

#include "neile/errors.hpp"
#include "neile/neile_geometry.hpp"
#include "neile/random.hpp"

using namespace neile;

TEST(Parameterize, Examples) {
    const NeilePoint o = parameterize(0.0);
    EXPECT_EQ(o.z(), Complex(0.0));
    EXPECT_EQ(o.w(), Complex(0.0));
    EXPECT_TRUE(o.is_origin());

    const NeilePoint x = parameterize(0.5);
    EXPECT_EQ(x.z(), Complex(0.125));
    EXPECT_EQ(x.w(), Complex(0.25));

    const NeilePoint y = parameterize(Complex(0.0, 0.5));
    EXPECT_LT(std::abs(y.z() - Complex(0.0, -0.125)), 1e-17);
    EXPECT_LT(std::abs(y.w() - Complex(-0.25, 0.0)), 1e-17);

    EXPECT_THROW(parameterize(Complex(0.8, 0.8)), DomainError);
}

TEST(Uniformize, Examples) {
    EXPECT_EQ(uniformize(NeilePoint::from_coordinates(0.0, 0.0)).value(), Complex(0.0));
    EXPECT_EQ(uniformize(NeilePoint::from_coordinates(0.125, 0.25)).value(), Complex(0.5));
}

TEST(Uniformize, RoundTrip) {
    CounterRng rng(21);
    for (int i = 0; i < 1000; ++i) {
        const Complex l = rng.disk(0.999);
        EXPECT_LT(std::abs(uniformize(parameterize(l)).value() - l), 1e-12);
        const NeilePoint x = parameterize(l);
        const NeilePoint y = NeilePoint::from_coordinates(x.z(), x.w());
        EXPECT_LT(std::abs(y.lambda() - l), 1e-12);
    }
}

TEST(NeilePoint, RejectsPointsOffTheVariety) {
    EXPECT_THROW(NeilePoint::from_coordinates(0.2, 0.25), DomainError);
    EXPECT_THROW(NeilePoint::from_coordinates(0.1, 0.0), DomainError);
    EXPECT_THROW(NeilePoint::from_coordinates(0.0, 1.2), DomainError);
    // Residual just inside the tolerance is accepted and canonicalized.
    const NeilePoint x = NeilePoint::from_coordinates(0.125 + 5e-10, 0.25);
    EXPECT_EQ(x.z(), x.lambda() * x.lambda() * x.lambda());
    EXPECT_EQ(x.w(), x.lambda() * x.lambda());
}

TEST(TangentBasis, Examples) {
    const auto origin = tangent_basis(parameterize(0.0));
    ASSERT_EQ(origin.size(), 2u);
    EXPECT_EQ(origin[0], std::make_pair(Complex(1.0), Complex(0.0)));
    EXPECT_EQ(origin[1], std::make_pair(Complex(0.0), Complex(1.0)));

    const auto at_half = tangent_basis(parameterize(0.5));
    ASSERT_EQ(at_half.size(), 1u);
    EXPECT_EQ(at_half[0].first, Complex(0.375));
    EXPECT_EQ(at_half[0].second, Complex(0.5));

    const Complex l(0.3, -0.6);
    const auto b = tangent_basis(parameterize(l));
    EXPECT_LT(std::abs(b[0].first - l * 3.0 * l * l / l * l), 1e-15);
    EXPECT_LT(std::abs(b[0].second - l * 2.0 * l / l * l), 1e-15);
}

TEST(TangentVector, ColinearityCheck) {
    const NeilePoint x = parameterize(0.5);
    EXPECT_NEAR(std::abs(TangentVector(x, 0.75, 1.0).multiple() - 2.0), 0.0, 1e-15);
    EXPECT_THROW(TangentVector(x, 1.0, 1.0), DomainError);
    EXPECT_NO_THROW(TangentVector(parameterize(0.0), 1.0, 1.0));
}

TEST(Kobayashi, Examples) {
    const NeilePoint x = parameterize(Complex(0.3, 0.1));
    EXPECT_EQ(kobayashi_distance(x, x), 0.0);
    EXPECT_NEAR(kobayashi_distance(parameterize(0.5), parameterize(-0.5)), std::atanh(0.8), 1e-15);
    const Complex l(-0.2, 0.55);
    EXPECT_NEAR(kobayashi_distance(parameterize(0.0), parameterize(l)), std::atanh(std::abs(l)), 1e-15);
}

TEST(FlatOriginFunction, ValidatesDerivativeAtOrigin) {
    EXPECT_THROW(FlatOriginFunction::series({0.0, 0.1, 0.3}), DomainError);
    EXPECT_THROW(FlatOriginFunction::blaschke(1.0, {0.0, 0.5}), DomainError);
    EXPECT_NO_THROW(FlatOriginFunction::blaschke(1.0, {0.0, 0.0, 0.5}));
    // sup |h| > 1 on the disk is rejected.
    EXPECT_THROW(FlatOriginFunction::series({0.0, 0.0, 1.5}), DomainError);
    // A single zero at a != 0 has h'(0) = |a|^2 - 1 != 0.
    EXPECT_THROW(FlatOriginFunction::blaschke(1.0, {0.3}), DomainError);
}

TEST(InducedEval, Examples) {
    const Complex l(0.35, -0.4);
    const NeilePoint x = parameterize(l);
    EXPECT_LT(std::abs(induced_eval(FlatOriginFunction::series({0.0, 0.0, 1.0}), x) - x.w()), 1e-16);
    EXPECT_LT(std::abs(induced_eval(FlatOriginFunction::series({0.0, 0.0, 0.0, 1.0}), x) - x.z()), 1e-16);
    const auto h = FlatOriginFunction::blaschke(1.0, {0.0, 0.0, 0.3});
    EXPECT_NEAR(induced_eval(h, parameterize(0.5)).real(), -0.05882352941176471, 1e-15);
}

TEST(InducedEval, TangentConsistency) {
    // d/dt g(p(l + t)) at t = 0 equals h'(l).
    const auto h = FlatOriginFunction::blaschke(std::polar(1.0, 0.4), {0.0, 0.0, Complex(0.2, 0.5), -0.6});
    CounterRng rng(22);
    for (int i = 0; i < 50; ++i) {
        const Complex l = rng.disk(0.9);
        const double t = 1e-6;
        const Complex fd = (induced_eval(h, parameterize(l + t)) - induced_eval(h, parameterize(l - t))) / (2 * t);
        EXPECT_LT(std::abs(fd - h.derivative(l)), 1e-6);
    }
}

TEST(SeriesExtension, MonomialAssignment) {
    const auto one = series_extension({1.0});
    EXPECT_EQ(one(Complex(0.3), Complex(0.7)), Complex(1.0));

    const auto w = series_extension({0.0, 0.0, 1.0, 0.0});
    EXPECT_EQ(w(Complex(0.3), Complex(0.7)), Complex(0.7));

    const auto p = series_extension({2.0, 0.0, 3.0, 5.0, 7.0, 11.0, 13.0});
    const auto& t = p.terms();
    EXPECT_EQ(t.at({0, 0}), Complex(2.0));
    EXPECT_EQ(t.at({0, 1}), Complex(3.0));   // a2 w
    EXPECT_EQ(t.at({1, 0}), Complex(5.0));   // a3 z
    EXPECT_EQ(t.at({0, 2}), Complex(7.0));   // a4 w^2
    EXPECT_EQ(t.at({1, 1}), Complex(11.0));  // a5 z w
    EXPECT_EQ(t.at({0, 3}), Complex(13.0));  // a6 w^3

    EXPECT_THROW(series_extension({0.0, 1.0}), DomainError);
}

TEST(SeriesExtension, CompositionIsExactOnCoefficients) {
    CounterRng rng(23);
    std::vector<Complex> c(15);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = k == 1 ? Complex(0.0) : rng.disk();
    const auto back = series_extension(c).compose_with_parameterization();
    ASSERT_GE(back.size(), c.size());
    for (std::size_t k = 0; k < c.size(); ++k) EXPECT_EQ(back[k], c[k]) << "k = " << k;
}

TEST(SeriesExtension, TruncatedSeriesOfBlaschkeFunction) {
    const auto h = FlatOriginFunction::blaschke(1.0, {0.0, 0.0, 0.5});
    const auto coeffs = h.function().taylor(21);
    const auto F = series_extension(coeffs);
    CounterRng rng(24);
    for (int i = 0; i < 50; ++i) {
        const Complex l = rng.disk(0.5);
        EXPECT_LT(std::abs(F(l * l * l, l * l) - h(l)), 1e-6);
    }
    // Low-order coefficients: l^2 (0.5 - 0.75 l - 0.375 l^2 - ...).
    EXPECT_NEAR(coeffs[2].real(), 0.5, 1e-15);
    EXPECT_NEAR(coeffs[3].real(), -0.75, 1e-15);
    EXPECT_NEAR(coeffs[4].real(), -0.375, 1e-15);
}
