#include "neile/neile_geometry.hpp"

#include <cmath>
#include <numbers>

#include "neile/errors.hpp"

namespace neile {

NeilePoint NeilePoint::from_coordinates(Complex z, Complex w) {
    if (!in_open_disk(z) || !in_open_disk(w)) {
        throw DomainError("variety point must lie in the open bidisk");
    }
    if (std::abs(z * z - w * w * w) > kVarietyTolerance) {
        throw DomainError("point is not on the Neile parabola z^2 = w^3");
    }
    if (w == Complex(0.0)) {
        if (z != Complex(0.0)) {
            throw DomainError("point with w = 0 and z != 0 has no uniformizing parameter");
        }
        return NeilePoint{};
    }
    const Complex lambda = z / w;
    if (!in_open_disk(lambda)) {
        throw DomainError("uniformizing parameter z/w is not in the open disk");
    }
    return from_parameter(UnitDiskPoint(lambda));
}

NeilePoint NeilePoint::from_parameter(UnitDiskPoint lambda) {
    NeilePoint x;
    const Complex l = lambda;
    x.lambda_ = l;
    x.w_ = l * l;
    x.z_ = x.w_ * l;
    return x;
}

TangentVector::TangentVector(NeilePoint base, Complex v1, Complex v2)
    : base_(base), v1_(v1), v2_(v2) {
    if (base_.is_origin()) return;
    const Complex t1 = 3.0 * base_.z(), t2 = 2.0 * base_.w();
    const Complex c = multiple();
    const double residual = std::hypot(std::abs(v1_ - c * t1), std::abs(v2_ - c * t2));
    const double scale = std::max(1.0, std::hypot(std::abs(v1_), std::abs(v2_)));
    if (residual > 1e-9 * scale) {
        throw DomainError("tangent vector is not a multiple of (3a, 2b) at a nonzero point");
    }
}

Complex TangentVector::multiple() const {
    if (base_.is_origin()) {
        throw DomainError("the tangent space at the origin is two dimensional");
    }
    const Complex t1 = 3.0 * base_.z(), t2 = 2.0 * base_.w();
    return (std::conj(t1) * v1_ + std::conj(t2) * v2_) / (std::norm(t1) + std::norm(t2));
}

Complex PowerSeries::operator()(Complex zeta) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * zeta + *it;
    return acc;
}

Complex PowerSeries::derivative(Complex zeta) const {
    Complex acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
        acc = acc * zeta + static_cast<double>(k) * coeffs_[k];
    }
    return acc;
}

Complex DiskFunction::operator()(Complex zeta) const {
    return std::visit([zeta](const auto& f) { return f(zeta); }, rep_);
}

Complex DiskFunction::derivative(Complex zeta) const {
    return std::visit([zeta](const auto& f) { return f.derivative(zeta); }, rep_);
}

std::vector<Complex> DiskFunction::taylor(std::size_t count) const {
    if (const auto* b = std::get_if<BlaschkeProduct>(&rep_)) return b->taylor(count);
    auto c = std::get<PowerSeries>(rep_).coefficients();
    c.resize(count, Complex(0.0));
    return c;
}

FlatOriginFunction::FlatOriginFunction(DiskFunction h) : h_(std::move(h)) {
    if (std::abs(h_.derivative(0.0)) > 1e-10) {
        throw DomainError("function must have vanishing derivative at the origin");
    }
    constexpr int kSamples = 256;
    constexpr double kRadius = 0.99;
    for (int i = 0; i < kSamples; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / kSamples;
        if (std::abs(h_(std::polar(kRadius, theta))) > 1.0 + 1e-9) {
            throw DomainError("function does not map the disk into the closed disk");
        }
    }
}

FlatOriginFunction FlatOriginFunction::blaschke(Complex mu, std::vector<UnitDiskPoint> zeros) {
    return FlatOriginFunction(DiskFunction(BlaschkeProduct(mu, std::move(zeros))));
}

FlatOriginFunction FlatOriginFunction::series(std::vector<Complex> coefficients) {
    if (coefficients.size() > 1 && coefficients[1] != Complex(0.0)) {
        throw DomainError("series coefficient a_1 must vanish");
    }
    return FlatOriginFunction(DiskFunction(PowerSeries(std::move(coefficients))));
}

DiskFunction FlatOriginFunction::core() const {
    if (std::abs(at_origin()) > 1e-14) {
        throw DomainError("core factor requires a function vanishing at the origin");
    }
    if (const auto* b = std::get_if<BlaschkeProduct>(&h_.representation())) {
        return DiskFunction(b->divide_by_power(2));
    }
    const auto& c = std::get<PowerSeries>(h_.representation()).coefficients();
    std::vector<Complex> shifted(c.size() > 2 ? c.begin() + 2 : c.end(), c.end());
    if (shifted.empty()) shifted.push_back(0.0);
    return DiskFunction(PowerSeries(std::move(shifted)));
}

void BivariatePolynomial::add_term(int z_power, int w_power, Complex c) {
    terms_[{z_power, w_power}] += c;
}

Complex BivariatePolynomial::operator()(Complex z, Complex w) const {
    const auto ipow = [](Complex base, int n) {
        Complex r = 1.0;
        for (int i = 0; i < n; ++i) r *= base;
        return r;
    };
    Complex acc = 0.0;
    for (const auto& [e, c] : terms_) acc += c * ipow(z, e.first) * ipow(w, e.second);
    return acc;
}

std::vector<Complex> BivariatePolynomial::compose_with_parameterization() const {
    std::vector<Complex> out;
    for (const auto& [e, c] : terms_) {
        const auto k = static_cast<std::size_t>(3 * e.first + 2 * e.second);
        if (out.size() <= k) out.resize(k + 1, Complex(0.0));
        out[k] += c;
    }
    return out;
}

NeilePoint parameterize(UnitDiskPoint lambda) { return NeilePoint::from_parameter(lambda); }

UnitDiskPoint uniformize(const NeilePoint& x) { return UnitDiskPoint(x.lambda()); }

std::vector<std::pair<Complex, Complex>> tangent_basis(const NeilePoint& x) {
    if (x.is_origin()) return {{1.0, 0.0}, {0.0, 1.0}};
    return {{3.0 * x.z(), 2.0 * x.w()}};
}

double kobayashi_distance(const NeilePoint& x, const NeilePoint& y) {
    return poincare_distance(uniformize(x), uniformize(y));
}

Complex induced_eval(const FlatOriginFunction& h, const NeilePoint& x) { return h(x.lambda()); }

BivariatePolynomial series_extension(const std::vector<Complex>& coefficients) {
    if (coefficients.size() > 1 && coefficients[1] != Complex(0.0)) {
        throw DomainError("series coefficient a_1 must vanish");
    }
    BivariatePolynomial poly;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (k == 1) continue;
        const int n = static_cast<int>(k);
        if (n % 2 == 0) {
            poly.add_term(0, n / 2, coefficients[k]);
        } else {
            poly.add_term(1, (n - 3) / 2, coefficients[k]);
        }
    }
    return poly;
}

}  // namespace neile
