#include "neile/hyperbolic.hpp"

#include <cmath>
#include <sstream>

#include "neile/errors.hpp"

namespace neile {

namespace {

std::string describe(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << "," << z.imag() << ")";
    return os.str();
}

}  // namespace

bool in_open_disk(Complex z) noexcept { return std::abs(z) < 1.0 - kDiskGuard; }

bool in_closed_disk(Complex z) noexcept { return std::abs(z) <= 1.0 + kDiskGuard; }

UnitDiskPoint::UnitDiskPoint(Complex value) : value_(value) {
    if (!in_open_disk(value)) {
        throw DomainError("point " + describe(value) + " is not in the open unit disk");
    }
}

ClosedDiskPoint::ClosedDiskPoint(Complex value) : value_(value) {
    if (!in_closed_disk(value)) {
        throw DomainError("point " + describe(value) + " is not in the closed unit disk");
    }
}

double pseudo_hyperbolic(UnitDiskPoint a, UnitDiskPoint b) {
    const Complex x = a, y = b;
    return std::abs((x - y) / (1.0 - std::conj(x) * y));
}

double poincare_distance(UnitDiskPoint a, UnitDiskPoint b) {
    return std::atanh(pseudo_hyperbolic(a, b));
}

double poincare_metric(UnitDiskPoint z, Complex v) {
    return std::abs(v) / (1.0 - std::norm(z.value()));
}

Complex mobius(UnitDiskPoint a, ClosedDiskPoint z) {
    const Complex c = a, x = z;
    return (c - x) / (1.0 - std::conj(c) * x);
}

Complex mobius_derivative(UnitDiskPoint a, Complex z) {
    const Complex c = a;
    const Complex den = 1.0 - std::conj(c) * z;
    return (std::norm(c) - 1.0) / (den * den);
}

DiskAutomorphism::DiskAutomorphism(Complex mu, UnitDiskPoint a) : mu_(mu), a_(a) {
    if (std::abs(std::abs(mu) - 1.0) > 1e-12) {
        throw DomainError("automorphism rotation factor must be unimodular");
    }
}

Complex DiskAutomorphism::operator()(Complex z) const {
    const Complex c = a_;
    return mu_ * (c - z) / (1.0 - std::conj(c) * z);
}

Complex DiskAutomorphism::derivative(Complex z) const {
    return mu_ * mobius_derivative(a_, z);
}

DiskAutomorphism DiskAutomorphism::inverse() const {
    // w = mu phi_a(z)  <=>  z = conj(mu) (mu a - w)/(1 - conj(mu a) w).
    return DiskAutomorphism(std::conj(mu_), UnitDiskPoint(mu_ * a_.value()));
}

BlaschkeProduct::BlaschkeProduct(Complex mu, std::vector<UnitDiskPoint> zeros)
    : mu_(mu), zeros_(std::move(zeros)) {
    if (std::abs(std::abs(mu) - 1.0) > 1e-12) {
        throw DomainError("Blaschke product constant must be unimodular");
    }
}

Complex BlaschkeProduct::operator()(Complex zeta) const {
    Complex value = mu_;
    for (const auto& z : zeros_) {
        const Complex c = z;
        value *= (c - zeta) / (1.0 - std::conj(c) * zeta);
    }
    return value;
}

Complex BlaschkeProduct::derivative(Complex zeta) const {
    Complex value = mu_;
    Complex slope = 0.0;
    for (const auto& z : zeros_) {
        const Complex c = z;
        const Complex den = 1.0 - std::conj(c) * zeta;
        const Complex factor = (c - zeta) / den;
        const Complex dfactor = (std::norm(c) - 1.0) / (den * den);
        slope = slope * factor + value * dfactor;
        value *= factor;
    }
    return slope;
}

std::vector<Complex> BlaschkeProduct::taylor(std::size_t count) const {
    std::vector<Complex> series(count, Complex(0.0));
    if (count == 0) return series;
    series[0] = mu_;
    std::vector<Complex> factor(count);
    std::vector<Complex> next(count);
    for (const auto& z : zeros_) {
        const Complex c = z;
        const Complex cbar = std::conj(c);
        factor[0] = c;
        Complex power = 1.0;  // conj(c)^(n-1)
        for (std::size_t n = 1; n < count; ++n) {
            factor[n] = power * (std::norm(c) - 1.0);
            power *= cbar;
        }
        for (std::size_t n = 0; n < count; ++n) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k <= n; ++k) acc += series[k] * factor[n - k];
            next[n] = acc;
        }
        series.swap(next);
    }
    return series;
}

BlaschkeProduct BlaschkeProduct::divide_by_power(std::size_t k) const {
    std::vector<UnitDiskPoint> rest;
    std::size_t removed = 0;
    for (const auto& z : zeros_) {
        if (removed < k && z.value() == Complex(0.0)) {
            ++removed;
            continue;
        }
        rest.push_back(z);
    }
    if (removed < k) {
        throw DomainError("Blaschke product does not vanish to the requested order at 0");
    }
    // phi_0(zeta) = -zeta, so each removed factor carries a sign.
    const Complex mu = (k % 2 == 0) ? mu_ : -mu_;
    return BlaschkeProduct(mu, std::move(rest));
}

Complex blaschke_eval(const BlaschkeProduct& b, ClosedDiskPoint zeta) { return b(zeta.value()); }

}  // namespace neile
