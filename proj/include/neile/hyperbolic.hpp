#pragma once

// Exact primitives of hyperbolic geometry on the unit disk: the
// pseudo-hyperbolic and Poincare distances, the Poincare metric, disk
// automorphisms and finite Blaschke products.

#include <complex>
#include <vector>

namespace neile {

using Complex = std::complex<double>;

/// Width of the guard band used by all disk membership checks.
inline constexpr double kDiskGuard = 1e-12;

/// A point of the open unit disk. Construction rejects |value| >= 1 - kDiskGuard.
class UnitDiskPoint {
public:
    UnitDiskPoint() = default;
    UnitDiskPoint(Complex value);  // NOLINT(google-explicit-constructor)
    UnitDiskPoint(double value) : UnitDiskPoint(Complex(value, 0.0)) {}  // NOLINT

    Complex value() const noexcept { return value_; }
    operator Complex() const noexcept { return value_; }  // NOLINT

private:
    Complex value_{0.0, 0.0};
};

/// A point of the closed unit disk. Values up to 1 + kDiskGuard are accepted.
class ClosedDiskPoint {
public:
    ClosedDiskPoint() = default;
    ClosedDiskPoint(Complex value);  // NOLINT(google-explicit-constructor)
    ClosedDiskPoint(double value) : ClosedDiskPoint(Complex(value, 0.0)) {}  // NOLINT

    Complex value() const noexcept { return value_; }
    operator Complex() const noexcept { return value_; }  // NOLINT

private:
    Complex value_{0.0, 0.0};
};

bool in_open_disk(Complex z) noexcept;
bool in_closed_disk(Complex z) noexcept;

/// m(a,b) = |(a-b)/(1 - conj(a) b)|.
double pseudo_hyperbolic(UnitDiskPoint a, UnitDiskPoint b);

/// rho(a,b) = atanh m(a,b).
double poincare_distance(UnitDiskPoint a, UnitDiskPoint b);

/// rho(z; v) = |v| / (1 - |z|^2).
double poincare_metric(UnitDiskPoint z, Complex v);

/// phi_a(z) = (a - z)/(1 - conj(a) z). An involution of the disk swapping a and 0.
Complex mobius(UnitDiskPoint a, ClosedDiskPoint z);

/// phi_a'(z) = (|a|^2 - 1)/(1 - conj(a) z)^2.
Complex mobius_derivative(UnitDiskPoint a, Complex z);

/// The automorphism z -> mu * phi_a(z).
class DiskAutomorphism {
public:
    DiskAutomorphism() = default;
    DiskAutomorphism(Complex mu, UnitDiskPoint a);

    Complex mu() const noexcept { return mu_; }
    Complex center() const noexcept { return a_; }

    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const;
    DiskAutomorphism inverse() const;

private:
    Complex mu_{1.0, 0.0};
    UnitDiskPoint a_{};
};

/// mu * prod_i phi_{z_i}(zeta), zeros listed with multiplicity.
class BlaschkeProduct {
public:
    BlaschkeProduct() = default;
    BlaschkeProduct(Complex mu, std::vector<UnitDiskPoint> zeros);

    Complex mu() const noexcept { return mu_; }
    const std::vector<UnitDiskPoint>& zeros() const noexcept { return zeros_; }
    std::size_t order() const noexcept { return zeros_.size(); }

    Complex operator()(Complex zeta) const;
    Complex derivative(Complex zeta) const;

    /// First `count` Taylor coefficients at the origin.
    std::vector<Complex> taylor(std::size_t count) const;

    /// Same product with `k` zeros at the origin removed (requires them).
    BlaschkeProduct divide_by_power(std::size_t k) const;

private:
    Complex mu_{1.0, 0.0};
    std::vector<UnitDiskPoint> zeros_;
};

Complex blaschke_eval(const BlaschkeProduct& b, ClosedDiskPoint zeta);

}  // namespace neile
