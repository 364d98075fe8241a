#pragma once

// The Neile parabola M = {(z,w) in D^2 : z^2 = w^3}, its parameterization
// p(l) = (l^3, l^2), the uniformizer q = p^{-1}, tangent spaces, and the
// correspondence between functions on M and disk functions with h'(0) = 0.

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "neile/hyperbolic.hpp"

namespace neile {

/// Absolute tolerance on |z^2 - w^3| for variety membership.
inline constexpr double kVarietyTolerance = 1e-9;

/// A point (z,w) of M together with its uniformizing parameter.
class NeilePoint {
public:
    NeilePoint() = default;

    /// Rejects points off the variety (no projection) and canonicalizes
    /// (z,w) to (l^3, l^2) with l = z/w.
    static NeilePoint from_coordinates(Complex z, Complex w);
    static NeilePoint from_parameter(UnitDiskPoint lambda);

    Complex z() const noexcept { return z_; }
    Complex w() const noexcept { return w_; }
    Complex lambda() const noexcept { return lambda_; }
    bool is_origin() const noexcept { return lambda_ == Complex(0.0); }

    friend bool operator==(const NeilePoint&, const NeilePoint&) = default;

private:
    Complex z_{0.0}, w_{0.0}, lambda_{0.0};
};

/// A vector of T_x M. Away from the origin it must be colinear with (3a, 2b).
class TangentVector {
public:
    TangentVector(NeilePoint base, Complex v1, Complex v2);

    const NeilePoint& base() const noexcept { return base_; }
    Complex v1() const noexcept { return v1_; }
    Complex v2() const noexcept { return v2_; }

    /// The factor c with (v1, v2) = c (3a, 2b); only defined away from the origin.
    Complex multiple() const;

private:
    NeilePoint base_;
    Complex v1_, v2_;
};

/// Truncated power series sum_k a_k zeta^k.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {}

    const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }
    Complex operator()(Complex zeta) const;
    Complex derivative(Complex zeta) const;

private:
    std::vector<Complex> coeffs_;
};

/// A holomorphic function from the disk to the closed disk.
class DiskFunction {
public:
    using Representation = std::variant<BlaschkeProduct, PowerSeries>;

    DiskFunction() : rep_(PowerSeries({Complex(0.0)})) {}
    DiskFunction(BlaschkeProduct b) : rep_(std::move(b)) {}  // NOLINT
    DiskFunction(PowerSeries s) : rep_(std::move(s)) {}      // NOLINT

    const Representation& representation() const noexcept { return rep_; }
    Complex operator()(Complex zeta) const;
    Complex derivative(Complex zeta) const;
    std::vector<Complex> taylor(std::size_t count) const;

private:
    Representation rep_;
};

/// A disk function h with h'(0) = 0; equivalently a holomorphic function
/// f = h o q on M.
class FlatOriginFunction {
public:
    /// Throws DomainError if h'(0) != 0 or the sampled modulus exceeds 1.
    explicit FlatOriginFunction(DiskFunction h);

    static FlatOriginFunction blaschke(Complex mu, std::vector<UnitDiskPoint> zeros);
    static FlatOriginFunction series(std::vector<Complex> coefficients);

    const DiskFunction& function() const noexcept { return h_; }
    Complex operator()(Complex zeta) const { return h_(zeta); }
    Complex derivative(Complex zeta) const { return h_.derivative(zeta); }
    Complex at_origin() const { return h_(0.0); }

    /// The disk function k with h(zeta) = h(0) + zeta^2 k(zeta).
    DiskFunction core() const;

private:
    DiskFunction h_;
};

/// Polynomial sum c_ij z^i w^j.
class BivariatePolynomial {
public:
    using Exponents = std::pair<int, int>;

    void add_term(int z_power, int w_power, Complex c);
    const std::map<Exponents, Complex>& terms() const noexcept { return terms_; }

    Complex operator()(Complex z, Complex w) const;

    /// Coefficients of zeta^k in F(zeta^3, zeta^2), exact.
    std::vector<Complex> compose_with_parameterization() const;

private:
    std::map<Exponents, Complex> terms_;
};

NeilePoint parameterize(UnitDiskPoint lambda);
UnitDiskPoint uniformize(const NeilePoint& x);

/// [(3a,2b)] away from the origin, the standard basis of C^2 at the origin.
std::vector<std::pair<Complex, Complex>> tangent_basis(const NeilePoint& x);

/// Kobayashi distance (= Lempert function) rho(q(x), q(y)).
double kobayashi_distance(const NeilePoint& x, const NeilePoint& y);

/// f(x) = h(q(x)).
Complex induced_eval(const FlatOriginFunction& h, const NeilePoint& x);

/// Extends a truncated series a_0 + a_2 l^2 + ... + a_N l^N with a_1 = 0 to a
/// polynomial on C^2 by sending l^(2m) to w^m and l^(2m+3) to z w^m.
BivariatePolynomial series_extension(const std::vector<Complex>& coefficients);

}  // namespace neile
