#pragma once

// Closed-form Caratheodory pseudo-distance and pseudo-metric on the Neile
// parabola.
//
// For nonzero l, d in D the Mobius pseudo-distance c*(p(l), p(d)) is the
// maximum over the closed disk of
//
//     F(a) = m(l^2 phi_a(l), d^2 phi_a(d)),
//
// which is attained either at
//
//     a0 = (1/conj(l) + l + 1/conj(d) + d) / 2      when |a0| < 1, or
//
// anywhere on the unit circle (where F is constant, equal to m(l^2, d^2)).
// In the first case the maximum equals m(l,d) (1+|b2|^2)/(1+|b1|^2) with
//
//     b1 = (1/conj(l) - l - 1/conj(d) + d) / 2,
//     b2 = (1/conj(l) - l + 1/conj(d) - d) / 2.

#include "neile/hyperbolic.hpp"
#include "neile/neile_geometry.hpp"

namespace neile {

/// |a0| >= 1 - kRegimeGuard is classified as the boundary regime.
inline constexpr double kRegimeGuard = 1e-12;

enum class Regime { Interior, Boundary };

const char* to_string(Regime r) noexcept;

struct ExtremalData {
    Complex alpha0;
    Complex beta1;
    Complex beta2;
    Regime regime = Regime::Boundary;
    ClosedDiskPoint extremal_alpha;
    double mobius_value = 0.0;  ///< c*_M
    double distance = 0.0;      ///< c_M = atanh(c*_M)
};

/// alpha0, beta1, beta2, the regime and the extremal value for nonzero l, d.
ExtremalData extremal_parameters(UnitDiskPoint lambda, UnitDiskPoint delta);

/// F(a) from its definition m(l^2 phi_a(l), d^2 phi_a(d)).
double F_eval(ClosedDiskPoint alpha, UnitDiskPoint lambda, UnitDiskPoint delta);

/// F(a) as m(l,d) times an explicit rational expression in a, conj(a).
double F_form1(ClosedDiskPoint alpha, UnitDiskPoint lambda, UnitDiskPoint delta);

/// F(a) as m(l,d) |1 - (conj(a-a0) - conj(b2))(a-a0+b2)| / |1 - (conj(a-a0) - conj(b1))(a-a0+b1)|.
double F_form2(ClosedDiskPoint alpha, UnitDiskPoint lambda, UnitDiskPoint delta);

/// G_k(z) = 1 + 2|b_k|^2 - 2|z|^2 + |z^2 - b_k^2|^2.
double G_k(Complex z, Complex beta);

/// G(z) = G_2(z) / G_1(z); F(a)^2 = m(l,d)^2 G(a - a0).
double G_eval(Complex z, UnitDiskPoint lambda, UnitDiskPoint delta);

/// c*_M(p(l), p(d)).
double caratheodory_mobius(UnitDiskPoint lambda, UnitDiskPoint delta);

/// c*_M via m(l^2 phi_a0(l), d^2 phi_a0(d)) in the interior regime; a
/// cross-check of caratheodory_mobius with more cancellation.
double caratheodory_mobius_direct(UnitDiskPoint lambda, UnitDiskPoint delta);

/// c_M(x, y) = atanh c*_M(q(x), q(y)).
double caratheodory_distance(const NeilePoint& x, const NeilePoint& y);

/// A function attaining c*_M: zeta^2 phi_a0(zeta) (interior regime) or
/// zeta^2 (boundary regime).
BlaschkeProduct extremal_function(UnitDiskPoint lambda, UnitDiskPoint delta);

/// E_M(x; v).
double caratheodory_metric(const TangentVector& v);

/// E_M(x; v) for an ambient vector v; at nonzero x the multiple of (3a, 2b)
/// is recovered by least squares and non-colinear input is rejected.
double caratheodory_metric(const NeilePoint& x, Complex v1, Complex v2);

}  // namespace neile
