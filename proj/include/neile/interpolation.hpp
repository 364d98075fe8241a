#pragma once

// The mixed Caratheodory-Pick problem: find f : D -> D holomorphic with
//
//     f(z1) = w1,   f(z2) = w2,   f'(z3) = 0.
//
// Moving z3 to the origin with tau(zeta) = (zeta - z3)/(1 - conj(z3) zeta)
// turns f into a function with vanishing derivative at 0, i.e. a function on
// the Neile parabola, so the problem is solvable iff
//
//     rho(w1, w2) <= c_M(p(tau(z1)), p(tau(z2))).

#include <optional>

#include "neile/caratheodory.hpp"
#include "neile/hyperbolic.hpp"

namespace neile {

/// |margin| at or below this value classifies an instance as extremal.
inline constexpr double kExtremalTolerance = 1e-10;

struct MixedProblem {
    MixedProblem(UnitDiskPoint z1, UnitDiskPoint z2, UnitDiskPoint z3, UnitDiskPoint w1,
                 UnitDiskPoint w2);

    UnitDiskPoint z1, z2, z3, w1, w2;
};

struct Feasibility {
    bool feasible = false;
    double margin = 0.0;          ///< c_M(reduced nodes) - rho(w1, w2)
    double caratheodory = 0.0;    ///< c_M of the reduced nodes
    double target_distance = 0.0; ///< rho(w1, w2)
};

/// The degree <= 1 solution of f(a1) = w1, f(a2) = w2:
/// zeta -> phi_w1(c phi_a1(zeta)) with c = phi_w1(w2)/phi_a1(a2).
class TwoPointPick {
public:
    TwoPointPick(UnitDiskPoint a1, UnitDiskPoint w1, Complex c) : a1_(a1), w1_(w1), c_(c) {}

    Complex operator()(Complex zeta) const;
    Complex derivative(Complex zeta) const;

    Complex rotation() const noexcept { return c_; }
    bool is_automorphism() const noexcept;
    bool is_constant() const noexcept { return c_ == Complex(0.0); }

    /// Canonical mu * phi_a form; requires is_automorphism().
    DiskAutomorphism as_automorphism() const;

private:
    UnitDiskPoint a1_, w1_;
    Complex c_;
};

/// Throws DomainError when a1 == a2 or m(w1,w2) > m(a1,a2) (beyond roundoff).
TwoPointPick two_point_pick(UnitDiskPoint a1, UnitDiskPoint a2, UnitDiskPoint w1, UnitDiskPoint w2);

enum class SolutionKind { Extremal, Slack };

/// f = outer o core o inner with inner the normalizing automorphism tau,
/// core an extremal function for the reduced nodes and outer a two-point
/// Pick map.
class InterpolationSolution {
public:
    InterpolationSolution(DiskAutomorphism inner, BlaschkeProduct core, TwoPointPick outer,
                          SolutionKind kind);

    Complex operator()(Complex zeta) const;
    /// Analytic derivative through the chain rule.
    Complex derivative(Complex zeta) const;

    const DiskAutomorphism& inner() const noexcept { return inner_; }
    const BlaschkeProduct& core() const noexcept { return core_; }
    const TwoPointPick& outer() const noexcept { return outer_; }
    SolutionKind kind() const noexcept { return kind_; }

    /// Blaschke order of f for extremal solutions (2 or 3), nothing otherwise.
    std::optional<std::size_t> order() const;

private:
    DiskAutomorphism inner_;
    BlaschkeProduct core_;
    TwoPointPick outer_;
    SolutionKind kind_;
};

struct ExtremalClassification {
    std::size_t order = 0;
    Complex alpha0;
    bool unique = true;
    DiskAutomorphism psi;  ///< f = psi o (core) o tau
};

/// The automorphism tau(zeta) = (zeta - z3)/(1 - conj(z3) zeta).
DiskAutomorphism normalizing_map(UnitDiskPoint z3);

Feasibility feasible(const MixedProblem& problem);

/// Throws InfeasibleError carrying the margin when rho(w1,w2) exceeds c_M.
InterpolationSolution solve(const MixedProblem& problem);

/// Throws DomainError when the instance is not extremal.
ExtremalClassification extremal_classify(const MixedProblem& problem);

}  // namespace neile
