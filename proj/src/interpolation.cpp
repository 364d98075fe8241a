#include "neile/interpolation.hpp"

#include <cmath>

#include "neile/errors.hpp"

namespace neile {

namespace {

Complex phi_raw(Complex a, Complex z) { return (a - z) / (1.0 - std::conj(a) * z); }

Complex dphi_raw(Complex a, Complex z) {
    const Complex den = 1.0 - std::conj(a) * z;
    return (std::norm(a) - 1.0) / (den * den);
}

// Builds the Pick map; `snap` forces |c| = 1 for extremal data.
TwoPointPick make_pick(UnitDiskPoint a1, UnitDiskPoint a2, UnitDiskPoint w1, UnitDiskPoint w2,
                       bool snap) {
    if (a1.value() == a2.value()) throw DomainError("two-point Pick nodes must be distinct");
    const Complex num = phi_raw(w1, w2);
    const Complex den = phi_raw(a1, a2);
    Complex c = num / den;
    const double modulus = std::abs(c);
    if (modulus > 1.0 + 1e-9) {
        throw DomainError("Schwarz-Pick violation: targets are farther apart than the nodes");
    }
    if ((snap || modulus > 1.0) && modulus > 0.0) c /= modulus;
    return TwoPointPick(a1, w1, c);
}

}  // namespace

MixedProblem::MixedProblem(UnitDiskPoint z1_, UnitDiskPoint z2_, UnitDiskPoint z3_,
                           UnitDiskPoint w1_, UnitDiskPoint w2_)
    : z1(z1_), z2(z2_), z3(z3_), w1(w1_), w2(w2_) {
    if (z1.value() == z2.value() || z1.value() == z3.value() || z2.value() == z3.value()) {
        throw DomainError("interpolation nodes z1, z2, z3 must be pairwise distinct");
    }
}

Complex TwoPointPick::operator()(Complex zeta) const {
    return phi_raw(w1_, c_ * phi_raw(a1_, zeta));
}

Complex TwoPointPick::derivative(Complex zeta) const {
    const Complex inner = c_ * phi_raw(a1_, zeta);
    return dphi_raw(w1_, inner) * c_ * dphi_raw(a1_, zeta);
}

bool TwoPointPick::is_automorphism() const noexcept {
    return std::abs(std::abs(c_) - 1.0) <= 1e-12;
}

DiskAutomorphism TwoPointPick::as_automorphism() const {
    if (!is_automorphism()) throw DomainError("Pick map is not an automorphism");
    const Complex zero = phi_raw(a1_, w1_.value() / c_);
    const Complex probe = zero == Complex(0.0) ? Complex(0.5) : Complex(0.0);
    Complex mu = (*this)(probe) / phi_raw(zero, probe);
    mu /= std::abs(mu);
    return DiskAutomorphism(mu, UnitDiskPoint(zero));
}

TwoPointPick two_point_pick(UnitDiskPoint a1, UnitDiskPoint a2, UnitDiskPoint w1, UnitDiskPoint w2) {
    return make_pick(a1, a2, w1, w2, false);
}

InterpolationSolution::InterpolationSolution(DiskAutomorphism inner, BlaschkeProduct core,
                                             TwoPointPick outer, SolutionKind kind)
    : inner_(inner), core_(std::move(core)), outer_(outer), kind_(kind) {}

Complex InterpolationSolution::operator()(Complex zeta) const {
    return outer_(core_(inner_(zeta)));
}

Complex InterpolationSolution::derivative(Complex zeta) const {
    const Complex t = inner_(zeta);
    const Complex g = core_(t);
    return outer_.derivative(g) * core_.derivative(t) * inner_.derivative(zeta);
}

std::optional<std::size_t> InterpolationSolution::order() const {
    if (kind_ != SolutionKind::Extremal) return std::nullopt;
    return core_.order();
}

DiskAutomorphism normalizing_map(UnitDiskPoint z3) { return DiskAutomorphism(-1.0, z3); }

Feasibility feasible(const MixedProblem& problem) {
    const DiskAutomorphism tau = normalizing_map(problem.z3);
    const UnitDiskPoint a1(tau(problem.z1)), a2(tau(problem.z2));
    Feasibility out;
    out.caratheodory = std::atanh(caratheodory_mobius(a1, a2));
    out.target_distance = poincare_distance(problem.w1, problem.w2);
    out.margin = out.caratheodory - out.target_distance;
    out.feasible = out.margin >= -kExtremalTolerance;
    return out;
}

InterpolationSolution solve(const MixedProblem& problem) {
    const Feasibility f = feasible(problem);
    if (!f.feasible) {
        throw InfeasibleError("mixed interpolation problem is infeasible", f.margin);
    }
    const bool extremal = std::abs(f.margin) <= kExtremalTolerance;
    const DiskAutomorphism tau = normalizing_map(problem.z3);
    const UnitDiskPoint a1(tau(problem.z1)), a2(tau(problem.z2));
    BlaschkeProduct core = extremal_function(a1, a2);
    const UnitDiskPoint g1(core(a1)), g2(core(a2));
    TwoPointPick outer = make_pick(g1, g2, problem.w1, problem.w2, extremal);
    return InterpolationSolution(tau, std::move(core), outer,
                                 extremal ? SolutionKind::Extremal : SolutionKind::Slack);
}

ExtremalClassification extremal_classify(const MixedProblem& problem) {
    const Feasibility f = feasible(problem);
    if (std::abs(f.margin) > kExtremalTolerance) {
        throw DomainError("instance is not extremal (margin " + std::to_string(f.margin) + ")");
    }
    const InterpolationSolution s = solve(problem);
    const DiskAutomorphism tau = normalizing_map(problem.z3);
    const ExtremalData e = extremal_parameters(UnitDiskPoint(tau(problem.z1)),
                                               UnitDiskPoint(tau(problem.z2)));
    ExtremalClassification out;
    out.order = s.core().order();
    out.alpha0 = e.alpha0;
    out.unique = true;
    out.psi = s.outer().as_automorphism();
    return out;
}

}  // namespace neile
