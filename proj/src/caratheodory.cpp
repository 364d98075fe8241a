#include "neile/caratheodory.hpp"

#include <cmath>

#include "neile/errors.hpp"

namespace neile {

namespace {

double m_raw(Complex a, Complex b) { return std::abs((a - b) / (1.0 - std::conj(a) * b)); }

Complex phi_raw(Complex a, Complex z) { return (a - z) / (1.0 - std::conj(a) * z); }

void require_nonzero(Complex lambda, Complex delta) {
    if (lambda == Complex(0.0) || delta == Complex(0.0)) {
        throw DomainError("extremal parameters are undefined at the origin");
    }
}

}  // namespace

const char* to_string(Regime r) noexcept {
    return r == Regime::Interior ? "interior" : "boundary";
}

ExtremalData extremal_parameters(UnitDiskPoint lambda, UnitDiskPoint delta) {
    const Complex l = lambda, d = delta;
    require_nonzero(l, d);
    const Complex il = 1.0 / std::conj(l), id = 1.0 / std::conj(d);

    ExtremalData out;
    out.alpha0 = 0.5 * (il + l + id + d);
    out.beta1 = 0.5 * (il - l - id + d);
    out.beta2 = 0.5 * (il - l + id - d);
    out.regime = std::abs(out.alpha0) >= 1.0 - kRegimeGuard ? Regime::Boundary : Regime::Interior;

    if (out.regime == Regime::Interior) {
        out.extremal_alpha = ClosedDiskPoint(out.alpha0);
    } else {
        out.extremal_alpha = ClosedDiskPoint(1.0);
    }

    if (l == d) {
        out.mobius_value = 0.0;
    } else if (out.regime == Regime::Boundary) {
        out.mobius_value = m_raw(l * l, d * d);
    } else {
        out.mobius_value =
            m_raw(l, d) * (1.0 + std::norm(out.beta2)) / (1.0 + std::norm(out.beta1));
    }
    out.distance = std::atanh(out.mobius_value);
    return out;
}

double F_eval(ClosedDiskPoint alpha, UnitDiskPoint lambda, UnitDiskPoint delta) {
    const Complex a = alpha, l = lambda, d = delta;
    require_nonzero(l, d);
    return m_raw(l * l * phi_raw(a, l), d * d * phi_raw(a, d));
}

double F_form1(ClosedDiskPoint alpha, UnitDiskPoint lambda, UnitDiskPoint delta) {
    const Complex a = alpha, l = lambda, d = delta;
    require_nonzero(l, d);
    const Complex ab = std::conj(a), db = std::conj(d);
    const double slack = 1.0 - std::norm(a);
    const Complex num = (l + d) * (a + l * d * ab - l - d) + l * d * slack;
    const Complex den = (1.0 + l * db) * (1.0 + l * db - ab * l - a * db) - l * db * slack;
    return m_raw(l, d) * std::abs(num / den);
}

double F_form2(ClosedDiskPoint alpha, UnitDiskPoint lambda, UnitDiskPoint delta) {
    const Complex a = alpha;
    const ExtremalData e = extremal_parameters(lambda, delta);
    const Complex s = a - e.alpha0;
    const Complex num = 1.0 - (std::conj(s) - std::conj(e.beta2)) * (s + e.beta2);
    const Complex den = 1.0 - (std::conj(s) - std::conj(e.beta1)) * (s + e.beta1);
    return m_raw(lambda, delta) * std::abs(num / den);
}

double G_k(Complex z, Complex beta) {
    return 1.0 + 2.0 * std::norm(beta) - 2.0 * std::norm(z) + std::norm(z * z - beta * beta);
}

double G_eval(Complex z, UnitDiskPoint lambda, UnitDiskPoint delta) {
    const ExtremalData e = extremal_parameters(lambda, delta);
    return G_k(z, e.beta2) / G_k(z, e.beta1);
}

double caratheodory_mobius(UnitDiskPoint lambda, UnitDiskPoint delta) {
    const Complex l = lambda, d = delta;
    if (l == Complex(0.0)) return std::norm(d);
    if (d == Complex(0.0)) return std::norm(l);
    if (l == d) return 0.0;
    return extremal_parameters(lambda, delta).mobius_value;
}

double caratheodory_mobius_direct(UnitDiskPoint lambda, UnitDiskPoint delta) {
    const Complex l = lambda, d = delta;
    if (l == Complex(0.0)) return std::norm(d);
    if (d == Complex(0.0)) return std::norm(l);
    if (l == d) return 0.0;
    const ExtremalData e = extremal_parameters(lambda, delta);
    if (e.regime == Regime::Boundary) return m_raw(l * l, d * d);
    return m_raw(l * l * phi_raw(e.alpha0, l), d * d * phi_raw(e.alpha0, d));
}

double caratheodory_distance(const NeilePoint& x, const NeilePoint& y) {
    return std::atanh(caratheodory_mobius(uniformize(x), uniformize(y)));
}

BlaschkeProduct extremal_function(UnitDiskPoint lambda, UnitDiskPoint delta) {
    const Complex l = lambda, d = delta;
    require_nonzero(l, d);
    if (l == d) throw DomainError("extremal function needs distinct points");
    const ExtremalData e = extremal_parameters(lambda, delta);
    if (e.regime == Regime::Interior) {
        return BlaschkeProduct(1.0, {UnitDiskPoint(0.0), UnitDiskPoint(0.0), UnitDiskPoint(e.alpha0)});
    }
    return BlaschkeProduct(1.0, {UnitDiskPoint(0.0), UnitDiskPoint(0.0)});
}

double caratheodory_metric(const TangentVector& v) {
    const NeilePoint& x = v.base();
    if (x.is_origin()) {
        const double a1 = std::abs(v.v1()), a2 = std::abs(v.v2());
        if (a2 >= 2.0 * a1) return a2;
        return (4.0 * a1 * a1 + a2 * a2) / (4.0 * a1);
    }
    const double b = std::abs(x.w());
    return 2.0 * b / (1.0 - b * b) * std::abs(v.multiple());
}

double caratheodory_metric(const NeilePoint& x, Complex v1, Complex v2) {
    return caratheodory_metric(TangentVector(x, v1, v2));
}

}  // namespace neile
