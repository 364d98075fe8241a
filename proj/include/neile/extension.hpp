#pragma once

// Bounded extension of functions on the Neile parabola to the bidisk.
//
// For f on M with f(0,0) = 0 write f(p(l)) = l^2 h(l) with |h| <= 1. Then
//
//     2 - f(x) conj(f(y)) = Gamma(x,y) (1 - x1 conj(y1)) + Delta(x,y) (1 - x2 conj(y2))
//
// with Gamma = 1 and
//
//     Delta(x,y) = 1 + x2 conj(y2) (1 - h(l) conj(h(d)))/(1 - l conj(d))
//                    + x1 conj(y1) h(l) conj(h(d)) / (1 - x2 conj(y2)),
//
// l = q(x), d = q(y). Both kernels are positive semi-definite, so f/sqrt(2)
// satisfies the bidisk Pick condition and a lurking-isometry colligation
// realizes an extension of sup norm at most sqrt(2).

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "neile/hyperbolic.hpp"
#include "neile/neile_geometry.hpp"

namespace neile {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Delta(x, y) for the core factor h.
Complex delta_kernel(const NeilePoint& x, const NeilePoint& y, const DiskFunction& h);

/// Delta in the uniformizing parameters, written through the values
/// F(l) = l^2 h(l) and F(d) so that no division by l or d occurs.
Complex delta_kernel_values(Complex lambda, Complex delta, Complex f_lambda, Complex f_delta);

struct KernelDecomposition {
    std::vector<NeilePoint> points;
    std::vector<Complex> values;  ///< f at the points
    ComplexMatrix gamma;          ///< all ones
    ComplexMatrix delta;
    /// The two non-constant summands of delta: x2 conj(y2) times the Pick
    /// kernel of h, and x1 conj(y1) h conj(h) times the Szego kernel in x2.
    ComplexMatrix delta_pick_term;
    ComplexMatrix delta_szego_term;

    /// max |2 - f_i conj(f_j) - Gamma_ij (1 - x1 conj(y1)) - Delta_ij (1 - x2 conj(y2))|.
    double identity_residual() const;
};

/// Requires f(0,0) = 0; use extend_general otherwise.
KernelDecomposition kernel_matrices(const std::vector<NeilePoint>& points, const FlatOriginFunction& f);

struct PsdResult {
    double min_eigenvalue = 0.0;
    bool pass = false;
};

/// Smallest eigenvalue of a Hermitian matrix; passes iff it is at least
/// -tol * max(1, max diagonal). Non-Hermitian input throws DomainError.
PsdResult psd_check(const ComplexMatrix& matrix, double tol);

struct RealizationOptions {
    /// Taylor coefficients 0..origin_jet_order of f o p at the origin are
    /// added to the interpolation data (-1 disables). Order 3 pins both first
    /// partial derivatives of the extension at the origin.
    int origin_jet_order = 3;
    /// Radius and node count of the circle quadrature for the jet functionals.
    double jet_radius = 0.5;
    int jet_nodes = 64;
};

struct RealizationDiagnostics {
    double gram_defect = 0.0;           ///< max |<u_a,u_b> - <v_a,v_b>|
    double interpolation_residual = 0.0;///< max |G(x_i) - f(x_i)| over the points
    double colligation_norm = 0.0;
    double psd_min_eigenvalue = 0.0;    ///< of the (augmented) Delta matrix
};

/// G(z,w) = offset + scale (D + C E (I - A E)^{-1} B), E = diag(z I_n1, w I_n2).
class TransferRealization {
public:
    TransferRealization(ComplexMatrix a, ComplexVector b, Eigen::RowVectorXcd c, Complex d,
                        int n1, int n2, double scale, Complex offset = 0.0);

    Complex operator()(Complex z, Complex w) const;

    const ComplexMatrix& A() const noexcept { return a_; }
    const ComplexVector& B() const noexcept { return b_; }
    const Eigen::RowVectorXcd& C() const noexcept { return c_; }
    Complex D() const noexcept { return d_; }
    int n1() const noexcept { return n1_; }
    int n2() const noexcept { return n2_; }
    double scale() const noexcept { return scale_; }
    Complex offset() const noexcept { return offset_; }
    /// scale + |offset|, the sup-norm bound guaranteed by the contraction.
    double bound() const noexcept { return scale_ + std::abs(offset_); }

    ComplexMatrix colligation() const;
    double colligation_norm() const;

    RealizationDiagnostics diagnostics;

private:
    ComplexMatrix a_;
    ComplexVector b_;
    Eigen::RowVectorXcd c_;
    Complex d_;
    int n1_, n2_;
    double scale_;
    Complex offset_;
};

/// Lurking-isometry realization of an extension of f (f(0,0) = 0) with
/// |G| <= sqrt(2) on the bidisk and G = f at the points.
TransferRealization realize_extension(const std::vector<NeilePoint>& points,
                                      const FlatOriginFunction& f,
                                      const RealizationOptions& options = {});

/// Extension of an arbitrary f through (f - f(0,0))/2; |G| <= 2 sqrt(2) + |f(0,0)|.
TransferRealization extend_general(const std::vector<NeilePoint>& points,
                                   const FlatOriginFunction& f,
                                   const RealizationOptions& options = {});

enum class CertificateKind { UpperSqrt2, UpperGeneral, Lower54 };

const char* to_string(CertificateKind k) noexcept;

struct ExtensionCertificate {
    CertificateKind kind = CertificateKind::Lower54;
    double bound = 0.0;
    Complex partial_z;  ///< forced first partial in z at the origin
    Complex partial_w;  ///< forced first partial in w at the origin
    std::string witness;
};

/// The function with g(p(l)) = l^2 (0.5 - l)/(1 - 0.5 l).
FlatOriginFunction lower_bound_function();

/// Every extension G of lower_bound_function() has partials (-0.75, 0.5) at
/// the origin; the bidisk Schwarz lemma then forces sup |G| >= 5/4.
ExtensionCertificate lower_bound_certificate();

struct SchwarzCheck {
    Complex partial_z;
    Complex partial_w;
    double sum = 0.0;
    bool pass = false;
};

using BidiskFunction = std::function<Complex(Complex, Complex)>;

/// |dG/dz(0,0)| + |dG/dw(0,0)| <= R + 1e-4 by central differences (step 1e-5).
/// Throws DomainError unless |G(0,0)| <= 1e-8.
SchwarzCheck schwarz_bidisk_check(const BidiskFunction& g, double radius);

/// Largest |G| over `count` seeded bidisk samples; a fixed share of the
/// samples sits on shells of radius 0.999 and closer to the torus.
double sampled_sup(const BidiskFunction& g, int count, std::uint64_t seed);

}  // namespace neile
