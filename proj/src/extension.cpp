#include "neile/extension.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "neile/errors.hpp"
#include "neile/random.hpp"

namespace neile {

namespace {

using ScalarFunction = std::function<Complex(Complex)>;

// Eigenvalues in [-kClip * scale, 0) are treated as roundoff and set to zero.
constexpr double kClip = 1e-10;
// Eigen-components below this fraction of the largest eigenvalue are dropped
// from the Gram factor.
constexpr double kRankCut = 1e-14;
constexpr double kGramDefectLimit = 1e-6;

Complex ipow(Complex z, int k) {
    Complex out = 1.0;
    for (int i = 0; i < k; ++i) out *= z;
    return out;
}

double max_abs_diagonal(const ComplexMatrix& m) {
    double out = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) out = std::max(out, std::abs(m(i, i)));
    return out;
}

// Returns X with X^* X = H; column a of X is the feature vector of node a.
ComplexMatrix gram_factor(const ComplexMatrix& h) {
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
    const Eigen::VectorXd& values = eig.eigenvalues();
    const double scale = std::max(1.0, max_abs_diagonal(h));
    if (values.size() > 0 && values(0) < -kClip * scale) {
        throw NumericalError("kernel matrix is not positive semi-definite (min eigenvalue " +
                             std::to_string(values(0)) + ")");
    }
    const double top = values.size() > 0 ? values(values.size() - 1) : 0.0;
    std::vector<Eigen::Index> kept;
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        if (values(k) > kRankCut * top && values(k) > 0.0) kept.push_back(k);
    }
    ComplexMatrix x(static_cast<Eigen::Index>(kept.size()), h.cols());
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
        const Eigen::Index k = kept[static_cast<std::size_t>(r)];
        x.row(r) = std::sqrt(values(k)) * eig.eigenvectors().col(k).transpose();
    }
    return x;
}

// A linear functional on functions of the uniformizing parameter, applied by
// quadrature: a point evaluation, a Taylor coefficient at 0, or for points
// near the origin the Taylor remainder
//
//     R_l(g) = (g(l) - sum_{k < J} l^k g_k) / l^J,   J = origin_jet_order + 1.
//
// Near 0 the plain evaluation is almost a combination of the jets, which makes
// the isometry solve ill-conditioned; R_l carries the same information.
enum class FunctionalKind { Point, Jet, Remainder };

struct Functional {
    FunctionalKind kind = FunctionalKind::Point;
    std::vector<Complex> nodes;
    std::vector<Complex> weights;
    int jet = 0;  // Taylor order for Jet
    Complex lambda;
};

std::vector<Functional> build_functionals(const std::vector<NeilePoint>& points,
                                          const RealizationOptions& opt) {
    const int n_jets = std::max(0, opt.origin_jet_order + 1);
    const auto circle = [&opt](int m) {
        return std::polar(opt.jet_radius, 2.0 * std::numbers::pi * m / opt.jet_nodes);
    };
    std::vector<Functional> out;
    for (const auto& p : points) {
        const Complex l = p.lambda();
        if (n_jets == 0 || std::abs(l) >= 0.5 * opt.jet_radius) {
            out.push_back({FunctionalKind::Point, {l}, {Complex(1.0)}, 0, l});
            continue;
        }
        Functional f{FunctionalKind::Remainder, {}, {}, 0, l};
        for (int m = 0; m < opt.jet_nodes; ++m) {
            const Complex zeta = circle(m);
            f.nodes.push_back(zeta);
            f.weights.push_back(1.0 / (ipow(zeta, n_jets - 1) * (zeta - l)) / static_cast<double>(opt.jet_nodes));
        }
        out.push_back(std::move(f));
    }
    for (int k = 0; k < n_jets; ++k) {
        Functional f{FunctionalKind::Jet, {}, {}, k, 0.0};
        for (int m = 0; m < opt.jet_nodes; ++m) {
            const Complex zeta = circle(m);
            f.nodes.push_back(zeta);
            f.weights.push_back(1.0 / ipow(zeta, k) / static_cast<double>(opt.jet_nodes));
        }
        out.push_back(std::move(f));
    }
    return out;
}

TransferRealization realize(const std::vector<NeilePoint>& points, const ScalarFunction& f,
                            double scale, Complex offset, const RealizationOptions& opt) {
    if (std::abs(f(0.0)) > 1e-12) {
        throw DomainError("realization requires a function vanishing at the origin");
    }
    const std::vector<Functional> fn = build_functionals(points, opt);
    const auto n = static_cast<Eigen::Index>(fn.size());

    std::vector<std::vector<Complex>> values(fn.size());
    for (std::size_t a = 0; a < fn.size(); ++a) {
        for (const Complex z : fn[a].nodes) values[a].push_back(f(z));
    }

    ComplexMatrix gamma(n, n), delta(n, n);
    ComplexVector fhat(n);
    for (Eigen::Index a = 0; a < n; ++a) {
        const auto& fa = fn[static_cast<std::size_t>(a)];
        Complex acc = 0.0, mass_a = 0.0;
        for (std::size_t i = 0; i < fa.nodes.size(); ++i) {
            acc += fa.weights[i] * values[static_cast<std::size_t>(a)][i];
            mass_a += fa.weights[i];
        }
        fhat(a) = acc;
        for (Eigen::Index b = a; b < n; ++b) {
            const auto& fb = fn[static_cast<std::size_t>(b)];
            Complex mass_b = 0.0, d = 0.0;
            for (std::size_t j = 0; j < fb.nodes.size(); ++j) mass_b += fb.weights[j];
            for (std::size_t i = 0; i < fa.nodes.size(); ++i) {
                for (std::size_t j = 0; j < fb.nodes.size(); ++j) {
                    d += fa.weights[i] * std::conj(fb.weights[j]) *
                         delta_kernel_values(fa.nodes[i], fb.nodes[j],
                                             values[static_cast<std::size_t>(a)][i],
                                             values[static_cast<std::size_t>(b)][j]);
                }
            }
            gamma(a, b) = 0.5 * mass_a * std::conj(mass_b);
            delta(a, b) = 0.5 * d;
            gamma(b, a) = std::conj(gamma(a, b));
            delta(b, a) = std::conj(delta(a, b));
        }
    }
    for (Eigen::Index a = 0; a < n; ++a) {
        gamma(a, a) = gamma(a, a).real();
        delta(a, a) = delta(a, a).real();
    }

    const ComplexMatrix g = gram_factor(gamma);
    const ComplexMatrix d = gram_factor(delta);
    const Eigen::Index n1 = g.rows(), n2 = d.rows(), dim = n1 + n2 + 1;

    // Column a of U is (x1 g_a, x2 d_a, 1), column a of V is (g_a, d_a, f_a / sqrt 2).
    // For Taylor functionals multiplication by l^s shifts the order; for the
    // remainder, R(l^s g) = l^s R(g) + sum_{J-s <= m < J} l^(m+s-J) g_m.
    ComplexMatrix u = ComplexMatrix::Zero(dim, n), v = ComplexMatrix::Zero(dim, n);
    const int n_jets = std::max(0, opt.origin_jet_order + 1);
    const auto column_of_jet = [&](int order) -> Eigen::Index {
        return static_cast<Eigen::Index>(points.size()) + order;
    };
    const auto shifted = [&](const ComplexMatrix& feat, Eigen::Index a, int s) -> ComplexVector {
        const auto& fa = fn[static_cast<std::size_t>(a)];
        const Complex l = fa.lambda;
        switch (fa.kind) {
            case FunctionalKind::Point: return ipow(l, s) * feat.col(a);
            case FunctionalKind::Jet:
                return fa.jet >= s ? ComplexVector(feat.col(column_of_jet(fa.jet - s)))
                                   : ComplexVector::Zero(feat.rows());
            case FunctionalKind::Remainder: {
                ComplexVector out = ipow(l, s) * feat.col(a);
                for (int m = std::max(0, n_jets - s); m < n_jets; ++m) {
                    out += ipow(l, m + s - n_jets) * feat.col(column_of_jet(m));
                }
                return out;
            }
        }
        return ComplexVector::Zero(feat.rows());
    };
    for (Eigen::Index a = 0; a < n; ++a) {
        const auto& fa = fn[static_cast<std::size_t>(a)];
        u.block(0, a, n1, 1) = shifted(g, a, 3);
        u.block(n1, a, n2, 1) = shifted(d, a, 2);
        switch (fa.kind) {
            case FunctionalKind::Point: u(dim - 1, a) = 1.0; break;
            case FunctionalKind::Jet: u(dim - 1, a) = fa.jet == 0 ? 1.0 : 0.0; break;
            case FunctionalKind::Remainder: u(dim - 1, a) = 0.0; break;
        }
        v.block(0, a, n1, 1) = g.col(a);
        v.block(n1, a, n2, 1) = d.col(a);
        v(dim - 1, a) = fhat(a) / std::numbers::sqrt2;
    }

    const ComplexMatrix gram_gap = u.adjoint() * u - v.adjoint() * v;
    const double defect = gram_gap.cwiseAbs().maxCoeff();
    if (defect > kGramDefectLimit) {
        throw NumericalError("lurking isometry defect " + std::to_string(defect) +
                             " exceeds tolerance");
    }

    // Least-squares map on span(U), zero on its orthogonal complement.
    const Eigen::JacobiSVD<ComplexMatrix> svd_u(u, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd_u.singularValues();
    const double cut = sv.size() > 0 ? 1e-12 * sv(0) : 0.0;
    ComplexMatrix colligation = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) <= cut) break;
        colligation += (v * svd_u.matrixV().col(k) / sv(k)) * svd_u.matrixU().col(k).adjoint();
    }
    // Clip singular values above one so the colligation is a contraction.
    const Eigen::JacobiSVD<ComplexMatrix> svd_c(colligation, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd clipped = svd_c.singularValues().cwiseMin(1.0);
    colligation = svd_c.matrixU() * clipped.asDiagonal() * svd_c.matrixV().adjoint();

    const Eigen::Index s = n1 + n2;
    TransferRealization out(colligation.topLeftCorner(s, s), colligation.topRightCorner(s, 1),
                            colligation.bottomLeftCorner(1, s), colligation(s, s),
                            static_cast<int>(n1), static_cast<int>(n2), scale, offset);
    out.diagnostics.gram_defect = defect;
    out.diagnostics.colligation_norm = out.colligation_norm();
    out.diagnostics.psd_min_eigenvalue =
        n > 0 ? Eigen::SelfAdjointEigenSolver<ComplexMatrix>(2.0 * delta, Eigen::EigenvaluesOnly)
                    .eigenvalues()(0)
              : 0.0;
    return out;
}

double interpolation_residual(const TransferRealization& g, const std::vector<NeilePoint>& points,
                              const FlatOriginFunction& f) {
    double worst = 0.0;
    for (const auto& p : points) {
        worst = std::max(worst, std::abs(g(p.z(), p.w()) - f(p.lambda())));
    }
    return worst;
}

}  // namespace

Complex delta_kernel_values(Complex lambda, Complex delta, Complex f_lambda, Complex f_delta) {
    const Complex s = lambda * std::conj(delta);
    const Complex ff = f_lambda * std::conj(f_delta);
    return 1.0 + (s * s - ff) / (1.0 - s) + s * ff / (1.0 - s * s);
}

Complex delta_kernel(const NeilePoint& x, const NeilePoint& y, const DiskFunction& h) {
    const Complex l = x.lambda(), d = y.lambda();
    return delta_kernel_values(l, d, l * l * h(l), d * d * h(d));
}

double KernelDecomposition::identity_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            const auto a = static_cast<Eigen::Index>(i), b = static_cast<Eigen::Index>(j);
            const NeilePoint &x = points[i], &y = points[j];
            const Complex lhs = 2.0 - values[i] * std::conj(values[j]);
            const Complex rhs = gamma(a, b) * (1.0 - x.z() * std::conj(y.z())) +
                                delta(a, b) * (1.0 - x.w() * std::conj(y.w()));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

KernelDecomposition kernel_matrices(const std::vector<NeilePoint>& points, const FlatOriginFunction& f) {
    if (std::abs(f.at_origin()) > 1e-12) {
        throw DomainError("kernel decomposition requires f(0,0) = 0; use extend_general");
    }
    KernelDecomposition k;
    k.points = points;
    const auto n = static_cast<Eigen::Index>(points.size());
    for (const auto& p : points) k.values.push_back(f(p.lambda()));
    k.gamma = ComplexMatrix::Ones(n, n);
    k.delta.resize(n, n);
    k.delta_pick_term.resize(n, n);
    k.delta_szego_term.resize(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            const Complex l = points[static_cast<std::size_t>(a)].lambda();
            const Complex d = points[static_cast<std::size_t>(b)].lambda();
            const Complex s = l * std::conj(d);
            const Complex ff = k.values[static_cast<std::size_t>(a)] *
                               std::conj(k.values[static_cast<std::size_t>(b)]);
            k.delta_pick_term(a, b) = (s * s - ff) / (1.0 - s);
            k.delta_szego_term(a, b) = s * ff / (1.0 - s * s);
            k.delta(a, b) = 1.0 + k.delta_pick_term(a, b) + k.delta_szego_term(a, b);
        }
    }
    return k;
}

PsdResult psd_check(const ComplexMatrix& matrix, double tol) {
    if (matrix.rows() != matrix.cols()) throw DomainError("PSD check needs a square matrix");
    const double scale = std::max(1.0, max_abs_diagonal(matrix));
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw DomainError("PSD check needs a Hermitian matrix");
    }
    PsdResult r;
    if (matrix.rows() == 0) {
        r.pass = true;
        return r;
    }
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(matrix, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = eig.eigenvalues()(0);
    r.pass = r.min_eigenvalue >= -tol * scale;
    return r;
}

TransferRealization::TransferRealization(ComplexMatrix a, ComplexVector b, Eigen::RowVectorXcd c,
                                         Complex d, int n1, int n2, double scale, Complex offset)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(d), n1_(n1), n2_(n2),
      scale_(scale), offset_(offset) {}

Complex TransferRealization::operator()(Complex z, Complex w) const {
    const Eigen::Index s = a_.rows();
    if (s == 0) return offset_ + scale_ * d_;
    ComplexVector e(s);
    for (Eigen::Index i = 0; i < s; ++i) e(i) = i < n1_ ? z : w;
    const ComplexMatrix m = ComplexMatrix::Identity(s, s) - a_ * e.asDiagonal();
    const ComplexVector x = m.partialPivLu().solve(b_);
    return offset_ + scale_ * (d_ + (c_.transpose().cwiseProduct(e.cwiseProduct(x))).sum());
}

ComplexMatrix TransferRealization::colligation() const {
    const Eigen::Index s = a_.rows();
    ComplexMatrix m(s + 1, s + 1);
    m.topLeftCorner(s, s) = a_;
    m.topRightCorner(s, 1) = b_;
    m.bottomLeftCorner(1, s) = c_;
    m(s, s) = d_;
    return m;
}

double TransferRealization::colligation_norm() const {
    const Eigen::JacobiSVD<ComplexMatrix> svd(colligation());
    return svd.singularValues()(0);
}

TransferRealization realize_extension(const std::vector<NeilePoint>& points,
                                      const FlatOriginFunction& f, const RealizationOptions& options) {
    if (std::abs(f.at_origin()) > 1e-12) {
        throw DomainError("realize_extension requires f(0,0) = 0; use extend_general");
    }
    TransferRealization g = realize(points, [&f](Complex z) { return f(z); },
                                    std::numbers::sqrt2, 0.0, options);
    g.diagnostics.interpolation_residual = interpolation_residual(g, points, f);
    return g;
}

TransferRealization extend_general(const std::vector<NeilePoint>& points,
                                   const FlatOriginFunction& f, const RealizationOptions& options) {
    const Complex c = f.at_origin();
    if (!in_open_disk(c)) throw DomainError("f(0,0) must lie in the open disk");
    TransferRealization g = realize(points, [&f, c](Complex z) { return 0.5 * (f(z) - c); },
                                    2.0 * std::numbers::sqrt2, c, options);
    g.diagnostics.interpolation_residual = interpolation_residual(g, points, f);
    return g;
}

const char* to_string(CertificateKind k) noexcept {
    switch (k) {
        case CertificateKind::UpperSqrt2: return "upper-sqrt2";
        case CertificateKind::UpperGeneral: return "upper-general";
        case CertificateKind::Lower54: return "lower-5/4";
    }
    return "unknown";
}

FlatOriginFunction lower_bound_function() {
    return FlatOriginFunction::blaschke(1.0, {UnitDiskPoint(0.0), UnitDiskPoint(0.0), UnitDiskPoint(0.5)});
}

ExtensionCertificate lower_bound_certificate() {
    const std::vector<Complex> coeffs = lower_bound_function().function().taylor(4);
    ExtensionCertificate cert;
    cert.kind = CertificateKind::Lower54;
    // G(l^3, l^2) = sum c_ij l^(3i+2j): the l^3 coefficient is dG/dz(0,0) and
    // the l^2 coefficient is dG/dw(0,0), for every extension G.
    cert.partial_z = coeffs[3];
    cert.partial_w = coeffs[2];
    cert.bound = std::abs(cert.partial_z) + std::abs(cert.partial_w);
    std::ostringstream os;
    os << "g(p(l)) = l^2 (0.5 - l)/(1 - 0.5 l); dG/dz(0,0) = " << cert.partial_z.real()
       << ", dG/dw(0,0) = " << cert.partial_w.real()
       << "; bidisk Schwarz: |dG/dz| + |dG/dw| <= R forces R >= " << cert.bound;
    cert.witness = os.str();
    return cert;
}

SchwarzCheck schwarz_bidisk_check(const BidiskFunction& g, double radius) {
    if (std::abs(g(0.0, 0.0)) > 1e-8) throw DomainError("Schwarz check needs G(0,0) = 0");
    constexpr double h = 1e-5;
    SchwarzCheck out;
    out.partial_z = (g(h, 0.0) - g(-h, 0.0)) / (2.0 * h);
    out.partial_w = (g(0.0, h) - g(0.0, -h)) / (2.0 * h);
    out.sum = std::abs(out.partial_z) + std::abs(out.partial_w);
    out.pass = out.sum <= radius + 1e-4;
    return out;
}

double sampled_sup(const BidiskFunction& g, int count, std::uint64_t seed) {
    CounterRng rng(seed, 0x5a3b);
    double best = 0.0;
    for (int i = 0; i < count; ++i) {
        Complex z, w;
        switch (i % 4) {
            case 0:
                z = rng.disk(1.0 - 1e-9);
                w = rng.disk(1.0 - 1e-9);
                break;
            case 1:
                z = rng.circle(0.999);
                w = rng.circle(0.999);
                break;
            case 2: {
                const double r1 = 1.0 - std::pow(10.0, -rng.uniform(1.0, 6.0));
                const double r2 = 1.0 - std::pow(10.0, -rng.uniform(1.0, 6.0));
                z = rng.circle(r1);
                w = rng.circle(r2);
                break;
            }
            default:
                z = rng.circle(1.0 - 1e-6);
                w = rng.circle(1.0 - 1e-6);
                break;
        }
        best = std::max(best, std::abs(g(z, w)));
    }
    return best;
}

}  // namespace neile
