#include "quermass/body.hpp"

#include <algorithm>
#include <cmath>

namespace quermass {

namespace {
constexpr int kPositivitySamples = 10000;
}

StarBody StarBody::ball(int dim, double radius) {
    if (radius <= 0.0) throw InputError("ball: radius must be positive");
    StarBody b;
    b.dim_ = dim;
    b.kind_ = "ball";
    b.radius_ = radius;
    b.min_rho_ = b.max_rho_ = radius;
    if (dim < kMinDim || dim > kMaxDim) throw InputError("ball: dimension outside [2,6]");
    return b;
}

StarBody StarBody::ellipsoid(const Vec& semiaxes) {
    StarBody b;
    b.dim_ = static_cast<int>(semiaxes.size());
    if (b.dim_ < kMinDim || b.dim_ > kMaxDim) throw InputError("ellipsoid: dimension outside [2,6]");
    if (semiaxes.minCoeff() <= 0.0) throw InputError("ellipsoid: semiaxes must be positive");
    b.kind_ = "ellipsoid";
    b.semiaxes_ = semiaxes;
    b.min_rho_ = semiaxes.minCoeff();
    b.max_rho_ = semiaxes.maxCoeff();
    return b;
}

StarBody StarBody::shifted_ball(const Vec& center, double radius) {
    StarBody b;
    b.dim_ = static_cast<int>(center.size());
    if (b.dim_ < kMinDim || b.dim_ > kMaxDim)
        throw InputError("shifted_ball: dimension outside [2,6]");
    if (radius <= 0.0) throw InputError("shifted_ball: radius must be positive");
    if (center.norm() >= radius)
        throw GeometryError("shifted_ball: origin not interior (|center| >= radius)");
    b.kind_ = "shifted-ball";
    b.center_ = center;
    b.radius_ = radius;
    b.min_rho_ = radius - center.norm();
    b.max_rho_ = radius + center.norm();
    return b;
}

StarBody StarBody::perturbed(const Polynomial& epsilon, double lambda) {
    StarBody b;
    b.dim_ = epsilon.dim();
    if (b.dim_ < kMinDim || b.dim_ > kMaxDim) throw InputError("perturbed: dimension outside [2,6]");
    b.kind_ = "perturbed";
    b.epsilon_ = epsilon;
    b.lambda_ = lambda;
    double lo = 1e300, hi = -1e300;
    for (const Direction& w : direction_grid(b.dim_, kPositivitySamples)) {
        const double v = 1.0 + lambda * epsilon.eval(w.vec());
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo <= 0.0)
        throw GeometryError("perturbed: radial function non-positive on the sampled sphere");
    b.min_rho_ = lo;
    b.max_rho_ = hi;
    return b;
}

double StarBody::radial(const Vec& omega) const {
    double v;
    if (kind_ == "ball") {
        v = radius_;
    } else if (kind_ == "ellipsoid") {
        double q = 0.0;
        for (int i = 0; i < dim_; ++i) q += omega[i] * omega[i] / (semiaxes_[i] * semiaxes_[i]);
        v = 1.0 / std::sqrt(q);
    } else if (kind_ == "shifted-ball") {
        const double s = omega.dot(center_);
        v = s + std::sqrt(radius_ * radius_ - center_.squaredNorm() + s * s);
    } else {
        v = 1.0 + lambda_ * epsilon_->eval(omega);
    }
    if (!(v > 0.0)) throw GeometryError("StarBody::radial: non-positive radial value");
    return v;
}

Vec StarBody::radial_ambient_gradient(const Vec& omega) const {
    if (kind_ == "ball") return Vec::Zero(dim_);
    if (kind_ == "ellipsoid") {
        double q = 0.0;
        for (int i = 0; i < dim_; ++i) q += omega[i] * omega[i] / (semiaxes_[i] * semiaxes_[i]);
        Vec g(dim_);
        const double f = -std::pow(q, -1.5);
        for (int i = 0; i < dim_; ++i) g[i] = f * omega[i] / (semiaxes_[i] * semiaxes_[i]);
        return g;
    }
    if (kind_ == "shifted-ball") {
        const double s = omega.dot(center_);
        const double root = std::sqrt(radius_ * radius_ - center_.squaredNorm() + s * s);
        return (1.0 + s / root) * center_;
    }
    return lambda_ * epsilon_->gradient(omega);
}

StarBody PerturbationFamily::body_at(double lambda) const {
    if (lambda < 0.0 || lambda > lambda_max)
        throw InputError("PerturbationFamily: lambda outside [0, lambda_max]");
    return StarBody::perturbed(epsilon, lambda);
}

PerturbationFamily make_family(const Polynomial& epsilon, double lambda_max) {
    if (lambda_max <= 0.0) throw InputError("make_family: lambda_max must be positive");
    StarBody::perturbed(epsilon, lambda_max);  // positivity holds on [0, lambda_max] by linearity
    return PerturbationFamily{epsilon, lambda_max};
}

StarBody make_perturbed_body(const PerturbationFamily& family, double lambda) {
    return family.body_at(lambda);
}

std::vector<double> boundary_principal_curvatures(const StarBody& body, const Direction& omega) {
    const int d = body.dim();
    const std::vector<Vec> tangents = equator_frame(omega).basis;
    const int m = d - 1;

    const double rho = body.radial(omega.vec());
    const Vec grad = body.radial_ambient_gradient(omega.vec());
    Vec tgrad = Vec::Zero(d);
    for (const Vec& tb : tangents) tgrad += grad.dot(tb) * tb;
    Vec n = omega.vec() - tgrad / rho;
    n /= n.norm();

    auto embed = [&](const Vec& u) -> Vec {
        Vec w = Vec::Zero(d);
        for (int a = 0; a < m; ++a) w += u[a] * tangents[a];
        const Vec dir = sphere_exp(omega.vec(), w);
        return body.radial(dir) * dir;
    };

    const double h = 1e-4;
    const Vec x0 = embed(Vec::Zero(m));
    Eigen::MatrixXd hmat(m, m), gmat(m, m);
    for (int a = 0; a < m; ++a) {
        Vec ua = Vec::Zero(m);
        ua[a] = h;
        const Vec xp = embed(ua), xm = embed(-ua);
        hmat(a, a) = -((xp - 2.0 * x0 + xm) / (h * h)).dot(n);
        for (int b = a + 1; b < m; ++b) {
            Vec ub = Vec::Zero(m);
            ub[b] = h;
            const Vec xpp = embed(ua + ub), xpm = embed(ua - ub);
            const Vec xmp = embed(-ua + ub), xmm = embed(-(ua + ub));
            const double v = -((xpp - xpm - xmp + xmm) / (4.0 * h * h)).dot(n);
            hmat(a, b) = hmat(b, a) = v;
        }
    }
    // First fundamental form is analytic: X_a = (D_a rho) omega + rho T_a.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            gmat(a, b) = grad.dot(tangents[a]) * grad.dot(tangents[b]) +
                         (a == b ? rho * rho : 0.0);

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(hmat, gmat);
    if (solver.info() != Eigen::Success)
        throw GeometryError("boundary_principal_curvatures: eigensolver failed");
    std::vector<double> kappas(solver.eigenvalues().data(), solver.eigenvalues().data() + m);
    for (double k : kappas)
        if (!std::isfinite(k))
            throw GeometryError("boundary_principal_curvatures: non-finite curvature");
    return kappas;
}

ConvexityReport convexity_check(const StarBody& body, int sample_order) {
    double min_kappa = 1e300;
    for (const Direction& w : direction_grid(body.dim(), sample_order)) {
        for (double k : boundary_principal_curvatures(body, w)) min_kappa = std::min(min_kappa, k);
    }
    return ConvexityReport{min_kappa > 0.0, min_kappa};
}

}  // namespace quermass
