#include "quermass/section.hpp"

#include <cmath>

namespace quermass {

Section::Section(StarBody body, Direction pole, double offset)
    : body_(std::move(body)), pole_(std::move(pole)), t_(offset), frame_(equator_frame(pole_)) {
    if (body_.dim() != pole_.dim()) throw InputError("Section: body/pole dimension mismatch");
    const double t0 = body_.offset_bound().t0;
    if (std::abs(t_) >= t0)
        throw GeometryError("Section: offset " + std::to_string(t_) +
                            " outside the admissible band (-t0, t0), t0 = " + std::to_string(t0));
}

ChartFrame chart_frame(const Section& section, const Direction& eta) {
    const int d = section.body().dim();
    std::vector<Vec> basis;
    basis.reserve(d - 2);
    for (const Vec& b : section.frame().basis) {
        Vec v = b - b.dot(eta.vec()) * eta.vec();
        for (const Vec& prev : basis) v -= v.dot(prev) * prev;
        const double n = v.norm();
        if (n < 1e-8) continue;  // the frame vector closest to eta drops out
        basis.push_back(v / n);
        if (static_cast<int>(basis.size()) == d - 2) break;
    }
    if (static_cast<int>(basis.size()) != d - 2)
        throw GeometryError("chart_frame: failed to build tangent basis");
    return ChartFrame{eta, std::move(basis)};
}

namespace {

// g(r) = |r eta + t xi| - rho(direction); strictly increasing in r for
// bodies star-shaped about t*xi, with a unique positive root.
struct RadialEquation {
    const StarBody& body;
    const Vec& eta;
    const Vec& pole;
    double t;

    double value(double r) const {
        const Vec x = r * eta + t * pole;
        const double s = x.norm();
        return s - body.radial(x / s);
    }
    double derivative(double r) const {
        const Vec x = r * eta + t * pole;
        const double s = x.norm();
        const Vec omega = x / s;
        // d omega / dr is tangent to the sphere, so the ambient gradient of
        // any extension of rho gives the correct directional derivative.
        const Vec domega = eta / s - x * (r / (s * s * s));
        return r / s - body.radial_ambient_gradient(omega).dot(domega);
    }
};

}  // namespace

double section_radial(const Section& section, const Direction& eta) {
    if (std::abs(eta.vec().dot(section.pole().vec())) > 1e-9)
        throw InputError("section_radial: eta not orthogonal to pole");
    const RadialEquation eq{section.body(), eta.vec(), section.pole().vec(), section.offset()};

    double lo = 1e-9;
    double hi = section.body().max_radial() + std::abs(section.offset()) + 1e-6;
    double flo = eq.value(lo), fhi = eq.value(hi);
    if (flo > 0.0 || fhi < 0.0)
        throw GeometryError("section_radial: root not bracketed; body invalid at this direction");

    // Bisection to 1e-6, then Newton polish to residual 1e-12.
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (eq.value(mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double r = 0.5 * (lo + hi);
    for (int it = 0; it < 60; ++it) {
        const double f = eq.value(r);
        if (std::abs(f) < 1e-13) break;
        const double df = eq.derivative(r);
        double step = f / df;
        double next = r - step;
        if (!(next > 0.0) || !std::isfinite(next)) {
            next = 0.5 * (lo + hi);  // fall back into the bracket
        }
        if (eq.value(next) <= 0.0)
            lo = next;
        else
            hi = next;
        r = next;
    }
    if (std::abs(eq.value(r)) > 1e-12)
        throw GeometryError("section_radial: residual tolerance not reached");
    return r;
}

Direction section_normal(const Section& section, const Direction& eta) {
    const ChartFrame chart = chart_frame(section, eta);
    const double h = section.fd_steps().first;
    const double r0 = section_radial(section, eta);

    // n is proportional to eta - grad(r)/r, with grad(r) taken on the
    // equator sphere via central differences in the exponential chart.
    Vec grad = Vec::Zero(eta.dim());
    for (const Vec& tangent : chart.tangent_basis) {
        const double rp = section_radial(section, Direction(sphere_exp(eta.vec(), h * tangent)));
        const double rm = section_radial(section, Direction(sphere_exp(eta.vec(), -h * tangent)));
        grad += ((rp - rm) / (2.0 * h)) * tangent;
    }
    Vec n = eta.vec() - grad / r0;
    n /= n.norm();
    if (n.dot(eta.vec()) <= 0.0)
        throw GeometryError("section_normal: normal not outward, body not star-shaped about t*pole");
    return Direction(std::move(n));
}

std::vector<double> section_principal_curvatures(const Section& section, const Direction& eta) {
    const int d = section.body().dim();
    if (d < 3) throw InputError("section_principal_curvatures: requires d >= 3");
    const ChartFrame chart = chart_frame(section, eta);
    const int m = d - 2;
    const double h2 = section.fd_steps().second;
    const double h1 = section.fd_steps().first;
    const Vec n = section_normal(section, eta).vec();

    // Boundary point of the section over chart coordinates u; the constant
    // t*pole component drops out of all derivatives.
    auto embed = [&](const Vec& u) -> Vec {
        Vec w = Vec::Zero(d);
        for (int a = 0; a < m; ++a) w += u[a] * chart.tangent_basis[a];
        const Direction dir(sphere_exp(eta.vec(), w));
        return section_radial(section, dir) * dir.vec();
    };

    const Vec x0 = embed(Vec::Zero(m));
    Eigen::MatrixXd hmat(m, m), gmat(m, m);
    std::vector<Vec> first(m);
    for (int a = 0; a < m; ++a) {
        Vec ua = Vec::Zero(m);
        ua[a] = h1;
        first[a] = (embed(ua) - embed(-ua)) / (2.0 * h1);
    }
    for (int a = 0; a < m; ++a) {
        Vec ua = Vec::Zero(m);
        ua[a] = h2;
        hmat(a, a) = -((embed(ua) - 2.0 * x0 + embed(-ua)) / (h2 * h2)).dot(n);
        for (int b = a + 1; b < m; ++b) {
            Vec ub = Vec::Zero(m);
            ub[b] = h2;
            const double v = -((embed(ua + ub) - embed(ua - ub) - embed(-ua + ub) +
                                embed(-(ua + ub))) /
                               (4.0 * h2 * h2))
                                  .dot(n);
            hmat(a, b) = hmat(b, a) = v;
        }
        for (int b = 0; b <= a; ++b) gmat(a, b) = gmat(b, a) = first[a].dot(first[b]);
    }

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(hmat, gmat);
    if (solver.info() != Eigen::Success)
        throw GeometryError("section_principal_curvatures: eigensolver failed");
    std::vector<double> kappas(solver.eigenvalues().data(), solver.eigenvalues().data() + m);
    for (double k : kappas)
        if (!std::isfinite(k))
            throw GeometryError("section_principal_curvatures: non-finite curvature estimate");
    return kappas;
}

}  // namespace quermass
