#include "quermass/quermass.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace quermass {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double v = 1.0;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

double elementary_symmetric_mean(const std::vector<double>& kappas, int j) {
    const int n = static_cast<int>(kappas.size());
    if (j < 0 || j > n) throw InputError("elementary_symmetric_mean: j outside [0, n]");
    // Coefficients of prod (1 + kappa_i x); e_j is the coefficient of x^j.
    std::vector<double> coeff(n + 1, 0.0);
    coeff[0] = 1.0;
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k >= 1; --k) coeff[k] += kappas[i] * coeff[k - 1];
    return coeff[j] / binomial(n, j);
}

QuermassValue section_volume(const Section& section, int order) {
    const int d = section.body().dim();
    const QuadratureRule rule = equator_quadrature(section.pole(), order);
    const double integral = rule.integrate([&](const Vec& eta) {
        return std::pow(section_radial(section, Direction(eta)), d - 1);
    });
    return QuermassValue{0, integral / (d - 1), "curvature-integral"};
}

QuermassValue surface_area(const Section& section, int order) {
    const int d = section.body().dim();
    const QuadratureRule rule = equator_quadrature(section.pole(), order);
    const double integral = rule.integrate([&](const Vec& eta_vec) {
        const Direction eta(eta_vec);
        const double r = section_radial(section, eta);
        const double cosang = eta_vec.dot(section_normal(section, eta).vec());
        if (cosang <= 0.0) throw GeometryError("surface_area: <eta, n> <= 0 at a node");
        return std::pow(r, d - 2) / cosang;
    });
    return QuermassValue{1, integral, "curvature-integral"};
}

QuermassValue curvature_quermass(const Section& section, int l, int order) {
    const int d = section.body().dim();
    if (l < 1 || l > d - 1) throw InputError("curvature_quermass: l outside [1, d-1]");
    if (d < 3) throw InputError("curvature_quermass: requires d >= 3");
    const QuadratureRule rule = equator_quadrature(section.pole(), order);
    const double integral = rule.integrate([&](const Vec& eta_vec) {
        const Direction eta(eta_vec);
        const double r = section_radial(section, eta);
        const double cosang = eta_vec.dot(section_normal(section, eta).vec());
        if (cosang <= 0.0) throw GeometryError("curvature_quermass: <eta, n> <= 0 at a node");
        const double surf = std::pow(r, d - 2) / cosang;
        if (l == 1) return surf;  // H_0 = 1
        const std::vector<double> kappas = section_principal_curvatures(section, eta);
        return elementary_symmetric_mean(kappas, l - 1) * surf;
    });
    return QuermassValue{l, integral / (d - 1), "curvature-integral"};
}

double remainder_term_P(const std::vector<double>& deltas, int l) {
    const int n = static_cast<int>(deltas.size());
    if (l < 1 || l > n + 1) throw InputError("remainder_term_P: l outside [1, d-1]");
    std::vector<double> shifted(deltas);
    for (double& v : shifted) v += 1.0;
    double sum = 0.0;
    for (double v : deltas) sum += v;
    return elementary_symmetric_mean(shifted, l - 1) - 1.0 -
           (n > 0 ? (static_cast<double>(l - 1) / n) * sum : 0.0);
}

namespace {

double unit_ball_volume(int m) {
    return std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m + 1.0);
}

double radical_inverse(long i, int base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

// Halton point in [0,1)^m with a seed-derived rotation; random access by
// index keeps the sampling loop embarrassingly parallel and deterministic.
void halton_point(long index, int m, const double* shift, double* out) {
    static const int bases[] = {2, 3, 5, 7, 11};
    for (int i = 0; i < m; ++i) {
        const double v = radical_inverse(index, bases[i]) + shift[i];
        out[i] = v < 1.0 ? v : v - 1.0;
    }
}

// Uniform point in the shell r_lo <= |p| <= r_hi (volume-preserving map
// from the unit cube), available for m <= 3; higher m falls back to a box.
Vec shell_point(int m, double r_lo, double r_hi, const double* u) {
    Vec p(m);
    const double frac = std::pow(r_lo, m) + u[0] * (std::pow(r_hi, m) - std::pow(r_lo, m));
    const double r = std::pow(frac, 1.0 / m);
    if (m == 2) {
        const double phi = 2.0 * std::numbers::pi * u[1];
        p << r * std::cos(phi), r * std::sin(phi);
    } else {
        const double z = 2.0 * u[1] - 1.0;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = 2.0 * std::numbers::pi * u[2];
        p << r * rho * std::cos(phi), r * rho * std::sin(phi), r * z;
    }
    return p;
}

// Distance from an exterior in-plane point to the section boundary by
// foot-point iteration: project onto the support plane at the current
// boundary guess and re-aim. Converges fast on convex sections, which the
// oracle requires anyway; the in-plane normal comes from the analytic
// ambient gradient of the radial function, so no finite differences enter.
double exterior_distance(const Section& section, const Vec& p) {
    const EquatorFrame& frame = section.frame();
    const StarBody& body = section.body();
    Vec q = p;
    Vec b = p;
    for (int it = 0; it < 24; ++it) {
        const Vec eta = q / q.norm();
        const Vec eta_amb = frame.embed(eta);
        const double r = section_radial(section, Direction(eta_amb));
        b = r * eta;
        const Vec x = r * eta_amb + section.offset() * section.pole().vec();
        const double xn = x.norm();
        const Vec omega = x / xn;
        const Vec g = body.radial_ambient_gradient(omega);
        const Vec ambient_normal = omega - (g - omega.dot(g) * omega) / xn;
        Vec n = frame.project(ambient_normal);
        n /= n.norm();
        const Vec q_next = p - (p - b).dot(n) * n;
        const double step = (q_next - q).norm();
        q = q_next;
        if (step < 1e-9) break;
    }
    return (p - b).norm();
}

}  // namespace

QuermassValue steiner_quermass_oracle(const Section& section, int l, const SteinerOptions& opts) {
    const int d = section.body().dim();
    const int m = d - 1;  // dimension of the cutting hyperplane
    if (l < 0 || l > m) throw InputError("steiner_quermass_oracle: l outside [0, d-1]");

    // Boundary point cloud (positions and outer normals) in hyperplane
    // coordinates, doubling as the convexity sample for the precondition.
    const QuadratureRule cloud_rule = equator_quadrature(section.pole(), opts.boundary_cloud_order);
    double max_r = 0.0, min_r = 1e300;
    for (const Vec& eta_vec : cloud_rule.nodes) {
        const Direction eta(eta_vec);
        const double r = section_radial(section, eta);
        max_r = std::max(max_r, r);
        min_r = std::min(min_r, r);
        if (!opts.skip_convexity_check) {
            for (double k : section_principal_curvatures(section, eta))
                if (k < -1e-6)
                    throw GeometryError("steiner_quermass_oracle: non-convex section, "
                                        "oracle unsupported");
        }
    }

    // The intercept is the exact radial-integral volume, and the top Steiner
    // coefficient is the unit-ball volume for every convex body; only the
    // intermediate coefficients carry information worth fitting.
    const int fit_order = d == 3 ? 64 : d == 4 ? 24 : 14;
    const double w0 = section_volume(section, fit_order).value;
    const double kappa = unit_ball_volume(m);
    if (l == 0) return QuermassValue{0, w0, "steiner-fit"};
    if (l == m) return QuermassValue{m, kappa, "steiner-fit"};

    std::vector<double> s_values(opts.fit_samples);
    for (int j = 0; j < opts.fit_samples; ++j)
        s_values[j] = opts.s_max * (j + 1) / opts.fit_samples;

    // Membership sampling runs over a shell around the boundary band; the
    // ball inside it belongs to the parallel body at every s and is counted
    // analytically, which removes its share of the sampling variance.
    const bool use_shell = m <= 3;
    const double r_lo = use_shell ? 0.9 * min_r : 0.0;
    const double r_hi = 1.002 * max_r + opts.s_max + 0.01;
    const double inner_volume = use_shell ? unit_ball_volume(m) * std::pow(r_lo, m) : 0.0;
    const double sample_volume = use_shell
                                     ? unit_ball_volume(m) *
                                           (std::pow(r_hi, m) - std::pow(r_lo, m))
                                     : std::pow(2.0 * r_hi, m);

    double shift[5];
    std::uint64_t state = opts.seed * 6364136223846793005ULL + 1442695040888963407ULL;
    for (int i = 0; i < m; ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        shift[i] = ((state >> 11) + 0.5) / 9007199254740992.0;
    }

    // One distance per sample point, shared across all s thresholds.
    const long total_points = static_cast<long>(opts.qmc_points) * opts.fit_samples;
    const int n_chunks = 256;
    std::vector<std::vector<long>> chunk_counts(n_chunks,
                                                std::vector<long>(opts.fit_samples, 0));
#pragma omp parallel for schedule(dynamic)
    for (int chunk = 0; chunk < n_chunks; ++chunk) {
        const long begin = total_points * chunk / n_chunks;
        const long end = total_points * (chunk + 1) / n_chunks;
        double u[5];
        for (long k = begin; k < end; ++k) {
            halton_point(k + 1, m, shift, u);
            Vec p(m);
            if (use_shell) {
                p = shell_point(m, r_lo, r_hi, u);
            } else {
                for (int i = 0; i < m; ++i) p[i] = (2.0 * u[i] - 1.0) * r_hi;
            }
            const double pn = p.norm();
            double dist;
            if (pn < 0.9 * min_r) {
                dist = 0.0;
            } else if (pn - max_r > opts.s_max + 0.01) {
                dist = opts.s_max + 1.0;
            } else {
                const Vec eta_amb = section.frame().embed(p / pn);
                const double r = section_radial(section, Direction(eta_amb));
                if (pn <= r) {
                    dist = 0.0;
                } else if (pn - r <= s_values[0]) {
                    // The ray distance already sits below the smallest
                    // threshold, so every comparison is settled.
                    dist = pn - r;
                } else {
                    dist = exterior_distance(section, p);
                }
            }
            for (int j = 0; j < opts.fit_samples; ++j)
                if (dist <= s_values[j]) ++chunk_counts[chunk][j];
        }
    }

    Eigen::VectorXd volumes(opts.fit_samples);
    for (int j = 0; j < opts.fit_samples; ++j) {
        long total = 0;
        for (int chunk = 0; chunk < n_chunks; ++chunk) total += chunk_counts[chunk][j];
        volumes[j] =
            inner_volume + sample_volume * static_cast<double>(total) / total_points;
    }

    // vol(K + sB) = sum_i C(d-1, i) W_i s^i; with W_0 and W_{d-1} pinned the
    // least-squares fit only has the intermediate coefficients left.
    Eigen::MatrixXd design(opts.fit_samples, m - 1);
    Eigen::VectorXd rhs(opts.fit_samples);
    for (int j = 0; j < opts.fit_samples; ++j) {
        for (int i = 1; i < m; ++i)
            design(j, i - 1) = binomial(m, i) * std::pow(s_values[j], i);
        rhs[j] = volumes[j] - w0 - kappa * std::pow(s_values[j], m);
    }
    const Eigen::VectorXd w = design.colPivHouseholderQr().solve(rhs);
    return QuermassValue{l, w[l - 1], "steiner-fit"};
}

}  // namespace quermass
