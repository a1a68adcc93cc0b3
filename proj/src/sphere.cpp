#include "quermass/sphere.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace quermass {

namespace {
constexpr double kPi = std::numbers::pi;
}

Direction::Direction(Vec v) : v_(std::move(v)) {
    const int d = static_cast<int>(v_.size());
    if (d < kMinDim || d > kMaxDim)
        throw InputError("Direction: dimension " + std::to_string(d) + " outside [2,6]");
    if (std::abs(v_.norm() - 1.0) > kUnitTol)
        throw InputError("Direction: vector is not unit length (|1 - norm| = " +
                         std::to_string(std::abs(v_.norm() - 1.0)) + ")");
}

Direction Direction::axis(int d, int i) {
    Vec v = Vec::Zero(d);
    v[i] = 1.0;
    return Direction(std::move(v));
}

Vec EquatorFrame::embed(const Vec& coords) const {
    if (coords.size() != static_cast<Eigen::Index>(basis.size()))
        throw InputError("EquatorFrame::embed: coordinate size mismatch");
    Vec x = Vec::Zero(pole.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) x += coords[i] * basis[i];
    return x;
}

Vec EquatorFrame::project(const Vec& x) const {
    Vec c(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) c[i] = basis[i].dot(x);
    return c;
}

double sphere_surface_measure(int n) {
    // |S^n| = 2 pi^{(n+1)/2} / Gamma((n+1)/2)
    return 2.0 * std::pow(kPi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

Direction polar_to_direction(const Direction& pole, const Direction& eta, double psi) {
    if (pole.dim() != eta.dim()) throw InputError("polar_to_direction: dimension mismatch");
    if (std::abs(pole.vec().dot(eta.vec())) > 1e-9)
        throw InputError("polar_to_direction: eta not orthogonal to pole");
    if (std::abs(psi) > kPi / 2 + 1e-12)
        throw InputError("polar_to_direction: |psi| exceeds pi/2");
    Vec w = pole.vec() * std::sin(psi) + eta.vec() * std::cos(psi);
    return Direction(w / w.norm());
}

CylindricalCoords cylindrical_decompose(const Vec& x, const Direction& pole) {
    if (x.size() != pole.dim()) throw InputError("cylindrical_decompose: dimension mismatch");
    const double t = x.dot(pole.vec());
    Vec w = x - t * pole.vec();
    const double r = w.norm();
    if (r <= 1e-12 * std::max(1.0, x.norm()))
        throw GeometryError("cylindrical_decompose: point on the pole axis, eta undefined");
    return CylindricalCoords{Direction(w / r), r, t};
}

EquatorFrame equator_frame(const Direction& pole) {
    const int d = pole.dim();
    // Drop the axis where the pole has its largest |coordinate|; lowest index wins ties.
    int drop = 0;
    for (int i = 1; i < d; ++i)
        if (std::abs(pole[i]) > std::abs(pole[drop])) drop = i;

    std::vector<Vec> basis;
    basis.reserve(d - 1);
    for (int i = 0; i < d; ++i) {
        if (i == drop) continue;
        Vec v = Vec::Zero(d);
        v[i] = 1.0;
        v -= v.dot(pole.vec()) * pole.vec();
        for (const Vec& b : basis) v -= v.dot(b) * b;
        const double n = v.norm();
        if (n < 1e-8) throw GeometryError("equator_frame: degenerate Gram-Schmidt step");
        basis.push_back(v / n);
    }
    return EquatorFrame{pole, std::move(basis)};
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration from the Chebyshev-based initial guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

namespace {

// Recursive product rule: nodes and weights on S^{d-1} as vectors in R^d.
void build_sphere_rule(int d, int order, std::vector<Vec>& nodes, std::vector<double>& weights) {
    if (d == 2) {
        const int n = 2 * order;
        const double w = 2.0 * kPi / n;
        for (int i = 0; i < n; ++i) {
            const double phi = 2.0 * kPi * i / n;
            Vec v(2);
            v << std::cos(phi), std::sin(phi);
            nodes.push_back(std::move(v));
            weights.push_back(w);
        }
        return;
    }
    std::vector<Vec> sub_nodes;
    std::vector<double> sub_weights;
    build_sphere_rule(d - 1, order, sub_nodes, sub_weights);

    // Gauss-Legendre in the polar angle theta; the sin^{d-2} measure factor
    // is analytic in theta, so the rule converges spectrally for smooth
    // integrands on the sphere.
    std::vector<double> x, wx;
    gauss_legendre(order, x, wx);
    for (int i = 0; i < order; ++i) {
        const double theta = 0.5 * kPi * (x[i] + 1.0);
        const double s = std::sin(theta);
        const double jac = 0.5 * kPi * std::pow(s, d - 2);
        for (std::size_t j = 0; j < sub_nodes.size(); ++j) {
            Vec v(d);
            v.head(d - 1) = s * sub_nodes[j];
            v[d - 1] = std::cos(theta);
            nodes.push_back(std::move(v));
            weights.push_back(wx[i] * jac * sub_weights[j]);
        }
    }
}

}  // namespace

QuadratureRule sphere_quadrature(int d, int order) {
    if (d < kMinDim || d > kMaxDim)
        throw InputError("sphere_quadrature: unsupported dimension " + std::to_string(d));
    if (order < 3) throw InputError("sphere_quadrature: order must be >= 3");
    QuadratureRule rule;
    build_sphere_rule(d, order, rule.nodes, rule.weights);
    rule.domain_tag = "full-sphere(" + std::to_string(d) + ")";
    return rule;
}

std::vector<Direction> direction_grid(int d, int n, unsigned seed) {
    if (d < kMinDim || d > kMaxDim) throw InputError("direction_grid: unsupported dimension");
    if (n < 1) throw InputError("direction_grid: need at least one direction");
    std::vector<Direction> out;
    out.reserve(n);
    if (d == 2) {
        for (int i = 0; i < n; ++i) {
            const double phi = 2.0 * kPi * i / n;
            Vec v(2);
            v << std::cos(phi), std::sin(phi);
            out.emplace_back(std::move(v));
        }
    } else if (d == 3) {
        const double golden = kPi * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < n; ++i) {
            const double z = 1.0 - (2.0 * i + 1.0) / n;
            const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = golden * i;
            Vec v(3);
            v << s * std::cos(phi), s * std::sin(phi), z;
            out.emplace_back(v / v.norm());
        }
    } else {
        // Deterministic LCG + Box-Muller; quality is ample for sampling grids.
        std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        auto uniform = [&state]() {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return ((state >> 11) + 0.5) / 9007199254740992.0;
        };
        while (static_cast<int>(out.size()) < n) {
            Vec v(d);
            for (int i = 0; i < d; ++i) {
                const double u1 = uniform(), u2 = uniform();
                v[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
            }
            const double norm = v.norm();
            if (norm < 1e-6) continue;
            out.emplace_back(v / norm);
        }
    }
    return out;
}

Vec sphere_exp(const Vec& base, const Vec& tangent) {
    const double theta = tangent.norm();
    if (theta < 1e-300) return base;
    return std::cos(theta) * base + (std::sin(theta) / theta) * tangent;
}

QuadratureRule equator_quadrature(const Direction& pole, int order) {
    const int d = pole.dim();
    if (d < 3) throw InputError("equator_quadrature: pole dimension must be >= 3");
    const EquatorFrame frame = equator_frame(pole);
    QuadratureRule sub = sphere_quadrature(d - 1, order);
    QuadratureRule rule;
    rule.nodes.reserve(sub.size());
    rule.weights = std::move(sub.weights);
    for (const Vec& c : sub.nodes) rule.nodes.push_back(frame.embed(c));
    rule.domain_tag = "equator";
    return rule;
}

}  // namespace quermass
