#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "quermass/errors.hpp"

namespace quermass {

using Vec = Eigen::VectorXd;

constexpr double kUnitTol = 1e-12;
constexpr int kMinDim = 2;
constexpr int kMaxDim = 6;

/// Unit vector in R^d, 2 <= d <= 6.
class Direction {
  public:
    explicit Direction(Vec v);

    const Vec& vec() const { return v_; }
    int dim() const { return static_cast<int>(v_.size()); }
    double operator[](int i) const { return v_[i]; }
    Direction operator-() const { return Direction(-v_); }

    static Direction axis(int d, int i);

  private:
    Vec v_;
};

/// Deterministic orthonormal basis of pole^perp (d-1 vectors).
struct EquatorFrame {
    Direction pole;
    std::vector<Vec> basis;  // d-1 mutually orthonormal, each _|_ pole

    /// Embeds coordinates in pole^perp into R^d.
    Vec embed(const Vec& coords) const;
    /// Coordinates of x (assumed in pole^perp) w.r.t. the basis.
    Vec project(const Vec& x) const;
};

/// Nodes and positive weights integrating over the unit sphere S^{m-1}
/// of some m-dimensional space, with nodes stored as vectors in the
/// ambient R^d (equal to R^m for full-sphere rules, or embedded via an
/// EquatorFrame for equator rules).
struct QuadratureRule {
    std::vector<Vec> nodes;
    std::vector<double> weights;
    std::string domain_tag;  // "full-sphere(d)" or "equator"

    std::size_t size() const { return nodes.size(); }

    template <typename F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/// Surface measure of S^{n} (the n-sphere): 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double sphere_surface_measure(int n);

/// omega = xi sin(psi) + eta cos(psi); eta must be orthogonal to the pole.
Direction polar_to_direction(const Direction& pole, const Direction& eta, double psi);

struct CylindricalCoords {
    Direction eta;
    double r;  // >= 0
    double t;  // signed offset along the pole
};

/// Splits x = r eta + t pole. Throws GeometryError when x lies on the axis.
CylindricalCoords cylindrical_decompose(const Vec& x, const Direction& pole);

/// Gram-Schmidt on the standard basis with the pole's largest-|coordinate|
/// axis dropped (lowest index on ties).
EquatorFrame equator_frame(const Direction& pole);

/// Product rule on S^{d-1}: uniform nodes on S^1, Gauss-Legendre in each
/// polar angle above that. `order` latitude nodes per level, 2*order
/// longitude nodes.
QuadratureRule sphere_quadrature(int d, int order);

/// Rule on the equator subsphere pole^perp cap S^{d-1}, nodes embedded in R^d.
QuadratureRule equator_quadrature(const Direction& pole, int order);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Quasi-uniform set of n directions: uniform angles for d=2, Fibonacci
/// lattice for d=3, seeded normalized Gaussian samples for d >= 4.
std::vector<Direction> direction_grid(int d, int n, unsigned seed = 1234);

/// Exponential map of the unit sphere at `base`: follows the geodesic in
/// the direction of `tangent` for arc length |tangent|.
Vec sphere_exp(const Vec& base, const Vec& tangent);

}  // namespace quermass
