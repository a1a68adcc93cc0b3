#pragma once

#include <optional>

#include "quermass/polynomial.hpp"
#include "quermass/sphere.hpp"

namespace quermass {

/// Safety factor keeping section offsets strictly interior.
constexpr double kOffsetSafety = 0.95;

struct OffsetBound {
    double t0;  // ball of radius t0 about 0 fits inside the body
};

struct ConvexityReport {
    bool convex;
    double min_principal_curvature;
};

/// Body star-shaped about the origin, given by a strictly positive radial
/// function on the unit sphere. Presets carry closed forms; perturbed
/// bodies carry rho = 1 + lambda * epsilon with polynomial epsilon.
class StarBody {
  public:
    static StarBody ball(int dim, double radius = 1.0);
    static StarBody ellipsoid(const Vec& semiaxes);
    static StarBody shifted_ball(const Vec& center, double radius);
    static StarBody perturbed(const Polynomial& epsilon, double lambda);

    int dim() const { return dim_; }

    /// rho(omega) for unit omega; throws GeometryError on non-positive values.
    double radial(const Vec& omega) const;

    /// Gradient of a smooth ambient extension of rho at omega. Contracting
    /// with any sphere-tangent vector gives the tangential derivative.
    Vec radial_ambient_gradient(const Vec& omega) const;

    /// Lower/upper bounds on rho over the sphere (exact for presets,
    /// densely sampled for perturbed bodies).
    double min_radial() const { return min_rho_; }
    double max_radial() const { return max_rho_; }

    OffsetBound offset_bound() const { return OffsetBound{kOffsetSafety * min_rho_}; }

    std::string kind() const { return kind_; }

  private:
    StarBody() = default;

    int dim_ = 0;
    std::string kind_;
    double radius_ = 1.0;
    Vec semiaxes_;
    Vec center_;
    std::optional<Polynomial> epsilon_;
    double lambda_ = 0.0;
    double min_rho_ = 1.0;
    double max_rho_ = 1.0;
};

struct PerturbationFamily {
    Polynomial epsilon;
    double lambda_max;

    /// Body with rho = 1 + lambda * epsilon; validates positivity.
    StarBody body_at(double lambda) const;
};

/// Validated family: checks 1 + lambda_max * epsilon > 0 on a dense sample.
PerturbationFamily make_family(const Polynomial& epsilon, double lambda_max);

StarBody make_perturbed_body(const PerturbationFamily& family, double lambda);

/// Samples boundary principal curvatures at `sample_order` directions and
/// flags the body convex iff all of them are positive.
ConvexityReport convexity_check(const StarBody& body, int sample_order = 400);

/// Principal curvatures of the body boundary at direction omega, computed
/// by finite differences of the boundary embedding in an exponential-map
/// chart of the sphere.
std::vector<double> boundary_principal_curvatures(const StarBody& body, const Direction& omega);

}  // namespace quermass
