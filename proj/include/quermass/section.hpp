#pragma once

#include "quermass/body.hpp"
#include "quermass/sphere.hpp"

namespace quermass {

/// Hyperplane section K cap (pole^perp + t*pole), treated as a
/// (d-1)-dimensional body about the inner point t*pole.
class Section {
  public:
    Section(StarBody body, Direction pole, double offset);

    const StarBody& body() const { return body_; }
    const Direction& pole() const { return pole_; }
    double offset() const { return t_; }
    const EquatorFrame& frame() const { return frame_; }

    /// Finite-difference step sizes for normals / curvatures.
    struct FdSteps {
        double first = 1e-5;
        double second = 1e-4;
    };
    FdSteps& fd_steps() { return fd_; }
    const FdSteps& fd_steps() const { return fd_; }

  private:
    StarBody body_;
    Direction pole_;
    double t_;
    EquatorFrame frame_;
    FdSteps fd_;
};

/// Tangent basis of the equator sphere pole^perp cap S^{d-1} at eta:
/// d-2 orthonormal vectors orthogonal to both eta and the pole.
struct ChartFrame {
    Direction base_point;
    std::vector<Vec> tangent_basis;
};

ChartFrame chart_frame(const Section& section, const Direction& eta);

/// Radial function r(eta) of the section about t*pole: the unique r > 0
/// with |r eta + t pole| = rho of that direction. Bracketed bisection
/// followed by a Newton polish to residual < 1e-12.
double section_radial(const Section& section, const Direction& eta);

/// Outer unit normal of the section boundary at eta, a vector in pole^perp.
Direction section_normal(const Section& section, const Direction& eta);

/// Principal curvatures (d-2 values) of the section boundary as a
/// hypersurface of the cutting hyperplane.
std::vector<double> section_principal_curvatures(const Section& section, const Direction& eta);

}  // namespace quermass
