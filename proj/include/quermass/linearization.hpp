#pragma once

#include <string>
#include <vector>

#include "quermass/polynomial.hpp"
#include "quermass/sphere.hpp"

namespace quermass {

struct EquatorIntegralResult {
    Direction pole;
    double value;  // integral over the equator of the latitude derivative
};

/// Integral over pole^perp cap S^{d-1} of d f/d psi at the equator. The
/// psi-curve runs toward the pole, so flipping the pole flips the sign
/// for odd f.
EquatorIntegralResult proposition_integral(const Polynomial& f, const Direction& pole, int order);

struct EvennessVerdict {
    bool even_consistent;  // necessary-condition verdict over the finite grid
    Direction witness;     // maximizing pole (meaningful when not even-consistent)
    double max_abs_integral;
};

EvennessVerdict evenness_classify(const Polynomial& f, const std::vector<Direction>& pole_grid,
                                  double tol, int order);

/// First-order t-derivative of the section surface area at t = 0 for
/// rho = 1 + epsilon: (d-2) times the proposition integral.
double predicted_surface_derivative(const Polynomial& epsilon, const Direction& pole, int order);

enum class CoefficientVariant { paper, rederived };

CoefficientVariant parse_variant(const std::string& name);

/// Constant in front of the equator integral in the first-order W_l law:
/// (d-1-l)/(d-l) as printed, or (d-1-l)/(d-1) as obtained by recombining
/// the two summands of the split derivative. Both vanish at l = d-1 and
/// agree at l = 1.
double wl_derivative_coefficient(int d, int l, CoefficientVariant variant);

double predicted_wl_derivative(const Polynomial& epsilon, const Direction& pole, int d, int l,
                               CoefficientVariant variant, int order);

/// Pointwise coefficients of the linearized d=3 perimeter-derivative
/// condition: the eps, d eps/d psi, d eps/d eta and mixed-derivative
/// groups, evaluated at angle theta on the equator of `pole`.
struct Remark2dCoefficients {
    double A, B, C, D;
};

Remark2dCoefficients remark2d_coefficients(const Polynomial& rho0, const Direction& pole,
                                           double theta);

struct Remark2dRaw {
    double raw;          // full nonlinear equator integral at rho = rho0 + eps
    double degree0;      // value at eps = 0
    double truncation;   // degree-<=1 part: degree0 + linearized integrand
};

/// d=3 perimeter-derivative condition at t=0 (the ds^2 = dr^2 + r^2 d eta^2
/// route), with the degree-<=1 truncation exposed alongside the raw value.
Remark2dRaw remark2d_raw_condition(const Polynomial& rho0, const Polynomial& epsilon,
                                   const Direction& pole, int order);

/// Integrated-by-parts form: integral of (A - dC/d eta) eps +
/// (B - dD/d eta) d eps/d psi over the equator circle.
double remark2d_operator(const Polynomial& rho0, const Polynomial& epsilon, const Direction& pole,
                         int order);

}  // namespace quermass
