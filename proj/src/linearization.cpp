#include "quermass/linearization.hpp"

#include <cmath>
#include <numbers>

namespace quermass {

namespace {
constexpr double kPi = std::numbers::pi;
}

EquatorIntegralResult proposition_integral(const Polynomial& f, const Direction& pole, int order) {
    if (f.dim() != pole.dim()) throw InputError("proposition_integral: dimension mismatch");
    const int d = pole.dim();
    if (d == 2) {
        // The equator of S^1 is the two-point sphere S^0 with counting measure.
        const Vec eta = equator_frame(pole).basis[0];
        const double value = latitude_derivative(f, pole, Direction(eta)) +
                             latitude_derivative(f, pole, Direction(-eta));
        return EquatorIntegralResult{pole, value};
    }
    const QuadratureRule rule = equator_quadrature(pole, order);
    const double value = rule.integrate(
        [&](const Vec& eta) { return latitude_derivative(f, pole, Direction(eta)); });
    return EquatorIntegralResult{pole, value};
}

EvennessVerdict evenness_classify(const Polynomial& f, const std::vector<Direction>& pole_grid,
                                  double tol, int order) {
    if (pole_grid.empty()) throw InputError("evenness_classify: empty pole grid");
    double best = -1.0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < pole_grid.size(); ++i) {
        const double v = std::abs(proposition_integral(f, pole_grid[i], order).value);
        if (v > best) {
            best = v;
            best_idx = i;
        }
    }
    return EvennessVerdict{best <= tol, pole_grid[best_idx], best};
}

double predicted_surface_derivative(const Polynomial& epsilon, const Direction& pole, int order) {
    const int d = pole.dim();
    if (d < 3) throw InputError("predicted_surface_derivative: requires d >= 3");
    return (d - 2) * proposition_integral(epsilon, pole, order).value;
}

CoefficientVariant parse_variant(const std::string& name) {
    if (name == "paper") return CoefficientVariant::paper;
    if (name == "rederived") return CoefficientVariant::rederived;
    throw ConfigError("unknown coefficient variant: " + name);
}

double wl_derivative_coefficient(int d, int l, CoefficientVariant variant) {
    if (l < 1 || l > d - 1) throw InputError("wl_derivative_coefficient: l outside [1, d-1]");
    if (variant == CoefficientVariant::paper)
        return static_cast<double>(d - 1 - l) / (d - l);
    return static_cast<double>(d - 1 - l) / (d - 1);
}

double predicted_wl_derivative(const Polynomial& epsilon, const Direction& pole, int d, int l,
                               CoefficientVariant variant, int order) {
    return wl_derivative_coefficient(d, l, variant) *
           proposition_integral(epsilon, pole, order).value;
}

namespace {

// Value and equator-chart derivatives of a polynomial at the point
// eta(theta) = u cos(theta) + v sin(theta) on the equator of `pole`,
// with psi the geographic latitude toward the pole.
struct EquatorJet {
    double value;
    double d_psi;
    double d_eta;
    double d_eta_psi;
};

EquatorJet equator_jet(const Polynomial& f, const Direction& pole, const EquatorFrame& frame,
                       double theta) {
    const Vec& u = frame.basis[0];
    const Vec& v = frame.basis[1];
    const Vec eta = u * std::cos(theta) + v * std::sin(theta);
    const Vec deta = -u * std::sin(theta) + v * std::cos(theta);
    const Vec grad = f.gradient(eta);
    const Eigen::MatrixXd hess = f.hessian(eta);
    return EquatorJet{f.eval(eta), grad.dot(pole.vec()), grad.dot(deta),
                      deta.dot(hess * pole.vec())};
}

// Integrand of the perimeter-derivative condition at the equator:
// Q^{-1/2} (rho_psi + rho^{-1} rho_eta rho_etapsi), Q = rho^2 + rho_eta^2.
double condition_integrand(const EquatorJet& j) {
    const double q = j.value * j.value + j.d_eta * j.d_eta;
    return (j.d_psi + j.d_eta * j.d_eta_psi / j.value) / std::sqrt(q);
}

Remark2dCoefficients coefficients_from_jet(const EquatorJet& j) {
    const double v = j.value, veta = j.d_eta, vpsi = j.d_psi, vetapsi = j.d_eta_psi;
    const double q = v * v + veta * veta;
    const double q12 = 1.0 / std::sqrt(q);
    const double q32 = q12 / q;
    const double inner = vpsi + veta * vetapsi / v;
    Remark2dCoefficients c;
    c.A = -q12 * veta * vetapsi / (v * v) - v * q32 * inner;
    c.B = q12;
    c.C = -veta * q32 * inner + q12 * vetapsi / v;
    c.D = q12 * veta / v;
    return c;
}

void require_d3(const Polynomial& f, const Direction& pole, const char* where) {
    if (pole.dim() != 3 || f.dim() != 3)
        throw InputError(std::string(where) + ": defined for d = 3 only");
}

}  // namespace

Remark2dCoefficients remark2d_coefficients(const Polynomial& rho0, const Direction& pole,
                                           double theta) {
    require_d3(rho0, pole, "remark2d_coefficients");
    const EquatorFrame frame = equator_frame(pole);
    return coefficients_from_jet(equator_jet(rho0, pole, frame, theta));
}

Remark2dRaw remark2d_raw_condition(const Polynomial& rho0, const Polynomial& epsilon,
                                   const Direction& pole, int order) {
    require_d3(rho0, pole, "remark2d_raw_condition");
    if (epsilon.dim() != 3) throw InputError("remark2d_raw_condition: epsilon must live on S^2");
    const EquatorFrame frame = equator_frame(pole);
    const Polynomial rho = rho0 + epsilon;

    const int n = 2 * order;
    const double w = 2.0 * kPi / n;
    Remark2dRaw out{0.0, 0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * kPi * i / n;
        const EquatorJet j0 = equator_jet(rho0, pole, frame, theta);
        const EquatorJet je = equator_jet(epsilon, pole, frame, theta);
        out.raw += w * condition_integrand(equator_jet(rho, pole, frame, theta));
        const double g0 = condition_integrand(j0);
        out.degree0 += w * g0;
        const Remark2dCoefficients c = coefficients_from_jet(j0);
        out.truncation +=
            w * (g0 + c.A * je.value + c.B * je.d_psi + c.C * je.d_eta + c.D * je.d_eta_psi);
    }
    return out;
}

double remark2d_operator(const Polynomial& rho0, const Polynomial& epsilon, const Direction& pole,
                         int order) {
    require_d3(rho0, pole, "remark2d_operator");
    const EquatorFrame frame = equator_frame(pole);

    auto coeffs = [&](double theta) {
        return coefficients_from_jet(equator_jet(rho0, pole, frame, theta));
    };

    // dC/d eta and dD/d eta by fourth-order central differences along the
    // equator angle; rho0 is C^infinity so the step is accuracy-limited only.
    const double h = 1e-2;
    const int n = 2 * order;
    const double w = 2.0 * kPi / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * kPi * i / n;
        const Remark2dCoefficients c0 = coeffs(theta);
        const Remark2dCoefficients cp1 = coeffs(theta + h), cm1 = coeffs(theta - h);
        const Remark2dCoefficients cp2 = coeffs(theta + 2 * h), cm2 = coeffs(theta - 2 * h);
        const double dC = (-cp2.C + 8.0 * cp1.C - 8.0 * cm1.C + cm2.C) / (12.0 * h);
        const double dD = (-cp2.D + 8.0 * cp1.D - 8.0 * cm1.D + cm2.D) / (12.0 * h);
        const EquatorJet je = equator_jet(epsilon, pole, frame, theta);
        acc += w * ((c0.A - dC) * je.value + (c0.B - dD) * je.d_psi);
    }
    return acc;
}

}  // namespace quermass
