#include <cmath>
#include <numbers>

#include "doctest.h"
#include "quermass/linearization.hpp"
#include "quermass/sweep.hpp"

using namespace quermass;

namespace {
constexpr double kPi = std::numbers::pi;

Vec v3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

// Independent oracle: quadrature of a fourth-order finite difference of f
// along the psi-curve psi -> xi sin(psi) + eta cos(psi).
double proposition_oracle(const Polynomial& f, const Direction& pole, int order) {
    const QuadratureRule rule = equator_quadrature(pole, order);
    const double h = 1e-3;
    return rule.integrate([&](const Vec& eta) {
        auto at = [&](double psi) {
            return f.eval(polar_to_direction(pole, Direction(eta), psi).vec());
        };
        return (-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) / (12.0 * h);
    });
}

}  // namespace

TEST_CASE("proposition integral") {
    const Direction e3 = Direction::axis(3, 2);
    const Polynomial f_lin = Polynomial::linear(v3(0, 0, 1));  // <omega, e3>

    SUBCASE("even functions give 0") {
        const Polynomial f(3, {{{0, 0, 2}, 1.0}, {{1, 1, 0}, -0.4}, {{0, 0, 0}, 0.7}});
        for (const Vec& axis : {v3(1, 0, 0), v3(0, 0, 1), v3(0.6, 0, 0.8)})
            CHECK(std::abs(proposition_integral(f, Direction(axis), 32).value) < 1e-10);
    }
    SUBCASE("f = <omega, e>: 2 pi <xi, e> in d=3") {
        CHECK(proposition_integral(f_lin, e3, 32).value == doctest::Approx(2 * kPi).epsilon(1e-12));
        const Direction tilted(v3(0.6, 0, 0.8));
        CHECK(proposition_integral(f_lin, tilted, 32).value ==
              doctest::Approx(2 * kPi * 0.8).epsilon(1e-12));
        CHECK(std::abs(proposition_integral(f_lin, Direction::axis(3, 0), 32).value) < 1e-12);
    }
    SUBCASE("constant gives 0") {
        CHECK(std::abs(proposition_integral(Polynomial::constant(3, 3.5), e3, 16).value) < 1e-14);
    }
    SUBCASE("matches the finite-difference oracle on mixed polynomials") {
        const Polynomial f(3, {{{3, 0, 0}, 1.0}, {{1, 1, 1}, -0.6}, {{0, 2, 1}, 0.3}});
        for (const Vec& axis : {v3(0, 0, 1), v3(0.6, 0.8, 0), v3(-0.48, 0.6, 0.64)}) {
            const Direction pole(axis);
            CHECK(proposition_integral(f, pole, 32).value ==
                  doctest::Approx(proposition_oracle(f, pole, 32)).epsilon(1e-9));
        }
    }
    SUBCASE("antipodal sign convention: value(-pole) = -value(pole) for odd f") {
        const Direction pole(v3(0.36, 0.48, 0.8));
        const double plus = proposition_integral(f_lin, pole, 32).value;
        const double minus = proposition_integral(f_lin, Direction(-pole.vec()), 32).value;
        CHECK(plus == doctest::Approx(-minus).epsilon(1e-12));
    }
    SUBCASE("linearity and odd-part sufficiency") {
        const Polynomial f(3, {{{3, 0, 0}, 1.0}, {{1, 0, 0}, 0.5}, {{2, 0, 0}, -0.8}});
        const Polynomial g(3, {{{0, 0, 1}, 1.0}, {{1, 1, 0}, 0.2}});
        const Direction pole(v3(0.6, 0, 0.8));
        const double vf = proposition_integral(f, pole, 32).value;
        const double vg = proposition_integral(g, pole, 32).value;
        const double vsum = proposition_integral(f * 2.0 + g * (-0.7), pole, 32).value;
        CHECK(vsum == doctest::Approx(2.0 * vf - 0.7 * vg).epsilon(1e-10));
        const double vodd = proposition_integral(f.even_odd_split().second, pole, 32).value;
        CHECK(vf == doctest::Approx(vodd).epsilon(1e-9));
    }
    SUBCASE("d=2: the equator is the two-point sphere") {
        const Polynomial f = Polynomial::linear((Vec(2) << 0.3, -0.2).finished());
        const Direction pole = Direction::axis(2, 0);
        CHECK(proposition_integral(f, pole, 8).value == doctest::Approx(0.6).epsilon(1e-12));
    }
}

TEST_CASE("evenness classification") {
    const std::vector<Direction> grid = direction_grid(3, 64);
    SUBCASE("<omega,e>^2 is even-consistent") {
        const Polynomial f(3, {{{0, 0, 2}, 1.0}});
        CHECK(evenness_classify(f, grid, 1e-8, 32).even_consistent);
    }
    SUBCASE("<omega,e> is flagged with a witness near e") {
        const Polynomial f = Polynomial::linear(v3(0, 0, 1));
        const EvennessVerdict v = evenness_classify(f, grid, 1e-7, 32);
        CHECK_FALSE(v.even_consistent);
        CHECK(std::abs(v.witness.vec()[2]) > 0.9);
        CHECK(v.max_abs_integral == doctest::Approx(2 * kPi * std::abs(v.witness.vec()[2]))
                                        .epsilon(1e-9));
    }
    SUBCASE("zero is even-consistent") {
        CHECK(evenness_classify(Polynomial::zero(3), grid, 1e-8, 16).even_consistent);
    }
}

TEST_CASE("predicted first-order derivatives") {
    SUBCASE("surface derivative: d=3 gives 2 pi, d=4 gives 8 pi") {
        const Polynomial e3lin = Polynomial::linear(v3(0, 0, 1));
        CHECK(predicted_surface_derivative(e3lin, Direction::axis(3, 2), 32) ==
              doctest::Approx(2 * kPi).epsilon(1e-10));
        Vec a4 = Vec::Zero(4);
        a4[3] = 1.0;
        CHECK(predicted_surface_derivative(Polynomial::linear(a4), Direction::axis(4, 3), 24) ==
              doctest::Approx(8 * kPi).epsilon(1e-10));
    }
    SUBCASE("even epsilon predicts 0") {
        const Polynomial f(3, {{{2, 0, 0}, 0.4}, {{0, 1, 1}, -0.1}});
        CHECK(std::abs(predicted_surface_derivative(f, Direction::axis(3, 2), 32)) < 1e-10);
    }
    SUBCASE("coefficient variants") {
        for (int d : {3, 4, 5, 6}) {
            CHECK(wl_derivative_coefficient(d, 1, CoefficientVariant::paper) ==
                  doctest::Approx(double(d - 2) / (d - 1)));
            CHECK(wl_derivative_coefficient(d, 1, CoefficientVariant::rederived) ==
                  doctest::Approx(double(d - 2) / (d - 1)));
            CHECK(wl_derivative_coefficient(d, d - 1, CoefficientVariant::paper) == 0.0);
            CHECK(wl_derivative_coefficient(d, d - 1, CoefficientVariant::rederived) == 0.0);
        }
        CHECK(wl_derivative_coefficient(4, 2, CoefficientVariant::paper) == doctest::Approx(0.5));
        CHECK(wl_derivative_coefficient(4, 2, CoefficientVariant::rederived) ==
              doctest::Approx(1.0 / 3.0));
        CHECK(parse_variant("paper") == CoefficientVariant::paper);
        CHECK(parse_variant("rederived") == CoefficientVariant::rederived);
        CHECK_THROWS_AS(parse_variant("other"), ConfigError);
    }
    SUBCASE("predicted W_l derivative") {
        const Polynomial e3lin = Polynomial::linear(v3(0, 0, 1));
        const Direction pole = Direction::axis(3, 2);
        for (CoefficientVariant v : {CoefficientVariant::paper, CoefficientVariant::rederived})
            CHECK(predicted_wl_derivative(e3lin, pole, 3, 1, v, 32) ==
                  doctest::Approx(kPi).epsilon(1e-10));
        Vec a4 = Vec::Zero(4);
        a4[3] = 1.0;
        CHECK(predicted_wl_derivative(Polynomial::linear(a4), Direction::axis(4, 3), 4, 3,
                                      CoefficientVariant::paper, 24) == 0.0);
        const Polynomial even(3, {{{2, 0, 0}, 1.0}});
        CHECK(std::abs(predicted_wl_derivative(even, pole, 3, 1, CoefficientVariant::paper, 32)) <
              1e-10);
    }
}

TEST_CASE("surface-derivative law holds to first order in lambda") {
    // rho = 1 + lambda <omega, e>: the measured dS/dt at t=0 approaches
    // lambda * 2 pi with a quadratically shrinking error.
    const Direction pole = Direction::axis(3, 2);
    const Polynomial eps = Polynomial::linear(v3(0, 0, 1));
    const double predicted = predicted_surface_derivative(eps, pole, 32);
    double prev_err = 1e300;
    for (double lambda : {1e-2, 5e-3, 2.5e-3, 1e-3}) {
        const StarBody body = StarBody::perturbed(eps, lambda);
        const double measured = 2.0 * central_derivative(body, pole, 1, 0.01, 32);
        const double err = std::abs(measured - lambda * predicted);
        CHECK(err < 1e-3 * lambda * lambda);  // single K over the whole decade
        CHECK(err < prev_err);
        prev_err = err;
    }
}

TEST_CASE("d=3 remark coefficients") {
    const Direction pole = Direction::axis(3, 2);
    SUBCASE("unit ball collapses to (0, 1, 0, 0)") {
        for (double theta : {0.0, 1.1, 2.7, 4.9}) {
            const auto c = remark2d_coefficients(Polynomial::constant(3, 1.0), pole, theta);
            CHECK(std::abs(c.A) < 1e-12);
            CHECK(c.B == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(c.C) < 1e-12);
            CHECK(std::abs(c.D) < 1e-12);
        }
    }
    SUBCASE("ball of radius 2 gives B = 1/2") {
        const auto c = remark2d_coefficients(Polynomial::constant(3, 2.0), pole, 0.7);
        CHECK(std::abs(c.A) < 1e-12);
        CHECK(c.B == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(c.C) < 1e-12);
        CHECK(std::abs(c.D) < 1e-12);
    }
    SUBCASE("eta-independent rho0 kills C and D but not A") {
        // rho0 = 1 + 0.1 z: constant along the equator (both the eta- and the
        // mixed eta-psi derivative vanish), with d rho0/d psi = 0.1 there.
        const Polynomial rho0 =
            Polynomial::constant(3, 1.0) + Polynomial::linear(v3(0, 0, 0.1));
        for (double theta : {0.3, 1.9, 3.8}) {
            const auto c = remark2d_coefficients(rho0, pole, theta);
            CHECK(c.A == doctest::Approx(-0.1).epsilon(1e-12));
            CHECK(c.B == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(c.C) < 1e-12);
            CHECK(std::abs(c.D) < 1e-12);
        }
    }
    SUBCASE("dimension guard") {
        CHECK_THROWS_AS(
            remark2d_coefficients(Polynomial::constant(4, 1.0), Direction::axis(4, 3), 0.0),
            InputError);
    }
}

TEST_CASE("d=3 remark condition and operator") {
    const Direction pole = Direction::axis(3, 2);
    const Polynomial one = Polynomial::constant(3, 1.0);

    SUBCASE("ball with eps = 0 gives 0 everywhere") {
        const auto r = remark2d_raw_condition(one, Polynomial::zero(3), pole, 64);
        CHECK(std::abs(r.raw) < 1e-14);
        CHECK(std::abs(r.degree0) < 1e-14);
        CHECK(std::abs(r.truncation) < 1e-14);
        CHECK(std::abs(remark2d_operator(one, Polynomial::zero(3), pole, 64)) < 1e-14);
    }
    SUBCASE("even perturbation of the ball keeps the condition at 0") {
        const Polynomial eps(3, {{{2, 0, 0}, 0.05}, {{0, 1, 1}, -0.015}});
        CHECK(std::abs(remark2d_raw_condition(one, eps, pole, 64).raw) < 1e-8);
    }
    SUBCASE("eps = lambda <omega, e>, xi = e reproduces 2 pi lambda") {
        const double lambda = 1e-2;
        const Polynomial eps = Polynomial::linear(v3(0, 0, lambda));
        const auto r = remark2d_raw_condition(one, eps, pole, 64);
        CHECK(r.raw == doctest::Approx(2 * kPi * lambda).epsilon(1e-9));
        CHECK(r.raw == doctest::Approx(lambda * predicted_surface_derivative(
                                                    Polynomial::linear(v3(0, 0, 1)), pole, 32))
                           .epsilon(1e-9));
    }
    SUBCASE("operator reduces to the proposition integral at the ball") {
        const Polynomial eps(3, {{{0, 0, 1}, 0.4}, {{1, 0, 2}, -0.2}, {{3, 0, 0}, 0.1}});
        CHECK(remark2d_operator(one, eps, pole, 64) ==
              doctest::Approx(proposition_integral(eps, pole, 64).value).epsilon(1e-10));
    }
    SUBCASE("integration by parts matches the degree-<=1 truncation") {
        const Polynomial rho0 = one + Polynomial(3, {{{0, 0, 2}, 0.1}});
        const std::vector<Polynomial> eps_list = {
            Polynomial::linear(v3(0, 0, 0.2)),
            Polynomial::linear(v3(0.15, -0.1, 0)),
            Polynomial(3, {{{1, 0, 1}, 0.1}}),
            Polynomial(3, {{{0, 0, 3}, 0.05}, {{1, 1, 0}, 0.02}}),
            Polynomial(3, {{{2, 0, 1}, 0.08}, {{0, 1, 0}, -0.04}}),
        };
        for (const Polynomial& rho : {one, rho0}) {
            for (const Polynomial& eps : eps_list) {
                const auto r = remark2d_raw_condition(rho, eps, pole, 64);
                const double op = remark2d_operator(rho, eps, pole, 64);
                CHECK(std::abs(op - (r.truncation - r.degree0)) < 1e-6);
            }
        }
    }
    SUBCASE("operator is linear in eps") {
        const Polynomial rho0 = one + Polynomial(3, {{{2, 0, 0}, 0.1}});
        const Polynomial e1 = Polynomial::linear(v3(0, 0, 1));
        const Polynomial e2(3, {{{1, 0, 1}, 1.0}});
        const double a = remark2d_operator(rho0, e1, pole, 64);
        const double b = remark2d_operator(rho0, e2, pole, 64);
        const double mix = remark2d_operator(rho0, e1 * 0.3 + e2 * (-1.1), pole, 64);
        CHECK(mix == doctest::Approx(0.3 * a - 1.1 * b).epsilon(1e-10));
    }
}
