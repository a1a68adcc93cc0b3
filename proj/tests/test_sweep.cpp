#include <cmath>
#include <numbers>

#include "doctest.h"
#include "quermass/sweep.hpp"

using namespace quermass;

namespace {
constexpr double kPi = std::numbers::pi;

Vec v3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

}  // namespace

TEST_CASE("default quadrature orders") {
    CHECK(default_quad_order(3) == 64);
    CHECK(default_quad_order(4) == 24);
    CHECK(default_quad_order(5) == 14);
    CHECK(default_quad_order(6) == 10);
}

TEST_CASE("offset profiles") {
    const Direction pole = Direction::axis(3, 2);

    SUBCASE("unit ball, l=0: profile pi (1 - t^2) with its max at 0") {
        SweepOptions opts;
        opts.grid_points = 41;
        opts.quad_order = 32;
        const OffsetProfile p = offset_profile(StarBody::ball(3), pole, 0, opts);
        REQUIRE(p.t_values.size() == 41);
        CHECK(p.t_values[20] == 0.0);
        CHECK(p.t_values.front() == doctest::Approx(-p.t_values.back()).epsilon(1e-15));
        for (std::size_t i = 0; i < p.t_values.size(); ++i) {
            const double t = p.t_values[i];
            CHECK(p.w_values[i] == doctest::Approx(kPi * (1 - t * t)).epsilon(1e-10));
        }
        const ArgmaxResult am = argmax_offset(p);
        CHECK(am.t_star == 0.0);
        CHECK(am.w_star == doctest::Approx(kPi).epsilon(1e-12));
        CHECK_FALSE(am.boundary_warning);
    }
    SUBCASE("shifted ball: argmax tracks <c, xi>") {
        const StarBody body = StarBody::shifted_ball(v3(0, 0, 0.3), 1.0);
        SweepOptions opts;
        opts.grid_points = 41;
        opts.quad_order = 32;
        const OffsetProfile p = offset_profile(body, pole, 0, opts);
        const double step = p.t_values[1] - p.t_values[0];
        const ArgmaxResult am = argmax_offset(p);
        CHECK(std::abs(am.t_star - 0.3) <= 0.5 * step + 1e-12);
        CHECK(am.w_star == doctest::Approx(kPi).epsilon(1e-4));
    }
    SUBCASE("centered ellipsoid: profile even in t") {
        const StarBody body = StarBody::ellipsoid(v3(1.3, 1.0, 0.8));
        SweepOptions opts;
        opts.grid_points = 21;
        opts.quad_order = 32;
        const OffsetProfile p = offset_profile(body, Direction(v3(0.6, 0, 0.8)), 1, opts);
        const int n = static_cast<int>(p.t_values.size());
        for (int i = 0; i < n / 2; ++i)
            CHECK(std::abs(p.w_values[i] - p.w_values[n - 1 - i]) < 1e-8);
    }
    SUBCASE("parallel and serial profiles agree exactly") {
        const StarBody body = StarBody::ellipsoid(v3(1.2, 1.0, 0.9));
        SweepOptions opts;
        opts.grid_points = 15;
        opts.quad_order = 24;
        const OffsetProfile a = offset_profile(body, pole, 1, opts);
        const OffsetProfile b = offset_profile_serial(body, pole, 1, opts);
        REQUIRE(a.w_values.size() == b.w_values.size());
        for (std::size_t i = 0; i < a.w_values.size(); ++i)
            CHECK(a.w_values[i] == b.w_values[i]);
    }
    SUBCASE("even grid counts are rejected") {
        SweepOptions opts;
        opts.grid_points = 20;
        CHECK_THROWS_AS(offset_profile(StarBody::ball(3), pole, 0, opts), InputError);
    }
}

TEST_CASE("argmax tie-breaking on synthetic profiles") {
    OffsetProfile p{Direction::axis(3, 2), 0, {-2, -1, 0, 1, 2}, {}};

    SUBCASE("flat top resolves to t = 0") {
        p.w_values = {1, 2, 2, 2, 1};
        CHECK(argmax_offset(p).t_star == 0.0);
    }
    SUBCASE("symmetric off-center tie resolves to the negative side") {
        p.w_values = {1, 2, 1.5, 2, 1};
        CHECK(argmax_offset(p).t_star == -1.0);
    }
    SUBCASE("strictly increasing profile warns about the boundary") {
        p.w_values = {1, 2, 3, 4, 5};
        const ArgmaxResult am = argmax_offset(p);
        CHECK(am.t_star == 2.0);
        CHECK(am.boundary_warning);
    }
}

TEST_CASE("central derivative") {
    const Direction pole = Direction::axis(3, 2);

    SUBCASE("unit ball: zero for every l") {
        for (int l : {0, 1, 2})
            CHECK(std::abs(central_derivative(StarBody::ball(3), pole, l, 0.1, 32)) < 1e-8);
    }
    SUBCASE("centered ellipsoid, tilted pole: zero within quadrature tolerance") {
        const StarBody body = StarBody::ellipsoid(v3(1.3, 1.0, 0.8));
        CHECK(std::abs(central_derivative(body, Direction(v3(0.6, 0, 0.8)), 1, 0.05, 32)) < 1e-6);
    }
    SUBCASE("shifted ball, l=0: quadratic profile differentiates exactly") {
        const StarBody body = StarBody::shifted_ball(v3(0, 0, 0.3), 1.0);
        CHECK(central_derivative(body, pole, 0, 0.05, 32) ==
              doctest::Approx(0.6 * kPi).epsilon(1e-9));
    }
    SUBCASE("first-order perturbation matches the predicted W_1 slope") {
        const double lambda = 1e-2;
        const StarBody body = StarBody::perturbed(Polynomial::linear(v3(0, 0, 1)), lambda);
        CHECK(central_derivative(body, pole, 1, 0.05, 32) ==
              doctest::Approx(lambda * kPi).epsilon(1e-4));
    }
    SUBCASE("oversized steps are rejected") {
        CHECK_THROWS_AS(central_derivative(StarBody::ball(3), pole, 0, 0.25, 32), InputError);
    }
}

TEST_CASE("symmetry reports") {
    SUBCASE("unit ball: everything centered and flat") {
        SweepOptions opts;
        opts.grid_points = 21;
        opts.quad_order = 24;
        const SweepReport r =
            symmetry_report(StarBody::ball(3), 1, direction_grid(3, 8), opts);
        REQUIRE(r.records.size() == 8);
        for (const PoleRecord& rec : r.records) {
            CHECK_FALSE(rec.error.has_value());
            CHECK(rec.t_star == 0.0);
            CHECK(rec.profile_evenness_defect < 1e-10);
        }
        CHECK(r.max_abs_t_star == 0.0);
        CHECK(r.max_abs_central_derivative < 1e-8);
    }
    SUBCASE("shifted ball: t_star tracks <c, xi> across poles") {
        const Vec c = v3(0, 0, 0.1);
        SweepOptions opts;
        opts.grid_points = 41;
        opts.quad_order = 24;
        const std::vector<Direction> poles = direction_grid(3, 8);
        const SweepReport r = symmetry_report(StarBody::shifted_ball(c, 1.0), 0, poles, opts);
        const double t0 = StarBody::shifted_ball(c, 1.0).offset_bound().t0;
        const double step = 2.0 * t0 / (opts.grid_points - 1);
        for (const PoleRecord& rec : r.records) {
            REQUIRE_FALSE(rec.error.has_value());
            CHECK(std::abs(rec.t_star - c.dot(rec.pole.vec())) <= step);
        }
        CHECK(r.max_abs_t_star == doctest::Approx(0.1).epsilon(0.5));
    }
}

TEST_CASE("l = d-1 profiles are flat") {
    SUBCASE("d=3 ellipsoid") {
        SweepOptions opts;
        opts.grid_points = 21;
        const OffsetProfile p =
            offset_profile(StarBody::ellipsoid(v3(1.3, 1.0, 0.8)), Direction::axis(3, 2), 2, opts);
        for (double w : p.w_values) CHECK(w == doctest::Approx(kPi).epsilon(1e-4));
    }
    SUBCASE("d=4 shifted ball") {
        Vec c = Vec::Zero(4);
        c[3] = 0.2;
        SweepOptions opts;
        opts.grid_points = 11;
        opts.quad_order = 12;
        const OffsetProfile p =
            offset_profile(StarBody::shifted_ball(c, 1.0), Direction::axis(4, 3), 3, opts);
        for (double w : p.w_values) CHECK(w == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-4));
    }
}
