#include "quermass/sweep.hpp"

#include <algorithm>
#include <cmath>

namespace quermass {

int default_quad_order(int d) {
    switch (d) {
        case 3: return 64;
        case 4: return 24;
        case 5: return 14;
        default: return d <= 3 ? 64 : 10;
    }
}

double quermass_at(const StarBody& body, const Direction& pole, int l, double t, int order) {
    const Section section(body, pole, t);
    if (l == 0) return section_volume(section, order).value;
    return curvature_quermass(section, l, order).value;
}

namespace {

OffsetProfile make_profile(const StarBody& body, const Direction& pole, int l,
                           const SweepOptions& opts, bool parallel) {
    if (opts.grid_points < 11 || opts.grid_points % 2 == 0)
        throw InputError("offset_profile: grid_points must be odd and >= 11");
    const int order = opts.quad_order > 0 ? opts.quad_order : default_quad_order(body.dim());
    const double t0 = body.offset_bound().t0;
    const int n = opts.grid_points;

    OffsetProfile profile{pole, l, std::vector<double>(n), std::vector<double>(n)};
    for (int i = 0; i < n; ++i)
        profile.t_values[i] = t0 * (2.0 * i / (n - 1) - 1.0) * (1.0 - 1e-9);

    std::vector<std::string> errors(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i) {
        try {
            profile.w_values[i] = quermass_at(body, pole, l, profile.t_values[i], order);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (int i = 0; i < n; ++i)
        if (!errors[i].empty())
            throw GeometryError("offset_profile: node t = " + std::to_string(profile.t_values[i]) +
                                ": " + errors[i]);
    return profile;
}

}  // namespace

OffsetProfile offset_profile(const StarBody& body, const Direction& pole, int l,
                             const SweepOptions& opts) {
    return make_profile(body, pole, l, opts, true);
}

OffsetProfile offset_profile_serial(const StarBody& body, const Direction& pole, int l,
                                    const SweepOptions& opts) {
    return make_profile(body, pole, l, opts, false);
}

ArgmaxResult argmax_offset(const OffsetProfile& profile) {
    if (profile.t_values.empty()) throw InputError("argmax_offset: empty profile");
    const int n = static_cast<int>(profile.t_values.size());
    int best = 0;
    for (int i = 1; i < n; ++i) {
        const double w = profile.w_values[i], wb = profile.w_values[best];
        if (w > wb) {
            best = i;
        } else if (w == wb) {
            const double t = profile.t_values[i], tb = profile.t_values[best];
            if (std::abs(t) < std::abs(tb) || (std::abs(t) == std::abs(tb) && t < tb)) best = i;
        }
    }
    return ArgmaxResult{profile.t_values[best], profile.w_values[best],
                        best == 0 || best == n - 1};
}

double central_derivative(const StarBody& body, const Direction& pole, int l, double h,
                          int order) {
    const double t0 = body.offset_bound().t0;
    if (!(h > 0.0) || h >= t0 / 4.0)
        throw InputError("central_derivative: step must satisfy 0 < h < t0/4");
    if (order <= 0) order = default_quad_order(body.dim());
    const double wm2 = quermass_at(body, pole, l, -2.0 * h, order);
    const double wm1 = quermass_at(body, pole, l, -h, order);
    const double wp1 = quermass_at(body, pole, l, h, order);
    const double wp2 = quermass_at(body, pole, l, 2.0 * h, order);
    return (wm2 - 8.0 * wm1 + 8.0 * wp1 - wp2) / (12.0 * h);
}

SweepReport symmetry_report(const StarBody& body, int l, const std::vector<Direction>& pole_grid,
                            const SweepOptions& opts) {
    if (pole_grid.empty()) throw InputError("symmetry_report: empty pole grid");
    const int order = opts.quad_order > 0 ? opts.quad_order : default_quad_order(body.dim());
    const double h = opts.derivative_step_fraction * body.offset_bound().t0;

    SweepReport report{l, std::vector<PoleRecord>(), 0.0, 0.0};
    report.records.reserve(pole_grid.size());
    for (const Direction& pole : pole_grid) {
        PoleRecord rec{pole, 0.0, 0.0, 0.0, 0.0, false, std::nullopt};
        try {
            const OffsetProfile profile = offset_profile(body, pole, l, opts);
            const ArgmaxResult am = argmax_offset(profile);
            rec.t_star = am.t_star;
            rec.w_star = am.w_star;
            rec.boundary_warning = am.boundary_warning;
            const int n = static_cast<int>(profile.t_values.size());
            for (int i = 0; i < n / 2; ++i)
                rec.profile_evenness_defect =
                    std::max(rec.profile_evenness_defect,
                             std::abs(profile.w_values[i] - profile.w_values[n - 1 - i]));
            rec.central_derivative = central_derivative(body, pole, l, h, order);
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        report.records.push_back(std::move(rec));
    }
    for (const PoleRecord& rec : report.records) {
        if (rec.error) continue;
        report.max_abs_t_star = std::max(report.max_abs_t_star, std::abs(rec.t_star));
        report.max_abs_central_derivative =
            std::max(report.max_abs_central_derivative, std::abs(rec.central_derivative));
    }
    return report;
}

}  // namespace quermass
