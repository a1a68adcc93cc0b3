#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quermass/quermass.hpp"

namespace quermass {

struct SweepOptions {
    int quad_order = 0;      // 0 = dimension default (see default_quad_order)
    int grid_points = 201;   // odd, so that t = 0 is a node
    double derivative_step_fraction = 0.1;  // h = fraction * t0 for central derivatives
};

/// Dimension-default quadrature order (latitude nodes per level).
int default_quad_order(int d);

struct OffsetProfile {
    Direction pole;
    int l;
    std::vector<double> t_values;  // symmetric uniform grid, odd count
    std::vector<double> w_values;
};

struct ArgmaxResult {
    double t_star;
    double w_star;
    bool boundary_warning;
};

struct PoleRecord {
    Direction pole;
    double t_star;
    double w_star;
    double central_derivative;
    double profile_evenness_defect;  // max |W(t) - W(-t)|
    bool boundary_warning;
    std::optional<std::string> error;
};

struct SweepReport {
    int l;
    std::vector<PoleRecord> records;
    double max_abs_t_star;
    double max_abs_central_derivative;
};

/// W_l of the section at offset t (section_volume for l = 0).
double quermass_at(const StarBody& body, const Direction& pole, int l, double t, int order);

/// Profile t -> W_l over a symmetric grid inside (-t0, t0). Grid nodes are
/// evaluated in parallel; offset_profile_serial is the reference kept for
/// testing and benchmarking.
OffsetProfile offset_profile(const StarBody& body, const Direction& pole, int l,
                             const SweepOptions& opts = {});
OffsetProfile offset_profile_serial(const StarBody& body, const Direction& pole, int l,
                                    const SweepOptions& opts = {});

/// Grid argmax; ties toward smallest |t|, then toward negative t.
ArgmaxResult argmax_offset(const OffsetProfile& profile);

/// Fourth-order central difference of t -> W_l at t = 0. Requires h < t0/4.
double central_derivative(const StarBody& body, const Direction& pole, int l, double h, int order);

SweepReport symmetry_report(const StarBody& body, int l, const std::vector<Direction>& pole_grid,
                            const SweepOptions& opts = {});

}  // namespace quermass
