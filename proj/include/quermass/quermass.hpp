#pragma once

#include <string>
#include <vector>

#include "quermass/section.hpp"

namespace quermass {

struct QuermassValue {
    int l;
    double value;
    std::string method_tag;  // "curvature-integral" | "steiner-fit" | "closed-form"
};

/// e_j(kappas) / C(n, j), the normalized elementary symmetric mean.
double elementary_symmetric_mean(const std::vector<double>& kappas, int j);

/// Binomial coefficient as a double.
double binomial(int n, int k);

/// W_0: (1/(d-1)) * integral of r^{d-1} over the equator sphere.
QuermassValue section_volume(const Section& section, int order);

/// Surface area of the section boundary: integral of r^{d-2} / <eta, n>.
QuermassValue surface_area(const Section& section, int order);

/// W_l = (1/(d-1)) * integral of H_{l-1} over the boundary, using the
/// same surface element as surface_area. Requires 1 <= l <= d-1.
QuermassValue curvature_quermass(const Section& section, int l, int order);

/// Deviation of H_{l-1}(1 + delta) from its linearization 1 + ((l-1)/(d-2)) sum(delta);
/// contains only terms of degree >= 2 in the deltas.
double remainder_term_P(const std::vector<double>& deltas, int l);

struct SteinerOptions {
    int fit_samples = 10;       // s = 0.05, 0.10, ..., 0.50
    double s_max = 0.5;
    int qmc_points = 200000;    // per fit sample; one shared distance pass covers all samples
    int boundary_cloud_order = 48;  // equator-rule order for the boundary point cloud
    unsigned seed = 20120;
    bool skip_convexity_check = false;
};

/// Independent oracle: fits vol(section + s*B) = sum_i C(d-1,i) W_i s^i by
/// least squares, with parallel-body volumes from quasi-Monte Carlo
/// membership sampling. Requires a convex section.
QuermassValue steiner_quermass_oracle(const Section& section, int l,
                                      const SteinerOptions& opts = {});

}  // namespace quermass
