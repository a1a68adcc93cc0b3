// Times the parallel offset-profile kernel against the serial reference
// and checks that both produce identical grids.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "quermass/parallel.hpp"
#include "quermass/sweep.hpp"

using namespace quermass;

namespace {

struct TimedProfile {
    OffsetProfile profile;
    double seconds;
};

TimedProfile time_profile(const StarBody& body, const Direction& pole, int l,
                          const SweepOptions& opts, bool parallel) {
    const auto start = std::chrono::steady_clock::now();
    OffsetProfile p = parallel ? offset_profile(body, pole, l, opts)
                               : offset_profile_serial(body, pole, l, opts);
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(p), s};
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap_from_env();
    const int grid_points = argc > 1 ? std::atoi(argv[1]) : 101;

    struct Case {
        const char* name;
        StarBody body;
        int l;
    };
    Vec a3(3);
    a3 << 1.2, 1.0, 0.85;
    Vec a4(4);
    a4 << 1.1, 1.0, 0.9, 0.85;
    const Case cases[] = {
        {"d=3 ellipsoid l=1", StarBody::ellipsoid(a3), 1},
        {"d=3 ellipsoid l=2", StarBody::ellipsoid(a3), 2},
        {"d=4 ellipsoid l=2", StarBody::ellipsoid(a4), 2},
    };

    std::printf("%-22s %12s %12s %9s\n", "case", "serial [s]", "parallel [s]", "speedup");
    for (const Case& c : cases) {
        const int d = c.body.dim();
        const Direction pole = Direction::axis(d, d - 1);
        SweepOptions opts;
        opts.grid_points = grid_points | 1;

        const TimedProfile serial = time_profile(c.body, pole, c.l, opts, false);
        const TimedProfile par = time_profile(c.body, pole, c.l, opts, true);
        const double ts = serial.seconds;
        const double tp = par.seconds;

        double max_diff = 0.0;
        for (std::size_t i = 0; i < serial.profile.w_values.size(); ++i)
            max_diff = std::max(max_diff,
                                std::abs(serial.profile.w_values[i] - par.profile.w_values[i]));
        if (max_diff != 0.0) {
            std::printf("%-22s kernels disagree (max diff %.3e)\n", c.name, max_diff);
            return 1;
        }
        std::printf("%-22s %12.3f %12.3f %8.2fx\n", c.name, ts, tp, ts / tp);
    }
    return 0;
}
