#pragma once

#include <cstdint>
#include <vector>

#include "attlab/ext_dist.hpp"
#include "attlab/ou.hpp"
#include "attlab/warped.hpp"

namespace attlab {

// The strip system: deterministic downward motion in y driven by
// g(x) = -min(1, 2(1-x)) (continuous, non-decreasing, g == -1 on [0,1/2],
// g(1) = 0), horizontal translation by the OU path while y > 0, exponential
// contraction onto the OU trajectory after touchdown. g is pinned here so
// the descent time has a closed form; any conformant choice would do.

/// Time for the height to reach 0 from y: y itself for y <= 1/2, then
/// 1/2 + (1/2) log(1/(2(1-y))) up to y < 1; infinite at y = 1.
ExtDist descent_time(double y);

/// Height after time t >= 0 from y in [0,1]; non-increasing in t, exactly 0
/// from descent_time(y) on, constant 1 at y = 1.
double height_flow(double t, double y);

/// Inverse of descent_time on [0, 1): the y whose descent takes exactly tau.
double descent_time_inverse(double tau);

/// phi(t, theta_{base_k * dt} omega)(x, y) for t >= 0 on the OU grid.
StripPoint strip_flow(const OuPath& ou, long long base_k, double t, StripPoint s0);

/// The three-sided frame ([z-g, z+g] x {0}) U ({z-g} x [0,1]) U ({z+g} x [0,1]):
/// a strictly invariant forward attractor for every frame width g > 0.
struct FrameSet {
    double z = 0;
    double gamma = 0;

    double distance(StripPoint p) const;        // Euclidean distance to the set
    StripPoint boundary_point(double u) const;  // arc-length parameterization, u in [0,1)
};

FrameSet frame_set(double gamma, double z);

struct FrameInvarianceReport {
    double forward_sup = 0;  // sup over sampled frame points of d(phi(pt), target frame)
    double reverse_sup = 0;  // sup over sampled target points of preimage reconstruction error
};

/// Checks phi(t, omega) FrameSet(Z(0)) = FrameSet(Z(t)) both ways: forward by
/// mapping samples, reverse by constructing closed-form preimages of target
/// samples and pushing them through the flow.
FrameInvarianceReport frame_invariance_check(const OuPath& ou, double gamma, double t, int samples);

// ---------------------------------------------------------------------------
// Forward-attraction experiment: Euclidean distances contract like e^{-t},
// while under the triple-exponential warp the running maximum of the OU path
// keeps re-inflating the distance along [T, 2T].

struct OuForwardConfig {
    Warp warp = Warp::TripleExp;
    double T = 100.0;
    int paths = 200;
    uint64_t seed = 1;
    double grid_dt = 0.1;
    double b_lo = -2.0, b_hi = 2.0;  // the attracted set B = [b_lo, b_hi] x {0}
    int threads = 0;
};

struct OuForwardPath {
    uint64_t path_seed = 0;
    double z0 = 0;
    double euclid_residual = 0;   // max |measured - e^{-t} c(omega)| over the grid
    double euclid_at_t20 = 0;     // distance at t = 20
    bool warped_exceeds = false;  // warped distance > 1 somewhere in [T, 2T]
};

struct OuForwardReport {
    OuForwardConfig config;
    std::vector<OuForwardPath> paths;
    double exceedance_fraction = 0;
    double max_euclid_residual = 0;
    bool euclid_pass = false;  // residual < 1e-9 and decay bound at t = 20
    std::vector<std::pair<double, double>> sample_series;  // (t, euclid distance), first path
};

OuForwardReport ou_forward_experiment(const OuForwardConfig& config);

}  // namespace attlab
