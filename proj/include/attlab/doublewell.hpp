#pragma once

#include <optional>
#include <vector>

#include "attlab/attractor.hpp"

namespace attlab {

/// Closed-form solution of xdot = x - x^3 from x at time 0:
/// x e^t / sqrt(1 + x^2 (e^{2t} - 1)). Fixed points -1, 0, 1.
double doublewell_flow(double t, double x);

struct DoublewellConfig {
    double grid_step = 0.01;
    double radius = 3.0;
    long long horizon = 60;  // closed-form interval route evaluation time
};

struct DoublewellReport {
    DoublewellConfig config;
    std::vector<double> grid;

    // Point route (finite engine, family of all grid singletons).
    std::vector<double> point_attractor;     // expected {-1, 0, 1}
    bool point_attractor_exact = false;      // equals {-1, 0, 1} exactly
    bool point_attractor_strictly_invariant = false;

    // Interval route (exact closed form; the snapped grid map collapses the
    // open interval, so the set attractor is taken from the flow itself).
    double set_lo = 0, set_hi = 0;           // closed-form limits, exactly [-1, 1]
    std::vector<double> set_attractor;       // grid restriction of [set_lo, set_hi]
    double set_attractor_max_gap = 0;        // Hausdorff gap to grid cap [-1,1]
    double interval_residual = 0;            // |flow(horizon, +-R)| - 1 decay check

    // The two non-minimal point attractors.
    bool candidate_left_pass = false;        // [-1,0] U {1}
    bool candidate_right_pass = false;       // {-1} U [0,1]
    bool minimal_contained_in_candidates = false;

    bool pass = false;
};

/// Builds the deterministic grid engine from the time-1 flow map (nearest
/// grid point), computes the minimal point attractor there, evaluates the
/// interval attractor from the closed form, and audits the non-minimal
/// point-attractor candidates. The grid must contain -1, 0, 1 exactly.
DoublewellReport doublewell_attractor_suite(const DoublewellConfig& config);

}  // namespace attlab
