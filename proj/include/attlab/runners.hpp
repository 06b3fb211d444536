#pragma once

#include "attlab/circle_sde.hpp"
#include "attlab/doublewell.hpp"
#include "attlab/report.hpp"
#include "attlab/strip.hpp"

namespace attlab {

/// One experiment run: a JSON report, auxiliary files (CSV series, generated
/// instances), and the process exit code (0 pass, 1 fail, 2 undetermined).
struct RunArtifacts {
    Json report;
    std::vector<std::pair<std::string, std::string>> files;
    int exit_code = 0;
};

RunArtifacts run_doublewell(const DoublewellConfig& cfg);

RunArtifacts run_finite_gen(int count, const InstanceBounds& bounds, uint64_t seed);

/// Hulls, minimal pullback and weak attractors, invariance and attraction
/// audits for one instance; with_oracle adds the brute-force enumeration
/// comparison (bounded instances only).
RunArtifacts run_finite(const FiniteInstance& inst, bool with_oracle, uint64_t seed);

struct CircleSyncConfig {
    int seeds = 200;
    long long horizon = 30;
    int points = 16;
    uint64_t seed = 1;
    int threads = 0;
    double radius = 0.05;     // synchronization diameter target
    double fraction = 0.95;   // required fraction of seeds
};
RunArtifacts run_circle_sync(const CircleSyncConfig& cfg);

struct CircleLyapunovConfig {
    int paths = 100;
    double T = 2000;
    uint64_t seed = 1;
    bool reversed = false;
    int threads = 0;
    double expect = -0.5;
    double tol = 0.05;
};
RunArtifacts run_circle_lyapunov(const CircleLyapunovConfig& cfg);

struct CircleOmegaConfig {
    int seeds = 40;
    int x_count = 8;
    long long horizon = 30;
    long long t_max = 50;
    double cloud_eps = 0.02;
    double near_radius = 0.1;
    double near_fraction = 0.9;
    int pair_seeds = 5;
    int pairs = 8;
    double hit_delta = 0.1;
    double budget = 1e4;
    double hit_fraction = 0.9;
    uint64_t seed = 1;
    int threads = 0;
    bool adversarial_demo = true;
};
RunArtifacts run_circle_omega(const CircleOmegaConfig& cfg);

RunArtifacts run_ou_forward(const OuForwardConfig& cfg, double expect_fraction = 0.6);

RunArtifacts run_omega_union_finite(const FiniteInstance& inst);

struct OmegaUnionCircleConfig {
    uint64_t seed = 1;
    long long horizon = 30;
    long long preimage_horizon = 25;
    double target_radius = 0.3;
};
RunArtifacts run_omega_union_circle(const OmegaUnionCircleConfig& cfg);

}  // namespace attlab
