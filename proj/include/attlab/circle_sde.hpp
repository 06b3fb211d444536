#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "attlab/omega_cloud.hpp"
#include "attlab/rng.hpp"
#include "attlab/spaces.hpp"

namespace attlab {

/// Euler-Maruyama driver for dX = cos(X) dW1 + sin(X) dW2 on the circle.
/// Brownian increments are counter-keyed by substep index (negative indices
/// reach into the past), so one seed is one noise realization; backward
/// extension prepends only and every evaluation is reproducible bit for bit.
class CircleBundle {
public:
    explicit CircleBundle(uint64_t seed, double dt = 1e-3, double amplitude = 1.0)
        : seed_(seed), dt_(dt), amplitude_(amplitude), w1_(seed, 11), w2_(seed, 12),
          root_dt_(std::sqrt(dt)) {}

    uint64_t seed() const { return seed_; }
    double dt() const { return dt_; }
    double amplitude() const { return amplitude_; }
    long long steps_per_unit() const { return llround(1.0 / dt_); }

    /// Increments of (W1, W2) over [k dt, (k+1) dt).
    std::pair<double, double> increment(long long k) const {
        uint64_t c = zigzag(k);
        return {amplitude_ * root_dt_ * w1_.normal(c), amplitude_ * root_dt_ * w2_.normal(c)};
    }

private:
    static uint64_t zigzag(long long k) {
        return k >= 0 ? uint64_t(k) * 2 : uint64_t(-k) * 2 - 1;
    }

    uint64_t seed_;
    double dt_;
    double amplitude_;
    CounterRng w1_, w2_;
    double root_dt_;
};

/// EM evolution from substep k_from to k_to (k_to >= k_from), unwrapped.
double circle_em(const CircleBundle& bundle, long long k_from, long long k_to, double x0);

/// phi(n, theta_{-n} omega) x0 for integer horizon n: every initial point is
/// driven by the same increments over [-n, 0]. Wrapped to [0, 2pi).
std::vector<double> circle_pullback(const CircleBundle& bundle, std::span<const double> x0s,
                                    long long n);
double circle_pullback_one(const CircleBundle& bundle, double x0, long long n);

double circular_distance(double a, double b);
double circular_diameter(std::span<const double> points);  // max pairwise distance

struct StablePointEstimate {
    double s_est = 0;
    double dispersion = 0;  // circular median absolute deviation
    bool converged = true;  // dispersion <= 0.2
};

/// Circular median of the pullback images of equispaced initial points at
/// horizon T; depends on increments over [-T, 0] only.
StablePointEstimate stable_point_estimate(const CircleBundle& bundle, long long T,
                                          int n_points = 64);

/// (1/T) log of the linearized flow norm along the trajectory from x0,
/// integrating dv = v(-sin X dW1 + cos X dW2) with the same increments.
double lyapunov_estimate(const CircleBundle& bundle, double T, double x0 = 0.7);

/// Independent route: central finite difference of the flow map itself.
double lyapunov_finite_difference(const CircleBundle& bundle, double T, double x0 = 0.7,
                                  double eps = 1e-7);

/// Expansion rate at the unstable point: the forward EM steps are inverted
/// exactly (Newton per substep), which traces the orbit arriving at the
/// probe; the forward variational product along an arriving orbit mirrors
/// the stable-point contraction with the opposite sign.
double lyapunov_reversed_estimate(const CircleBundle& bundle, double T, double probe = 1.234);

/// Backward trajectory phi(-t, omega) y, one EM substep at a time; visits
/// are certified with an enter/exit hysteresis (enter at delta, re-arm at
/// 2 delta).
struct BackwardHitReport {
    int epochs = 0;
    std::vector<double> epoch_times;
    bool certified = false;  // >= required epochs within budget
};

BackwardHitReport backward_hitting(const CircleBundle& bundle, double x, double y, double delta,
                                   double budget_t, int required_epochs = 3);

/// Initial point whose pullback image at horizon n lands on the target,
/// found by inverting the forward EM composition exactly and polishing with
/// probed-derivative Newton steps. The expansion along the arriving orbit
/// quantizes the reachable images at roughly e^{n/2} ulp, which bounds how
/// small tol can be pushed at large n.
double adversarial_preimage(const CircleBundle& bundle, double target, long long n,
                            double tol = 1e-4);

/// Discrete-time omega-limit clouds for the circle system.
std::vector<CloudAtHorizon<double>> circle_omega_clouds(const CircleBundle& bundle, double x0,
                                                        const std::vector<long long>& horizons,
                                                        long long t_max, double eps);

/// Continuous-time coverage: the fraction of a probe grid on the circle that
/// the pullback images of x0 visit within the budget. A grid point y is a
/// pullback image of x0 at horizon t exactly when the backward trajectory
/// from y sits at x0 at time t, so each probe costs one hitting run instead
/// of a quadratic sweep of horizons.
double circle_continuous_coverage(const CircleBundle& bundle, double x0, double delta,
                                  double budget_t, int probes = 64);

}  // namespace attlab
