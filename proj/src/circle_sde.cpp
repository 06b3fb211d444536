#include "attlab/circle_sde.hpp"

#include <algorithm>
#include <cmath>

namespace attlab {

double circle_em(const CircleBundle& bundle, long long k_from, long long k_to, double x0) {
    double x = x0;
    for (long long k = k_from; k < k_to; ++k) {
        auto [dw1, dw2] = bundle.increment(k);
        x += std::cos(x) * dw1 + std::sin(x) * dw2;
    }
    return x;
}

std::vector<double> circle_pullback(const CircleBundle& bundle, std::span<const double> x0s,
                                    long long n) {
    std::vector<double> out;
    out.reserve(x0s.size());
    const long long k0 = -n * bundle.steps_per_unit();
    for (double x0 : x0s) out.push_back(CircleSpace::wrap(circle_em(bundle, k0, 0, x0)));
    return out;
}

double circle_pullback_one(const CircleBundle& bundle, double x0, long long n) {
    return CircleSpace::wrap(circle_em(bundle, -n * bundle.steps_per_unit(), 0, x0));
}

double circular_distance(double a, double b) {
    double d = std::abs(CircleSpace::wrap(a) - CircleSpace::wrap(b));
    return std::min(d, kTwoPi - d);
}

double circular_diameter(std::span<const double> points) {
    double best = 0;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            best = std::max(best, circular_distance(points[i], points[j]));
    return best;
}

StablePointEstimate stable_point_estimate(const CircleBundle& bundle, long long T, int n_points) {
    std::vector<double> x0s(n_points);
    for (int i = 0; i < n_points; ++i) x0s[i] = kTwoPi * double(i) / double(n_points);
    std::vector<double> images = circle_pullback(bundle, x0s, T);

    // Circular median over the data points (deterministic tie-break by index).
    double best_cost = std::numeric_limits<double>::infinity();
    double median = images[0];
    for (double c : images) {
        double cost = 0;
        for (double p : images) cost += circular_distance(c, p);
        if (cost < best_cost) {
            best_cost = cost;
            median = c;
        }
    }

    std::vector<double> devs;
    devs.reserve(images.size());
    for (double p : images) devs.push_back(circular_distance(median, p));
    std::nth_element(devs.begin(), devs.begin() + devs.size() / 2, devs.end());

    StablePointEstimate est;
    est.s_est = median;
    est.dispersion = devs[devs.size() / 2];
    est.converged = est.dispersion <= 0.2;
    return est;
}

double lyapunov_estimate(const CircleBundle& bundle, double T, double x0) {
    const long long steps = llround(T / bundle.dt());
    double x = x0;
    double log_norm = 0;
    for (long long k = 0; k < steps; ++k) {
        auto [dw1, dw2] = bundle.increment(k);
        double factor = 1.0 - std::sin(x) * dw1 + std::cos(x) * dw2;
        log_norm += std::log(std::max(std::abs(factor), 1e-300));
        x += std::cos(x) * dw1 + std::sin(x) * dw2;
    }
    return log_norm / (double(steps) * bundle.dt());
}

double lyapunov_finite_difference(const CircleBundle& bundle, double T, double x0, double eps) {
    const long long steps = llround(T / bundle.dt());
    double hi = circle_em(bundle, 0, steps, x0 + eps);
    double lo = circle_em(bundle, 0, steps, x0 - eps);
    return std::log(std::abs(hi - lo) / (2 * eps)) / (double(steps) * bundle.dt());
}

namespace {

/// Exact inverse of the forward EM composition over [k_lo, k_hi): Newton on
/// each substep. Pathwise, not just in law: the forward image of the result
/// returns to y up to rounding.
double exact_inverse_em(const CircleBundle& bundle, long long k_hi, long long k_lo, double y0) {
    double y = y0;
    for (long long k = k_hi - 1; k >= k_lo; --k) {
        auto [dw1, dw2] = bundle.increment(k);
        double x = y - std::cos(y) * dw1 - std::sin(y) * dw2;
        for (int it = 0; it < 4; ++it) {
            double f = x + std::cos(x) * dw1 + std::sin(x) * dw2 - y;
            double fp = 1.0 - std::sin(x) * dw1 + std::cos(x) * dw2;
            x -= f / fp;
        }
        y = x;
    }
    return y;
}

}  // namespace

double lyapunov_reversed_estimate(const CircleBundle& bundle, double T, double probe) {
    const long long steps = llround(T / bundle.dt());
    double y = probe;
    double log_norm = 0;
    for (long long k = steps - 1; k >= 0; --k) {
        auto [dw1, dw2] = bundle.increment(k);
        // exact inverse of x -> x + cos(x) dw1 + sin(x) dw2 at y
        double x = y - std::cos(y) * dw1 - std::sin(y) * dw2;
        for (int it = 0; it < 4; ++it) {
            double f = x + std::cos(x) * dw1 + std::sin(x) * dw2 - y;
            double fp = 1.0 - std::sin(x) * dw1 + std::cos(x) * dw2;
            x -= f / fp;
        }
        log_norm += std::log(std::max(std::abs(1.0 - std::sin(x) * dw1 + std::cos(x) * dw2),
                                      1e-300));
        y = x;
    }
    return log_norm / T;
}

BackwardHitReport backward_hitting(const CircleBundle& bundle, double x, double y, double delta,
                                   double budget_t, int required_epochs) {
    BackwardHitReport rep;
    const long long steps = llround(budget_t / bundle.dt());
    double pos = y;
    bool armed = true;
    for (long long j = 0; j < steps; ++j) {
        auto [dw1, dw2] = bundle.increment(-j - 1);
        pos += -std::cos(pos) * dw1 - std::sin(pos) * dw2;
        double d = circular_distance(pos, x);
        if (armed && d <= delta) {
            rep.epochs++;
            rep.epoch_times.push_back(double(j + 1) * bundle.dt());
            armed = false;
            if (rep.epochs >= required_epochs) break;
        } else if (!armed && d >= 2 * delta) {
            armed = true;
        }
    }
    rep.certified = rep.epochs >= required_epochs;
    return rep;
}

double adversarial_preimage(const CircleBundle& bundle, double target, long long n, double tol) {
    // Almost every initial point is pulled onto the stable point, so the
    // z-window whose image reaches the target is about e^{-n/2} thin. Only
    // the exact inverse of the forward EM composition lands inside it; a
    // few Newton polish steps with a probed derivative absorb the rounding
    // amplified by the expansion along the arriving orbit.
    auto offset = [&](double z) {
        double img = circle_pullback_one(bundle, z, n);
        double d = std::fmod(img - target, kTwoPi);
        if (d > kTwoPi / 2) d -= kTwoPi;
        if (d < -kTwoPi / 2) d += kTwoPi;
        return d;
    };

    const long long k_lo = -n * bundle.steps_per_unit();
    double z = exact_inverse_em(bundle, 0, k_lo, target);
    double best_z = z, best_f = std::abs(offset(z));
    for (int it = 0; it < 60 && best_f > tol; ++it) {
        double f = offset(z);
        // probe step tuned so the image gap is measurable but on-branch
        double h = 1e-12, gap = 0;
        for (int tries = 0; tries < 20; ++tries) {
            gap = offset(z + h) - f;
            if (std::abs(gap) > 0.5 && h > 1e-16) {
                h /= 8;
                continue;
            }
            if (std::abs(gap) < 1e-8 && h < 1e-7) {
                h *= 8;
                continue;
            }
            break;
        }
        if (!(std::abs(gap) > 0)) break;
        z -= f * h / gap;
        double fz = std::abs(offset(z));
        if (fz < best_f) {
            best_f = fz;
            best_z = z;
        }
    }
    if (best_f > tol)
        throw std::runtime_error("adversarial_preimage: did not converge onto the target");
    // returned unwrapped: re-wrapping would nudge z by an ulp of 2 pi, which
    // the expansion along the arriving orbit amplifies past tol
    return best_z;
}

std::vector<CloudAtHorizon<double>> circle_omega_clouds(const CircleBundle& bundle, double x0,
                                                        const std::vector<long long>& horizons,
                                                        long long t_max, double eps) {
    auto eval = [&](long long n, double b) { return circle_pullback_one(bundle, b, n); };
    auto dist = [](double a, double b) { return circular_distance(a, b); };
    return omega_limit_estimate<double>(eval, {x0}, horizons, t_max, eps, dist);
}

double circle_continuous_coverage(const CircleBundle& bundle, double x0, double delta,
                                  double budget_t, int probes) {
    int covered = 0;
    for (int i = 0; i < probes; ++i) {
        double y = kTwoPi * double(i) / double(probes);
        if (backward_hitting(bundle, x0, y, delta, budget_t, 1).certified) covered++;
    }
    return double(covered) / double(probes);
}

}  // namespace attlab
