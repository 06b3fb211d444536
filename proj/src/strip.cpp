#include "attlab/strip.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "attlab/parallel.hpp"

namespace attlab {

ExtDist descent_time(double y) {
    if (y < 0 || y > 1) throw std::domain_error("descent_time: y outside [0,1]");
    if (y <= 0.5) return ExtDist(y);
    if (y == 1.0) return ExtDist::infinity();
    return ExtDist(0.5 + 0.5 * std::log(1.0 / (2.0 * (1.0 - y))));
}

double height_flow(double t, double y) {
    if (y < 0 || y > 1) throw std::domain_error("height_flow: y outside [0,1]");
    if (t < 0) throw std::domain_error("height_flow: negative time");
    if (y == 1.0) return 1.0;
    if (y <= 0.5) return std::max(0.0, y - t);
    // descent at speed 2(1 - h) until height 1/2, unit speed afterwards
    double t1 = 0.5 * std::log(0.5 / (1.0 - y));
    if (t <= t1) return 1.0 - (1.0 - y) * std::exp(2.0 * t);
    return std::max(0.0, 0.5 - (t - t1));
}

double descent_time_inverse(double tau) {
    if (tau < 0) throw std::domain_error("descent_time_inverse: negative time");
    if (tau <= 0.5) return tau;
    return 1.0 - 0.5 * std::exp(1.0 - 2.0 * tau);
}

StripPoint strip_flow(const OuPath& ou, long long base_k, double t, StripPoint s0) {
    StripSpace::check_point(s0);
    if (t < 0) throw std::domain_error("strip_flow: negative time");
    long long kt = llround(t / ou.dt());
    if (std::abs(kt * ou.dt() - t) > 1e-9)
        throw std::invalid_argument("strip_flow: time off the OU grid");
    double z0 = ou.value(base_k);
    double zt = ou.value(base_k + kt);

    ExtDist tau = descent_time(s0.y);
    if (!tau.is_infinite() && t >= tau.value())
        return {std::exp(tau.value() - t) * (s0.x - z0) + zt, 0.0};
    return {s0.x + zt - z0, height_flow(t, s0.y)};
}

double FrameSet::distance(StripPoint p) const {
    double dy_out = std::max({0.0, -p.y, p.y - 1.0});
    double d_left = std::hypot(p.x - (z - gamma), dy_out);
    double d_right = std::hypot(p.x - (z + gamma), dy_out);
    double dx = std::max(0.0, std::abs(p.x - z) - gamma);
    double d_bottom = std::hypot(dx, p.y);
    return std::min({d_left, d_right, d_bottom});
}

StripPoint FrameSet::boundary_point(double u) const {
    double total = 2 * gamma + 2.0;
    double s = u * total;
    if (s < 2 * gamma) return {z - gamma + s, 0.0};
    s -= 2 * gamma;
    if (s < 1.0) return {z - gamma, s};
    return {z + gamma, s - 1.0};
}

FrameSet frame_set(double gamma, double z) {
    if (!(gamma > 0)) throw std::domain_error("frame_set: gamma must be positive");
    return FrameSet{z, gamma};
}

FrameInvarianceReport frame_invariance_check(const OuPath& ou, double gamma, double t,
                                             int samples) {
    FrameSet source = frame_set(gamma, ou.value(0));
    long long kt = llround(t / ou.dt());
    FrameSet target = frame_set(gamma, ou.value(kt));

    FrameInvarianceReport rep;
    for (int i = 0; i < samples; ++i) {
        StripPoint p = source.boundary_point(double(i) / samples);
        StripPoint q = strip_flow(ou, 0, t, p);
        rep.forward_sup = std::max(rep.forward_sup, target.distance(q));
    }

    // Reverse containment via closed-form preimages of target samples.
    auto height_inverse = [&](double yt) {
        // y at time 0 whose height reaches yt after time t.
        if (yt >= 0.5) return 1.0 - (1.0 - yt) * std::exp(-2.0 * t);
        double climb = 0.5 - yt;
        if (t <= climb) return yt + t;
        return 1.0 - 0.5 * std::exp(-2.0 * (t - climb));
    };
    for (int i = 0; i < samples; ++i) {
        StripPoint q = target.boundary_point(double(i) / samples);
        StripPoint p;
        if (q.y > 0) {
            double side = q.x < target.z ? -1.0 : 1.0;
            p = {source.z + side * gamma, height_inverse(q.y)};
        } else {
            double c = q.x - target.z;
            if (std::abs(c) <= gamma * std::exp(-t) * (1 + 1e-12)) {
                p = {source.z + c * std::exp(t), 0.0};
            } else {
                double tau = t + std::log(std::min(1.0, std::abs(c) / gamma));
                double side = c < 0 ? -1.0 : 1.0;
                p = {source.z + side * gamma, descent_time_inverse(std::max(0.0, tau))};
            }
        }
        double err = source.distance(p);
        StripPoint q_back = strip_flow(ou, 0, t, p);
        err = std::max(err, std::hypot(q_back.x - q.x, q_back.y - q.y));
        rep.reverse_sup = std::max(rep.reverse_sup, err);
    }
    return rep;
}

OuForwardReport ou_forward_experiment(const OuForwardConfig& config) {
    if (config.T < 10)
        throw std::domain_error("ou_forward_experiment: horizon T must be at least 10");
    OuForwardReport rep;
    rep.config = config;
    rep.paths.resize(config.paths);

    const CounterRng seeder(config.seed, 77);
    const long long spu = llround(1.0 / config.grid_dt);
    const long long k20 = 20 * spu;
    const long long kT = llround(config.T) * spu;
    const long long k2T = 2 * kT;

    parallel_for(
        config.paths,
        [&](int i) {
            OuForwardPath pr;
            pr.path_seed = seeder.bits(uint64_t(i));
            OuPath ou(config.grid_dt, pr.path_seed);
            pr.z0 = ou.value(0);
            double c = std::max(std::abs(config.b_lo - pr.z0), std::abs(config.b_hi - pr.z0));

            // Euclidean route over [0, 20] through the evaluator.
            for (long long k = 0; k <= k20; ++k) {
                double t = double(k) * config.grid_dt;
                StripPoint lo = strip_flow(ou, 0, t, {config.b_lo, 0.0});
                StripPoint hi = strip_flow(ou, 0, t, {config.b_hi, 0.0});
                double zt = ou.value(k);
                double measured = std::max(std::abs(lo.x - zt), std::abs(hi.x - zt));
                pr.euclid_residual =
                    std::max(pr.euclid_residual, std::abs(measured - std::exp(-t) * c));
                if (k == k20) pr.euclid_at_t20 = measured;
                if (i == 0) rep.sample_series.emplace_back(t, measured);
            }

            // Warped route over [T, 2T]. The image offsets e^{-t}(x - z0)
            // fall below one ulp of Z(t) and then below the double range
            // altogether, so they are carried by their logarithms.
            for (long long k = kT; k <= k2T && !pr.warped_exceeds; ++k) {
                double t = double(k) * config.grid_dt;
                double zt = ou.value(k);
                WarpedMagnitude d = WarpedMagnitude::finite(0.0);
                for (double endpoint : {config.b_lo, config.b_hi}) {
                    double gap = endpoint - pr.z0;
                    if (gap == 0) continue;
                    d = std::max(d, warped_log_offset_distance(
                                        zt, -t + std::log(std::abs(gap)),
                                        gap > 0 ? 1 : -1, 0.0, config.warp));
                }
                if (d > WarpedMagnitude::finite(1.0)) pr.warped_exceeds = true;
            }
            rep.paths[i] = pr;
        },
        config.threads);

    int exceed = 0;
    bool euclid_ok = true;
    for (const auto& pr : rep.paths) {
        exceed += pr.warped_exceeds ? 1 : 0;
        rep.max_euclid_residual = std::max(rep.max_euclid_residual, pr.euclid_residual);
        double c = std::max(std::abs(config.b_lo - pr.z0), std::abs(config.b_hi - pr.z0));
        if (pr.euclid_residual >= 1e-9 || pr.euclid_at_t20 > 1e-3 * c) euclid_ok = false;
    }
    rep.exceedance_fraction = double(exceed) / double(config.paths);
    rep.euclid_pass = euclid_ok;
    return rep;
}

}  // namespace attlab
