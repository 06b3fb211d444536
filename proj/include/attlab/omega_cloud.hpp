#pragma once

#include <vector>

namespace attlab {

/// Greedy eps-net over the input order: a point becomes a representative iff
/// it is farther than eps from every representative so far. Deterministic.
template <class Point, class Dist>
std::vector<Point> eps_cluster(const std::vector<Point>& pts, double eps, Dist&& dist) {
    std::vector<Point> reps;
    for (const auto& p : pts) {
        bool covered = false;
        for (const auto& r : reps)
            if (dist(p, r) <= eps) {
                covered = true;
                break;
            }
        if (!covered) reps.push_back(p);
    }
    return reps;
}

template <class Point>
struct CloudAtHorizon {
    long long horizon = 0;
    std::vector<Point> representatives;
    double diameter = 0;  // max pairwise distance among representatives
};

/// Cluster representatives of the pullback images {eval(n, b)} for integer
/// n in [horizon, t_max] and b in the sample of the attracted set, one cloud
/// per requested horizon. Shrinkage across horizons is reported by the
/// caller, never assumed.
template <class Point, class Eval, class Dist>
std::vector<CloudAtHorizon<Point>> omega_limit_estimate(
    Eval&& pullback_eval, const std::vector<Point>& samples,
    const std::vector<long long>& horizons, long long t_max, double eps, Dist&& dist) {
    std::vector<CloudAtHorizon<Point>> out;
    for (long long h : horizons) {
        std::vector<Point> pts;
        for (long long n = h; n <= t_max; ++n)
            for (const auto& b : samples) pts.push_back(pullback_eval(n, b));
        CloudAtHorizon<Point> cloud;
        cloud.horizon = h;
        cloud.representatives = eps_cluster(pts, eps, dist);
        for (size_t i = 0; i < cloud.representatives.size(); ++i)
            for (size_t j = i + 1; j < cloud.representatives.size(); ++j)
                cloud.diameter = std::max(
                    cloud.diameter, dist(cloud.representatives[i], cloud.representatives[j]));
        out.push_back(std::move(cloud));
    }
    return out;
}

}  // namespace attlab
