#pragma once

#include <cstdint>
#include <vector>

#include "attlab/rng.hpp"

namespace attlab {

/// Stationary Ornstein-Uhlenbeck path sampled exactly on a grid: the AR(1)
/// transition Z(k+1) = e^{-dt} Z(k) + sqrt((1-e^{-2dt})/2) xi_k is the exact
/// conditional law, so no discretization error enters. Marginals are
/// N(0, 1/2) and the lag-s covariance is (1/2) e^{-|s|}.
///
/// Extension in either direction never mutates existing values: the driving
/// variates are counter-keyed by grid index, and the stationary process is
/// reversible, so prepending history with fresh variates has the right law.
class OuPath {
public:
    explicit OuPath(double dt, uint64_t seed);

    double dt() const { return dt_; }
    uint64_t seed() const { return seed_; }

    /// Z(k dt); the window extends lazily in both directions.
    double value(long long k) const;

    /// Z(t) for t on the grid (within 1e-9 of a multiple of dt).
    double at_time(double t) const;

    long long lowest() const { return -long_long(bwd_.size()); }
    long long highest() const { return long_long(fwd_.size()) - 1; }

private:
    static long long long_long(size_t s) { return static_cast<long long>(s); }
    void extend_to(long long k) const;

    double dt_;
    uint64_t seed_;
    double decay_, noise_;
    CounterRng rng_;
    mutable std::vector<double> fwd_;  // fwd_[k] = Z(k), k >= 0
    mutable std::vector<double> bwd_;  // bwd_[j] = Z(-(j+1))
};

}  // namespace attlab
