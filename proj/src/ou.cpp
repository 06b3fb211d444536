#include "attlab/ou.hpp"

#include <cmath>
#include <stdexcept>

namespace attlab {

namespace {
constexpr uint64_t kStreamInit = 0;
constexpr uint64_t kStreamForward = 1;
constexpr uint64_t kStreamBackward = 2;
}  // namespace

OuPath::OuPath(double dt, uint64_t seed) : dt_(dt), seed_(seed), rng_(seed) {
    if (!(dt > 0)) throw std::invalid_argument("OuPath: dt must be positive");
    decay_ = std::exp(-dt);
    noise_ = std::sqrt((1.0 - decay_ * decay_) / 2.0);
    fwd_.push_back(std::sqrt(0.5) * CounterRng(seed, kStreamInit).normal(0));
}

void OuPath::extend_to(long long k) const {
    CounterRng fwd_rng(seed_, kStreamForward);
    while (long_long(fwd_.size()) <= k) {
        long long j = long_long(fwd_.size());
        fwd_.push_back(decay_ * fwd_.back() + noise_ * fwd_rng.normal(uint64_t(j)));
    }
    CounterRng bwd_rng(seed_, kStreamBackward);
    while (long_long(bwd_.size()) < -k) {
        long long j = long_long(bwd_.size());
        double prev = j == 0 ? fwd_[0] : bwd_.back();
        bwd_.push_back(decay_ * prev + noise_ * bwd_rng.normal(uint64_t(j)));
    }
}

double OuPath::value(long long k) const {
    extend_to(k);
    return k >= 0 ? fwd_[size_t(k)] : bwd_[size_t(-k - 1)];
}

double OuPath::at_time(double t) const {
    long long k = llround(t / dt_);
    if (std::abs(k * dt_ - t) > 1e-9)
        throw std::invalid_argument("OuPath: time off the sampling grid");
    return value(k);
}

}  // namespace attlab
