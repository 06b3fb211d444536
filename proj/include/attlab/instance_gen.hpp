#pragma once

#include <cstdint>

#include "attlab/finite_rds.hpp"
#include "attlab/rng.hpp"

namespace attlab {

struct InstanceBounds {
    int max_points = 4;
    int max_carrier = 5;
    int max_blocks = 3;
};

/// A finite engine instance bundled with an attracted family and raw
/// set-valued maps for hull exercises. Family members and hull inputs are
/// deliberately allowed to vary inside blocks (non-measurable); the cocycle
/// itself is always measurable.
struct FiniteInstance {
    FiniteRds rds;
    std::vector<RandomSet> family;
    std::vector<RandomSet> hull_inputs;
};

/// Sequential view over the counter generator for single-threaded
/// construction; a given seed always replays the same stream.
class SeqRng {
public:
    explicit SeqRng(uint64_t seed, uint64_t stream = 0) : rng_(seed, stream) {}
    uint64_t next(uint64_t bound) { return rng_.uniform_int(counter_++, bound); }
    double uniform() { return rng_.uniform(counter_++); }
    bool chance(double p) { return uniform() < p; }

private:
    CounterRng rng_;
    uint64_t counter_ = 0;
};

/// Random universe within the bounds: blocks partition the points, the shift
/// permutes equal-size blocks, weights are constant along shift cycles with
/// zero-weight cycles allowed.
FiniteUniverse random_universe(SeqRng& rng, int max_points, int max_blocks);

/// Random set-valued map; sections vary freely inside blocks unless
/// measurable is forced.
RandomSet random_set_map(SeqRng& rng, const FiniteUniverse& u, int carrier,
                         bool force_measurable = false);

FiniteInstance random_instance(uint64_t seed, const InstanceBounds& bounds,
                               bool allow_two_sided = true);

/// A forward-invariant random set grown from a random seed set by pushing
/// sections along the dynamics to the fixpoint.
RandomSet random_forward_invariant_set(SeqRng& rng, const FiniteRds& rds);

}  // namespace attlab
