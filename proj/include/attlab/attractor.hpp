#pragma once

#include <span>
#include <vector>

#include "attlab/finite_rds.hpp"
#include "attlab/random_set.hpp"

namespace attlab {

enum class AttractionMode { Pullback, Forward, Weak };

enum class Verdict { Converges, Diverges, Undetermined };

/// Distance record of one sample point: values over the requested schedule
/// plus the exact supremum over one tail period (the limit exists and equals
/// zero iff that supremum is zero).
struct DistanceSeries {
    int omega = 0;
    std::vector<std::pair<long long, double>> values;
    double tail_sup = 0;
    bool tail_constant = true;
};

struct AttractionReport {
    AttractionMode mode = AttractionMode::Pullback;
    std::vector<DistanceSeries> per_omega;                  // pullback / forward
    std::vector<std::pair<long long, double>> exceedance;   // weak: (t, P*(d > eps))
    double eps = 0;
    Verdict verdict = Verdict::Undetermined;
    bool exact = true;
};

/// Exact attraction verdict on the finite engine. Pullback and forward use
/// the respective tail distances; the weak mode reports outer-measure
/// exceedance probabilities and decides the in-probability limit exactly
/// (every positive-block tail distance must vanish, uniformly in eps).
AttractionReport attracts(const FiniteRds& rds, const RandomSet& B, const RandomSet& A,
                          AttractionMode mode, std::span<const long long> schedule,
                          double eps = 0.0);

struct AttractorResult {
    RandomSet attractor;
    std::vector<int> certificate;  // indices of the countable subfamily
    FamilyCoverTrace cover_trace;
};

/// Minimal pullback attractor for the family: the minimal closed random set
/// containing the hulls of the omega-limits of the members. Strictly
/// invariant, attracts every member exactly, and is contained in every other
/// pullback attractor up to zero-weight blocks.
AttractorResult minimal_pullback_attractor(const FiniteRds& rds,
                                           const std::vector<RandomSet>& family,
                                           std::span<const FiniteCoverFamily> scales);

/// Per member B and cover set G, the measurable infinitely-often sets: the
/// blocks of positive weight containing a sample point whose pullback images
/// of B meet G somewhere in the periodic tail.
struct WeakTrace {
    struct PerScale {
        double radius = 0;
        std::vector<IndexSet> infinitely_often;  // per member G
    };
    struct PerFamilyMember {
        std::vector<PerScale> scales;
    };
    std::vector<PerFamilyMember> members;
    std::vector<RandomSet> k_sets;  // assembled accumulation sets, one per member
};

struct WeakAttractorResult {
    RandomSet attractor;
    std::vector<int> certificate;
    WeakTrace trace;
};

/// Minimal weak attractor: assembles each member's accumulation set from the
/// infinitely-often sets across all scales, then takes the minimal closed
/// cover of those. "Infinitely often" is decided exactly via periodic tails.
WeakAttractorResult minimal_weak_attractor(const FiniteRds& rds,
                                           const std::vector<RandomSet>& family,
                                           std::span<const FiniteCoverFamily> scales);

struct BruteBounds {
    int max_points = 4;
    int max_carrier = 5;
    int max_blocks = 3;
};

struct CostBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every block-constant compact-valued strictly invariant random set that
/// attracts all family members in the given mode, verified by exact tail
/// limits; sections on zero-weight blocks are canonically empty. Refuses
/// instances beyond the bounds with a candidate-count estimate.
std::vector<RandomSet> brute_force_attractors(const FiniteRds& rds,
                                              const std::vector<RandomSet>& family,
                                              AttractionMode mode, BruteBounds bounds = {});

/// Pointwise intersection restricted to positive-weight blocks (sections on
/// zero-weight blocks come out empty).
RandomSet intersect_on_positive_blocks(const std::vector<RandomSet>& sets,
                                       const FiniteUniverse& u, int carrier_size);

struct OmegaUnionComparison {
    RandomSet omega_union;  // union of the family's omega-limit sections (already closed)
    RandomSet minimal;      // minimal pullback attractor
    bool equal_on_positive_blocks = true;
    std::vector<std::pair<int, int>> gap_witnesses;  // (omega, x) in minimal \ union
};

/// Compares the closure of the union of the omega-limit sets against the
/// minimal pullback attractor. Equality holds for deterministic engines; a
/// witnessed gap shows the union formula failing as a description of the
/// minimal attractor.
OmegaUnionComparison omega_union_vs_minimal(const FiniteRds& rds,
                                            const std::vector<RandomSet>& family,
                                            std::span<const FiniteCoverFamily> scales);

}  // namespace attlab
