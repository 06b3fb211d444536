#pragma once

#include <span>
#include <utility>

#include "attlab/cover.hpp"
#include "attlab/universe.hpp"

namespace attlab {

/// Per-scale bookkeeping of a hull computation: for each cover member G the
/// raw touch set {omega : K(omega) meets G}, its measurable hull, and the
/// probability that hull attains.
struct HullScaleTrace {
    double radius = 0;
    std::vector<IndexSet> touch;
    std::vector<IndexSet> touch_hull;
    std::vector<double> attained_probability;
};

struct HullTrace {
    std::vector<HullScaleTrace> scales;
};

/// Scales 1..separating_scale(sp): the list every hull call site uses. The
/// finest family has singleton members, which is what makes the scalewise
/// intersection exact rather than an approximation.
std::vector<FiniteCoverFamily> hull_scales(const FiniteSpace& sp);

/// Smallest closed random set containing K, exact on finite universes.
///
/// Scale r contributes the union of G x hull(M^G) over cover members G with
/// M^G = {omega : K(omega) meets G}; the result is the intersection over all
/// scales. Sections come out block-constant, contain K everywhere, and are
/// minimal among closed measurable a.s.-supersets up to zero-weight blocks.
/// Throws if the scale list is empty or fails to separate the carrier.
std::pair<RandomSet, HullTrace> closed_random_hull(const RandomSet& K, const FiniteUniverse& u,
                                                   const FiniteSpace& sp,
                                                   std::span<const FiniteCoverFamily> scales,
                                                   bool with_trace = true);

struct FamilyCoverTrace {
    struct PerMember {
        std::vector<int> selected;  // family indices, in first-contribution order
        double attained_probability = 0;
    };
    struct PerScale {
        double radius = 0;
        std::vector<PerMember> members;
    };
    std::vector<PerScale> scales;
    std::vector<int> certificate;  // sorted union of all selections
};

/// Minimal closed random set containing every family member almost surely.
/// Members that are not block-constant are hulled first. The certificate
/// subfamily realizes the result as a closure of unions (validated by
/// certificate_union below).
std::pair<RandomSet, FamilyCoverTrace> minimal_closed_cover(
    std::vector<RandomSet> family, const FiniteUniverse& u, const FiniteSpace& sp,
    std::span<const FiniteCoverFamily> scales, bool with_trace = true);

/// Pointwise union over the certificate subfamily (closure is the identity
/// on a finite carrier).
RandomSet certificate_union(const std::vector<RandomSet>& members, std::span<const int> certificate,
                            int universe_size, int carrier_size);

}  // namespace attlab
