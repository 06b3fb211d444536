#include "attlab/random_set.hpp"

#include <algorithm>

namespace attlab {

std::vector<FiniteCoverFamily> hull_scales(const FiniteSpace& sp) {
    return cover_scales(sp, separating_scale(sp));
}

namespace {

IndexSet touch_set(const RandomSet& K, const IndexSet& G) {
    IndexSet t(K.universe_size());
    for (int w = 0; w < K.universe_size(); ++w)
        if (K.sections[w].intersects(G)) t.set(w);
    return t;
}

}  // namespace

std::pair<RandomSet, HullTrace> closed_random_hull(const RandomSet& K, const FiniteUniverse& u,
                                                   const FiniteSpace& sp,
                                                   std::span<const FiniteCoverFamily> scales,
                                                   bool with_trace) {
    if (K.universe_size() != u.size())
        throw std::invalid_argument("closed_random_hull: universe size mismatch");
    if (scales.empty()) throw std::domain_error("closed_random_hull: empty scale list");

    RandomSet direct = block_union_hull(K, u);
    if (!with_trace && is_measurable(K, u)) return {std::move(direct), {}};

    RandomSet result = RandomSet::full(u.size(), sp.size());
    HullTrace trace;
    for (const auto& fam : scales) {
        HullScaleTrace st;
        st.radius = fam.radius;
        std::vector<IndexSet> level(u.size(), IndexSet(sp.size()));
        for (int g = 0; g < fam.size(); ++g) {
            IndexSet touch = touch_set(K, fam.members[g]);
            IndexSet hull = u.measurable_hull(touch);
            hull.for_each([&](int w) { level[w] |= fam.members[g]; });
            if (with_trace) {
                st.attained_probability.push_back(u.outer_measure(touch));
                st.touch.push_back(std::move(touch));
                st.touch_hull.push_back(std::move(hull));
            }
        }
        for (int w = 0; w < u.size(); ++w) result.sections[w] &= level[w];
        if (with_trace) trace.scales.push_back(std::move(st));
    }

    if (!(result == direct))
        throw std::logic_error("closed_random_hull: scale list does not separate the carrier");
    return {std::move(result), std::move(trace)};
}

std::pair<RandomSet, FamilyCoverTrace> minimal_closed_cover(
    std::vector<RandomSet> family, const FiniteUniverse& u, const FiniteSpace& sp,
    std::span<const FiniteCoverFamily> scales, bool with_trace) {
    FamilyCoverTrace trace;
    if (family.empty()) return {RandomSet(u.size(), sp.size()), std::move(trace)};
    if (scales.empty()) throw std::domain_error("minimal_closed_cover: empty scale list");

    for (auto& member : family)
        if (!is_measurable(member, u)) member = block_union_hull(member, u);

    RandomSet expected(u.size(), sp.size());
    for (const auto& member : family)
        for (int w = 0; w < u.size(); ++w) expected.sections[w] |= member.sections[w];

    RandomSet result = RandomSet::full(u.size(), sp.size());
    std::vector<char> in_certificate(family.size(), 0);
    for (const auto& fam : scales) {
        FamilyCoverTrace::PerScale ps;
        ps.radius = fam.radius;
        std::vector<IndexSet> level(u.size(), IndexSet(sp.size()));
        for (int g = 0; g < fam.size(); ++g) {
            FamilyCoverTrace::PerMember pm;
            IndexSet acc(u.size());
            for (int a = 0; a < int(family.size()); ++a) {
                IndexSet t = touch_set(family[a], fam.members[g]);
                if (!t.subset_of(acc)) {
                    acc |= t;
                    pm.selected.push_back(a);
                    in_certificate[a] = 1;
                }
            }
            pm.attained_probability = u.outer_measure(acc);
            acc.for_each([&](int w) { level[w] |= fam.members[g]; });
            if (with_trace) ps.members.push_back(std::move(pm));
        }
        for (int w = 0; w < u.size(); ++w) result.sections[w] &= level[w];
        if (with_trace) trace.scales.push_back(std::move(ps));
    }

    for (int a = 0; a < int(family.size()); ++a)
        if (in_certificate[a]) trace.certificate.push_back(a);

    if (!(result == expected))
        throw std::logic_error("minimal_closed_cover: scale list does not separate the carrier");
    return {std::move(result), std::move(trace)};
}

RandomSet certificate_union(const std::vector<RandomSet>& members, std::span<const int> certificate,
                            int universe_size, int carrier_size) {
    RandomSet out(universe_size, carrier_size);
    for (int a : certificate)
        for (int w = 0; w < universe_size; ++w) out.sections[w] |= members[a].sections[w];
    return out;
}

}  // namespace attlab
