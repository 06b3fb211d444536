#include "attlab/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace attlab {

namespace {

double set_distance(const IndexSet& B, const IndexSet& A, const FiniteSpace& sp) {
    return hausdorff_semi(B, A, sp).value();
}

}  // namespace

AttractionReport attracts(const FiniteRds& rds, const RandomSet& B, const RandomSet& A,
                          AttractionMode mode, std::span<const long long> schedule, double eps) {
    if (schedule.empty()) throw std::domain_error("attracts: empty schedule");
    AttractionReport rep;
    rep.mode = mode;
    rep.eps = eps;
    const int m = rds.universe.size();

    auto pullback_distance = [&](const PullbackTail& tail, int w, long long t) {
        IndexSet img = rds.map_set(tail.map_at(t), B.sections[rds.universe.theta(w, -tail.fold(t))]);
        return set_distance(img, A.sections[w], rds.space);
    };
    auto forward_distance = [&](const ForwardTail& tail, int w, long long t) {
        long long tf = tail.fold(t);
        IndexSet img = rds.map_set(tail.map_at(t), B.sections[w]);
        return set_distance(img, A.sections[rds.universe.theta(w, tf)], rds.space);
    };

    bool all_zero_tails = true;

    if (mode == AttractionMode::Pullback) {
        for (int w = 0; w < m; ++w) {
            PullbackTail tail = pullback_tail(rds, w);
            DistanceSeries s;
            s.omega = w;
            for (long long t : schedule) s.values.emplace_back(t, pullback_distance(tail, w, t));
            double first = pullback_distance(tail, w, tail.preperiod);
            s.tail_sup = 0;
            for (int t = tail.preperiod; t < tail.preperiod + tail.period; ++t) {
                double d = pullback_distance(tail, w, t);
                s.tail_sup = std::max(s.tail_sup, d);
                if (d != first) s.tail_constant = false;
            }
            if (rds.universe.in_positive_block(w) && s.tail_sup != 0) all_zero_tails = false;
            rep.per_omega.push_back(std::move(s));
        }
    } else {
        std::vector<ForwardTail> tails;
        tails.reserve(m);
        for (int w = 0; w < m; ++w) tails.push_back(forward_tail(rds, w));

        for (int w = 0; w < m; ++w) {
            DistanceSeries s;
            s.omega = w;
            for (long long t : schedule) s.values.emplace_back(t, forward_distance(tails[w], w, t));
            double first = forward_distance(tails[w], w, tails[w].preperiod);
            s.tail_sup = 0;
            for (int t = tails[w].preperiod; t < tails[w].preperiod + tails[w].period; ++t) {
                double d = forward_distance(tails[w], w, t);
                s.tail_sup = std::max(s.tail_sup, d);
                if (d != first) s.tail_constant = false;
            }
            if (rds.universe.in_positive_block(w) && s.tail_sup != 0) all_zero_tails = false;
            rep.per_omega.push_back(std::move(s));
        }

        if (mode == AttractionMode::Weak) {
            for (long long t : schedule) {
                IndexSet exceed(m);
                for (int w = 0; w < m; ++w)
                    if (forward_distance(tails[w], w, t) > eps) exceed.set(w);
                rep.exceedance.emplace_back(t, rds.universe.outer_measure(exceed));
            }
        }
    }

    rep.verdict = all_zero_tails ? Verdict::Converges : Verdict::Diverges;
    rep.exact = true;
    return rep;
}

AttractorResult minimal_pullback_attractor(const FiniteRds& rds,
                                           const std::vector<RandomSet>& family,
                                           std::span<const FiniteCoverFamily> scales) {
    const int m = rds.universe.size();
    std::vector<PullbackTail> tails;
    tails.reserve(m);
    for (int w = 0; w < m; ++w) tails.push_back(pullback_tail(rds, w));

    std::vector<RandomSet> members;
    members.reserve(family.size());
    for (const auto& B : family) {
        RandomSet omega_b(m, rds.carrier_size());
        for (int w = 0; w < m; ++w) {
            const auto& tail = tails[w];
            for (int t = tail.preperiod; t < tail.preperiod + tail.period; ++t)
                omega_b.sections[w] |=
                    rds.map_set(tail.maps[t], B.sections[rds.universe.theta(w, -t)]);
        }
        members.push_back(
            closed_random_hull(omega_b, rds.universe, rds.space, scales, false).first);
    }

    auto [attractor, trace] =
        minimal_closed_cover(std::move(members), rds.universe, rds.space, scales, true);
    AttractorResult res;
    res.attractor = std::move(attractor);
    res.certificate = trace.certificate;
    res.cover_trace = std::move(trace);
    return res;
}

WeakAttractorResult minimal_weak_attractor(const FiniteRds& rds,
                                           const std::vector<RandomSet>& family,
                                           std::span<const FiniteCoverFamily> scales) {
    const int m = rds.universe.size();
    if (scales.empty()) throw std::domain_error("minimal_weak_attractor: empty scale list");

    std::vector<PullbackTail> tails;
    tails.reserve(m);
    for (int w = 0; w < m; ++w) tails.push_back(pullback_tail(rds, w));

    IndexSet positive(m);
    for (int w = 0; w < m; ++w)
        if (rds.universe.in_positive_block(w)) positive.set(w);

    WeakAttractorResult res;
    for (const auto& B : family) {
        // Tail images once per omega; each is one accumulation candidate.
        std::vector<std::vector<IndexSet>> tail_images(m);
        for (int w = 0; w < m; ++w) {
            const auto& tail = tails[w];
            for (int t = tail.preperiod; t < tail.preperiod + tail.period; ++t)
                tail_images[w].push_back(
                    rds.map_set(tail.maps[t], B.sections[rds.universe.theta(w, -t)]));
        }

        WeakTrace::PerFamilyMember member_trace;
        RandomSet k_set = RandomSet::full(m, rds.carrier_size());
        for (const auto& fam : scales) {
            WeakTrace::PerScale ps;
            ps.radius = fam.radius;
            std::vector<IndexSet> level(m, IndexSet(rds.carrier_size()));
            for (int g = 0; g < fam.size(); ++g) {
                IndexSet hits(m);
                for (int w = 0; w < m; ++w)
                    for (const auto& img : tail_images[w])
                        if (img.intersects(fam.members[g])) {
                            hits.set(w);
                            break;
                        }
                IndexSet io = rds.universe.measurable_hull(hits);
                io &= positive;  // zero-weight blocks never force accumulation
                io.for_each([&](int w) { level[w] |= fam.members[g]; });
                ps.infinitely_often.push_back(std::move(io));
            }
            for (int w = 0; w < m; ++w) k_set.sections[w] &= level[w];
            member_trace.scales.push_back(std::move(ps));
        }
        res.trace.members.push_back(std::move(member_trace));
        res.trace.k_sets.push_back(std::move(k_set));
    }

    auto [attractor, trace] =
        minimal_closed_cover(res.trace.k_sets, rds.universe, rds.space, scales, true);
    res.attractor = std::move(attractor);
    res.certificate = trace.certificate;
    return res;
}

RandomSet intersect_on_positive_blocks(const std::vector<RandomSet>& sets, const FiniteUniverse& u,
                                       int carrier_size) {
    RandomSet out(u.size(), carrier_size);
    if (sets.empty()) return out;
    for (int w = 0; w < u.size(); ++w) {
        if (!u.in_positive_block(w)) continue;
        IndexSet acc = IndexSet::full(carrier_size);
        for (const auto& s : sets) acc &= s.sections[w];
        out.sections[w] = std::move(acc);
    }
    return out;
}

std::vector<RandomSet> brute_force_attractors(const FiniteRds& rds,
                                              const std::vector<RandomSet>& family,
                                              AttractionMode mode, BruteBounds bounds) {
    const int m = rds.universe.size();
    const int n = rds.carrier_size();
    const int nb = rds.universe.block_count();
    if (m > bounds.max_points || n > bounds.max_carrier || nb > bounds.max_blocks) {
        double cost = std::pow(2.0, double(n) * nb);
        throw CostBoundError("brute_force_attractors: instance beyond oracle bounds (~" +
                             std::to_string(uint64_t(cost)) + " candidates)");
    }

    std::vector<int> positive_blocks;
    for (int b = 0; b < nb; ++b)
        if (rds.universe.block_positive(b)) positive_blocks.push_back(b);
    const int P = int(positive_blocks.size());
    std::vector<int> block_slot(nb, -1);
    for (int i = 0; i < P; ++i) block_slot[positive_blocks[i]] = i;

    // Per positive block: the generator's mask image, and the target block.
    auto mask_image = [&](const std::vector<int>& gen, uint32_t mask) {
        uint32_t img = 0;
        for (int x = 0; x < n; ++x)
            if (mask & (1u << x)) img |= 1u << gen[x];
        return img;
    };
    std::vector<int> gen_rep(nb), sigma_block(nb);
    for (int b = 0; b < nb; ++b) {
        int w0 = rds.universe.blocks()[b][0];
        gen_rep[b] = w0;
        sigma_block[b] = rds.universe.block_of(rds.universe.theta(w0, 1));
    }

    // Tail images per (family member, positive-block omega), with the block
    // holding the comparison section for each tail slot.
    struct TailNeed {
        uint32_t image;
        int block_slot;  // slot of the block whose section must contain image
    };
    std::vector<std::vector<TailNeed>> needs;  // flattened per (B, omega)
    for (const auto& B : family) {
        for (int w = 0; w < m; ++w) {
            if (!rds.universe.in_positive_block(w)) continue;
            std::vector<TailNeed> lst;
            if (mode == AttractionMode::Pullback) {
                PullbackTail tail = pullback_tail(rds, w);
                for (int t = tail.preperiod; t < tail.preperiod + tail.period; ++t) {
                    IndexSet img =
                        rds.map_set(tail.maps[t], B.sections[rds.universe.theta(w, -t)]);
                    uint32_t bits = 0;
                    img.for_each([&](int x) { bits |= 1u << x; });
                    lst.push_back({bits, block_slot[rds.universe.block_of(w)]});
                }
            } else {
                ForwardTail tail = forward_tail(rds, w);
                for (int t = tail.preperiod; t < tail.preperiod + tail.period; ++t) {
                    IndexSet img = rds.map_set(tail.maps[t], B.sections[w]);
                    uint32_t bits = 0;
                    img.for_each([&](int x) { bits |= 1u << x; });
                    int wt = rds.universe.theta(w, t);
                    lst.push_back({bits, block_slot[rds.universe.block_of(wt)]});
                }
            }
            needs.push_back(std::move(lst));
        }
    }

    std::vector<RandomSet> out;
    const uint32_t mask_count = 1u << n;
    std::vector<uint32_t> masks(P, 0);
    for (uint64_t code = 0;; ++code) {
        uint64_t c = code;
        bool done = false;
        for (int i = 0; i < P; ++i) {
            masks[i] = uint32_t(c % mask_count);
            c /= mask_count;
        }
        if (c > 0) done = true;
        if (done) break;

        // Strictly invariant: generator image of each positive block's
        // section equals the section of the shifted block.
        bool ok = true;
        for (int i = 0; i < P && ok; ++i) {
            int b = positive_blocks[i];
            uint32_t img = mask_image(rds.gens[gen_rep[b]], masks[i]);
            int tb = sigma_block[b];
            ok = block_slot[tb] >= 0 && img == masks[block_slot[tb]];
        }
        if (!ok) continue;

        for (const auto& lst : needs) {
            for (const auto& need : lst) {
                // Distance zero iff image inside the section; an empty image
                // is attracted by anything, a nonempty one never by the
                // empty section.
                if ((need.image & ~masks[need.block_slot]) != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;

        RandomSet A(m, n);
        for (int w = 0; w < m; ++w) {
            int slot = block_slot[rds.universe.block_of(w)];
            if (slot < 0) continue;
            for (int x = 0; x < n; ++x)
                if (masks[slot] & (1u << x)) A.sections[w].set(x);
        }
        out.push_back(std::move(A));
    }
    return out;
}

OmegaUnionComparison omega_union_vs_minimal(const FiniteRds& rds,
                                            const std::vector<RandomSet>& family,
                                            std::span<const FiniteCoverFamily> scales) {
    OmegaUnionComparison cmp;
    const int m = rds.universe.size();
    cmp.omega_union = RandomSet(m, rds.carrier_size());
    for (const auto& B : family) {
        RandomSet ob = omega_limit_set(rds, B);
        for (int w = 0; w < m; ++w) cmp.omega_union.sections[w] |= ob.sections[w];
    }
    cmp.minimal = minimal_pullback_attractor(rds, family, scales).attractor;
    for (int w = 0; w < m; ++w) {
        if (!rds.universe.in_positive_block(w)) continue;
        cmp.minimal.sections[w].for_each([&](int x) {
            if (!cmp.omega_union.sections[w].test(x)) {
                cmp.gap_witnesses.emplace_back(w, x);
                cmp.equal_on_positive_blocks = false;
            }
        });
        cmp.omega_union.sections[w].for_each([&](int x) {
            if (!cmp.minimal.sections[w].test(x)) cmp.equal_on_positive_blocks = false;
        });
    }
    return cmp;
}

}  // namespace attlab
