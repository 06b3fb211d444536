#include "attlab/instance_gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace attlab {

FiniteUniverse random_universe(SeqRng& rng, int max_points, int max_blocks) {
    const int m = 1 + int(rng.next(uint64_t(max_points)));

    // Partition into blocks: shuffle, then cut.
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = m - 1; i > 0; --i) std::swap(perm[i], perm[rng.next(uint64_t(i) + 1)]);
    int nb = 1 + int(rng.next(uint64_t(std::min(max_blocks, m))));
    std::vector<std::vector<int>> blocks(nb);
    for (int i = 0; i < m; ++i) blocks[i % nb].push_back(perm[i]);
    for (auto& blk : blocks) std::sort(blk.begin(), blk.end());

    // Shift: permute equal-size block classes, then wire a bijection per pair.
    std::map<int, std::vector<int>> by_size;
    for (int b = 0; b < nb; ++b) by_size[int(blocks[b].size())].push_back(b);
    std::vector<int> block_image(nb);
    for (auto& [sz, cls] : by_size) {
        std::vector<int> img = cls;
        for (int i = int(img.size()) - 1; i > 0; --i)
            std::swap(img[i], img[rng.next(uint64_t(i) + 1)]);
        for (size_t k = 0; k < cls.size(); ++k) block_image[cls[k]] = img[k];
    }
    std::vector<int> shift(m);
    for (int b = 0; b < nb; ++b) {
        std::vector<int> target = blocks[block_image[b]];
        for (int i = int(target.size()) - 1; i > 0; --i)
            std::swap(target[i], target[rng.next(uint64_t(i) + 1)]);
        for (size_t k = 0; k < blocks[b].size(); ++k) shift[blocks[b][k]] = target[k];
    }

    // Weights constant along shift cycles; occasional zero-weight cycles.
    std::vector<double> raw(m, -1);
    std::vector<char> visited(m, 0);
    std::vector<std::vector<int>> cycles;
    for (int i = 0; i < m; ++i) {
        if (visited[i]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            cyc.push_back(j);
            visited[j] = 1;
            j = shift[j];
        } while (j != i);
        cycles.push_back(std::move(cyc));
    }
    double total = 0;
    for (const auto& cyc : cycles) {
        double w = rng.chance(0.25) ? 0.0 : double(1 + rng.next(8));
        for (int i : cyc) raw[i] = w;
        total += w * double(cyc.size());
    }
    if (total == 0) {
        for (int i : cycles[0]) raw[i] = 1.0;
        total = double(cycles[0].size());
    }
    // Integer raws over an integer total keep the division exactly equal
    // along each cycle, which the weight-preservation validator checks
    // without tolerance.
    std::vector<double> weights(m);
    for (int i = 0; i < m; ++i) weights[i] = raw[i] / total;

    return FiniteUniverse(std::move(weights), std::move(shift), std::move(blocks));
}

RandomSet random_set_map(SeqRng& rng, const FiniteUniverse& u, int carrier,
                         bool force_measurable) {
    RandomSet s(u.size(), carrier);
    bool deterministic = rng.chance(0.25);
    if (deterministic || force_measurable) {
        if (deterministic) {
            IndexSet section(carrier);
            for (int x = 0; x < carrier; ++x)
                if (rng.chance(0.5)) section.set(x);
            return RandomSet::constant(u.size(), std::move(section));
        }
        for (const auto& blk : u.blocks()) {
            IndexSet section(carrier);
            for (int x = 0; x < carrier; ++x)
                if (rng.chance(0.5)) section.set(x);
            for (int i : blk) s.sections[i] = section;
        }
        return s;
    }
    for (int w = 0; w < u.size(); ++w)
        for (int x = 0; x < carrier; ++x)
            if (rng.chance(0.5)) s.sections[w].set(x);
    return s;
}

FiniteInstance random_instance(uint64_t seed, const InstanceBounds& bounds,
                               bool allow_two_sided) {
    SeqRng rng(seed, 3001);
    FiniteUniverse u = random_universe(rng, bounds.max_points, bounds.max_blocks);
    const int n = 1 + int(rng.next(uint64_t(bounds.max_carrier)));
    FiniteSpace sp = FiniteSpace::discrete(n);

    bool two_sided = allow_two_sided && rng.chance(0.3);
    std::vector<std::vector<int>> gens(u.size());
    for (const auto& blk : u.blocks()) {
        std::vector<int> g(n);
        if (two_sided) {
            std::iota(g.begin(), g.end(), 0);
            for (int i = n - 1; i > 0; --i) std::swap(g[i], g[rng.next(uint64_t(i) + 1)]);
        } else {
            for (int x = 0; x < n; ++x) g[x] = int(rng.next(uint64_t(n)));
        }
        for (int i : blk) gens[i] = g;
    }

    FiniteInstance inst{make_finite_rds(std::move(u), std::move(sp), std::move(gens), two_sided),
                        {},
                        {}};
    int n_family = 1 + int(rng.next(3));
    for (int k = 0; k < n_family; ++k)
        inst.family.push_back(random_set_map(rng, inst.rds.universe, n));
    int n_hull = 1 + int(rng.next(3));
    for (int k = 0; k < n_hull; ++k)
        inst.hull_inputs.push_back(random_set_map(rng, inst.rds.universe, n));
    return inst;
}

RandomSet random_forward_invariant_set(SeqRng& rng, const FiniteRds& rds) {
    RandomSet d = random_set_map(rng, rds.universe, rds.carrier_size());
    for (;;) {
        bool changed = false;
        for (int w = 0; w < rds.universe.size(); ++w) {
            int wt = rds.universe.theta(w, 1);
            IndexSet img = rds.map_set(rds.gens[w], d.sections[w]);
            IndexSet want = img | d.sections[wt];
            if (!(want == d.sections[wt])) {
                d.sections[wt] = std::move(want);
                changed = true;
            }
        }
        if (!changed) return d;
    }
}

}  // namespace attlab
