#include "attlab/finite_rds.hpp"

#include <algorithm>

namespace attlab {

FiniteRds make_finite_rds(FiniteUniverse u, FiniteSpace sp, std::vector<std::vector<int>> gens,
                          bool two_sided) {
    FiniteRds rds{std::move(u), std::move(sp), std::move(gens), two_sided};
    const int m = rds.universe.size(), n = rds.space.size();
    if (int(rds.gens.size()) != m)
        throw std::invalid_argument("make_finite_rds: one generator per sample point required");
    for (const auto& g : rds.gens) {
        if (int(g.size()) != n) throw std::invalid_argument("make_finite_rds: generator size mismatch");
        for (int y : g)
            if (y < 0 || y >= n) throw std::invalid_argument("make_finite_rds: generator out of range");
    }
    // Measurability of the cocycle map: generators constant on blocks.
    for (const auto& blk : rds.universe.blocks())
        for (size_t k = 1; k < blk.size(); ++k)
            if (rds.gens[blk[k]] != rds.gens[blk[0]])
                throw std::invalid_argument("make_finite_rds: generators vary inside a block");
    if (two_sided) {
        for (const auto& g : rds.gens) {
            std::vector<int> seen(n, 0);
            for (int y : g) seen[y]++;
            for (int c : seen)
                if (c != 1)
                    throw std::invalid_argument("make_finite_rds: two-sided needs bijective generators");
        }
    }
    return rds;
}

std::vector<int> FiniteRds::forward_map(int omega, long long t) const {
    const int n = carrier_size();
    std::vector<int> map(n);
    for (int x = 0; x < n; ++x) map[x] = x;
    if (t >= 0) {
        int w = omega;
        for (long long s = 0; s < t; ++s) {
            const auto& g = gens[w];
            for (int x = 0; x < n; ++x) map[x] = g[map[x]];
            w = universe.theta(w, 1);
        }
        return map;
    }
    if (!two_sided) throw std::domain_error("forward_map: negative time needs a two-sided cocycle");
    std::vector<int> fwd = forward_map(universe.theta(omega, t), -t);
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x) inv[fwd[x]] = x;
    return inv;
}

namespace {

int backward_orbit_period(const FiniteUniverse& u, int omega) {
    int L = 1;
    int w = u.theta(omega, -1);
    while (w != omega) {
        w = u.theta(w, -1);
        ++L;
    }
    return L;
}

}  // namespace

PullbackTail pullback_tail(const FiniteRds& rds, int omega) {
    const int n = rds.carrier_size();
    const int L = backward_orbit_period(rds.universe, omega);

    PullbackTail tail;
    tail.omega = omega;

    std::vector<int> id(n);
    for (int x = 0; x < n; ++x) id[x] = x;
    std::map<std::pair<std::vector<int>, int>, int> seen;

    std::vector<int> cur = id;
    int w_back = omega;  // theta_{-t} omega
    for (int t = 0;; ++t) {
        auto key = std::make_pair(cur, t % L);
        auto [it, fresh] = seen.emplace(key, t);
        tail.maps.push_back(cur);
        if (!fresh) {
            tail.preperiod = it->second;
            tail.period = t - it->second;
            tail.maps.resize(size_t(t) + 1);  // window [0, preperiod + period]
            return tail;
        }
        // a_{t+1} = a_t o gen(theta_{-(t+1)} omega)
        w_back = rds.universe.theta(w_back, -1);
        const auto& g = rds.gens[w_back];
        std::vector<int> next(n);
        for (int x = 0; x < n; ++x) next[x] = cur[g[x]];
        cur = std::move(next);
    }
}

ForwardTail forward_tail(const FiniteRds& rds, int omega) {
    const int n = rds.carrier_size();
    const int L = backward_orbit_period(rds.universe, omega);  // same cycle length forward

    ForwardTail tail;
    tail.omega = omega;

    std::vector<int> cur(n);
    for (int x = 0; x < n; ++x) cur[x] = x;
    std::map<std::pair<std::vector<int>, int>, int> seen;

    int w = omega;  // theta_t omega
    for (int t = 0;; ++t) {
        auto key = std::make_pair(cur, t % L);
        auto [it, fresh] = seen.emplace(key, t);
        tail.maps.push_back(cur);
        if (!fresh) {
            tail.preperiod = it->second;
            tail.period = t - it->second;
            tail.maps.resize(size_t(t) + 1);
            return tail;
        }
        const auto& g = rds.gens[w];
        std::vector<int> next(n);
        for (int x = 0; x < n; ++x) next[x] = g[cur[x]];
        cur = std::move(next);
        w = rds.universe.theta(w, 1);
    }
}

IndexSet omega_limit_exact(const FiniteRds& rds, const RandomSet& B, int omega) {
    PullbackTail tail = pullback_tail(rds, omega);
    IndexSet out(rds.carrier_size());
    for (int t = tail.preperiod; t < tail.preperiod + tail.period; ++t) {
        int w_src = rds.universe.theta(omega, -t);
        out |= rds.map_set(tail.maps[t], B.sections[w_src]);
    }
    return out;
}

RandomSet omega_limit_set(const FiniteRds& rds, const RandomSet& B) {
    RandomSet out(rds.universe.size(), rds.carrier_size());
    for (int w = 0; w < rds.universe.size(); ++w) out.sections[w] = omega_limit_exact(rds, B, w);
    return out;
}

InvarianceReport invariance_check(const FiniteRds& rds, const RandomSet& D, InvarianceMode mode,
                                  long long t_max) {
    InvarianceReport rep;
    for (long long t = 1; t <= std::max<long long>(1, t_max); ++t) {
        for (int w = 0; w < rds.universe.size(); ++w) {
            if (!rds.universe.in_positive_block(w)) continue;
            int w_t = rds.universe.theta(w, t);
            IndexSet img = rds.map_set(rds.forward_map(w, t), D.sections[w]);
            img.for_each([&](int x) {
                if (!D.sections[w_t].test(x)) {
                    rep.violations.push_back({w, t, x, false});
                }
            });
            if (mode == InvarianceMode::Strict) {
                D.sections[w_t].for_each([&](int x) {
                    if (!img.test(x)) rep.violations.push_back({w, t, x, true});
                });
            }
        }
    }
    rep.holds = rep.violations.empty();
    return rep;
}

OmegaContainmentReport omega_containment_check(const FiniteRds& rds, const RandomSet& B,
                                               const RandomSet& K) {
    OmegaContainmentReport rep;
    const int m = rds.universe.size();

    std::vector<PullbackTail> tails;
    tails.reserve(m);
    for (int w = 0; w < m; ++w) tails.push_back(pullback_tail(rds, w));

    std::vector<char> premise(m, 1);
    for (int w = 0; w < m; ++w) {
        const auto& tail = tails[w];
        for (int t = tail.preperiod; t < tail.preperiod + tail.period; ++t) {
            IndexSet img =
                rds.map_set(tail.maps[t], B.sections[rds.universe.theta(w, -t)]);
            if (!img.subset_of(K.sections[w])) {
                premise[w] = 0;
                rep.premise_failures.push_back(w);
                break;
            }
        }
    }

    std::vector<IndexSet> omega_b(m, IndexSet(rds.carrier_size()));
    for (int w = 0; w < m; ++w) {
        const auto& tail = tails[w];
        for (int t = tail.preperiod; t < tail.preperiod + tail.period; ++t)
            omega_b[w] |= rds.map_set(tail.maps[t], B.sections[rds.universe.theta(w, -t)]);
    }

    for (int w = 0; w < m; ++w) {
        if (!premise[w]) continue;
        omega_b[w].for_each([&](int x) {
            if (!K.sections[w].test(x)) rep.containment_violations.push_back({w, x});
        });
        for (long long t = 1; t <= tails[w].period; ++t) {
            int w_t = rds.universe.theta(w, t);
            IndexSet img = rds.map_set(rds.forward_map(w, t), omega_b[w]);
            omega_b[w_t].for_each([&](int x) {
                if (!img.test(x)) rep.invariance_violations.push_back({w, t, x, true});
            });
        }
    }
    rep.conclusions_hold =
        rep.containment_violations.empty() && rep.invariance_violations.empty();
    return rep;
}

FlowTable table_from(const FiniteRds& rds, int t_max) {
    FlowTable table;
    table.universe = rds.universe;
    table.carrier = rds.carrier_size();
    table.maps.resize(rds.universe.size());
    for (int w = 0; w < rds.universe.size(); ++w) {
        table.maps[w].reserve(t_max + 1);
        for (int t = 0; t <= t_max; ++t) table.maps[w].push_back(rds.forward_map(w, t));
    }
    return table;
}

std::vector<CocycleViolation> cocycle_check(const FlowTable& table) {
    std::vector<CocycleViolation> out;
    const int T = table.t_max();
    for (int w = 0; w < table.universe.size(); ++w) {
        for (int x = 0; x < table.carrier; ++x)
            if (table.maps[w][0][x] != x) out.push_back({w, 0, 0, x});
        for (long long s = 0; s <= T; ++s) {
            int w_s = table.universe.theta(w, s);
            for (long long t = 0; s + t <= T; ++t) {
                const auto& lhs = table.maps[w][size_t(s + t)];
                const auto& mid = table.maps[w][size_t(s)];
                const auto& rhs = table.maps[w_s][size_t(t)];
                for (int x = 0; x < table.carrier; ++x)
                    if (lhs[x] != rhs[mid[x]]) {
                        out.push_back({w, s, t, x});
                        break;  // one witness per (w, s, t)
                    }
            }
        }
    }
    return out;
}

std::vector<CocycleViolation> cocycle_check(const FiniteRds& rds,
                                            std::span<const std::pair<long long, long long>> pairs,
                                            std::span<const int> states) {
    std::vector<CocycleViolation> out;
    for (auto [s, t] : pairs) {
        for (int w = 0; w < rds.universe.size(); ++w) {
            auto direct = rds.forward_map(w, s + t);
            auto first = rds.forward_map(w, s);
            auto second = rds.forward_map(rds.universe.theta(w, s), t);
            for (int x : states)
                if (direct[x] != second[first[x]]) out.push_back({w, s, t, x});
        }
    }
    return out;
}

IndexSet exception_set(const FlowTable& table) {
    IndexSet bad(table.universe.size());
    for (const auto& v : cocycle_check(table)) bad.set(v.omega);
    return bad;
}

PerfectionResult perfect(const FlowTable& table, const IndexSet& exception) {
    const int m = table.universe.size();
    PerfectionResult res;
    res.omega_one = IndexSet(m);

    std::vector<char> visited(m, 0);
    for (int w0 = 0; w0 < m; ++w0) {
        if (visited[w0]) continue;
        std::vector<int> orbit;
        int w = w0;
        do {
            orbit.push_back(w);
            visited[w] = 1;
            w = table.universe.theta(w, 1);
        } while (w != w0);
        bool clean = true;
        for (int i : orbit)
            if (exception.test(i)) clean = false;
        if (clean)
            for (int i : orbit) res.omega_one.set(i);
    }

    res.psi = table;
    std::vector<int> id(table.carrier);
    for (int x = 0; x < table.carrier; ++x) id[x] = x;
    for (int w = 0; w < m; ++w) {
        if (res.omega_one.test(w)) continue;
        for (auto& map : res.psi.maps[w]) map = id;
    }

    res.measurable = table.universe.is_measurable_set(res.omega_one);
    res.weight = 0;
    res.omega_one.for_each([&](int i) { res.weight += table.universe.weight(i); });
    return res;
}

}  // namespace attlab
