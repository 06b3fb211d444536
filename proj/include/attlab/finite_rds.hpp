#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "attlab/spaces.hpp"
#include "attlab/universe.hpp"

namespace attlab {

/// Discrete-time cocycle over a finite universe, driven by one generator map
/// per sample point: phi(t, omega) = gen(theta_{t-1} omega) o ... o gen(omega).
/// The cocycle identity holds by construction, so raw map tables (FlowTable)
/// carry the checking and perfection machinery instead.
///
/// Generators must be constant on partition blocks — that is exactly the
/// measurability of (x, omega) -> gen(omega) x — and bijective when the
/// cocycle is two-sided.
struct FiniteRds {
    FiniteUniverse universe;
    FiniteSpace space;
    std::vector<std::vector<int>> gens;  // m rows, carrier-size entries
    bool two_sided = false;

    int carrier_size() const { return space.size(); }

    int apply_gen(int omega, int x) const { return gens[omega][x]; }

    /// phi(t, omega) as an explicit map; negative t needs a two-sided cocycle
    /// and returns phi(-|t|, omega) = [phi(|t|, theta_{-|t|} omega)]^{-1}.
    std::vector<int> forward_map(int omega, long long t) const;

    IndexSet map_set(const std::vector<int>& map, const IndexSet& s) const {
        IndexSet out(carrier_size());
        s.for_each([&](int x) { out.set(map[x]); });
        return out;
    }
};

FiniteRds make_finite_rds(FiniteUniverse u, FiniteSpace sp, std::vector<std::vector<int>> gens,
                          bool two_sided = false);

/// The composed pullback maps a_t = phi(t, theta_{-t} omega) live in a finite
/// monoid and are driven by the periodic backward orbit of omega, so the
/// state (a_t, t mod orbit length) is eventually periodic. preperiod and
/// period pin the exact tail; map_at folds any t >= 0 into the stored window.
struct PullbackTail {
    int omega = 0;
    int preperiod = 0;
    int period = 1;
    std::vector<std::vector<int>> maps;  // a_t for t in [0, preperiod + period]

    long long fold(long long t) const {
        if (t < preperiod) return t;
        return preperiod + (t - preperiod) % period;
    }
    const std::vector<int>& map_at(long long t) const { return maps[size_t(fold(t))]; }
};

PullbackTail pullback_tail(const FiniteRds& rds, int omega);

/// Forward analogue: f_t = phi(t, omega), driven by the forward orbit.
struct ForwardTail {
    int omega = 0;
    int preperiod = 0;
    int period = 1;
    std::vector<std::vector<int>> maps;

    long long fold(long long t) const {
        if (t < preperiod) return t;
        return preperiod + (t - preperiod) % period;
    }
    const std::vector<int>& map_at(long long t) const { return maps[size_t(fold(t))]; }
};

ForwardTail forward_tail(const FiniteRds& rds, int omega);

/// Omega-limit section at omega: union of the pullback images over exactly
/// one period of the tail. Equals the nested-intersection definition exactly
/// on finite carriers.
IndexSet omega_limit_exact(const FiniteRds& rds, const RandomSet& B, int omega);
RandomSet omega_limit_set(const FiniteRds& rds, const RandomSet& B);

// ---------------------------------------------------------------------------
// Invariance

enum class InvarianceMode { Forward, Strict };

struct InvarianceViolation {
    int omega = 0;
    long long t = 0;
    int witness = -1;  // carrier point on the wrong side
    bool missing = false;  // true: point of D(theta_t w) not reached (strict mode)
};

struct InvarianceReport {
    bool holds = true;
    std::vector<InvarianceViolation> violations;
};

/// Exact check over every omega lying in a positive-weight block (the
/// almost-sure quantifier for the partition sigma-algebra). Checking t = 1
/// suffices by induction; t_max > 1 re-verifies larger times directly.
InvarianceReport invariance_check(const FiniteRds& rds, const RandomSet& D, InvarianceMode mode,
                                  long long t_max = 1);

// ---------------------------------------------------------------------------
// Containment of omega-limits in absorbing compacta

struct OmegaContainmentReport {
    std::vector<int> premise_failures;  // omega where the pullback distance to K never settles at 0
    std::vector<std::pair<int, int>> containment_violations;    // (omega, x): x in Omega_B \ K
    std::vector<InvarianceViolation> invariance_violations;     // Omega_B(theta_t w) not in phi(t,w) Omega_B(w)
    bool conclusions_hold = true;
};

/// Verifies: wherever the pullback images of B are eventually absorbed by
/// the compact section K(omega), the omega-limit of B is contained in K and
/// satisfies the backward invariance inclusion for t up to the tail period.
OmegaContainmentReport omega_containment_check(const FiniteRds& rds, const RandomSet& B,
                                               const RandomSet& K);

// ---------------------------------------------------------------------------
// Raw flow tables: crude cocycles, their defects, and perfection

struct FlowTable {
    FiniteUniverse universe;
    int carrier = 0;
    std::vector<std::vector<std::vector<int>>> maps;  // maps[omega][t], t = 0..t_max

    int t_max() const { return maps.empty() ? -1 : int(maps[0].size()) - 1; }
};

FlowTable table_from(const FiniteRds& rds, int t_max);

struct CocycleViolation {
    int omega = 0;
    long long s = 0, t = 0;
    int x = -1;
};

/// Lists every (s, t, omega, x) with phi(t+s, omega) x != phi(t, theta_s
/// omega) phi(s, omega) x inside the table window, plus phi(0) != id defects.
std::vector<CocycleViolation> cocycle_check(const FlowTable& table);

/// Compositional audit of a generator-backed cocycle; exact, and zero by
/// construction (kept as a negative-control harness for corrupted tables).
std::vector<CocycleViolation> cocycle_check(const FiniteRds& rds,
                                            std::span<const std::pair<long long, long long>> pairs,
                                            std::span<const int> states);

/// omega's at which some defining property fails within the table window.
IndexSet exception_set(const FlowTable& table);

struct PerfectionResult {
    FlowTable psi;
    IndexSet omega_one;       // orbits that never meet the exception set
    bool measurable = true;   // whether omega_one is a block union
    double weight = 0;        // total weight of omega_one
};

/// Replaces the flow by the identity off the invariant set of orbits that
/// avoid the exception set; on a finite orbit "almost all s" is "all s"
/// (counting measure). If the exception set has weight zero, so does the
/// discarded part.
PerfectionResult perfect(const FlowTable& table, const IndexSet& exception);

}  // namespace attlab
