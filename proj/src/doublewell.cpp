#include "attlab/doublewell.hpp"

#include <cmath>
#include <stdexcept>

namespace attlab {

double doublewell_flow(double t, double x) {
    double et = std::exp(t);
    return x * et / std::sqrt(1.0 + x * x * (et * et - 1.0));
}

DoublewellReport doublewell_attractor_suite(const DoublewellConfig& config) {
    DoublewellReport rep;
    rep.config = config;
    const double h = config.grid_step;
    const double R = config.radius;

    long long steps_per_unit = llround(1.0 / h);
    long long offset = llround(R / h);
    if (std::abs(steps_per_unit * h - 1.0) > 1e-12 || std::abs(offset * h - R) > 1e-12)
        throw std::invalid_argument(
            "doublewell_attractor_suite: grid must contain -1, 0, 1 exactly");

    const int n = int(2 * offset + 1);
    rep.grid.resize(n);
    for (int i = 0; i < n; ++i) rep.grid[i] = double(i - offset) / double(steps_per_unit);

    FiniteSpace sp = FiniteSpace::from_line_points(rep.grid);
    FiniteUniverse u = FiniteUniverse::deterministic();

    std::vector<int> gen(n);
    for (int i = 0; i < n; ++i) {
        long long j = offset + llround(doublewell_flow(1.0, rep.grid[i]) * steps_per_unit);
        gen[i] = int(std::clamp<long long>(j, 0, n - 1));
    }
    FiniteRds rds = make_finite_rds(u, sp, {gen});

    auto scales = hull_scales(sp);

    // Point route: all grid singletons.
    std::vector<RandomSet> singletons;
    singletons.reserve(n);
    for (int i = 0; i < n; ++i)
        singletons.push_back(RandomSet::constant(1, IndexSet::of(n, {i})));
    AttractorResult point = minimal_pullback_attractor(rds, singletons, scales);
    point.attractor.sections[0].for_each([&](int i) { rep.point_attractor.push_back(rep.grid[i]); });

    IndexSet expected_points = IndexSet::of(
        n, {int(offset - steps_per_unit), int(offset), int(offset + steps_per_unit)});
    rep.point_attractor_exact = point.attractor.sections[0] == expected_points;
    rep.point_attractor_strictly_invariant =
        invariance_check(rds, point.attractor, InvarianceMode::Strict).holds;

    // Interval route: the time-t image of [-R, R] under the closed form is
    // [flow(t,-R), flow(t,R)], which decreases to [-1, 1]; the limit is exact
    // because x e^t / sqrt(1 + x^2(e^{2t}-1)) -> sign(x).
    rep.set_lo = -1.0;
    rep.set_hi = 1.0;
    rep.interval_residual = std::abs(doublewell_flow(double(config.horizon), R)) - 1.0;
    for (double x : rep.grid)
        if (x >= rep.set_lo - 1e-15 && x <= rep.set_hi + 1e-15) rep.set_attractor.push_back(x);
    // Gap between the reported set and grid cap [-1,1]: grid restriction is
    // exact, so this is a spacing audit.
    rep.set_attractor_max_gap = 0.0;
    for (size_t k = 1; k < rep.set_attractor.size(); ++k)
        rep.set_attractor_max_gap =
            std::max(rep.set_attractor_max_gap, rep.set_attractor[k] - rep.set_attractor[k - 1]);

    // Non-minimal point attractors from the construction: [-1,0] U {1} and
    // {-1} U [0,1], as grid sets.
    auto grid_set = [&](double lo, double hi, std::initializer_list<double> extras) {
        IndexSet s(n);
        for (int i = 0; i < n; ++i)
            if (rep.grid[i] >= lo - 1e-15 && rep.grid[i] <= hi + 1e-15) s.set(i);
        for (double e : extras) s.set(int(offset + llround(e * steps_per_unit)));
        return RandomSet::constant(1, s);
    };
    RandomSet left = grid_set(-1.0, 0.0, {1.0});
    RandomSet right = grid_set(0.0, 1.0, {-1.0});

    std::vector<long long> schedule{0, 1, 2, 5, 10, 20};
    bool left_ok = true, right_ok = true;
    for (const auto& B : singletons) {
        if (attracts(rds, B, left, AttractionMode::Pullback, schedule).verdict != Verdict::Converges)
            left_ok = false;
        if (attracts(rds, B, right, AttractionMode::Pullback, schedule).verdict != Verdict::Converges)
            right_ok = false;
        if (!left_ok && !right_ok) break;
    }
    rep.candidate_left_pass = left_ok;
    rep.candidate_right_pass = right_ok;
    rep.minimal_contained_in_candidates =
        point.attractor.sections[0].subset_of(left.sections[0]) &&
        point.attractor.sections[0].subset_of(right.sections[0]);

    rep.pass = rep.point_attractor_exact && rep.point_attractor_strictly_invariant &&
               rep.set_attractor_max_gap <= h + 1e-15 && std::abs(rep.interval_residual) < 1e-9 &&
               rep.candidate_left_pass && rep.candidate_right_pass &&
               rep.minimal_contained_in_candidates;
    return rep;
}

}  // namespace attlab
