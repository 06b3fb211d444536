#include "attlab/spaces.hpp"

namespace attlab {

namespace {

constexpr size_t kSortThreshold = 10000;

double dist_to_sorted(double x, std::span<const double> sorted) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    double best = std::numeric_limits<double>::infinity();
    if (it != sorted.end()) best = std::min(best, *it - x);
    if (it != sorted.begin()) best = std::min(best, x - *(it - 1));
    return best;
}

}  // namespace

ExtDist hausdorff_semi(std::span<const double> B, std::span<const double> A,
                       const LineSpace& sp) {
    if (B.empty()) return ExtDist::zero();
    if (A.empty()) return ExtDist::infinity();
    if (A.size() < kSortThreshold) {
        ExtDist worst = ExtDist::zero();
        for (double b : B) worst = max(worst, dist_point_to_set<LineSpace>(b, A, sp));
        return worst;
    }
    std::vector<double> sorted(A.begin(), A.end());
    std::sort(sorted.begin(), sorted.end());
    double worst = 0.0;
    for (double b : B) worst = std::max(worst, dist_to_sorted(b, sorted));
    return ExtDist(worst);
}

ExtDist hausdorff_semi(std::span<const double> B, std::span<const double> A,
                       const CircleSpace& sp) {
    if (B.empty()) return ExtDist::zero();
    if (A.empty()) return ExtDist::infinity();
    if (A.size() < kSortThreshold) {
        ExtDist worst = ExtDist::zero();
        for (double b : B) worst = max(worst, dist_point_to_set<CircleSpace>(b, A, sp));
        return worst;
    }
    std::vector<double> sorted;
    sorted.reserve(A.size());
    for (double a : A) sorted.push_back(CircleSpace::wrap(a));
    std::sort(sorted.begin(), sorted.end());
    double worst = 0.0;
    for (double b : B) {
        double x = CircleSpace::wrap(b);
        double d = dist_to_sorted(x, sorted);
        // wrap-around candidates
        d = std::min(d, x + kTwoPi - sorted.back());
        d = std::min(d, sorted.front() + kTwoPi - x);
        worst = std::max(worst, d);
    }
    return ExtDist(worst);
}

}  // namespace attlab
