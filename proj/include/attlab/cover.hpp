#pragma once

#include <stdexcept>
#include <vector>

#include "attlab/index_set.hpp"
#include "attlab/spaces.hpp"

namespace attlab {

struct UnsupportedSpaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed cover refining the open balls B(x, r). Invariants: every member is
/// a closed subset of B(center, r); the members cover the carrier; every
/// point lies in the interior of at least one member; the family is finite,
/// so arbitrary unions of members are closed.
///
/// Construction: greedily select centers from the dense sequence until the
/// open half-radius balls cover, then shrink each ball Voronoi-style with
/// slack eta = r/8 so near-nearest centers keep the interior condition.
struct FiniteCoverFamily {
    double radius = 0;
    double slack = 0;
    std::vector<int> centers;
    std::vector<IndexSet> members;  // aligned with centers

    int size() const { return int(members.size()); }
};

FiniteCoverFamily build_cover(const FiniteSpace& sp, double r);

/// Families at radii 1/n for n = 1..n_max; deterministic given the space.
std::vector<FiniteCoverFamily> cover_scales(const FiniteSpace& sp, int n_max);

/// Least n at which every member of build_cover(sp, 1/n) is a singleton.
int separating_scale(const FiniteSpace& sp);

/// Same construction on the circle; members are predicates rather than
/// explicit sets.
class CircleCoverFamily {
public:
    CircleCoverFamily(double r, std::vector<double> centers)
        : r_(r), eta_(r / 8.0), centers_(std::move(centers)) {}

    double radius() const { return r_; }
    double slack() const { return eta_; }
    int size() const { return int(centers_.size()); }
    double center(int k) const { return centers_[k]; }

    bool contains(int k, double y) const {
        double dk = dist(y, centers_[k]);
        if (dk > r_ / 2) return false;
        for (double c : centers_)
            if (dk > dist(y, c) + eta_) return false;
        return true;
    }

    bool strictly_contains(int k, double y) const {
        double dk = dist(y, centers_[k]);
        if (!(dk < r_ / 2)) return false;
        for (double c : centers_)
            if (!(dk < dist(y, c) + eta_)) return false;
        return true;
    }

private:
    static double dist(double a, double b) {
        double d = std::abs(CircleSpace::wrap(a) - CircleSpace::wrap(b));
        return std::min(d, kTwoPi - d);
    }

    double r_, eta_;
    std::vector<double> centers_;
};

CircleCoverFamily build_cover(const CircleSpace& sp, double r);
std::vector<CircleCoverFamily> cover_scales(const CircleSpace& sp, int n_max);

// The line and the strip are not totally bounded; no finite subfamily of
// balls covers them.
inline FiniteCoverFamily build_cover(const LineSpace&, double) {
    throw UnsupportedSpaceError("build_cover: the real line is not totally bounded");
}
inline FiniteCoverFamily build_cover(const StripSpace&, double) {
    throw UnsupportedSpaceError("build_cover: the strip is not totally bounded");
}

}  // namespace attlab
