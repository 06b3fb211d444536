#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "attlab/ext_dist.hpp"
#include "attlab/index_set.hpp"

namespace attlab {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Default absolute tolerance for floating-point comparisons in tests and
/// validators, unless an operation states a tighter one.
inline constexpr double kDefaultTol = 1e-12;

// ---------------------------------------------------------------------------
// Carriers

struct LineSpace {
    using Point = double;
    ExtDist distance(double a, double b) const { return ExtDist(std::abs(a - b)); }
};

/// Circle parameterized by [0, 2pi) with arc distance
/// d(x,y) = min(|x-y|, 2pi-|x-y|).
struct CircleSpace {
    using Point = double;

    static double wrap(double x) {
        double y = std::fmod(x, kTwoPi);
        if (y < 0) y += kTwoPi;
        if (y >= kTwoPi) y = 0.0;
        return y;
    }

    ExtDist distance(double a, double b) const {
        double d = std::abs(wrap(a) - wrap(b));
        return ExtDist(std::min(d, kTwoPi - d));
    }

    /// Dyadic angles: 0, pi, pi/2, 3pi/2, pi/4, 3pi/4, ... Dense and
    /// deterministic; generation g halves the spacing.
    double dense_point(size_t k) const {
        if (k == 0) return 0.0;
        int g = std::bit_width(k);  // k in [2^{g-1}, 2^g)
        size_t within = k - (size_t{1} << (g - 1));
        return wrap(kTwoPi * double(2 * within + 1) / double(size_t{1} << g));
    }
};

struct StripPoint {
    double x = 0.0;
    double y = 0.0;
};

/// The strip R x [0,1] with the Euclidean metric. The warped metric of the
/// forward-attractor experiments lives in warped.hpp.
struct StripSpace {
    using Point = StripPoint;
    ExtDist distance(StripPoint p, StripPoint q) const {
        check_point(p);
        check_point(q);
        return ExtDist(std::hypot(p.x - q.x, p.y - q.y));
    }
    static void check_point(StripPoint p) {
        if (p.y < 0.0 || p.y > 1.0)
            throw std::domain_error("StripSpace: y must lie in [0,1]");
    }
};

/// Finite carrier with an explicit metric matrix. Points are indices.
class FiniteSpace {
public:
    using Point = int;

    FiniteSpace() = default;

    static FiniteSpace discrete(int n) {
        FiniteSpace s;
        s.n_ = n;
        s.d_.assign(size_t(n) * n, 1.0);
        for (int i = 0; i < n; ++i) s.d_[size_t(i) * n + i] = 0.0;
        s.min_pos_ = n > 1 ? 1.0 : std::numeric_limits<double>::infinity();
        return s;
    }

    /// Carrier of real points with |x - y| as the metric; keeps coordinates.
    static FiniteSpace from_line_points(std::vector<double> xs) {
        FiniteSpace s;
        s.n_ = int(xs.size());
        s.coords_ = std::move(xs);
        s.d_.resize(size_t(s.n_) * s.n_);
        for (int i = 0; i < s.n_; ++i)
            for (int j = 0; j < s.n_; ++j)
                s.d_[size_t(i) * s.n_ + j] = std::abs(s.coords_[i] - s.coords_[j]);
        s.compute_min_pos();
        s.validate();
        return s;
    }

    static FiniteSpace from_matrix(std::vector<std::vector<double>> m) {
        FiniteSpace s;
        s.n_ = int(m.size());
        s.d_.resize(size_t(s.n_) * s.n_);
        for (int i = 0; i < s.n_; ++i) {
            if (int(m[i].size()) != s.n_)
                throw std::invalid_argument("FiniteSpace: metric matrix not square");
            for (int j = 0; j < s.n_; ++j) s.d_[size_t(i) * s.n_ + j] = m[i][j];
        }
        s.compute_min_pos();
        s.validate();
        return s;
    }

    int size() const { return n_; }

    ExtDist distance(int i, int j) const {
        check(i);
        check(j);
        return ExtDist(d_[size_t(i) * n_ + j]);
    }
    double distance_value(int i, int j) const { return d_[size_t(i) * n_ + j]; }

    double min_positive_distance() const { return min_pos_; }

    bool has_coordinates() const { return !coords_.empty(); }
    const std::vector<double>& coordinates() const { return coords_; }

    /// Symmetry, nonnegativity, zero-iff-equal exactly; triangle inequality
    /// spot-checked on sampled triples (all triples when n is small).
    void validate() const {
        for (int i = 0; i < n_; ++i) {
            if (d_[size_t(i) * n_ + i] != 0.0)
                throw std::invalid_argument("FiniteSpace: nonzero self-distance");
            for (int j = 0; j < n_; ++j) {
                double dij = d_[size_t(i) * n_ + j];
                if (!(dij >= 0.0)) throw std::invalid_argument("FiniteSpace: negative distance");
                if (i != j && dij == 0.0)
                    throw std::invalid_argument("FiniteSpace: distinct points at distance zero");
                if (dij != d_[size_t(j) * n_ + i])
                    throw std::invalid_argument("FiniteSpace: asymmetric metric");
            }
        }
        auto tri = [&](int i, int j, int k) {
            if (d_[size_t(i) * n_ + k] > d_[size_t(i) * n_ + j] + d_[size_t(j) * n_ + k] + kDefaultTol)
                throw std::invalid_argument("FiniteSpace: triangle inequality violated");
        };
        if (n_ <= 32) {
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    for (int k = 0; k < n_; ++k) tri(i, j, k);
        } else {
            uint64_t state = 0x6b43a9b5;
            for (int s = 0; s < 20000; ++s) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                int i = int((state >> 33) % uint64_t(n_));
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                int j = int((state >> 33) % uint64_t(n_));
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                int k = int((state >> 33) % uint64_t(n_));
                tri(i, j, k);
            }
        }
    }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::domain_error("FiniteSpace: point outside carrier");
    }
    void compute_min_pos() {
        min_pos_ = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j && d_[size_t(i) * n_ + j] > 0)
                    min_pos_ = std::min(min_pos_, d_[size_t(i) * n_ + j]);
    }

    int n_ = 0;
    std::vector<double> d_;       // row-major n x n
    std::vector<double> coords_;  // optional
    double min_pos_ = std::numeric_limits<double>::infinity();
};

// ---------------------------------------------------------------------------
// Point-to-set and Hausdorff semi-distance

/// inf over a in A of d(x, a); infinity iff A is empty.
template <class Space>
ExtDist dist_point_to_set(const typename Space::Point& x,
                          std::span<const typename Space::Point> cloud,
                          const Space& sp) {
    ExtDist best = ExtDist::infinity();
    for (const auto& a : cloud) best = min(best, sp.distance(x, a));
    return best;
}

inline ExtDist dist_point_to_set(int x, const IndexSet& A, const FiniteSpace& sp) {
    if (x < 0 || x >= sp.size()) throw std::domain_error("dist_point_to_set: point outside carrier");
    double best = std::numeric_limits<double>::infinity();
    A.for_each([&](int a) { best = std::min(best, sp.distance_value(x, a)); });
    return best == std::numeric_limits<double>::infinity() ? ExtDist::infinity() : ExtDist(best);
}

/// Hausdorff semi-metric sup_{b in B} d(b, A); zero when B is empty,
/// infinity when A is empty and B is not. Not symmetric.
template <class Space>
ExtDist hausdorff_semi(std::span<const typename Space::Point> B,
                       std::span<const typename Space::Point> A, const Space& sp) {
    ExtDist worst = ExtDist::zero();
    for (const auto& b : B) worst = max(worst, dist_point_to_set<Space>(b, A, sp));
    return worst;
}

/// Brute force is O(|B| |A|); for 1-d clouds past 10^4 points a sorted
/// binary-search pass is used instead. Same values either way.
ExtDist hausdorff_semi(std::span<const double> B, std::span<const double> A, const LineSpace& sp);
ExtDist hausdorff_semi(std::span<const double> B, std::span<const double> A, const CircleSpace& sp);

inline ExtDist hausdorff_semi(const IndexSet& B, const IndexSet& A, const FiniteSpace& sp) {
    ExtDist worst = ExtDist::zero();
    B.for_each([&](int b) { worst = max(worst, dist_point_to_set(b, A, sp)); });
    return worst;
}

/// {y : d(y, A) <= delta} on a finite carrier, explicit.
inline IndexSet eps_closed_neighborhood(const IndexSet& A, double delta, const FiniteSpace& sp) {
    if (delta < 0) throw std::domain_error("eps_closed_neighborhood: negative radius");
    IndexSet out(sp.size());
    for (int y = 0; y < sp.size(); ++y)
        if (dist_point_to_set(y, A, sp) <= ExtDist(delta)) out.set(y);
    return out;
}

/// Closed delta-neighborhood of a point cloud on a continuum carrier,
/// exposed as a membership predicate.
template <class Space>
struct NeighborhoodPredicate {
    std::vector<typename Space::Point> centers;
    double delta;
    const Space* sp;

    bool contains(const typename Space::Point& y) const {
        return dist_point_to_set<Space>(y, centers, *sp) <= ExtDist(delta);
    }
};

template <class Space>
NeighborhoodPredicate<Space> eps_closed_neighborhood(
    std::vector<typename Space::Point> A, double delta, const Space& sp) {
    if (delta < 0) throw std::domain_error("eps_closed_neighborhood: negative radius");
    return NeighborhoodPredicate<Space>{std::move(A), delta, &sp};
}

}  // namespace attlab
