#include "attlab/cover.hpp"

#include <algorithm>
#include <cmath>

namespace attlab {

FiniteCoverFamily build_cover(const FiniteSpace& sp, double r) {
    if (!(r > 0)) throw std::domain_error("build_cover: radius must be positive");
    FiniteCoverFamily fam;
    fam.radius = r;
    fam.slack = r / 8.0;

    // Dense sequence on a finite carrier is the index order. A point is
    // skipped iff an earlier center already covers it with the open
    // half-radius ball, so the selected centers form a strict r/2-net.
    for (int x = 0; x < sp.size(); ++x) {
        bool covered = false;
        for (int c : fam.centers)
            if (sp.distance_value(x, c) < r / 2) {
                covered = true;
                break;
            }
        if (!covered) fam.centers.push_back(x);
    }

    std::vector<double> dmin(sp.size(), std::numeric_limits<double>::infinity());
    for (int y = 0; y < sp.size(); ++y)
        for (int c : fam.centers) dmin[y] = std::min(dmin[y], sp.distance_value(y, c));

    fam.members.reserve(fam.centers.size());
    for (int c : fam.centers) {
        IndexSet member(sp.size());
        for (int y = 0; y < sp.size(); ++y) {
            double d = sp.distance_value(y, c);
            if (d <= r / 2 && d <= dmin[y] + fam.slack) member.set(y);
        }
        fam.members.push_back(std::move(member));
    }
    return fam;
}

std::vector<FiniteCoverFamily> cover_scales(const FiniteSpace& sp, int n_max) {
    if (n_max < 1) throw std::domain_error("cover_scales: n_max must be >= 1");
    std::vector<FiniteCoverFamily> out;
    out.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) out.push_back(build_cover(sp, 1.0 / n));
    return out;
}

int separating_scale(const FiniteSpace& sp) {
    double dmin = sp.min_positive_distance();
    if (!std::isfinite(dmin)) return 1;  // single-point carrier
    double bound = 1.0 / (2.0 * dmin);
    int n = int(std::floor(bound)) + 1;
    // Guard the boundary case 1/n == 2*dmin exactly.
    while (1.0 / n >= 2.0 * dmin) ++n;
    return n;
}

CircleCoverFamily build_cover(const CircleSpace& sp, double r) {
    if (!(r > 0)) throw std::domain_error("build_cover: radius must be positive");

    auto dist = [](double a, double b) {
        double d = std::abs(a - b);
        return std::min(d, kTwoPi - d);
    };

    // Greedy r/4-packing over the dyadic dense sequence. Once a generation
    // with spacing < r/4 has been processed, every point of the circle is
    // within 3r/8 of a selected center; we stop as soon as the sorted gap
    // check certifies that.
    std::vector<double> centers;
    auto covered = [&] {
        if (centers.empty()) return false;
        std::vector<double> s(centers);
        std::sort(s.begin(), s.end());
        double max_gap = s.front() + kTwoPi - s.back();
        for (size_t i = 1; i < s.size(); ++i) max_gap = std::max(max_gap, s[i] - s[i - 1]);
        return max_gap <= 0.75 * r;
    };

    size_t k = 0;
    size_t limit = 16;
    while (!covered()) {
        for (; k < limit; ++k) {
            double x = sp.dense_point(k);
            bool close = false;
            for (double c : centers)
                if (dist(x, c) < r / 4) {
                    close = true;
                    break;
                }
            if (!close) centers.push_back(x);
        }
        if (limit > (size_t{64} << 20))
            throw std::logic_error("build_cover: circle greedy failed to terminate");
        limit *= 2;
    }
    return CircleCoverFamily(r, std::move(centers));
}

std::vector<CircleCoverFamily> cover_scales(const CircleSpace& sp, int n_max) {
    if (n_max < 1) throw std::domain_error("cover_scales: n_max must be >= 1");
    std::vector<CircleCoverFamily> out;
    out.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) out.push_back(build_cover(sp, 1.0 / n));
    return out;
}

}  // namespace attlab
