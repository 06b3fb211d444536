#pragma once

#include <stdexcept>

#include "attlab/spaces.hpp"

namespace attlab {

enum class Warp { Identity, TripleExp };

/// Totally ordered magnitude for warped distances. A value is either an
/// ordinary double or, past the double range, a tower exp(exp(L2)) carried
/// by its double logarithm L2. Every Finite sorts below every Tower;
/// quantities exceeding the floating-point maximum are always Tower-tagged,
/// which keeps the order consistent.
class WarpedMagnitude {
public:
    static WarpedMagnitude finite(double v);
    static WarpedMagnitude tower(double log_log_v);

    bool is_tower() const { return tower_; }
    double finite_value() const;    // throws on Tower
    double log_log_value() const;   // throws on Finite

    friend bool operator==(const WarpedMagnitude& a, const WarpedMagnitude& b) {
        return a.tower_ == b.tower_ && a.v_ == b.v_;
    }
    friend bool operator<(const WarpedMagnitude& a, const WarpedMagnitude& b) {
        if (a.tower_ != b.tower_) return !a.tower_;
        return a.v_ < b.v_;
    }
    friend bool operator>(const WarpedMagnitude& a, const WarpedMagnitude& b) { return b < a; }
    friend bool operator<=(const WarpedMagnitude& a, const WarpedMagnitude& b) { return !(b < a); }
    friend bool operator>=(const WarpedMagnitude& a, const WarpedMagnitude& b) { return !(a < b); }

private:
    bool tower_ = false;
    double v_ = 0.0;  // value when !tower_, log log value when tower_
};

// ---------------------------------------------------------------------------
// The warp Gamma: odd, strictly increasing, continuous, equal to
// exp(exp(exp(x))) for x >= 1 and linear on [-1, 1] (endpoints matched).
// Only the matching on |x| >= 1 is pinned by the construction; the splice is
// one conformant completion and is recorded in experiment reports.

inline constexpr double kWarpSpliceX = 1.0;

/// Gamma(x) in double range; +-inf once the triple exponential overflows.
double gamma_warp(double x);

/// log Gamma(x) for x > 0. Overflows (returns +inf) once exp(exp(x)) does.
double log_gamma_warp(double x);

/// log log Gamma(x) for x > 0 with Gamma(x) > 1.
double log_log_gamma_warp(double x);

/// Warped distance |y_q - y_p| + |Gamma(x_q) - Gamma(x_p)| (identity warp:
/// plain l1 distance). Exact double when both Gamma terms are representable;
/// otherwise computed in the log domain, one level higher when log Gamma
/// itself overflows. Requires y in [0,1].
WarpedMagnitude warped_plane_distance(StripPoint p, StripPoint q, Warp warp);

/// Same distance between (x + delta, .) and (x, .) with vertical gap dy,
/// where the horizontal offset is carried in exact form: contraction runs
/// push |delta| far below one ulp of x (and eventually below the double
/// range altogether), at which point materializing the endpoint would
/// silently collapse the distance to dy.
WarpedMagnitude warped_offset_distance(double x, double delta, double dy, Warp warp);

/// Offset carried by its logarithm, for offsets like e^{-t} at large t that
/// underflow double outright. delta_sign in {-1, +1}.
WarpedMagnitude warped_log_offset_distance(double x, double log_abs_delta, int delta_sign,
                                           double dy, Warp warp);

}  // namespace attlab
