#include "attlab/warped.hpp"

#include <cmath>

namespace attlab {

namespace {

const double kE = 2.718281828459045235360287471352662498;
const double kLogGammaOne = std::exp(kE);          // log Gamma(1) = e^e
const double kGammaOne = std::exp(kLogGammaOne);   // Gamma(1) = exp(e^e)

// Smallest magnitude at which Tower tagging is legal: exp(exp(L2)) must
// exceed the double range.
const double kTowerFloor = std::log(std::log(std::numeric_limits<double>::max()));

double abs_log_gamma(double u) {  // log Gamma(u), u > 0
    return u <= kWarpSpliceX ? std::log(u) + kLogGammaOne : std::exp(std::exp(u));
}

}  // namespace

WarpedMagnitude WarpedMagnitude::finite(double v) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument("WarpedMagnitude::finite: needs a finite nonnegative value");
    WarpedMagnitude m;
    m.tower_ = false;
    m.v_ = v;
    return m;
}

WarpedMagnitude WarpedMagnitude::tower(double log_log_v) {
    if (std::isnan(log_log_v) || log_log_v < kTowerFloor - 1e-9)
        throw std::invalid_argument("WarpedMagnitude::tower: value would fit in a double");
    WarpedMagnitude m;
    m.tower_ = true;
    m.v_ = log_log_v;
    return m;
}

double WarpedMagnitude::finite_value() const {
    if (tower_) throw std::logic_error("WarpedMagnitude: tower value has no finite form");
    return v_;
}

double WarpedMagnitude::log_log_value() const {
    if (!tower_) throw std::logic_error("WarpedMagnitude: finite value is not a tower");
    return v_;
}

double gamma_warp(double x) {
    double u = std::abs(x);
    double g = u <= kWarpSpliceX ? u * kGammaOne : std::exp(std::exp(std::exp(u)));
    return x < 0 ? -g : g;
}

double log_gamma_warp(double x) {
    if (!(x > 0)) throw std::domain_error("log_gamma_warp: needs x > 0");
    return abs_log_gamma(x);
}

double log_log_gamma_warp(double x) {
    if (!(x > 0)) throw std::domain_error("log_log_gamma_warp: needs x > 0");
    if (x <= kWarpSpliceX) {
        double lg = std::log(x) + kLogGammaOne;
        if (!(lg > 0)) throw std::domain_error("log_log_gamma_warp: Gamma(x) <= 1");
        return std::log(lg);
    }
    return std::exp(x);
}

WarpedMagnitude warped_plane_distance(StripPoint p, StripPoint q, Warp warp) {
    StripSpace::check_point(p);
    StripSpace::check_point(q);
    double dy = std::abs(q.y - p.y);
    if (warp == Warp::Identity)
        return WarpedMagnitude::finite(dy + std::abs(q.x - p.x));

    double a = std::min(p.x, q.x), b = std::max(p.x, q.x);
    if (a == b) return WarpedMagnitude::finite(dy);

    // Both Gamma values representable: exact double arithmetic. The sum of
    // two in-range magnitudes stays below the double maximum.
    double ga = gamma_warp(a), gb = gamma_warp(b);
    if (std::isfinite(ga) && std::isfinite(gb))
        return WarpedMagnitude::finite(dy + (gb - ga));

    // Log domain. The positive difference Gamma(b) - Gamma(a) is either a
    // difference of same-sign magnitudes or a sum across zero.
    bool add = a < 0 && b > 0;
    double u_hi, u_lo;
    if (add) {
        u_hi = std::max(-a, b);
        u_lo = std::min(-a, b);
    } else if (a >= 0) {
        u_hi = b;
        u_lo = a;
    } else {  // b <= 0
        u_hi = -a;
        u_lo = -b;
    }

    double lg_hi = std::exp(std::exp(u_hi));  // u_hi > 1 whenever this branch is reached
    if (std::isfinite(lg_hi)) {
        double lg_lo = u_lo == 0 ? -std::numeric_limits<double>::infinity() : abs_log_gamma(u_lo);
        double ratio = std::exp(lg_lo - lg_hi);
        double corr = add ? std::log1p(ratio) : std::log1p(-ratio);
        double l1;
        if (!std::isfinite(corr)) {
            // Difference below double resolution of the logs: first order in
            // the gap, log Gamma'(u_hi) = log Gamma + exp(u) + u past the splice.
            l1 = lg_hi + std::exp(u_hi) + u_hi + std::log(b - a);
        } else {
            l1 = lg_hi + corr;
        }
        double v = std::exp(l1);
        if (std::isfinite(v) && std::isfinite(v + dy)) return WarpedMagnitude::finite(v + dy);
        // dy enters as log1p(dy*exp(-l1)), zero at this magnitude.
        return WarpedMagnitude::tower(std::log(l1));
    }

    // log Gamma overflows as well: one level higher, corrections from the
    // smaller term and dy are below double resolution here.
    return WarpedMagnitude::tower(std::exp(u_hi));
}

namespace {

// |Gamma(u + d) - Gamma(u)| + extra for an anchor u >= 1 whose interval
// stays on the triple-exponential side; the offset arrives as
// sgn * exp(lad) with |offset| <= 1e-5 and lad possibly far below the
// double underflow line. Writing L = log Gamma = exp(exp(.)) and
// DL = L(u+d) - L(u), the difference is Gamma(lower end) * expm1(|DL|),
// and DL = L(u) * expm1(D) with D = e^u expm1(d). Every factor is either a
// full-accuracy double or carried by its logarithm.
WarpedMagnitude offset_past_splice(double u, double lad, int sgn, double extra) {
    double eu = std::exp(u);
    double d = sgn * std::exp(lad);  // may underflow to zero
    double log_em1_d = d != 0 ? std::log(std::abs(std::expm1(d))) : lad;
    double log_absd = u + log_em1_d;  // log |D|

    if (log_absd > std::log(700.0)) {
        // one end dwarfs the other
        return WarpedMagnitude::tower(sgn > 0 ? std::exp(u + d) : eu);
    }

    double D = sgn * std::exp(log_absd);
    double log_expm1_abs_d =
        std::abs(D) > 1e-8 ? std::log(std::abs(std::expm1(D))) : log_absd;
    double log_dl = eu + log_expm1_abs_d;         // log |DL|
    double log_l_lo = eu + std::min(D, 0.0);      // log L(lower end)
    double lg = std::exp(eu);                     // L(u), may overflow

    if (std::isfinite(lg)) {
        double l_lo = lg * std::exp(std::min(D, 0.0));
        double l1;
        if (log_dl > std::log(700.0)) {
            double dl = std::exp(log_dl);
            l1 = l_lo + dl;
            if (!std::isfinite(l1)) {
                double hi = std::max(log_l_lo, log_dl), lo = std::min(log_l_lo, log_dl);
                return WarpedMagnitude::tower(hi + std::log1p(std::exp(lo - hi)));
            }
        } else if (log_dl > std::log(1e-8)) {
            l1 = l_lo + std::log(std::expm1(std::exp(log_dl)));
        } else {
            l1 = l_lo + log_dl;  // expm1(dl) = dl at this size
        }
        double v = std::exp(l1);
        if (std::isfinite(v) && std::isfinite(v + extra))
            return WarpedMagnitude::finite(v + extra);
        return WarpedMagnitude::tower(std::log(l1));
    }

    // log Gamma overflows: one more level. L1 = L(lo) + DL-term; whichever
    // dominates decides log L1.
    if (log_dl > 700.0) {
        double hi = std::max(log_l_lo, log_dl), lo = std::min(log_l_lo, log_dl);
        return WarpedMagnitude::tower(hi + std::log1p(std::exp(lo - hi)));
    }
    return WarpedMagnitude::tower(log_l_lo);
}

}  // namespace

WarpedMagnitude warped_log_offset_distance(double x, double log_abs_delta, int delta_sign,
                                           double dy, Warp warp) {
    if (dy < 0 || dy > 1)
        throw std::domain_error("warped_log_offset_distance: dy outside [0,1]");
    if (delta_sign != 1 && delta_sign != -1)
        throw std::invalid_argument("warped_log_offset_distance: sign must be +-1");
    if (warp == Warp::Identity)
        return WarpedMagnitude::finite(dy + std::exp(log_abs_delta));
    if (log_abs_delta > std::log(1e-5)) {
        double delta = delta_sign * std::exp(log_abs_delta);
        return warped_plane_distance({x + delta, dy}, {x, 0.0}, warp);
    }

    // Gamma is odd, so the difference only depends on the anchor magnitude
    // and the offset pointing away from or toward zero.
    double u = std::abs(x);
    int sgn = x < 0 ? -delta_sign : delta_sign;
    double d = sgn * std::exp(log_abs_delta);  // may underflow to zero

    double knot_gap = u - kWarpSpliceX;  // exact near the knot
    bool lo_below = (sgn >= 0 ? knot_gap : knot_gap + d) < 0;
    bool hi_below = (sgn >= 0 ? knot_gap + d : knot_gap) <= 0;

    if (lo_below && hi_below)  // inside the linear splice: slope Gamma(1)
        return WarpedMagnitude::finite(dy + std::exp(kLogGammaOne + log_abs_delta));
    if (!lo_below && !hi_below) return offset_past_splice(u, log_abs_delta, sgn, dy);

    // interval straddles the knot: linear piece below, exponential above;
    // straddling requires a representable offset wider than the knot gap
    double below = sgn >= 0 ? -knot_gap : -(knot_gap + d);
    double above = std::abs(d) - below;
    return offset_past_splice(kWarpSpliceX, std::log(above), 1, dy + kGammaOne * below);
}

WarpedMagnitude warped_offset_distance(double x, double delta, double dy, Warp warp) {
    if (dy < 0 || dy > 1) throw std::domain_error("warped_offset_distance: dy outside [0,1]");
    if (warp == Warp::Identity) return WarpedMagnitude::finite(dy + std::abs(delta));
    if (delta == 0) return WarpedMagnitude::finite(dy);
    return warped_log_offset_distance(x, std::log(std::abs(delta)), delta > 0 ? 1 : -1, dy,
                                      warp);
}

}  // namespace attlab
