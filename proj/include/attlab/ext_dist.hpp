#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace attlab {

/// Nonnegative distance value extended with +infinity.
///
/// The empty-set conventions are ordinary values of this type, not error
/// states: distance to an empty set is infinity(), the one-sided distance
/// from an empty set is zero(). Addition is monotone and saturates at
/// infinity; infinity is the unique maximum of the total order.
class ExtDist {
public:
    ExtDist() : v_(0.0) {}

    explicit ExtDist(double v) : v_(v) {
        if (std::isnan(v) || v < 0.0)
            throw std::invalid_argument("ExtDist: value must be nonnegative");
    }

    static ExtDist infinity() {
        ExtDist d;
        d.v_ = std::numeric_limits<double>::infinity();
        return d;
    }
    static ExtDist zero() { return ExtDist(); }

    bool is_infinite() const { return std::isinf(v_); }
    bool is_zero() const { return v_ == 0.0; }
    double value() const { return v_; }

    friend bool operator==(ExtDist a, ExtDist b) { return a.v_ == b.v_; }
    friend bool operator!=(ExtDist a, ExtDist b) { return a.v_ != b.v_; }
    friend bool operator<(ExtDist a, ExtDist b) { return a.v_ < b.v_; }
    friend bool operator<=(ExtDist a, ExtDist b) { return a.v_ <= b.v_; }
    friend bool operator>(ExtDist a, ExtDist b) { return a.v_ > b.v_; }
    friend bool operator>=(ExtDist a, ExtDist b) { return a.v_ >= b.v_; }

    friend ExtDist operator+(ExtDist a, ExtDist b) {
        ExtDist d;
        d.v_ = a.v_ + b.v_;  // inf + x == inf in IEEE arithmetic
        return d;
    }

    friend ExtDist min(ExtDist a, ExtDist b) { return a < b ? a : b; }
    friend ExtDist max(ExtDist a, ExtDist b) { return a < b ? b : a; }

private:
    double v_;
};

}  // namespace attlab
