#pragma once

// Test-only extended float: 256-bit significand, wide binary exponent, sign.
// Just enough arithmetic (+, -, *, reciprocal, exp, log) to serve as the
// high-precision log-domain oracle for warped-metric ordering. Entirely
// independent of the library's double-based log-domain path.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace bigfloat {

struct BigFloat {
    int sign = 0;                      // -1, 0, +1
    long long exp = 0;                 // value = sign * mant * 2^exp
    std::array<uint64_t, 4> m{};       // little-endian limbs; bit 255 set when nonzero

    bool is_zero() const { return sign == 0; }
};

namespace detail {

inline int leading_zeros(const std::array<uint64_t, 4>& m) {
    for (int i = 3; i >= 0; --i)
        if (m[i]) return (3 - i) * 64 + __builtin_clzll(m[i]);
    return 256;
}

inline void shift_left(std::array<uint64_t, 4>& m, int k) {
    if (k <= 0) return;
    if (k >= 256) {
        m = {};
        return;
    }
    int limb = k / 64, bits = k % 64;
    for (int i = 3; i >= 0; --i) {
        uint64_t v = 0;
        int src = i - limb;
        if (src >= 0) v = m[src] << bits;
        if (bits && src - 1 >= 0) v |= m[src - 1] >> (64 - bits);
        m[i] = v;
    }
}

inline void shift_right(std::array<uint64_t, 4>& m, int k) {
    if (k <= 0) return;
    if (k >= 256) {
        m = {};
        return;
    }
    int limb = k / 64, bits = k % 64;
    for (int i = 0; i < 4; ++i) {
        uint64_t v = 0;
        int src = i + limb;
        if (src < 4) v = m[src] >> bits;
        if (bits && src + 1 < 4) v |= m[src + 1] << (64 - bits);
        m[i] = v;
    }
}

inline bool add_mag_into(std::array<uint64_t, 4>& a, const std::array<uint64_t, 4>& b) {
    unsigned __int128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 s = (unsigned __int128)a[i] + b[i] + carry;
        a[i] = uint64_t(s);
        carry = s >> 64;
    }
    return carry != 0;
}

inline void sub_mag_into(std::array<uint64_t, 4>& a, const std::array<uint64_t, 4>& b) {
    unsigned __int128 borrow = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 d = (unsigned __int128)a[i] - b[i] - borrow;
        a[i] = uint64_t(d);
        borrow = (d >> 64) ? 1 : 0;
    }
}

inline int cmp_mag(const std::array<uint64_t, 4>& a, const std::array<uint64_t, 4>& b) {
    for (int i = 3; i >= 0; --i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

}  // namespace detail

inline BigFloat normalized(int sign, std::array<uint64_t, 4> m, long long exp) {
    int lz = detail::leading_zeros(m);
    if (lz == 256) return BigFloat{};
    detail::shift_left(m, lz);
    return BigFloat{sign, exp - lz, m};
}

inline BigFloat from_double(double d) {
    if (d == 0.0) return BigFloat{};
    if (!std::isfinite(d)) throw std::invalid_argument("BigFloat: non-finite double");
    int sign = d < 0 ? -1 : 1;
    int e = 0;
    double f = std::frexp(std::abs(d), &e);  // f in [0.5, 1)
    uint64_t fi = uint64_t(std::ldexp(f, 53));
    std::array<uint64_t, 4> m{};
    m[0] = fi;
    return normalized(sign, m, e - 53);
}

inline BigFloat from_int(long long v) {
    if (v == 0) return BigFloat{};
    int sign = v < 0 ? -1 : 1;
    std::array<uint64_t, 4> m{};
    m[0] = uint64_t(v < 0 ? -v : v);
    return normalized(sign, m, 0);
}

inline double to_double(const BigFloat& a) {
    if (a.is_zero()) return 0.0;
    long long top_exp = a.exp + 255;  // position of the leading bit
    if (top_exp > 1020) return a.sign > 0 ? HUGE_VAL : -HUGE_VAL;
    if (top_exp < -1070) return 0.0;
    double v = std::ldexp(double(a.m[3]), int(a.exp) + 192) +
               std::ldexp(double(a.m[2]), int(a.exp) + 128);
    return a.sign * v;
}

inline int cmp(const BigFloat& a, const BigFloat& b) {
    if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
    if (a.sign == 0) return 0;
    int mag;
    if (a.exp != b.exp)
        mag = a.exp < b.exp ? -1 : 1;
    else
        mag = detail::cmp_mag(a.m, b.m);
    return a.sign > 0 ? mag : -mag;
}

inline BigFloat add(const BigFloat& a, const BigFloat& b);

inline BigFloat neg(BigFloat a) {
    a.sign = -a.sign;
    return a;
}

inline BigFloat add_mag(const BigFloat& a, const BigFloat& b, int sign) {
    // both nonzero
    const BigFloat& hi = (a.exp > b.exp || (a.exp == b.exp && detail::cmp_mag(a.m, b.m) >= 0)) ? a : b;
    const BigFloat& lo = (&hi == &a) ? b : a;
    std::array<uint64_t, 4> ml = lo.m;
    long long d = hi.exp - lo.exp;
    detail::shift_right(ml, d > 256 ? 256 : int(d));
    std::array<uint64_t, 4> mh = hi.m;
    bool carry = detail::add_mag_into(mh, ml);
    long long e = hi.exp;
    if (carry) {
        detail::shift_right(mh, 1);
        mh[3] |= uint64_t(1) << 63;
        e += 1;
    }
    return BigFloat{sign, e, mh};
}

inline BigFloat sub_mag(const BigFloat& a, const BigFloat& b, int sign) {
    // |a| >= |b| assumed, both nonzero
    std::array<uint64_t, 4> mh = a.m, ml = b.m;
    long long d = a.exp - b.exp;
    detail::shift_right(ml, d > 256 ? 256 : int(d));
    detail::sub_mag_into(mh, ml);
    BigFloat r = normalized(sign, mh, a.exp);
    return r;
}

inline BigFloat add(const BigFloat& a, const BigFloat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.sign == b.sign) return add_mag(a, b, a.sign);
    int mag = (a.exp != b.exp) ? (a.exp < b.exp ? -1 : 1) : detail::cmp_mag(a.m, b.m);
    if (mag == 0) return BigFloat{};
    if (mag > 0) return sub_mag(a, b, a.sign);
    return sub_mag(b, a, b.sign);
}

inline BigFloat sub(const BigFloat& a, const BigFloat& b) { return add(a, neg(b)); }

inline BigFloat mul(const BigFloat& a, const BigFloat& b) {
    if (a.is_zero() || b.is_zero()) return BigFloat{};
    uint64_t prod[8] = {};
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 carry = 0;
        for (int j = 0; j < 4; ++j) {
            unsigned __int128 cur =
                (unsigned __int128)a.m[i] * b.m[j] + prod[i + j] + carry;
            prod[i + j] = uint64_t(cur);
            carry = cur >> 64;
        }
        prod[i + 4] += uint64_t(carry);
    }
    // top bit is at position 510 or 511 of the 512-bit product
    int top = prod[7] >> 63 ? 511 : 510;
    std::array<uint64_t, 4> m;
    int shift = top - 255;  // 255 or 256
    for (int i = 0; i < 4; ++i) {
        int lo = shift + 64 * i;
        uint64_t v = prod[lo / 64] >> (lo % 64);
        if (lo % 64 && lo / 64 + 1 < 8) v |= prod[lo / 64 + 1] << (64 - lo % 64);
        m[i] = v;
    }
    return BigFloat{a.sign * b.sign, a.exp + b.exp + shift, m};
}

inline BigFloat div_u64(const BigFloat& a, uint64_t u) {
    if (a.is_zero()) return a;
    std::array<uint64_t, 4> q{};
    unsigned __int128 rem = 0;
    for (int i = 3; i >= 0; --i) {
        unsigned __int128 cur = (rem << 64) | a.m[i];
        q[i] = uint64_t(cur / u);
        rem = cur % u;
    }
    return normalized(a.sign, q, a.exp);
}

inline BigFloat reciprocal(const BigFloat& a) {
    if (a.is_zero()) throw std::domain_error("BigFloat: reciprocal of zero");
    // Seed from the top limb: a = md * 2^(exp+255) with md in [1, 2).
    double md = std::ldexp(double(a.m[3]), -63);
    BigFloat z = from_double(1.0 / md);
    z.exp -= a.exp + 255;
    z.sign = a.sign;
    BigFloat mag_a = a;
    mag_a.sign = 1;
    BigFloat mag_z = z;
    mag_z.sign = 1;
    BigFloat two = from_int(2);
    for (int it = 0; it < 4; ++it)
        mag_z = mul(mag_z, sub(two, mul(mag_a, mag_z)));
    mag_z.sign = a.sign;
    return mag_z;
}

inline BigFloat div(const BigFloat& a, const BigFloat& b) { return mul(a, reciprocal(b)); }

// ---------------------------------------------------------------------------

inline const BigFloat& ln2_const() {
    static BigFloat v = [] {
        // ln 2 = 2 atanh(1/3)
        BigFloat u = div_u64(from_int(1), 3);
        BigFloat u2 = mul(u, u);
        BigFloat term = u, sum = u;
        for (uint64_t k = 1; k < 100; ++k) {
            term = mul(term, u2);
            BigFloat c = div_u64(term, 2 * k + 1);
            if (c.is_zero() || c.exp + 300 < sum.exp) break;
            sum = add(sum, c);
        }
        return add(sum, sum);
    }();
    return v;
}

inline BigFloat exp(const BigFloat& x) {
    if (x.is_zero()) return from_int(1);
    if (x.exp + 255 > 62) throw std::domain_error("BigFloat::exp: argument too large");
    double xd = to_double(x);
    long long k = llround(xd / 0.6931471805599453);
    BigFloat r = sub(x, mul(from_int(k), ln2_const()));
    BigFloat term = from_int(1), sum = from_int(1);
    for (uint64_t n = 1; n < 120; ++n) {
        term = div_u64(mul(term, r), n);
        if (term.is_zero() || term.exp + 300 < sum.exp) break;
        sum = add(sum, term);
    }
    sum.exp += k;
    return sum;
}

inline BigFloat log(const BigFloat& a) {
    if (a.sign <= 0) throw std::domain_error("BigFloat::log: needs a positive argument");
    long long e2 = a.exp + 255;
    BigFloat mhat{1, -255, a.m};  // in [1, 2)
    BigFloat one = from_int(1);
    BigFloat u = div(sub(mhat, one), add(mhat, one));  // in [0, 1/3)
    BigFloat u2 = mul(u, u);
    BigFloat term = u, sum = u;
    if (!u.is_zero()) {
        for (uint64_t k = 1; k < 100; ++k) {
            term = mul(term, u2);
            BigFloat c = div_u64(term, 2 * k + 1);
            if (c.is_zero() || (!sum.is_zero() && c.exp + 300 < sum.exp)) break;
            sum = add(sum, c);
        }
    }
    return add(mul(from_int(e2), ln2_const()), add(sum, sum));
}

}  // namespace bigfloat
