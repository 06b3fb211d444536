#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace attlab {

/// Subset of {0, ..., n-1} as a packed bitset. Value type; all set algebra
/// keeps the trailing word masked so operator== is plain word comparison.
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(int universe_size)
        : n_(universe_size), w_((universe_size + 63) / 64, 0) {
        if (universe_size < 0) throw std::invalid_argument("IndexSet: negative size");
    }

    static IndexSet full(int n) {
        IndexSet s(n);
        for (auto& w : s.w_) w = ~uint64_t{0};
        s.mask_tail();
        return s;
    }

    static IndexSet of(int n, std::span<const int> indices) {
        IndexSet s(n);
        for (int i : indices) s.set(i);
        return s;
    }
    static IndexSet of(int n, std::initializer_list<int> indices) {
        return of(n, std::span<const int>(indices.begin(), indices.size()));
    }

    int universe_size() const { return n_; }

    bool test(int i) const {
        check(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        check(i);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        check(i);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    IndexSet& operator|=(const IndexSet& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    IndexSet& operator&=(const IndexSet& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }

    bool subset_of(const IndexSet& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool intersects(const IndexSet& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                int bit = __builtin_ctzll(w);
                f(int(k * 64) + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    size_t hash() const {
        size_t h = std::hash<int>{}(n_);
        for (auto w : w_) h = h * 1000003u ^ std::hash<uint64_t>{}(w);
        return h;
    }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("IndexSet: index out of range");
    }
    void mask_tail() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace attlab
