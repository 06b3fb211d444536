#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "attlab/index_set.hpp"

namespace attlab {

struct InvalidUniverseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Finite sample space with weights, a measure-preserving shift, and a
/// partition sigma-algebra. The shift is a permutation that preserves each
/// point's weight and maps partition blocks onto partition blocks, so every
/// power of it is measurable and measure preserving.
///
/// Measurable sets are exactly the unions of blocks; a measurable null set
/// is a union of blocks of total weight zero. Zero-weight points inside a
/// positive-weight block are *not* removable by "almost surely" qualifiers.
class FiniteUniverse {
public:
    FiniteUniverse() = default;

    FiniteUniverse(std::vector<double> weights, std::vector<int> shift,
                   std::vector<std::vector<int>> blocks)
        : weights_(std::move(weights)), shift_(std::move(shift)), blocks_(std::move(blocks)) {
        validate_and_index();
    }

    /// One-point universe (deterministic dynamics).
    static FiniteUniverse deterministic() {
        return FiniteUniverse({1.0}, {0}, {{0}});
    }

    int size() const { return int(weights_.size()); }
    int block_count() const { return int(blocks_.size()); }

    double weight(int i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<int>& shift() const { return shift_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    int block_of(int i) const { return block_of_[i]; }
    double block_weight(int b) const { return block_weight_[b]; }
    bool block_positive(int b) const { return block_weight_[b] > 0.0; }
    bool in_positive_block(int i) const { return block_positive(block_of_[i]); }

    /// theta_t as an index map; t may be negative.
    int theta(int i, long long t) const {
        int j = i;
        if (t >= 0)
            for (long long s = 0; s < t; ++s) j = shift_[j];
        else
            for (long long s = 0; s > t; --s) j = inverse_shift_[j];
        return j;
    }

    /// Union of the blocks meeting S: the smallest measurable superset.
    IndexSet measurable_hull(const IndexSet& S) const {
        IndexSet out(size());
        for (const auto& blk : blocks_) {
            bool meets = false;
            for (int i : blk)
                if (S.test(i)) {
                    meets = true;
                    break;
                }
            if (meets)
                for (int i : blk) out.set(i);
        }
        return out;
    }

    /// Outer measure: total weight of the blocks meeting S.
    double outer_measure(const IndexSet& S) const {
        double p = 0;
        for (int b = 0; b < block_count(); ++b) {
            for (int i : blocks_[b])
                if (S.test(i)) {
                    p += block_weight_[b];
                    break;
                }
        }
        return p;
    }

    bool is_measurable_set(const IndexSet& S) const {
        for (const auto& blk : blocks_) {
            int have = 0;
            for (int i : blk) have += S.test(i) ? 1 : 0;
            if (have != 0 && have != int(blk.size())) return false;
        }
        return true;
    }

private:
    void validate_and_index() {
        int m = int(weights_.size());
        if (m == 0) throw InvalidUniverseError("universe: empty");
        if (int(shift_.size()) != m) throw InvalidUniverseError("universe: shift size mismatch");

        double total = 0;
        for (double w : weights_) {
            if (!(w >= 0) || !std::isfinite(w)) throw InvalidUniverseError("universe: bad weight");
            total += w;
        }
        if (std::abs(total - 1.0) > 1e-9) throw InvalidUniverseError("universe: weights must sum to 1");

        std::vector<int> seen(m, 0);
        for (int i = 0; i < m; ++i) {
            if (shift_[i] < 0 || shift_[i] >= m) throw InvalidUniverseError("universe: shift out of range");
            seen[shift_[i]]++;
        }
        for (int c : seen)
            if (c != 1) throw InvalidUniverseError("universe: shift is not a bijection");
        for (int i = 0; i < m; ++i)
            if (weights_[shift_[i]] != weights_[i])
                throw InvalidUniverseError("universe: shift does not preserve weights");

        block_of_.assign(m, -1);
        for (int b = 0; b < int(blocks_.size()); ++b) {
            if (blocks_[b].empty()) throw InvalidUniverseError("universe: empty block");
            for (int i : blocks_[b]) {
                if (i < 0 || i >= m) throw InvalidUniverseError("universe: block index out of range");
                if (block_of_[i] != -1) throw InvalidUniverseError("universe: blocks overlap");
                block_of_[i] = b;
            }
        }
        for (int i = 0; i < m; ++i)
            if (block_of_[i] == -1) throw InvalidUniverseError("universe: blocks do not partition");

        // The shift must map each block onto a single block.
        for (const auto& blk : blocks_) {
            int target = block_of_[shift_[blk[0]]];
            for (int i : blk)
                if (block_of_[shift_[i]] != target)
                    throw InvalidUniverseError("universe: shift splits a block");
            if (int(blocks_[target].size()) != int(blk.size()))
                throw InvalidUniverseError("universe: shift is not onto a block");
        }

        inverse_shift_.assign(m, 0);
        for (int i = 0; i < m; ++i) inverse_shift_[shift_[i]] = i;

        block_weight_.assign(blocks_.size(), 0.0);
        for (int b = 0; b < int(blocks_.size()); ++b)
            for (int i : blocks_[b]) block_weight_[b] += weights_[i];
    }

    std::vector<double> weights_;
    std::vector<int> shift_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
    std::vector<int> inverse_shift_;
    std::vector<double> block_weight_;
};

/// Set-valued map on a finite universe: one subset of the carrier per sample
/// point. Not assumed measurable; block-constancy is the measurability test.
struct RandomSet {
    std::vector<IndexSet> sections;

    RandomSet() = default;
    RandomSet(int universe_size, int carrier_size)
        : sections(universe_size, IndexSet(carrier_size)) {}

    int universe_size() const { return int(sections.size()); }
    int carrier_size() const { return sections.empty() ? 0 : sections[0].universe_size(); }

    static RandomSet constant(int universe_size, IndexSet section) {
        RandomSet s;
        s.sections.assign(universe_size, std::move(section));
        return s;
    }

    static RandomSet full(int universe_size, int carrier_size) {
        return constant(universe_size, IndexSet::full(carrier_size));
    }

    bool empty_everywhere() const {
        for (const auto& s : sections)
            if (!s.empty()) return false;
        return true;
    }

    friend bool operator==(const RandomSet& a, const RandomSet& b) = default;

    bool subset_of(const RandomSet& o) const {
        for (size_t i = 0; i < sections.size(); ++i)
            if (!sections[i].subset_of(o.sections[i])) return false;
        return true;
    }
};

/// A set-valued map is measurable for the partition sigma-algebra iff its
/// sections are constant on every block, regardless of weights.
inline bool is_measurable(const RandomSet& C, const FiniteUniverse& u) {
    if (C.universe_size() != u.size())
        throw std::invalid_argument("is_measurable: universe size mismatch");
    for (const auto& blk : u.blocks())
        for (size_t k = 1; k < blk.size(); ++k)
            if (!(C.sections[blk[k]] == C.sections[blk[0]])) return false;
    return true;
}

/// Sections replaced with their per-block unions: the direct form of the
/// closed random hull on a finite carrier.
inline RandomSet block_union_hull(const RandomSet& K, const FiniteUniverse& u) {
    RandomSet out(u.size(), K.carrier_size());
    for (const auto& blk : u.blocks()) {
        IndexSet un(K.carrier_size());
        for (int i : blk) un |= K.sections[i];
        for (int i : blk) out.sections[i] = un;
    }
    return out;
}

}  // namespace attlab
