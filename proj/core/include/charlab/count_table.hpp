#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "charlab/modarith.hpp"

namespace charlab {

// Multiplicity table over residues mod p. Dense array of length p while p
// fits the desk-scale memory budget, sorted run-length list above. Counts are
// exact; consumers needing totals beyond 64 bits use the 128-bit accessors.
class CountTable {
  public:
    static constexpr u64 kDenseLimit = 1ull << 24;

    explicit CountTable(u64 p) : p_(p), dense_(p <= kDenseLimit) {
        if (dense_) counts_.assign(p, 0);
    }

    u64 p() const { return p_; }
    bool dense() const { return dense_; }

    // Streaming build: add() values (any order), then finalize() once.
    void add(u64 v) {
        if (dense_)
            ++counts_[v];
        else
            raw_.push_back(v);
    }
    void add_many(u64 v, u64 n) {
        if (dense_)
            counts_[v] += n;
        else
            for (u64 i = 0; i < n; ++i) raw_.push_back(v);
    }
    void finalize();

    u64 count_at(u64 v) const;
    u128 total() const;
    u128 sum_squares() const;
    u128 dot(const CountTable& other) const; // sum over v of this(v)*other(v)

    // ascending by value; fn(value, count)
    template <class Fn>
    void for_each_nonzero(Fn&& fn) const {
        if (dense_) {
            for (u64 v = 0; v < p_; ++v)
                if (counts_[v]) fn(v, (u64)counts_[v]);
        } else {
            for (const auto& [v, c] : runs_) fn(v, c);
        }
    }

  private:
    u64 p_;
    bool dense_;
    std::vector<std::uint32_t> counts_;          // dense mode; per-value multiplicity < 2^32
    std::vector<u64> raw_;                       // sparse mode, pre-finalize
    std::vector<std::pair<u64, u64>> runs_;      // sparse mode, post-finalize
};

inline void CountTable::finalize() {
    if (dense_) return;
    std::sort(raw_.begin(), raw_.end());
    runs_.clear();
    for (u64 v : raw_) {
        if (!runs_.empty() && runs_.back().first == v)
            ++runs_.back().second;
        else
            runs_.push_back({v, 1});
    }
    raw_.clear();
    raw_.shrink_to_fit();
}

inline u64 CountTable::count_at(u64 v) const {
    if (dense_) return counts_[v];
    auto it = std::lower_bound(runs_.begin(), runs_.end(), std::pair<u64, u64>{v, 0});
    return (it != runs_.end() && it->first == v) ? it->second : 0;
}

inline u128 CountTable::total() const {
    u128 s = 0;
    for_each_nonzero([&](u64, u64 c) { s += c; });
    return s;
}

inline u128 CountTable::sum_squares() const {
    u128 s = 0;
    for_each_nonzero([&](u64, u64 c) { s += (u128)c * c; });
    return s;
}

inline u128 CountTable::dot(const CountTable& other) const {
    u128 s = 0;
    for_each_nonzero([&](u64 v, u64 c) {
        u64 oc = other.count_at(v);
        if (oc) s += (u128)c * oc;
    });
    return s;
}

} // namespace charlab
