#include "cfs/interval_set.hpp"

#include <algorithm>

namespace cfs {

void IntervalSet::add(double lo, double hi) {
    if (lo < hi) ivs_.push_back({lo, hi});
}

void IntervalSet::add(const IntervalSet& other) {
    ivs_.insert(ivs_.end(), other.ivs_.begin(), other.ivs_.end());
}

void IntervalSet::normalize() {
    if (ivs_.size() < 2) return;
    std::sort(ivs_.begin(), ivs_.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Interval> merged;
    merged.reserve(ivs_.size());
    for (const Interval& iv : ivs_) {
        // Touching open intervals coalesce; the shared endpoint is treated as
        // covered so that no isolated zero-width gap survives.
        if (!merged.empty() && iv.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    ivs_ = std::move(merged);
}

bool IntervalSet::contains(double x) const {
    for (const Interval& iv : ivs_) {
        if (iv.lo < x && x < iv.hi) return true;
    }
    return false;
}

std::optional<IntervalSet::Interval> IntervalSet::covering(double x) const {
    for (const Interval& iv : ivs_) {
        if (iv.lo < x && x < iv.hi) return iv;
    }
    return std::nullopt;
}

void IntervalSet::clamp(double lo, double hi) {
    std::vector<Interval> out;
    out.reserve(ivs_.size());
    for (Interval iv : ivs_) {
        iv.lo = std::max(iv.lo, lo);
        iv.hi = std::min(iv.hi, hi);
        if (iv.lo < iv.hi) out.push_back(iv);
    }
    ivs_ = std::move(out);
}

}  // namespace cfs
