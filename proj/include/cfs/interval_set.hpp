#pragma once

#include <optional>
#include <vector>

namespace cfs {

/// Union of disjoint open intervals (lo, hi) on the real line. Endpoints may
/// be +-infinity. After normalize() the intervals are sorted, pairwise
/// disjoint, non-adjacent and each satisfies lo < hi; zero-width intervals
/// vanish.
class IntervalSet {
public:
    struct Interval {
        double lo;
        double hi;
        bool operator==(const Interval&) const = default;
    };

    IntervalSet() = default;
    static IntervalSet of(double lo, double hi) {
        IntervalSet s;
        s.add(lo, hi);
        return s;
    }

    /// Adds (lo, hi); ignored when lo >= hi. Leaves the set un-normalized.
    void add(double lo, double hi);
    void add(const IntervalSet& other);

    /// Sorts and merges overlapping or touching intervals.
    void normalize();

    bool empty() const { return ivs_.empty(); }
    std::size_t size() const { return ivs_.size(); }
    const std::vector<Interval>& intervals() const { return ivs_; }

    /// Strict interior membership (the set is open).
    bool contains(double x) const;

    /// The interval whose interior contains x, if any. Assumes normalized.
    std::optional<Interval> covering(double x) const;

    /// Intersects every interval with (lo, hi), dropping what vanishes.
    void clamp(double lo, double hi);

    bool operator==(const IntervalSet&) const = default;

private:
    std::vector<Interval> ivs_;
};

}  // namespace cfs
