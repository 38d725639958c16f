#pragma once

#include <limits>
#include <optional>

#include "cfs/vec2.hpp"

namespace cfs {

/// Closed time interval [t_start, t_end] in minutes. t_end may be +infinity.
/// The canonical empty interval is {+inf, -inf}; every operation that can
/// produce an empty result returns that representation.
struct TimeInterval {
    double t_start = std::numeric_limits<double>::infinity();
    double t_end = -std::numeric_limits<double>::infinity();

    static constexpr TimeInterval empty() { return {}; }
    static TimeInterval from(double t) {
        return {t, std::numeric_limits<double>::infinity()};
    }

    bool is_empty() const { return !(t_start <= t_end); }
    bool contains(double t) const { return t_start <= t && t <= t_end; }
    double length() const { return is_empty() ? 0.0 : t_end - t_start; }
};

inline TimeInterval intersect(const TimeInterval& a, const TimeInterval& b) {
    TimeInterval r{std::max(a.t_start, b.t_start), std::min(a.t_end, b.t_end)};
    if (r.is_empty()) return TimeInterval::empty();
    return r;
}

/// Circular region within which conflicts are detected and resolved.
struct ControlArea {
    Vec2 center{0.0, 0.0};
    double radius = 100.0;

    bool contains(const Vec2& p) const {
        return (p - center).norm_sq() <= radius * radius;
    }
};

enum class FlowId : int { A = 0, B = 1 };  // A = fixed southbound, B = rotated

inline const char* flow_name(FlowId f) { return f == FlowId::A ? "A" : "B"; }

/// Constant-velocity aircraft. pos0 is the position at ref_time; offset is the
/// lateral displacement already applied at entry (positive = aircraft's right),
/// so pos0 == nominal_entry + offset * lateral_unit(vel).
struct AircraftState {
    int id = -1;
    FlowId flow = FlowId::A;
    Vec2 pos0;
    Vec2 vel;              // nm per minute
    double ref_time = 0.0;
    Vec2 nominal_entry;
    double offset = 0.0;
    double start_position = 0.0;  // signed gate draw, positive toward the flow's right
};

/// Unit right-hand normal of a velocity: vel rotated -90 degrees, normalized.
/// For a southbound aircraft this points west; for an eastbound one, south.
inline Vec2 lateral_unit(const Vec2& vel) {
    return Vec2{vel.y, -vel.x}.normalized();
}

/// Copy of `s` with lateral offset x applied at its nominal entry point.
AircraftState with_offset(const AircraftState& s, double x);

inline Vec2 position_at(const AircraftState& s, double t) {
    return s.pos0 + s.vel * (t - s.ref_time);
}

struct Separation {
    double distance = 0.0;  // nm
    double t_min = 0.0;     // minutes, a time achieving the minimum
};

/// Minimum of |position_at(a,t) - position_at(b,t)| over t in `window`.
/// Returns nullopt for an empty window (no co-presence, so no conflict is
/// possible). For zero relative velocity the distance is constant and
/// t_min = window.t_start; otherwise the unconstrained closest-approach time
/// is clamped into the window.
std::optional<Separation> min_separation(const AircraftState& a,
                                         const AircraftState& b,
                                         const TimeInterval& window);

/// Closed interval of times during which the aircraft is inside or on the
/// circle; empty when the trajectory misses it. Requires |vel| > 0.
TimeInterval transit_window(const AircraftState& s, const ControlArea& area);

}  // namespace cfs
