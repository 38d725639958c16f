#include "cfs/kinematics.hpp"

#include <algorithm>
#include <cmath>

namespace cfs {

AircraftState with_offset(const AircraftState& s, double x) {
    AircraftState out = s;
    out.offset = x;
    out.pos0 = s.nominal_entry + x * lateral_unit(s.vel);
    return out;
}

std::optional<Separation> min_separation(const AircraftState& a,
                                         const AircraftState& b,
                                         const TimeInterval& window) {
    if (window.is_empty()) return std::nullopt;

    const double t0 = window.t_start;
    const Vec2 dp = position_at(a, t0) - position_at(b, t0);
    const Vec2 dv = a.vel - b.vel;
    const double v2 = dv.norm_sq();

    if (v2 == 0.0) {
        return Separation{dp.norm(), t0};
    }

    // Distance^2 is an upward parabola in t; clamp its vertex into the window.
    const double t_star = t0 - dp.dot(dv) / v2;
    const double t_min = std::min(std::max(t_star, t0), window.t_end);
    const double dist = (dp + dv * (t_min - t0)).norm();
    return Separation{dist, t_min};
}

TimeInterval transit_window(const AircraftState& s, const ControlArea& area) {
    const Vec2 dp = s.pos0 - area.center;
    const double a = s.vel.norm_sq();
    const double b = 2.0 * dp.dot(s.vel);
    const double c = dp.norm_sq() - area.radius * area.radius;

    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return TimeInterval::empty();

    const double sq = std::sqrt(disc);
    // Numerically stable root pair: q/a and c/q.
    const double q = -0.5 * (b + std::copysign(sq, b));
    double tau1, tau2;
    if (q != 0.0) {
        tau1 = q / a;
        tau2 = c / q;
    } else {  // b == 0 and disc == 0: tangent at tau = 0
        tau1 = tau2 = 0.0;
    }
    if (tau1 > tau2) std::swap(tau1, tau2);
    return {s.ref_time + tau1, s.ref_time + tau2};
}

}  // namespace cfs
