#include "cfs/resolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace cfs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLeadingEps = 1e-12;   // leading coefficient below this is degenerate
constexpr double kBisectTol = 1e-9;     // nm, endpoint refinement tolerance
constexpr int kRefineSamples = 64;

// {x : a x^2 + b x + c < 0} for a >= 0 (clamped). Open interval, possibly
// unbounded in the degenerate cases; empty for a non-positive discriminant
// (zero-width and single-point sets normalize away).
IntervalSet quad_below_zero(double a, double b, double c) {
    a = std::max(a, 0.0);
    if (a > kLeadingEps) {
        const double disc = b * b - 4.0 * a * c;
        if (disc <= 0.0) return {};
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (b + std::copysign(sq, b));
        double x1 = q / a;
        double x2 = c / q;
        if (x1 > x2) std::swap(x1, x2);
        return IntervalSet::of(x1, x2);
    }
    if (std::abs(b) > kLeadingEps) {
        const double root = -c / b;
        return b > 0.0 ? IntervalSet::of(-kInf, root) : IntervalSet::of(root, kInf);
    }
    return c < 0.0 ? IntervalSet::of(-kInf, kInf) : IntervalSet{};
}

struct Relative {
    Vec2 dp0;     // mover(nominal) - intruder at t_start
    Vec2 dv;      // mover.vel - intruder.vel
    Vec2 u;       // mover's lateral unit
    double v2;    // |dv|^2
    double a;     // dp0 . dv
    double b;     // u . dv
    double t_start;
};

Relative relative_geometry(const AircraftState& mover, const AircraftState& intruder) {
    Relative r;
    r.t_start = std::max(mover.ref_time, intruder.ref_time);
    r.dp0 = position_at(mover, r.t_start) - position_at(intruder, r.t_start);
    r.dv = mover.vel - intruder.vel;
    r.u = lateral_unit(mover.vel);
    r.v2 = r.dv.norm_sq();
    r.a = r.dp0.dot(r.dv);
    r.b = r.u.dot(r.dv);
    return r;
}

// Forbidden offsets over [t_start, +inf): the union of
//   {x : |dp(x)| < sep at t_start}                       (already too close)
//   {x : closest-approach distance < sep} gated to the converging side.
// Dropping the closed boundary of the converging half-line is exact: at the
// boundary the closest approach happens at t_start, so any genuinely
// forbidden boundary point already lies inside the first (open) set.
IntervalSet analytic_forbidden(const Relative& r, double sep) {
    const double u2 = r.u.norm_sq();
    const double pu = r.dp0.dot(r.u);
    const double p2 = r.dp0.norm_sq();
    const double s2 = sep * sep;

    IntervalSet at_start = quad_below_zero(u2, 2.0 * pu, p2 - s2);

    if (r.v2 == 0.0) return at_start;  // constant distance for all time

    IntervalSet cpa = quad_below_zero(u2 - r.b * r.b / r.v2,
                                      2.0 * (pu - r.a * r.b / r.v2),
                                      p2 - r.a * r.a / r.v2 - s2);

    // Converging side: dp(x) . dv <= 0, i.e. a + b x <= 0.
    if (r.b > 0.0) {
        cpa.clamp(-kInf, -r.a / r.b);
    } else if (r.b < 0.0) {
        cpa.clamp(-r.a / r.b, kInf);
    } else if (r.a > 0.0) {
        cpa = {};  // diverging for every x
    }

    cpa.add(at_start);
    cpa.normalize();
    return cpa;
}

// ---- windowed mode -------------------------------------------------------

struct WindowContext {
    const AircraftState* mover;
    const AircraftState* intruder;
    ControlArea area;
    double t_start;
    TimeInterval intruder_transit;
};

TimeInterval copresence(const WindowContext& ctx, const AircraftState& shifted) {
    TimeInterval w = intersect(transit_window(shifted, ctx.area), ctx.intruder_transit);
    return intersect(w, TimeInterval::from(ctx.t_start));
}

// Window-clamped separation; +inf when the two are never co-present.
double windowed_separation(const WindowContext& ctx, double x) {
    const AircraftState shifted = with_offset(*ctx.mover, x);
    const TimeInterval w = copresence(ctx, shifted);
    auto s = min_separation(shifted, *ctx.intruder, w);
    return s ? s->distance : kInf;
}

// True when, for every offset in [lo, hi], the unbounded closest approach
// falls inside the co-presence window, so the window cannot bind and the
// analytic interval is already exact. Uses the fact that the closest-approach
// time is affine in x while the window start/end are convex/concave in x, so
// checking the two endpoints covers the whole interval.
bool window_never_binds(const WindowContext& ctx, const Relative& r, double lo, double hi) {
    if (r.v2 == 0.0) return false;
    for (double x : {lo, hi}) {
        const AircraftState shifted = with_offset(*ctx.mover, x);
        const TimeInterval w = copresence(ctx, shifted);
        if (w.is_empty()) return false;
        const double t_star = r.t_start - (r.a + r.b * x) / r.v2;
        if (t_star < r.t_start || t_star < w.t_start || t_star > w.t_end) return false;
    }
    return true;
}

double bisect_threshold(const WindowContext& ctx, double sep, double x_free, double x_conflict) {
    // Invariant: windowed_separation(x_free) >= sep > windowed_separation(x_conflict).
    while (std::abs(x_conflict - x_free) > kBisectTol) {
        const double mid = 0.5 * (x_free + x_conflict);
        if (windowed_separation(ctx, mid) < sep) {
            x_conflict = mid;
        } else {
            x_free = mid;
        }
    }
    return x_conflict;
}

IntervalSet refine_windowed(const WindowContext& ctx, const Relative& r,
                            const IntervalSet& analytic, double sep) {
    // Offsets that keep the shifted trajectory clear of the circle cannot
    // conflict; clamp infinite or far endpoints to this physical range.
    const double c_lat = (ctx.mover->nominal_entry - ctx.area.center).dot(r.u);
    const double x_lo_cap = -c_lat - ctx.area.radius;
    const double x_hi_cap = -c_lat + ctx.area.radius;

    IntervalSet out;
    for (const auto& iv : analytic.intervals()) {
        double lo = std::max(iv.lo, x_lo_cap);
        double hi = std::min(iv.hi, x_hi_cap);
        if (!(lo < hi)) continue;

        if (window_never_binds(ctx, r, lo, hi)) {
            out.add(lo, hi);
            continue;
        }

        // Sample, then bisect the edges of each run of conflicting samples.
        const double step = (hi - lo) / kRefineSamples;
        bool prev_conflict = false;
        double run_start = 0.0;
        double prev_x = lo;
        for (int k = 0; k <= kRefineSamples; ++k) {
            const double x = (k == kRefineSamples) ? hi : lo + k * step;
            const bool conflict = windowed_separation(ctx, x) < sep;
            if (conflict && !prev_conflict) {
                run_start = (k == 0) ? lo : bisect_threshold(ctx, sep, prev_x, x);
            } else if (!conflict && prev_conflict) {
                out.add(run_start, bisect_threshold(ctx, sep, x, prev_x));
            }
            prev_conflict = conflict;
            prev_x = x;
        }
        if (prev_conflict) out.add(run_start, hi);
    }
    out.normalize();
    return out;
}

}  // namespace

ForbiddenSet forbidden_interval(const AircraftState& mover,
                                const AircraftState& intruder,
                                double sep,
                                const Horizon& horizon) {
    if (!(sep > 0.0)) throw std::invalid_argument("forbidden_interval: sep must be > 0");

    const Relative r = relative_geometry(mover, intruder);
    IntervalSet analytic = analytic_forbidden(r, sep);
    if (horizon.mode == HorizonMode::Unbounded || analytic.empty()) {
        return analytic;
    }

    WindowContext ctx{&mover, &intruder, horizon.area, r.t_start,
                      transit_window(intruder, horizon.area)};
    if (ctx.intruder_transit.is_empty()) return {};
    return refine_windowed(ctx, r, analytic, sep);
}

ForbiddenSet forbidden_set(const AircraftState& mover,
                           std::span<const AircraftState> intruders,
                           double sep,
                           const Horizon& horizon) {
    ForbiddenSet all;
    for (const AircraftState& intruder : intruders) {
        all.add(forbidden_interval(mover, intruder, sep, horizon));
    }
    all.normalize();
    return all;
}

ResolvedManeuver optimal_offset(const ForbiddenSet& f, double max_offset) {
    if (!(max_offset > 0.0)) throw std::invalid_argument("optimal_offset: max_offset must be > 0");

    ResolvedManeuver m;
    auto covering = f.covering(0.0);
    if (!covering) return m;  // staying on the nominal line is conflict-free

    // Open intervals: both endpoints of the covering interval are themselves
    // conflict-free, and every offset of smaller magnitude is covered.
    const double left = covering->lo;
    const double right = covering->hi;
    const bool right_ok = std::isfinite(right) && right <= max_offset;
    const bool left_ok = std::isfinite(left) && -left <= max_offset;

    if (right_ok && (!left_ok || right <= -left)) {
        m.offset = right;  // ties toward the mover's right
    } else if (left_ok) {
        m.offset = left;
    } else {
        throw InfeasibleError(-1, "no conflict-free offset within max_offset");
    }
    return m;
}

double offset_to_heading(double d, double D) {
    if (!(D > 0.0)) throw std::invalid_argument("offset_to_heading: D must be > 0");
    return std::atan(d / D);
}

ResolvedManeuver resolve(const AircraftState& mover,
                         std::span<const AircraftState> snapshot,
                         const ResolveConfig& config) {
    std::vector<ForbiddenSet> per_intruder;
    per_intruder.reserve(snapshot.size());
    ForbiddenSet all;
    for (const AircraftState& intruder : snapshot) {
        per_intruder.push_back(forbidden_interval(mover, intruder, config.sep, config.horizon));
        all.add(per_intruder.back());
    }
    all.normalize();

    ResolvedManeuver m;
    try {
        m = optimal_offset(all, config.max_offset);
    } catch (const InfeasibleError&) {
        throw InfeasibleError(mover.id, "aircraft " + std::to_string(mover.id) +
                                            ": no conflict-free offset within max_offset");
    }
    m.intruders_considered = static_cast<int>(snapshot.size());

    if (m.offset != 0.0) {
        // The selected endpoint originates from some intruder's own interval.
        double best = 1e-6;
        for (std::size_t i = 0; i < per_intruder.size(); ++i) {
            for (const auto& iv : per_intruder[i].intervals()) {
                for (double e : {iv.lo, iv.hi}) {
                    const double gap = std::abs(e - m.offset);
                    if (gap < best) {
                        best = gap;
                        m.binding_intruder = snapshot[i].id;
                    }
                }
            }
        }
    }
    return m;
}

}  // namespace cfs
