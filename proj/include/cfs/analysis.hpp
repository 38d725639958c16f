#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfs/engine.hpp"

namespace cfs {

/// Largest lateral deviation a single maneuver can require when two
/// zero-thickness flows cross at `theta`: sep / |sin(theta/2)|.
/// Throws for theta congruent to 0 mod 2*pi (parallel flows).
double max_deviation_bound(double theta, double sep);

/// Bound on exits toward the flow's right (west for the southbound flow) for
/// a flow of half-thickness L0: L0 + sqrt(2) * sep.
double right_exit_bound(double L0, double sep);

/// Bound on exit magnitude toward the flow's left (east for the southbound
/// flow): 3 * L0 + sqrt(2) * sep. Computed as right_exit_bound + 2 * L0 so
/// the gap between the two bounds is exactly 2 * L0 in floating point.
double left_exit_bound(double L0, double sep);

/// Per-aircraft symmetric displacement cap given its signed starting
/// position: right_bound - start_position.
double aircraft_deviation_cap(double right_bound, double start_position);

/// Per-flow measured extremes, in flow-local lateral coordinates
/// (positive = the flow's right).
struct FlowStats {
    long count = 0;
    double max_abs_offset = 0.0;
    double max_right_exit = 0.0;  // largest positive exit_lateral, 0 if none
    double max_left_exit = 0.0;   // magnitude of the most negative exit_lateral, 0 if none
    int max_intruders = 0;
};

/// Measured deviations and exit extremes of a trace against the analytic
/// bounds, plus per-aircraft cap checks and exact pairwise safety.
struct BoundReport {
    ScenarioKind kind = ScenarioKind::Orthogonal;
    double theta = 0.0;
    double L0 = 0.0;
    double sep = 0.0;

    std::optional<double> maneuver_bound;  // angle-based bound; unset for thick flows
    double right_bound = 0.0;
    double left_bound = 0.0;

    FlowStats flow_a;
    FlowStats flow_b;

    long cap_violations = 0;     // per-aircraft |offset| > cap
    long safety_violations = 0;  // pairs closer than sep inside the area
    bool completed = true;       // false when the trace aborted as infeasible

    std::vector<std::string> notes;  // one line per violation, capped

    const FlowStats& flow(FlowId f) const { return f == FlowId::A ? flow_a : flow_b; }

    /// No violations and every measured extreme within its bound.
    bool clean() const;
};

/// Recomputes pairwise minimum separations analytically over each pair's
/// co-presence window (no time sampling), checks per-aircraft caps, and
/// gathers exit extremes. Violations are reported, never thrown.
BoundReport verify_trace(const SimulationTrace& trace);

/// Uniform-width histogram; bin i covers [lo + i*w, lo + (i+1)*w).
struct Histogram {
    double lo = 0.0;
    double bin_width = 1.0;
    std::vector<long> counts;
    long total = 0;

    double edge(std::size_t i) const { return lo + static_cast<double>(i) * bin_width; }
    double center(std::size_t i) const { return lo + (static_cast<double>(i) + 0.5) * bin_width; }
};

/// Distribution of exit_lateral (or of start_position when use_start_positions
/// is set) for one flow. The bin range spans at least
/// [-left_exit_bound, +right_exit_bound], padded outward to whole bins and
/// widened to cover the data, so counts always sum to the flow total.
Histogram exit_distribution(const SimulationTrace& trace, FlowId flow, double bin_width,
                            bool use_start_positions);

/// Key: value document, nested by indentation.
std::string format_report(const BoundReport& r);

/// Flat machine-readable form, one "key,value" row per line.
std::string report_csv(const BoundReport& r);

}  // namespace cfs
