#include "cfs/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace cfs {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.5707963267948966;

// Distinct substream salts per flow (hex digits of pi, fixed constants).
constexpr std::uint64_t kFlowSalt[2] = {0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL};
}  // namespace

const char* kind_name(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::Orthogonal: return "orthogonal";
        case ScenarioKind::Angle: return "angle";
        case ScenarioKind::PseudoRandom: return "pseudo_random";
    }
    return "?";
}

ScenarioKind kind_from_name(const std::string& name) {
    if (name == "orthogonal") return ScenarioKind::Orthogonal;
    if (name == "angle") return ScenarioKind::Angle;
    if (name == "pseudo_random") return ScenarioKind::PseudoRandom;
    throw ScenarioError("kind", "unknown scenario kind '" + name + "'");
}

void ScenarioSpec::validate() const {
    if (!(sep > 0.0)) throw ScenarioError("sep", "sep must be > 0");
    if (!(area.radius > 0.0)) throw ScenarioError("radius", "radius must be > 0");
    if (!(L0 >= 0.0) || L0 >= area.radius)
        throw ScenarioError("L0", "L0 must satisfy 0 <= L0 < radius");
    if (!(theta > 0.0) || !(theta < 2.0 * kPi))
        throw ScenarioError("theta", "theta must lie strictly between 0 and 360 degrees");
    if (kind == ScenarioKind::Orthogonal && theta != kHalfPi)
        throw ScenarioError("theta", "orthogonal geometry fixes theta at 90 degrees");
    if (kind != ScenarioKind::PseudoRandom && L0 != 0.0)
        throw ScenarioError("L0", "zero-thickness geometry requires L0 = 0");
    if (!(speed > 0.0)) throw ScenarioError("speed", "speed must be > 0");
    if (!(arrival_period > 0.0) || arrival_period * speed < sep)
        throw ScenarioError("arrival_period",
                            "arrival_period * speed must be >= sep to keep same-flow spacing safe");
    if (n_aircraft < 0) throw ScenarioError("n_aircraft", "n_aircraft must be >= 0");
    if (!std::isfinite(phase)) throw ScenarioError("phase", "phase must be finite");
    if (gate_distribution != "uniform")
        throw ScenarioError("gate_distribution", "only 'uniform' gate draws are supported");
}

FlowFrame flow_frame(const ScenarioSpec& spec, FlowId flow) {
    FlowFrame f;
    if (flow == FlowId::A) {
        f.heading = {0.0, -1.0};  // southbound
    } else {
        // Flow A's heading rotated counter-clockwise by theta.
        f.heading = {std::sin(spec.theta), -std::cos(spec.theta)};
    }
    f.vel = f.heading * spec.speed;
    f.lateral = lateral_unit(f.vel);
    f.gate_distance = std::sqrt(spec.area.radius * spec.area.radius - spec.L0 * spec.L0);
    f.gate_center = spec.area.center - f.heading * f.gate_distance;
    return f;
}

std::uint64_t flow_stream_seed(std::uint64_t seed, FlowId flow) {
    return seed ^ kFlowSalt[static_cast<int>(flow)];
}

std::vector<AircraftEntry> make_scenario(const ScenarioSpec& spec) {
    spec.validate();

    std::vector<AircraftEntry> entries;
    entries.reserve(2 * static_cast<std::size_t>(spec.n_aircraft));

    for (FlowId flow : {FlowId::A, FlowId::B}) {
        const FlowFrame frame = flow_frame(spec, flow);
        const double t0 = (flow == FlowId::B) ? spec.phase : 0.0;
        SplitMix64 rng(flow_stream_seed(spec.seed, flow));

        for (int i = 0; i < spec.n_aircraft; ++i) {
            AircraftEntry e;
            e.entry_time = t0 + i * spec.arrival_period;
            e.flow = flow;
            e.vel = frame.vel;
            if (spec.kind == ScenarioKind::PseudoRandom) {
                e.start_position = -spec.L0 + 2.0 * spec.L0 * rng.next_unit();
            } else {
                e.start_position = 0.0;
            }
            e.nominal_entry = frame.gate_center + e.start_position * frame.lateral;
            entries.push_back(e);
        }
    }

    std::stable_sort(entries.begin(), entries.end(),
                     [](const AircraftEntry& a, const AircraftEntry& b) {
                         if (a.entry_time != b.entry_time) return a.entry_time < b.entry_time;
                         return static_cast<int>(a.flow) < static_cast<int>(b.flow);
                     });
    return entries;
}

double worst_case_phase(double gate_dist_a, double gate_dist_b, double speed) {
    return (gate_dist_a - gate_dist_b) / speed;
}

double worst_case_phase(const ScenarioSpec& spec) {
    if (spec.kind == ScenarioKind::PseudoRandom)
        throw ScenarioError("kind",
                            "worst_case_phase is undefined for pseudo-random flows; sweep phase instead");
    spec.validate();
    // Both centerlines cross at the area center.
    const FlowFrame a = flow_frame(spec, FlowId::A);
    const FlowFrame b = flow_frame(spec, FlowId::B);
    return worst_case_phase((spec.area.center - a.gate_center).norm(),
                            (spec.area.center - b.gate_center).norm(), spec.speed);
}

}  // namespace cfs
