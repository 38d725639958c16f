#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfs/kinematics.hpp"

namespace cfs {

enum class ScenarioKind { Orthogonal, Angle, PseudoRandom };

const char* kind_name(ScenarioKind k);
ScenarioKind kind_from_name(const std::string& name);  // throws ScenarioError

/// A scenario invariant does not hold; `field()` names the offending field.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Two crossing flows through a circular control area. Flow A is fixed
/// southbound; flow B's heading is flow A's rotated counter-clockwise by
/// theta. Entry gates are chords of the area boundary perpendicular to each
/// flow's heading, of half-width L0, centered on the flow centerline (which
/// passes through the area center).
struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::Orthogonal;
    double theta = 1.5707963267948966;  // radians, encounter angle
    double L0 = 0.0;                    // nm, gate half-width
    double sep = 5.0;                   // nm, minimum separation d
    ControlArea area{};
    double speed = 8.0;            // nm per minute, shared by all aircraft
    double arrival_period = 1.25;  // minutes between entries within one flow
    double phase = 0.0;            // minutes, flow B's schedule shift vs flow A
    std::uint64_t seed = 42;
    int n_aircraft = 1000;  // per flow
    std::string gate_distribution = "uniform";

    /// Throws ScenarioError naming the first violated field.
    void validate() const;
};

/// One scheduled control-area entry, before any maneuver.
struct AircraftEntry {
    double entry_time = 0.0;
    FlowId flow = FlowId::A;
    Vec2 nominal_entry;
    Vec2 vel;
    double start_position = 0.0;  // signed gate draw, positive toward the flow's right
};

/// Geometry of one flow: heading, velocity, right-hand lateral unit, and the
/// gate chord center (gate_distance upstream of the area center).
struct FlowFrame {
    Vec2 heading;
    Vec2 vel;
    Vec2 lateral;
    Vec2 gate_center;
    double gate_distance;
};

FlowFrame flow_frame(const ScenarioSpec& spec, FlowId flow);

/// Deterministic, time-ordered stream of 2 * n_aircraft entries. Ties between
/// flows are ordered A before B. Pseudo-random gate draws come from a
/// per-flow SplitMix64 substream, fully determined by (seed, flow, index).
std::vector<AircraftEntry> make_scenario(const ScenarioSpec& spec);

/// Phase that makes paired entrants reach the flow-centerline intersection
/// simultaneously (the tightest encounter). Zero-thickness kinds only.
double worst_case_phase(const ScenarioSpec& spec);

/// Travel-time difference form: (gate_dist_a - gate_dist_b) / speed.
double worst_case_phase(double gate_dist_a, double gate_dist_b, double speed);

/// SplitMix64: 64-bit mixer-based generator (Steele, Lea & Flood's splittable
/// stream). Recorded in output metadata so runs are reproducible.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double next_unit() { return (next() >> 11) * 0x1.0p-53; }
};

inline constexpr const char* kGeneratorName = "splitmix64";

/// Substream seed for one flow's gate draws.
std::uint64_t flow_stream_seed(std::uint64_t seed, FlowId flow);

}  // namespace cfs
