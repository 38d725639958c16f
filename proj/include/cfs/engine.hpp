#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfs/resolver.hpp"
#include "cfs/scenario.hpp"

namespace cfs {

struct EngineConfig {
    HorizonMode horizon = HorizonMode::Windowed;
    double max_offset = 100.0;  // nm, cap on a single maneuver
};

/// Outcome of one aircraft's entry and (single, permanent) maneuver.
/// exit_lateral = start_position + offset: the post-maneuver flight is a
/// straight line parallel to the flow centerline.
struct AircraftRecord {
    int id = -1;
    FlowId flow = FlowId::A;
    double entry_time = 0.0;
    double start_position = 0.0;
    double offset = 0.0;
    double exit_lateral = 0.0;
    int intruder_count = 0;
    int binding_intruder = -1;
};

struct Instability {
    int aircraft_id = -1;
    std::string reason;
};

struct SimulationTrace {
    ScenarioSpec spec;
    EngineConfig config;
    std::vector<AircraftRecord> records;  // ordered by entry_time
    std::optional<Instability> instability;  // set when the run aborted

    bool completed() const { return !instability.has_value(); }
};

/// Event-ordered simulation: each entering aircraft resolves once against the
/// committed trajectories of all aircraft currently inside the area, then its
/// own trajectory is fixed. Identical spec + config give a bit-identical
/// trace. On resolver infeasibility the trace is returned partial with the
/// instability diagnosis set.
SimulationTrace run(const ScenarioSpec& spec, const EngineConfig& config = {});

/// Post-maneuver state reconstructed from a record and the spec geometry.
AircraftState state_from_record(const ScenarioSpec& spec, const AircraftRecord& rec);

/// Time the committed trajectory leaves the control area (= entry_time when
/// the shifted line misses the circle entirely).
double exit_time_of(const ScenarioSpec& spec, const AircraftRecord& rec);

/// Aircraft present at time t: entry_time <= t < exit time, post-maneuver.
std::vector<AircraftState> snapshot_at(const SimulationTrace& trace, double t);

}  // namespace cfs
