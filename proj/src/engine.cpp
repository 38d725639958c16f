#include "cfs/engine.hpp"

#include <algorithm>

namespace cfs {

namespace {

AircraftState nominal_state(const ScenarioSpec& spec, const AircraftEntry& e, int id) {
    AircraftState s;
    s.id = id;
    s.flow = e.flow;
    s.pos0 = e.nominal_entry;
    s.vel = e.vel;
    s.ref_time = e.entry_time;
    s.nominal_entry = e.nominal_entry;
    s.offset = 0.0;
    s.start_position = e.start_position;
    return s;
}

double committed_exit(const AircraftState& s, const ControlArea& area) {
    const TimeInterval w = transit_window(s, area);
    return w.is_empty() ? s.ref_time : w.t_end;
}

}  // namespace

SimulationTrace run(const ScenarioSpec& spec, const EngineConfig& config) {
    SimulationTrace trace;
    trace.spec = spec;
    trace.config = config;

    const std::vector<AircraftEntry> entries = make_scenario(spec);
    trace.records.reserve(entries.size());

    const ResolveConfig rc{spec.sep, Horizon{config.horizon, spec.area}, config.max_offset};

    struct Active {
        AircraftState state;
        double exit_time;
    };
    std::vector<Active> active;
    std::vector<AircraftState> snapshot;

    int next_id = 0;
    for (const AircraftEntry& e : entries) {
        const double t = e.entry_time;

        // Present means entry_time <= t < exit time.
        std::erase_if(active, [t](const Active& a) { return a.exit_time <= t; });

        snapshot.clear();
        for (const Active& a : active) snapshot.push_back(a.state);

        const AircraftState mover = nominal_state(spec, e, next_id++);
        ResolvedManeuver m;
        try {
            m = resolve(mover, snapshot, rc);
        } catch (const InfeasibleError& err) {
            trace.instability = Instability{mover.id, err.what()};
            return trace;
        }

        const AircraftState committed = with_offset(mover, m.offset);

        AircraftRecord rec;
        rec.id = mover.id;
        rec.flow = mover.flow;
        rec.entry_time = t;
        rec.start_position = mover.start_position;
        rec.offset = m.offset;
        rec.exit_lateral = mover.start_position + m.offset;
        rec.intruder_count = m.intruders_considered;
        rec.binding_intruder = m.binding_intruder;
        trace.records.push_back(rec);

        active.push_back({committed, committed_exit(committed, spec.area)});
    }
    return trace;
}

AircraftState state_from_record(const ScenarioSpec& spec, const AircraftRecord& rec) {
    const FlowFrame frame = flow_frame(spec, rec.flow);
    AircraftState s;
    s.id = rec.id;
    s.flow = rec.flow;
    s.vel = frame.vel;
    s.ref_time = rec.entry_time;
    s.nominal_entry = frame.gate_center + rec.start_position * frame.lateral;
    s.start_position = rec.start_position;
    return with_offset(s, rec.offset);
}

double exit_time_of(const ScenarioSpec& spec, const AircraftRecord& rec) {
    const AircraftState s = state_from_record(spec, rec);
    return committed_exit(s, spec.area);
}

std::vector<AircraftState> snapshot_at(const SimulationTrace& trace, double t) {
    std::vector<AircraftState> out;
    for (const AircraftRecord& rec : trace.records) {
        if (rec.entry_time > t) break;  // records are entry-ordered
        if (t < exit_time_of(trace.spec, rec)) {
            out.push_back(state_from_record(trace.spec, rec));
        }
    }
    return out;
}

}  // namespace cfs
