#include "cfs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cfs {

namespace {
constexpr double kTol = 1e-6;       // nm, slack on bound and safety checks
constexpr double kSqrt2 = 1.4142135623730951;
constexpr std::size_t kMaxNotes = 20;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void note(BoundReport& r, std::string line) {
    if (r.notes.size() < kMaxNotes) r.notes.push_back(std::move(line));
}
}  // namespace

double max_deviation_bound(double theta, double sep) {
    const double s = std::abs(std::sin(0.5 * theta));
    if (s < 1e-12)
        throw std::invalid_argument("max_deviation_bound: undefined for parallel flows");
    return sep / s;
}

double right_exit_bound(double L0, double sep) { return L0 + kSqrt2 * sep; }

double left_exit_bound(double L0, double sep) { return right_exit_bound(L0, sep) + 2.0 * L0; }

double aircraft_deviation_cap(double right_bound, double start_position) {
    return right_bound - start_position;
}

bool BoundReport::clean() const {
    if (!completed || cap_violations > 0 || safety_violations > 0) return false;
    for (const FlowStats* s : {&flow_a, &flow_b}) {
        if (s->max_right_exit > right_bound + kTol) return false;
        if (s->max_left_exit > left_bound + kTol) return false;
    }
    return true;
}

BoundReport verify_trace(const SimulationTrace& trace) {
    const ScenarioSpec& spec = trace.spec;
    BoundReport r;
    r.kind = spec.kind;
    r.theta = spec.theta;
    r.L0 = spec.L0;
    r.sep = spec.sep;
    r.completed = trace.completed();

    if (spec.L0 == 0.0) {
        // Zero-thickness flows: the angle-based per-maneuver bound governs
        // both exit directions.
        r.maneuver_bound = max_deviation_bound(spec.theta, spec.sep);
        r.right_bound = *r.maneuver_bound;
        r.left_bound = *r.maneuver_bound;
    } else {
        r.right_bound = right_exit_bound(spec.L0, spec.sep);
        r.left_bound = left_exit_bound(spec.L0, spec.sep);
    }

    // Per-aircraft stats and displacement caps.
    for (const AircraftRecord& rec : trace.records) {
        FlowStats& s = (rec.flow == FlowId::A) ? r.flow_a : r.flow_b;
        ++s.count;
        s.max_abs_offset = std::max(s.max_abs_offset, std::abs(rec.offset));
        if (rec.exit_lateral > 0.0) s.max_right_exit = std::max(s.max_right_exit, rec.exit_lateral);
        if (rec.exit_lateral < 0.0) s.max_left_exit = std::max(s.max_left_exit, -rec.exit_lateral);
        s.max_intruders = std::max(s.max_intruders, rec.intruder_count);

        const double cap = aircraft_deviation_cap(r.right_bound, rec.start_position);
        if (std::abs(rec.offset) > cap + kTol) {
            ++r.cap_violations;
            note(r, "aircraft " + std::to_string(rec.id) + ": |offset| " + fmt(std::abs(rec.offset)) +
                        " exceeds cap " + fmt(cap));
        }
    }

    // Exact pairwise safety over each pair's co-presence window. Records are
    // entry-ordered; an aircraft only overlaps neighbours entering before it
    // leaves, so the scan is near-linear.
    const std::size_t n = trace.records.size();
    std::vector<AircraftState> states(n);
    std::vector<TimeInterval> transits(n);
    std::vector<double> exits(n);
    for (std::size_t i = 0; i < n; ++i) {
        states[i] = state_from_record(spec, trace.records[i]);
        transits[i] = transit_window(states[i], spec.area);
        exits[i] = transits[i].is_empty() ? trace.records[i].entry_time : transits[i].t_end;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n && trace.records[j].entry_time < exits[i]; ++j) {
            TimeInterval w = intersect(transits[i], transits[j]);
            w = intersect(w, TimeInterval::from(trace.records[j].entry_time));
            auto sep_ij = min_separation(states[i], states[j], w);
            if (sep_ij && sep_ij->distance < spec.sep - kTol) {
                ++r.safety_violations;
                note(r, "aircraft " + std::to_string(trace.records[i].id) + " and " +
                            std::to_string(trace.records[j].id) + ": separation " +
                            fmt(sep_ij->distance) + " below " + fmt(spec.sep));
            }
        }
    }
    return r;
}

Histogram exit_distribution(const SimulationTrace& trace, FlowId flow, double bin_width,
                            bool use_start_positions) {
    if (!(bin_width > 0.0)) throw std::invalid_argument("exit_distribution: bin_width must be > 0");

    std::vector<double> values;
    for (const AircraftRecord& rec : trace.records) {
        if (rec.flow != flow) continue;
        values.push_back(use_start_positions ? rec.start_position : rec.exit_lateral);
    }

    double lo = -left_exit_bound(trace.spec.L0, trace.spec.sep);
    double hi = right_exit_bound(trace.spec.L0, trace.spec.sep);
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    lo = std::floor(lo / bin_width) * bin_width;
    hi = std::ceil(hi / bin_width) * bin_width;
    if (!(hi > lo)) hi = lo + bin_width;

    Histogram h;
    h.lo = lo;
    h.bin_width = bin_width;
    const auto nbins = static_cast<std::size_t>(std::lround((hi - lo) / bin_width));
    h.counts.assign(std::max<std::size_t>(nbins, 1), 0);
    for (double v : values) {
        auto idx = static_cast<long>(std::floor((v - lo) / bin_width));
        idx = std::clamp<long>(idx, 0, static_cast<long>(h.counts.size()) - 1);
        ++h.counts[static_cast<std::size_t>(idx)];
        ++h.total;
    }
    return h;
}

namespace {
void flow_block(std::ostringstream& os, const char* name, const FlowStats& s, int indent) {
    const std::string pad(indent, ' ');
    os << pad << name << ":\n";
    os << pad << "  aircraft: " << s.count << "\n";
    os << pad << "  max_abs_offset: " << fmt(s.max_abs_offset) << "\n";
    os << pad << "  max_right_exit: " << fmt(s.max_right_exit) << "\n";
    os << pad << "  max_left_exit: " << fmt(s.max_left_exit) << "\n";
    os << pad << "  max_intruders: " << s.max_intruders << "\n";
}
}  // namespace

std::string format_report(const BoundReport& r) {
    std::ostringstream os;
    os << "scenario:\n";
    os << "  kind: " << kind_name(r.kind) << "\n";
    os << "  theta_deg: " << fmt(r.theta * 180.0 / 3.14159265358979323846) << "\n";
    os << "  L0: " << fmt(r.L0) << "\n";
    os << "  sep: " << fmt(r.sep) << "\n";
    os << "bounds:\n";
    os << "  maneuver: " << (r.maneuver_bound ? fmt(*r.maneuver_bound) : std::string("none"))
       << "\n";
    os << "  right_exit: " << fmt(r.right_bound) << "\n";
    os << "  left_exit: " << fmt(r.left_bound) << "\n";
    os << "measured:\n";
    flow_block(os, "flow_A", r.flow_a, 2);
    flow_block(os, "flow_B", r.flow_b, 2);
    os << "violations:\n";
    os << "  per_aircraft_cap: " << r.cap_violations << "\n";
    os << "  safety: " << r.safety_violations << "\n";
    os << "completed: " << (r.completed ? "true" : "false") << "\n";
    os << "clean: " << (r.clean() ? "true" : "false") << "\n";
    for (const std::string& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string report_csv(const BoundReport& r) {
    std::ostringstream os;
    os << "key,value\n";
    os << "kind," << kind_name(r.kind) << "\n";
    os << "theta," << fmt(r.theta) << "\n";
    os << "L0," << fmt(r.L0) << "\n";
    os << "sep," << fmt(r.sep) << "\n";
    os << "bound.maneuver," << (r.maneuver_bound ? fmt(*r.maneuver_bound) : std::string("none"))
       << "\n";
    os << "bound.right_exit," << fmt(r.right_bound) << "\n";
    os << "bound.left_exit," << fmt(r.left_bound) << "\n";
    for (FlowId f : {FlowId::A, FlowId::B}) {
        const FlowStats& s = r.flow(f);
        const std::string p = std::string("flow_") + flow_name(f) + ".";
        os << p << "aircraft," << s.count << "\n";
        os << p << "max_abs_offset," << fmt(s.max_abs_offset) << "\n";
        os << p << "max_right_exit," << fmt(s.max_right_exit) << "\n";
        os << p << "max_left_exit," << fmt(s.max_left_exit) << "\n";
        os << p << "max_intruders," << s.max_intruders << "\n";
    }
    os << "violations.per_aircraft_cap," << r.cap_violations << "\n";
    os << "violations.safety," << r.safety_violations << "\n";
    os << "completed," << (r.completed ? 1 : 0) << "\n";
    os << "clean," << (r.clean() ? 1 : 0) << "\n";
    return os.str();
}

}  // namespace cfs
