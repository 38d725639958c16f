#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "cfs/interval_set.hpp"
#include "cfs/kinematics.hpp"

namespace cfs {

/// Open set of lateral offsets that would put the mover in conflict.
using ForbiddenSet = IntervalSet;

enum class HorizonMode {
    Windowed,   // conflicts evaluated while both aircraft are inside the area
    Unbounded,  // conflicts evaluated over [max(entry times), +inf)
};

struct Horizon {
    HorizonMode mode = HorizonMode::Windowed;
    ControlArea area{};
};

struct ResolvedManeuver {
    double offset = 0.0;  // signed nm, positive = mover's right
    int intruders_considered = 0;
    int binding_intruder = -1;  // id whose interval endpoint was selected, -1 if none
};

/// No conflict-free offset exists within the configured cap: the scenario is
/// unstable under that cap.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(int aircraft_id, const std::string& what)
        : std::runtime_error(what), aircraft_id_(aircraft_id) {}
    int aircraft_id() const { return aircraft_id_; }

private:
    int aircraft_id_;
};

struct ResolveConfig {
    double sep = 5.0;
    Horizon horizon{};
    double max_offset = 100.0;
};

/// Offsets x for which the shifted mover comes within `sep` of the intruder
/// over the co-presence window. The mover must be in its nominal entry state
/// (offset 0). At most two open intervals.
///
/// The unbounded-mode result is fully analytic: the start-distance condition
/// and the closest-approach condition are both quadratic in x. Windowed mode
/// starts from that result and refines interval endpoints by bisection on the
/// window-clamped separation (tolerance 1e-9 nm) wherever the window can bind.
ForbiddenSet forbidden_interval(const AircraftState& mover,
                                const AircraftState& intruder,
                                double sep,
                                const Horizon& horizon);

/// Normalized union of forbidden_interval over all intruders.
ForbiddenSet forbidden_set(const AircraftState& mover,
                           std::span<const AircraftState> intruders,
                           double sep,
                           const Horizon& horizon);

/// Least-displacement conflict-free offset: 0 when 0 is free, otherwise the
/// finite endpoint of the covering interval with minimum magnitude (ties
/// toward positive, the mover's right). Throws InfeasibleError when no
/// endpoint within max_offset is available.
ResolvedManeuver optimal_offset(const ForbiddenSet& f, double max_offset);

/// Heading-change amplitude equivalent to lateral displacement d at distance
/// to conflict D: arctan(d / D). Requires D > 0.
double offset_to_heading(double d, double D);

/// Full decentralized rule: forbidden_set over the snapshot, then the
/// least-displacement selection, with the binding intruder recorded.
ResolvedManeuver resolve(const AircraftState& mover,
                         std::span<const AircraftState> snapshot,
                         const ResolveConfig& config);

}  // namespace cfs
