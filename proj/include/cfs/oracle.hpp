#pragma once

#include <optional>
#include <span>

#include "cfs/resolver.hpp"

// Brute-force cross-validation of the resolver. Everything here works by
// direct sampling of trajectories (positions, distances, inside-the-circle
// tests); it deliberately shares none of the closed-form machinery it checks
// (offset quadratics, interval algebra, analytic windows).
namespace cfs::oracle {

struct SampledMin {
    double distance;
    double t;
};

/// Minimum distance between the two trajectories over [t_lo, t_hi], found by
/// a fixed-step scan refined by ternary search around the best sample.
SampledMin sampled_min_separation(const AircraftState& a, const AircraftState& b, double t_lo,
                                  double t_hi, double dt);

/// Scan end past which the distance over [t_lo, +inf) can only grow.
double scan_horizon(const AircraftState& a, const AircraftState& b, double t_lo);

/// Minimum distance restricted to times when both aircraft are inside the
/// area and t >= t_start; +inf when they are never co-present.
double copresent_min_separation(const AircraftState& a, const AircraftState& b, double t_start,
                                const ControlArea& area, double dt);

struct GridConfig {
    double x_step = 1e-3;    // nm, offset grid
    double dt_coarse = 0.1;  // minutes, first-pass conflict scan
    double dt_fine = 1e-3;   // minutes, authoritative feast-or-famine scan
};

/// Least-magnitude conflict-free offset on the grid {0, +-k*x_step}, scanned
/// outward from zero with ties toward positive; nullopt when every grid
/// offset within max_offset conflicts. Feasibility of each offset is decided
/// purely by time sampling of the shifted trajectories.
std::optional<double> optimal_offset_grid(const AircraftState& mover,
                                          std::span<const AircraftState> intruders, double sep,
                                          const Horizon& horizon, double max_offset,
                                          const GridConfig& cfg = {});

/// True when the shifted mover stays at least `sep` from every intruder
/// (time-sampled, strict conflicts only).
bool offset_feasible(const AircraftState& mover, std::span<const AircraftState> intruders,
                     double x, double sep, const Horizon& horizon, const GridConfig& cfg = {});

}  // namespace cfs::oracle
