#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "railloc/types.hpp"

namespace railloc::gnss {

/// One satellite's raw epoch data. Satellite position, velocity and internal
/// clock offset are supplied by the producer (simulator or observation file);
/// no ephemeris evaluation happens here.
struct SatelliteObservation {
    std::string sat_id;
    double pseudorange_m = 0.0;
    /// Range-rate convention: positive when receiver and satellite close in.
    std::optional<double> doppler_mps;
    double cn0_dbhz = 0.0;
    Vec3 sat_position = Vec3::Zero();    // ECEF m
    Vec3 sat_velocity = Vec3::Zero();    // ECEF m/s
    double sat_clock_offset_s = 0.0;     // satellite internal clock offset
    std::optional<double> second_freq_pseudorange_m;
    std::optional<std::pair<double, double>> freq_pair_hz;
};

/// Throws ValidationError on out-of-contract values (non-positive
/// pseudorange, satellite radius outside the MEO/GEO band, CN0 outside
/// [0, 60] dB-Hz, non-finite entries).
void validate(const SatelliteObservation& obs);

/// Observation after deterministic corrections, with the per-satellite
/// weighting and geometry quantities the filter consumes.
struct CorrectedObservation {
    std::string sat_id;
    double corrected_pseudorange_m = 0.0;
    std::optional<double> range_rate_mps;
    double variance_m2 = 0.0;
    double elevation_rad = 0.0;
    Vec3 line_of_sight = Vec3::Zero();   // unit, receiver minus satellite
    Vec3 sat_position = Vec3::Zero();
    Vec3 sat_velocity = Vec3::Zero();
};

/// Unit vector (receiver - satellite) / ||receiver - satellite||.
Vec3 line_of_sight(const Vec3& receiver, const Vec3& satellite);

/// Relativistic satellite clock error -2 (p . v) / c^2, in seconds.
double relativistic_clock_correction(const Vec3& sat_position, const Vec3& sat_velocity);

/// Ionosphere-free combination (f1^2 rho1 - f2^2 rho2) / (f1^2 - f2^2).
double iono_free_pseudorange(double rho1_m, double rho2_m, double f1_hz, double f2_hz);

/// Predicted corrected pseudorange ||p_r - p_sat|| + c*dt_r.
double pseudorange_predict(const Vec8& state, const Vec3& sat_position);

/// Row [L_x L_y L_z 0 0 0 1 0] with L the line-of-sight vector.
RowVec8 pseudorange_jacobian_row(const Vec8& state, const Vec3& sat_position);

/// Predicted range rate (v_sat - v_r) . L + c*dt_dot_r.
double doppler_predict(const Vec8& state, const Vec3& sat_position, const Vec3& sat_velocity);

/// Row [0 0 0 -L_x -L_y -L_z 0 1]. The velocity sensitivity of the
/// range-rate predictor is -L; texts that define the line of sight with
/// the opposite sign print +L for the same quantity.
RowVec8 doppler_jacobian_row(const Vec8& state, const Vec3& sat_position);

/// CN0/elevation pseudorange variance in m^2. Elevation must lie in
/// (0, pi/2]; below-horizon satellites raise BelowHorizonError.
double measurement_variance(double cn0_dbhz, double elevation_rad);

/// Elevation of the satellite above the local tangent plane at the
/// receiver, in radians.
double elevation_angle(const Vec3& receiver, const Vec3& satellite);

/// Applies satellite clock, relativistic and (when a second frequency is
/// present) ionosphere-free corrections, and evaluates elevation, variance
/// and line of sight at the given receiver position.
CorrectedObservation correct_observation(const SatelliteObservation& obs, const Vec3& receiver_position);

std::vector<CorrectedObservation> correct_epoch(const std::vector<SatelliteObservation>& observations,
                                                const Vec3& receiver_position);

struct SingleEpochFix {
    Vec3 position = Vec3::Zero();
    double clock_bias_m = 0.0;
    int iterations = 0;
};

/// Unweighted Gauss-Newton position/clock solution from one epoch of
/// pseudoranges. Needs at least four satellites.
SingleEpochFix single_epoch_least_squares(const std::vector<SatelliteObservation>& observations);

}  // namespace railloc::gnss
