#include "railloc/gnss.hpp"

#include <cmath>
#include <numbers>

#include "railloc/errors.hpp"
#include "railloc/frames.hpp"

namespace railloc::gnss {

namespace {

// Empirical constants of the CN0/elevation weighting model.
constexpr double kCn0Anchor = 50.0;       // dB-Hz where the variance collapses to 1/sin^2(E)
constexpr double kCn0Worst = 10.0;        // dB-Hz anchor of the worst-case variance
constexpr double kVarianceAtWorst = 30.0; // m^2 at kCn0Worst and zenith
constexpr double kLogSlope = 40.0;        // dB-Hz per decade

double deterministic_pseudorange_m(const SatelliteObservation& obs) {
    double rho = obs.pseudorange_m;
    if (obs.second_freq_pseudorange_m && obs.freq_pair_hz) {
        rho = iono_free_pseudorange(rho, *obs.second_freq_pseudorange_m,
                                    obs.freq_pair_hz->first, obs.freq_pair_hz->second);
    }
    const double clock_s =
        obs.sat_clock_offset_s + relativistic_clock_correction(obs.sat_position, obs.sat_velocity);
    return rho + kSpeedOfLight * clock_s;
}

}  // namespace

void validate(const SatelliteObservation& obs) {
    if (!std::isfinite(obs.pseudorange_m) || obs.pseudorange_m <= 0.0) {
        throw ValidationError("satellite " + obs.sat_id + ": pseudorange must be positive");
    }
    const double radius = obs.sat_position.norm();
    if (!std::isfinite(radius) || radius < 2.0e7 || radius > 4.5e7) {
        throw ValidationError("satellite " + obs.sat_id + ": position outside the MEO/GEO radius band");
    }
    if (!std::isfinite(obs.cn0_dbhz) || obs.cn0_dbhz < 0.0 || obs.cn0_dbhz > 60.0) {
        throw ValidationError("satellite " + obs.sat_id + ": CN0 outside [0, 60] dB-Hz");
    }
    if (!obs.sat_velocity.allFinite() || !std::isfinite(obs.sat_clock_offset_s)) {
        throw ValidationError("satellite " + obs.sat_id + ": non-finite velocity or clock offset");
    }
    if (obs.doppler_mps && !std::isfinite(*obs.doppler_mps)) {
        throw ValidationError("satellite " + obs.sat_id + ": non-finite Doppler");
    }
}

Vec3 line_of_sight(const Vec3& receiver, const Vec3& satellite) {
    const Vec3 diff = receiver - satellite;
    const double norm = diff.norm();
    if (norm < 1e-6) {
        throw DegenerateGeometryError("line_of_sight: receiver and satellite coincide");
    }
    return diff / norm;
}

double relativistic_clock_correction(const Vec3& sat_position, const Vec3& sat_velocity) {
    return -2.0 * sat_position.dot(sat_velocity) / (kSpeedOfLight * kSpeedOfLight);
}

double iono_free_pseudorange(double rho1_m, double rho2_m, double f1_hz, double f2_hz) {
    if (f1_hz <= 0.0 || f2_hz <= 0.0 || f1_hz == f2_hz) {
        throw DegenerateFrequencyError("iono_free_pseudorange: frequencies must be positive and distinct");
    }
    const double f1_sq = f1_hz * f1_hz;
    const double f2_sq = f2_hz * f2_hz;
    return (f1_sq * rho1_m - f2_sq * rho2_m) / (f1_sq - f2_sq);
}

double pseudorange_predict(const Vec8& state, const Vec3& sat_position) {
    const Vec3 diff = state.segment<3>(kPosIndex) - sat_position;
    const double range = diff.norm();
    if (range < 1e-6) {
        throw DegenerateGeometryError("pseudorange_predict: receiver and satellite coincide");
    }
    return range + state(kClockBiasIndex);
}

RowVec8 pseudorange_jacobian_row(const Vec8& state, const Vec3& sat_position) {
    const Vec3 los = line_of_sight(state.segment<3>(kPosIndex), sat_position);
    RowVec8 row = RowVec8::Zero();
    row.segment<3>(kPosIndex) = los.transpose();
    row(kClockBiasIndex) = 1.0;
    return row;
}

double doppler_predict(const Vec8& state, const Vec3& sat_position, const Vec3& sat_velocity) {
    const Vec3 los = line_of_sight(state.segment<3>(kPosIndex), sat_position);
    const Vec3 rel_velocity = sat_velocity - state.segment<3>(kVelIndex);
    return rel_velocity.dot(los) + state(kClockDriftIndex);
}

RowVec8 doppler_jacobian_row(const Vec8& state, const Vec3& sat_position) {
    const Vec3 los = line_of_sight(state.segment<3>(kPosIndex), sat_position);
    RowVec8 row = RowVec8::Zero();
    row.segment<3>(kVelIndex) = -los.transpose();
    row(kClockDriftIndex) = 1.0;
    return row;
}

double measurement_variance(double cn0_dbhz, double elevation_rad) {
    if (!std::isfinite(cn0_dbhz)) {
        throw ContractViolation("measurement_variance: non-finite CN0");
    }
    if (!(elevation_rad > 0.0) || elevation_rad > std::numbers::pi / 2.0 + 1e-12) {
        throw BelowHorizonError("measurement_variance: elevation outside (0, pi/2]");
    }
    const double front = std::pow(10.0, -(cn0_dbhz - kCn0Anchor) / kLogSlope);
    const double bracket =
        (kVarianceAtWorst / std::pow(10.0, -(kCn0Worst - kCn0Anchor) / kLogSlope) - 1.0) *
            (cn0_dbhz - kCn0Anchor) / (kCn0Worst - kCn0Anchor) +
        1.0;
    const double sin_el = std::sin(elevation_rad);
    return front * bracket / (sin_el * sin_el);
}

double elevation_angle(const Vec3& receiver, const Vec3& satellite) {
    const Vec3 diff = satellite - receiver;
    const double norm = diff.norm();
    if (norm < 1e-6) {
        throw DegenerateGeometryError("elevation_angle: receiver and satellite coincide");
    }
    const auto g = frames::ecef_to_geodetic(receiver);
    const Vec3 enu = frames::enu_rotation(g) * (diff / norm);
    return std::asin(std::clamp(enu.z(), -1.0, 1.0));
}

CorrectedObservation correct_observation(const SatelliteObservation& obs, const Vec3& receiver_position) {
    CorrectedObservation out;
    out.sat_id = obs.sat_id;
    out.corrected_pseudorange_m = deterministic_pseudorange_m(obs);
    out.range_rate_mps = obs.doppler_mps;
    out.elevation_rad = elevation_angle(receiver_position, obs.sat_position);
    out.variance_m2 = measurement_variance(obs.cn0_dbhz, out.elevation_rad);
    out.line_of_sight = line_of_sight(receiver_position, obs.sat_position);
    out.sat_position = obs.sat_position;
    out.sat_velocity = obs.sat_velocity;
    return out;
}

std::vector<CorrectedObservation> correct_epoch(const std::vector<SatelliteObservation>& observations,
                                                const Vec3& receiver_position) {
    std::vector<CorrectedObservation> out;
    out.reserve(observations.size());
    for (const auto& obs : observations) {
        out.push_back(correct_observation(obs, receiver_position));
    }
    return out;
}

SingleEpochFix single_epoch_least_squares(const std::vector<SatelliteObservation>& observations) {
    if (observations.size() < 4) {
        throw ContractViolation("single_epoch_least_squares: need at least four satellites");
    }
    const auto n = static_cast<Eigen::Index>(observations.size());
    Eigen::Vector4d x = Eigen::Vector4d::Zero();  // [position, clock bias]

    SingleEpochFix fix;
    for (int iteration = 0; iteration < 20; ++iteration) {
        Eigen::MatrixXd jac(n, 4);
        Eigen::VectorXd residual(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto& obs = observations[static_cast<std::size_t>(i)];
            const Vec3 diff = x.head<3>() - obs.sat_position;
            const double range = diff.norm();
            if (range < 1.0) {
                throw DegenerateGeometryError("single_epoch_least_squares: iterate collided with a satellite");
            }
            residual(i) = deterministic_pseudorange_m(obs) - (range + x(3));
            jac.row(i) << (diff / range).transpose(), 1.0;
        }
        const Eigen::Vector4d step = jac.colPivHouseholderQr().solve(residual);
        x += step;
        fix.iterations = iteration + 1;
        if (!x.allFinite()) {
            throw NumericalFailure("single_epoch_least_squares: diverged");
        }
        if (step.norm() < 1e-4) break;
    }
    fix.position = x.head<3>();
    fix.clock_bias_m = x(3);
    return fix;
}

}  // namespace railloc::gnss
