#pragma once

#include <Eigen/Dense>

namespace railloc {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using RowVec8 = Eigen::Matrix<double, 1, 8>;

/// Speed of light [m/s], exact by definition.
inline constexpr double kSpeedOfLight = 299792458.0;

// Receiver state layout: [p_x p_y p_z  v_x v_y v_z  c*dt  c*dt_dot].
// Position/velocity in ECEF meters and m/s; receiver clock bias and drift
// carried in meters and m/s.
inline constexpr int kStateDim = 8;
inline constexpr int kPosIndex = 0;
inline constexpr int kVelIndex = 3;
inline constexpr int kClockBiasIndex = 6;
inline constexpr int kClockDriftIndex = 7;

}  // namespace railloc
