#pragma once

#include "railloc/types.hpp"

namespace railloc::frames {

inline constexpr double kWgs84EquatorialRadius = 6378137.0;  // m
inline constexpr double kWgs84EccentricitySq = 0.00669437999;

struct GeodeticPosition {
    double latitude_rad = 0.0;
    double longitude_rad = 0.0;
    double height_m = 0.0;
};

/// Throws ValidationError when |latitude| > 90 deg or |longitude| > 180 deg.
GeodeticPosition from_degrees(double latitude_deg, double longitude_deg, double height_m = 0.0);

void validate(const GeodeticPosition& g);

/// Prime-vertical radius of curvature at the given latitude.
double prime_vertical_radius(double latitude_rad);

Vec3 geodetic_to_ecef(const GeodeticPosition& g);

/// Inverse of geodetic_to_ecef via fixed-point iteration on latitude.
/// Round-trip accuracy is below 1e-6 m anywhere near the Earth surface.
/// Throws DegenerateGeometryError for points close to the geocenter.
GeodeticPosition ecef_to_geodetic(const Vec3& p);

/// Rotation whose rows are the local east, north and up directions in ECEF;
/// maps ECEF vectors into the local tangent plane.
Mat3 enu_rotation(const GeodeticPosition& g);

Vec3 ecef_to_enu_vector(const Vec3& v, const GeodeticPosition& g);

/// Congruence transform of a 3x3 covariance into the ENU frame.
/// Throws ContractViolation when the input is not symmetric.
Mat3 ecef_cov_to_enu(const Mat3& cov, const GeodeticPosition& g);

}  // namespace railloc::frames
