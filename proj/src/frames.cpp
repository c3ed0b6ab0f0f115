#include "railloc/frames.hpp"

#include <cmath>
#include <numbers>

#include "railloc/errors.hpp"

namespace railloc::frames {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

GeodeticPosition from_degrees(double latitude_deg, double longitude_deg, double height_m) {
    GeodeticPosition g{latitude_deg * kDegToRad, longitude_deg * kDegToRad, height_m};
    validate(g);
    return g;
}

void validate(const GeodeticPosition& g) {
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    if (!std::isfinite(g.latitude_rad) || std::abs(g.latitude_rad) > kHalfPi + 1e-12) {
        throw ValidationError("latitude out of [-90, 90] deg");
    }
    if (!std::isfinite(g.longitude_rad) || std::abs(g.longitude_rad) > std::numbers::pi + 1e-12) {
        throw ValidationError("longitude out of [-180, 180] deg");
    }
    if (!std::isfinite(g.height_m)) {
        throw ValidationError("non-finite height");
    }
}

double prime_vertical_radius(double latitude_rad) {
    const double s = std::sin(latitude_rad);
    return kWgs84EquatorialRadius / std::sqrt(1.0 - kWgs84EccentricitySq * s * s);
}

Vec3 geodetic_to_ecef(const GeodeticPosition& g) {
    const double rn = prime_vertical_radius(g.latitude_rad);
    const double cos_lat = std::cos(g.latitude_rad);
    const double sin_lat = std::sin(g.latitude_rad);
    return {(rn + g.height_m) * cos_lat * std::cos(g.longitude_rad),
            (rn + g.height_m) * cos_lat * std::sin(g.longitude_rad),
            (rn + g.height_m - kWgs84EccentricitySq * rn) * sin_lat};
}

GeodeticPosition ecef_to_geodetic(const Vec3& p) {
    if (p.norm() <= 1e5) {
        throw DegenerateGeometryError("ecef_to_geodetic: point too close to the geocenter");
    }
    const double rho = std::hypot(p.x(), p.y());

    GeodeticPosition g;
    g.longitude_rad = std::atan2(p.y(), p.x());

    // Fixed point on latitude; the contraction factor is about e^2 per pass.
    double lat = std::atan2(p.z(), rho);
    for (int i = 0; i < 20; ++i) {
        const double rn = prime_vertical_radius(lat);
        const double next = std::atan2(p.z() + kWgs84EccentricitySq * rn * std::sin(lat), rho);
        const double step = std::abs(next - lat);
        lat = next;
        if (step < 1e-12) break;
    }
    g.latitude_rad = lat;

    const double rn = prime_vertical_radius(lat);
    const double cos_lat = std::cos(lat);
    const double sin_lat = std::sin(lat);
    // Pick the better-conditioned height expression.
    if (std::abs(cos_lat) >= std::abs(sin_lat)) {
        g.height_m = rho / cos_lat - rn;
    } else {
        g.height_m = p.z() / sin_lat - rn * (1.0 - kWgs84EccentricitySq);
    }
    return g;
}

Mat3 enu_rotation(const GeodeticPosition& g) {
    const double sin_lat = std::sin(g.latitude_rad);
    const double cos_lat = std::cos(g.latitude_rad);
    const double sin_lon = std::sin(g.longitude_rad);
    const double cos_lon = std::cos(g.longitude_rad);
    Mat3 t;
    t << -sin_lon, cos_lon, 0.0,
         -cos_lon * sin_lat, -sin_lon * sin_lat, cos_lat,
         cos_lon * cos_lat, sin_lon * cos_lat, sin_lat;
    return t;
}

Vec3 ecef_to_enu_vector(const Vec3& v, const GeodeticPosition& g) {
    return enu_rotation(g) * v;
}

Mat3 ecef_cov_to_enu(const Mat3& cov, const GeodeticPosition& g) {
    const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
        throw ContractViolation("ecef_cov_to_enu: covariance is not symmetric");
    }
    const Mat3 t = enu_rotation(g);
    Mat3 out = t * cov * t.transpose();
    return 0.5 * (out + out.transpose());
}

}  // namespace railloc::frames
