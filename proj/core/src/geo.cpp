#include "parkrec/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace parkrec::geo {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

GeoPoint::GeoPoint(double lat_deg, double lon_deg)
    : lat_deg_(lat_deg), lon_deg_(lon_deg) {
    if (!std::isfinite(lat_deg) || lat_deg < -90.0 || lat_deg > 90.0) {
        throw std::invalid_argument("latitude out of range [-90, 90]");
    }
    if (!std::isfinite(lon_deg) || lon_deg < -180.0 || lon_deg > 180.0) {
        throw std::invalid_argument("longitude out of range [-180, 180]");
    }
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
    const double phi_a = a.lat_deg() * kDegToRad;
    const double phi_b = b.lat_deg() * kDegToRad;
    const double d_phi = (b.lat_deg() - a.lat_deg()) * kDegToRad;
    const double d_lambda = (b.lon_deg() - a.lon_deg()) * kDegToRad;

    const double sin_phi = std::sin(d_phi / 2.0);
    const double sin_lambda = std::sin(d_lambda / 2.0);
    double h = sin_phi * sin_phi +
               std::cos(phi_a) * std::cos(phi_b) * sin_lambda * sin_lambda;
    h = std::clamp(h, 0.0, 1.0);
    return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

std::vector<std::vector<double>> distance_matrix(
    const std::vector<GeoPoint>& origins,
    const std::vector<GeoPoint>& destinations) {
    if (origins.empty() || destinations.empty()) {
        throw std::invalid_argument("distance_matrix requires non-empty inputs");
    }
    std::vector<std::vector<double>> out(origins.size());
    for (std::size_t j = 0; j < origins.size(); ++j) {
        out[j].reserve(destinations.size());
        for (const auto& dest : destinations) {
            out[j].push_back(haversine_km(origins[j], dest));
        }
    }
    return out;
}

} // namespace parkrec::geo
