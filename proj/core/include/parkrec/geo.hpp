#pragma once

#include <vector>

namespace parkrec::geo {

// IUGG mean Earth radius, in kilometers.
inline constexpr double kEarthRadiusKm = 6371.0088;

/// A point on the Earth's surface in decimal degrees.
/// Construction rejects non-finite or out-of-range coordinates.
class GeoPoint {
public:
    GeoPoint(double lat_deg, double lon_deg);

    double lat_deg() const { return lat_deg_; }
    double lon_deg() const { return lon_deg_; }

    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;

private:
    double lat_deg_;
    double lon_deg_;
};

/// Great-circle distance in kilometers on a sphere of radius kEarthRadiusKm.
/// The arcsin argument is clamped to [0, 1] so near-antipodal rounding never
/// produces NaN. Symmetric in its arguments.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

/// Distances in kilometers indexed [origin][destination].
/// Throws std::invalid_argument when either list is empty.
std::vector<std::vector<double>> distance_matrix(
    const std::vector<GeoPoint>& origins,
    const std::vector<GeoPoint>& destinations);

} // namespace parkrec::geo
