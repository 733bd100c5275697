// Independent reference implementations used only by tests. These must not
// share code paths with the library under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace oracles {

inline constexpr long double kRadiusKm = 6371.0088L;
inline constexpr long double kPi = 3.14159265358979323846264338327950288L;

/// Great-circle distance via the atan2 form of the central angle, in long
/// double. Numerically stable at all separations including antipodal.
inline double great_circle_km(double lat_a_deg, double lon_a_deg,
                              double lat_b_deg, double lon_b_deg) {
    const long double deg = kPi / 180.0L;
    const long double phi1 = static_cast<long double>(lat_a_deg) * deg;
    const long double phi2 = static_cast<long double>(lat_b_deg) * deg;
    const long double dl =
        (static_cast<long double>(lon_b_deg) - static_cast<long double>(lon_a_deg)) * deg;

    const long double sin_phi1 = sinl(phi1), cos_phi1 = cosl(phi1);
    const long double sin_phi2 = sinl(phi2), cos_phi2 = cosl(phi2);
    const long double sin_dl = sinl(dl), cos_dl = cosl(dl);

    const long double y = sqrtl(powl(cos_phi2 * sin_dl, 2) +
                                powl(cos_phi1 * sin_phi2 -
                                         sin_phi1 * cos_phi2 * cos_dl,
                                     2));
    const long double x = sin_phi1 * sin_phi2 + cos_phi1 * cos_phi2 * cos_dl;
    return static_cast<double>(kRadiusKm * atan2l(y, x));
}

/// Planar small-distance approximation (equirectangular projection).
inline double equirectangular_km(double lat_a_deg, double lon_a_deg,
                                 double lat_b_deg, double lon_b_deg) {
    const double deg = static_cast<double>(kPi) / 180.0;
    const double d_phi = (lat_b_deg - lat_a_deg) * deg;
    const double d_lambda = (lon_b_deg - lon_a_deg) * deg;
    const double mean_phi = (lat_a_deg + lat_b_deg) / 2.0 * deg;
    const double x = d_lambda * std::cos(mean_phi);
    return static_cast<double>(kRadiusKm) * std::sqrt(x * x + d_phi * d_phi);
}

/// IoU of integer-coordinate boxes by counting unit pixels.
inline double pixel_iou(std::int64_t ax0, std::int64_t ay0, std::int64_t ax1,
                        std::int64_t ay1, std::int64_t bx0, std::int64_t by0,
                        std::int64_t bx1, std::int64_t by1) {
    std::int64_t inter = 0, uni = 0;
    const std::int64_t x0 = std::min(ax0, bx0), x1 = std::max(ax1, bx1);
    const std::int64_t y0 = std::min(ay0, by0), y1 = std::max(ay1, by1);
    for (std::int64_t x = x0; x < x1; ++x) {
        for (std::int64_t y = y0; y < y1; ++y) {
            const bool in_a = x >= ax0 && x < ax1 && y >= ay0 && y < ay1;
            const bool in_b = x >= bx0 && x < bx1 && y >= by0 && y < by1;
            if (in_a && in_b) ++inter;
            if (in_a || in_b) ++uni;
        }
    }
    return uni == 0 ? 0.0
                    : static_cast<double>(inter) / static_cast<double>(uni);
}

/// Exhaustive argmin of alpha*d + (1-alpha)/m over lots with m >= 1, in the
/// maps' shared key order; nullopt when all lots are full.
inline std::optional<std::string> brute_force_best(
    const std::map<std::string, double>& distances_km,
    const std::map<std::string, int>& spots, double alpha) {
    std::optional<std::string> best;
    double best_value = 0.0;
    for (const auto& [lot_id, d] : distances_km) {
        const int m = spots.at(lot_id);
        if (m < 1) continue;
        const double value = alpha * d + (1.0 - alpha) / m;
        if (!best || value < best_value) {
            best = lot_id;
            best_value = value;
        }
    }
    return best;
}

} // namespace oracles
