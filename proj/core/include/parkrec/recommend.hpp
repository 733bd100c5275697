#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parkrec/geo.hpp"
#include "parkrec/registry.hpp"
#include "parkrec/tracker.hpp"

namespace parkrec {

/// Every candidate lot is full (m = 0 everywhere).
class NoAvailabilityError : public std::runtime_error {
public:
    NoAvailabilityError() : std::runtime_error("no lot has an available spot") {}
};

struct RecommendationRequest {
    geo::GeoPoint origin;
    double alpha = 0.5;                 // 1 = distance only, 0 = spots only
    std::optional<std::size_t> top_k;   // default: full ranking
};

struct ScoredLot {
    std::string lot_id;
    double distance_km;
    int spots;
    double objective;
};

struct Recommendation {
    std::string recommendation_id;
    double alpha;
    std::vector<ScoredLot> ranked;     // ascending by objective

    const ScoredLot& best() const { return ranked.front(); }
};

/// alpha * distance_km + (1 - alpha) / spots.
/// Throws std::invalid_argument when spots < 1 or inputs are out of range.
double objective(double distance_km, int spots, double alpha);

/// Score every lot with m >= 1 against the driver origin and return the
/// ascending ranking (ties broken by registry order). The top-1 is also
/// computed by an O(1)-state single pass and must agree with the ranking.
/// Throws NoAvailabilityError when every lot is full.
Recommendation recommend(const OccupancySnapshot& snapshot,
                         const LotRegistry& registry,
                         const RecommendationRequest& request);

/// Same scoring and ranking over externally supplied distances, bypassing
/// geodesic computation. Both maps must have identical keys; candidate
/// order (and tie-breaking) follows ascending lot id.
Recommendation recommend_with_fixed_distances(
    const std::map<std::string, double>& distances_km,
    const std::map<std::string, int>& spots, double alpha,
    std::optional<std::size_t> top_k = std::nullopt);

/// Process-unique recommendation ids: monotone counter plus random suffix.
std::string next_recommendation_id();

} // namespace parkrec
