#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parkrec/recommend.hpp"
#include "parkrec/scenario.hpp"

namespace parkrec {

struct DistanceTable {
    std::vector<std::string> origin_names;
    std::vector<std::string> lot_ids;
    std::vector<std::vector<double>> km; // [origin][lot]
};

/// One grid cell: best lot for (alpha, origin), plus the full per-lot score
/// breakdown for audit. best_lot is empty when every lot is full.
struct GridCell {
    std::optional<std::string> best_lot;
    std::vector<ScoredLot> scores;
};

struct RecommendationGrid {
    std::vector<double> alphas;
    std::vector<std::string> origin_names;
    std::vector<std::vector<GridCell>> cells; // [alpha][origin]
};

/// Computes origin-to-lot distances from coordinates. Throws
/// std::invalid_argument for fixed-matrix scenarios (nothing to compute).
DistanceTable build_distance_table(const Scenario& scenario);

/// Per-lot available counts: the scenario's fixed map, or the tracker's
/// post-confirmation counts after replaying its event streams.
std::map<std::string, int> resolve_spots(const Scenario& scenario);

/// Best lot per (alpha, origin) cell using fixed or computed distances.
RecommendationGrid build_recommendation_grid(const Scenario& scenario);

} // namespace parkrec
