#pragma once

#include <string>

#include "parkrec/simulate.hpp"

namespace parkrec {

// All renderings are byte-stable for identical inputs.

std::string distance_table_csv(const DistanceTable& table);
std::string distance_table_text(const DistanceTable& table);

std::string grid_csv(const RecommendationGrid& grid);
std::string grid_text(const RecommendationGrid& grid);

/// Per-cell score dump (every lot's d, m, objective) for audit.
std::string grid_scores_csv(const RecommendationGrid& grid);

} // namespace parkrec
