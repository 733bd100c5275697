#include "parkrec/simulate.hpp"

#include <stdexcept>

#include "parkrec/stream_gen.hpp"
#include "parkrec/tracker.hpp"

namespace parkrec {

DistanceTable build_distance_table(const Scenario& scenario) {
    if (!scenario.origins) {
        throw std::invalid_argument(
            "scenario supplies a fixed distance matrix: nothing to compute");
    }
    DistanceTable table;
    std::vector<geo::GeoPoint> origin_points;
    for (const auto& origin : *scenario.origins) {
        table.origin_names.push_back(origin.name);
        origin_points.push_back(origin.point);
    }
    std::vector<geo::GeoPoint> lot_points;
    for (const auto& lot : scenario.lots.lots()) {
        table.lot_ids.push_back(lot.lot_id);
        lot_points.push_back(lot.location);
    }
    table.km = geo::distance_matrix(origin_points, lot_points);
    return table;
}

std::map<std::string, int> resolve_spots(const Scenario& scenario) {
    if (scenario.spots) return *scenario.spots;

    OccupancyTracker tracker(scenario.lots, scenario.tracker);
    for (const auto& path : *scenario.event_streams) {
        for (const auto& event : read_stream(path)) {
            const auto filtered =
                filter_by_confidence(event, scenario.tracker.confidence_threshold);
            const auto result = tracker.apply_event(filtered);
            if (result.code != ApplyCode::applied) {
                throw std::runtime_error("event stream " + path +
                                         " rejected by tracker");
            }
        }
    }
    std::map<std::string, int> spots;
    for (const auto& lot : scenario.lots.lots()) {
        spots[lot.lot_id] = tracker.available_spots(lot.lot_id);
    }
    return spots;
}

RecommendationGrid build_recommendation_grid(const Scenario& scenario) {
    RecommendationGrid grid;
    grid.alphas = scenario.alphas;

    // Distances per origin, keyed by lot id.
    std::vector<std::map<std::string, double>> origin_distances;
    if (scenario.fixed_distances) {
        const auto& fd = *scenario.fixed_distances;
        grid.origin_names = fd.origins;
        for (std::size_t j = 0; j < fd.origins.size(); ++j) {
            std::map<std::string, double> row;
            for (std::size_t i = 0; i < fd.lot_ids.size(); ++i) {
                row[fd.lot_ids[i]] = fd.km[j][i];
            }
            origin_distances.push_back(std::move(row));
        }
    } else {
        const DistanceTable table = build_distance_table(scenario);
        grid.origin_names = table.origin_names;
        for (std::size_t j = 0; j < table.origin_names.size(); ++j) {
            std::map<std::string, double> row;
            for (std::size_t i = 0; i < table.lot_ids.size(); ++i) {
                row[table.lot_ids[i]] = table.km[j][i];
            }
            origin_distances.push_back(std::move(row));
        }
    }

    const std::map<std::string, int> all_spots = resolve_spots(scenario);

    for (const double alpha : grid.alphas) {
        std::vector<GridCell> row;
        for (const auto& distances : origin_distances) {
            std::map<std::string, int> spots;
            for (const auto& [lot_id, km] : distances) {
                const auto it = all_spots.find(lot_id);
                spots[lot_id] = it == all_spots.end() ? 0 : it->second;
            }
            GridCell cell;
            try {
                Recommendation rec =
                    recommend_with_fixed_distances(distances, spots, alpha);
                cell.best_lot = rec.best().lot_id;
                cell.scores = std::move(rec.ranked);
            } catch (const NoAvailabilityError&) {
                // rendered as "--" downstream
            }
            row.push_back(std::move(cell));
        }
        grid.cells.push_back(std::move(row));
    }
    return grid;
}

} // namespace parkrec
