#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parkrec/geo.hpp"
#include "parkrec/registry.hpp"
#include "parkrec/tracker.hpp"

namespace parkrec {

struct Origin {
    std::string name;
    geo::GeoPoint point;
};

/// Pre-tabulated origin-to-lot distances, km[origin][lot].
struct FixedDistances {
    std::vector<std::string> origins;
    std::vector<std::string> lot_ids;
    std::vector<std::vector<double>> km;
};

/// Declarative simulation input. Exactly one of origins/fixed_distances and
/// exactly one of spots/event_streams is present.
struct Scenario {
    LotRegistry lots;
    std::optional<std::vector<Origin>> origins;
    std::optional<FixedDistances> fixed_distances;
    std::optional<std::map<std::string, int>> spots;
    std::optional<std::vector<std::string>> event_streams; // wire-format files
    std::vector<double> alphas;
    TrackerConfig tracker;

    static Scenario from_json(const std::string& text,
                              const std::string& base_dir = ".");
    static Scenario from_file(const std::string& path);

    /// The eight alpha values used throughout the simulation tables.
    static std::vector<double> default_alphas();
};

} // namespace parkrec
