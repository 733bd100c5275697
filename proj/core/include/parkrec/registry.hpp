#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parkrec/geo.hpp"

namespace parkrec {

struct ParkingLot {
    std::string lot_id;
    std::string name;
    geo::GeoPoint location;
    std::vector<std::string> camera_ids;
};

/// Ordered collection of parking lots; lot_id unique, order defines the
/// registry index used for recommendation tie-breaking.
class LotRegistry {
public:
    LotRegistry() = default;
    explicit LotRegistry(std::vector<ParkingLot> lots);

    /// Parse from a JSON array of {lot_id, name, lat, lon, camera_ids}.
    static LotRegistry from_json(const std::string& text);
    static LotRegistry from_file(const std::string& path);

    /// The seven Johannesburg lots shipped with the project.
    static LotRegistry default_lots();

    const std::vector<ParkingLot>& lots() const { return lots_; }
    std::size_t size() const { return lots_.size(); }
    bool contains(const std::string& lot_id) const;
    const ParkingLot& at(const std::string& lot_id) const;
    std::optional<std::size_t> index_of(const std::string& lot_id) const;

private:
    std::vector<ParkingLot> lots_;
};

} // namespace parkrec
