#include "parkrec/registry.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace parkrec {

namespace {
using nlohmann::json;
}

LotRegistry::LotRegistry(std::vector<ParkingLot> lots) : lots_(std::move(lots)) {
    std::set<std::string> ids;
    for (const auto& lot : lots_) {
        if (!ids.insert(lot.lot_id).second) {
            throw std::invalid_argument("duplicate lot_id: " + lot.lot_id);
        }
    }
}

LotRegistry LotRegistry::from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array()) {
        throw std::invalid_argument("registry must be a JSON array");
    }
    std::vector<ParkingLot> lots;
    for (const auto& entry : j) {
        ParkingLot lot{entry.at("lot_id").get<std::string>(),
                       entry.at("name").get<std::string>(),
                       geo::GeoPoint(entry.at("lat").get<double>(),
                                     entry.at("lon").get<double>()),
                       {}};
        for (const auto& cam : entry.value("camera_ids", json::array())) {
            lot.camera_ids.push_back(cam.get<std::string>());
        }
        lots.push_back(std::move(lot));
    }
    return LotRegistry(std::move(lots));
}

LotRegistry LotRegistry::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open registry file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

LotRegistry LotRegistry::default_lots() {
    std::vector<ParkingLot> lots;
    auto add = [&](const char* id, const char* name, double lat, double lon) {
        lots.push_back(ParkingLot{id, name, geo::GeoPoint(lat, lon),
                                  {std::string("cam-") + id}});
    };
    add("1", "Brentwood Mall", -26.1189, 28.2804);
    add("2", "Engen Morningside service", -26.0709, 28.0644);
    add("3", "Intercare fourways", -26.0158, 28.0064);
    add("4", "Morning Glen Mall", -26.0659, 28.0736);
    add("5", "Pineslope", -26.0209, 28.0139);
    add("6", "Rivonia Junction Centre", -26.0597, 28.0600);
    add("7", "Best price supermarket Edenvale", -26.0540, 28.0552);
    return LotRegistry(std::move(lots));
}

bool LotRegistry::contains(const std::string& lot_id) const {
    return index_of(lot_id).has_value();
}

const ParkingLot& LotRegistry::at(const std::string& lot_id) const {
    const auto idx = index_of(lot_id);
    if (!idx) throw std::out_of_range("unknown lot_id: " + lot_id);
    return lots_[*idx];
}

std::optional<std::size_t> LotRegistry::index_of(const std::string& lot_id) const {
    for (std::size_t i = 0; i < lots_.size(); ++i) {
        if (lots_[i].lot_id == lot_id) return i;
    }
    return std::nullopt;
}

} // namespace parkrec
