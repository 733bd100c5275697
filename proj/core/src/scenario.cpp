#include "parkrec/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace parkrec {

namespace {
using nlohmann::json;
}

std::vector<double> Scenario::default_alphas() {
    return {0.001, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.999};
}

Scenario Scenario::from_json(const std::string& text,
                             const std::string& base_dir) {
    json j = json::parse(text);
    Scenario s;

    if (j.contains("lots")) {
        s.lots = LotRegistry::from_json(j["lots"].dump());
    } else {
        s.lots = LotRegistry::default_lots();
    }

    if (j.contains("origins")) {
        std::vector<Origin> origins;
        for (const auto& o : j["origins"]) {
            origins.push_back(Origin{o.at("name").get<std::string>(),
                                     geo::GeoPoint(o.at("lat").get<double>(),
                                                   o.at("lon").get<double>())});
        }
        if (origins.empty()) throw std::invalid_argument("origins list is empty");
        s.origins = std::move(origins);
    }
    if (j.contains("fixed_distances")) {
        const auto& fd = j["fixed_distances"];
        FixedDistances fixed;
        fixed.origins = fd.at("origins").get<std::vector<std::string>>();
        fixed.lot_ids = fd.at("lots").get<std::vector<std::string>>();
        fixed.km = fd.at("km").get<std::vector<std::vector<double>>>();
        if (fixed.km.size() != fixed.origins.size()) {
            throw std::invalid_argument("fixed_distances.km row count != origins");
        }
        for (const auto& row : fixed.km) {
            if (row.size() != fixed.lot_ids.size()) {
                throw std::invalid_argument("fixed_distances.km column count != lots");
            }
        }
        for (const auto& lot_id : fixed.lot_ids) {
            if (!s.lots.contains(lot_id)) {
                throw std::invalid_argument("fixed_distances references unknown lot " +
                                            lot_id);
            }
        }
        s.fixed_distances = std::move(fixed);
    }
    if (s.origins.has_value() == s.fixed_distances.has_value()) {
        throw std::invalid_argument(
            "scenario needs exactly one of origins / fixed_distances");
    }

    if (j.contains("spots")) {
        std::map<std::string, int> spots;
        for (const auto& [lot_id, m] : j["spots"].items()) {
            if (!s.lots.contains(lot_id)) {
                throw std::invalid_argument("spots references unknown lot " + lot_id);
            }
            const int count = m.get<int>();
            if (count < 0) throw std::invalid_argument("spot count must be >= 0");
            spots[lot_id] = count;
        }
        s.spots = std::move(spots);
    }
    if (j.contains("event_streams")) {
        std::vector<std::string> paths;
        for (const auto& p : j["event_streams"]) {
            std::filesystem::path path = p.get<std::string>();
            if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
            paths.push_back(path.string());
        }
        s.event_streams = std::move(paths);
    }
    if (s.spots.has_value() == s.event_streams.has_value()) {
        throw std::invalid_argument(
            "scenario needs exactly one of spots / event_streams");
    }

    s.alphas = j.contains("alphas") ? j["alphas"].get<std::vector<double>>()
                                    : default_alphas();
    if (s.alphas.empty()) throw std::invalid_argument("alphas list is empty");
    for (const double a : s.alphas) {
        if (a < 0.0 || a > 1.0) {
            throw std::invalid_argument("alpha must be in [0, 1]");
        }
    }

    if (j.contains("tracker")) {
        s.tracker = TrackerConfig::from_json(j["tracker"].dump());
    }
    return s;
}

Scenario Scenario::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str(),
                     std::filesystem::path(path).parent_path().string());
}

} // namespace parkrec
