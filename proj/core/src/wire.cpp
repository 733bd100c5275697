#include "parkrec/wire.hpp"

#include <json.hpp>

namespace parkrec::wire {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number()) {
        throw WireError(std::string("missing or non-numeric field: ") + field);
    }
    return j[field].get<double>();
}

std::int64_t require_integer(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer()) {
        throw WireError(std::string("missing or non-integer field: ") + field);
    }
    return j[field].get<std::int64_t>();
}

std::string require_string(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw WireError(std::string("missing or non-string field: ") + field);
    }
    return j[field].get<std::string>();
}

Detection parse_detection(const json& j) {
    const std::string class_name = require_string(j, "class");
    const auto cls = parse_object_class(class_name);
    if (!cls) throw WireError("unknown object class: " + class_name);

    if (!j.contains("bbox") || !j["bbox"].is_array() || j["bbox"].size() != 4) {
        throw WireError("bbox must be an array [x_min,y_min,x_max,y_max]");
    }
    for (const auto& v : j["bbox"]) {
        if (!v.is_number()) throw WireError("bbox entries must be numeric");
    }

    std::optional<std::vector<PolygonVertex>> polygon;
    if (j.contains("polygon")) {
        if (!j["polygon"].is_array() || j["polygon"].size() < 3) {
            throw WireError("polygon must be an array of >= 3 [x,y] pairs");
        }
        std::vector<PolygonVertex> verts;
        for (const auto& p : j["polygon"]) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
                !p[1].is_number()) {
                throw WireError("polygon vertex must be [x,y]");
            }
            verts.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        polygon = std::move(verts);
    }

    try {
        Detection det{*cls,
                      BBox(j["bbox"][0].get<double>(), j["bbox"][1].get<double>(),
                           j["bbox"][2].get<double>(), j["bbox"][3].get<double>()),
                      require_number(j, "confidence"), std::move(polygon)};
        validate(det);
        return det;
    } catch (const std::invalid_argument& e) {
        throw WireError(e.what());
    }
}

} // namespace

DetectionEvent parse_event(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw WireError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw WireError("event must be a JSON object");

    DetectionEvent event;
    event.camera_id = require_string(j, "camera_id");
    event.lot_id = require_string(j, "lot_id");
    event.frame_index = require_integer(j, "frame_index");
    event.timestamp_ms = require_integer(j, "timestamp_ms");
    if (event.frame_index < 0) throw WireError("frame_index must be non-negative");

    if (!j.contains("detections") || !j["detections"].is_array()) {
        throw WireError("missing detections array");
    }
    for (const auto& d : j["detections"]) {
        event.detections.push_back(parse_detection(d));
    }
    return event;
}

std::string serialize_event(const DetectionEvent& event) {
    json dets = json::array();
    for (const auto& d : event.detections) {
        json jd{{"class", std::string(to_string(d.object_class))},
                {"bbox", {d.bbox.x_min(), d.bbox.y_min(), d.bbox.x_max(),
                          d.bbox.y_max()}},
                {"confidence", d.confidence}};
        if (d.mask_polygon) {
            json poly = json::array();
            for (const auto& v : *d.mask_polygon) poly.push_back({v[0], v[1]});
            jd["polygon"] = std::move(poly);
        }
        dets.push_back(std::move(jd));
    }
    json j{{"camera_id", event.camera_id},
           {"lot_id", event.lot_id},
           {"frame_index", event.frame_index},
           {"timestamp_ms", event.timestamp_ms},
           {"detections", std::move(dets)}};
    return j.dump();
}

} // namespace parkrec::wire
