#include "parkrec/annotations.hpp"

#include <map>
#include <set>

#include <json.hpp>

namespace parkrec {

namespace {
using nlohmann::json;
}

std::vector<DetectionEvent> parse_annotations(const std::string& document,
                                              const std::string& lot_id,
                                              const std::string& camera_id) {
    json j;
    try {
        j = json::parse(document);
    } catch (const json::parse_error& e) {
        throw AnnotationError(std::string("malformed JSON: ") + e.what());
    }

    std::map<std::int64_t, ObjectClass> categories;
    for (const auto& cat : j.value("categories", json::array())) {
        const std::string name = cat.at("name").get<std::string>();
        const auto cls = parse_object_class(name);
        if (!cls) throw AnnotationError("unknown category name: " + name);
        categories[cat.at("id").get<std::int64_t>()] = *cls;
    }

    std::vector<DetectionEvent> events;
    std::map<std::int64_t, std::size_t> image_index;
    std::set<std::int64_t> seen_images;
    std::int64_t frame = 0;
    for (const auto& img : j.value("images", json::array())) {
        const std::int64_t image_id = img.at("id").get<std::int64_t>();
        if (!seen_images.insert(image_id).second) {
            throw AnnotationError("duplicate image id: " + std::to_string(image_id));
        }
        DetectionEvent event;
        event.camera_id = camera_id;
        event.lot_id = lot_id;
        event.frame_index = frame;
        event.timestamp_ms = frame;
        image_index[image_id] = events.size();
        events.push_back(std::move(event));
        ++frame;
    }

    for (const auto& ann : j.value("annotations", json::array())) {
        const std::int64_t image_id = ann.at("image_id").get<std::int64_t>();
        const auto it = image_index.find(image_id);
        if (it == image_index.end()) {
            throw AnnotationError("annotation references unknown image id: " +
                                  std::to_string(image_id));
        }
        const std::int64_t category_id = ann.at("category_id").get<std::int64_t>();
        const auto cat = categories.find(category_id);
        if (cat == categories.end()) {
            throw AnnotationError("annotation references unknown category id: " +
                                  std::to_string(category_id));
        }
        if (!ann.contains("segmentation") || !ann["segmentation"].is_array() ||
            ann["segmentation"].empty() || !ann["segmentation"][0].is_array()) {
            throw AnnotationError("annotation missing polygon segmentation");
        }
        const auto& flat = ann["segmentation"][0];
        if (flat.size() < 6 || flat.size() % 2 != 0) {
            throw AnnotationError("malformed polygon: needs >= 3 [x,y] pairs");
        }
        std::vector<PolygonVertex> verts;
        for (std::size_t i = 0; i + 1 < flat.size(); i += 2) {
            if (!flat[i].is_number() || !flat[i + 1].is_number()) {
                throw AnnotationError("malformed polygon: non-numeric coordinate");
            }
            verts.push_back({flat[i].get<double>(), flat[i + 1].get<double>()});
        }
        BBox box = [&] {
            try {
                return polygon_bbox(verts);
            } catch (const std::invalid_argument& e) {
                throw AnnotationError(std::string("malformed polygon: ") + e.what());
            }
        }();
        events[it->second].detections.push_back(
            Detection{cat->second, box, 1.0, std::move(verts)});
    }
    return events;
}

} // namespace parkrec
