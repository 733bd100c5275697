#include "parkrec/detection.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace parkrec {

std::optional<ObjectClass> parse_object_class(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "car") return ObjectClass::car;
    if (lower == "parking") return ObjectClass::parking;
    if (lower == "person") return ObjectClass::person;
    if (lower == "plate") return ObjectClass::plate;
    return std::nullopt;
}

std::string_view to_string(ObjectClass c) {
    switch (c) {
        case ObjectClass::car: return "car";
        case ObjectClass::parking: return "parking";
        case ObjectClass::person: return "person";
        case ObjectClass::plate: return "plate";
    }
    throw std::logic_error("invalid ObjectClass");
}

BBox::BBox(double x_min, double y_min, double x_max, double y_max)
    : x_min_(x_min), y_min_(y_min), x_max_(x_max), y_max_(y_max) {
    if (!std::isfinite(x_min) || !std::isfinite(y_min) ||
        !std::isfinite(x_max) || !std::isfinite(y_max)) {
        throw std::invalid_argument("bbox coordinates must be finite");
    }
    if (x_min < 0.0 || y_min < 0.0) {
        throw std::invalid_argument("bbox coordinates must be non-negative");
    }
    if (x_min >= x_max || y_min >= y_max) {
        throw std::invalid_argument("bbox must have positive width and height");
    }
}

double iou(const BBox& a, const BBox& b) {
    const double ix = std::min(a.x_max(), b.x_max()) - std::max(a.x_min(), b.x_min());
    const double iy = std::min(a.y_max(), b.y_max()) - std::max(a.y_min(), b.y_min());
    if (ix <= 0.0 || iy <= 0.0) return 0.0;
    const double inter = ix * iy;
    const double uni = a.area() + b.area() - inter;
    return inter / uni;
}

BBox polygon_bbox(const std::vector<PolygonVertex>& vertices) {
    if (vertices.size() < 3) {
        throw std::invalid_argument("polygon needs at least 3 vertices");
    }
    double x_min = vertices[0][0], x_max = vertices[0][0];
    double y_min = vertices[0][1], y_max = vertices[0][1];
    for (const auto& v : vertices) {
        if (!std::isfinite(v[0]) || !std::isfinite(v[1])) {
            throw std::invalid_argument("polygon vertex not finite");
        }
        x_min = std::min(x_min, v[0]);
        x_max = std::max(x_max, v[0]);
        y_min = std::min(y_min, v[1]);
        y_max = std::max(y_max, v[1]);
    }
    if (x_min >= x_max || y_min >= y_max) {
        throw std::invalid_argument("degenerate polygon: zero-area bounding box");
    }
    return BBox(x_min, y_min, x_max, y_max);
}

std::vector<BBox> redaction_regions(const DetectionEvent& event,
                                    double dilation_px) {
    std::vector<BBox> out;
    for (const auto& det : event.detections) {
        if (det.object_class != ObjectClass::plate) continue;
        out.emplace_back(std::max(0.0, det.bbox.x_min() - dilation_px),
                         std::max(0.0, det.bbox.y_min() - dilation_px),
                         det.bbox.x_max() + dilation_px,
                         det.bbox.y_max() + dilation_px);
    }
    return out;
}

DetectionEvent filter_by_confidence(const DetectionEvent& event,
                                    double threshold) {
    DetectionEvent out = event;
    std::erase_if(out.detections, [threshold](const Detection& d) {
        return d.confidence < threshold;
    });
    return out;
}

void validate(const Detection& detection) {
    if (!std::isfinite(detection.confidence) || detection.confidence < 0.0 ||
        detection.confidence > 1.0) {
        throw std::invalid_argument("confidence must be in [0, 1]");
    }
    if (detection.mask_polygon) {
        const BBox poly_box = polygon_bbox(*detection.mask_polygon);
        const BBox& b = detection.bbox;
        if (poly_box.x_min() < b.x_min() - 1.0 || poly_box.y_min() < b.y_min() - 1.0 ||
            poly_box.x_max() > b.x_max() + 1.0 || poly_box.y_max() > b.y_max() + 1.0) {
            throw std::invalid_argument(
                "mask polygon extends beyond bbox dilated by 1 px");
        }
    }
}

} // namespace parkrec
