#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parkrec {

enum class ObjectClass { car, parking, person, plate };

/// Case-insensitive parse; nullopt for anything outside the four classes.
std::optional<ObjectClass> parse_object_class(std::string_view name);
std::string_view to_string(ObjectClass c);

/// Axis-aligned pixel box. Construction rejects empty or inverted boxes
/// and negative coordinates.
class BBox {
public:
    BBox(double x_min, double y_min, double x_max, double y_max);

    double x_min() const { return x_min_; }
    double y_min() const { return y_min_; }
    double x_max() const { return x_max_; }
    double y_max() const { return y_max_; }
    double area() const { return (x_max_ - x_min_) * (y_max_ - y_min_); }

    friend bool operator==(const BBox&, const BBox&) = default;

private:
    double x_min_, y_min_, x_max_, y_max_;
};

using PolygonVertex = std::array<double, 2>;

struct Detection {
    ObjectClass object_class;
    BBox bbox;
    double confidence = 1.0;
    std::optional<std::vector<PolygonVertex>> mask_polygon;
};

/// One camera frame's detector output.
struct DetectionEvent {
    std::string camera_id;
    std::string lot_id;
    std::int64_t frame_index = 0;
    std::int64_t timestamp_ms = 0;
    std::vector<Detection> detections;
};

/// Intersection over union of two axis-aligned boxes; 0 when disjoint or
/// touching only at an edge or corner.
double iou(const BBox& a, const BBox& b);

/// Tight axis-aligned box around a polygon. Throws std::invalid_argument
/// for fewer than 3 vertices, non-finite coordinates, or a zero-area box.
BBox polygon_bbox(const std::vector<PolygonVertex>& vertices);

/// Boxes of all plate-class detections, each dilated by dilation_px on every
/// side and clipped at zero; event order preserved.
std::vector<BBox> redaction_regions(const DetectionEvent& event,
                                    double dilation_px);

/// Copy of the event keeping only detections with confidence >= threshold.
DetectionEvent filter_by_confidence(const DetectionEvent& event,
                                    double threshold);

/// Full invariant check for a detection (confidence range, mask polygon
/// containment within bbox dilated by 1 px). Throws std::invalid_argument.
void validate(const Detection& detection);

} // namespace parkrec
