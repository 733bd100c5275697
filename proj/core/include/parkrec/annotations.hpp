#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "parkrec/detection.hpp"

namespace parkrec {

class AnnotationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse a COCO-style instance-segmentation subset:
///   {images:[{id,file_name,width,height}],
///    annotations:[{id,image_id,category_id,segmentation:[[x1,y1,...]]}],
///    categories:[{id,name}]}
/// Produces one DetectionEvent per image in document order, frame_index by
/// document order, confidence fixed at 1.0, bbox from the polygon.
/// Throws AnnotationError for unknown categories, malformed polygons, and
/// duplicate image ids.
std::vector<DetectionEvent> parse_annotations(const std::string& document,
                                              const std::string& lot_id,
                                              const std::string& camera_id);

} // namespace parkrec
