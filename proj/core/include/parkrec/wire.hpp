#pragma once

#include <stdexcept>
#include <string>

#include "parkrec/detection.hpp"

namespace parkrec::wire {

/// Raised for schema violations in the line-delimited detection-event format.
class WireError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse one wire-format line:
///   {"camera_id":..,"lot_id":..,"frame_index":..,"timestamp_ms":..,
///    "detections":[{"class":..,"bbox":[x0,y0,x1,y1],"confidence":..,
///                   "polygon":[[x,y],...]?}]}
/// Throws WireError for any schema or invariant violation.
DetectionEvent parse_event(const std::string& line);

/// Serialize to a single canonical JSON line (no trailing newline).
/// parse_event(serialize_event(e)) reproduces e.
std::string serialize_event(const DetectionEvent& event);

} // namespace parkrec::wire
