#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parkrec/detection.hpp"

namespace parkrec {

/// Recipe for a synthetic detection stream standing in for a live camera:
/// each ground-truth spot box emits one parking detection per frame,
/// translated by per-frame uniform jitter and omitted with the dropout
/// probability.
struct StreamSpec {
    std::string lot_id;
    std::string camera_id;
    std::vector<BBox> spot_boxes;
    int frames = 1;
    double jitter_px = 0.0;     // max |shift| per axis
    double dropout = 0.0;       // per-spot per-frame omission probability
    std::uint64_t seed = 0;
    std::int64_t start_timestamp_ms = 0;
    std::int64_t frame_interval_ms = 100;

    static StreamSpec from_json(const std::string& text);
    static StreamSpec from_file(const std::string& path);

    /// Rejects jitter large enough that a worst-case shift could push the
    /// IoU against the ground-truth box below tau_match, and boxes too
    /// close to the image origin to absorb the shift.
    void validate(double tau_match) const;
};

/// Deterministic: same spec (including seed) produces the same events.
std::vector<DetectionEvent> generate_stream(const StreamSpec& spec);

/// One wire-format line per event.
void write_stream(const std::vector<DetectionEvent>& events,
                  const std::string& path);

std::vector<DetectionEvent> read_stream(const std::string& path);

} // namespace parkrec
