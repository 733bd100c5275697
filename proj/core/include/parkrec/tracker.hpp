#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "parkrec/detection.hpp"
#include "parkrec/registry.hpp"

namespace parkrec {

struct TrackerConfig {
    double tau_match = 0.5;        // IoU acceptance threshold for matching
    int window = 10;               // hit-window length W, in frames
    int h_confirm = 3;             // hits within window to confirm a track
    int expiry = 10;               // consecutive misses before a track expires
    double beta = 0.3;             // EMA factor for box smoothing
    double confidence_threshold = 0.5;

    static TrackerConfig from_json(const std::string& text);
    void validate() const;
};

enum class TrackState { tentative, active, expired };

struct SpotTrack {
    std::uint64_t track_id;
    std::string camera_id;
    BBox smoothed_bbox;
    std::deque<bool> hit_window;   // most recent frame at the back
    TrackState state = TrackState::tentative;
    std::int64_t last_matched_frame = -1;
    int miss_streak = 0;

    int hits_in_window() const;
};

/// Point-in-time copy of per-lot available-spot counts.
struct OccupancySnapshot {
    std::uint64_t version = 0;
    std::int64_t as_of_ms = 0;
    std::map<std::string, int> spots; // lot_id -> m

    /// Stable serialization: identical states yield identical bytes.
    std::string canonical_json() const;
};

enum class ApplyCode { applied, stale_frame, unknown_lot };

struct ApplyResult {
    ApplyCode code = ApplyCode::applied;
    std::vector<std::uint64_t> matched;
    std::vector<std::uint64_t> created;
    std::vector<std::uint64_t> expired;
};

/// Deduplicates parking-class detections into per-camera spot tracks and
/// maintains per-lot available counts. Events for one camera must arrive in
/// strictly increasing frame order; a rejected event leaves state unchanged.
class OccupancyTracker {
public:
    OccupancyTracker(LotRegistry registry, TrackerConfig config = {});

    /// Precondition check without mutation; returns the code apply_event
    /// would produce for ordering and registry errors.
    ApplyCode validate_event(const DetectionEvent& event) const;

    ApplyResult apply_event(const DetectionEvent& event);

    /// Active-track count over the lot's cameras. Throws std::out_of_range
    /// for a lot_id absent from the registry.
    int available_spots(const std::string& lot_id) const;

    /// Snapshot with monotonically increasing version; covers every
    /// registry lot (zero when no active tracks).
    OccupancySnapshot snapshot();

    const LotRegistry& registry() const { return registry_; }
    const TrackerConfig& config() const { return config_; }

    /// All live (tentative or active) tracks of one camera, for diagnostics.
    std::vector<SpotTrack> camera_tracks(const std::string& camera_id) const;

private:
    struct CameraState {
        std::string lot_id;
        std::int64_t last_frame = -1;
        std::vector<SpotTrack> tracks;
    };

    LotRegistry registry_;
    TrackerConfig config_;
    std::map<std::string, CameraState> cameras_;
    std::uint64_t next_track_id_ = 1;
    std::uint64_t next_snapshot_version_ = 1;
    std::int64_t max_timestamp_ms_ = 0;
};

} // namespace parkrec
