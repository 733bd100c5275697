#include "parkrec/tracker.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace parkrec {

namespace {
using nlohmann::json;
}

TrackerConfig TrackerConfig::from_json(const std::string& text) {
    json j = json::parse(text);
    TrackerConfig cfg;
    cfg.tau_match = j.value("tau_match", cfg.tau_match);
    cfg.window = j.value("window", cfg.window);
    cfg.h_confirm = j.value("h_confirm", cfg.h_confirm);
    cfg.expiry = j.value("expiry", cfg.expiry);
    cfg.beta = j.value("beta", cfg.beta);
    cfg.confidence_threshold = j.value("confidence_threshold", cfg.confidence_threshold);
    cfg.validate();
    return cfg;
}

void TrackerConfig::validate() const {
    if (tau_match <= 0.0 || tau_match > 1.0) {
        throw std::invalid_argument("tau_match must be in (0, 1]");
    }
    if (window < 1 || h_confirm < 1 || h_confirm > window || expiry < 1) {
        throw std::invalid_argument("invalid debounce parameters");
    }
    if (beta <= 0.0 || beta > 1.0) {
        throw std::invalid_argument("beta must be in (0, 1]");
    }
    if (confidence_threshold < 0.0 || confidence_threshold > 1.0) {
        throw std::invalid_argument("confidence_threshold must be in [0, 1]");
    }
}

int SpotTrack::hits_in_window() const {
    return static_cast<int>(std::count(hit_window.begin(), hit_window.end(), true));
}

std::string OccupancySnapshot::canonical_json() const {
    // std::map keeps lot ids sorted; nlohmann sorts object keys.
    json j{{"version", version}, {"as_of_ms", as_of_ms}, {"spots", spots}};
    return j.dump();
}

OccupancyTracker::OccupancyTracker(LotRegistry registry, TrackerConfig config)
    : registry_(std::move(registry)), config_(config) {
    config_.validate();
}

ApplyCode OccupancyTracker::validate_event(const DetectionEvent& event) const {
    if (!registry_.contains(event.lot_id)) return ApplyCode::unknown_lot;
    const auto it = cameras_.find(event.camera_id);
    if (it != cameras_.end()) {
        if (it->second.lot_id != event.lot_id) return ApplyCode::unknown_lot;
        if (event.frame_index <= it->second.last_frame) return ApplyCode::stale_frame;
    }
    return ApplyCode::applied;
}

ApplyResult OccupancyTracker::apply_event(const DetectionEvent& event) {
    ApplyResult result;
    result.code = validate_event(event);
    if (result.code != ApplyCode::applied) return result;

    auto [it, inserted] = cameras_.try_emplace(event.camera_id);
    CameraState& cam = it->second;
    if (inserted) cam.lot_id = event.lot_id;
    cam.last_frame = event.frame_index;
    max_timestamp_ms_ = std::max(max_timestamp_ms_, event.timestamp_ms);

    std::vector<const BBox*> parking_boxes;
    for (const auto& det : event.detections) {
        if (det.object_class == ObjectClass::parking) {
            parking_boxes.push_back(&det.bbox);
        }
    }

    // Greedy association in descending IoU order; ties broken by detection
    // then track order for determinism.
    std::vector<std::tuple<double, std::size_t, std::size_t>> candidates;
    for (std::size_t d = 0; d < parking_boxes.size(); ++d) {
        for (std::size_t t = 0; t < cam.tracks.size(); ++t) {
            const double score = iou(*parking_boxes[d], cam.tracks[t].smoothed_bbox);
            if (score >= config_.tau_match) candidates.emplace_back(score, d, t);
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) {
                  if (std::get<0>(a) != std::get<0>(b)) {
                      return std::get<0>(a) > std::get<0>(b);
                  }
                  return std::tie(std::get<1>(a), std::get<2>(a)) <
                         std::tie(std::get<1>(b), std::get<2>(b));
              });

    std::vector<bool> det_used(parking_boxes.size(), false);
    std::vector<bool> track_hit(cam.tracks.size(), false);
    for (const auto& [score, d, t] : candidates) {
        if (det_used[d] || track_hit[t]) continue;
        det_used[d] = true;
        track_hit[t] = true;
        SpotTrack& track = cam.tracks[t];
        const BBox& box = *parking_boxes[d];
        const double b = config_.beta;
        track.smoothed_bbox =
            BBox((1.0 - b) * track.smoothed_bbox.x_min() + b * box.x_min(),
                 (1.0 - b) * track.smoothed_bbox.y_min() + b * box.y_min(),
                 (1.0 - b) * track.smoothed_bbox.x_max() + b * box.x_max(),
                 (1.0 - b) * track.smoothed_bbox.y_max() + b * box.y_max());
        track.last_matched_frame = event.frame_index;
        track.miss_streak = 0;
        result.matched.push_back(track.track_id);
    }

    for (std::size_t t = 0; t < cam.tracks.size(); ++t) {
        SpotTrack& track = cam.tracks[t];
        track.hit_window.push_back(track_hit[t]);
        if (static_cast<int>(track.hit_window.size()) > config_.window) {
            track.hit_window.pop_front();
        }
        if (!track_hit[t]) ++track.miss_streak;
    }

    for (std::size_t d = 0; d < parking_boxes.size(); ++d) {
        if (det_used[d]) continue;
        SpotTrack track{next_track_id_++, event.camera_id, *parking_boxes[d],
                        {true}, TrackState::tentative, event.frame_index, 0};
        result.created.push_back(track.track_id);
        cam.tracks.push_back(std::move(track));
    }

    std::erase_if(cam.tracks, [&](SpotTrack& track) {
        if (track.miss_streak >= config_.expiry) {
            result.expired.push_back(track.track_id);
            return true;
        }
        track.state = track.hits_in_window() >= config_.h_confirm
                          ? TrackState::active
                          : TrackState::tentative;
        return false;
    });

    return result;
}

int OccupancyTracker::available_spots(const std::string& lot_id) const {
    if (!registry_.contains(lot_id)) {
        throw std::out_of_range("unknown lot_id: " + lot_id);
    }
    int count = 0;
    for (const auto& [camera_id, cam] : cameras_) {
        if (cam.lot_id != lot_id) continue;
        for (const auto& track : cam.tracks) {
            if (track.state == TrackState::active) ++count;
        }
    }
    return count;
}

OccupancySnapshot OccupancyTracker::snapshot() {
    OccupancySnapshot snap;
    snap.version = next_snapshot_version_++;
    snap.as_of_ms = max_timestamp_ms_;
    for (const auto& lot : registry_.lots()) {
        snap.spots[lot.lot_id] = available_spots(lot.lot_id);
    }
    return snap;
}

std::vector<SpotTrack> OccupancyTracker::camera_tracks(
    const std::string& camera_id) const {
    const auto it = cameras_.find(camera_id);
    if (it == cameras_.end()) return {};
    return it->second.tracks;
}

} // namespace parkrec
