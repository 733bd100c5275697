#pragma once

#include <cstdio>
#include <memory>
#include <string>

#include "parkrec/tracker.hpp"

namespace parkrec {

/// Append-only line-delimited log. Each line is a JSON object with a "type"
/// tag ("detection_event", "recommendation", "feedback"). append() returns
/// only after the line is flushed and fsynced.
class EventLog {
public:
    explicit EventLog(const std::string& path);
    ~EventLog();
    EventLog(const EventLog&) = delete;
    EventLog& operator=(const EventLog&) = delete;

    void append(const std::string& json_line);
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::FILE* file_ = nullptr;
};

struct ReplaySummary {
    std::size_t detection_events = 0;
    std::size_t recommendations = 0;
    std::size_t feedback_records = 0;
    std::vector<std::string> recommendation_ids; // in log order
};

/// Rebuild occupancy state from the detection-event subsequence of a log,
/// applying the tracker's confidence filter exactly as live ingestion does.
/// Missing file counts as an empty log. A corrupt line raises
/// std::runtime_error naming the line number.
ReplaySummary replay_log(const std::string& path, OccupancyTracker& tracker);

} // namespace parkrec
