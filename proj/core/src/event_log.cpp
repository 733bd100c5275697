#include "parkrec/event_log.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <unistd.h>

#include <json.hpp>

#include "parkrec/wire.hpp"

namespace parkrec {

namespace {
using nlohmann::json;
}

EventLog::EventLog(const std::string& path) : path_(path) {
    file_ = std::fopen(path.c_str(), "ab");
    if (!file_) throw std::runtime_error("cannot open log file: " + path);
}

EventLog::~EventLog() {
    if (file_) std::fclose(file_);
}

void EventLog::append(const std::string& json_line) {
    if (std::fwrite(json_line.data(), 1, json_line.size(), file_) !=
            json_line.size() ||
        std::fputc('\n', file_) == EOF) {
        throw std::runtime_error("log append failed: " + path_);
    }
    if (std::fflush(file_) != 0 || ::fsync(::fileno(file_)) != 0) {
        throw std::runtime_error("log flush failed: " + path_);
    }
}

ReplaySummary replay_log(const std::string& path, OccupancyTracker& tracker) {
    ReplaySummary summary;
    if (!std::filesystem::exists(path)) return summary;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open log file: " + path);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw std::runtime_error("corrupt log line " + std::to_string(line_no) +
                                     ": " + e.what());
        }
        const std::string type = j.value("type", "");
        if (type == "detection_event") {
            try {
                const auto event = wire::parse_event(j.at("event").dump());
                const auto filtered = filter_by_confidence(
                    event, tracker.config().confidence_threshold);
                const auto result = tracker.apply_event(filtered);
                if (result.code != ApplyCode::applied) {
                    throw std::runtime_error("event rejected during replay");
                }
            } catch (const std::exception& e) {
                throw std::runtime_error("corrupt log line " +
                                         std::to_string(line_no) + ": " + e.what());
            }
            ++summary.detection_events;
        } else if (type == "recommendation") {
            summary.recommendation_ids.push_back(
                j.value("recommendation_id", ""));
            ++summary.recommendations;
        } else if (type == "feedback") {
            ++summary.feedback_records;
        } else {
            throw std::runtime_error("corrupt log line " + std::to_string(line_no) +
                                     ": unknown record type '" + type + "'");
        }
    }
    return summary;
}

} // namespace parkrec
