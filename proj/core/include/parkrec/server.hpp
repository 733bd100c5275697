#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "parkrec/event_log.hpp"
#include "parkrec/recommend.hpp"
#include "parkrec/tracker.hpp"

namespace httplib {
class Server;
}

namespace parkrec {

struct ServiceConfig {
    std::string listen_host = "127.0.0.1";
    int listen_port = 8080;
    std::string registry_path;   // empty: built-in default registry
    std::string log_path = "parkrec-events.log";
    std::string quarantine_path; // default: log_path + ".quarantine"
    TrackerConfig tracker;
    int snapshot_interval = 1000; // state snapshot file every S events
    int queue_depth = 1024;       // max concurrent ingest requests

    static ServiceConfig from_json(const std::string& text);
    static ServiceConfig from_file(const std::string& path);
};

/// HTTP service over the occupancy tracker and recommender:
///   POST /v1/events     ingest one wire-format detection event
///   GET  /v1/lots       registry plus live counts
///   GET  /v1/recommend  ?lat=&lon=&alpha=&k=
///   POST /v1/feedback   driver feedback joined on recommendation_id
/// An existing log at log_path is replayed on construction.
class ParkingService {
public:
    explicit ParkingService(ServiceConfig config);
    ~ParkingService();

    /// Bind and serve on a background thread; returns the bound port
    /// (listen_port 0 picks a free one).
    int start();
    void stop();

    /// Ask the listener to exit without joining (signal-handler safe-ish);
    /// pair with wait().
    void request_stop();

    /// Block until the serving thread exits.
    void wait();

    const ServiceConfig& config() const { return config_; }

    /// Current per-lot counts, for tests and diagnostics.
    OccupancySnapshot current_snapshot();

private:
    void setup_routes();
    void quarantine(const std::string& body, const std::string& reason);

    ServiceConfig config_;
    std::mutex mutex_;
    std::unique_ptr<OccupancyTracker> tracker_;
    std::unique_ptr<EventLog> log_;
    std::set<std::string> known_recommendations_;
    std::set<std::string> feedback_seen_;
    std::map<std::string, std::int64_t> lot_last_update_ms_;
    std::size_t accepted_events_ = 0;
    std::atomic<int> inflight_ingests_{0};

    std::unique_ptr<httplib::Server> http_;
    std::thread serve_thread_;
    int bound_port_ = 0;
};

} // namespace parkrec
