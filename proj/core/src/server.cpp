#include "parkrec/server.hpp"

#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "parkrec/wire.hpp"

namespace parkrec {

namespace {
using nlohmann::json;

json scored_lot_json(const ScoredLot& s) {
    return json{{"lot_id", s.lot_id},
                {"distance_km", s.distance_km},
                {"spots", s.spots},
                {"objective", s.objective}};
}

} // namespace

ServiceConfig ServiceConfig::from_json(const std::string& text) {
    json j = json::parse(text);
    ServiceConfig cfg;
    cfg.listen_host = j.value("listen_host", cfg.listen_host);
    cfg.listen_port = j.value("listen_port", cfg.listen_port);
    cfg.registry_path = j.value("registry_path", cfg.registry_path);
    cfg.log_path = j.value("log_path", cfg.log_path);
    cfg.quarantine_path = j.value("quarantine_path", cfg.quarantine_path);
    cfg.snapshot_interval = j.value("snapshot_interval", cfg.snapshot_interval);
    cfg.queue_depth = j.value("queue_depth", cfg.queue_depth);
    if (j.contains("tracker")) {
        cfg.tracker = TrackerConfig::from_json(j["tracker"].dump());
    }
    return cfg;
}

ServiceConfig ServiceConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

ParkingService::ParkingService(ServiceConfig config)
    : config_(std::move(config)) {
    if (config_.quarantine_path.empty()) {
        config_.quarantine_path = config_.log_path + ".quarantine";
    }
    LotRegistry registry = config_.registry_path.empty()
                               ? LotRegistry::default_lots()
                               : LotRegistry::from_file(config_.registry_path);
    tracker_ = std::make_unique<OccupancyTracker>(std::move(registry),
                                                  config_.tracker);
    const ReplaySummary replayed = replay_log(config_.log_path, *tracker_);
    accepted_events_ = replayed.detection_events;
    for (const auto& id : replayed.recommendation_ids) {
        known_recommendations_.insert(id);
    }
    log_ = std::make_unique<EventLog>(config_.log_path);
    http_ = std::make_unique<httplib::Server>();
    setup_routes();
}

ParkingService::~ParkingService() { stop(); }

void ParkingService::quarantine(const std::string& body,
                                const std::string& reason) {
    std::ofstream out(config_.quarantine_path, std::ios::app);
    out << json{{"reason", reason}, {"body", body}}.dump() << '\n';
}

void ParkingService::setup_routes() {
    http_->Post("/v1/events", [this](const httplib::Request& req,
                                     httplib::Response& res) {
        struct InflightGuard {
            std::atomic<int>& counter;
            ~InflightGuard() { --counter; }
        } guard{inflight_ingests_};
        if (++inflight_ingests_ > config_.queue_depth) {
            res.status = 503;
            res.set_content(json{{"accepted", false}, {"code", "overloaded"}}.dump(),
                            "application/json");
            return;
        }

        DetectionEvent event;
        try {
            event = wire::parse_event(req.body);
        } catch (const wire::WireError& e) {
            quarantine(req.body, e.what());
            res.status = 400;
            res.set_content(json{{"accepted", false},
                                 {"code", "schema"},
                                 {"detail", e.what()}}.dump(),
                            "application/json");
            return;
        }

        std::lock_guard lock(mutex_);
        switch (tracker_->validate_event(event)) {
            case ApplyCode::unknown_lot:
                quarantine(req.body, "registry-miss");
                res.status = 400;
                res.set_content(
                    json{{"accepted", false}, {"code", "registry-miss"}}.dump(),
                    "application/json");
                return;
            case ApplyCode::stale_frame:
                quarantine(req.body, "stale-frame");
                res.status = 409;
                res.set_content(
                    json{{"accepted", false}, {"code", "stale-frame"}}.dump(),
                    "application/json");
                return;
            case ApplyCode::applied:
                break;
        }

        // Durable append before acknowledgment; the raw event is logged and
        // the confidence filter re-applied on replay.
        log_->append(json{{"type", "detection_event"},
                          {"event", json::parse(wire::serialize_event(event))}}
                         .dump());
        const auto filtered =
            filter_by_confidence(event, config_.tracker.confidence_threshold);
        tracker_->apply_event(filtered);
        lot_last_update_ms_[event.lot_id] = event.timestamp_ms;

        if (++accepted_events_ % static_cast<std::size_t>(
                                     std::max(1, config_.snapshot_interval)) ==
            0) {
            std::ofstream snap(config_.log_path + ".snapshot",
                               std::ios::trunc | std::ios::binary);
            snap << tracker_->snapshot().canonical_json() << '\n';
        }
        res.set_content(json{{"accepted", true}}.dump(), "application/json");
    });

    http_->Get("/v1/lots", [this](const httplib::Request&,
                                  httplib::Response& res) {
        std::lock_guard lock(mutex_);
        json out = json::array();
        for (const auto& lot : tracker_->registry().lots()) {
            json entry{{"lot_id", lot.lot_id},
                       {"name", lot.name},
                       {"lat", lot.location.lat_deg()},
                       {"lon", lot.location.lon_deg()},
                       {"available_spots", tracker_->available_spots(lot.lot_id)}};
            const auto it = lot_last_update_ms_.find(lot.lot_id);
            entry["last_update_ms"] =
                it == lot_last_update_ms_.end() ? json(nullptr) : json(it->second);
            out.push_back(std::move(entry));
        }
        res.set_content(out.dump(), "application/json");
    });

    http_->Get("/v1/recommend", [this](const httplib::Request& req,
                                       httplib::Response& res) {
        double lat, lon, alpha = 0.5;
        std::optional<std::size_t> top_k;
        try {
            if (!req.has_param("lat") || !req.has_param("lon")) {
                throw std::invalid_argument("lat and lon are required");
            }
            lat = std::stod(req.get_param_value("lat"));
            lon = std::stod(req.get_param_value("lon"));
            if (req.has_param("alpha")) {
                alpha = std::stod(req.get_param_value("alpha"));
            }
            if (alpha < 0.0 || alpha > 1.0) {
                throw std::invalid_argument("alpha must be in [0, 1]");
            }
            if (req.has_param("k")) {
                const long k = std::stol(req.get_param_value("k"));
                if (k < 1) throw std::invalid_argument("k must be >= 1");
                top_k = static_cast<std::size_t>(k);
            }
        } catch (const std::exception& e) {
            res.status = 400;
            res.set_content(json{{"error", e.what()}}.dump(), "application/json");
            return;
        }

        std::lock_guard lock(mutex_);
        OccupancySnapshot snap = tracker_->snapshot();
        try {
            const RecommendationRequest request{geo::GeoPoint(lat, lon), alpha,
                                                top_k};
            const Recommendation rec =
                recommend(snap, tracker_->registry(), request);

            json ranked = json::array();
            for (const auto& s : rec.ranked) ranked.push_back(scored_lot_json(s));
            json out{{"recommendation_id", rec.recommendation_id},
                     {"snapshot_version", snap.version},
                     {"alpha", alpha},
                     {"best", scored_lot_json(rec.best())},
                     {"ranked", std::move(ranked)}};

            log_->append(json{{"type", "recommendation"},
                              {"recommendation_id", rec.recommendation_id},
                              {"alpha", alpha},
                              {"lat", lat},
                              {"lon", lon},
                              {"best_lot", rec.best().lot_id},
                              {"snapshot_version", snap.version}}
                             .dump());
            known_recommendations_.insert(rec.recommendation_id);
            res.set_content(out.dump(), "application/json");
        } catch (const NoAvailabilityError&) {
            res.set_content(json{{"status", "no_availability"},
                                 {"snapshot_version", snap.version}}.dump(),
                            "application/json");
        } catch (const std::invalid_argument& e) {
            res.status = 400;
            res.set_content(json{{"error", e.what()}}.dump(), "application/json");
        }
    });

    http_->Post("/v1/feedback", [this](const httplib::Request& req,
                                       httplib::Response& res) {
        json j;
        try {
            j = json::parse(req.body);
            if (!j.contains("recommendation_id") ||
                !j["recommendation_id"].is_string() ||
                !j.contains("accepted") || !j["accepted"].is_boolean()) {
                throw std::invalid_argument(
                    "feedback needs recommendation_id and accepted");
            }
        } catch (const std::exception& e) {
            res.status = 400;
            res.set_content(json{{"accepted", false},
                                 {"code", "schema"},
                                 {"detail", e.what()}}.dump(),
                            "application/json");
            return;
        }
        const std::string rec_id = j["recommendation_id"].get<std::string>();

        std::lock_guard lock(mutex_);
        if (!known_recommendations_.contains(rec_id)) {
            res.status = 404;
            res.set_content(
                json{{"accepted", false}, {"code", "unknown-recommendation"}}.dump(),
                "application/json");
            return;
        }
        const bool duplicate = !feedback_seen_.insert(rec_id).second;
        json record{{"type", "feedback"},
                    {"recommendation_id", rec_id},
                    {"accepted", j["accepted"].get<bool>()},
                    {"duplicate", duplicate}};
        if (j.contains("chosen_lot_id")) record["chosen_lot_id"] = j["chosen_lot_id"];
        if (j.contains("submitted_at_ms")) {
            record["submitted_at_ms"] = j["submitted_at_ms"];
        }
        log_->append(record.dump());
        res.set_content(json{{"accepted", true}, {"duplicate", duplicate}}.dump(),
                        "application/json");
    });
}

int ParkingService::start() {
    if (config_.listen_port == 0) {
        bound_port_ = http_->bind_to_any_port(config_.listen_host);
    } else {
        if (!http_->bind_to_port(config_.listen_host, config_.listen_port)) {
            throw std::runtime_error("cannot bind " + config_.listen_host + ":" +
                                     std::to_string(config_.listen_port));
        }
        bound_port_ = config_.listen_port;
    }
    serve_thread_ = std::thread([this] { http_->listen_after_bind(); });
    http_->wait_until_ready();
    return bound_port_;
}

void ParkingService::stop() {
    if (http_) http_->stop();
    wait();
}

void ParkingService::request_stop() {
    if (http_) http_->stop();
}

void ParkingService::wait() {
    if (serve_thread_.joinable()) serve_thread_.join();
}

OccupancySnapshot ParkingService::current_snapshot() {
    std::lock_guard lock(mutex_);
    return tracker_->snapshot();
}

} // namespace parkrec
