#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <httplib.h>
#include <json.hpp>

#include "parkrec/server.hpp"
#include "parkrec/stream_gen.hpp"
#include "parkrec/wire.hpp"

using namespace parkrec;
using nlohmann::json;

namespace {

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               ("parkrec_test_" + tag + "_" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

ServiceConfig test_config(const TempDir& dir) {
    ServiceConfig cfg;
    cfg.listen_port = 0; // pick a free port
    cfg.log_path = (dir.path / "events.log").string();
    return cfg;
}

std::string parking_line(const std::string& lot, const std::string& cam,
                         std::int64_t frame, std::vector<BBox> boxes) {
    DetectionEvent event{cam, lot, frame, frame * 100, {}};
    for (auto& box : boxes) {
        event.detections.push_back(
            Detection{ObjectClass::parking, box, 0.9, std::nullopt});
    }
    return wire::serialize_event(event);
}

const BBox kBoxA(50, 50, 150, 150);
const BBox kBoxB(200, 50, 300, 150);

} // namespace

TEST_CASE("service ingestion, status, recommendation, and feedback") {
    TempDir dir("service");
    ParkingService service(test_config(dir));
    const int port = service.start();
    httplib::Client client("127.0.0.1", port);

    SUBCASE("fresh service lists all lots with zero spots") {
        auto res = client.Get("/v1/lots");
        REQUIRE(res);
        const auto lots = json::parse(res->body);
        REQUIRE(lots.size() == 7);
        CHECK(lots[0]["lot_id"] == "1");
        for (const auto& lot : lots) {
            CHECK(lot["available_spots"] == 0);
            CHECK(lot["last_update_ms"].is_null());
        }
    }

    SUBCASE("well-formed events update counts; recommendations read them") {
        for (std::int64_t f = 0; f < 3; ++f) {
            auto res = client.Post("/v1/events",
                                   parking_line("3", "cam-3", f, {kBoxA, kBoxB}),
                                   "application/json");
            REQUIRE(res);
            CHECK(res->status == 200);
            CHECK(json::parse(res->body)["accepted"] == true);
        }
        auto lots = client.Get("/v1/lots");
        bool found = false;
        for (const auto& lot : json::parse(lots->body)) {
            if (lot["lot_id"] == "3") {
                CHECK(lot["available_spots"] == 2);
                CHECK(lot["last_update_ms"] == 200);
                found = true;
            }
        }
        CHECK(found);

        // read-your-writes: the next recommendation sees m = 2
        auto rec = client.Get("/v1/recommend?lat=-26.0158&lon=28.0064&alpha=0.5");
        REQUIRE(rec);
        const auto body = json::parse(rec->body);
        CHECK(body["best"]["lot_id"] == "3");
        CHECK(body["best"]["spots"] == 2);
        CHECK(body.contains("snapshot_version"));

        // feedback joins on the issued id
        const std::string rec_id = body["recommendation_id"].get<std::string>();
        auto fb = client.Post(
            "/v1/feedback",
            json{{"recommendation_id", rec_id}, {"accepted", true},
                 {"chosen_lot_id", "3"}}.dump(),
            "application/json");
        REQUIRE(fb);
        CHECK(json::parse(fb->body)["accepted"] == true);
        CHECK(json::parse(fb->body)["duplicate"] == false);

        auto fb2 = client.Post(
            "/v1/feedback",
            json{{"recommendation_id", rec_id}, {"accepted", false}}.dump(),
            "application/json");
        CHECK(json::parse(fb2->body)["duplicate"] == true);
    }

    SUBCASE("rejection codes") {
        auto unknown = client.Post("/v1/events",
                                   parking_line("99", "cam-x", 0, {kBoxA}),
                                   "application/json");
        REQUIRE(unknown);
        CHECK(unknown->status == 400);
        CHECK(json::parse(unknown->body)["code"] == "registry-miss");

        client.Post("/v1/events", parking_line("3", "cam-3", 5, {kBoxA}),
                    "application/json");
        auto stale = client.Post("/v1/events",
                                 parking_line("3", "cam-3", 5, {kBoxA}),
                                 "application/json");
        REQUIRE(stale);
        CHECK(stale->status == 409);
        CHECK(json::parse(stale->body)["code"] == "stale-frame");

        auto bad = client.Post("/v1/events", "{\"nope\":", "application/json");
        REQUIRE(bad);
        CHECK(bad->status == 400);
        CHECK(json::parse(bad->body)["code"] == "schema");

        // rejected records go to quarantine, not the main log
        std::ifstream quarantine(service.config().quarantine_path);
        int quarantined = 0;
        std::string line;
        while (std::getline(quarantine, line)) ++quarantined;
        CHECK(quarantined == 3);
    }

    SUBCASE("no availability is a structured response") {
        auto rec = client.Get("/v1/recommend?lat=-26.0&lon=28.0");
        REQUIRE(rec);
        CHECK(rec->status == 200);
        CHECK(json::parse(rec->body)["status"] == "no_availability");
    }

    SUBCASE("parameter validation") {
        CHECK(client.Get("/v1/recommend?lat=1")->status == 400);
        CHECK(client.Get("/v1/recommend?lat=1&lon=2&alpha=3")->status == 400);
        CHECK(client.Get("/v1/recommend?lat=95&lon=2")->status == 400);
        auto fb = client.Post("/v1/feedback",
                              json{{"recommendation_id", "rec-none-0"},
                                   {"accepted", true}}.dump(),
                              "application/json");
        CHECK(fb->status == 404);
        CHECK(json::parse(fb->body)["code"] == "unknown-recommendation");
    }

    service.stop();
}

TEST_CASE("log replay reconstructs state and known recommendations") {
    TempDir dir("replay");
    const ServiceConfig cfg = test_config(dir);
    std::string rec_id;
    {
        ParkingService service(cfg);
        const int port = service.start();
        httplib::Client client("127.0.0.1", port);
        for (std::int64_t f = 0; f < 4; ++f) {
            client.Post("/v1/events", parking_line("3", "cam-3", f, {kBoxA, kBoxB}),
                        "application/json");
        }
        auto rec = client.Get("/v1/recommend?lat=-26.0158&lon=28.0064");
        rec_id = json::parse(rec->body)["recommendation_id"].get<std::string>();
        service.stop();
    }

    // a second service over the same log sees the same state
    ParkingService revived(cfg);
    auto snap = revived.current_snapshot();
    CHECK(snap.spots.at("3") == 2);

    const int port = revived.start();
    httplib::Client client("127.0.0.1", port);
    auto fb = client.Post("/v1/feedback",
                          json{{"recommendation_id", rec_id}, {"accepted", true}}
                              .dump(),
                          "application/json");
    REQUIRE(fb);
    CHECK(json::parse(fb->body)["accepted"] == true);
    revived.stop();

    // replay is idempotent: two fresh trackers, identical canonical snapshots
    OccupancyTracker t1(LotRegistry::default_lots());
    OccupancyTracker t2(LotRegistry::default_lots());
    const auto s1 = replay_log(cfg.log_path, t1);
    replay_log(cfg.log_path, t2);
    CHECK(s1.detection_events == 4);
    CHECK(s1.recommendations == 1);
    CHECK(t1.snapshot().canonical_json() == t2.snapshot().canonical_json());
}

TEST_CASE("replay rejects corrupt lines with a line number") {
    TempDir dir("corrupt");
    const auto log_path = (dir.path / "events.log").string();
    {
        std::ofstream out(log_path);
        out << json{{"type", "detection_event"},
                    {"event", json::parse(parking_line("3", "cam-3", 0, {kBoxA}))}}
                   .dump()
            << '\n';
        out << "{broken\n";
    }
    OccupancyTracker tracker(LotRegistry::default_lots());
    CHECK_THROWS_WITH_AS(replay_log(log_path, tracker),
                         doctest::Contains("line 2"), std::runtime_error);
}

TEST_CASE("replay of a missing log is an empty state") {
    OccupancyTracker tracker(LotRegistry::default_lots());
    const auto summary = replay_log("/nonexistent/parkrec.log", tracker);
    CHECK(summary.detection_events == 0);
    for (const auto& lot : tracker.registry().lots()) {
        CHECK(tracker.available_spots(lot.lot_id) == 0);
    }
}
