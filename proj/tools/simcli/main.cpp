// Batch front end: scenario simulation, distance tables, recommendation
// grids, synthetic stream generation, offline tracking, and one-shot
// recommendations.
//
// Exit codes: 0 success, 1 validation error, 2 computation error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parkrec/recommend.hpp"
#include "parkrec/report.hpp"
#include "parkrec/scenario.hpp"
#include "parkrec/simulate.hpp"
#include "parkrec/stream_gen.hpp"
#include "parkrec/tracker.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int cmd_distances(const std::string& scenario_path) {
    const auto scenario = parkrec::Scenario::from_file(scenario_path);
    const auto table = parkrec::build_distance_table(scenario);
    std::cout << parkrec::distance_table_text(table);
    return kExitOk;
}

int cmd_grid(const std::string& scenario_path) {
    const auto scenario = parkrec::Scenario::from_file(scenario_path);
    const auto grid = parkrec::build_recommendation_grid(scenario);
    std::cout << parkrec::grid_text(grid);
    return kExitOk;
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_dir) {
    const auto scenario = parkrec::Scenario::from_file(scenario_path);
    std::filesystem::create_directories(out_dir);

    const auto grid = parkrec::build_recommendation_grid(scenario);
    write_file(out_dir + "/recommendations.csv", parkrec::grid_csv(grid));
    write_file(out_dir + "/recommendation_scores.csv",
               parkrec::grid_scores_csv(grid));
    write_file(out_dir + "/recommendations.txt", parkrec::grid_text(grid));
    std::cout << parkrec::grid_text(grid);

    if (scenario.origins) {
        const auto table = parkrec::build_distance_table(scenario);
        write_file(out_dir + "/distances.csv", parkrec::distance_table_csv(table));
        write_file(out_dir + "/distances.txt", parkrec::distance_table_text(table));
        std::cout << '\n' << parkrec::distance_table_text(table);
    }
    std::cout << "\nreports written to " << out_dir << '\n';
    return kExitOk;
}

int cmd_gen_stream(const std::string& spec_path, const std::string& out_path) {
    const auto spec = parkrec::StreamSpec::from_file(spec_path);
    const auto events = parkrec::generate_stream(spec);
    parkrec::write_stream(events, out_path);
    std::cout << events.size() << " events written to " << out_path << '\n';
    return kExitOk;
}

int cmd_track(const std::string& log_path, const std::string& registry_path) {
    auto registry = registry_path.empty()
                        ? parkrec::LotRegistry::default_lots()
                        : parkrec::LotRegistry::from_file(registry_path);
    parkrec::OccupancyTracker tracker(registry);
    for (const auto& event : parkrec::read_stream(log_path)) {
        const auto filtered = parkrec::filter_by_confidence(
            event, tracker.config().confidence_threshold);
        const auto result = tracker.apply_event(filtered);
        if (result.code != parkrec::ApplyCode::applied) {
            std::cerr << "event rejected (frame " << event.frame_index
                      << ", camera " << event.camera_id << ")\n";
            return kExitComputation;
        }
    }
    for (const auto& lot : registry.lots()) {
        std::cout << lot.lot_id << "  " << tracker.available_spots(lot.lot_id)
                  << '\n';
    }
    return kExitOk;
}

int cmd_recommend(double lat, double lon, double alpha,
                  const std::string& registry_path,
                  const std::string& spots_json) {
    auto registry = registry_path.empty()
                        ? parkrec::LotRegistry::default_lots()
                        : parkrec::LotRegistry::from_file(registry_path);
    parkrec::OccupancySnapshot snapshot;
    snapshot.version = 1;
    if (!spots_json.empty()) {
        const auto j = nlohmann::json::parse(spots_json);
        for (const auto& [lot_id, m] : j.items()) {
            snapshot.spots[lot_id] = m.get<int>();
        }
    } else {
        // No live state in one-shot mode: treat every lot as having one spot
        // so the ranking is purely distance-driven.
        for (const auto& lot : registry.lots()) snapshot.spots[lot.lot_id] = 1;
    }

    try {
        const auto rec = parkrec::recommend(
            snapshot, registry,
            parkrec::RecommendationRequest{parkrec::geo::GeoPoint(lat, lon),
                                           alpha, std::nullopt});
        std::cout << "best: lot " << rec.best().lot_id << '\n';
        for (const auto& s : rec.ranked) {
            std::cout << "  lot " << s.lot_id << "  d=" << s.distance_km
                      << " km  m=" << s.spots << "  objective=" << s.objective
                      << '\n';
        }
        return kExitOk;
    } catch (const parkrec::NoAvailabilityError& e) {
        std::cerr << e.what() << '\n';
        return kExitComputation;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parking occupancy and recommendation simulator"};
    app.require_subcommand(1);

    std::string scenario_path, out_dir = "reports", spec_path, out_path;
    std::string log_path, registry_path, spots_json;
    double lat = 0, lon = 0, alpha = 0.5;

    auto* simulate = app.add_subcommand("simulate", "Run a scenario and write reports");
    simulate->add_option("scenario", scenario_path)->required();
    simulate->add_option("-o,--out-dir", out_dir, "Report output directory");

    auto* distances = app.add_subcommand("distances", "Print the origin/lot distance table");
    distances->add_option("scenario", scenario_path)->required();

    auto* grid = app.add_subcommand("grid", "Print the alpha/origin recommendation grid");
    grid->add_option("scenario", scenario_path)->required();

    auto* gen = app.add_subcommand("gen-stream", "Generate a synthetic detection stream");
    gen->add_option("spec", spec_path)->required();
    gen->add_option("-o,--output", out_path)->required();

    auto* track = app.add_subcommand("track", "Replay an event log and print final per-lot counts");
    track->add_option("eventlog", log_path)->required();
    track->add_option("--registry", registry_path);

    auto* rec = app.add_subcommand("recommend", "One-shot offline recommendation");
    rec->add_option("--lat", lat)->required();
    rec->add_option("--lon", lon)->required();
    rec->add_option("--alpha", alpha)->check(CLI::Range(0.0, 1.0));
    rec->add_option("--registry", registry_path);
    rec->add_option("--spots", spots_json, "JSON object lot_id -> count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(scenario_path, out_dir);
        if (distances->parsed()) return cmd_distances(scenario_path);
        if (grid->parsed()) return cmd_grid(scenario_path);
        if (gen->parsed()) return cmd_gen_stream(spec_path, out_path);
        if (track->parsed()) return cmd_track(log_path, registry_path);
        if (rec->parsed()) return cmd_recommend(lat, lon, alpha, registry_path, spots_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitValidation;
}
