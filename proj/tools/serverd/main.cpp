// Long-running HTTP service daemon. Configuration precedence:
// command-line flags > environment variables > config file > defaults.
// Environment: PARKREC_LISTEN (host:port), PARKREC_REGISTRY, PARKREC_LOG.

#include <csignal>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "parkrec/server.hpp"

namespace {

parkrec::ParkingService* g_service = nullptr;

void handle_signal(int) {
    if (g_service) g_service->request_stop();
}

void apply_listen(parkrec::ServiceConfig& cfg, const std::string& listen) {
    const auto colon = listen.rfind(':');
    if (colon == std::string::npos) {
        throw CLI::ValidationError("--listen", "expected host:port");
    }
    cfg.listen_host = listen.substr(0, colon);
    cfg.listen_port = std::stoi(listen.substr(colon + 1));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parking occupancy and recommendation service"};

    std::string config_path, listen, registry_path, log_path;
    app.add_option("-c,--config", config_path, "JSON config file");
    app.add_option("--listen", listen, "host:port (port 0 picks a free one)");
    app.add_option("--registry", registry_path, "Lot registry JSON file");
    app.add_option("--log", log_path, "Append-only event log path");

    CLI11_PARSE(app, argc, argv);

    try {
        parkrec::ServiceConfig cfg;
        if (!config_path.empty()) {
            cfg = parkrec::ServiceConfig::from_file(config_path);
        }
        if (const char* env = std::getenv("PARKREC_LISTEN")) {
            apply_listen(cfg, env);
        }
        if (const char* env = std::getenv("PARKREC_REGISTRY")) {
            cfg.registry_path = env;
        }
        if (const char* env = std::getenv("PARKREC_LOG")) cfg.log_path = env;
        if (!listen.empty()) apply_listen(cfg, listen);
        if (!registry_path.empty()) cfg.registry_path = registry_path;
        if (!log_path.empty()) cfg.log_path = log_path;

        parkrec::ParkingService service(cfg);
        g_service = &service;
        std::signal(SIGINT, handle_signal);
        std::signal(SIGTERM, handle_signal);

        const int port = service.start();
        std::cout << "listening on " << cfg.listen_host << ':' << port << '\n';
        std::cout << "event log: " << service.config().log_path << '\n';

        service.wait();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
