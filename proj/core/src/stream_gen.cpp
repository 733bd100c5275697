#include "parkrec/stream_gen.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "parkrec/wire.hpp"

namespace parkrec {

namespace {
using nlohmann::json;

// Worst-case IoU of a w*h box translated by (a, a).
double worst_case_iou(double w, double h, double a) {
    if (a >= w || a >= h) return 0.0;
    const double inter = (w - a) * (h - a);
    return inter / (2.0 * w * h - inter);
}

} // namespace

StreamSpec StreamSpec::from_json(const std::string& text) {
    json j = json::parse(text);
    StreamSpec spec;
    spec.lot_id = j.at("lot_id").get<std::string>();
    spec.camera_id = j.at("camera_id").get<std::string>();
    for (const auto& b : j.at("spots")) {
        if (!b.is_array() || b.size() != 4) {
            throw std::invalid_argument("spot box must be [x_min,y_min,x_max,y_max]");
        }
        spec.spot_boxes.emplace_back(b[0].get<double>(), b[1].get<double>(),
                                     b[2].get<double>(), b[3].get<double>());
    }
    spec.frames = j.at("frames").get<int>();
    spec.jitter_px = j.value("jitter_px", 0.0);
    spec.dropout = j.value("dropout", 0.0);
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.start_timestamp_ms = j.value("start_timestamp_ms", std::int64_t{0});
    spec.frame_interval_ms = j.value("frame_interval_ms", std::int64_t{100});
    return spec;
}

StreamSpec StreamSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stream spec: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void StreamSpec::validate(double tau_match) const {
    if (frames < 1) throw std::invalid_argument("frame count must be >= 1");
    if (spot_boxes.empty()) throw std::invalid_argument("no spot boxes given");
    if (jitter_px < 0.0 || dropout < 0.0 || dropout >= 1.0) {
        throw std::invalid_argument("invalid jitter or dropout");
    }
    for (const auto& box : spot_boxes) {
        if (box.x_min() < jitter_px || box.y_min() < jitter_px) {
            throw std::invalid_argument(
                "spot box too close to image origin for the configured jitter");
        }
        const double wc = worst_case_iou(box.x_max() - box.x_min(),
                                         box.y_max() - box.y_min(), jitter_px);
        if (wc < tau_match) {
            std::ostringstream msg;
            msg << "jitter " << jitter_px << " px can push IoU to " << wc
                << ", below tau_match " << tau_match;
            throw std::invalid_argument(msg.str());
        }
    }
}

std::vector<DetectionEvent> generate_stream(const StreamSpec& spec) {
    spec.validate(0.5);
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> jitter(-spec.jitter_px, spec.jitter_px);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<DetectionEvent> events;
    events.reserve(static_cast<std::size_t>(spec.frames));
    for (int f = 0; f < spec.frames; ++f) {
        DetectionEvent event;
        event.camera_id = spec.camera_id;
        event.lot_id = spec.lot_id;
        event.frame_index = f;
        event.timestamp_ms = spec.start_timestamp_ms + f * spec.frame_interval_ms;
        for (const auto& box : spec.spot_boxes) {
            const double dx = spec.jitter_px > 0.0 ? jitter(rng) : 0.0;
            const double dy = spec.jitter_px > 0.0 ? jitter(rng) : 0.0;
            const bool dropped = spec.dropout > 0.0 && unit(rng) < spec.dropout;
            if (dropped) continue;
            event.detections.push_back(
                Detection{ObjectClass::parking,
                          BBox(box.x_min() + dx, box.y_min() + dy,
                               box.x_max() + dx, box.y_max() + dy),
                          1.0, std::nullopt});
        }
        events.push_back(std::move(event));
    }
    return events;
}

void write_stream(const std::vector<DetectionEvent>& events,
                  const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    for (const auto& event : events) {
        out << wire::serialize_event(event) << '\n';
    }
}

std::vector<DetectionEvent> read_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open event file: " + path);
    std::vector<DetectionEvent> events;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            events.push_back(wire::parse_event(line));
        } catch (const wire::WireError& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
    }
    return events;
}

} // namespace parkrec
