#include "parkrec/recommend.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>

namespace parkrec {

namespace {

// Shared ranking core: candidates arrive in tie-break order.
Recommendation rank_candidates(std::vector<ScoredLot> candidates, double alpha,
                               std::optional<std::size_t> top_k) {
    if (candidates.empty()) throw NoAvailabilityError();

    // Single pass, O(1) extra state: strict improvement keeps the earliest
    // candidate on ties.
    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        if (candidates[i].objective < candidates[best_idx].objective) {
            best_idx = i;
        }
    }
    const std::string best_id = candidates[best_idx].lot_id;

    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const ScoredLot& a, const ScoredLot& b) {
                         return a.objective < b.objective;
                     });
    if (candidates.front().lot_id != best_id) {
        throw std::logic_error("single-pass argmin disagrees with ranking");
    }
    if (top_k && candidates.size() > *top_k) {
        candidates.resize(*top_k);
    }
    return Recommendation{next_recommendation_id(), alpha, std::move(candidates)};
}

} // namespace

double objective(double distance_km, int spots, double alpha) {
    if (spots < 1) {
        throw std::invalid_argument("objective requires spots >= 1 (skip full lots)");
    }
    if (!std::isfinite(distance_km) || distance_km < 0.0) {
        throw std::invalid_argument("distance must be finite and non-negative");
    }
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("alpha must be in [0, 1]");
    }
    return alpha * distance_km + (1.0 - alpha) / static_cast<double>(spots);
}

Recommendation recommend(const OccupancySnapshot& snapshot,
                         const LotRegistry& registry,
                         const RecommendationRequest& request) {
    if (registry.size() == 0) {
        throw std::invalid_argument("registry is empty");
    }
    std::vector<ScoredLot> candidates;
    for (const auto& lot : registry.lots()) {
        const auto it = snapshot.spots.find(lot.lot_id);
        const int m = it == snapshot.spots.end() ? 0 : it->second;
        if (m < 1) continue; // skip full lots
        const double d = geo::haversine_km(request.origin, lot.location);
        candidates.push_back(
            ScoredLot{lot.lot_id, d, m, objective(d, m, request.alpha)});
    }
    return rank_candidates(std::move(candidates), request.alpha, request.top_k);
}

Recommendation recommend_with_fixed_distances(
    const std::map<std::string, double>& distances_km,
    const std::map<std::string, int>& spots, double alpha,
    std::optional<std::size_t> top_k) {
    if (distances_km.empty()) {
        throw std::invalid_argument("no lots given");
    }
    if (distances_km.size() != spots.size() ||
        !std::equal(distances_km.begin(), distances_km.end(), spots.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; })) {
        throw std::invalid_argument("distance and spot maps must share keys");
    }
    std::vector<ScoredLot> candidates;
    for (const auto& [lot_id, d] : distances_km) {
        const int m = spots.at(lot_id);
        if (m < 1) continue;
        candidates.push_back(ScoredLot{lot_id, d, m, objective(d, m, alpha)});
    }
    return rank_candidates(std::move(candidates), alpha, top_k);
}

std::string next_recommendation_id() {
    static std::atomic<std::uint64_t> counter{0};
    static const std::uint64_t session_tag = [] {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }();
    char buf[40];
    std::snprintf(buf, sizeof(buf), "rec-%llu-%08llx",
                  static_cast<unsigned long long>(counter.fetch_add(1) + 1),
                  static_cast<unsigned long long>(session_tag & 0xffffffffu));
    return buf;
}

} // namespace parkrec
