#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "parkrec/geo.hpp"

using parkrec::geo::GeoPoint;
using parkrec::geo::haversine_km;
using parkrec::geo::kEarthRadiusKm;

namespace {

GeoPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> lat(-90.0, 90.0);
    std::uniform_real_distribution<double> lon(-180.0, 180.0);
    return GeoPoint(lat(rng), lon(rng));
}

const GeoPoint kLot3(-26.0158, 28.0064);
const GeoPoint kLot5(-26.0209, 28.0139);

} // namespace

TEST_CASE("GeoPoint rejects out-of-range coordinates") {
    CHECK_THROWS_AS(GeoPoint(91.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GeoPoint(-90.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GeoPoint(0.0, 180.5), std::invalid_argument);
    CHECK_THROWS_AS(GeoPoint(std::nan(""), 0.0), std::invalid_argument);
    CHECK_NOTHROW(GeoPoint(90.0, -180.0));
}

TEST_CASE("haversine identity") {
    CHECK(haversine_km(kLot3, kLot3) == 0.0);
}

TEST_CASE("haversine symmetry is exact") {
    CHECK(haversine_km(kLot3, kLot5) == haversine_km(kLot5, kLot3));
}

TEST_CASE("lot 3 to lot 5 is about 0.94 km") {
    const double d = haversine_km(kLot3, kLot5);
    CHECK(d == doctest::Approx(0.94).epsilon(0.01));
    // cross-check with the planar approximation at this small separation
    const double planar = oracles::equirectangular_km(
        kLot3.lat_deg(), kLot3.lon_deg(), kLot5.lat_deg(), kLot5.lon_deg());
    CHECK(d == doctest::Approx(planar).epsilon(0.005));
}

TEST_CASE("haversine properties on random pairs") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 1000; ++i) {
        const GeoPoint a = random_point(rng);
        const GeoPoint b = random_point(rng);
        const double d = haversine_km(a, b);
        CHECK(d >= 0.0);
        CHECK(d <= oracles::kPi * kEarthRadiusKm + 1e-9);
        CHECK(d == haversine_km(b, a));

        const double ref = oracles::great_circle_km(a.lat_deg(), a.lon_deg(),
                                                    b.lat_deg(), b.lon_deg());
        CHECK(std::abs(d - ref) <= 1e-12 * std::max(1.0, ref));
    }
}

TEST_CASE("zero distance only for equal coordinates") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        const GeoPoint a = random_point(rng);
        CHECK(haversine_km(a, a) == 0.0);
        const GeoPoint b(a.lat_deg() * 0.5 + 1.0, a.lon_deg() * 0.5);
        if (!(b == a)) CHECK(haversine_km(a, b) > 0.0);
    }
}

TEST_CASE("triangle inequality on random triples") {
    std::mt19937_64 rng(4321);
    for (int i = 0; i < 1000; ++i) {
        const GeoPoint a = random_point(rng);
        const GeoPoint b = random_point(rng);
        const GeoPoint c = random_point(rng);
        CHECK(haversine_km(a, c) <=
              haversine_km(a, b) + haversine_km(b, c) + 1e-9);
    }
}

TEST_CASE("distance_matrix zero diagonal for identical lists") {
    const std::vector<GeoPoint> points{kLot3, kLot5, GeoPoint(-26.0709, 28.0644)};
    const auto matrix = parkrec::geo::distance_matrix(points, points);
    REQUIRE(matrix.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(matrix[i].size() == 3);
        CHECK(matrix[i][i] == 0.0);
    }
}

TEST_CASE("distance_matrix 1x1 equals haversine_km") {
    const auto matrix = parkrec::geo::distance_matrix({kLot3}, {kLot5});
    REQUIRE(matrix.size() == 1);
    REQUIRE(matrix[0].size() == 1);
    CHECK(matrix[0][0] == haversine_km(kLot3, kLot5));
}

TEST_CASE("distance_matrix rejects empty input") {
    CHECK_THROWS_AS(parkrec::geo::distance_matrix({}, {kLot3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parkrec::geo::distance_matrix({kLot3}, {}),
                    std::invalid_argument);
}

TEST_CASE("distance_matrix entries match the independent oracle") {
    std::mt19937_64 rng(99);
    std::vector<GeoPoint> origins{random_point(rng), random_point(rng)};
    std::vector<GeoPoint> dests{random_point(rng), random_point(rng),
                                random_point(rng)};
    const auto matrix = parkrec::geo::distance_matrix(origins, dests);
    for (std::size_t j = 0; j < origins.size(); ++j) {
        for (std::size_t i = 0; i < dests.size(); ++i) {
            const double ref = oracles::great_circle_km(
                origins[j].lat_deg(), origins[j].lon_deg(), dests[i].lat_deg(),
                dests[i].lon_deg());
            CHECK(matrix[j][i] == doctest::Approx(ref).epsilon(1e-12));
        }
    }
}
