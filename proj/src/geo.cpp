#include "droneplan/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace droneplan {

namespace {

inline double to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

void GeoPoint::validate() const {
    if (!(lat_deg >= -90.0 && lat_deg <= 90.0)) {
        throw validation_error("latitude out of [-90, 90]: " + std::to_string(lat_deg));
    }
    if (!(lon_deg >= -180.0 && lon_deg <= 180.0)) {
        throw validation_error("longitude out of [-180, 180]: " + std::to_string(lon_deg));
    }
}

double haversine_distance(const GeoPoint& a, const GeoPoint& b) {
    const double lat1 = to_rad(a.lat_deg);
    const double lat2 = to_rad(b.lat_deg);
    const double dlat = to_rad(b.lat_deg - a.lat_deg);
    const double dlon = to_rad(b.lon_deg - a.lon_deg);

    const double sin_lat = std::sin(dlat / 2.0);
    const double sin_lon = std::sin(dlon / 2.0);
    double h = sin_lat * sin_lat + std::cos(lat1) * std::cos(lat2) * sin_lon * sin_lon;
    h = std::clamp(h, 0.0, 1.0);
    return 2.0 * kEarthRadiusM * std::asin(std::sqrt(h));
}

DistanceMatrix::DistanceMatrix(const std::vector<GeoPoint>& points)
    : nodes_(points.size()), data_(points.size() * points.size(), 0.0) {
    // Fill the upper triangle row-band by row-band, then mirror. Rows are
    // split across a couple of workers; large instances make this the first
    // noticeable cost of a run.
    const std::size_t n = nodes_;
    auto fill_rows = [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t i = row_begin; i < row_end; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d = haversine_distance(points[i], points[j]);
                data_[i * n + j] = d;
                data_[j * n + i] = d;
            }
        }
    };

    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (n < 512 || hw == 1) {
        fill_rows(0, n);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(hw, 8);
    // Row i of the upper triangle holds n-i-1 entries, so split rows where the
    // remaining triangle area halves, not at equal row counts.
    auto cut = [&](std::size_t w) -> std::size_t {
        const double f = static_cast<double>(w) / static_cast<double>(workers);
        return static_cast<std::size_t>(static_cast<double>(n) * (1.0 - std::sqrt(1.0 - f)));
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(fill_rows, cut(w), w + 1 == workers ? n : cut(w + 1));
    }
    for (auto& t : pool) t.join();
}

}  // namespace droneplan
