#pragma once

#include <cstddef>
#include <vector>

#include "droneplan/errors.hpp"

namespace droneplan {

inline constexpr double kEarthRadiusM = 6'371'000.0;

struct GeoPoint {
    double lat_deg = 0.0;
    double lon_deg = 0.0;

    void validate() const;
};

// Great-circle distance in meters on a sphere of radius kEarthRadiusM.
double haversine_distance(const GeoPoint& a, const GeoPoint& b);

// Dense symmetric node-to-node distance table. Node 0 is the depot, node i
// (i >= 1) is customer i.
class DistanceMatrix {
  public:
    DistanceMatrix() = default;

    // Points in node order: depot first, then customers 1..n.
    explicit DistanceMatrix(const std::vector<GeoPoint>& points);

    double operator()(std::size_t i, std::size_t j) const { return data_[i * nodes_ + j]; }

    std::size_t node_count() const { return nodes_; }

  private:
    std::size_t nodes_ = 0;
    std::vector<double> data_;
};

}  // namespace droneplan
