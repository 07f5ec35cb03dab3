#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coloc/geometry.hpp"

namespace coloc {

/// One monitoring station: prevailing wind speed (km/h) and direction
/// (degrees, meteorological bearing in [0,360)).
struct WindStation {
    std::string id;
    Point2D location;
    double speed = 0.0;
    double direction_deg = 0.0;

    friend bool operator==(const WindStation&, const WindStation&) = default;
};

namespace wind {

/// (S, theta) -> components (S*sin(theta), S*cos(theta)).
WindVector decompose(double speed, double direction_deg);

/// Inverse of decompose: speed by the Euclidean norm, bearing by the
/// quadrant-specific inverse tangent chosen from the component signs.
/// Axis conventions: (0,+) -> 0, (+,0) -> 90, (0,-) -> 180, (-,0) -> 270;
/// the zero vector reads as calm, (0, 0).
std::pair<double, double> reconstruct(WindVector v);

/// Inverse-distance-weighted interpolation of the axial components, weight
/// d^(-power). A query within 1e-9 of a station returns that station's
/// components exactly. Angles are never interpolated directly: components
/// are, and the direction is reconstructed afterwards.
WindVector interpolate_components(std::span<const WindStation> stations, Point2D p,
                                  double power = 2.0);

/// CSV `station_id,x,y,speed,direction` with a header row.
std::vector<WindStation> read_stations_csv(std::istream& in);
std::vector<WindStation> read_stations_file(const std::string& path);

}  // namespace wind

/// Interpolated wind field backed by a station list.
struct WindField {
    std::vector<WindStation> stations;
    double idw_power = 2.0;

    WindVector at(Point2D p) const;
};

}  // namespace coloc
