#include "coloc/wind.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "coloc/errors.hpp"

namespace coloc {
namespace wind {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;
constexpr double kRadPerDeg = std::numbers::pi / 180.0;

// Query points closer than this coincide with a station.
constexpr double kStationEps = 1e-9;

}  // namespace

WindVector decompose(double speed, double direction_deg) {
    if (!(speed >= 0.0)) throw ValidationError("wind: speed must be nonnegative");
    if (!(direction_deg >= 0.0 && direction_deg < 360.0)) {
        throw ValidationError("wind: direction must lie in [0,360)");
    }
    double rad = direction_deg * kRadPerDeg;
    return WindVector{speed * std::sin(rad), speed * std::cos(rad)};
}

std::pair<double, double> reconstruct(WindVector v) {
    double speed = v.speed();
    if (v.x == 0.0 && v.y == 0.0) return {0.0, 0.0};  // calm
    if (v.x == 0.0) return {speed, v.y > 0.0 ? 0.0 : 180.0};
    if (v.y == 0.0) return {speed, v.x > 0.0 ? 90.0 : 270.0};

    // One inverse-tangent formula per quadrant of (x, y) signs; each maps
    // onto the bearing range the quadrant covers.
    double deg;
    if (v.x > 0.0 && v.y > 0.0) {
        deg = std::atan(v.x / v.y) * kDegPerRad;  // (0, 90)
    } else if (v.x > 0.0 && v.y < 0.0) {
        deg = 90.0 + std::atan(-v.y / v.x) * kDegPerRad;  // (90, 180)
    } else if (v.x < 0.0 && v.y < 0.0) {
        deg = 180.0 + std::atan(v.x / v.y) * kDegPerRad;  // (180, 270)
    } else {
        deg = 270.0 + std::atan(-v.y / v.x) * kDegPerRad;  // (270, 360)
    }
    if (deg >= 360.0) deg -= 360.0;
    return {speed, deg};
}

WindVector interpolate_components(std::span<const WindStation> stations, Point2D p,
                                  double power) {
    if (stations.empty()) throw ValidationError("wind: no stations to interpolate from");

    double weight_sum = 0.0;
    double x_sum = 0.0;
    double y_sum = 0.0;
    for (const auto& station : stations) {
        double d = std::hypot(p.x - station.location.x, p.y - station.location.y);
        if (d < kStationEps) {
            return decompose(station.speed, station.direction_deg);
        }
        double w = std::pow(d, -power);
        WindVector v = decompose(station.speed, station.direction_deg);
        weight_sum += w;
        x_sum += w * v.x;
        y_sum += w * v.y;
    }
    return WindVector{x_sum / weight_sum, y_sum / weight_sum};
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_num(const std::string& text, std::size_t line_no, const char* what) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("stations csv line " + std::to_string(line_no) + ": bad " +
                              what + " '" + text + "'");
    }
}

}  // namespace

std::vector<WindStation> read_stations_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("stations csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "station_id,x,y,speed,direction") {
        throw ValidationError("stations csv: expected header 'station_id,x,y,speed,direction'");
    }

    std::vector<WindStation> stations;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 5) {
            throw ValidationError("stations csv line " + std::to_string(line_no) +
                                  ": expected 5 fields");
        }
        WindStation station;
        station.id = fields[0];
        station.location.x = parse_num(fields[1], line_no, "x");
        station.location.y = parse_num(fields[2], line_no, "y");
        station.speed = parse_num(fields[3], line_no, "speed");
        station.direction_deg = parse_num(fields[4], line_no, "direction");
        if (station.speed < 0.0) {
            throw ValidationError("stations csv line " + std::to_string(line_no) +
                                  ": negative speed");
        }
        if (station.direction_deg < 0.0 || station.direction_deg >= 360.0) {
            throw ValidationError("stations csv line " + std::to_string(line_no) +
                                  ": direction outside [0,360)");
        }
        stations.push_back(std::move(station));
    }
    return stations;
}

std::vector<WindStation> read_stations_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open stations file '" + path + "'");
    return read_stations_csv(in);
}

}  // namespace wind

WindVector WindField::at(Point2D p) const {
    return wind::interpolate_components(stations, p, idw_power);
}

}  // namespace coloc
