#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace coloc {

struct Point2D {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Open chain of >= 2 vertices.
struct Polyline {
    std::vector<Point2D> points;

    friend bool operator==(const Polyline&, const Polyline&) = default;
};

/// Simple (non-self-intersecting) ring of >= 3 vertices. The closing edge
/// from back() to front() is implicit; a duplicated closing vertex is not
/// stored.
struct Polygon {
    std::vector<Point2D> ring;

    friend bool operator==(const Polygon&, const Polygon&) = default;
};

using Shape = std::variant<Point2D, Polyline, Polygon>;

/// One feature instance: a point, polyline, or polygon, optionally carrying
/// a release amount (kg) and/or an explicit buffer radius.
struct SpatialObject {
    std::string id;
    std::string feature;
    Shape shape;
    std::optional<double> amount;        // release quantity, kg; >= 0
    std::optional<double> fixed_radius;  // buffer radius override; > 0

    friend bool operator==(const SpatialObject&, const SpatialObject&) = default;
};

struct BBox {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    void include(Point2D p);
    void include(const BBox& other);
    void inflate(double margin);
    bool contains(Point2D p) const;

    friend bool operator==(const BBox&, const BBox&) = default;
};

BBox shape_bbox(const Shape& shape);

/// Regular grid over [min_x,max_x] x [min_y,max_y]. Point counts follow
/// k1 = floor((max_x-min_x)/spacing)+1 and likewise for k2; k3 = k1*k2.
struct GridSpec {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;
    double spacing = 1.0;

    std::size_t k1() const;
    std::size_t k2() const;
    std::size_t k3() const;
    void validate() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Planar wind components as produced by wind::decompose: x = S*sin(theta),
/// y = S*cos(theta) for a bearing theta measured clockwise from north. On a
/// map with x pointing east and y pointing north, (x, y) is the downwind
/// displacement direction.
struct WindVector {
    double x = 0.0;
    double y = 0.0;

    double speed() const;

    friend bool operator==(const WindVector&, const WindVector&) = default;
};

struct CircleZone {
    Point2D center;
    double radius = 0.0;
};

/// Wind-morphed buffer. The source (emission point) sits on the major axis,
/// displaced upwind from the ellipse center by half the focal distance.
struct EllipseZone {
    Point2D source;
    Point2D center;
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double axis_x = 1.0;  // unit vector along the major axis, pointing downwind
    double axis_y = 0.0;
};

/// Buffer of constant width around a polyline or polygon.
struct ShapeZone {
    Shape base;
    double radius = 0.0;
};

/// Influence zone around a spatial object.
struct Buffer {
    std::string owner;  // SpatialObject id
    std::variant<CircleZone, EllipseZone, ShapeZone> zone;

    BBox bounds() const;
};

/// Row-major grid points (y outer, x inner), exactly k1()*k2() of them.
std::vector<Point2D> make_grid(const GridSpec& spec);

/// max(r_min, ln(amount_kg)), in the same distance unit as r_min (km).
double buffer_radius_from_amount(double amount_kg, double r_min);

/// Stretch a circular buffer into an area-preserving ellipse: a = r+gamma*|v|,
/// b = r^2/a, major axis along the wind, center displaced downwind by half the
/// focal distance. Calm wind (or gamma = 0) returns the original circle.
Buffer morph_to_ellipse(Point2D center, double r, WindVector wind, double gamma);

/// Shortest distance from p to the object's geometry. Zero inside a polygon
/// or on any boundary.
double distance_to_object(Point2D p, const SpatialObject& obj);

/// Position of p within a buffer on a [0,1] scale: 0 at the source, 1 on the
/// boundary. Circles use d/r, ellipses the radial fraction along the ray from
/// the source point, shape buffers distance-to-shape over the buffer width.
/// nullopt when p lies outside the buffer.
std::optional<double> normalized_buffer_distance(Point2D p, const Buffer& buf);

double distance_point_segment(Point2D p, Point2D a, Point2D b);

/// Even-odd rule; boundary points count as inside.
bool point_in_polygon(Point2D p, const Polygon& poly);

/// Checks coordinate finiteness, vertex counts, ring simplicity, and sign
/// constraints on amount/fixed_radius. Throws ValidationError.
void validate_object(const SpatialObject& obj);

}  // namespace coloc
