#include "coloc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coloc/errors.hpp"

namespace coloc {

namespace {

bool finite(Point2D p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

double dot(double ax, double ay, double bx, double by) {
    return ax * bx + ay * by;
}

double cross(double ax, double ay, double bx, double by) {
    return ax * by - ay * bx;
}

int orientation(Point2D a, Point2D b, Point2D c) {
    double v = cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

bool on_segment(Point2D a, Point2D b, Point2D p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Closed-segment intersection test, collinear overlaps included.
bool segments_intersect(Point2D p1, Point2D p2, Point2D q1, Point2D q2) {
    int o1 = orientation(p1, p2, q1);
    int o2 = orientation(p1, p2, q2);
    int o3 = orientation(q1, q2, p1);
    int o4 = orientation(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

double distance_to_polyline(Point2D p, const std::vector<Point2D>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        best = std::min(best, distance_point_segment(p, pts[i], pts[i + 1]));
    }
    return best;
}

double distance_to_ring(Point2D p, const std::vector<Point2D>& ring) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, distance_point_segment(p, ring[i], ring[(i + 1) % n]));
    }
    return best;
}

// Boundary distance below this counts as "on the boundary".
constexpr double kBoundaryEps = 1e-12;

}  // namespace

void BBox::include(Point2D p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
}

void BBox::include(const BBox& other) {
    min_x = std::min(min_x, other.min_x);
    min_y = std::min(min_y, other.min_y);
    max_x = std::max(max_x, other.max_x);
    max_y = std::max(max_y, other.max_y);
}

void BBox::inflate(double margin) {
    min_x -= margin;
    min_y -= margin;
    max_x += margin;
    max_y += margin;
}

bool BBox::contains(Point2D p) const {
    return min_x <= p.x && p.x <= max_x && min_y <= p.y && p.y <= max_y;
}

BBox shape_bbox(const Shape& shape) {
    const std::vector<Point2D>* pts = nullptr;
    if (const auto* point = std::get_if<Point2D>(&shape)) {
        return BBox{point->x, point->y, point->x, point->y};
    } else if (const auto* line = std::get_if<Polyline>(&shape)) {
        pts = &line->points;
    } else {
        pts = &std::get<Polygon>(shape).ring;
    }
    BBox box{pts->front().x, pts->front().y, pts->front().x, pts->front().y};
    for (Point2D p : *pts) box.include(p);
    return box;
}

std::size_t GridSpec::k1() const {
    return static_cast<std::size_t>(std::floor((max_x - min_x) / spacing)) + 1;
}

std::size_t GridSpec::k2() const {
    return static_cast<std::size_t>(std::floor((max_y - min_y) / spacing)) + 1;
}

std::size_t GridSpec::k3() const {
    return k1() * k2();
}

void GridSpec::validate() const {
    if (!std::isfinite(min_x) || !std::isfinite(min_y) || !std::isfinite(max_x) ||
        !std::isfinite(max_y) || !std::isfinite(spacing)) {
        throw ValidationError("grid: non-finite bounds or spacing");
    }
    if (max_x < min_x || max_y < min_y) {
        throw ValidationError("grid: max corner below min corner");
    }
    if (spacing <= 0.0) {
        throw ValidationError("grid: spacing must be positive");
    }
}

double WindVector::speed() const {
    return std::hypot(x, y);
}

BBox Buffer::bounds() const {
    if (const auto* c = std::get_if<CircleZone>(&zone)) {
        BBox box{c->center.x, c->center.y, c->center.x, c->center.y};
        box.inflate(c->radius);
        return box;
    }
    if (const auto* e = std::get_if<EllipseZone>(&zone)) {
        // Exact extents of a rotated ellipse.
        double a2 = e->semi_major * e->semi_major;
        double b2 = e->semi_minor * e->semi_minor;
        double ex = std::sqrt(a2 * e->axis_x * e->axis_x + b2 * e->axis_y * e->axis_y);
        double ey = std::sqrt(a2 * e->axis_y * e->axis_y + b2 * e->axis_x * e->axis_x);
        return BBox{e->center.x - ex, e->center.y - ey, e->center.x + ex, e->center.y + ey};
    }
    const auto& s = std::get<ShapeZone>(zone);
    BBox box = shape_bbox(s.base);
    box.inflate(s.radius);
    return box;
}

std::vector<Point2D> make_grid(const GridSpec& spec) {
    spec.validate();
    std::size_t nx = spec.k1();
    std::size_t ny = spec.k2();
    std::vector<Point2D> points;
    points.reserve(nx * ny);
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            points.push_back(Point2D{spec.min_x + static_cast<double>(i) * spec.spacing,
                                     spec.min_y + static_cast<double>(j) * spec.spacing});
        }
    }
    return points;
}

double buffer_radius_from_amount(double amount_kg, double r_min) {
    if (!(amount_kg >= 0.0)) {
        throw ValidationError("buffer radius: amount must be nonnegative");
    }
    if (!(r_min > 0.0)) {
        throw ValidationError("buffer radius: r_min must be positive");
    }
    if (amount_kg == 0.0) return r_min;
    return std::max(r_min, std::log(amount_kg));
}

Buffer morph_to_ellipse(Point2D center, double r, WindVector wind, double gamma) {
    if (!(r > 0.0)) throw ValidationError("morph: radius must be positive");
    if (!(gamma >= 0.0)) throw ValidationError("morph: gamma must be nonnegative");
    if (!std::isfinite(wind.x) || !std::isfinite(wind.y)) {
        throw ValidationError("morph: non-finite wind vector");
    }

    double speed = wind.speed();
    double stretch = gamma * speed;
    if (stretch == 0.0) {
        return Buffer{.owner = {}, .zone = CircleZone{center, r}};
    }

    double a = r + stretch;
    double b = (r * r) / a;  // keeps pi*a*b == pi*r^2
    double c = std::sqrt(a * a - b * b);
    double ux = wind.x / speed;
    double uy = wind.y / speed;
    // Source sits midway between the ellipse center and the upwind focus.
    Point2D ellipse_center{center.x + ux * (c / 2.0), center.y + uy * (c / 2.0)};
    return Buffer{.owner = {},
                  .zone = EllipseZone{.source = center,
                                      .center = ellipse_center,
                                      .semi_major = a,
                                      .semi_minor = b,
                                      .axis_x = ux,
                                      .axis_y = uy}};
}

double distance_point_segment(Point2D p, Point2D a, Point2D b) {
    double abx = b.x - a.x;
    double aby = b.y - a.y;
    double len2 = abx * abx + aby * aby;
    if (len2 == 0.0) return std::hypot(p.x - a.x, p.y - a.y);
    double t = dot(p.x - a.x, p.y - a.y, abx, aby) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * abx), p.y - (a.y + t * aby));
}

bool point_in_polygon(Point2D p, const Polygon& poly) {
    const auto& ring = poly.ring;
    std::size_t n = ring.size();
    if (distance_to_ring(p, ring) <= kBoundaryEps) return true;
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        bool crosses = (ring[i].y > p.y) != (ring[j].y > p.y);
        if (crosses) {
            double x_at = ring[j].x +
                          (ring[i].x - ring[j].x) * (p.y - ring[j].y) / (ring[i].y - ring[j].y);
            if (p.x < x_at) inside = !inside;
        }
    }
    return inside;
}

double distance_to_object(Point2D p, const SpatialObject& obj) {
    if (const auto* point = std::get_if<Point2D>(&obj.shape)) {
        return std::hypot(p.x - point->x, p.y - point->y);
    }
    if (const auto* line = std::get_if<Polyline>(&obj.shape)) {
        return distance_to_polyline(p, line->points);
    }
    const auto& poly = std::get<Polygon>(obj.shape);
    if (point_in_polygon(p, poly)) return 0.0;
    return distance_to_ring(p, poly.ring);
}

namespace {

std::optional<double> normalized_in_ellipse(Point2D p, const EllipseZone& e) {
    // Work in the ellipse frame: origin at the center, x along the major axis.
    double rel_x = p.x - e.center.x;
    double rel_y = p.y - e.center.y;
    double px = rel_x * e.axis_x + rel_y * e.axis_y;
    double py = -rel_x * e.axis_y + rel_y * e.axis_x;

    // The source lies on the major axis, but its frame coordinates are
    // computed with the same rotation as the query point so that p == source
    // cancels exactly.
    double src_x = (e.source.x - e.center.x) * e.axis_x + (e.source.y - e.center.y) * e.axis_y;
    double src_y = -(e.source.x - e.center.x) * e.axis_y + (e.source.y - e.center.y) * e.axis_x;

    double dx = px - src_x;
    double dy = py - src_y;
    double d = std::hypot(dx, dy);
    if (d == 0.0) return 0.0;

    // Boundary hit along the ray from the source through p:
    // ((src+t*d)_x/a)^2 + ((src+t*d)_y/b)^2 = 1, t > 0. The source is strictly
    // interior, so exactly one positive root exists.
    double inv_a2 = 1.0 / (e.semi_major * e.semi_major);
    double inv_b2 = 1.0 / (e.semi_minor * e.semi_minor);
    double qa = dx * dx * inv_a2 + dy * dy * inv_b2;
    double qb = 2.0 * (src_x * dx * inv_a2 + src_y * dy * inv_b2);
    double qc = src_x * src_x * inv_a2 + src_y * src_y * inv_b2 - 1.0;
    double t = (-qb + std::sqrt(qb * qb - 4.0 * qa * qc)) / (2.0 * qa);

    double x = 1.0 / t;  // d(source,p) / d(source,boundary)
    if (x > 1.0) return std::nullopt;
    return x;
}

}  // namespace

std::optional<double> normalized_buffer_distance(Point2D p, const Buffer& buf) {
    if (const auto* c = std::get_if<CircleZone>(&buf.zone)) {
        double x = std::hypot(p.x - c->center.x, p.y - c->center.y) / c->radius;
        if (x > 1.0) return std::nullopt;
        return x;
    }
    if (const auto* e = std::get_if<EllipseZone>(&buf.zone)) {
        return normalized_in_ellipse(p, *e);
    }
    const auto& s = std::get<ShapeZone>(buf.zone);
    SpatialObject probe{.id = {}, .feature = {}, .shape = s.base, .amount = {}, .fixed_radius = {}};
    double x = distance_to_object(p, probe) / s.radius;
    if (x > 1.0) return std::nullopt;
    return x;
}

void validate_object(const SpatialObject& obj) {
    if (obj.id.empty()) throw ValidationError("object: empty id");
    if (obj.feature.empty()) throw ValidationError("object '" + obj.id + "': empty feature");
    if (obj.amount && !(*obj.amount >= 0.0)) {
        throw ValidationError("object '" + obj.id + "': negative amount");
    }
    if (obj.fixed_radius && !(*obj.fixed_radius > 0.0)) {
        throw ValidationError("object '" + obj.id + "': fixed radius must be positive");
    }

    if (const auto* point = std::get_if<Point2D>(&obj.shape)) {
        if (!finite(*point)) throw ValidationError("object '" + obj.id + "': non-finite point");
        return;
    }
    if (const auto* line = std::get_if<Polyline>(&obj.shape)) {
        if (line->points.size() < 2) {
            throw ValidationError("object '" + obj.id + "': polyline needs >= 2 points");
        }
        for (Point2D p : line->points) {
            if (!finite(p)) throw ValidationError("object '" + obj.id + "': non-finite vertex");
        }
        return;
    }

    const auto& ring = std::get<Polygon>(obj.shape).ring;
    if (ring.size() < 3) {
        throw ValidationError("object '" + obj.id + "': polygon ring needs >= 3 points");
    }
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!finite(ring[i])) throw ValidationError("object '" + obj.id + "': non-finite vertex");
        if (ring[i] == ring[(i + 1) % n]) {
            throw ValidationError("object '" + obj.id + "': degenerate polygon edge");
        }
    }
    // Simplicity check: no two non-adjacent edges may meet.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_intersect(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n])) {
                throw ValidationError("object '" + obj.id + "': self-intersecting polygon");
            }
        }
    }
}

}  // namespace coloc
