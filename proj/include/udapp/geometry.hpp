#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace udapp {

// Scene units: 1 unit = 1 pixel at zoom 1.
struct Vec2 {
    double dx = 0.0;
    double dy = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    Vec2 operator-() const { return {-dx, -dy}; }
    Vec2 operator*(double s) const { return {dx * s, dy * s}; }
    Vec2 operator+(const Vec2& o) const { return {dx + o.dx, dy + o.dy}; }
    Vec2 operator-(const Vec2& o) const { return {dx - o.dx, dy - o.dy}; }
    double length() const { return std::hypot(dx, dy); }
    bool is_zero() const { return dx == 0.0 && dy == 0.0; }
};

struct Point2D {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2D&, const Point2D&) = default;
    Point2D operator+(const Vec2& v) const { return {x + v.dx, y + v.dy}; }
    Point2D operator-(const Vec2& v) const { return {x - v.dx, y - v.dy}; }
    Vec2 operator-(const Point2D& o) const { return {x - o.x, y - o.y}; }
};

struct RectF {
    double left = 0.0;
    double top = 0.0;
    double width = 0.0;
    double height = 0.0;

    friend bool operator==(const RectF&, const RectF&) = default;

    double right() const { return left + width; }
    double bottom() const { return top + height; }
    Point2D center() const { return {left + width / 2.0, top + height / 2.0}; }
    Point2D top_left() const { return {left, top}; }
    double area() const { return width * height; }

    bool contains(Point2D p) const {
        return p.x >= left && p.x <= right() && p.y >= top && p.y <= bottom();
    }
    // True if `inner` lies entirely inside this rectangle (boundary inclusive).
    bool contains(const RectF& inner) const {
        return inner.left >= left && inner.top >= top && inner.right() <= right() &&
               inner.bottom() <= bottom();
    }
    RectF translated(Vec2 d) const { return {left + d.dx, top + d.dy, width, height}; }
    // Moves every side outward by `by` (inward when negative); an axis that
    // would go negative collapses to zero at its center.
    RectF inflated(double by) const;
};

// Radians. Stored values are never normalized destructively; call
// `normalized()` only where angles are compared.
struct AngleRad {
    double value = 0.0;

    friend bool operator==(const AngleRad&, const AngleRad&) = default;
    double normalized() const;
};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Normalizes an angle into [0, 2π).
double normalize_angle(double a);

// atan2 of the vector, in (-π, π].
AngleRad polar_angle(Vec2 v);

bool is_finite(Point2D p);
bool is_finite(const RectF& r);

double distance(Point2D a, Point2D b);
double distance_to_segment(Point2D a, Point2D b, Point2D p);

bool point_in_circle(Point2D center, double radius, Point2D p);
bool point_in_strip(Point2D a, Point2D b, double halfwidth, Point2D p);
bool point_in_convex_polygon(std::span<const Point2D> vertices, Point2D p);

// Throws if the vertex list is not a simple convex polygon with non-zero area.
void validate_convex_polygon(std::span<const Point2D> vertices);

RectF rect_union(std::span<const RectF> rects);
RectF rect_intersection(const RectF& a, const RectF& b);
RectF rect_from_points(std::span<const Point2D> pts);

Point2D rotate_about(Point2D p, Point2D center, AngleRad theta);

std::vector<Point2D> rect_corners(const RectF& r);

double polygon_area(std::span<const Point2D> vertices);
// Part of a convex polygon inside r (possibly empty).
std::vector<Point2D> clip_polygon_to_rect(std::span<const Point2D> poly, const RectF& r);

} // namespace udapp
