#include <udapp/geometry.hpp>

#include <udapp/error.hpp>

#include <algorithm>
#include <string>

namespace udapp {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, std::string("non-finite ") + what);
}

void require_finite(Point2D p, const char* what) {
    require_finite(p.x, what);
    require_finite(p.y, what);
}

double cross(Point2D o, Point2D a, Point2D b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

} // namespace

RectF RectF::inflated(double by) const {
    RectF out{left - by, top - by, width + 2.0 * by, height + 2.0 * by};
    // Over-shrinking collapses that axis onto the center line.
    if (out.width < 0.0) {
        out.left = left + width / 2.0;
        out.width = 0.0;
    }
    if (out.height < 0.0) {
        out.top = top + height / 2.0;
        out.height = 0.0;
    }
    return out;
}

double AngleRad::normalized() const { return normalize_angle(value); }

double normalize_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative value can round up to exactly 2π
    if (r >= kTwoPi) r = 0.0;
    return r;
}

AngleRad polar_angle(Vec2 v) { return {std::atan2(v.dy, v.dx)}; }

bool is_finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

bool is_finite(const RectF& r) {
    return std::isfinite(r.left) && std::isfinite(r.top) && std::isfinite(r.width) &&
           std::isfinite(r.height);
}

double distance(Point2D a, Point2D b) { return std::hypot(b.x - a.x, b.y - a.y); }

double distance_to_segment(Point2D a, Point2D b, Point2D p) {
    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) return distance(a, p);
    double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance({a.x + t * vx, a.y + t * vy}, p);
}

bool point_in_circle(Point2D center, double radius, Point2D p) {
    require_finite(center, "circle center");
    require_finite(p, "point");
    require_finite(radius, "radius");
    if (!(radius > 0.0)) fail(ErrorCode::InvalidArgument, "circle radius must be positive");
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    return dx * dx + dy * dy <= radius * radius;
}

bool point_in_strip(Point2D a, Point2D b, double halfwidth, Point2D p) {
    require_finite(a, "strip end");
    require_finite(b, "strip end");
    require_finite(p, "point");
    require_finite(halfwidth, "halfwidth");
    if (a == b) fail(ErrorCode::InvalidArgument, "degenerate strip: a == b");
    if (!(halfwidth > 0.0)) fail(ErrorCode::InvalidArgument, "strip halfwidth must be positive");
    return distance_to_segment(a, b, p) <= halfwidth;
}

bool point_in_convex_polygon(std::span<const Point2D> v, Point2D p) {
    require_finite(p, "point");
    if (v.size() < 3) fail(ErrorCode::InvalidArgument, "polygon needs at least 3 vertices");
    bool any_pos = false;
    bool any_neg = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double c = cross(v[i], v[(i + 1) % v.size()], p);
        if (c > 0.0) any_pos = true;
        if (c < 0.0) any_neg = true;
        if (any_pos && any_neg) return false;
    }
    return true;
}

void validate_convex_polygon(std::span<const Point2D> v) {
    if (v.size() < 3) fail(ErrorCode::InvalidArgument, "polygon needs at least 3 vertices");
    for (const auto& q : v) require_finite(q, "polygon vertex");
    int sign = 0;
    double area2 = 0.0;
    double turning = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2D& a = v[i];
        const Point2D& b = v[(i + 1) % n];
        const Point2D& c = v[(i + 2) % n];
        const double cr = cross(a, b, c);
        if (cr != 0.0) {
            const int s = cr > 0.0 ? 1 : -1;
            if (sign != 0 && s != sign) fail(ErrorCode::InvalidArgument, "polygon is not convex");
            sign = s;
        }
        area2 += a.x * b.y - b.x * a.y;
        const Vec2 e1 = b - a;
        const Vec2 e2 = c - b;
        turning += std::atan2(e1.dx * e2.dy - e1.dy * e2.dx, e1.dx * e2.dx + e1.dy * e2.dy);
    }
    if (sign == 0 || area2 == 0.0) fail(ErrorCode::InvalidArgument, "polygon has zero area");
    // A simple convex polygon turns exactly once.
    if (std::fabs(std::fabs(turning) - kTwoPi) > 1e-6) fail(ErrorCode::InvalidArgument, "polygon is self-intersecting");
}

RectF rect_union(std::span<const RectF> rects) {
    if (rects.empty()) fail(ErrorCode::InvalidArgument, "rect_union of an empty sequence");
    double l = rects[0].left;
    double t = rects[0].top;
    double r = rects[0].right();
    double b = rects[0].bottom();
    for (const auto& x : rects.subspan(1)) {
        l = std::min(l, x.left);
        t = std::min(t, x.top);
        r = std::max(r, x.right());
        b = std::max(b, x.bottom());
    }
    if (l == rects[0].left && r == rects[0].right() && t == rects[0].top && b == rects[0].bottom())
        return rects[0];
    return {l, t, r - l, b - t};
}

RectF rect_intersection(const RectF& a, const RectF& b) {
    const double l = std::max(a.left, b.left);
    const double t = std::max(a.top, b.top);
    const double r = std::min(a.right(), b.right());
    const double btm = std::min(a.bottom(), b.bottom());
    if (r <= l || btm <= t) return {l, t, 0.0, 0.0};
    return {l, t, r - l, btm - t};
}

RectF rect_from_points(std::span<const Point2D> pts) {
    if (pts.empty()) fail(ErrorCode::InvalidArgument, "bounding box of no points");
    double l = pts[0].x, r = pts[0].x, t = pts[0].y, b = pts[0].y;
    for (const auto& p : pts) {
        l = std::min(l, p.x);
        r = std::max(r, p.x);
        t = std::min(t, p.y);
        b = std::max(b, p.y);
    }
    return {l, t, r - l, b - t};
}

Point2D rotate_about(Point2D p, Point2D center, AngleRad theta) {
    require_finite(p, "point");
    require_finite(center, "center");
    require_finite(theta.value, "angle");
    if (p == center) return p;
    const double c = std::cos(theta.value);
    const double s = std::sin(theta.value);
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    return {center.x + dx * c - dy * s, center.y + dx * s + dy * c};
}

double polygon_area(std::span<const Point2D> v) {
    double a2 = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2D& p = v[i];
        const Point2D& q = v[(i + 1) % v.size()];
        a2 += p.x * q.y - q.x * p.y;
    }
    return std::fabs(a2) / 2.0;
}

std::vector<Point2D> clip_polygon_to_rect(std::span<const Point2D> poly, const RectF& r) {
    std::vector<Point2D> cur(poly.begin(), poly.end());
    // Sutherland-Hodgman against each of the four half-planes.
    auto clip = [&cur](auto inside, auto cut) {
        std::vector<Point2D> out;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const Point2D a = cur[i];
            const Point2D b = cur[(i + 1) % cur.size()];
            const bool ia = inside(a), ib = inside(b);
            if (ia) out.push_back(a);
            if (ia != ib) out.push_back(cut(a, b));
        }
        cur = std::move(out);
    };
    auto at_x = [](double x) {
        return [x](Point2D a, Point2D b) { return Point2D{x, a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)}; };
    };
    auto at_y = [](double y) {
        return [y](Point2D a, Point2D b) { return Point2D{a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y), y}; };
    };
    const double l = r.left, t = r.top, rt = r.right(), b = r.bottom();
    clip([l](Point2D p) { return p.x >= l; }, at_x(l));
    if (!cur.empty()) clip([rt](Point2D p) { return p.x <= rt; }, at_x(rt));
    if (!cur.empty()) clip([t](Point2D p) { return p.y >= t; }, at_y(t));
    if (!cur.empty()) clip([b](Point2D p) { return p.y <= b; }, at_y(b));
    return cur;
}

std::vector<Point2D> rect_corners(const RectF& r) {
    return {{r.left, r.top}, {r.right(), r.top}, {r.right(), r.bottom()}, {r.left, r.bottom()}};
}

} // namespace udapp
