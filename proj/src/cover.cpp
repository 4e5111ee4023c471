#include <udapp/cover.hpp>

#include <udapp/error.hpp>

#include <string>

namespace udapp {

ShapeKind shape_kind(const NodeShape& s) {
    return static_cast<ShapeKind>(s.index());
}

bool shape_contains(const NodeShape& s, Point2D p) {
    struct Visitor {
        Point2D p;
        bool operator()(const CircleShape& c) const { return point_in_circle(c.center, c.radius, p); }
        bool operator()(const StripShape& st) const { return point_in_strip(st.a, st.b, st.halfwidth, p); }
        bool operator()(const PolygonShape& pg) const { return point_in_convex_polygon(pg.vertices, p); }
    };
    return std::visit(Visitor{p}, s);
}

void validate_shape(const NodeShape& s) {
    struct Visitor {
        void operator()(const CircleShape& c) const {
            if (!is_finite(c.center) || !std::isfinite(c.radius) || !(c.radius > 0.0))
                fail(ErrorCode::InvalidArgument, "invalid circle node");
        }
        void operator()(const StripShape& st) const {
            if (!is_finite(st.a) || !is_finite(st.b) || st.a == st.b || !std::isfinite(st.halfwidth) ||
                !(st.halfwidth > 0.0))
                fail(ErrorCode::InvalidArgument, "invalid strip node");
        }
        void operator()(const PolygonShape& pg) const { validate_convex_polygon(pg.vertices); }
    };
    std::visit(Visitor{}, s);
}

Cover::Cover(std::vector<CoverNode> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) fail(ErrorCode::InvalidArgument, "a cover needs at least one node");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].index != i)
            fail(ErrorCode::InvalidArgument, "cover node index " + std::to_string(nodes_[i].index) +
                                                 " at position " + std::to_string(i));
        validate_shape(nodes_[i].shape);
    }
}

std::optional<std::size_t> Cover::hit_test(Point2D p) const {
    for (const auto& n : nodes_) {
        if (n.freedom == MovementFreedom::Transparent) continue;
        if (shape_contains(n.shape, p)) return n.index;
    }
    return std::nullopt;
}

Cover Cover::frozen() const {
    Cover out = *this;
    for (auto& n : out.nodes_)
        if (n.freedom != MovementFreedom::Transparent) n.freedom = MovementFreedom::Freeze;
    return out;
}

CoverBuilder& CoverBuilder::add(NodeShape shape, MovementFreedom freedom, CursorHint cursor, NodeRole role) {
    nodes_.push_back(CoverNode{nodes_.size(), std::move(shape), freedom, cursor, role});
    return *this;
}

Cover CoverBuilder::build() && { return Cover(std::move(nodes_)); }

PolygonShape rect_polygon(const RectF& r) { return PolygonShape{rect_corners(r)}; }

namespace {

void require_rect(const RectF& r, double sense) {
    if (!is_finite(r) || !(r.width > 0.0) || !(r.height > 0.0))
        fail(ErrorCode::InvalidArgument, "cover rectangle must be non-degenerate");
    if (!std::isfinite(sense) || !(sense > 0.0)) fail(ErrorCode::InvalidArgument, "sense must be positive");
}

Cover rect_cover(const RectF& r, double sense, MovementFreedom body_freedom) {
    require_rect(r, sense);
    const Point2D tl{r.left, r.top}, tr{r.right(), r.top}, br{r.right(), r.bottom()}, bl{r.left, r.bottom()};
    CoverBuilder b;
    for (Point2D c : {tl, tr, br, bl})
        b.add(CircleShape{c, sense}, MovementFreedom::All, CursorHint::Hand, NodeRole::Reshape);
    b.add(StripShape{tl, tr, sense}, MovementFreedom::NS, CursorHint::SizeNS, NodeRole::Reshape);
    b.add(StripShape{tr, br, sense}, MovementFreedom::WE, CursorHint::SizeWE, NodeRole::Reshape);
    b.add(StripShape{bl, br, sense}, MovementFreedom::NS, CursorHint::SizeNS, NodeRole::Reshape);
    b.add(StripShape{tl, bl, sense}, MovementFreedom::WE, CursorHint::SizeWE, NodeRole::Reshape);
    // The body shrinks by `sense` from every side; when nothing is left it
    // falls back to the whole rectangle (edges still win by order).
    RectF body = r.inflated(-sense);
    if (!(body.width > 0.0) || !(body.height > 0.0)) body = r;
    b.add(rect_polygon(body), body_freedom, CursorHint::SizeAll, NodeRole::Body);
    return std::move(b).build();
}

} // namespace

Cover standard_resize_cover(const RectF& r, double sense) {
    return rect_cover(r, sense, MovementFreedom::All);
}

Cover frame_only_cover(const RectF& r, double sense) {
    return rect_cover(r, sense, MovementFreedom::Transparent);
}

Cover rectangle_cover(const RectF& r, MovementFreedom freedom) {
    require_rect(r, 1.0);
    CoverBuilder b;
    b.add(rect_polygon(r), freedom, CursorHint::SizeAll, NodeRole::Body);
    return std::move(b).build();
}

std::string_view to_string(MovementFreedom f) {
    switch (f) {
    case MovementFreedom::All: return "All";
    case MovementFreedom::WE: return "WE";
    case MovementFreedom::NS: return "NS";
    case MovementFreedom::Freeze: return "Freeze";
    case MovementFreedom::Transparent: return "Transparent";
    }
    return "?";
}

std::string_view to_string(CursorHint c) {
    switch (c) {
    case CursorHint::Default: return "Default";
    case CursorHint::SizeNS: return "SizeNS";
    case CursorHint::SizeWE: return "SizeWE";
    case CursorHint::SizeAll: return "SizeAll";
    case CursorHint::Hand: return "Hand";
    }
    return "?";
}

std::string_view to_string(ShapeKind k) {
    switch (k) {
    case ShapeKind::Circle: return "Circle";
    case ShapeKind::Strip: return "Strip";
    case ShapeKind::Polygon: return "Polygon";
    }
    return "?";
}

} // namespace udapp
