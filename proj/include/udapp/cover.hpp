#pragma once

#include <udapp/geometry.hpp>

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace udapp {

// How a node may be used by the mover.
enum class MovementFreedom {
    All,         // any direction
    WE,          // horizontal only
    NS,          // vertical only
    Freeze,      // caught by picking, never moves anything
    Transparent, // never caught; picking passes through
};

enum class CursorHint { Default, SizeNS, SizeWE, SizeAll, Hand };

// Body nodes translate the whole figure; reshape nodes are handed to the
// figure's move_node.
enum class NodeRole { Body, Reshape };

struct CircleShape {
    Point2D center;
    double radius = 0.0;
};

struct StripShape {
    Point2D a;
    Point2D b;
    double halfwidth = 0.0;
};

struct PolygonShape {
    std::vector<Point2D> vertices;
};

using NodeShape = std::variant<CircleShape, StripShape, PolygonShape>;

enum class ShapeKind { Circle, Strip, Polygon };

ShapeKind shape_kind(const NodeShape& s);
bool shape_contains(const NodeShape& s, Point2D p);
// Throws on shapes violating their geometric preconditions.
void validate_shape(const NodeShape& s);

struct CoverNode {
    std::size_t index = 0;
    NodeShape shape;
    MovementFreedom freedom = MovementFreedom::All;
    CursorHint cursor = CursorHint::Default;
    NodeRole role = NodeRole::Body;
};

// Ordered pick geometry. Node indices always equal their position.
class Cover {
public:
    Cover() = default;
    explicit Cover(std::vector<CoverNode> nodes);

    const std::vector<CoverNode>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    const CoverNode& operator[](std::size_t i) const { return nodes_.at(i); }
    bool empty() const { return nodes_.empty(); }

    // First node (in order) that contains p and is not Transparent.
    std::optional<std::size_t> hit_test(Point2D p) const;

    // Same shapes; every non-transparent node frozen.
    Cover frozen() const;

private:
    std::vector<CoverNode> nodes_;
};

// Builder that assigns indices in insertion order.
class CoverBuilder {
public:
    CoverBuilder& add(NodeShape shape, MovementFreedom freedom, CursorHint cursor, NodeRole role);
    Cover build() &&;

private:
    std::vector<CoverNode> nodes_;
};

inline constexpr double kDefaultSense = 3.0;

// Index layout shared by the rectangle covers below.
enum RectNode : std::size_t {
    kCornerTL = 0,
    kCornerTR,
    kCornerBR,
    kCornerBL,
    kEdgeTop,
    kEdgeRight,
    kEdgeBottom,
    kEdgeLeft,
    kRectBody,
};

PolygonShape rect_polygon(const RectF& r);

// 4 corner circles, 4 edge strips, then the body polygon.
Cover standard_resize_cover(const RectF& r, double sense = kDefaultSense);
// As above, with a Transparent body: the interior belongs to the wrapped control.
Cover frame_only_cover(const RectF& r, double sense = kDefaultSense);
// One non-resizable body rectangle.
Cover rectangle_cover(const RectF& r, MovementFreedom freedom = MovementFreedom::All);

std::string_view to_string(MovementFreedom f);
std::string_view to_string(CursorHint c);
std::string_view to_string(ShapeKind k);

} // namespace udapp
