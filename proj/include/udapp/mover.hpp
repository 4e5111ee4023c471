#pragma once

#include <udapp/figure.hpp>

#include <optional>
#include <vector>

namespace udapp {

// Which physical button starts moves/resizes and which starts rotation.
struct ButtonConfig {
    MouseButton move = MouseButton::Left;
    MouseButton rotate = MouseButton::Right;

    ButtonRole role_of(MouseButton b) const { return b == rotate && b != move ? ButtonRole::Rotate : ButtonRole::Move; }
};

struct DragState {
    Figure* figure = nullptr;
    std::size_t node = 0;
    ShapeKind node_shape = ShapeKind::Polygon;
    MovementFreedom freedom = MovementFreedom::All;
    NodeRole role = NodeRole::Body;
    MouseButton button = MouseButton::Left;
    ButtonRole button_role = ButtonRole::Move;
    Point2D last_point;
};

// Z-ordered queue of figures (index 0 is topmost) plus the active drag.
// Figures are not owned.
class Mover {
public:
    ButtonConfig buttons;

    // Registers `f` (and, for composites, its whole into_mover block) so
    // that the block starts at `position`. Duplicate ids are rejected.
    void insert(std::size_t position, Figure& f);
    void add(Figure& f) { insert(queue_.size(), f); }
    // Removes `f` and every entry of its block; returns the count removed.
    std::size_t remove(const Figure& f);
    void clear();

    const std::vector<Figure*>& queue() const { return queue_; }
    std::size_t size() const { return queue_.size(); }
    std::optional<std::size_t> index_of(FigureId id) const;

    bool catch_at(Point2D p, MouseButton button);
    bool move(Point2D p);
    // Ends the drag. `changed` reports post-release adjustments.
    std::optional<FigureId> release(bool* changed = nullptr);

    bool dragging() const { return drag_.has_value(); }
    const std::optional<DragState>& drag() const { return drag_; }
    Figure* caught_source() const { return drag_ ? drag_->figure : nullptr; }
    std::optional<std::size_t> caught_node() const;
    std::optional<ShapeKind> caught_node_shape() const;

private:
    std::vector<Figure*> queue_;
    std::optional<DragState> drag_;
};

} // namespace udapp
