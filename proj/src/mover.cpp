#include <udapp/mover.hpp>

#include <udapp/error.hpp>

#include <algorithm>
#include <unordered_set>

namespace udapp {

void Mover::insert(std::size_t position, Figure& f) {
    std::vector<Figure*> block;
    f.into_mover(block);
    std::unordered_set<FigureId> ids;
    for (const Figure* q : queue_) ids.insert(q->id());
    for (const Figure* b : block)
        if (!ids.insert(b->id()).second)
            fail(ErrorCode::InvalidArgument, "figure " + std::to_string(b->id()) + " is already registered");
    position = std::min(position, queue_.size());
    queue_.insert(queue_.begin() + static_cast<std::ptrdiff_t>(position), block.begin(), block.end());
}

std::size_t Mover::remove(const Figure& f) {
    std::unordered_set<const Figure*> members;
    visit_tree(f, [&members](const Figure& x) { members.insert(&x); });
    if (drag_ && members.count(drag_->figure)) drag_.reset();
    const auto before = queue_.size();
    std::erase_if(queue_, [&members](Figure* q) { return members.count(q) > 0; });
    return before - queue_.size();
}

void Mover::clear() {
    queue_.clear();
    drag_.reset();
}

std::optional<std::size_t> Mover::index_of(FigureId id) const {
    for (std::size_t i = 0; i < queue_.size(); ++i)
        if (queue_[i]->id() == id) return i;
    return std::nullopt;
}

bool Mover::catch_at(Point2D p, MouseButton button) {
    if (drag_) return false;
    for (Figure* f : queue_) {
        const auto hit = f->cover().hit_test(p);
        if (!hit) continue;
        const CoverNode& n = f->cover()[*hit];
        drag_ = DragState{f, *hit, shape_kind(n.shape), n.freedom, n.role, button, buttons.role_of(button), p};
        f->on_catch(*hit, drag_->button_role, p);
        return true;
    }
    return false;
}

bool Mover::move(Point2D p) {
    if (!drag_) return false;
    DragState& d = *drag_;
    Vec2 delta = p - d.last_point;
    d.last_point = p;
    if (d.freedom == MovementFreedom::Freeze || d.freedom == MovementFreedom::Transparent) return false;
    Figure& f = *d.figure;
    bool changed = false;
    if (d.button_role == ButtonRole::Rotate) {
        changed = f.rotate_to(p);
    } else {
        if (d.freedom == MovementFreedom::WE) delta.dy = 0.0;
        if (d.freedom == MovementFreedom::NS) delta.dx = 0.0;
        changed = d.role == NodeRole::Body ? f.move_by(delta) : f.move_node(d.node, delta, p, ButtonRole::Move);
    }
    if (changed) notify_changed(f);
    return changed;
}

std::optional<FigureId> Mover::release(bool* changed) {
    if (changed) *changed = false;
    if (!drag_) return std::nullopt;
    Figure& f = *drag_->figure;
    drag_.reset();
    bool c = f.on_release();
    if (c) notify_changed(f);
    c = notify_released(f) || c;
    if (changed) *changed = c;
    return f.id();
}

std::optional<std::size_t> Mover::caught_node() const {
    if (!drag_) return std::nullopt;
    return drag_->node;
}

std::optional<ShapeKind> Mover::caught_node_shape() const {
    if (!drag_) return std::nullopt;
    return drag_->node_shape;
}

} // namespace udapp
