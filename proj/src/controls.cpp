#include <udapp/controls.hpp>

#include <udapp/error.hpp>

#include <algorithm>
#include <array>

namespace udapp {

std::string_view to_string(Resizing r) {
    switch (r) {
    case Resizing::None: return "None";
    case Resizing::WE: return "WE";
    case Resizing::NS: return "NS";
    case Resizing::Any: return "Any";
    }
    return "None";
}

std::string_view to_string(Side s) {
    switch (s) {
    case Side::N: return "N";
    case Side::S: return "S";
    case Side::E: return "E";
    case Side::W: return "W";
    }
    return "W";
}

Resizing resizing_from_string(std::string_view s) {
    for (Resizing r : {Resizing::None, Resizing::WE, Resizing::NS, Resizing::Any})
        if (to_string(r) == s) return r;
    fail(ErrorCode::Schema, "unknown resizing '" + std::string(s) + "'");
}

Side side_from_string(std::string_view s) {
    for (Side x : {Side::N, Side::S, Side::E, Side::W})
        if (to_string(x) == s) return x;
    fail(ErrorCode::Schema, "unknown side '" + std::string(s) + "'");
}

// ---- ControlProxy

ControlProxy::ControlProxy(FigureId id, RectF rect, Resizing resizing, std::string label, std::string kind)
    : Figure(id), rect_(rect), resizing_(resizing), label_(std::move(label)), kind_(std::move(kind)) {
    if (!is_finite(rect_) || !(rect_.width > 0.0) || !(rect_.height > 0.0))
        fail(ErrorCode::InvalidArgument, "control needs a non-degenerate rectangle");
    define_cover();
}

void ControlProxy::set_rect(const RectF& r) {
    if (!is_finite(r) || !(r.width > 0.0) || !(r.height > 0.0))
        fail(ErrorCode::InvalidArgument, "control needs a non-degenerate rectangle");
    rect_ = r;
    define_cover();
}

void ControlProxy::set_font_size(double f) {
    if (!std::isfinite(f) || !(f > 0.0)) fail(ErrorCode::InvalidArgument, "font size must be positive");
    font_size_ = f;
}

bool ControlProxy::handle_resizes(RectHandle h) const {
    const bool corner = h == RectHandle::TopLeft || h == RectHandle::TopRight || h == RectHandle::BottomRight ||
                        h == RectHandle::BottomLeft;
    const bool vertical_edge = h == RectHandle::Left || h == RectHandle::Right;
    switch (resizing_) {
    case Resizing::None: return false;
    case Resizing::Any: return corner;
    case Resizing::WE: return !corner && vertical_edge;
    case Resizing::NS: return !corner && !vertical_edge;
    }
    return false;
}

Cover ControlProxy::build_cover() const {
    const Cover frame = frame_only_cover(rect_);
    std::vector<CoverNode> nodes = frame.nodes();
    for (auto& n : nodes) {
        const auto h = rect_handle_for_node(n.index);
        if (!h || handle_resizes(*h)) continue;
        n.freedom = MovementFreedom::All;
        n.cursor = CursorHint::SizeAll;
        n.role = NodeRole::Body;
    }
    return Cover(std::move(nodes));
}

bool ControlProxy::move_node(std::size_t node, Vec2 d, Point2D, ButtonRole role) {
    if (role != ButtonRole::Move) return false;
    const auto h = rect_handle_for_node(node);
    if (!h || !handle_resizes(*h)) return false;
    const RectF next = resize_rect(rect_, *h, d);
    if (next == rect_) return false;
    rect_ = next;
    define_cover();
    return true;
}

void ControlProxy::save_state(json& out) const {
    out["rect"] = to_json(rect_);
    out["resizing"] = std::string(to_string(resizing_));
    out["label"] = label_;
    out["kind"] = kind_;
    out["tag"] = tag_;
    out["font_size"] = font_size_;
    out["back_color"] = back_color_;
}

void ControlProxy::load_state(const json& in, LoadContext&) {
    load_field(in, "rect", rect_);
    std::string rz(to_string(resizing_));
    load_field(in, "resizing", rz);
    resizing_ = resizing_from_string(rz);
    load_field(in, "label", label_);
    load_field(in, "kind", kind_);
    load_field(in, "tag", tag_);
    load_field(in, "font_size", font_size_);
    load_field(in, "back_color", back_color_);
}

// ---- Comment

double text_width(std::string_view text, double font_size) {
    std::size_t chars = 0;
    for (unsigned char ch : text)
        if ((ch & 0xC0) != 0x80) ++chars;
    return kCharWidthFactor * font_size * static_cast<double>(std::max<std::size_t>(chars, 1));
}

Comment::Comment(FigureId id, std::string text, Point2D center, double font_size)
    : Figure(id), text_(std::move(text)), center_(center), font_size_(font_size) {
    if (!is_finite(center_) || !std::isfinite(font_size_) || !(font_size_ > 0.0))
        fail(ErrorCode::InvalidArgument, "comment needs a finite center and a positive font");
    define_cover();
}

void Comment::set_text(std::string t) {
    text_ = std::move(t);
    define_cover();
}

void Comment::set_font_size(double f) {
    if (!std::isfinite(f) || !(f > 0.0)) fail(ErrorCode::InvalidArgument, "font size must be positive");
    font_size_ = f;
    define_cover();
}

void Comment::place_at(Point2D c) {
    center_ = c;
    define_cover();
}

std::vector<Point2D> Comment::outline() const {
    const double w = text_width(text_, font_size_);
    const double h = font_size_;
    std::vector<Point2D> pts = rect_corners({center_.x - w / 2.0, center_.y - h / 2.0, w, h});
    if (angle_.value != 0.0)
        for (auto& p : pts) p = rotate_about(p, center_, angle_);
    return pts;
}

RectF Comment::bounds() const { return rect_from_points(outline()); }

Cover Comment::build_cover() const {
    CoverBuilder b;
    b.add(PolygonShape{outline()}, MovementFreedom::All, CursorHint::SizeAll, NodeRole::Body);
    return std::move(b).build();
}

void Comment::save_state(json& out) const {
    out["text"] = text_;
    out["center"] = to_json(center_);
    out["font_size"] = font_size_;
    out["angle"] = angle_.value;
    out["color"] = color_;
}

void Comment::load_state(const json& in, LoadContext&) {
    load_field(in, "text", text_);
    load_field(in, "center", center_);
    load_field(in, "font_size", font_size_);
    load_field(in, "angle", angle_.value);
    load_field(in, "color", color_);
    if (!(font_size_ > 0.0)) fail(ErrorCode::Schema, "comment font size must be positive");
}

double comment_exposure(const Comment& c, const RectF& r) {
    const auto poly = c.outline();
    const double total = polygon_area(poly);
    const auto inside = clip_polygon_to_rect(poly, r);
    const double in = inside.size() >= 3 ? polygon_area(inside) : 0.0;
    return std::clamp(1.0 - in / total, 0.0, 1.0);
}

namespace {

double exposure_of(std::vector<Point2D> poly, Vec2 shift, const RectF& r) {
    for (auto& p : poly) p = p + shift;
    const double total = polygon_area(poly);
    const auto inside = clip_polygon_to_rect(poly, r);
    const double in = inside.size() >= 3 ? polygon_area(inside) : 0.0;
    return 1.0 - in / total;
}

} // namespace

std::optional<Vec2> enforced_relocation(const Comment& c, const RectF& r, double min_exposure) {
    const RectF b = c.bounds();
    if (!r.contains(b)) return std::nullopt;
    const auto poly = c.outline();
    // Aim a hair above the threshold so independent area checks agree.
    const double target = min_exposure + 1e-9;
    const std::array<Vec2, 4> dirs{Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, -1}, Vec2{0, 1}};
    const std::array<double, 4> exits{b.right() - r.left, r.right() - b.left, b.bottom() - r.top, r.bottom() - b.top};
    std::optional<Vec2> best;
    double best_t = 0.0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        double lo = 0.0;
        double hi = exits[i];
        // Exposure only grows as the comment slides out, so bisect.
        for (int k = 0; k < 100 && hi - lo > 0.0; ++k) {
            const double mid = lo + (hi - lo) / 2.0;
            if (mid == lo || mid == hi) break;
            if (exposure_of(poly, dirs[i] * mid, r) >= target) hi = mid;
            else lo = mid;
        }
        if (!best || hi < best_t) {
            best_t = hi;
            best = dirs[i] * hi;
        }
    }
    return best;
}

// ---- CommentedControl

Point2D comment_position(const RectF& r, Side side, double w, double h, double gap) {
    const Point2D c = r.center();
    switch (side) {
    case Side::N: return {c.x, r.top - gap - h / 2.0};
    case Side::S: return {c.x, r.bottom() + gap + h / 2.0};
    case Side::E: return {r.right() + gap + w / 2.0, c.y};
    case Side::W: return {r.left - gap - w / 2.0, c.y};
    }
    return c;
}

CommentedControl::CommentedControl(FigureId id, std::unique_ptr<ControlProxy> proxy, std::unique_ptr<Comment> comment,
                                   Side side)
    : Figure(id), proxy_(std::move(proxy)), comment_(std::move(comment)), side_(side) {
    if (!proxy_ || !comment_) fail(ErrorCode::InvalidArgument, "commented control needs both parts");
    adopt(*proxy_);
    adopt(*comment_);
    anchor_ = proxy_->rect().top_left();
    define_cover();
}

std::unique_ptr<CommentedControl> CommentedControl::make(IdSource& ids, RectF rect, Resizing resizing, Side side,
                                                         const std::string& text, double font_size) {
    const FigureId id = ids();
    auto proxy = std::make_unique<ControlProxy>(ids(), rect, resizing, text);
    const Point2D at = comment_position(rect, side, text_width(text, font_size), font_size);
    auto comment = std::make_unique<Comment>(ids(), text, at, font_size);
    return std::make_unique<CommentedControl>(id, std::move(proxy), std::move(comment), side);
}

RectF CommentedControl::bounds() const {
    if (!comment_->visible()) return proxy_->bounds();
    const std::array<RectF, 2> rs{proxy_->bounds(), comment_->bounds()};
    return rect_union(rs);
}

void CommentedControl::set_movable(bool v) {
    Figure::set_movable(v);
    proxy_->set_movable(v);
    comment_->set_movable(v);
}

void CommentedControl::set_comment_font(double f) {
    comment_->set_font_size(f);
    comment_enforced_relocation();
    notify_changed(*comment_);
}

bool CommentedControl::comment_enforced_relocation() {
    const auto shift = enforced_relocation(*comment_, proxy_->rect());
    if (!shift) return false;
    comment_->move_by(*shift);
    define_cover();
    return true;
}

void CommentedControl::into_mover(std::vector<Figure*>& block) {
    if (comment_->visible()) comment_->into_mover(block);
    if (proxy_->visible()) proxy_->into_mover(block);
}

void CommentedControl::for_each_child(const std::function<void(Figure&)>& fn) {
    fn(*proxy_);
    fn(*comment_);
}

bool CommentedControl::on_child_changed(Figure& child) {
    if (&child == proxy_.get()) {
        const Point2D tl = proxy_->rect().top_left();
        comment_->move_by(tl - anchor_);
        anchor_ = tl;
    }
    define_cover();
    return true;
}

bool CommentedControl::on_child_released(Figure&) {
    const bool moved = comment_enforced_relocation();
    if (moved) notify_changed(*comment_);
    return moved;
}

void CommentedControl::translate(Vec2 d) {
    proxy_->move_by(d);
    comment_->move_by(d);
    anchor_ = proxy_->rect().top_left();
}

Cover CommentedControl::build_cover() const {
    // The pair is never registered itself; its parts are.
    return rectangle_cover(bounds(), MovementFreedom::Transparent);
}

void CommentedControl::save_state(json& out) const {
    out["side"] = std::string(to_string(side_));
    out["anchor"] = to_json(anchor_);
    out["proxy"] = proxy_->save();
    out["comment"] = comment_->save();
}

void CommentedControl::load_state(const json& in, LoadContext& ctx) {
    std::string side(to_string(side_));
    load_field(in, "side", side);
    side_ = side_from_string(side);
    if (const auto it = in.find("proxy"); it != in.end()) {
        LoadContext::Scope s(ctx, "proxy");
        proxy_->load(*it, ctx);
    }
    if (const auto it = in.find("comment"); it != in.end()) {
        LoadContext::Scope s(ctx, "comment");
        comment_->load(*it, ctx);
    }
    anchor_ = proxy_->rect().top_left();
    load_field(in, "anchor", anchor_);
}

} // namespace udapp
