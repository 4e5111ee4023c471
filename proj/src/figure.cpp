#include <udapp/figure.hpp>

#include <udapp/error.hpp>

#include <algorithm>

namespace udapp {

void throw_schema_error(const char* key, const std::string& detail) {
    fail(ErrorCode::Schema, std::string("field '") + key + "': " + detail);
}

json to_json(Point2D p) { return json::array({p.x, p.y}); }

json to_json(const RectF& r) { return json::array({r.left, r.top, r.width, r.height}); }

Point2D point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(ErrorCode::Schema, "expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

RectF rect_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) fail(ErrorCode::Schema, "expected [left, top, width, height]");
    for (const auto& v : j)
        if (!v.is_number()) fail(ErrorCode::Schema, "rectangle entries must be numbers");
    RectF r{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
    if (!is_finite(r) || r.width < 0.0 || r.height < 0.0) fail(ErrorCode::Schema, "invalid rectangle");
    return r;
}

void load_field(const json& j, const char* key, Point2D& out) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return;
    try {
        out = point_from_json(*it);
    } catch (const Error& e) {
        throw_schema_error(key, e.what());
    }
}

void load_field(const json& j, const char* key, RectF& out) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return;
    try {
        out = rect_from_json(*it);
    } catch (const Error& e) {
        throw_schema_error(key, e.what());
    }
}

// ---- LoadContext

void LoadContext::add_roster(std::unique_ptr<Figure> f) { roster_.push_back(std::move(f)); }

std::unique_ptr<Figure> LoadContext::take_roster(FigureId id, std::string_view class_tag) {
    const auto it = std::find_if(roster_.begin(), roster_.end(),
                                 [id](const auto& f) { return f && f->id() == id; });
    if (it == roster_.end()) mismatch("no construction figure with id " + std::to_string(id));
    if ((*it)->class_tag() != class_tag)
        mismatch("figure " + std::to_string(id) + " is a " + std::string((*it)->class_tag()) +
                 ", archive says " + std::string(class_tag));
    auto out = std::move(*it);
    roster_.erase(it);
    return out;
}

std::unique_ptr<Figure> LoadContext::materialize(const json& rec) {
    if (!rec.is_object()) fail(ErrorCode::Schema, path_ + ": figure record must be an object");
    std::string tag;
    FigureId id = 0;
    bool dyn = false;
    load_field(rec, "class", tag);
    load_field(rec, "id", id);
    load_field(rec, "dynamic", dyn);
    std::unique_ptr<Figure> f;
    if (dyn) {
        if (!factory_) mismatch("dynamic figure " + std::to_string(id) + " cannot be created here");
        f = factory_(rec, *this);
        if (!f) mismatch("unknown dynamic figure class '" + tag + "'");
        f->set_dynamic(true);
    } else {
        f = take_roster(id, tag);
    }
    f->load(rec, *this);
    return f;
}

std::vector<std::unique_ptr<Figure>> LoadContext::release_roster() { return std::move(roster_); }

void LoadContext::mismatch(const std::string& what) const {
    fail(ErrorCode::RosterMismatch, (path_.empty() ? std::string("/") : path_) + ": " + what);
}

LoadContext::Scope::Scope(LoadContext& ctx, const std::string& segment) : ctx_(ctx), len_(ctx.path_.size()) {
    ctx_.path_ += "/" + segment;
}

LoadContext::Scope::~Scope() { ctx_.path_.resize(len_); }

// ---- Figure

Figure::Figure(FigureId id) : id_(id) {}

std::optional<FigureId> Figure::parent_id() const {
    if (!parent_) return std::nullopt;
    return parent_->id();
}

const Cover& Figure::define_cover() {
    cover_ = movable_ ? build_cover() : build_cover().frozen();
    return cover_;
}

void Figure::set_movable(bool v) {
    movable_ = v;
    define_cover();
}

bool Figure::move_by(Vec2 d) {
    if (d.is_zero()) return false;
    translate(d);
    define_cover();
    return true;
}

bool Figure::move_node(std::size_t, Vec2, Point2D, ButtonRole) { return false; }

void Figure::start_rotation(Point2D grab) {
    if (!rotatable()) return;
    rotation_.compensation = AngleRad{angle().value - polar_angle(grab - rotation_center()).value};
    rotation_.active = true;
}

bool Figure::rotate_to(Point2D p) {
    if (!rotation_.active) return false;
    const Point2D c = rotation_center();
    if (p == c) return false;
    const double a = polar_angle(p - c).value + rotation_.compensation.value;
    if (a == angle().value) return false;
    set_angle(AngleRad{a});
    define_cover();
    return true;
}

void Figure::on_catch(std::size_t, ButtonRole role, Point2D p) {
    if (role == ButtonRole::Rotate && movable_) start_rotation(p);
}

bool Figure::on_release() {
    end_rotation();
    return false;
}

void Figure::for_each_child(const std::function<void(const Figure&)>& fn) const {
    const_cast<Figure*>(this)->for_each_child([&fn](Figure& c) { fn(c); });
}

void Figure::into_mover(std::vector<Figure*>& block) { block.push_back(this); }

json Figure::save() const {
    json rec = json::object();
    save_state(rec);
    rec["class"] = std::string(class_tag());
    rec["id"] = id_;
    rec["parent"] = parent_ ? json(parent_->id()) : json(nullptr);
    rec["dynamic"] = dynamic_;
    rec["movable"] = movable_;
    rec["visible"] = visible_;
    rec["hideable"] = hideable_;
    return rec;
}

void Figure::load(const json& rec, LoadContext& ctx) {
    if (!rec.is_object()) fail(ErrorCode::Schema, ctx.path() + ": figure record must be an object");
    std::string tag;
    FigureId id = 0;
    load_field(rec, "class", tag);
    load_field(rec, "id", id);
    if (tag != class_tag())
        ctx.mismatch("expected " + std::string(class_tag()) + ", archive has '" + tag + "'");
    if (id != id_) ctx.mismatch("expected id " + std::to_string(id_) + ", archive has " + std::to_string(id));
    load_field(rec, "movable", movable_);
    load_field(rec, "visible", visible_);
    load_field(rec, "hideable", hideable_);
    load_state(rec, ctx);
    define_cover();
}

void Figure::capture_default() { default_state_ = save(); }

bool Figure::reset_default() {
    if (!default_state_) return false;
    LoadContext ctx;
    const json state = *default_state_;
    load(state, ctx);
    notify_changed(*this);
    return true;
}

bool notify_changed(Figure& f) {
    bool any = false;
    for (Figure* c = &f; c->parent() != nullptr; c = c->parent()) any = c->parent()->on_child_changed(*c) || any;
    return any;
}

bool notify_released(Figure& f) {
    bool any = false;
    for (Figure* c = &f; c->parent() != nullptr; c = c->parent()) any = c->parent()->on_child_released(*c) || any;
    return any;
}

void visit_tree(Figure& root, const std::function<void(Figure&)>& fn) {
    fn(root);
    root.for_each_child([&fn](Figure& c) { visit_tree(c, fn); });
}

void visit_tree(const Figure& root, const std::function<void(const Figure&)>& fn) {
    fn(root);
    root.for_each_child([&fn](const Figure& c) { visit_tree(c, fn); });
}

// ---- rectangle handles

std::optional<RectHandle> rect_handle_for_node(std::size_t node) {
    switch (node) {
    case kCornerTL: return RectHandle::TopLeft;
    case kCornerTR: return RectHandle::TopRight;
    case kCornerBR: return RectHandle::BottomRight;
    case kCornerBL: return RectHandle::BottomLeft;
    case kEdgeTop: return RectHandle::Top;
    case kEdgeRight: return RectHandle::Right;
    case kEdgeBottom: return RectHandle::Bottom;
    case kEdgeLeft: return RectHandle::Left;
    default: return std::nullopt;
    }
}

namespace {

// One axis of a resize: moving the low side (left/top) or the high side.
void resize_axis(double& pos, double& size, double delta, bool low_side, double min_size) {
    const double lower = std::min(size, min_size);
    if (low_side) {
        const double far = pos + size;
        const double s = std::max(size - delta, lower);
        pos = s == size - delta ? pos + delta : far - s;
        size = s;
    } else {
        size = std::max(size + delta, lower);
    }
}

} // namespace

RectF resize_rect(const RectF& r, RectHandle h, Vec2 d, double min_size) {
    RectF out = r;
    const bool left = h == RectHandle::TopLeft || h == RectHandle::BottomLeft || h == RectHandle::Left;
    const bool right = h == RectHandle::TopRight || h == RectHandle::BottomRight || h == RectHandle::Right;
    const bool top = h == RectHandle::TopLeft || h == RectHandle::TopRight || h == RectHandle::Top;
    const bool bottom = h == RectHandle::BottomLeft || h == RectHandle::BottomRight || h == RectHandle::Bottom;
    if (left || right) resize_axis(out.left, out.width, d.dx, left, min_size);
    if (top || bottom) resize_axis(out.top, out.height, d.dy, top, min_size);
    return out;
}

// ---- RectFigure

RectFigure::RectFigure(FigureId id, RectF rect, std::string kind)
    : Figure(id), rect_(rect), kind_(std::move(kind)) {
    if (!is_finite(rect_) || !(rect_.width > 0.0) || !(rect_.height > 0.0))
        fail(ErrorCode::InvalidArgument, "rect figure needs a non-degenerate rectangle");
    define_cover();
}

void RectFigure::set_resizable(bool v) {
    resizable_ = v;
    define_cover();
}

bool RectFigure::move_node(std::size_t node, Vec2 d, Point2D, ButtonRole role) {
    if (role != ButtonRole::Move || !resizable_) return false;
    const auto h = rect_handle_for_node(node);
    if (!h) return false;
    const RectF next = resize_rect(rect_, *h, d);
    if (next == rect_) return false;
    rect_ = next;
    define_cover();
    return true;
}

Cover RectFigure::build_cover() const {
    return resizable_ ? standard_resize_cover(rect_) : rectangle_cover(rect_);
}

void RectFigure::save_state(json& out) const {
    out["rect"] = to_json(rect_);
    out["kind"] = kind_;
    out["color"] = color_;
    out["resizable"] = resizable_;
}

void RectFigure::load_state(const json& in, LoadContext&) {
    load_field(in, "rect", rect_);
    load_field(in, "kind", kind_);
    load_field(in, "color", color_);
    load_field(in, "resizable", resizable_);
}

} // namespace udapp
