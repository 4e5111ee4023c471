#include <udapp/groups.hpp>

#include <udapp/error.hpp>

#include <algorithm>

namespace udapp {

namespace {

void require_rect(const RectF& r, const char* what) {
    if (!is_finite(r) || !(r.width > 0.0) || !(r.height > 0.0))
        fail(ErrorCode::InvalidArgument, std::string(what) + " needs a non-degenerate rectangle");
}

const json& array_field(const json& in, const char* key, std::size_t expected, LoadContext& ctx) {
    const auto it = in.find(key);
    if (it == in.end() || !it->is_array()) fail(ErrorCode::Schema, ctx.path() + ": missing array '" + key + "'");
    if (it->size() != expected)
        ctx.mismatch(std::string(key) + " count " + std::to_string(it->size()) + " differs from the roster's " +
                     std::to_string(expected));
    return *it;
}

} // namespace

// ---- ElasticGroup

ElasticGroup::ElasticGroup(FigureId id, std::string title, std::vector<std::unique_ptr<Figure>> elements,
                           double padding)
    : Figure(id), title_(std::move(title)), elements_(std::move(elements)), padding_(padding) {
    if (!std::isfinite(padding_) || padding_ < 0.0) fail(ErrorCode::InvalidArgument, "padding must be >= 0");
    for (auto& e : elements_) {
        if (!e) fail(ErrorCode::InvalidArgument, "null group element");
        adopt(*e);
    }
    recompute_frame();
}

void ElasticGroup::set_title_position(double t) {
    if (!std::isfinite(t)) fail(ErrorCode::InvalidArgument, "title position must be finite");
    title_position_ = std::clamp(t, 0.0, 1.0);
    define_cover();
}

std::optional<RectF> ElasticGroup::title_rect() const {
    if (title_.empty()) return std::nullopt;
    const double w = text_width(title_, visuals_.title_font);
    const double h = visuals_.title_font;
    const double span = std::max(0.0, frame_.width - w);
    return RectF{frame_.left + title_position_ * span, frame_.top - h / 2.0, w, h};
}

void ElasticGroup::set_visual(const std::string& key, const json& value) {
    auto need = [&key](bool ok) {
        if (!ok) fail(ErrorCode::InvalidArgument, "bad value for visual parameter '" + key + "'");
    };
    if (key == "frame_color" || key == "background_color" || key == "title_color") {
        need(value.is_string());
        std::string& slot = key == "frame_color"        ? visuals_.frame_color
                            : key == "background_color" ? visuals_.background_color
                                                        : visuals_.title_color;
        slot = value.get<std::string>();
    } else if (key == "transparency") {
        need(value.is_number() && value.get<double>() >= 0.0 && value.get<double>() <= 1.0);
        visuals_.transparency = value.get<double>();
    } else if (key == "spread_background" || key == "show_frame") {
        need(value.is_boolean());
        (key == "show_frame" ? visuals_.show_frame : visuals_.spread_background) = value.get<bool>();
    } else if (key == "title_font") {
        need(value.is_number() && value.get<double>() > 0.0 && std::isfinite(value.get<double>()));
        visuals_.title_font = value.get<double>();
    } else if (key == "padding") {
        need(value.is_number() && value.get<double>() >= 0.0 && std::isfinite(value.get<double>()));
        padding_ = value.get<double>();
        recompute_frame();
        notify_changed(*this);
    } else if (key == "title") {
        need(value.is_string());
        title_ = value.get<std::string>();
    } else {
        fail(ErrorCode::InvalidArgument, "unknown visual parameter '" + key + "'");
    }
    define_cover();
}

void ElasticGroup::recompute_frame() {
    std::vector<RectF> rs;
    for (const auto& e : elements_)
        if (e->visible()) rs.push_back(e->bounds());
    if (rs.empty()) frame_ = {frame_.left, frame_.top, kStubWidth, kStubHeight};
    else frame_ = rect_union(rs).inflated(padding_);
    define_cover();
}

void ElasticGroup::set_movable(bool v) {
    Figure::set_movable(v);
    set_elements_movable(v);
}

void ElasticGroup::set_elements_movable(bool v) {
    elements_movable_ = v;
    for (auto& e : elements_) e->set_movable(v);
}

bool ElasticGroup::move_node(std::size_t node, Vec2 d, Point2D, ButtonRole role) {
    // Only the title node reshapes: it slides along the top border.
    if (role != ButtonRole::Move || node != 0 || !title_rect()) return false;
    const double span = frame_.width - title_rect()->width;
    if (!(span > 0.0)) return false;
    const double t = std::clamp(title_position_ + d.dx / span, 0.0, 1.0);
    if (t == title_position_) return false;
    title_position_ = t;
    define_cover();
    return true;
}

void ElasticGroup::into_mover(std::vector<Figure*>& block) {
    for (auto& e : elements_)
        if (e->visible()) e->into_mover(block);
    block.push_back(this);
}

void ElasticGroup::for_each_child(const std::function<void(Figure&)>& fn) {
    for (auto& e : elements_) fn(*e);
}

bool ElasticGroup::on_child_changed(Figure&) {
    recompute_frame();
    return true;
}

void ElasticGroup::translate(Vec2 d) {
    for (auto& e : elements_) e->move_by(d);
    frame_ = frame_.translated(d);
    recompute_frame();
}

Cover ElasticGroup::build_cover() const {
    CoverBuilder b;
    if (const auto tr = title_rect(); tr && tr->width > 0.0 && tr->height > 0.0)
        b.add(rect_polygon(*tr), MovementFreedom::WE, CursorHint::SizeWE, NodeRole::Reshape);
    b.add(rect_polygon(frame_), MovementFreedom::All, CursorHint::SizeAll, NodeRole::Body);
    return std::move(b).build();
}

void ElasticGroup::save_state(json& out) const {
    out["title"] = title_;
    out["title_position"] = title_position_;
    out["padding"] = padding_;
    out["frame"] = to_json(frame_);
    out["elements_movable"] = elements_movable_;
    out["visuals"] = {
        {"frame_color", visuals_.frame_color},   {"background_color", visuals_.background_color},
        {"title_color", visuals_.title_color},   {"transparency", visuals_.transparency},
        {"spread_background", visuals_.spread_background}, {"show_frame", visuals_.show_frame},
        {"title_font", visuals_.title_font},
    };
    json els = json::array();
    for (const auto& e : elements_) els.push_back(e->save());
    out["elements"] = std::move(els);
}

void ElasticGroup::load_state(const json& in, LoadContext& ctx) {
    load_field(in, "title", title_);
    load_field(in, "title_position", title_position_);
    title_position_ = std::clamp(title_position_, 0.0, 1.0);
    load_field(in, "padding", padding_);
    load_field(in, "frame", frame_);
    load_field(in, "elements_movable", elements_movable_);
    if (const auto it = in.find("visuals"); it != in.end() && it->is_object()) {
        const json& v = *it;
        load_field(v, "frame_color", visuals_.frame_color);
        load_field(v, "background_color", visuals_.background_color);
        load_field(v, "title_color", visuals_.title_color);
        load_field(v, "transparency", visuals_.transparency);
        load_field(v, "spread_background", visuals_.spread_background);
        load_field(v, "show_frame", visuals_.show_frame);
        load_field(v, "title_font", visuals_.title_font);
    }
    const json& els = array_field(in, "elements", elements_.size(), ctx);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        LoadContext::Scope s(ctx, "elements/" + std::to_string(i));
        elements_[i]->load(els[i], ctx);
    }
    recompute_frame();
}

// ---- ProportionalGroup

ProportionalGroup::ProportionalGroup(FigureId id, std::string title, RectF frame,
                                     std::vector<std::unique_ptr<ControlProxy>> elements)
    : Figure(id), title_(std::move(title)), frame_(frame), elements_(std::move(elements)) {
    require_rect(frame_, "group");
    for (auto& e : elements_) {
        const RectF& r = e->rect();
        fractions_.push_back({(r.left - frame_.left) / frame_.width, (r.top - frame_.top) / frame_.height,
                              r.width / frame_.width, r.height / frame_.height});
        adopt(*e);
    }
    define_cover();
}

void ProportionalGroup::proportional_resize(const RectF& f) {
    require_rect(f, "group");
    RectF nf = f;
    nf.width = std::max(nf.width, kMinFigureSize);
    nf.height = std::max(nf.height, kMinFigureSize);
    frame_ = nf;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const RectF& q = fractions_[i];
        elements_[i]->set_rect({nf.left + q.left * nf.width, nf.top + q.top * nf.height, q.width * nf.width,
                                q.height * nf.height});
    }
    define_cover();
}

bool ProportionalGroup::move_node(std::size_t node, Vec2 d, Point2D, ButtonRole role) {
    if (role != ButtonRole::Move) return false;
    const auto h = rect_handle_for_node(node);
    if (!h) return false;
    const RectF next = resize_rect(frame_, *h, d);
    if (next == frame_) return false;
    proportional_resize(next);
    return true;
}

void ProportionalGroup::for_each_child(const std::function<void(Figure&)>& fn) {
    for (auto& e : elements_) fn(*e);
}

void ProportionalGroup::translate(Vec2 d) {
    frame_ = frame_.translated(d);
    for (auto& e : elements_) e->move_by(d);
}

void ProportionalGroup::save_state(json& out) const {
    out["title"] = title_;
    out["frame"] = to_json(frame_);
    json fr = json::array();
    for (const auto& q : fractions_) fr.push_back(to_json(q));
    out["fractions"] = std::move(fr);
    json els = json::array();
    for (const auto& e : elements_) els.push_back(e->save());
    out["elements"] = std::move(els);
}

void ProportionalGroup::load_state(const json& in, LoadContext& ctx) {
    load_field(in, "title", title_);
    load_field(in, "frame", frame_);
    const json& fr = array_field(in, "fractions", fractions_.size(), ctx);
    for (std::size_t i = 0; i < fractions_.size(); ++i) fractions_[i] = rect_from_json(fr[i]);
    const json& els = array_field(in, "elements", elements_.size(), ctx);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        LoadContext::Scope s(ctx, "elements/" + std::to_string(i));
        elements_[i]->load(els[i], ctx);
    }
}

// ---- LinkedRectangles

LinkedRectangles::LinkedRectangles(FigureId id, std::vector<RectF> parts) : Figure(id), parts_(std::move(parts)) {
    if (parts_.empty()) fail(ErrorCode::InvalidArgument, "linked rectangles need at least one part");
    for (const auto& p : parts_) require_rect(p, "linked part");
    define_cover();
}

void LinkedRectangles::translate(Vec2 d) {
    for (auto& p : parts_) p = p.translated(d);
}

Cover LinkedRectangles::build_cover() const {
    CoverBuilder b;
    for (const auto& p : parts_) b.add(rect_polygon(p), MovementFreedom::All, CursorHint::SizeAll, NodeRole::Body);
    return std::move(b).build();
}

void LinkedRectangles::save_state(json& out) const {
    json ps = json::array();
    for (const auto& p : parts_) ps.push_back(to_json(p));
    out["parts"] = std::move(ps);
}

void LinkedRectangles::load_state(const json& in, LoadContext& ctx) {
    const json& ps = array_field(in, "parts", parts_.size(), ctx);
    for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] = rect_from_json(ps[i]);
}

// ---- RectSelectGroup

RectSelectGroup::RectSelectGroup(FigureId id, std::vector<std::unique_ptr<Figure>> members, std::string label,
                                 bool predefined)
    : Figure(id), members_(std::move(members)), label_(std::move(label)), predefined_(predefined) {
    for (auto& m : members_) {
        if (!m) fail(ErrorCode::InvalidArgument, "null group member");
        adopt(*m);
    }
    define_cover();
}

RectF RectSelectGroup::bounds() const {
    if (members_.empty()) return {0.0, 0.0, 1.0, 1.0};
    std::vector<RectF> rs;
    for (const auto& m : members_) rs.push_back(m->bounds());
    return rect_union(rs).inflated(kSelectPadding);
}

std::vector<std::unique_ptr<Figure>> RectSelectGroup::take_members() {
    for (auto& m : members_) orphan(*m);
    auto out = std::move(members_);
    members_.clear();
    return out;
}

void RectSelectGroup::into_mover(std::vector<Figure*>& block) {
    // The group rectangle shadows its members: any inner point moves all.
    block.push_back(this);
    for (auto& m : members_)
        if (m->visible()) m->into_mover(block);
}

void RectSelectGroup::for_each_child(const std::function<void(Figure&)>& fn) {
    for (auto& m : members_) fn(*m);
}

bool RectSelectGroup::on_child_changed(Figure&) {
    define_cover();
    return true;
}

void RectSelectGroup::translate(Vec2 d) {
    for (auto& m : members_) m->move_by(d);
}

Cover RectSelectGroup::build_cover() const { return rectangle_cover(bounds()); }

void RectSelectGroup::save_state(json& out) const {
    out["label"] = label_;
    out["predefined"] = predefined_;
    json ms = json::array();
    for (const auto& m : members_) ms.push_back(m->save());
    out["members"] = std::move(ms);
}

void RectSelectGroup::load_state(const json& in, LoadContext& ctx) {
    load_field(in, "label", label_);
    load_field(in, "predefined", predefined_);
    const auto it = in.find("members");
    if (it == in.end() || !it->is_array()) fail(ErrorCode::Schema, ctx.path() + ": missing array 'members'");
    std::vector<std::unique_ptr<Figure>> next;
    for (std::size_t i = 0; i < it->size(); ++i) {
        LoadContext::Scope s(ctx, "members/" + std::to_string(i));
        const json& rec = (*it)[i];
        FigureId mid = 0;
        load_field(rec, "id", mid);
        auto existing = std::find_if(members_.begin(), members_.end(), [mid](const auto& m) { return m && m->id() == mid; });
        if (existing != members_.end()) {
            (*existing)->load(rec, ctx);
            next.push_back(std::move(*existing));
        } else {
            next.push_back(ctx.materialize(rec));
        }
        adopt(*next.back());
    }
    members_ = std::move(next);
}

// ---- SimpleFrame

SimpleFrame::SimpleFrame(FigureId id, RectF rect) : Figure(id), rect_(rect) {
    require_rect(rect_, "frame");
    define_cover();
}

Cover SimpleFrame::build_cover() const {
    std::vector<CoverNode> nodes = frame_only_cover(rect_).nodes();
    for (auto& n : nodes) {
        if (n.freedom == MovementFreedom::Transparent) continue;
        n.freedom = MovementFreedom::All;
        n.cursor = CursorHint::SizeAll;
        n.role = NodeRole::Body;
    }
    return Cover(std::move(nodes));
}

void SimpleFrame::save_state(json& out) const { out["rect"] = to_json(rect_); }

void SimpleFrame::load_state(const json& in, LoadContext&) { load_field(in, "rect", rect_); }

} // namespace udapp
