#include <udapp/primitives.hpp>

#include <udapp/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace udapp {

namespace {

std::string_view to_string(LineDir d) { return d == LineDir::Hor ? "Hor" : "Ver"; }

LineDir line_dir_from(const std::string& s) {
    if (s == "Hor") return LineDir::Hor;
    if (s == "Ver") return LineDir::Ver;
    fail(ErrorCode::Schema, "unknown direction '" + s + "'");
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

// ---- StripBar

StripBar::StripBar(FigureId id, Point2D anchor, LineDir dir, double length, double thickness, double value_scale,
                   double halfsense)
    : Figure(id), anchor_(anchor), dir_(dir), offset_(0.0), thickness_(thickness), value_scale_(value_scale),
      halfsense_(halfsense) {
    if (!is_finite(anchor_) || !std::isfinite(length) || !std::isfinite(thickness_) || !(thickness_ > 0.0) ||
        !std::isfinite(value_scale_) || !(value_scale_ > 0.0) || !(halfsense_ > 0.0))
        fail(ErrorCode::InvalidArgument, "invalid strip bar");
    set_length(length);
    define_cover();
}

double StripBar::length() const { return dir_ == LineDir::Hor ? -offset_ : offset_; }

void StripBar::set_length(double len) {
    len = std::max(len, kMinStripLength);
    offset_ = dir_ == LineDir::Hor ? -len : len;
}

void StripBar::set_value(double v) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "strip value must be finite");
    set_length(v / value_scale_);
    define_cover();
}

double StripBar::value_edge() const { return dir_ == LineDir::Hor ? anchor_.y + offset_ : anchor_.x + offset_; }

RectF StripBar::bounds() const {
    if (dir_ == LineDir::Hor) {
        const double cy_t = anchor_.y + offset_;
        return {anchor_.x, cy_t, thickness_, std::max(2.0, anchor_.y - cy_t)};
    }
    return {anchor_.x, anchor_.y, std::max(2.0, offset_), thickness_};
}

void StripBar::place(Point2D anchor, double thickness) {
    if (!is_finite(anchor) || !(thickness > 0.0)) fail(ErrorCode::InvalidArgument, "invalid strip placement");
    anchor_ = anchor;
    thickness_ = thickness;
    define_cover();
}

Cover StripBar::build_cover() const {
    CoverBuilder b;
    const RectF body = bounds();
    if (dir_ == LineDir::Hor) {
        const double cy = anchor_.y + offset_;
        b.add(StripShape{{anchor_.x, cy}, {anchor_.x + thickness_, cy}, halfsense_}, MovementFreedom::NS,
              CursorHint::SizeNS, NodeRole::Reshape);
    } else {
        const double cx = anchor_.x + offset_;
        b.add(StripShape{{cx, anchor_.y}, {cx, anchor_.y + thickness_}, halfsense_}, MovementFreedom::WE,
              CursorHint::SizeWE, NodeRole::Reshape);
    }
    b.add(rect_polygon(body), MovementFreedom::Freeze, CursorHint::Default, NodeRole::Body);
    return std::move(b).build();
}

bool StripBar::move_node(std::size_t node, Vec2 d, Point2D, ButtonRole role) {
    if (role != ButtonRole::Move || node != 0) return false;
    const double before = offset_;
    set_length(dir_ == LineDir::Hor ? length() - d.dy : length() + d.dx);
    if (offset_ == before) return false;
    define_cover();
    return true;
}

void StripBar::save_state(json& out) const {
    out["anchor"] = to_json(anchor_);
    out["direction"] = std::string(to_string(dir_));
    out["offset"] = offset_;
    out["thickness"] = thickness_;
    out["value_scale"] = value_scale_;
    out["halfsense"] = halfsense_;
}

void StripBar::load_state(const json& in, LoadContext&) {
    load_field(in, "anchor", anchor_);
    std::string dir(to_string(dir_));
    load_field(in, "direction", dir);
    dir_ = line_dir_from(dir);
    load_field(in, "offset", offset_);
    load_field(in, "thickness", thickness_);
    load_field(in, "value_scale", value_scale_);
    load_field(in, "halfsense", halfsense_);
    if (!(thickness_ > 0.0) || !(value_scale_ > 0.0) || !(halfsense_ > 0.0) || length() < kMinStripLength)
        fail(ErrorCode::Schema, "invalid strip bar state");
}

// ---- BarChart

BarChart::BarChart(IdSource& ids, FigureId id, RectF frame, const std::vector<double>& values, double value_scale)
    : Figure(id), frame_(frame) {
    if (!is_finite(frame_) || !(frame_.width > 0.0) || !(frame_.height > 0.0) || values.empty())
        fail(ErrorCode::InvalidArgument, "bar chart needs a frame and at least one value");
    for (double v : values) {
        strips_.push_back(std::make_unique<StripBar>(ids(), frame_.top_left(), LineDir::Hor, v / value_scale, 1.0,
                                                     value_scale));
        adopt(*strips_.back());
    }
    layout();
    define_cover();
}

void BarChart::layout() {
    const double slot = frame_.width / static_cast<double>(strips_.size());
    for (std::size_t i = 0; i < strips_.size(); ++i)
        strips_[i]->place({frame_.left + slot * (static_cast<double>(i) + 0.2), frame_.bottom() - 4.0}, slot * 0.6);
}

std::vector<double> BarChart::values() const {
    std::vector<double> out;
    for (const auto& s : strips_) out.push_back(s->value());
    return out;
}

bool BarChart::move_node(std::size_t node, Vec2 d, Point2D, ButtonRole role) {
    if (role != ButtonRole::Move) return false;
    const auto h = rect_handle_for_node(node);
    if (!h) return false;
    const RectF next = resize_rect(frame_, *h, d, 3.0 * kMinFigureSize);
    if (next == frame_) return false;
    frame_ = next;
    layout();
    define_cover();
    return true;
}

void BarChart::into_mover(std::vector<Figure*>& block) {
    for (auto& s : strips_)
        if (s->visible()) s->into_mover(block);
    block.push_back(this);
}

void BarChart::for_each_child(const std::function<void(Figure&)>& fn) {
    for (auto& s : strips_) fn(*s);
}

void BarChart::translate(Vec2 d) {
    frame_ = frame_.translated(d);
    for (auto& s : strips_) s->move_by(d);
}

void BarChart::save_state(json& out) const {
    out["frame"] = to_json(frame_);
    json ss = json::array();
    for (const auto& s : strips_) ss.push_back(s->save());
    out["strips"] = std::move(ss);
}

void BarChart::load_state(const json& in, LoadContext& ctx) {
    load_field(in, "frame", frame_);
    const auto it = in.find("strips");
    if (it == in.end() || !it->is_array()) fail(ErrorCode::Schema, ctx.path() + ": missing array 'strips'");
    if (it->size() != strips_.size()) ctx.mismatch("strip count differs from the roster");
    for (std::size_t i = 0; i < strips_.size(); ++i) {
        LoadContext::Scope s(ctx, "strips/" + std::to_string(i));
        strips_[i]->load((*it)[i], ctx);
    }
}

// ---- Ring

Ring::Ring(FigureId id, Point2D center, double r_inner, double r_outer, std::vector<double> boundaries,
           bool resizable)
    : Figure(id), center_(center), r_inner_(r_inner), r_outer_(r_outer), boundaries_(std::move(boundaries)),
      resizable_(resizable) {
    validate();
    define_cover();
}

void Ring::validate() const {
    if (!is_finite(center_) || !std::isfinite(r_inner_) || !std::isfinite(r_outer_) || r_inner_ < 0.0 ||
        !(r_outer_ > r_inner_))
        fail(ErrorCode::InvalidArgument, "ring radii must satisfy 0 <= inner < outer");
    if (boundaries_.empty()) fail(ErrorCode::InvalidArgument, "ring needs at least one sector");
    for (double b : boundaries_)
        if (!std::isfinite(b)) fail(ErrorCode::InvalidArgument, "ring boundary must be finite");
    for (double a : sector_angles())
        if (!(a >= kMinSectorAngle)) fail(ErrorCode::InvalidArgument, "ring sectors must be at least 0.05 rad");
}

std::vector<double> Ring::sector_angles() const {
    const std::size_t n = boundaries_.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i + 1 < n; ++i) out[i] = boundaries_[i + 1] - boundaries_[i];
    out[n - 1] = (boundaries_[0] + kTwoPi) - boundaries_[n - 1];
    return out;
}

std::vector<double> Ring::values(double total) const {
    std::vector<double> out = sector_angles();
    for (double& a : out) a = a / kTwoPi * total;
    return out;
}

RectF Ring::bounds() const {
    return {center_.x - r_outer_, center_.y - r_outer_, 2.0 * r_outer_, 2.0 * r_outer_};
}

void Ring::set_resizable(bool v) {
    resizable_ = v;
    define_cover();
}

std::size_t Ring::circle_segments() const {
    return std::max<std::size_t>(12, static_cast<std::size_t>(std::ceil(kTwoPi * r_outer_ / 20.0)));
}

Cover Ring::build_cover() const {
    const std::size_t n_seg = circle_segments();
    auto on_circle = [this](double r, double a) {
        return Point2D{center_.x + r * std::cos(a), center_.y + r * std::sin(a)};
    };
    std::vector<double> seg_angles(n_seg + 1);
    for (std::size_t k = 0; k <= n_seg; ++k)
        seg_angles[k] = kTwoPi * static_cast<double>(k % n_seg) / static_cast<double>(n_seg);
    CoverBuilder b;
    if (resizable_) {
        for (double bd : boundaries_) {
            const double a = bd + rotation_;
            const Point2D from = r_inner_ > 0.0 ? on_circle(r_inner_, a) : center_;
            b.add(StripShape{from, on_circle(r_outer_, a), kDefaultSense}, MovementFreedom::All, CursorHint::Hand,
                  NodeRole::Reshape);
        }
        for (std::size_t k = 0; k < n_seg; ++k)
            b.add(StripShape{on_circle(r_outer_, seg_angles[k]), on_circle(r_outer_, seg_angles[k + 1]), kDefaultSense},
                  MovementFreedom::All, CursorHint::Hand, NodeRole::Reshape);
        if (r_inner_ > 0.0)
            for (std::size_t k = 0; k < n_seg; ++k)
                b.add(StripShape{on_circle(r_inner_, seg_angles[k]), on_circle(r_inner_, seg_angles[k + 1]),
                                 kDefaultSense},
                      MovementFreedom::All, CursorHint::Hand, NodeRole::Reshape);
    }
    for (std::size_t k = 0; k < n_seg; ++k) {
        PolygonShape poly;
        if (r_inner_ > 0.0)
            poly.vertices = {on_circle(r_inner_, seg_angles[k]), on_circle(r_outer_, seg_angles[k]),
                             on_circle(r_outer_, seg_angles[k + 1]), on_circle(r_inner_, seg_angles[k + 1])};
        else
            poly.vertices = {center_, on_circle(r_outer_, seg_angles[k]), on_circle(r_outer_, seg_angles[k + 1])};
        b.add(std::move(poly), MovementFreedom::All, CursorHint::SizeAll, NodeRole::Body);
    }
    return std::move(b).build();
}

bool Ring::start_resectoring(std::size_t k) {
    const std::size_t n = boundaries_.size();
    if (!resizable_ || n < 2 || k >= n) return false;
    const double lo = k == 0 ? boundaries_[n - 1] - kTwoPi : boundaries_[k - 1];
    const double hi = k == n - 1 ? boundaries_[0] + kTwoPi : boundaries_[k + 1];
    resector_ = Resector{k, lo, hi};
    return true;
}

std::pair<double, double> Ring::resectoring_window() const {
    if (!resector_) return {0.0, 0.0};
    return {resector_->lo, resector_->hi};
}

bool Ring::move_border_to(Point2D p) {
    if (!resector_ || p == center_) return false;
    const std::size_t n = boundaries_.size();
    const std::size_t k = resector_->border;
    const double lo = resector_->lo;
    const double hi = resector_->hi;
    const double theta = polar_angle(p - center_).value - rotation_;
    double x = lo + normalize_angle(theta - lo);
    if (x >= hi) x = (x - hi) <= (lo + kTwoPi - x) ? hi : lo; // dead arc: nearer end
    if (lo + kMinSectorAngle > hi - kMinSectorAngle) return false;
    x = std::clamp(x, lo + kMinSectorAngle, hi - kMinSectorAngle);

    // Sector sizes exactly as sector_angles() computes them.
    auto left = [&](double v) { return k == 0 ? (v + kTwoPi) - boundaries_[n - 1] : v - boundaries_[k - 1]; };
    auto right = [&](double v) { return k == n - 1 ? (boundaries_[0] + kTwoPi) - v : boundaries_[k + 1] - v; };
    constexpr double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 64; ++i) {
        if (left(x) < kMinSectorAngle) x = std::nextafter(x, inf);
        else if (right(x) < kMinSectorAngle) x = std::nextafter(x, -inf);
        else break;
    }
    if (left(x) < kMinSectorAngle || right(x) < kMinSectorAngle) return false;
    if (x == boundaries_[k]) return false;
    boundaries_[k] = x;
    place_comments();
    define_cover();
    return true;
}

void Ring::add_comment(std::unique_ptr<Comment> c, RingCommentPlacement where) {
    if (!c) fail(ErrorCode::InvalidArgument, "null comment");
    if (!where.whole_ring && where.sector >= boundaries_.size())
        fail(ErrorCode::InvalidArgument, "comment sector out of range");
    adopt(*c);
    comments_.push_back({std::move(c), where});
    if (!where.whole_ring) comments_.back().comment->place_at(comment_point(where));
    else comments_.back().comment->place_at(center_ + where.offset);
}

Point2D Ring::comment_point(const RingCommentPlacement& w) const {
    if (w.whole_ring) return center_ + w.offset;
    const double size = sector_angles()[w.sector];
    const double a = boundaries_[w.sector] + rotation_ + w.fraction * size;
    const double r = w.radial * r_outer_;
    return {center_.x + r * std::cos(a), center_.y + r * std::sin(a)};
}

void Ring::place_comments() {
    for (auto& c : comments_)
        if (!c.where.whole_ring) c.comment->place_at(comment_point(c.where));
}

void Ring::capture_placement(OwnedComment& c) {
    const Point2D p = c.comment->center();
    if (c.where.whole_ring) {
        c.where.offset = p - center_;
        return;
    }
    const double size = sector_angles()[c.where.sector];
    const double rel = normalize_angle(polar_angle(p - center_).value - rotation_ - boundaries_[c.where.sector]);
    c.where.fraction = rel / size;
    c.where.radial = distance(p, center_) / r_outer_;
}

void Ring::on_catch(std::size_t node, ButtonRole role, Point2D p) {
    Figure::on_catch(node, role, p);
    radius_drag_ = RadiusDrag::None;
    if (role != ButtonRole::Move || !resizable_ || !movable()) return;
    const std::size_t n = boundaries_.size();
    const std::size_t seg = circle_segments();
    if (node < n) {
        start_resectoring(node);
    } else if (node < n + seg) {
        radius_drag_ = RadiusDrag::Outer;
        radius_grab_offset_ = distance(p, center_) - r_outer_;
    } else if (r_inner_ > 0.0 && node < n + 2 * seg) {
        radius_drag_ = RadiusDrag::Inner;
        radius_grab_offset_ = distance(p, center_) - r_inner_;
    }
}

bool Ring::on_release() {
    end_resectoring();
    radius_drag_ = RadiusDrag::None;
    return Figure::on_release();
}

bool Ring::move_node(std::size_t, Vec2, Point2D p, ButtonRole role) {
    if (role != ButtonRole::Move) return false;
    if (resector_) return move_border_to(p);
    if (radius_drag_ == RadiusDrag::None) return false;
    const double want = distance(p, center_) - radius_grab_offset_;
    double& r = radius_drag_ == RadiusDrag::Outer ? r_outer_ : r_inner_;
    const double before = r;
    if (radius_drag_ == RadiusDrag::Outer) r = std::max(want, r_inner_ + kMinRingGap);
    else r = std::clamp(want, std::min(r_inner_, kMinRingGap), r_outer_ - kMinRingGap);
    if (r == before) return false;
    place_comments();
    define_cover();
    return true;
}

void Ring::into_mover(std::vector<Figure*>& block) {
    for (auto& c : comments_)
        if (c.comment->visible()) c.comment->into_mover(block);
    block.push_back(this);
}

void Ring::for_each_child(const std::function<void(Figure&)>& fn) {
    for (auto& c : comments_) fn(*c.comment);
}

bool Ring::on_child_changed(Figure& child) {
    for (auto& c : comments_)
        if (c.comment.get() == &child) capture_placement(c);
    return false;
}

void Ring::translate(Vec2 d) {
    center_ = center_ + d;
    for (auto& c : comments_) c.comment->move_by(d);
}

void Ring::set_angle(AngleRad a) {
    rotation_ = a.value;
    place_comments();
}

void Ring::save_state(json& out) const {
    out["center"] = to_json(center_);
    out["r_inner"] = r_inner_;
    out["r_outer"] = r_outer_;
    out["boundaries"] = boundaries_;
    out["rotation"] = rotation_;
    out["resizable"] = resizable_;
    json cs = json::array();
    for (const auto& c : comments_) {
        json rec = c.comment->save();
        rec["placement"] = {{"whole_ring", c.where.whole_ring}, {"sector", c.where.sector},
                            {"fraction", c.where.fraction},     {"radial", c.where.radial},
                            {"offset", json::array({c.where.offset.dx, c.where.offset.dy})}};
        cs.push_back(std::move(rec));
    }
    out["comments"] = std::move(cs);
}

void Ring::load_state(const json& in, LoadContext& ctx) {
    load_field(in, "center", center_);
    load_field(in, "r_inner", r_inner_);
    load_field(in, "r_outer", r_outer_);
    std::vector<double> bs = boundaries_;
    load_field(in, "boundaries", bs);
    if (bs.size() != boundaries_.size()) ctx.mismatch("sector count differs from the roster");
    boundaries_ = std::move(bs);
    load_field(in, "rotation", rotation_);
    load_field(in, "resizable", resizable_);
    try {
        validate();
    } catch (const Error& e) {
        fail(ErrorCode::Schema, ctx.path() + ": " + e.what());
    }
    const auto it = in.find("comments");
    if (it == in.end() || !it->is_array()) fail(ErrorCode::Schema, ctx.path() + ": missing array 'comments'");
    if (it->size() != comments_.size()) ctx.mismatch("comment count differs from the roster");
    for (std::size_t i = 0; i < comments_.size(); ++i) {
        LoadContext::Scope s(ctx, "comments/" + std::to_string(i));
        const json& rec = (*it)[i];
        comments_[i].comment->load(rec, ctx);
        if (const auto pl = rec.find("placement"); pl != rec.end() && pl->is_object()) {
            auto& w = comments_[i].where;
            load_field(*pl, "whole_ring", w.whole_ring);
            load_field(*pl, "sector", w.sector);
            load_field(*pl, "fraction", w.fraction);
            load_field(*pl, "radial", w.radial);
            std::vector<double> off{w.offset.dx, w.offset.dy};
            load_field(*pl, "offset", off);
            if (off.size() != 2 || (!w.whole_ring && w.sector >= boundaries_.size()))
                fail(ErrorCode::Schema, ctx.path() + ": invalid comment placement");
            w.offset = {off[0], off[1]};
        }
    }
}

PieChart::PieChart(IdSource& ids, FigureId id, Point2D center, double radius, std::vector<double> boundaries,
                   const std::vector<std::string>& labels, bool resizable)
    : Ring(id, center, 0.0, radius, std::move(boundaries), resizable) {
    if (labels.size() != sectors()) fail(ErrorCode::InvalidArgument, "one label per sector is required");
    for (std::size_t i = 0; i < labels.size(); ++i)
        add_comment(std::make_unique<Comment>(ids(), labels[i], center, 11.0),
                    RingCommentPlacement{false, i, 0.5, 0.65, {}});
}

// ---- TrackBar

TrackBar::TrackBar(IdSource& ids, FigureId id, RectF track, double lo, double hi, double value,
                   const std::string& title)
    : Figure(id), track_(track), lo_(lo), hi_(hi), value_(value) {
    if (!is_finite(track_) || !(track_.width > 0.0) || !(track_.height > 0.0))
        fail(ErrorCode::InvalidArgument, "track bar needs a non-zero track");
    if (!std::isfinite(lo_) || !std::isfinite(hi_) || !(lo_ < hi_)) fail(ErrorCode::InvalidArgument, "track range must be lo < hi");
    value_ = std::clamp(std::isfinite(value) ? value : lo_, lo_, hi_);
    const double f = 11.0;
    title_ = std::make_unique<Comment>(
        ids(), title, Point2D{track_.left + text_width(title, f) / 2.0, track_.top - 4.0 - f / 2.0}, f);
    low_ = std::make_unique<Comment>(ids(), format_number(lo_), track_.top_left(), f);
    high_ = std::make_unique<Comment>(ids(), format_number(hi_), track_.top_left(), f);
    low_->set_movable(false);
    high_->set_movable(false);
    for (Comment* c : {title_.get(), low_.get(), high_.get()}) adopt(*c);
    anchor_ = track_.top_left();
    pin_labels();
    define_cover();
}

void TrackBar::pin_labels() {
    low_->place_at({track_.left, track_.bottom() + 10.0});
    high_->place_at({track_.right(), track_.bottom() + 10.0});
}

RectF TrackBar::bounds() const {
    std::vector<RectF> rs{track_};
    for (const Comment* c : {title_.get(), low_.get(), high_.get()})
        if (c->visible()) rs.push_back(c->bounds());
    return rect_union(rs);
}

double TrackBar::thumb_x() const { return track_.left + track_.width * (value_ - lo_) / (hi_ - lo_); }

void TrackBar::set_value(double v) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "track value must be finite");
    value_ = std::clamp(v, lo_, hi_);
    define_cover();
}

double TrackBar::set_from_point(Point2D p) {
    const double f = std::clamp((p.x - track_.left) / track_.width, 0.0, 1.0);
    value_ = lo_ + (hi_ - lo_) * f;
    define_cover();
    return value_;
}

Cover TrackBar::build_cover() const {
    CoverBuilder b;
    const double tx = thumb_x();
    b.add(rect_polygon({tx - 4.0, track_.top - 2.0, 8.0, track_.height + 4.0}), MovementFreedom::WE,
          CursorHint::SizeWE, NodeRole::Reshape);
    b.add(StripShape{track_.top_left(), {track_.left, track_.bottom()}, kDefaultSense}, MovementFreedom::WE,
          CursorHint::SizeWE, NodeRole::Reshape);
    b.add(StripShape{{track_.right(), track_.top}, {track_.right(), track_.bottom()}, kDefaultSense},
          MovementFreedom::WE, CursorHint::SizeWE, NodeRole::Reshape);
    b.add(rect_polygon(track_), MovementFreedom::All, CursorHint::SizeAll, NodeRole::Body);
    return std::move(b).build();
}

bool TrackBar::move_node(std::size_t node, Vec2 d, Point2D p, ButtonRole role) {
    if (role != ButtonRole::Move) return false;
    if (node == kTrackThumb) {
        const double before = value_;
        set_from_point(p);
        return value_ != before;
    }
    if (node != kTrackLeft && node != kTrackRight) return false;
    const RectF next = resize_rect(track_, node == kTrackLeft ? RectHandle::Left : RectHandle::Right, {d.dx, 0.0},
                                   kMinTrackWidth);
    if (next == track_) return false;
    track_ = next;
    const Point2D tl = track_.top_left();
    title_->move_by(tl - anchor_);
    anchor_ = tl;
    pin_labels();
    define_cover();
    return true;
}

void TrackBar::into_mover(std::vector<Figure*>& block) {
    for (Comment* c : {title_.get(), low_.get(), high_.get()})
        if (c->visible()) c->into_mover(block);
    block.push_back(this);
}

void TrackBar::for_each_child(const std::function<void(Figure&)>& fn) {
    fn(*title_);
    fn(*low_);
    fn(*high_);
}

bool TrackBar::on_child_changed(Figure&) {
    define_cover();
    return true;
}

void TrackBar::translate(Vec2 d) {
    track_ = track_.translated(d);
    anchor_ = track_.top_left();
    title_->move_by(d);
    low_->move_by(d);
    high_->move_by(d);
}

void TrackBar::save_state(json& out) const {
    out["track"] = to_json(track_);
    out["lo"] = lo_;
    out["hi"] = hi_;
    out["value"] = value_;
    out["anchor"] = to_json(anchor_);
    out["title"] = title_->save();
    out["low_label"] = low_->save();
    out["high_label"] = high_->save();
}

void TrackBar::load_state(const json& in, LoadContext& ctx) {
    load_field(in, "track", track_);
    load_field(in, "lo", lo_);
    load_field(in, "hi", hi_);
    load_field(in, "value", value_);
    if (!(track_.width > 0.0) || !(lo_ < hi_) || value_ < lo_ || value_ > hi_)
        fail(ErrorCode::Schema, ctx.path() + ": invalid track bar state");
    const std::pair<const char*, Comment*> parts[] = {
        {"title", title_.get()}, {"low_label", low_.get()}, {"high_label", high_.get()}};
    for (const auto& [key, c] : parts) {
        if (const auto it = in.find(key); it != in.end()) {
            LoadContext::Scope s(ctx, key);
            c->load(*it, ctx);
        }
    }
    anchor_ = track_.top_left();
    load_field(in, "anchor", anchor_);
}

} // namespace udapp
