#include <udapp/session.hpp>

#include <udapp/controls.hpp>
#include <udapp/error.hpp>
#include <udapp/groups.hpp>
#include <udapp/primitives.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <sstream>

namespace udapp {

std::string_view to_string(EmptyDrag m) {
    switch (m) {
    case EmptyDrag::None: return "none";
    case EmptyDrag::Pan: return "pan";
    case EmptyDrag::RubberBand: return "rubber-band";
    }
    return "none";
}

EmptyDrag empty_drag_from(const std::string& s) {
    if (s == "none") return EmptyDrag::None;
    if (s == "pan") return EmptyDrag::Pan;
    if (s == "rubber-band") return EmptyDrag::RubberBand;
    fail(ErrorCode::InvalidArgument, "unknown empty-drag mode '" + s + "'");
}

namespace {

std::string button_code(MouseButton b) { return b == MouseButton::Left ? "L" : "R"; }

MouseButton button_from(const std::string& s) {
    if (s == "L") return MouseButton::Left;
    if (s == "R") return MouseButton::Right;
    fail(ErrorCode::InvalidArgument, "button must be \"L\" or \"R\"");
}

template <typename T>
T arg(const json& args, const char* key) {
    const auto it = args.find(key);
    if (it == args.end()) fail(ErrorCode::InvalidArgument, std::string("missing argument '") + key + "'");
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        fail(ErrorCode::InvalidArgument, std::string("argument '") + key + "' has the wrong type");
    }
}

template <typename T>
T arg_or(const json& args, const char* key, T fallback) {
    return args.contains(key) ? arg<T>(args, key) : fallback;
}

double finite_arg(const json& args, const char* key) {
    const double v = arg<double>(args, key);
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, std::string("argument '") + key + "' must be finite");
    return v;
}

template <typename T>
T& expect(Figure& f, const char* what) {
    auto* t = dynamic_cast<T*>(&f);
    if (!t) fail(ErrorCode::InvalidArgument, "figure " + std::to_string(f.id()) + " is not " + what);
    return *t;
}

} // namespace

// ---- Scene

Scene::Scene(std::string name, double width, double height) : name_(std::move(name)), width_(0), height_(0) {
    set_window(width, height);
}

void Scene::set_window(double width, double height) {
    if (!std::isfinite(width) || !std::isfinite(height) || !(width > 0.0) || !(height > 0.0))
        fail(ErrorCode::InvalidArgument, "window size must be positive");
    width_ = width;
    height_ = height;
}

Figure& Scene::add(std::unique_ptr<Figure> f) {
    if (!f) fail(ErrorCode::InvalidArgument, "null figure");
    if (find(f->id())) fail(ErrorCode::InvalidArgument, "duplicate figure id " + std::to_string(f->id()));
    roots_.push_back(std::move(f));
    renew_mover();
    return *roots_.back();
}

Figure* Scene::find(FigureId id) const {
    Figure* hit = nullptr;
    for (const auto& r : roots_)
        visit_tree(*r, [&](Figure& f) {
            if (!hit && f.id() == id) hit = &f;
        });
    return hit;
}

void Scene::renew_mover() {
    mover_.clear();
    for (const auto& r : roots_)
        if (r->visible()) mover_.add(*r);
}

std::optional<RectF> Scene::rubber_band() const {
    if (!band_) return std::nullopt;
    return rect_from_points(std::vector<Point2D>{band_->from, band_->to});
}

std::optional<Scene::Hit> Scene::hit_test(Point2D view_point) const {
    const Point2D p = to_scene(view_point);
    for (const Figure* f : mover_.queue())
        if (const auto n = f->cover().hit_test(p)) return Hit{f->id(), *n, f->cover()[*n].cursor};
    return std::nullopt;
}

void Scene::capture_defaults() {
    for (const auto& r : roots_) visit_tree(*r, [](Figure& f) { f.capture_default(); });
}

std::size_t Scene::root_index(FigureId id) const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i]->id() == id) return i;
    fail(ErrorCode::NotFound, "no top-level figure with id " + std::to_string(id));
}

Figure& Scene::require(const json& args) const {
    const auto id = arg<FigureId>(args, "id");
    Figure* f = find(id);
    if (!f) fail(ErrorCode::NotFound, "no figure with id " + std::to_string(id));
    return *f;
}

EventOutcome Scene::pointer(EventKind kind, Point2D p, MouseButton b) {
    EventOutcome out;
    if (!is_finite(p)) return {false, true, "non-finite pointer position"};
    switch (kind) {
    case EventKind::Down: {
        if (pending_) return {false, true, "down while a button is already pressed"};
        pending_ = b;
        if (mover_.catch_at(to_scene(p), b)) return out;
        if (b != mover_.buttons.move) return out;
        if (empty_drag_ == EmptyDrag::Pan) pan_ = Pan{view_offset_, p};
        else if (empty_drag_ == EmptyDrag::RubberBand) band_ = Band{to_scene(p), to_scene(p)};
        return out;
    }
    case EventKind::Move: {
        if (mover_.dragging()) {
            out.changed = mover_.move(to_scene(p));
        } else if (pan_) {
            const Vec2 next = pan_->offset_at_down + (p - pan_->down);
            out.changed = next != view_offset_;
            view_offset_ = next;
        } else if (band_) {
            band_->to = to_scene(p);
        }
        return out;
    }
    case EventKind::Up: {
        if (!pending_ || *pending_ != b) return {false, true, "up without a matching down"};
        out = pointer(EventKind::Move, p, b);
        if (mover_.dragging()) {
            bool adjusted = false;
            mover_.release(&adjusted);
            out.changed = out.changed || adjusted;
        }
        pan_.reset();
        if (band_) {
            const RectF r = *rubber_band();
            band_.reset();
            out.changed = select_in_rect(r) || out.changed;
        }
        pending_.reset();
        return out;
    }
    case EventKind::Command: break;
    }
    return {false, true, "not a pointer event"};
}

bool Scene::group_roots(std::vector<std::size_t> indices, const std::string& label, bool predefined) {
    if (indices.empty()) return false;
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    const std::size_t at = indices.front();
    std::vector<std::unique_ptr<Figure>> members;
    for (std::size_t i : indices) {
        if (dynamic_cast<const RectSelectGroup*>(roots_.at(i).get()))
            fail(ErrorCode::InvalidArgument, "groups cannot be nested in a selection group");
        members.push_back(std::move(roots_[i]));
    }
    roots_.erase(std::remove(roots_.begin(), roots_.end(), nullptr), roots_.end());
    auto g = std::make_unique<RectSelectGroup>(ids_(), std::move(members), label, predefined);
    g->set_dynamic(true);
    roots_.insert(roots_.begin() + static_cast<std::ptrdiff_t>(at), std::move(g));
    renew_mover();
    return true;
}

bool Scene::select_in_rect(const RectF& r) {
    if (!(r.width > 0.0) || !(r.height > 0.0)) return false;
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        const Figure& f = *roots_[i];
        if (f.visible() && !dynamic_cast<const RectSelectGroup*>(&f) && r.contains(f.bounds())) inside.push_back(i);
    }
    return group_roots(std::move(inside), "Arbitrary", false);
}

EventOutcome Scene::command(const std::string& name, const json& args) {
    if (pending_) return {false, true, "command '" + name + "' while a button is pressed"};
    if (!args.is_object()) return {false, true, "command arguments must be an object"};
    try {
        const std::string before = canonical_dump(save());
        run_command(name, args);
        return {canonical_dump(save()) != before, false, {}};
    } catch (const Error& e) {
        return {false, true, name + ": " + e.what()};
    }
}

bool Scene::run_command(const std::string& name, const json& args) {
    if (name == "set-visible") {
        Figure& f = require(args);
        const bool v = arg<bool>(args, "value");
        if (!v && !f.hideable()) fail(ErrorCode::InvalidArgument, "figure " + std::to_string(f.id()) + " cannot be hidden");
        f.set_visible(v);
        notify_changed(f);
        renew_mover();
        return true;
    }
    if (name == "set-movable") {
        require(args).set_movable(arg<bool>(args, "value"));
        return true;
    }
    if (name == "set-elements-movable") {
        expect<ElasticGroup>(require(args), "an elastic group").set_elements_movable(arg<bool>(args, "value"));
        return true;
    }
    if (name == "set-resizable") {
        Figure& f = require(args);
        const bool v = arg<bool>(args, "value");
        if (auto* r = dynamic_cast<Ring*>(&f)) r->set_resizable(v);
        else expect<RectFigure>(f, "resizable").set_resizable(v);
        return true;
    }
    if (name == "set-font-size") {
        Figure& f = require(args);
        const double v = finite_arg(args, "value");
        if (auto* cc = dynamic_cast<CommentedControl*>(&f)) {
            cc->set_comment_font(v);
        } else if (auto* c = dynamic_cast<Comment*>(&f)) {
            if (auto* owner = dynamic_cast<CommentedControl*>(c->parent())) {
                owner->set_comment_font(v);
            } else {
                c->set_font_size(v);
                notify_changed(*c);
            }
        } else if (auto* p = dynamic_cast<ControlProxy*>(&f)) {
            p->set_font_size(v);
            notify_changed(*p);
        } else {
            expect<ElasticGroup>(f, "text-bearing").set_visual("title_font", v);
            notify_changed(f);
        }
        return true;
    }
    if (name == "set-title-position") {
        Figure& f = require(args);
        expect<ElasticGroup>(f, "an elastic group").set_title_position(finite_arg(args, "value"));
        return true;
    }
    if (name == "set-visual") {
        Figure& f = require(args);
        expect<ElasticGroup>(f, "an elastic group").set_visual(arg<std::string>(args, "key"), args.at("value"));
        notify_changed(f);
        return true;
    }
    if (name == "set-value") {
        Figure& f = require(args);
        const double v = finite_arg(args, "value");
        if (auto* s = dynamic_cast<StripBar*>(&f)) {
            s->set_value(v);
        } else if (auto* t = dynamic_cast<TrackBar*>(&f)) {
            t->set_value(v);
        } else {
            auto& c = expect<BarChart>(f, "a value figure");
            const auto i = arg<std::size_t>(args, "index");
            if (i >= c.size()) fail(ErrorCode::InvalidArgument, "bar index out of range");
            c.strip(i).set_value(v);
            return true;
        }
        notify_changed(f);
        return true;
    }
    if (name == "select-rect") {
        const auto r = arg<std::vector<double>>(args, "rect");
        if (r.size() != 4) fail(ErrorCode::InvalidArgument, "rect must be [left, top, width, height]");
        return select_in_rect({r[0], r[1], r[2], r[3]});
    }
    if (name == "frame-group") {
        std::vector<std::size_t> idx;
        std::string label = arg_or<std::string>(args, "label", "Arbitrary");
        bool predefined = false;
        if (args.contains("tag")) {
            const auto tag = arg<std::string>(args, "tag");
            for (std::size_t i = 0; i < roots_.size(); ++i)
                if (auto* p = dynamic_cast<const ControlProxy*>(roots_[i].get()); p && p->tag() == tag) idx.push_back(i);
            if (idx.empty()) fail(ErrorCode::InvalidArgument, "no free elements tagged '" + tag + "'");
            if (!args.contains("label")) label = tag;
            predefined = true;
        } else {
            for (FigureId id : arg<std::vector<FigureId>>(args, "ids")) idx.push_back(root_index(id));
        }
        return group_roots(std::move(idx), label, predefined);
    }
    if (name == "ungroup") {
        const std::size_t i = root_index(arg<FigureId>(args, "id"));
        auto& g = expect<RectSelectGroup>(*roots_[i], "a selection group");
        auto members = g.take_members();
        roots_.erase(roots_.begin() + static_cast<std::ptrdiff_t>(i));
        roots_.insert(roots_.begin() + static_cast<std::ptrdiff_t>(i), std::make_move_iterator(members.begin()),
                      std::make_move_iterator(members.end()));
        renew_mover();
        return true;
    }
    if (name == "raise") {
        const std::size_t i = root_index(arg<FigureId>(args, "id"));
        std::rotate(roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(i), roots_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        renew_mover();
        return true;
    }
    if (name == "reset-default") {
        if (args.contains("id")) {
            Figure& f = require(args);
            if (!f.reset_default()) fail(ErrorCode::InvalidArgument, "figure " + std::to_string(f.id()) + " has no default view");
            renew_mover();
            return true;
        }
        if (!factory_) fail(ErrorCode::InvalidArgument, "scene has no default view");
        auto fresh = factory_();
        fresh->store_ = std::move(store_);
        fresh->factory_ = factory_;
        *this = std::move(*fresh);
        return true;
    }
    if (name == "add-figure") {
        const auto cls = arg<std::string>(args, "class");
        if (cls != "Rect") fail(ErrorCode::InvalidArgument, "add-figure supports class \"Rect\" only");
        const auto r = arg<std::vector<double>>(args, "rect");
        if (r.size() != 4) fail(ErrorCode::InvalidArgument, "rect must be [left, top, width, height]");
        auto f = std::make_unique<RectFigure>(ids_(), RectF{r[0], r[1], r[2], r[3]},
                                              arg_or<std::string>(args, "kind", "rect"));
        f->set_dynamic(true);
        roots_.insert(roots_.begin(), std::move(f));
        renew_mover();
        return true;
    }
    if (name == "set-window") {
        set_window(finite_arg(args, "width"), finite_arg(args, "height"));
        return true;
    }
    if (name == "set-empty-drag") {
        empty_drag_ = empty_drag_from(arg<std::string>(args, "mode"));
        return true;
    }
    if (name == "set-buttons") {
        ButtonConfig b;
        b.move = button_from(arg_or<std::string>(args, "move", "L"));
        b.rotate = button_from(arg_or<std::string>(args, "rotate", "R"));
        mover_.buttons = b;
        return true;
    }
    if (name == "save") {
        store_archive(store_, arg_or<std::string>(args, "slot", "default"), save());
        return true;
    }
    if (name == "load") {
        const auto slot = arg_or<std::string>(args, "slot", "default");
        const auto doc = fetch_archive(store_, slot);
        if (!doc) fail(ErrorCode::NotFound, "nothing saved in slot '" + slot + "'");
        if (!factory_) fail(ErrorCode::InvalidArgument, "scene cannot be rebuilt");
        auto fresh = factory_();
        fresh->restore(*doc);
        fresh->store_ = std::move(store_);
        fresh->factory_ = factory_;
        *this = std::move(*fresh);
        return true;
    }
    fail(ErrorCode::InvalidArgument, "unknown command '" + name + "'");
}

EventOutcome Scene::apply(const ScriptEvent& ev) {
    if (ev.kind == EventKind::Command) return command(ev.name, ev.args);
    return pointer(ev.kind, ev.point, ev.button);
}

json Scene::save() const {
    json figs = json::array();
    for (const auto& r : roots_) figs.push_back(r->save());
    return {
        {"schema", kSceneSchema},
        {"scene", name_},
        {"window", {{"width", width_}, {"height", height_}}},
        {"view_offset", json::array({view_offset_.dx, view_offset_.dy})},
        {"empty_drag", std::string(to_string(empty_drag_))},
        {"buttons", {{"move", button_code(mover_.buttons.move)}, {"rotate", button_code(mover_.buttons.rotate)}}},
        {"next_id", ids_.peek()},
        {"figures", std::move(figs)},
    };
}

void Scene::restore(const json& archive) {
    validate_archive(archive);
    std::string scene = name_;
    load_field(archive, "scene", scene);
    if (scene != name_) fail(ErrorCode::RosterMismatch, "archive belongs to scene '" + scene + "', not '" + name_ + "'");

    LoadContext ctx(make_dynamic_figure);
    for (auto& r : roots_) ctx.add_roster(std::move(r));
    roots_.clear();
    mover_.clear();
    const json& figs = archive.at("figures");
    for (std::size_t i = 0; i < figs.size(); ++i) {
        LoadContext::Scope s(ctx, "figures/" + std::to_string(i));
        auto f = ctx.materialize(figs[i]);
        if (find(f->id())) ctx.mismatch("figure " + std::to_string(f->id()) + " appears twice");
        roots_.push_back(std::move(f));
    }
    const auto left = ctx.release_roster();
    if (!left.empty())
        fail(ErrorCode::RosterMismatch, "/figures: construction figure " + std::to_string(left.front()->id()) +
                                            " (" + std::string(left.front()->class_tag()) + ") is missing from the archive");

    if (const auto w = archive.find("window"); w != archive.end())
        set_window(w->value("width", width_), w->value("height", height_));
    std::vector<double> off{view_offset_.dx, view_offset_.dy};
    load_field(archive, "view_offset", off);
    if (off.size() != 2) fail(ErrorCode::Schema, "view_offset must be [dx, dy]");
    view_offset_ = {off[0], off[1]};
    std::string mode(to_string(empty_drag_));
    load_field(archive, "empty_drag", mode);
    empty_drag_ = empty_drag_from(mode);
    if (const auto b = archive.find("buttons"); b != archive.end() && b->is_object()) {
        mover_.buttons.move = button_from(b->value("move", button_code(mover_.buttons.move)));
        mover_.buttons.rotate = button_from(b->value("rotate", button_code(mover_.buttons.rotate)));
    }
    FigureId next = ids_.peek();
    load_field(archive, "next_id", next);
    ids_.reset(next);
    renew_mover();
}

Snapshot Scene::snapshot() const {
    Snapshot s;
    s.bytes = canonical_dump(save());
    s.sha256 = sha256_hex(s.bytes);
    return s;
}

// ---- scripts

std::vector<ScriptEvent> parse_script(const std::string& text) {
    std::vector<ScriptEvent> out;
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        const std::string where = "script line " + std::to_string(n) + ": ";
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            fail(ErrorCode::Parse, where + e.what());
        }
        if (!j.is_object()) fail(ErrorCode::Parse, where + "event must be an object");
        ScriptEvent ev;
        ev.line = n;
        try {
            const auto k = j.at("k").get<std::string>();
            if (k == "cmd") {
                ev.kind = EventKind::Command;
                ev.name = j.at("name").get<std::string>();
                ev.args = j.value("args", json::object());
                if (!ev.args.is_object()) fail(ErrorCode::Parse, where + "'args' must be an object");
            } else {
                if (k == "down") ev.kind = EventKind::Down;
                else if (k == "move") ev.kind = EventKind::Move;
                else if (k == "up") ev.kind = EventKind::Up;
                else fail(ErrorCode::Parse, where + "unknown event kind '" + k + "'");
                ev.point = {j.at("x").get<double>(), j.at("y").get<double>()};
                const auto b = j.value("b", std::string("L"));
                if (b != "L" && b != "R") fail(ErrorCode::Parse, where + "button must be \"L\" or \"R\"");
                ev.button = b == "L" ? MouseButton::Left : MouseButton::Right;
            }
        } catch (const json::exception& e) {
            fail(ErrorCode::Parse, where + e.what());
        }
        out.push_back(std::move(ev));
    }
    return out;
}

json event_to_json(const ScriptEvent& ev) {
    if (ev.kind == EventKind::Command) return {{"k", "cmd"}, {"name", ev.name}, {"args", ev.args}};
    const char* k = ev.kind == EventKind::Down ? "down" : ev.kind == EventKind::Move ? "move" : "up";
    return {{"k", k}, {"x", ev.point.x}, {"y", ev.point.y}, {"b", button_code(ev.button)}};
}

ReplayReport replay(Scene& scene, const std::vector<ScriptEvent>& events) {
    ReplayReport r;
    for (const auto& ev : events) {
        ++r.events;
        const EventOutcome o = scene.apply(ev);
        if (o.dropped) r.dropped.push_back({ev.line, o.reason});
        if (o.changed) ++r.changed;
    }
    r.final = scene.snapshot();
    return r;
}

json ReplayReport::to_json() const {
    json d = json::array();
    for (const auto& i : dropped) d.push_back({{"line", i.line}, {"reason", i.reason}});
    return {{"events", events}, {"changed", changed}, {"dropped", std::move(d)}, {"sha256", final.sha256}};
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        fail(ErrorCode::Io, "SHA-256 computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xF];
    }
    return out;
}

} // namespace udapp
