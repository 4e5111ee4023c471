#pragma once

#include <udapp/figure.hpp>
#include <udapp/mover.hpp>
#include <udapp/persistence.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace udapp {

enum class EventKind { Down, Move, Up, Command };

// What a press on empty space does with the move button.
enum class EmptyDrag { None, Pan, RubberBand };

std::string_view to_string(EmptyDrag m);
EmptyDrag empty_drag_from(const std::string& s);

struct ScriptEvent {
    EventKind kind = EventKind::Move;
    Point2D point;
    MouseButton button = MouseButton::Left;
    std::string name; // command name
    json args = json::object();
    std::size_t line = 0;
};

struct EventOutcome {
    bool changed = false;
    bool dropped = false;
    std::string reason;
};

struct Snapshot {
    std::string bytes; // canonical archive text
    std::string sha256;
};

struct ReplayIssue {
    std::size_t line = 0;
    std::string reason;
};

struct ReplayReport {
    std::size_t events = 0;
    std::size_t changed = 0;
    std::vector<ReplayIssue> dropped;
    Snapshot final;
    json to_json() const;
};

class Scene;
using SceneFactory = std::function<std::unique_ptr<Scene>()>;

// Figures in z-order plus the mover, the view offset and the pointer state.
// Pointer points are in view coordinates; figures see p - view_offset.
class Scene {
public:
    Scene(std::string name, double width, double height);
    Scene(Scene&&) = default;
    Scene& operator=(Scene&&) = default;

    const std::string& name() const { return name_; }
    double width() const { return width_; }
    double height() const { return height_; }
    void set_window(double width, double height);

    IdSource& ids() { return ids_; }
    Mover& mover() { return mover_; }
    const Mover& mover() const { return mover_; }
    const ButtonConfig& buttons() const { return mover_.buttons; }

    // Appends a root below the existing ones; returns it.
    Figure& add(std::unique_ptr<Figure> f);
    template <typename T>
    T& add_as(std::unique_ptr<T> f) {
        T& ref = *f;
        add(std::move(f));
        return ref;
    }
    const std::vector<std::unique_ptr<Figure>>& roots() const { return roots_; }
    Figure* find(FigureId id) const;
    // Rebuilds the mover queue from the roots' into_mover blocks.
    void renew_mover();

    EmptyDrag empty_drag() const { return empty_drag_; }
    void set_empty_drag(EmptyDrag m) { empty_drag_ = m; }
    Vec2 view_offset() const { return view_offset_; }
    std::optional<RectF> rubber_band() const;

    struct Hit {
        FigureId id = 0;
        std::size_t node = 0;
        CursorHint cursor = CursorHint::Default;
    };
    // What a press at the view point would catch, without catching it.
    std::optional<Hit> hit_test(Point2D view_point) const;
    bool button_pending() const { return pending_.has_value(); }

    void set_factory(SceneFactory f) { factory_ = std::move(f); }
    // Records the current state of every figure as its default view.
    void capture_defaults();

    EventOutcome pointer(EventKind kind, Point2D p, MouseButton b = MouseButton::Left);
    EventOutcome command(const std::string& name, const json& args);
    EventOutcome apply(const ScriptEvent& ev);

    json save() const;
    // Applies an archive to a freshly constructed scene (its figures are
    // the roster). On failure the scene must be discarded.
    void restore(const json& archive);
    Snapshot snapshot() const;

    ParamStore& store() { return store_; }
    const ParamStore& store() const { return store_; }

private:
    struct Pan {
        Vec2 offset_at_down;
        Point2D down;
    };
    struct Band {
        Point2D from;
        Point2D to;
    };

    Point2D to_scene(Point2D p) const { return p - view_offset_; }
    std::size_t root_index(FigureId id) const;
    Figure& require(const json& args) const;
    bool group_roots(std::vector<std::size_t> indices, const std::string& label, bool predefined);
    bool select_in_rect(const RectF& r);
    bool run_command(const std::string& name, const json& args);

    std::string name_;
    double width_;
    double height_;
    IdSource ids_;
    std::vector<std::unique_ptr<Figure>> roots_;
    Mover mover_;
    EmptyDrag empty_drag_ = EmptyDrag::None;
    Vec2 view_offset_;
    std::optional<MouseButton> pending_;
    std::optional<Pan> pan_;
    std::optional<Band> band_;
    SceneFactory factory_;
    ParamStore store_;
};

// One event per line; blank lines are skipped. Errors carry the line number.
std::vector<ScriptEvent> parse_script(const std::string& text);
json event_to_json(const ScriptEvent& ev);
ReplayReport replay(Scene& scene, const std::vector<ScriptEvent>& events);

std::string sha256_hex(std::string_view bytes);

} // namespace udapp
