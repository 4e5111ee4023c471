#pragma once

#include <udapp/cover.hpp>
#include <udapp/geometry.hpp>

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace udapp {

using json = nlohmann::json;
using FigureId = std::uint64_t;

// Hands out scene-unique ids in construction order.
class IdSource {
public:
    explicit IdSource(FigureId first = 1) : next_(first) {}
    FigureId operator()() { return next_++; }
    FigureId peek() const { return next_; }
    void reset(FigureId next) { next_ = next; }

private:
    FigureId next_;
};

enum class MouseButton { Left, Right };

// What a pressed button means to the figure under it; the scene maps
// physical buttons onto roles.
enum class ButtonRole { Move, Rotate };

inline constexpr double kMinFigureSize = 4.0;

struct RotationState {
    AngleRad compensation;
    bool active = false;
};

class Figure;

// Carries everything a load needs beyond the record itself: roster figures
// that records refer to by id, a factory for dynamic figures, and the
// current archive path for error messages.
class LoadContext {
public:
    using Factory = std::function<std::unique_ptr<Figure>(const json& rec, LoadContext& ctx)>;

    LoadContext() = default;
    explicit LoadContext(Factory factory) : factory_(std::move(factory)) {}

    void add_roster(std::unique_ptr<Figure> f);
    // Removes and returns the roster figure with this id; throws
    // RosterMismatch if it is missing or of another class.
    std::unique_ptr<Figure> take_roster(FigureId id, std::string_view class_tag);
    // Builds the figure a record describes: dynamic ones through the
    // factory, construction ones from the roster. The record is applied.
    std::unique_ptr<Figure> materialize(const json& rec);
    std::vector<std::unique_ptr<Figure>> release_roster();

    const std::string& path() const { return path_; }
    [[noreturn]] void mismatch(const std::string& what) const;

    class Scope {
    public:
        Scope(LoadContext& ctx, const std::string& segment);
        ~Scope();
        Scope(const Scope&) = delete;
        Scope& operator=(const Scope&) = delete;

    private:
        LoadContext& ctx_;
        std::size_t len_;
    };

private:
    Factory factory_;
    std::vector<std::unique_ptr<Figure>> roster_;
    std::string path_ = "";
};

// Reads `key` into `out` when present; wrong types raise a schema error.
[[noreturn]] void throw_schema_error(const char* key, const std::string& detail);

template <typename T>
void load_field(const json& j, const char* key, T& out);

// The object contract: identity, pick cover, whole moves, node moves and
// rotation. Composite figures own their parts; the parent pointer lets a
// part tell its owner about changes.
class Figure {
public:
    explicit Figure(FigureId id);
    virtual ~Figure() = default;
    Figure(const Figure&) = delete;
    Figure& operator=(const Figure&) = delete;

    FigureId id() const { return id_; }
    Figure* parent() const { return parent_; }
    std::optional<FigureId> parent_id() const;

    virtual std::string_view class_tag() const = 0;
    virtual RectF bounds() const = 0;

    const Cover& cover() const { return cover_; }
    // Rebuilds the cover from current geometry and movability.
    const Cover& define_cover();

    bool movable() const { return movable_; }
    virtual void set_movable(bool v);

    bool visible() const { return visible_; }
    void set_visible(bool v) { visible_ = v; }
    bool hideable() const { return hideable_; }
    void set_hideable(bool v) { hideable_ = v; }

    // Created at run time (rubber band, add-figure) rather than by the
    // scene's construction roster.
    bool dynamic() const { return dynamic_; }
    void set_dynamic(bool v) { dynamic_ = v; }

    // Translates every defining point by exactly `d`. Returns false for a
    // zero vector.
    bool move_by(Vec2 d);
    // Figure-specific reshape through a node; constraints are enforced here.
    virtual bool move_node(std::size_t node, Vec2 d, Point2D p, ButtonRole role);

    virtual bool rotatable() const { return false; }
    virtual Point2D rotation_center() const { return bounds().center(); }
    virtual AngleRad angle() const { return {}; }
    void start_rotation(Point2D grab);
    bool rotate_to(Point2D p);
    void end_rotation() { rotation_.active = false; }
    const RotationState& rotation_state() const { return rotation_; }

    // Called by the mover right after this figure was caught.
    virtual void on_catch(std::size_t node, ButtonRole role, Point2D p);
    // Called by the mover on release; returns true if geometry changed.
    virtual bool on_release();
    virtual bool on_child_changed(Figure& /*child*/) { return false; }
    virtual bool on_child_released(Figure& /*child*/) { return false; }

    virtual void for_each_child(const std::function<void(Figure&)>& /*fn*/) {}
    void for_each_child(const std::function<void(const Figure&)>& fn) const;
    // Appends this figure's mover entries (topmost first).
    virtual void into_mover(std::vector<Figure*>& block);

    // Full record: common fields plus class state (children nested).
    json save() const;
    void load(const json& rec, LoadContext& ctx);

    void capture_default();
    bool has_default() const { return default_state_.has_value(); }
    bool reset_default();

protected:
    virtual void translate(Vec2 d) = 0;
    virtual Cover build_cover() const = 0;
    virtual void set_angle(AngleRad /*a*/) {}
    virtual void save_state(json& out) const = 0;
    virtual void load_state(const json& in, LoadContext& ctx) = 0;

    void adopt(Figure& child) { child.parent_ = this; }
    static void orphan(Figure& child) { child.parent_ = nullptr; }

private:
    FigureId id_;
    Figure* parent_ = nullptr;
    Cover cover_;
    bool movable_ = true;
    bool visible_ = true;
    bool hideable_ = true;
    bool dynamic_ = false;
    RotationState rotation_;
    std::optional<json> default_state_;
};

// Walks up the parent chain telling each owner that a part changed or was
// released. Returns true if any owner adjusted geometry.
bool notify_changed(Figure& f);
bool notify_released(Figure& f);

// Depth-first visit of a figure tree, parents before children.
void visit_tree(Figure& root, const std::function<void(Figure&)>& fn);
void visit_tree(const Figure& root, const std::function<void(const Figure&)>& fn);

enum class RectHandle { TopLeft, TopRight, BottomRight, BottomLeft, Top, Right, Bottom, Left };

// Handle for a node of standard_resize_cover / frame_only_cover.
std::optional<RectHandle> rect_handle_for_node(std::size_t node);

// Moves the given handle by `d`, never shrinking a side below `min_size`
// (a side already smaller than that cannot shrink further).
RectF resize_rect(const RectF& r, RectHandle h, Vec2 d, double min_size = kMinFigureSize);

// Plain resizable rectangle; also used for village buildings (kind).
class RectFigure : public Figure {
public:
    RectFigure(FigureId id, RectF rect, std::string kind = "rect");

    std::string_view class_tag() const override { return "Rect"; }
    RectF bounds() const override { return rect_; }
    const RectF& rect() const { return rect_; }
    const std::string& kind() const { return kind_; }

    bool resizable() const { return resizable_; }
    void set_resizable(bool v);

    bool move_node(std::size_t node, Vec2 d, Point2D p, ButtonRole role) override;

protected:
    void translate(Vec2 d) override { rect_ = rect_.translated(d); }
    Cover build_cover() const override;
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    RectF rect_;
    std::string kind_;
    std::string color_ = "#c0c0c0";
    bool resizable_ = true;
};

template <typename T>
void load_field(const json& j, const char* key, T& out) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return;
    try {
        out = it->template get<T>();
    } catch (const json::exception& e) {
        throw_schema_error(key, e.what());
    }
}

json to_json(Point2D p);
json to_json(const RectF& r);
Point2D point_from_json(const json& j);
RectF rect_from_json(const json& j);
void load_field(const json& j, const char* key, Point2D& out);
void load_field(const json& j, const char* key, RectF& out);

} // namespace udapp
