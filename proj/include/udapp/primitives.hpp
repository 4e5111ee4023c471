#pragma once

#include <udapp/controls.hpp>
#include <udapp/figure.hpp>

#include <memory>
#include <string>
#include <vector>

namespace udapp {

inline constexpr double kMinStripLength = 2.0;
inline constexpr double kMinSectorAngle = 0.05;
inline constexpr double kMinRingGap = 4.0;

enum class LineDir { Hor, Ver };

// One bar whose value edge is dragged to change its value. `Hor` bars grow
// upward from the anchor (value edge at anchor.y + dh, dh < 0); `Ver` bars
// grow rightward (value edge at anchor.x + dw).
class StripBar : public Figure {
public:
    StripBar(FigureId id, Point2D anchor, LineDir dir, double length, double thickness, double value_scale,
             double halfsense = kDefaultSense);

    std::string_view class_tag() const override { return "StripBar"; }
    RectF bounds() const override;

    Point2D anchor() const { return anchor_; }
    LineDir direction() const { return dir_; }
    // Signed offset of the value edge from the anchor (dh or dw).
    double offset() const { return offset_; }
    double length() const;
    double value_scale() const { return value_scale_; }
    double value() const { return length() * value_scale_; }
    void set_value(double v);
    // Value edge position along the growth axis.
    double value_edge() const;

    // Re-places the bar (used by the owning chart's layout).
    void place(Point2D anchor, double thickness);

    bool move_node(std::size_t node, Vec2 d, Point2D p, ButtonRole role) override;

protected:
    void translate(Vec2 d) override { anchor_ = anchor_ + d; }
    Cover build_cover() const override;
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    void set_length(double len);

    Point2D anchor_;
    LineDir dir_;
    double offset_;
    double thickness_;
    double value_scale_;
    double halfsense_;
};

// Moveable, resizable frame holding bars laid out side by side.
class BarChart : public Figure {
public:
    BarChart(IdSource& ids, FigureId id, RectF frame, const std::vector<double>& values, double value_scale = 1.0);

    std::string_view class_tag() const override { return "BarChart"; }
    RectF bounds() const override { return frame_; }
    const RectF& frame() const { return frame_; }
    std::size_t size() const { return strips_.size(); }
    StripBar& strip(std::size_t i) { return *strips_.at(i); }
    const StripBar& strip(std::size_t i) const { return *strips_.at(i); }
    std::vector<double> values() const;

    bool move_node(std::size_t node, Vec2 d, Point2D p, ButtonRole role) override;
    void into_mover(std::vector<Figure*>& block) override;
    void for_each_child(const std::function<void(Figure&)>& fn) override;

protected:
    void translate(Vec2 d) override;
    Cover build_cover() const override { return standard_resize_cover(frame_); }
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    void layout();

    RectF frame_;
    std::vector<std::unique_ptr<StripBar>> strips_;
};

// Where a ring comment sits: tied to a sector (follows rotation and
// resectoring) or to the whole ring (follows translation only).
struct RingCommentPlacement {
    bool whole_ring = false;
    std::size_t sector = 0;
    double fraction = 0.5;       // position inside the sector's angle
    double radial = 0.5;         // distance from center / outer radius
    Vec2 offset;                 // whole-ring comments: center offset
};

// Sectors between ordered boundaries b0 < b1 < ... (radians, stored
// unrotated). Sector i spans [b_i, b_{i+1}); the last wraps to b0 + 2π.
class Ring : public Figure {
public:
    Ring(FigureId id, Point2D center, double r_inner, double r_outer, std::vector<double> boundaries,
         bool resizable = true);

    std::string_view class_tag() const override { return "Ring"; }
    RectF bounds() const override;

    Point2D center() const { return center_; }
    double r_inner() const { return r_inner_; }
    double r_outer() const { return r_outer_; }
    const std::vector<double>& boundaries() const { return boundaries_; }
    std::vector<double> sector_angles() const;
    // Sector values as fractions of `total`.
    std::vector<double> values(double total = 1.0) const;
    double rotation() const { return rotation_; }
    bool resizable() const { return resizable_; }
    void set_resizable(bool v);
    std::size_t sectors() const { return boundaries_.size(); }
    // Number of segments approximating each circle.
    std::size_t circle_segments() const;

    // Border resectoring: records the legal window for border `k`.
    bool start_resectoring(std::size_t border);
    bool resectoring() const { return resector_.has_value(); }
    std::pair<double, double> resectoring_window() const;
    void end_resectoring() { resector_.reset(); }
    // Sets border k to the polar angle of p (clamped into the window).
    bool move_border_to(Point2D p);

    void add_comment(std::unique_ptr<Comment> c, RingCommentPlacement where);
    std::size_t comment_count() const { return comments_.size(); }
    Comment& comment(std::size_t i) { return *comments_.at(i).comment; }
    const Comment& comment(std::size_t i) const { return *comments_.at(i).comment; }
    const RingCommentPlacement& comment_placement(std::size_t i) const { return comments_.at(i).where; }

    bool rotatable() const override { return true; }
    Point2D rotation_center() const override { return center_; }
    AngleRad angle() const override { return {rotation_}; }

    void on_catch(std::size_t node, ButtonRole role, Point2D p) override;
    bool on_release() override;
    bool move_node(std::size_t node, Vec2 d, Point2D p, ButtonRole role) override;
    void into_mover(std::vector<Figure*>& block) override;
    void for_each_child(const std::function<void(Figure&)>& fn) override;
    bool on_child_changed(Figure& child) override;

protected:
    void translate(Vec2 d) override;
    Cover build_cover() const override;
    void set_angle(AngleRad a) override;
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;
    void place_comments();

private:
    struct Resector {
        std::size_t border;
        double lo;
        double hi;
    };
    enum class RadiusDrag { None, Outer, Inner };
    struct OwnedComment {
        std::unique_ptr<Comment> comment;
        RingCommentPlacement where;
    };

    void validate() const;
    Point2D comment_point(const RingCommentPlacement& w) const;
    void capture_placement(OwnedComment& c);

    Point2D center_;
    double r_inner_;
    double r_outer_;
    std::vector<double> boundaries_;
    double rotation_ = 0.0;
    bool resizable_;
    std::optional<Resector> resector_;
    RadiusDrag radius_drag_ = RadiusDrag::None;
    double radius_grab_offset_ = 0.0;
    std::vector<OwnedComment> comments_;
};

// A ring without a hole whose sectors carry comments.
class PieChart : public Ring {
public:
    PieChart(IdSource& ids, FigureId id, Point2D center, double radius, std::vector<double> boundaries,
             const std::vector<std::string>& labels, bool resizable = true);
    std::string_view class_tag() const override { return "PieChart"; }
};

// Graphical horizontal track bar: moved by its body, resized by its left
// and right borders, value picked with the thumb. End labels stay pinned to
// the track ends; the title comment can be moved freely.
class TrackBar : public Figure {
public:
    TrackBar(IdSource& ids, FigureId id, RectF track, double lo, double hi, double value, const std::string& title);

    std::string_view class_tag() const override { return "TrackBar"; }
    RectF bounds() const override;

    const RectF& track() const { return track_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double value() const { return value_; }
    void set_value(double v);
    // value = lo + (hi - lo) * clamp((p.x - left) / width, 0, 1)
    double set_from_point(Point2D p);
    double thumb_x() const;

    Comment& title() { return *title_; }
    Comment& low_label() { return *low_; }
    Comment& high_label() { return *high_; }
    const Comment& title() const { return *title_; }

    bool move_node(std::size_t node, Vec2 d, Point2D p, ButtonRole role) override;
    void into_mover(std::vector<Figure*>& block) override;
    void for_each_child(const std::function<void(Figure&)>& fn) override;
    bool on_child_changed(Figure& child) override;

protected:
    void translate(Vec2 d) override;
    Cover build_cover() const override;
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    void pin_labels();

    RectF track_;
    double lo_;
    double hi_;
    double value_;
    std::unique_ptr<Comment> title_;
    std::unique_ptr<Comment> low_;
    std::unique_ptr<Comment> high_;
    Point2D anchor_; // track top-left the title offset is measured from
};

inline constexpr std::size_t kTrackThumb = 0;
inline constexpr std::size_t kTrackLeft = 1;
inline constexpr std::size_t kTrackRight = 2;
inline constexpr std::size_t kTrackBody = 3;
inline constexpr double kMinTrackWidth = 20.0;

} // namespace udapp
