#pragma once

#include <udapp/figure.hpp>

#include <memory>
#include <string>

namespace udapp {

enum class Resizing { None, WE, NS, Any };
enum class Side { N, S, E, W };

std::string_view to_string(Resizing r);
std::string_view to_string(Side s);
Resizing resizing_from_string(std::string_view s);
Side side_from_string(std::string_view s);

// Stand-in for a native control: a labeled rectangle grabbed by its border.
// Borders along a resizable axis resize; the rest of the border moves.
class ControlProxy : public Figure {
public:
    ControlProxy(FigureId id, RectF rect, Resizing resizing, std::string label, std::string kind = "textbox");

    std::string_view class_tag() const override { return "Control"; }
    RectF bounds() const override { return rect_; }

    const RectF& rect() const { return rect_; }
    void set_rect(const RectF& r);
    Resizing resizing() const { return resizing_; }
    const std::string& label() const { return label_; }
    const std::string& kind() const { return kind_; }

    // Predefined-group membership ("numbers", "operations", ...), may be empty.
    const std::string& tag() const { return tag_; }
    void set_tag(std::string t) { tag_ = std::move(t); }
    double font_size() const { return font_size_; }
    void set_font_size(double f);
    const std::string& back_color() const { return back_color_; }
    void set_back_color(std::string c) { back_color_ = std::move(c); }

    bool move_node(std::size_t node, Vec2 d, Point2D p, ButtonRole role) override;

protected:
    void translate(Vec2 d) override { rect_ = rect_.translated(d); }
    Cover build_cover() const override;
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    bool handle_resizes(RectHandle h) const;

    RectF rect_;
    Resizing resizing_;
    std::string label_;
    std::string kind_;
    std::string tag_;
    double font_size_ = 12.0;
    std::string back_color_ = "#ffffff";
};

inline constexpr double kCharWidthFactor = 0.6;

// Approximate text extent: 0.6·font per character, one font high.
double text_width(std::string_view text, double font_size);

// Text positioned by its central point; moveable and rotatable on its own.
class Comment : public Figure {
public:
    Comment(FigureId id, std::string text, Point2D center, double font_size = 12.0);

    std::string_view class_tag() const override { return "Comment"; }
    RectF bounds() const override;

    const std::string& text() const { return text_; }
    void set_text(std::string t);
    Point2D center() const { return center_; }
    double font_size() const { return font_size_; }
    void set_font_size(double f);
    const std::string& color() const { return color_; }
    void set_color(std::string c) { color_ = std::move(c); }
    // Corners of the rotated text box.
    std::vector<Point2D> outline() const;
    // Place the center at `c` (used by owners that lay comments out).
    void place_at(Point2D c);

    bool rotatable() const override { return true; }
    Point2D rotation_center() const override { return center_; }
    AngleRad angle() const override { return angle_; }
    void set_angle_to(AngleRad a) { set_angle(a); define_cover(); }

protected:
    void translate(Vec2 d) override { center_ = center_ + d; }
    Cover build_cover() const override;
    void set_angle(AngleRad a) override { angle_ = a; }
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    std::string text_;
    Point2D center_;
    double font_size_;
    AngleRad angle_;
    std::string color_ = "#000000";
};

// Fraction of the comment's area lying outside `r`.
double comment_exposure(const Comment& c, const RectF& r);

// Smallest axis-aligned shift that leaves at least `min_exposure` of the
// comment outside `r`; none when the comment is not entirely inside r.
std::optional<Vec2> enforced_relocation(const Comment& c, const RectF& r, double min_exposure = 0.25);

// A control with its comment. The comment keeps its offset from the
// control's top-left corner while the control moves or resizes.
class CommentedControl : public Figure {
public:
    CommentedControl(FigureId id, std::unique_ptr<ControlProxy> proxy, std::unique_ptr<Comment> comment, Side side);
    // Builds the pair with the comment placed beside the control on `side`.
    static std::unique_ptr<CommentedControl> make(IdSource& ids, RectF rect, Resizing resizing, Side side,
                                                  const std::string& text, double font_size = 12.0);

    std::string_view class_tag() const override { return "CommentedControl"; }
    RectF bounds() const override;

    ControlProxy& proxy() { return *proxy_; }
    const ControlProxy& proxy() const { return *proxy_; }
    Comment& comment() { return *comment_; }
    const Comment& comment() const { return *comment_; }
    Side side() const { return side_; }
    Vec2 comment_offset() const { return comment_->center() - anchor_; }

    void set_movable(bool v) override;
    void set_comment_font(double f);
    // Pushes the comment out if its own control hides it completely.
    bool comment_enforced_relocation();

    void into_mover(std::vector<Figure*>& block) override;
    void for_each_child(const std::function<void(Figure&)>& fn) override;
    bool on_child_changed(Figure& child) override;
    bool on_child_released(Figure& child) override;

protected:
    void translate(Vec2 d) override;
    Cover build_cover() const override;
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    std::unique_ptr<ControlProxy> proxy_;
    std::unique_ptr<Comment> comment_;
    Side side_;
    Point2D anchor_; // proxy top-left the comment offset is measured from
};

// Comment center for a text of the given size placed beside `r`.
Point2D comment_position(const RectF& r, Side side, double text_w, double text_h, double gap = 4.0);

} // namespace udapp
