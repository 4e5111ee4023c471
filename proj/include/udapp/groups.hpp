#pragma once

#include <udapp/controls.hpp>
#include <udapp/figure.hpp>

#include <memory>
#include <string>
#include <vector>

namespace udapp {

inline constexpr double kElasticPadding = 6.0;
inline constexpr double kSelectPadding = 4.0;
inline constexpr double kStubWidth = 120.0;
inline constexpr double kStubHeight = 24.0;

struct GroupVisuals {
    std::string frame_color = "#808080";
    std::string background_color = "#f0f0f0";
    std::string title_color = "#000000";
    double transparency = 0.0; // 0 opaque .. 1 fully transparent
    bool spread_background = false;
    bool show_frame = true;
    double title_font = 12.0;

    friend bool operator==(const GroupVisuals&, const GroupVisuals&) = default;
};

// A group whose frame always surrounds its visible elements: the padded
// union of their bounds, recomputed after every change.
class ElasticGroup : public Figure {
public:
    ElasticGroup(FigureId id, std::string title, std::vector<std::unique_ptr<Figure>> elements,
                 double padding = kElasticPadding);

    std::string_view class_tag() const override { return "ElasticGroup"; }
    RectF bounds() const override { return frame_; }

    const RectF& frame() const { return frame_; }
    double padding() const { return padding_; }
    const std::string& title() const { return title_; }
    double title_position() const { return title_position_; }
    // Clamped to [0, 1]: 0 left-aligned, 0.5 centered, 1 right-aligned.
    void set_title_position(double t);
    std::optional<RectF> title_rect() const;

    std::size_t size() const { return elements_.size(); }
    Figure& element(std::size_t i) { return *elements_.at(i); }
    const Figure& element(std::size_t i) const { return *elements_.at(i); }

    const GroupVisuals& visuals() const { return visuals_; }
    // Sets one visual parameter by name; unknown names or bad values throw.
    void set_visual(const std::string& key, const json& value);

    void recompute_frame();

    // Group and (recursively) elements.
    void set_movable(bool v) override;
    // Elements only; the frame keeps its own movability.
    void set_elements_movable(bool v);
    bool elements_movable() const { return elements_movable_; }

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
    std::string title_;
    std::vector<std::unique_ptr<Figure>> elements_;
    double padding_;
    RectF frame_;
    double title_position_ = 0.05;
    GroupVisuals visuals_;
    bool elements_movable_ = true;
};

// Classical dynamic layout: elements keep their fractional placement
// inside the frame, which is resized by its border and moved by its body.
class ProportionalGroup : public Figure {
public:
    ProportionalGroup(FigureId id, std::string title, RectF frame, std::vector<std::unique_ptr<ControlProxy>> elements);

    std::string_view class_tag() const override { return "Group"; }
    RectF bounds() const override { return frame_; }
    const RectF& frame() const { return frame_; }
    const std::string& title() const { return title_; }

    std::size_t size() const { return elements_.size(); }
    const ControlProxy& element(std::size_t i) const { return *elements_.at(i); }
    const RectF& fraction(std::size_t i) const { return fractions_.at(i); }

    // Maps every element through its stored fractions of the new frame.
    void proportional_resize(const RectF& frame);

    bool move_node(std::size_t node, Vec2 d, Point2D p, ButtonRole role) override;
    void for_each_child(const std::function<void(Figure&)>& fn) override;

protected:
    void translate(Vec2 d) override;
    Cover build_cover() const override { return standard_resize_cover(frame_); }
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    std::string title_;
    RectF frame_;
    std::vector<std::unique_ptr<ControlProxy>> elements_;
    std::vector<RectF> fractions_;
};

// Non-resizable parts moved together; offsets between parts never change.
class LinkedRectangles : public Figure {
public:
    LinkedRectangles(FigureId id, std::vector<RectF> parts);

    std::string_view class_tag() const override { return "Linked"; }
    RectF bounds() const override { return rect_union(parts_); }
    const std::vector<RectF>& parts() const { return parts_; }

protected:
    void translate(Vec2 d) override;
    Cover build_cover() const override;
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    std::vector<RectF> parts_;
};

// Group made by framing figures with a rectangle (or one of the predefined
// groups). A single non-resizable rectangle moves all members.
class RectSelectGroup : public Figure {
public:
    RectSelectGroup(FigureId id, std::vector<std::unique_ptr<Figure>> members, std::string label = "Arbitrary",
                    bool predefined = false);

    std::string_view class_tag() const override { return "SelectGroup"; }
    RectF bounds() const override;

    const std::string& label() const { return label_; }
    bool predefined() const { return predefined_; }
    std::size_t size() const { return members_.size(); }
    const Figure& member(std::size_t i) const { return *members_.at(i); }
    // Gives the members back (ungroup).
    std::vector<std::unique_ptr<Figure>> take_members();

    void into_mover(std::vector<Figure*>& block) override;
    void for_each_child(const std::function<void(Figure&)>& fn) override;
    bool on_child_changed(Figure& child) override;

protected:
    void translate(Vec2 d) override;
    Cover build_cover() const override;
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    std::vector<std::unique_ptr<Figure>> members_;
    std::string label_;
    bool predefined_;
};

// Frame moved by its border; the interior is transparent so whatever lies
// inside stays grabbable.
class SimpleFrame : public Figure {
public:
    SimpleFrame(FigureId id, RectF rect);

    std::string_view class_tag() const override { return "SimpleFrame"; }
    RectF bounds() const override { return rect_; }

protected:
    void translate(Vec2 d) override { rect_ = rect_.translated(d); }
    Cover build_cover() const override;
    void save_state(json& out) const override;
    void load_state(const json& in, LoadContext& ctx) override;

private:
    RectF rect_;
};

} // namespace udapp
