#include <gtest/gtest.h>

#include <udapp/error.hpp>
#include <udapp/groups.hpp>
#include <udapp/mover.hpp>

#include "oracles.hpp"

#include <random>

using namespace udapp;

namespace {

std::unique_ptr<ControlProxy> proxy(FigureId id, RectF r, Resizing rz = Resizing::WE) {
    return std::make_unique<ControlProxy>(id, r, rz, "c" + std::to_string(id));
}

std::unique_ptr<ElasticGroup> two_box_group() {
    std::vector<std::unique_ptr<Figure>> els;
    els.push_back(proxy(2, {10, 10, 50, 20}));
    els.push_back(proxy(3, {30, 40, 20, 20}));
    return std::make_unique<ElasticGroup>(1, "Pair", std::move(els));
}

// Drag helper: down at a, move to b, up.
void drag(Mover& m, Point2D a, Point2D b, MouseButton btn = MouseButton::Left) {
    ASSERT_TRUE(m.catch_at(a, btn));
    m.move(b);
    m.release();
}

} // namespace

TEST(ElasticGroup, FrameIsPaddedUnion) {
    auto g = two_box_group();
    EXPECT_EQ(g->frame(), (RectF{4, 4, 62, 62}));
    const std::vector<RectF> rs{g->element(0).bounds(), g->element(1).bounds()};
    EXPECT_EQ(g->frame(), oracle::union_of(rs).inflated(6));
}

TEST(ElasticGroup, FrameFollowsRunawayAndHide) {
    auto g = two_box_group();
    Mover m;
    m.add(*g);
    // The top border of a WE control moves it.
    drag(m, {40, 40}, {140, 40});
    EXPECT_EQ(g->element(1).bounds(), (RectF{130, 40, 20, 20}));
    EXPECT_EQ(g->frame().right(), 156.0);
    g->element(1).set_visible(false);
    notify_changed(g->element(1));
    EXPECT_EQ(g->frame(), (RectF{4, 4, 62, 32}));
    g->element(1).set_visible(true);
    notify_changed(g->element(1));
    EXPECT_EQ(g->frame().right(), 156.0);
    EXPECT_EQ(g->element(1).bounds(), (RectF{130, 40, 20, 20}));
}

TEST(ElasticGroup, EmptyGroupCollapsesToStub) {
    auto g = two_box_group();
    g->element(0).set_visible(false);
    g->element(1).set_visible(false);
    g->recompute_frame();
    EXPECT_EQ(g->frame(), (RectF{4, 4, kStubWidth, kStubHeight}));
    g->move_by({10, 0});
    EXPECT_EQ(g->frame(), (RectF{14, 4, kStubWidth, kStubHeight}));
}

TEST(ElasticGroup, IntoMoverRegistersElementsAboveFrame) {
    auto g = two_box_group();
    Mover m;
    m.insert(0, *g);
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m.queue()[0]->id(), 2u);
    EXPECT_EQ(m.queue()[1]->id(), 3u);
    EXPECT_EQ(m.queue()[2], g.get());
    g->element(0).set_visible(false);
    m.clear();
    m.insert(0, *g);
    EXPECT_EQ(m.size(), 2u);
}

TEST(ElasticGroup, FixedElementsMoveWithGroup) {
    auto g = two_box_group();
    g->set_elements_movable(false);
    Mover m;
    m.add(*g);
    // Frozen element is still caught but does not move.
    ASSERT_TRUE(m.catch_at({10, 20}, MouseButton::Left));
    EXPECT_EQ(m.caught_source(), &g->element(0));
    EXPECT_FALSE(m.move({0, 0}));
    m.release();
    // A drag inside the group body moves the whole group.
    drag(m, {5, 50}, {25, 60});
    EXPECT_EQ(g->element(0).bounds(), (RectF{30, 20, 50, 20}));
    EXPECT_EQ(g->frame(), (RectF{24, 14, 62, 62}));
    g->set_elements_movable(true);
    drag(m, {55, 70}, {60, 70});
    EXPECT_EQ(g->element(1).bounds(), (RectF{55, 50, 20, 20}));
}

TEST(ElasticGroup, NestedFrameInvariant) {
    std::vector<std::unique_ptr<Figure>> inner;
    inner.push_back(proxy(3, {10, 10, 30, 10}));
    std::vector<std::unique_ptr<Figure>> outer;
    outer.push_back(std::make_unique<ElasticGroup>(2, "in", std::move(inner)));
    outer.push_back(proxy(4, {100, 100, 20, 20}));
    ElasticGroup g(1, "out", std::move(outer));
    Mover m;
    m.add(g);
    drag(m, {20, 10}, {20, -40});
    auto& in = static_cast<ElasticGroup&>(g.element(0));
    EXPECT_EQ(in.frame(), (RectF{4, -46, 42, 22}));
    EXPECT_EQ(g.frame(), (RectF{-2, -52, 128, 178}));
}

TEST(ElasticGroup, TitlePosition) {
    auto g = two_box_group();
    g->set_title_position(0);
    EXPECT_EQ(g->title_rect()->left, g->frame().left);
    g->set_title_position(0.5);
    EXPECT_NEAR(g->title_rect()->center().x, g->frame().center().x, 1e-12);
    g->set_title_position(1.3);
    EXPECT_EQ(g->title_position(), 1.0);
    EXPECT_NEAR(g->title_rect()->right(), g->frame().right(), 1e-12);
    // Sliding the title node changes only its position.
    Mover m;
    m.add(*g);
    const Point2D c = g->title_rect()->center();
    drag(m, c, {c.x - 10, c.y + 30});
    EXPECT_LT(g->title_position(), 1.0);
    EXPECT_EQ(g->frame(), (RectF{4, 4, 62, 62}));
}

TEST(ElasticGroup, VisualsValidated) {
    auto g = two_box_group();
    g->set_visual("transparency", 0.4);
    g->set_visual("frame_color", "#ff0000");
    EXPECT_EQ(g->visuals().transparency, 0.4);
    EXPECT_THROW(g->set_visual("transparency", 2.0), Error);
    EXPECT_THROW(g->set_visual("nope", 1), Error);
    g->set_visual("padding", 10.0);
    EXPECT_EQ(g->frame(), (RectF{0, 0, 70, 70}));
}

TEST(ElasticGroup, SaveLoadRoundTrip) {
    auto a = two_box_group();
    a->move_by({3, 4});
    a->set_visual("background_color", "#123456");
    a->element(1).set_visible(false);
    a->recompute_frame();
    auto b = two_box_group();
    LoadContext ctx;
    b->load(a->save(), ctx);
    EXPECT_EQ(a->save(), b->save());
}

TEST(ElasticGroup, RosterMismatchNamesPath) {
    auto a = two_box_group();
    json rec = a->save();
    rec["elements"][1]["class"] = "Comment";
    auto b = two_box_group();
    LoadContext ctx;
    try {
        b->load(rec, ctx);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RosterMismatch);
        EXPECT_NE(std::string(e.what()).find("/elements/1"), std::string::npos);
    }
}

TEST(CommentedControl, CommentFollowsControl) {
    IdSource ids;
    auto cc = CommentedControl::make(ids, {100, 100, 80, 20}, Resizing::WE, Side::W, "Name");
    const Point2D c0 = cc->comment().center();
    EXPECT_LT(cc->comment().bounds().right(), 100.0);
    Mover m;
    m.add(*cc);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m.queue()[0], &cc->comment());
    // Top border of a WE control moves it.
    drag(m, {140, 100}, {145, 100});
    EXPECT_EQ(cc->proxy().rect(), (RectF{105, 100, 80, 20}));
    EXPECT_EQ(cc->comment().center(), (Point2D{c0.x + 5, c0.y}));
    // Right border resizes; the comment keeps its offset from the top-left.
    drag(m, {185, 110}, {205, 110});
    EXPECT_EQ(cc->proxy().rect().width, 100.0);
    EXPECT_EQ(cc->comment().center(), (Point2D{c0.x + 5, c0.y}));
}

TEST(CommentedControl, CommentDroppedInsideIsPushedOut) {
    IdSource ids;
    auto cc = CommentedControl::make(ids, {100, 100, 200, 60}, Resizing::Any, Side::N, "Hi");
    Mover m;
    m.add(*cc);
    const Point2D c = cc->comment().center();
    drag(m, c, {200, 130});
    EXPECT_FALSE(cc->proxy().rect().contains(cc->comment().bounds()));
    EXPECT_GE(comment_exposure(cc->comment(), cc->proxy().rect()), 0.25);
}

TEST(CommentedControl, CoveredByOtherControlLeftInPlace) {
    IdSource ids;
    auto cc = CommentedControl::make(ids, {100, 100, 80, 20}, Resizing::WE, Side::W, "Name");
    RectFigure other(ids(), {0, 0, 400, 400});
    Mover m;
    m.add(*cc);
    m.add(other);
    drag(m, cc->comment().center(), {300, 300});
    EXPECT_EQ(cc->comment().center().x, 300.0);
    EXPECT_EQ(cc->comment().center().y, 300.0);
}

TEST(CommentedControl, ShrunkFontRelocated) {
    IdSource ids;
    auto cc = CommentedControl::make(ids, {0, 0, 200, 100}, Resizing::Any, Side::N, "Title text", 40);
    cc->comment().place_at({100, 50});
    // Big text sticks out; shrinking the font hides it under the control.
    EXPECT_FALSE(cc->proxy().rect().contains(cc->comment().bounds()));
    cc->set_comment_font(8);
    EXPECT_GE(comment_exposure(cc->comment(), cc->proxy().rect()), 0.25);
}

TEST(CommentedControl, RotatedCommentRelocation) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ang(-3.2, 3.2), u(0.2, 0.8);
    IdSource ids;
    for (int i = 0; i < 200; ++i) {
        auto cc = CommentedControl::make(ids, {0, 0, 300, 200}, Resizing::Any, Side::N, "Rotated text");
        cc->comment().set_angle_to(AngleRad{ang(rng)});
        cc->comment().place_at({300 * u(rng), 200 * u(rng)});
        if (!cc->proxy().rect().contains(cc->comment().bounds())) continue;
        ASSERT_TRUE(cc->comment_enforced_relocation());
        const double e = oracle::sampled_exposure(cc->comment().outline(), cc->proxy().rect());
        ASSERT_GE(e, 0.25 - 0.01);
    }
}

TEST(ProportionalGroup, ResizeScalesElements) {
    std::vector<std::unique_ptr<ControlProxy>> els;
    els.push_back(proxy(2, {10, 10, 30, 20}));
    els.push_back(proxy(3, {50, 10, 40, 70}));
    ProportionalGroup g(1, "Years", {0, 0, 100, 100}, std::move(els));
    g.proportional_resize({0, 0, 200, 100});
    EXPECT_EQ(g.element(0).rect(), (RectF{20, 10, 60, 20}));
    EXPECT_EQ(g.fraction(0), (RectF{0.1, 0.1, 0.3, 0.2}));
    g.proportional_resize({7, 3, 13.3, 9.1});
    g.proportional_resize({0, 0, 100, 100});
    EXPECT_NEAR(g.element(1).rect().left, 50, 1e-9);
    EXPECT_NEAR(g.element(1).rect().height, 70, 1e-9);
    Mover m;
    m.add(g);
    EXPECT_EQ(m.size(), 1u);
    drag(m, {100, 50}, {150, 50});
    EXPECT_NEAR(g.element(1).rect().width, 60, 1e-9);
}

TEST(LinkedRectangles, MoveKeepsOffsets) {
    LinkedRectangles l(1, {{0, 0, 10, 10}, {30, 5, 10, 20}});
    Mover m;
    m.add(l);
    drag(m, {35, 15}, {36, 19});
    EXPECT_EQ(l.parts()[0], (RectF{1, 4, 10, 10}));
    EXPECT_EQ(l.parts()[1], (RectF{31, 9, 10, 20}));
    EXPECT_FALSE(m.catch_at({20, 5}, MouseButton::Left));
}

TEST(RectSelectGroup, SingleRectangleMovesAll) {
    std::vector<std::unique_ptr<Figure>> ms;
    ms.push_back(std::make_unique<RectFigure>(2, RectF{0, 0, 10, 10}));
    ms.push_back(std::make_unique<RectFigure>(3, RectF{20, 0, 10, 10}));
    RectSelectGroup g(1, std::move(ms));
    EXPECT_EQ(g.label(), "Arbitrary");
    EXPECT_EQ(g.cover().size(), 1u);
    Mover m;
    m.add(g);
    ASSERT_EQ(m.queue()[0], &g);
    drag(m, {5, 5}, {10, 15});
    EXPECT_EQ(g.member(1).bounds(), (RectF{25, 10, 10, 10}));
    auto back = g.take_members();
    EXPECT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0]->parent(), nullptr);
}

TEST(SimpleFrame, InteriorTransparent) {
    SimpleFrame f(1, {0, 0, 100, 100});
    RectFigure inside(2, {40, 40, 10, 10});
    Mover m;
    m.add(f);
    m.add(inside);
    ASSERT_TRUE(m.catch_at({45, 45}, MouseButton::Left));
    EXPECT_EQ(m.caught_source(), &inside);
    m.release();
    EXPECT_FALSE(m.catch_at({20, 20}, MouseButton::Left));
    drag(m, {100, 50}, {110, 60});
    EXPECT_EQ(f.bounds(), (RectF{10, 10, 100, 100}));
}
