#include <gtest/gtest.h>

#include <udapp/error.hpp>
#include <udapp/mover.hpp>
#include <udapp/primitives.hpp>

#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace udapp;

namespace {

constexpr double kPi = M_PI;

using oracle::on_ray;

} // namespace

TEST(StripBar, HorizontalEdgeNode) {
    StripBar s(1, {0, 100}, LineDir::Hor, 40, 10, 2.0);
    EXPECT_DOUBLE_EQ(s.offset(), -40);
    EXPECT_DOUBLE_EQ(s.value_edge(), 60);
    const auto& edge = std::get<StripShape>(s.cover()[0].shape);
    EXPECT_DOUBLE_EQ(edge.a.y, 60);
    EXPECT_DOUBLE_EQ(edge.b.y, 60);
    EXPECT_DOUBLE_EQ(edge.a.x, 0);
    EXPECT_DOUBLE_EQ(edge.b.x, 10);
    EXPECT_EQ(s.cover()[0].freedom, MovementFreedom::NS);
    EXPECT_EQ(s.cover()[1].freedom, MovementFreedom::Freeze);
}

TEST(StripBar, DragEdgeChangesValue) {
    StripBar s(1, {0, 100}, LineDir::Hor, 40, 10, 2.0);
    Mover m;
    m.add(s);
    ASSERT_TRUE(m.catch_at({5, 60}, MouseButton::Left));
    EXPECT_EQ(m.caught_node(), 0u);
    ASSERT_TRUE(m.move({5, 50}));
    m.release();
    EXPECT_DOUBLE_EQ(s.value(), 100.0);
    // Body is frozen: caught but nothing moves.
    ASSERT_TRUE(m.catch_at({5, 90}, MouseButton::Left));
    EXPECT_FALSE(m.move({40, 40}));
    m.release();
    EXPECT_EQ(s.anchor(), (Point2D{0, 100}));
}

TEST(StripBar, LengthFloor) {
    StripBar s(1, {0, 100}, LineDir::Hor, 10, 10, 1.0);
    EXPECT_TRUE(s.move_node(0, {0, 50}, {}, ButtonRole::Move));
    EXPECT_DOUBLE_EQ(s.length(), kMinStripLength);
    EXPECT_FALSE(s.move_node(0, {0, 5}, {}, ButtonRole::Move));
}

TEST(StripBar, VerticalGrowsRight) {
    StripBar s(1, {10, 10}, LineDir::Ver, 30, 8, 1.0);
    EXPECT_DOUBLE_EQ(s.value_edge(), 40);
    EXPECT_EQ(s.cover()[0].freedom, MovementFreedom::WE);
    EXPECT_TRUE(s.move_node(0, {5, 0}, {}, ButtonRole::Move));
    EXPECT_DOUBLE_EQ(s.value(), 35);
}

TEST(BarChart, ResizeKeepsValues) {
    IdSource ids(10);
    BarChart c(ids, 1, {0, 0, 200, 150}, {30, 60, 90});
    const auto before = c.values();
    EXPECT_TRUE(c.move_node(kEdgeRight, {100, 0}, {}, ButtonRole::Move));
    EXPECT_EQ(c.values(), before);
    EXPECT_DOUBLE_EQ(c.strip(0).anchor().y, 146);
    EXPECT_TRUE(c.move_by({5, 5}));
    EXPECT_EQ(c.values(), before);
    std::vector<Figure*> block;
    c.into_mover(block);
    ASSERT_EQ(block.size(), 4u);
    EXPECT_EQ(block.back(), &c);
}

TEST(BarChart, RoundTrip) {
    IdSource ids(10);
    BarChart a(ids, 1, {0, 0, 200, 150}, {30, 60});
    a.strip(1).set_value(77);
    IdSource ids2(10);
    BarChart b(ids2, 1, {0, 0, 200, 150}, {30, 60});
    LoadContext ctx;
    b.load(a.save(), ctx);
    EXPECT_EQ(b.values(), a.values());
}

TEST(Ring, SectorsAndWindow) {
    Ring r(1, {0, 0}, 20, 80, {0, kPi, 3 * kPi / 2});
    EXPECT_EQ(r.sector_angles(), oracle::sector_sizes(r.boundaries()));
    ASSERT_TRUE(r.start_resectoring(1));
    const auto [lo, hi] = r.resectoring_window();
    EXPECT_DOUBLE_EQ(lo, 0);
    EXPECT_DOUBLE_EQ(hi, 3 * kPi / 2);
}

TEST(Ring, ResectorToHalfPi) {
    Ring r(1, {0, 0}, 20, 80, {0, kPi, 3 * kPi / 2});
    ASSERT_TRUE(r.start_resectoring(1));
    ASSERT_TRUE(r.move_border_to(on_ray({0, 0}, 50, kPi / 2)));
    const auto s = r.sector_angles();
    EXPECT_NEAR(s[0], kPi / 2, 1e-12);
    EXPECT_NEAR(s[1], kPi, 1e-12);
    EXPECT_NEAR(s[2], kPi / 2, 1e-12);
}

TEST(Ring, ResectorClampsToMinimum) {
    Ring r(1, {0, 0}, 20, 80, {0, kPi, 3 * kPi / 2});
    ASSERT_TRUE(r.start_resectoring(1));
    r.move_border_to(on_ray({0, 0}, 50, 0.01));
    const auto s = oracle::sector_sizes(r.boundaries());
    EXPECT_GE(s[0], kMinSectorAngle);
    EXPECT_NEAR(s[0], kMinSectorAngle, 1e-12);
    EXPECT_FALSE(r.move_border_to({0, 0}));
}

TEST(Ring, RandomResectoringKeepsMinimum) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ang(-10, 10);
    Ring r(1, {3, 4}, 0, 60, {0.2, 1.0, 2.5, 4.0, 5.5});
    for (int i = 0; i < 5000; ++i) {
        ASSERT_TRUE(r.start_resectoring(static_cast<std::size_t>(i) % r.sectors()));
        r.move_border_to(on_ray({3, 4}, 30, ang(rng)));
        r.end_resectoring();
        const auto s = oracle::sector_sizes(r.boundaries());
        double sum = 0;
        for (double a : s) {
            ASSERT_GE(a, kMinSectorAngle);
            sum += a;
        }
        ASSERT_NEAR(sum, 2 * kPi, 1e-9);
    }
}

TEST(Ring, BorderStripsOnlyWhenResizable) {
    Ring r(1, {0, 0}, 20, 80, {0, 1, 2, 3});
    std::size_t strips = 0;
    for (std::size_t i = 0; i < r.sectors(); ++i)
        if (shape_kind(r.cover()[i].shape) == ShapeKind::Strip) ++strips;
    EXPECT_EQ(strips, 4u);
    EXPECT_EQ(r.cover().size(), 4 + 3 * r.circle_segments());
    r.set_resizable(false);
    EXPECT_EQ(r.cover().size(), r.circle_segments());
    for (const auto& n : r.cover().nodes()) EXPECT_EQ(n.role, NodeRole::Body);
}

TEST(Ring, RotationKeepsSizes) {
    Ring r(1, {100, 100}, 20, 80, {0, 1, 2, 4});
    const auto before = r.sector_angles();
    Mover m;
    m.add(r);
    const Point2D grab = on_ray({100, 100}, 50, 0.5);
    ASSERT_TRUE(m.catch_at(grab, MouseButton::Right));
    ASSERT_TRUE(m.move(on_ray({100, 100}, 50, 0.5 + kPi / 3)));
    m.release();
    EXPECT_NEAR(r.rotation(), kPi / 3, 1e-12);
    EXPECT_EQ(r.sector_angles(), before);
}

TEST(Ring, MouseResectoringThroughMover) {
    Ring r(1, {0, 0}, 20, 80, {0, kPi, 3 * kPi / 2});
    Mover m;
    m.add(r);
    ASSERT_TRUE(m.catch_at(on_ray({0, 0}, 50, kPi), MouseButton::Left));
    EXPECT_EQ(m.caught_node(), 1u);
    ASSERT_TRUE(m.move(on_ray({0, 0}, 50, kPi / 2)));
    m.release();
    EXPECT_NEAR(r.sector_angles()[0], kPi / 2, 1e-12);
    EXPECT_FALSE(r.resectoring());
}

TEST(Ring, OuterRadiusDragKeepsGap) {
    Ring r(1, {0, 0}, 20, 80, {0, 2, 4});
    Mover m;
    m.add(r);
    ASSERT_TRUE(m.catch_at(on_ray({0, 0}, 80, 1), MouseButton::Left));
    ASSERT_TRUE(m.move(on_ray({0, 0}, 100, 1)));
    EXPECT_NEAR(r.r_outer(), 100, 0.05);
    m.move(on_ray({0, 0}, 1, 1));
    m.release();
    EXPECT_DOUBLE_EQ(r.r_outer(), 24);
}

TEST(Ring, CommentsFollowSectorAndRing) {
    IdSource ids(10);
    Ring r(1, {0, 0}, 20, 80, {0, kPi});
    r.add_comment(std::make_unique<Comment>(ids(), "a", Point2D{}), {false, 0, 0.5, 0.5, {}});
    r.add_comment(std::make_unique<Comment>(ids(), "title", Point2D{}), {true, 0, 0, 0, {0, -100}});
    EXPECT_NEAR(r.comment(0).center().y, 40, 1e-9);
    r.move_by({10, 0});
    EXPECT_EQ(r.comment(1).center(), (Point2D{10, -100}));
    ASSERT_TRUE(r.start_resectoring(1));
    ASSERT_TRUE(r.move_border_to(on_ray({10, 0}, 50, kPi / 2)));
    EXPECT_NEAR(polar_angle(r.comment(0).center() - r.center()).value, kPi / 4, 1e-9);
    EXPECT_EQ(r.comment(1).center(), (Point2D{10, -100}));
}

TEST(Ring, DraggedCommentKeepsNewPlacement) {
    IdSource ids(10);
    Ring r(1, {0, 0}, 20, 80, {0, kPi});
    r.add_comment(std::make_unique<Comment>(ids(), "a", Point2D{}), {false, 0, 0.5, 0.5, {}});
    r.comment(0).move_by({20, 0});
    notify_changed(r.comment(0));
    const Point2D moved = r.comment(0).center();
    r.start_resectoring(1);
    r.move_border_to(on_ray({0, 0}, 50, 3 * kPi / 2)); // sector 0 grows to 3π/2
    EXPECT_GT(std::abs(r.comment(0).center().x - moved.x) + std::abs(r.comment(0).center().y - moved.y), 1.0);
    EXPECT_NEAR(distance(r.comment(0).center(), r.center()), distance(moved, {0, 0}), 1e-9);
}

TEST(Ring, RejectsBadShapes) {
    EXPECT_THROW(Ring(1, {0, 0}, 80, 20, {0}), Error);
    EXPECT_THROW(Ring(1, {0, 0}, 0, 20, {}), Error);
    EXPECT_THROW(Ring(1, {0, 0}, 0, 20, {0, 0.01}), Error);
}

TEST(Ring, RoundTripAndMismatch) {
    IdSource ids(10);
    PieChart a(ids, 1, {50, 50}, 40, {0, 2, 4}, {"x", "y", "z"});
    a.start_resectoring(1);
    a.move_border_to(on_ray({50, 50}, 20, 2.5));
    IdSource ids2(10);
    PieChart b(ids2, 1, {50, 50}, 40, {0, 2, 4}, {"x", "y", "z"});
    LoadContext ctx;
    b.load(a.save(), ctx);
    EXPECT_EQ(b.boundaries(), a.boundaries());
    EXPECT_EQ(b.comment(1).center(), a.comment(1).center());
    PieChart c(ids2, 1, {50, 50}, 40, {0, 3}, {"x", "y"});
    try {
        c.load(a.save(), ctx);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RosterMismatch);
    }
}

TEST(TrackBar, ThumbSetsValue) {
    IdSource ids(10);
    TrackBar t(ids, 1, {0, 0, 200, 10}, 0, 100, 30, "Level");
    EXPECT_DOUBLE_EQ(t.set_from_point({0, 5}), 0);
    EXPECT_DOUBLE_EQ(t.set_from_point({100, 5}), 50);
    EXPECT_DOUBLE_EQ(t.set_from_point({500, 5}), 100);
    t.set_value(50);
    Mover m;
    m.add(t);
    ASSERT_TRUE(m.catch_at({100, 5}, MouseButton::Left));
    EXPECT_EQ(m.caught_node(), kTrackThumb);
    ASSERT_TRUE(m.move({150, 40}));
    m.release();
    EXPECT_DOUBLE_EQ(t.value(), 75);
}

TEST(TrackBar, ResizeKeepsValueAndPinsLabels) {
    IdSource ids(10);
    TrackBar t(ids, 1, {0, 0, 200, 10}, 0, 100, 50, "Level");
    EXPECT_TRUE(t.move_node(kTrackRight, {100, 0}, {}, ButtonRole::Move));
    EXPECT_DOUBLE_EQ(t.value(), 50);
    EXPECT_DOUBLE_EQ(t.thumb_x(), 150);
    EXPECT_DOUBLE_EQ(t.high_label().center().x, 300);
    EXPECT_FALSE(t.high_label().movable());
    EXPECT_TRUE(t.move_node(kTrackLeft, {400, 0}, {}, ButtonRole::Move));
    EXPECT_DOUBLE_EQ(t.track().width, kMinTrackWidth);
}

TEST(TrackBar, TitleKeepsOffset) {
    IdSource ids(10);
    TrackBar t(ids, 1, {0, 0, 200, 10}, 0, 100, 50, "Level");
    t.title().move_by({30, -5});
    notify_changed(t.title());
    const Vec2 off = t.title().center() - t.track().top_left();
    t.move_node(kTrackLeft, {20, 0}, {}, ButtonRole::Move);
    t.move_by({7, 9});
    EXPECT_EQ(t.title().center() - t.track().top_left(), off);
}
