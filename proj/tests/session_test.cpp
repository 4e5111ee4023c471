#include <gtest/gtest.h>

#include <udapp/controls.hpp>
#include <udapp/error.hpp>
#include <udapp/groups.hpp>
#include <udapp/primitives.hpp>

#include "scene_util.hpp"

using namespace udapp;
using testutil::count_figures;

namespace {

ScriptEvent ev(EventKind k, double x, double y, MouseButton b = MouseButton::Left) {
    ScriptEvent e;
    e.kind = k;
    e.point = {x, y};
    e.button = b;
    return e;
}

} // namespace

TEST(Samples, Composition) {
    auto years = make_sample("years-selection");
    EXPECT_EQ(years->roots().size(), 3u);
    EXPECT_EQ(count_figures<ControlProxy>(*years), 5u);
    EXPECT_EQ(years->roots()[0]->class_tag(), "Control");

    auto personal = make_sample("personal-data");
    EXPECT_EQ(count_figures<ControlProxy>(*personal), 23u);
    EXPECT_EQ(count_figures<ElasticGroup>(*personal), 7u);

    auto ring = make_sample("ring-editor");
    EXPECT_EQ(ring->roots().size(), 4u);
    EXPECT_EQ(count_figures<Ring>(*ring), 1u);
    EXPECT_EQ(ring->roots()[1]->class_tag(), "ElasticGroup");
    EXPECT_EQ(ring->roots()[2]->class_tag(), "Control");
    EXPECT_EQ(ring->roots()[3]->class_tag(), "Control");

    auto bars = make_sample("bar-editor");
    EXPECT_EQ(count_figures<BarChart>(*bars), 1u);
    EXPECT_EQ(bars->roots().size(), 4u);

    try {
        make_sample("nope");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownSample);
        EXPECT_NE(std::string(e.what()).find("village"), std::string::npos);
    }
}

TEST(Samples, DefaultsAreDeterministic) {
    for (const auto& n : sample_names()) EXPECT_EQ(make_sample(n)->snapshot().sha256, make_sample(n)->snapshot().sha256);
}

TEST(Session, BackgroundDragPansView) {
    auto s = make_sample("years-selection");
    const std::string figs = s->save()["figures"].dump();
    EXPECT_FALSE(s->pointer(EventKind::Down, {520, 100}).dropped);
    EXPECT_TRUE(s->pointer(EventKind::Move, {540, 95}).changed);
    EXPECT_TRUE(s->pointer(EventKind::Up, {550, 90}).changed);
    EXPECT_EQ(s->view_offset(), (Vec2{30, -10}));
    EXPECT_EQ(s->save()["figures"].dump(), figs);
}

TEST(Session, BodyDragMovesFigureOnly) {
    auto s = make_sample("village");
    Figure& house = *s->roots()[1];
    const RectF before = house.bounds();
    s->pointer(EventKind::Down, {250, 125});
    s->pointer(EventKind::Move, {253, 125});
    s->pointer(EventKind::Up, {255, 125});
    EXPECT_EQ(house.bounds(), before.translated({5, 0}));
    EXPECT_EQ(s->view_offset(), (Vec2{0, 0}));
}

TEST(Session, ScriptDragMatchesDirectMove) {
    auto a = make_sample("village");
    auto b = make_sample("village");
    const auto script = parse_script(R"({"k":"down","x":250,"y":125,"b":"L"}
{"k":"move","x":252,"y":125}
{"k":"up","x":255,"y":125,"b":"L"}
)");
    const auto r = replay(*a, script);
    EXPECT_TRUE(r.dropped.empty());
    b->roots()[1]->move_by({5, 0});
    EXPECT_EQ(r.final.sha256, b->snapshot().sha256);
}

TEST(Session, RightButtonRotatesRing) {
    auto s = make_sample("ring-editor");
    auto& ring = dynamic_cast<Ring&>(*s->roots()[0]);
    const auto sizes = ring.sector_angles();
    s->pointer(EventKind::Down, {180 + 100, 200}, MouseButton::Right);
    EXPECT_TRUE(ring.rotation_state().active);
    EXPECT_TRUE(s->pointer(EventKind::Move, {180, 200 + 100}, MouseButton::Right).changed);
    s->pointer(EventKind::Up, {180, 200 + 100}, MouseButton::Right);
    EXPECT_NEAR(ring.rotation(), M_PI / 2, 1e-12);
    EXPECT_EQ(ring.sector_angles(), sizes);
}

TEST(Session, IllegalOrderingDropped) {
    auto s = make_sample("village");
    EXPECT_TRUE(s->pointer(EventKind::Up, {1, 1}).dropped);
    EXPECT_FALSE(s->pointer(EventKind::Down, {1, 1}).dropped);
    EXPECT_TRUE(s->pointer(EventKind::Down, {1, 1}, MouseButton::Right).dropped);
    EXPECT_TRUE(s->pointer(EventKind::Up, {1, 1}, MouseButton::Right).dropped);
    EXPECT_TRUE(s->command("raise", {{"id", 1}}).dropped);
    EXPECT_FALSE(s->pointer(EventKind::Up, {1, 1}).dropped);
}

TEST(Session, EmptyScriptAndDeterminism) {
    auto s = make_sample("calculator");
    const auto init = s->snapshot();
    EXPECT_EQ(replay(*s, {}).final.sha256, init.sha256);
    std::vector<ScriptEvent> script{ev(EventKind::Down, 20, 96), ev(EventKind::Move, 80, 200), ev(EventKind::Up, 90, 210)};
    std::string first;
    for (int i = 0; i < 3; ++i) {
        auto t = make_sample("calculator");
        const auto h = replay(*t, script).final.sha256;
        if (i == 0) first = h;
        EXPECT_EQ(h, first);
    }
    EXPECT_NE(first, init.sha256);
}

TEST(Session, HiddenFlagChangesHash) {
    auto a = make_sample("personal-data");
    auto b = make_sample("personal-data");
    auto& outer = dynamic_cast<ElasticGroup&>(*b->roots()[0]);
    ASSERT_TRUE(b->command("set-visible", {{"id", outer.element(0).id()}, {"value", false}}).changed);
    EXPECT_NE(a->snapshot().sha256, b->snapshot().sha256);
    const auto name_id = outer.element(2).id();
    const auto o = b->command("set-visible", {{"id", name_id}, {"value", false}});
    EXPECT_TRUE(o.dropped);
    EXPECT_NE(o.reason.find("cannot be hidden"), std::string::npos);
}

TEST(Session, RubberBandMakesArbitraryGroup) {
    auto s = make_sample("village");
    s->pointer(EventKind::Down, {200, 60});
    s->pointer(EventKind::Move, {300, 100});
    ASSERT_TRUE(s->rubber_band().has_value());
    EXPECT_TRUE(s->pointer(EventKind::Up, {420, 190}).changed);
    ASSERT_EQ(s->roots()[1]->class_tag(), "SelectGroup");
    auto& g = dynamic_cast<RectSelectGroup&>(*s->roots()[1]);
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.label(), "Arbitrary");
    // Any inner point moves all members.
    const RectF m0 = g.member(0).bounds();
    s->pointer(EventKind::Down, {300, 130});
    s->pointer(EventKind::Up, {310, 140});
    EXPECT_EQ(g.member(0).bounds(), m0.translated({10, 10}));
    ASSERT_TRUE(s->command("ungroup", {{"id", g.id()}}).changed);
    EXPECT_EQ(s->roots().size(), 5u);
}

TEST(Session, PredefinedGroupsByTag) {
    auto s = make_sample("calculator");
    for (const char* tag : {"Digits", "Operations", "Functions"})
        ASSERT_TRUE(s->command("frame-group", {{"tag", tag}}).changed) << tag;
    std::size_t groups = 0;
    for (const auto& r : s->roots())
        if (auto* g = dynamic_cast<const RectSelectGroup*>(r.get())) {
            ++groups;
            EXPECT_TRUE(g->predefined());
        }
    EXPECT_EQ(groups, 3u);
    EXPECT_EQ(s->roots().size(), 4u);
    EXPECT_TRUE(s->command("frame-group", {{"tag", "Digits"}}).dropped);
}

TEST(Session, SaveLoadSlotsAndReset) {
    auto s = make_sample("bar-editor");
    const auto init = s->snapshot();
    ASSERT_FALSE(s->command("set-value", {{"id", s->roots()[0]->id()}, {"index", 2}, {"value", 10}}).dropped);
    ASSERT_FALSE(s->command("save", {{"slot", "a"}}).dropped);
    const auto saved = s->snapshot();
    s->roots()[0]->move_by({50, 50});
    EXPECT_NE(s->snapshot().sha256, saved.sha256);
    ASSERT_FALSE(s->command("load", {{"slot", "a"}}).dropped);
    EXPECT_EQ(s->snapshot().sha256, saved.sha256);
    EXPECT_TRUE(s->command("load", {{"slot", "b"}}).dropped);
    ASSERT_TRUE(s->command("reset-default", json::object()).changed);
    EXPECT_EQ(s->snapshot().sha256, init.sha256);
    EXPECT_TRUE(s->store().contains("scenes/a"));
}

TEST(Session, ResetFigureDefault) {
    auto s = make_sample("ring-editor");
    Figure& group = *s->roots()[1];
    const auto init = s->snapshot();
    group.move_by({30, 30});
    ASSERT_TRUE(s->command("reset-default", {{"id", group.id()}}).changed);
    EXPECT_EQ(s->snapshot().sha256, init.sha256);
}

TEST(Session, CommandErrorsAreReported) {
    auto s = make_sample("village");
    EXPECT_TRUE(s->command("no-such", json::object()).dropped);
    EXPECT_TRUE(s->command("set-movable", {{"id", 9999}, {"value", true}}).dropped);
    EXPECT_TRUE(s->command("set-movable", {{"id", 1}}).dropped);
    EXPECT_TRUE(s->command("set-window", {{"width", -1}, {"height", 5}}).dropped);
    EXPECT_FALSE(s->command("set-buttons", {{"move", "R"}, {"rotate", "L"}}).dropped);
    EXPECT_EQ(s->buttons().move, MouseButton::Right);
}

TEST(Script, ParseErrorsCarryLineNumbers) {
    try {
        parse_script("{\"k\":\"down\",\"x\":1,\"y\":2}\n\n{\"k\":\"jump\"}\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_THROW(parse_script("not json"), Error);
    const auto evs = parse_script("{\"k\":\"cmd\",\"name\":\"save\"}\n{\"k\":\"up\",\"x\":1,\"y\":2,\"b\":\"R\"}");
    ASSERT_EQ(evs.size(), 2u);
    EXPECT_EQ(evs[0].kind, EventKind::Command);
    EXPECT_EQ(evs[1].button, MouseButton::Right);
    EXPECT_EQ(evs[1].line, 2u);
    EXPECT_EQ(event_to_json(evs[1]), json::parse(R"({"k":"up","x":1.0,"y":2.0,"b":"R"})"));
}

TEST(Snapshot, HashIsSha256OfBytes) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    auto s = make_sample("village");
    const auto snap = s->snapshot();
    EXPECT_EQ(snap.sha256, sha256_hex(snap.bytes));
}
