// Exercises the shared library purely through its C header.
#include <gtest/gtest.h>

#include <udapp/udapp.h>

#include <string>

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { udapp_string_free(p); }
    std::string s() const { return p ? p : ""; }
};

struct Scene {
    udapp_scene* h = nullptr;
    ~Scene() { udapp_scene_destroy(h); }
};

Scene sample(const char* name) {
    Scene s;
    EXPECT_EQ(udapp_scene_create_sample(name, &s.h), UDAPP_OK);
    return s;
}

std::string hash_of(const udapp_scene* s) {
    Str bytes;
    char h[65] = {};
    EXPECT_EQ(udapp_scene_snapshot(s, &bytes.p, h), UDAPP_OK);
    return h;
}

} // namespace

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STRNE(udapp_version(), "");
    EXPECT_STREQ(udapp_status_name(UDAPP_OK), "ok");
    EXPECT_STREQ(udapp_status_name(UDAPP_E_ROSTER_MISMATCH), "roster mismatch");
}

TEST(CApi, SampleNames) {
    Str names;
    ASSERT_EQ(udapp_sample_names(&names.p), UDAPP_OK);
    EXPECT_NE(names.s().find("\"ring-editor\""), std::string::npos);
}

TEST(CApi, UnknownSampleAndNullArguments) {
    udapp_scene* s = nullptr;
    EXPECT_EQ(udapp_scene_create_sample("nope", &s), UDAPP_E_UNKNOWN_SAMPLE);
    EXPECT_EQ(s, nullptr);
    EXPECT_NE(std::string(udapp_last_error()).find("calculator"), std::string::npos);
    EXPECT_EQ(udapp_scene_create_sample(nullptr, &s), UDAPP_E_INVALID_ARGUMENT);
    Str out;
    EXPECT_EQ(udapp_scene_save(nullptr, &out.p), UDAPP_E_INVALID_ARGUMENT);
    udapp_scene_destroy(nullptr);
}

TEST(CApi, SaveLoadRoundTrip) {
    auto s = sample("personal-data");
    Str a;
    ASSERT_EQ(udapp_scene_save(s.h, &a.p), UDAPP_OK);
    Scene t;
    ASSERT_EQ(udapp_scene_load(a.p, &t.h), UDAPP_OK);
    Str b;
    ASSERT_EQ(udapp_scene_save(t.h, &b.p), UDAPP_OK);
    EXPECT_EQ(a.s(), b.s());
    EXPECT_EQ(hash_of(s.h), hash_of(t.h));
    EXPECT_EQ(std::string(udapp_last_error()), "");
}

TEST(CApi, LoadRejectsGarbage) {
    udapp_scene* s = nullptr;
    EXPECT_EQ(udapp_scene_load("{", &s), UDAPP_E_PARSE);
    EXPECT_EQ(udapp_scene_load(R"({"schema":"other/9"})", &s), UDAPP_E_SCHEMA);
    EXPECT_EQ(s, nullptr);
}

TEST(CApi, PointerDragAndHitTest) {
    auto s = sample("village");
    int found = 0;
    uint64_t id = 0;
    int64_t node = -1;
    const char* cursor = nullptr;
    ASSERT_EQ(udapp_scene_hit_test(s.h, 250, 125, &found, &id, &node, &cursor), UDAPP_OK);
    ASSERT_EQ(found, 1);
    EXPECT_STREQ(cursor, "SizeAll");
    ASSERT_EQ(udapp_scene_hit_test(s.h, 5, 5, &found, &id, &node, &cursor), UDAPP_OK);
    EXPECT_EQ(found, 0);

    const std::string before = hash_of(s.h);
    int changed = 0;
    EXPECT_EQ(udapp_scene_pointer(s.h, UDAPP_DOWN, 250, 125, UDAPP_LEFT, &changed), UDAPP_OK);
    uint64_t held = 0;
    int64_t held_node = -1;
    ASSERT_EQ(udapp_scene_caught(s.h, &held, &held_node), UDAPP_OK);
    EXPECT_GE(held_node, 0);
    EXPECT_EQ(udapp_scene_pointer(s.h, UDAPP_DOWN, 250, 125, UDAPP_RIGHT, &changed), UDAPP_E_ILLEGAL_EVENT);
    EXPECT_EQ(udapp_scene_pointer(s.h, UDAPP_MOVE, 260, 125, UDAPP_LEFT, &changed), UDAPP_OK);
    EXPECT_EQ(changed, 1);
    EXPECT_EQ(udapp_scene_pointer(s.h, UDAPP_UP, 260, 125, UDAPP_LEFT, &changed), UDAPP_OK);
    ASSERT_EQ(udapp_scene_caught(s.h, &held, &held_node), UDAPP_OK);
    EXPECT_EQ(held_node, -1);
    EXPECT_NE(hash_of(s.h), before);
}

TEST(CApi, ApplyEventAndReplay) {
    auto a = sample("village");
    auto b = sample("village");
    int changed = 0;
    EXPECT_EQ(udapp_scene_apply_event(a.h, R"({"k":"down","x":250,"y":125})", &changed), UDAPP_OK);
    EXPECT_EQ(udapp_scene_apply_event(a.h, R"({"k":"up","x":255,"y":125})", &changed), UDAPP_OK);
    EXPECT_EQ(udapp_scene_apply_event(a.h, R"({"k":"jump"})", &changed), UDAPP_E_PARSE);

    Str report;
    ASSERT_EQ(udapp_scene_replay(b.h, "{\"k\":\"down\",\"x\":250,\"y\":125}\n{\"k\":\"up\",\"x\":255,\"y\":125}\n"
                                      "{\"k\":\"up\",\"x\":1,\"y\":1}\n",
                                 &report.p),
              UDAPP_OK);
    EXPECT_NE(report.s().find("\"line\":3"), std::string::npos);
    EXPECT_EQ(hash_of(a.h), hash_of(b.h));

    Str bad;
    EXPECT_EQ(udapp_scene_replay(b.h, "{\"k\":\"down\"}\n\nnot json\n", &bad.p), UDAPP_E_PARSE);
    EXPECT_NE(std::string(udapp_last_error()).find("line"), std::string::npos);
}

TEST(CApi, Diff) {
    auto a = sample("village");
    auto b = sample("village");
    Str sa, sb;
    ASSERT_EQ(udapp_scene_save(a.h, &sa.p), UDAPP_OK);
    int identical = 0;
    Str text;
    ASSERT_EQ(udapp_diff(sa.p, sa.p, &text.p, &identical), UDAPP_OK);
    EXPECT_EQ(identical, 1);
    EXPECT_EQ(text.s(), "");

    int changed = 0;
    udapp_scene_apply_event(b.h, R"({"k":"down","x":250,"y":125})", &changed);
    udapp_scene_apply_event(b.h, R"({"k":"up","x":255,"y":125})", &changed);
    ASSERT_EQ(udapp_scene_save(b.h, &sb.p), UDAPP_OK);
    Str d;
    ASSERT_EQ(udapp_diff(sa.p, sb.p, &d.p, &identical), UDAPP_OK);
    EXPECT_EQ(identical, 0);
    EXPECT_EQ(d.s(), "/figures/1/rect/0: 220.0 -> 225.0\n");

    Str e;
    EXPECT_EQ(udapp_diff(sa.p, R"({"schema":"x"})", &e.p, &identical), UDAPP_E_SCHEMA);
}
