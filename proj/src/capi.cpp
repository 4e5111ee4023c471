#include <udapp/udapp.h>

#include <udapp/error.hpp>
#include <udapp/persistence.hpp>
#include <udapp/samples.hpp>
#include <udapp/session.hpp>

#include <cstdlib>
#include <cstring>
#include <new>

struct udapp_scene {
    std::unique_ptr<udapp::Scene> scene;
};

namespace {

thread_local std::string g_last_error;

udapp_status status_of(udapp::ErrorCode c) {
    using udapp::ErrorCode;
    switch (c) {
    case ErrorCode::InvalidArgument: return UDAPP_E_INVALID_ARGUMENT;
    case ErrorCode::NotFound: return UDAPP_E_NOT_FOUND;
    case ErrorCode::Parse: return UDAPP_E_PARSE;
    case ErrorCode::Schema: return UDAPP_E_SCHEMA;
    case ErrorCode::RosterMismatch: return UDAPP_E_ROSTER_MISMATCH;
    case ErrorCode::UnknownSample: return UDAPP_E_UNKNOWN_SAMPLE;
    case ErrorCode::IllegalEvent: return UDAPP_E_ILLEGAL_EVENT;
    case ErrorCode::Io: return UDAPP_E_IO;
    }
    return UDAPP_E_INTERNAL;
}

// Runs `fn`, translating every exception into a status code.
template <typename Fn>
udapp_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return UDAPP_OK;
    } catch (const udapp::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
    } catch (const std::exception& e) {
        g_last_error = e.what();
    } catch (...) {
        g_last_error = "unknown failure";
    }
    return UDAPP_E_INTERNAL;
}

void require(bool ok, const char* what) {
    if (!ok) udapp::fail(udapp::ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

udapp::json parse_json(const char* text, const char* what) {
    try {
        return udapp::json::parse(text);
    } catch (const udapp::json::parse_error& e) {
        udapp::fail(udapp::ErrorCode::Parse, std::string(what) + " is not valid JSON: " + e.what());
    }
}

} // namespace

extern "C" {

const char* udapp_version(void) { return "1.0.0"; }

const char* udapp_last_error(void) { return g_last_error.c_str(); }

const char* udapp_status_name(udapp_status s) {
    switch (s) {
    case UDAPP_OK: return "ok";
    case UDAPP_E_INVALID_ARGUMENT: return "invalid argument";
    case UDAPP_E_NOT_FOUND: return "not found";
    case UDAPP_E_PARSE: return "parse error";
    case UDAPP_E_SCHEMA: return "schema error";
    case UDAPP_E_ROSTER_MISMATCH: return "roster mismatch";
    case UDAPP_E_UNKNOWN_SAMPLE: return "unknown sample";
    case UDAPP_E_ILLEGAL_EVENT: return "illegal event";
    case UDAPP_E_IO: return "i/o error";
    case UDAPP_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void udapp_string_free(char* s) { std::free(s); }

udapp_status udapp_sample_names(char** out_json) {
    return guarded([&] {
        require(out_json, "out_json is null");
        *out_json = dup_string(udapp::json(udapp::sample_names()).dump());
    });
}

udapp_status udapp_scene_create_sample(const char* name, udapp_scene** out) {
    return guarded([&] {
        require(name && out, "null argument");
        *out = nullptr;
        auto h = std::make_unique<udapp_scene>();
        h->scene = udapp::make_sample(name);
        *out = h.release();
    });
}

udapp_status udapp_scene_load(const char* archive_json, udapp_scene** out) {
    return guarded([&] {
        require(archive_json && out, "null argument");
        *out = nullptr;
        auto h = std::make_unique<udapp_scene>();
        h->scene = udapp::load_scene(udapp::parse_archive_text(archive_json));
        *out = h.release();
    });
}

void udapp_scene_destroy(udapp_scene* scene) { delete scene; }

udapp_status udapp_scene_save(const udapp_scene* scene, char** out_json) {
    return guarded([&] {
        require(scene && out_json, "null argument");
        *out_json = dup_string(udapp::canonical_dump(scene->scene->save()));
    });
}

udapp_status udapp_scene_snapshot(const udapp_scene* scene, char** out_bytes, char out_sha256[65]) {
    return guarded([&] {
        require(scene && out_sha256, "null argument");
        const auto snap = scene->scene->snapshot();
        if (out_bytes) *out_bytes = dup_string(snap.bytes);
        std::memcpy(out_sha256, snap.sha256.c_str(), 65);
    });
}

udapp_status udapp_scene_pointer(udapp_scene* scene, udapp_pointer_kind kind, double x, double y, udapp_button button,
                                 int* out_changed) {
    return guarded([&] {
        require(scene, "scene is null");
        require(kind == UDAPP_DOWN || kind == UDAPP_MOVE || kind == UDAPP_UP, "unknown pointer kind");
        require(button == UDAPP_LEFT || button == UDAPP_RIGHT, "unknown button");
        const auto k = kind == UDAPP_DOWN ? udapp::EventKind::Down
                     : kind == UDAPP_MOVE ? udapp::EventKind::Move
                                          : udapp::EventKind::Up;
        const auto o = scene->scene->pointer(k, {x, y}, button == UDAPP_LEFT ? udapp::MouseButton::Left
                                                                            : udapp::MouseButton::Right);
        if (out_changed) *out_changed = o.changed ? 1 : 0;
        if (o.dropped) udapp::fail(udapp::ErrorCode::IllegalEvent, o.reason);
    });
}

udapp_status udapp_scene_apply_event(udapp_scene* scene, const char* event_json, int* out_changed) {
    return guarded([&] {
        require(scene && event_json, "null argument");
        const auto events = udapp::parse_script(event_json);
        require(events.size() == 1, "expected exactly one event");
        const auto o = scene->scene->apply(events.front());
        if (out_changed) *out_changed = o.changed ? 1 : 0;
        if (o.dropped) udapp::fail(udapp::ErrorCode::IllegalEvent, o.reason);
    });
}

udapp_status udapp_scene_replay(udapp_scene* scene, const char* script, char** out_report_json) {
    return guarded([&] {
        require(scene && script, "null argument");
        const auto report = udapp::replay(*scene->scene, udapp::parse_script(script));
        if (out_report_json) *out_report_json = dup_string(report.to_json().dump());
    });
}

udapp_status udapp_scene_hit_test(const udapp_scene* scene, double x, double y, int* out_found, uint64_t* out_id,
                                  int64_t* out_node, const char** out_cursor) {
    return guarded([&] {
        require(scene && out_found, "null argument");
        const auto hit = scene->scene->hit_test({x, y});
        *out_found = hit ? 1 : 0;
        if (out_id) *out_id = hit ? hit->id : 0;
        if (out_node) *out_node = hit ? static_cast<int64_t>(hit->node) : -1;
        if (out_cursor) *out_cursor = hit ? udapp::to_string(hit->cursor).data() : "Default";
    });
}

udapp_status udapp_scene_caught(const udapp_scene* scene, uint64_t* out_id, int64_t* out_node) {
    return guarded([&] {
        require(scene, "scene is null");
        const auto& drag = scene->scene->mover().drag();
        if (out_id) *out_id = drag ? drag->figure->id() : 0;
        if (out_node) *out_node = drag ? static_cast<int64_t>(drag->node) : -1;
    });
}

udapp_status udapp_diff(const char* a_json, const char* b_json, char** out_text, int* out_identical) {
    return guarded([&] {
        require(a_json && b_json, "null argument");
        const auto a = parse_json(a_json, "first document");
        const auto b = parse_json(b_json, "second document");
        udapp::validate_archive(a);
        udapp::validate_archive(b);
        const auto d = udapp::diff_json(a, b);
        if (out_identical) *out_identical = d.empty() ? 1 : 0;
        if (out_text) *out_text = dup_string(udapp::format_diff(d));
    });
}

} // extern "C"
