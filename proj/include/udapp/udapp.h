#ifndef UDAPP_H
#define UDAPP_H

#include <stdint.h>

#if defined(_WIN32)
#define UDAPP_API __declspec(dllexport)
#else
#define UDAPP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct udapp_scene udapp_scene;

typedef enum udapp_status {
    UDAPP_OK = 0,
    UDAPP_E_INVALID_ARGUMENT = 1,
    UDAPP_E_NOT_FOUND = 2,
    UDAPP_E_PARSE = 3,
    UDAPP_E_SCHEMA = 4,
    UDAPP_E_ROSTER_MISMATCH = 5,
    UDAPP_E_UNKNOWN_SAMPLE = 6,
    UDAPP_E_ILLEGAL_EVENT = 7,
    UDAPP_E_IO = 8,
    UDAPP_E_INTERNAL = 100
} udapp_status;

typedef enum udapp_pointer_kind { UDAPP_DOWN = 0, UDAPP_MOVE = 1, UDAPP_UP = 2 } udapp_pointer_kind;
typedef enum udapp_button { UDAPP_LEFT = 0, UDAPP_RIGHT = 1 } udapp_button;

/* Strings returned through char** out-parameters are owned by the caller
   and released with udapp_string_free. */

UDAPP_API const char* udapp_version(void);
/* Message of the last failure on the calling thread ("" after success). */
UDAPP_API const char* udapp_last_error(void);
UDAPP_API const char* udapp_status_name(udapp_status s);
UDAPP_API void udapp_string_free(char* s);

/* JSON array of built-in sample names. */
UDAPP_API udapp_status udapp_sample_names(char** out_json);

UDAPP_API udapp_status udapp_scene_create_sample(const char* name, udapp_scene** out);
/* Rebuilds the archive's sample and applies the archive to it. */
UDAPP_API udapp_status udapp_scene_load(const char* archive_json, udapp_scene** out);
UDAPP_API void udapp_scene_destroy(udapp_scene* scene);

UDAPP_API udapp_status udapp_scene_save(const udapp_scene* scene, char** out_json);
/* Canonical bytes plus their SHA-256 as 64 hex digits and a terminator. */
UDAPP_API udapp_status udapp_scene_snapshot(const udapp_scene* scene, char** out_bytes, char out_sha256[65]);

/* A dropped event returns UDAPP_E_ILLEGAL_EVENT; the scene is unchanged. */
UDAPP_API udapp_status udapp_scene_pointer(udapp_scene* scene, udapp_pointer_kind kind, double x, double y,
                                           udapp_button button, int* out_changed);
/* One script line: pointer event or command. */
UDAPP_API udapp_status udapp_scene_apply_event(udapp_scene* scene, const char* event_json, int* out_changed);
/* Replays a whole script. Dropped events are listed in the report and do
   not make the call fail; malformed scripts return UDAPP_E_PARSE. */
UDAPP_API udapp_status udapp_scene_replay(udapp_scene* scene, const char* script, char** out_report_json);

/* out_found is 0 when nothing would be caught; cursor is a static string. */
UDAPP_API udapp_status udapp_scene_hit_test(const udapp_scene* scene, double x, double y, int* out_found,
                                            uint64_t* out_id, int64_t* out_node, const char** out_cursor);
/* Figure and node held by the current drag; out_node is -1 when idle. */
UDAPP_API udapp_status udapp_scene_caught(const udapp_scene* scene, uint64_t* out_id, int64_t* out_node);

/* Field-level diff of two archives; out_identical is 1 when equal. */
UDAPP_API udapp_status udapp_diff(const char* a_json, const char* b_json, char** out_text, int* out_identical);

#ifdef __cplusplus
}
#endif

#endif
