// Headless driver over the C API: sample archives, script replay, diffs.
#include <udapp/udapp.h>

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kClean = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { udapp_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

using SceneHandle = std::unique_ptr<udapp_scene, decltype(&udapp_scene_destroy)>;

int report_failure(const std::string& what, udapp_status s) {
    std::cerr << "error: " << what << ": " << udapp_status_name(s);
    const std::string detail = udapp_last_error();
    if (!detail.empty()) std::cerr << ": " << detail;
    std::cerr << "\n";
    return kFailure;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    out << text;
    return static_cast<bool>(out);
}

std::string sample_list() {
    OwnedString names;
    if (udapp_sample_names(&names.p) != UDAPP_OK) return "?";
    std::string s = names.str();
    return s;
}

int cmd_sample(const std::string& name, const std::string& out) {
    udapp_scene* raw = nullptr;
    const udapp_status st = udapp_scene_create_sample(name.c_str(), &raw);
    if (st != UDAPP_OK) {
        report_failure("cannot build sample '" + name + "'", st);
        std::cerr << "available samples: " << sample_list() << "\n";
        return kFailure;
    }
    SceneHandle scene(raw, udapp_scene_destroy);
    OwnedString text;
    if (const auto s = udapp_scene_save(scene.get(), &text.p); s != UDAPP_OK) return report_failure("save failed", s);
    if (!emit(text.str(), out)) {
        std::cerr << "error: cannot write " << out << "\n";
        return kFailure;
    }
    return kClean;
}

// A scene source is an archive file when one exists at that path, else a
// built-in sample name.
int open_scene(const std::string& source, SceneHandle& scene) {
    udapp_scene* raw = nullptr;
    udapp_status st;
    if (std::filesystem::is_regular_file(source)) {
        const auto text = read_file(source);
        if (!text) {
            std::cerr << "error: cannot read " << source << "\n";
            return kFailure;
        }
        st = udapp_scene_load(text->c_str(), &raw);
    } else {
        st = udapp_scene_create_sample(source.c_str(), &raw);
    }
    if (st != UDAPP_OK) return report_failure("cannot open scene '" + source + "'", st);
    scene.reset(raw);
    return kClean;
}

int cmd_replay(const std::string& source, const std::string& script_path, const std::string& out,
               const std::string& report_path) {
    SceneHandle scene(nullptr, udapp_scene_destroy);
    if (const int rc = open_scene(source, scene); rc != kClean) return rc;
    const auto script = read_file(script_path);
    if (!script) {
        std::cerr << "error: cannot read " << script_path << "\n";
        return kFailure;
    }
    OwnedString report;
    if (const auto s = udapp_scene_replay(scene.get(), script->c_str(), &report.p); s != UDAPP_OK)
        return report_failure("replay failed", s);
    OwnedString bytes;
    char hash[65];
    if (const auto s = udapp_scene_snapshot(scene.get(), &bytes.p, hash); s != UDAPP_OK)
        return report_failure("snapshot failed", s);
    if (!emit(bytes.str(), out)) {
        std::cerr << "error: cannot write " << out << "\n";
        return kFailure;
    }
    const std::string rep = report.str() + "\n";
    if (!report_path.empty()) {
        std::ofstream r(report_path, std::ios::binary | std::ios::trunc);
        r << rep;
    }
    std::cerr << rep;
    // Dropped events leave the report's array non-empty.
    return rep.find("\"dropped\":[]") == std::string::npos ? kFailure : kClean;
}

int cmd_diff(const std::string& a_path, const std::string& b_path) {
    const auto a = read_file(a_path);
    const auto b = read_file(b_path);
    if (!a || !b) {
        std::cerr << "error: cannot read " << (a ? b_path : a_path) << "\n";
        return kFailure;
    }
    OwnedString text;
    int identical = 0;
    const auto s = udapp_diff(a->c_str(), b->c_str(), &text.p, &identical);
    if (s == UDAPP_E_SCHEMA) {
        std::cerr << "schema mismatch: " << udapp_last_error() << "\n";
        return kFailure;
    }
    if (s != UDAPP_OK) return report_failure("diff failed", s);
    std::cout << text.str();
    return identical ? kClean : kFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build sample scenes, replay interaction scripts and diff snapshots."};
    app.require_subcommand(1, 1);

    std::string name, out, source, script, report, a, b;
    auto* sample = app.add_subcommand("sample", "Write a sample scene's default archive");
    sample->add_option("name", name, "Sample name")->required();
    sample->add_option("-o,--output", out, "Output file (default: stdout)");

    auto* rep = app.add_subcommand("replay", "Replay a script and write the final snapshot");
    rep->add_option("scene", source, "Archive file or sample name")->required();
    rep->add_option("script", script, "Script file (JSON lines)")->required();
    rep->add_option("-o,--output", out, "Snapshot file (default: stdout)");
    rep->add_option("--report", report, "Also write the replay report here");

    auto* diff = app.add_subcommand("diff", "Field-level diff of two archives or snapshots");
    diff->add_option("a", a, "First file")->required();
    diff->add_option("b", b, "Second file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (sample->parsed()) return cmd_sample(name, out);
    if (rep->parsed()) return cmd_replay(source, script, out, report);
    return cmd_diff(a, b);
}
