#pragma once

#include <udapp/figure.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace udapp {

inline constexpr const char* kSceneSchema = "udapp-scene/1";

// Typed hierarchical key-value store. Keys are '/'-separated paths.
class ParamStore {
public:
    using Value = std::variant<std::string, double, std::vector<double>, std::vector<std::string>, bool>;

    void set(const std::string& key, Value v);
    bool contains(const std::string& key) const { return values_.count(key) != 0; }
    const Value* find(const std::string& key) const;
    // Typed read; nullopt when absent, InvalidArgument when the stored type differs.
    template <typename T>
    std::optional<T> get(const std::string& key) const;
    // Removes `prefix` and everything below it; returns the number of keys removed.
    std::size_t erase(const std::string& prefix);
    // Direct children names of `prefix` ("" lists the top level).
    std::vector<std::string> children(const std::string& prefix) const;
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    json to_json() const;
    static ParamStore from_json(const json& j);
    void save_file(const std::filesystem::path& path) const;
    static ParamStore load_file(const std::filesystem::path& path);

    friend bool operator==(const ParamStore&, const ParamStore&) = default;

private:
    static void check_key(const std::string& key);
    std::map<std::string, Value> values_;
};

template <typename T>
std::optional<T> ParamStore::get(const std::string& key) const {
    const Value* v = find(key);
    if (!v) return std::nullopt;
    if (const T* t = std::get_if<T>(v)) return *t;
    throw_schema_error(key.c_str(), "stored value has another type");
}

// Canonical archive text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& doc);
json parse_archive_text(const std::string& text);
// Checks the top-level shape and schema tag of a scene archive.
void validate_archive(const json& doc);

// Archive text kept under "scenes/<name>" in a store; nullopt on first run.
void store_archive(ParamStore& store, const std::string& scene_name, const json& archive);
std::optional<json> fetch_archive(const ParamStore& store, const std::string& scene_name);

// Builds placeholder figures for dynamic records (the record is applied after).
std::unique_ptr<Figure> make_dynamic_figure(const json& rec, LoadContext& ctx);

struct DiffEntry {
    std::string path;
    std::optional<json> before;
    std::optional<json> after;
};

// Field-level differences; objects by key, arrays by index.
std::vector<DiffEntry> diff_json(const json& a, const json& b);
std::string format_diff(const std::vector<DiffEntry>& d);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace udapp
