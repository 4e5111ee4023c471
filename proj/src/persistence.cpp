#include <udapp/persistence.hpp>

#include <udapp/error.hpp>
#include <udapp/groups.hpp>

#include <fstream>
#include <sstream>

namespace udapp {

// ---- ParamStore

void ParamStore::check_key(const std::string& key) {
    if (key.empty() || key.front() == '/' || key.back() == '/' || key.find("//") != std::string::npos)
        fail(ErrorCode::InvalidArgument, "invalid store key '" + key + "'");
}

void ParamStore::set(const std::string& key, Value v) {
    check_key(key);
    if (const double* d = std::get_if<double>(&v); d && !std::isfinite(*d))
        fail(ErrorCode::InvalidArgument, "store scalars must be finite");
    values_[key] = std::move(v);
}

const ParamStore::Value* ParamStore::find(const std::string& key) const {
    const auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
}

std::size_t ParamStore::erase(const std::string& prefix) {
    std::size_t n = 0;
    for (auto it = values_.begin(); it != values_.end();) {
        const std::string& k = it->first;
        if (k == prefix || (k.size() > prefix.size() && k.compare(0, prefix.size(), prefix) == 0 && k[prefix.size()] == '/')) {
            it = values_.erase(it);
            ++n;
        } else {
            ++it;
        }
    }
    return n;
}

std::vector<std::string> ParamStore::children(const std::string& prefix) const {
    const std::string lead = prefix.empty() ? "" : prefix + "/";
    std::vector<std::string> out;
    for (const auto& [k, v] : values_) {
        if (k.compare(0, lead.size(), lead) != 0 || k.size() == lead.size()) continue;
        std::string name = k.substr(lead.size(), k.find('/', lead.size()) - lead.size());
        if (out.empty() || out.back() != name) out.push_back(std::move(name));
    }
    return out;
}

namespace {

// Values are tagged so that e.g. an empty text list stays a text list.
json value_to_json(const ParamStore::Value& v) {
    struct Visitor {
        json operator()(const std::string& s) const { return {{"text", s}}; }
        json operator()(double d) const { return {{"scalar", d}}; }
        json operator()(const std::vector<double>& d) const { return {{"scalars", d}}; }
        json operator()(const std::vector<std::string>& s) const { return {{"texts", s}}; }
        json operator()(bool b) const { return {{"bool", b}}; }
    };
    return std::visit(Visitor{}, v);
}

ParamStore::Value value_from_json(const std::string& key, const json& j) {
    if (!j.is_object() || j.size() != 1) throw_schema_error(key.c_str(), "expected a single tagged value");
    const auto& [tag, val] = *j.items().begin();
    try {
        if (tag == "text") return val.get<std::string>();
        if (tag == "scalar") return val.get<double>();
        if (tag == "scalars") return val.get<std::vector<double>>();
        if (tag == "texts") return val.get<std::vector<std::string>>();
        if (tag == "bool") return val.get<bool>();
    } catch (const json::exception& e) {
        throw_schema_error(key.c_str(), e.what());
    }
    throw_schema_error(key.c_str(), "unknown value tag '" + tag + "'");
}

} // namespace

json ParamStore::to_json() const {
    json out = json::object();
    for (const auto& [k, v] : values_) out[k] = value_to_json(v);
    return {{"schema", "udapp-store/1"}, {"values", std::move(out)}};
}

ParamStore ParamStore::from_json(const json& j) {
    if (!j.is_object() || j.value("schema", "") != "udapp-store/1")
        fail(ErrorCode::Schema, "not a udapp-store/1 document");
    ParamStore s;
    const auto it = j.find("values");
    if (it == j.end() || !it->is_object()) fail(ErrorCode::Schema, "store document lacks 'values'");
    for (const auto& [k, v] : it->items()) s.set(k, value_from_json(k, v));
    return s;
}

void ParamStore::save_file(const std::filesystem::path& path) const { write_text_file(path, canonical_dump(to_json())); }

ParamStore ParamStore::load_file(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return {};
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        fail(ErrorCode::Parse, path.string() + ": " + e.what());
    }
    return from_json(j);
}

// ---- archives

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_archive_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::Parse, std::string("archive is not valid JSON: ") + e.what());
    }
    validate_archive(doc);
    return doc;
}

void validate_archive(const json& doc) {
    if (!doc.is_object()) fail(ErrorCode::Schema, "archive must be a JSON object");
    const auto schema = doc.find("schema");
    if (schema == doc.end() || !schema->is_string()) fail(ErrorCode::Schema, "archive has no schema tag");
    if (*schema != kSceneSchema)
        fail(ErrorCode::Schema, "unknown archive schema '" + schema->get<std::string>() + "'");
    const auto figs = doc.find("figures");
    if (figs == doc.end() || !figs->is_array()) fail(ErrorCode::Schema, "archive lacks a 'figures' array");
    for (const auto& f : *figs)
        if (!f.is_object() || !f.contains("class") || !f.contains("id"))
            fail(ErrorCode::Schema, "every figure record needs 'class' and 'id'");
    if (const auto w = doc.find("window"); w != doc.end() && !w->is_object())
        fail(ErrorCode::Schema, "'window' must be an object");
}

void store_archive(ParamStore& store, const std::string& scene_name, const json& archive) {
    store.set("scenes/" + scene_name, canonical_dump(archive));
}

std::optional<json> fetch_archive(const ParamStore& store, const std::string& scene_name) {
    const auto text = store.get<std::string>("scenes/" + scene_name);
    if (!text) return std::nullopt;
    return parse_archive_text(*text);
}

std::unique_ptr<Figure> make_dynamic_figure(const json& rec, LoadContext&) {
    std::string tag;
    FigureId id = 0;
    load_field(rec, "class", tag);
    load_field(rec, "id", id);
    if (tag == "SelectGroup") return std::make_unique<RectSelectGroup>(id, std::vector<std::unique_ptr<Figure>>{});
    if (tag == "Rect") return std::make_unique<RectFigure>(id, RectF{0, 0, 1, 1});
    return nullptr;
}

// ---- diff

namespace {

std::string escape_segment(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

void diff_into(const json& a, const json& b, const std::string& path, std::vector<DiffEntry>& out) {
    if (a.is_object() && b.is_object()) {
        auto ia = a.begin();
        auto ib = b.begin();
        // Both iterate in sorted key order.
        while (ia != a.end() || ib != b.end()) {
            if (ib == b.end() || (ia != a.end() && ia.key() < ib.key())) {
                out.push_back({path + "/" + escape_segment(ia.key()), *ia, std::nullopt});
                ++ia;
            } else if (ia == a.end() || ib.key() < ia.key()) {
                out.push_back({path + "/" + escape_segment(ib.key()), std::nullopt, *ib});
                ++ib;
            } else {
                diff_into(*ia, *ib, path + "/" + escape_segment(ia.key()), out);
                ++ia;
                ++ib;
            }
        }
        return;
    }
    if (a.is_array() && b.is_array()) {
        const std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            const std::string p = path + "/" + std::to_string(i);
            if (i >= a.size()) out.push_back({p, std::nullopt, b[i]});
            else if (i >= b.size()) out.push_back({p, a[i], std::nullopt});
            else diff_into(a[i], b[i], p, out);
        }
        return;
    }
    if (a != b) out.push_back({path.empty() ? "/" : path, a, b});
}

} // namespace

std::vector<DiffEntry> diff_json(const json& a, const json& b) {
    std::vector<DiffEntry> out;
    diff_into(a, b, "", out);
    return out;
}

std::string format_diff(const std::vector<DiffEntry>& d) {
    std::ostringstream os;
    for (const auto& e : d) {
        os << e.path << ": " << (e.before ? e.before->dump() : "<absent>") << " -> "
           << (e.after ? e.after->dump() : "<absent>") << "\n";
    }
    return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot write " + path.string());
    out << text;
    if (!out) fail(ErrorCode::Io, "write failed for " + path.string());
}

} // namespace udapp
