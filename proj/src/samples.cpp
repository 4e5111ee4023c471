#include <udapp/samples.hpp>

#include <udapp/controls.hpp>
#include <udapp/error.hpp>
#include <udapp/groups.hpp>
#include <udapp/primitives.hpp>

namespace udapp {

namespace {

using Elements = std::vector<std::unique_ptr<Figure>>;

std::unique_ptr<ControlProxy> button(IdSource& ids, RectF r, const std::string& label, const std::string& tag = {}) {
    auto b = std::make_unique<ControlProxy>(ids(), r, Resizing::Any, label, "button");
    if (!tag.empty()) b->set_tag(tag);
    return b;
}

std::unique_ptr<CommentedControl> field(IdSource& ids, RectF r, const std::string& text, Side side = Side::W,
                                        Resizing resizing = Resizing::WE) {
    return CommentedControl::make(ids, r, resizing, side, text);
}

std::unique_ptr<ElasticGroup> elastic(IdSource& ids, const std::string& title,
                                      const std::function<void(IdSource&, Elements&)>& fill) {
    const FigureId id = ids();
    Elements els;
    fill(ids, els);
    return std::make_unique<ElasticGroup>(id, title, std::move(els));
}

void build_years_selection(Scene& s) {
    IdSource& ids = s.ids();
    auto list_group = [&ids](const std::string& title, RectF frame, const std::string& action) {
        const FigureId id = ids();
        std::vector<std::unique_ptr<ControlProxy>> els;
        els.push_back(std::make_unique<ControlProxy>(
            ids(), RectF{frame.left + 10, frame.top + 20, frame.width - 20, frame.height - 64}, Resizing::Any, title,
            "listbox"));
        els.push_back(std::make_unique<ControlProxy>(
            ids(), RectF{frame.left + 10, frame.bottom() - 36, frame.width - 20, 26}, Resizing::Any, action, "button"));
        return std::make_unique<ProportionalGroup>(id, title, frame, std::move(els));
    };
    auto all = list_group("All years", {20, 20, 200, 300}, "Add >");
    auto selected = list_group("Selected years", {260, 20, 200, 300}, "< Remove");
    auto ok = button(ids, {480, 330, 60, 28}, "OK");
    // Registered like the original form: the last inserted is topmost.
    s.add(std::move(ok));
    s.add(std::move(selected));
    s.add(std::move(all));
    s.set_empty_drag(EmptyDrag::Pan);
}

void build_personal_data(Scene& s) {
    IdSource& ids = s.ids();
    auto person = elastic(ids, "Personal data", [](IdSource& ids, Elements& els) {
        els.push_back(std::make_unique<ControlProxy>(ids(), RectF{40, 40, 110, 22}, Resizing::None, "Date", "label"));
        els.push_back(std::make_unique<ControlProxy>(ids(), RectF{160, 40, 90, 22}, Resizing::None, "Time", "label"));
        for (auto [text, y] : {std::pair{"Name", 76.0}, std::pair{"Surname", 106.0}}) {
            auto f = field(ids, {110, y, 170, 22}, text);
            f->set_hideable(false);
            els.push_back(std::move(f));
        }
        els.push_back(elastic(ids, "Address", [](IdSource& ids, Elements& a) {
            a.push_back(field(ids, {110, 160, 200, 22}, "Street"));
            a.push_back(field(ids, {110, 190, 60, 22}, "House"));
            a.push_back(elastic(ids, "Region", [](IdSource& ids, Elements& r) {
                r.push_back(field(ids, {110, 232, 150, 22}, "City"));
                r.push_back(field(ids, {110, 262, 150, 22}, "Province"));
                r.push_back(field(ids, {110, 292, 90, 22}, "Postal code"));
                r.push_back(field(ids, {110, 322, 150, 22}, "Country"));
            }));
        }));
        els.push_back(elastic(ids, "Phones", [](IdSource& ids, Elements& p) {
            p.push_back(field(ids, {470, 160, 130, 22}, "Home"));
            p.push_back(field(ids, {470, 190, 130, 22}, "Mobile"));
            p.push_back(field(ids, {470, 220, 130, 22}, "Work"));
        }));
        els.push_back(elastic(ids, "E-mail", [](IdSource& ids, Elements& m) {
            m.push_back(field(ids, {470, 270, 190, 22}, "Personal"));
            m.push_back(field(ids, {470, 300, 190, 22}, "Office"));
        }));
        els.push_back(elastic(ids, "Birth", [](IdSource& ids, Elements& b) {
            b.push_back(field(ids, {420, 370, 40, 22}, "Day", Side::N, Resizing::None));
            b.push_back(field(ids, {480, 370, 90, 22}, "Month", Side::N));
            b.push_back(field(ids, {590, 370, 60, 22}, "Year", Side::N, Resizing::None));
        }));
        els.push_back(elastic(ids, "Profession", [](IdSource& ids, Elements& p) {
            p.push_back(field(ids, {110, 380, 200, 22}, "Company"));
            p.push_back(field(ids, {110, 410, 200, 22}, "Position"));
            p.push_back(field(ids, {110, 440, 200, 22}, "Department"));
            p.push_back(field(ids, {110, 470, 60, 22}, "Experience"));
            p.push_back(field(ids, {110, 500, 200, 22}, "Education"));
        }));
    });
    s.add(std::move(person));
    s.set_empty_drag(EmptyDrag::Pan);
}

void build_calculator(Scene& s) {
    IdSource& ids = s.ids();
    s.add(std::make_unique<ControlProxy>(ids(), RectF{20, 20, 300, 40}, Resizing::Any, "Display", "textbox"));
    const char* digits[] = {"7", "8", "9", "4", "5", "6", "1", "2", "3", "0", "."};
    for (int i = 0; i < 11; ++i)
        s.add(button(ids, {20.0 + 46 * (i % 3), 80.0 + 38 * (i / 3), 40, 32}, digits[i], "Digits"));
    const char* ops[] = {"/", "*", "-", "+", "="};
    for (int i = 0; i < 5; ++i) s.add(button(ids, {180, 80.0 + 38 * i, 40, 32}, ops[i], "Operations"));
    const char* fns[] = {"sqrt", "%", "1/x", "+/-", "C", "CE"};
    for (int i = 0; i < 6; ++i)
        s.add(button(ids, {240.0 + 50 * (i % 2), 80.0 + 38 * (i / 2), 44, 32}, fns[i], "Functions"));
    s.set_empty_drag(EmptyDrag::RubberBand);
}

std::unique_ptr<ElasticGroup> parameters_group(IdSource& ids, const std::string& a, const std::string& b,
                                               bool with_track) {
    return elastic(ids, "Parameters", [&](IdSource& ids, Elements& els) {
        els.push_back(field(ids, {470, 60, 60, 22}, a));
        els.push_back(field(ids, {470, 100, 80, 22}, b));
        if (with_track) {
            const FigureId id = ids();
            els.push_back(std::make_unique<TrackBar>(ids, id, RectF{390, 160, 180, 10}, 0, 100, 40, "Inner radius"));
        }
    });
}

void build_ring_editor(Scene& s) {
    IdSource& ids = s.ids();
    auto ring = std::make_unique<Ring>(ids(), Point2D{180, 200}, 50, 120, std::vector<double>{0, 1.2, 2.6, 4.1});
    const char* labels[] = {"A", "B", "C", "D"};
    for (std::size_t i = 0; i < 4; ++i)
        ring->add_comment(std::make_unique<Comment>(ids(), labels[i], Point2D{}, 12),
                          RingCommentPlacement{false, i, 0.5, 0.7, {}});
    ring->add_comment(std::make_unique<Comment>(ids(), "New ring", Point2D{}, 14),
                      RingCommentPlacement{true, 0, 0, 0, {0, -140}});
    s.add(std::move(ring));
    s.add(parameters_group(ids, "Sectors", "Total", true));
    s.add(button(ids, {380, 340, 80, 28}, "OK"));
    s.add(button(ids, {480, 340, 80, 28}, "Cancel"));
}

void build_bar_editor(Scene& s) {
    IdSource& ids = s.ids();
    const FigureId id = ids();
    s.add(std::make_unique<BarChart>(ids, id, RectF{20, 20, 320, 260}, std::vector<double>{40, 80, 120, 60, 100}));
    s.add(parameters_group(ids, "Bars", "Scale", false));
    s.add(button(ids, {380, 340, 80, 28}, "OK"));
    s.add(button(ids, {480, 340, 80, 28}, "Cancel"));
}

void build_village(Scene& s) {
    IdSource& ids = s.ids();
    s.add(elastic(ids, "Buildings", [](IdSource& ids, Elements& els) {
        const char* kinds[] = {"house", "church", "shop", "barn", "tower"};
        for (int i = 0; i < 5; ++i) els.push_back(button(ids, {30, 40.0 + 34 * i, 100, 28}, kinds[i], kinds[i]));
    }));
    s.add(std::make_unique<RectFigure>(ids(), RectF{220, 100, 60, 50}, "house"));
    s.add(std::make_unique<RectFigure>(ids(), RectF{320, 80, 70, 90}, "church"));
    s.add(std::make_unique<RectFigure>(ids(), RectF{440, 120, 80, 50}, "shop"));
    s.add(std::make_unique<RectFigure>(ids(), RectF{300, 260, 90, 60}, "barn"));
    s.set_empty_drag(EmptyDrag::RubberBand);
}

struct SampleDef {
    const char* name;
    double width;
    double height;
    void (*build)(Scene&);
};

const SampleDef kSamples[] = {
    {"years-selection", 560, 400, build_years_selection},
    {"personal-data", 720, 560, build_personal_data},
    {"calculator", 380, 320, build_calculator},
    {"ring-editor", 600, 400, build_ring_editor},
    {"bar-editor", 600, 400, build_bar_editor},
    {"village", 800, 560, build_village},
};

} // namespace

const std::vector<std::string>& sample_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& d : kSamples) out.emplace_back(d.name);
        return out;
    }();
    return names;
}

std::unique_ptr<Scene> make_sample(const std::string& name) {
    for (const auto& d : kSamples) {
        if (name != d.name) continue;
        auto s = std::make_unique<Scene>(d.name, d.width, d.height);
        d.build(*s);
        s->capture_defaults();
        s->set_factory([n = name] { return make_sample(n); });
        return s;
    }
    std::string list;
    for (const auto& n : sample_names()) list += (list.empty() ? "" : ", ") + n;
    fail(ErrorCode::UnknownSample, "unknown sample '" + name + "' (available: " + list + ")");
}

std::unique_ptr<Scene> load_scene(const json& archive) {
    validate_archive(archive);
    const auto it = archive.find("scene");
    if (it == archive.end() || !it->is_string()) fail(ErrorCode::Schema, "archive does not name its scene");
    auto s = make_sample(it->get<std::string>());
    s->restore(archive);
    return s;
}

} // namespace udapp
