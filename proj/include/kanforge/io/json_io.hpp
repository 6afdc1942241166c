#pragma once

// JSON exchange formats: complexes, twistings, cocycles and maps.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "kanforge/charclass.hpp"
#include "kanforge/simplicial_map.hpp"
#include "kanforge/twisting.hpp"

namespace kanforge::io {

using json = nlohmann::json;

struct ComplexFile {
    Presentation complex;
    std::optional<std::string> basepoint;
};

inline json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

namespace detail {

[[noreturn]] inline void fail(const std::string& field, const std::string& what)
{
    throw ParseError(field + ": " + what);
}

inline const json& member(const json& j, const std::string& key, const std::string& field)
{
    if (!j.is_object())
        fail(field, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(field, "missing \"" + key + "\"");
    return *it;
}

inline std::string string_at(const json& j, const std::string& field)
{
    if (!j.is_string())
        fail(field, "expected a string");
    return j.get<std::string>();
}

inline long long integer_at(const json& j, const std::string& field)
{
    if (!j.is_number_integer())
        fail(field, "expected an integer");
    return j.get<long long>();
}

inline SimplexWord face_ref(const Presentation& K, const json& j, const std::string& field)
{
    const auto base = string_at(member(j, "base", field), field + ".base");
    const auto found = K.find(base);
    if (!found)
        fail(field + ".base", "unknown id '" + base + "'");
    std::vector<int> degens;
    if (auto it = j.find("degens"); it != j.end()) {
        if (!it->is_array())
            fail(field + ".degens", "expected an array");
        for (std::size_t t = 0; t < it->size(); ++t)
            degens.push_back(static_cast<int>(integer_at((*it)[t], field + ".degens[" + std::to_string(t) + "]")));
    }
    try {
        return SimplexWord(*found, std::move(degens));
    } catch (const MalformedWord& e) {
        fail(field + ".degens", e.what());
    }
}

inline json face_ref_json(const Presentation& K, const SimplexWord& w)
{
    return json{{"base", K.cell_name(w.base())}, {"degens", w.degeneracies()}};
}

} // namespace detail

/// Parse and validate a complex document.
inline ComplexFile complex_from_json(const json& j)
{
    using namespace detail;
    ComplexFile out;
    const std::string name = j.contains("name") ? string_at(j["name"], "name") : std::string("complex");
    PresentationBuilder b(name);
    const json& cells = member(j, "cells", "document");
    if (!cells.is_object())
        fail("cells", "expected an object keyed by dimension");
    std::map<int, const json*> by_dim;
    for (auto it = cells.begin(); it != cells.end(); ++it) {
        int d = -1;
        try {
            std::size_t used = 0;
            d = std::stoi(it.key(), &used);
            if (used != it.key().size())
                d = -1;
        } catch (const std::exception&) {
        }
        if (d < 0)
            fail("cells", "dimension key '" + it.key() + "' is not a non-negative integer");
        if (!it.value().is_array())
            fail("cells." + it.key(), "expected an array");
        by_dim[d] = &it.value();
    }
    for (const auto& [d, list] : by_dim) {
        const std::string dfield = "cells." + std::to_string(d);
        for (std::size_t i = 0; i < list->size(); ++i) {
            const std::string field = dfield + "[" + std::to_string(i) + "]";
            const json& entry = (*list)[i];
            try {
                if (d == 0) {
                    b.add_vertex(entry.is_object() ? string_at(member(entry, "id", field), field + ".id")
                                                   : string_at(entry, field));
                    continue;
                }
                const auto id = string_at(member(entry, "id", field), field + ".id");
                const json& faces = member(entry, "faces", field);
                if (!faces.is_array() || static_cast<int>(faces.size()) != d + 1)
                    fail(field + ".faces", "expected " + std::to_string(d + 1) + " faces");
                std::vector<SimplexWord> words;
                for (std::size_t k = 0; k < faces.size(); ++k)
                    words.push_back(face_ref(b.current(), faces[k], field + ".faces[" + std::to_string(k) + "]"));
                b.add_simplex(id, std::move(words));
            } catch (const InvalidParameters& e) {
                fail(field, e.what());
            }
        }
    }
    if (j.contains("truncated_at"))
        b.set_truncated_at(static_cast<int>(integer_at(j["truncated_at"], "truncated_at")));
    out.complex = b.build();
    if (j.contains("basepoint")) {
        const auto bp = string_at(j["basepoint"], "basepoint");
        const auto c = out.complex.find(bp);
        if (!c || c->dim != 0)
            fail("basepoint", "'" + bp + "' is not a vertex");
        out.basepoint = bp;
    }
    return out;
}

/// Canonical document: dimensions in order, cells in declaration order.
inline json complex_to_json(const Presentation& K, const std::optional<std::string>& basepoint = std::nullopt)
{
    json cells = json::object();
    for (int d = 0; d <= K.dimension(); ++d) {
        json list = json::array();
        for (int i = 0; i < K.cell_count(d); ++i) {
            const CellRef c{d, i};
            if (d == 0) {
                list.push_back(K.cell_name(c));
                continue;
            }
            json faces = json::array();
            for (const auto& f : K.cell(c).faces)
                faces.push_back(detail::face_ref_json(K, f));
            list.push_back(json{{"id", K.cell_name(c)}, {"faces", std::move(faces)}});
        }
        cells[std::to_string(d)] = std::move(list);
    }
    json out{{"name", K.name()}, {"cells", std::move(cells)}};
    if (basepoint)
        out["basepoint"] = *basepoint;
    if (K.truncated_at())
        out["truncated_at"] = *K.truncated_at();
    return out;
}

inline ComplexFile read_complex(const std::filesystem::path& path)
{
    try {
        return complex_from_json(read_json(path));
    } catch (const ParseError& e) {
        const std::string what = e.what();
        if (what.rfind(path.string(), 0) == 0)
            throw;
        throw ParseError(path.string() + ": " + what);
    }
}

// ---------------------------------------------------------------------------
// groups

using AnyGroup = std::variant<FiniteGroup, PresentedGroup>;

/// Short names: "zN", "s3", "AxB" (finite); "Z^m", "heisenberg" (presented).
inline AnyGroup group_from_name(const std::string& text)
{
    if (text == "heisenberg" || text == "U3(Z)")
        return PresentedGroup::heisenberg();
    if (text.rfind("Z^", 0) == 0)
        return PresentedGroup::free_abelian(std::stoi(text.substr(2)));
    std::function<FiniteGroup(const std::string&)> finite = [&](const std::string& s) -> FiniteGroup {
        if (auto x = s.find('x'); x != std::string::npos)
            return FiniteGroup::direct_product(finite(s.substr(0, x)), finite(s.substr(x + 1)));
        std::string t = s;
        for (auto& ch : t)
            ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (t == "s3")
            return FiniteGroup::symmetric3();
        if (t.size() >= 2 && t[0] == 'z') {
            const auto n = t.substr(t[1] == '/' ? 2 : 1);
            if (!n.empty() && std::all_of(n.begin(), n.end(), ::isdigit))
                return FiniteGroup::cyclic(std::stoi(n));
        }
        throw ParseError("unknown group '" + s + "'");
    };
    return finite(text);
}

/// {"kind": "finite", "name": "z2"} or {"kind": "finite", "elements": [...],
/// "table": [[...]]}; {"kind": "presented", "name": "Z^2" | "heisenberg"}.
inline AnyGroup group_from_json(const json& j, const std::string& field = "group")
{
    using namespace detail;
    const auto kind = string_at(member(j, "kind", field), field + ".kind");
    if (kind == "finite") {
        if (j.contains("table")) {
            const auto names = member(j, "elements", field).get<std::vector<std::string>>();
            const auto table = j["table"].get<std::vector<std::vector<int>>>();
            try {
                return FiniteGroup(names, table, j.value("name", std::string{}));
            } catch (const ValidationError& e) {
                fail(field + ".table", e.what());
            }
        }
        auto g = group_from_name(string_at(member(j, "name", field), field + ".name"));
        if (!std::holds_alternative<FiniteGroup>(g))
            fail(field + ".name", "not a finite group");
        return g;
    }
    if (kind == "presented") {
        auto g = group_from_name(string_at(member(j, "name", field), field + ".name"));
        if (!std::holds_alternative<PresentedGroup>(g))
            fail(field + ".name", "not a presented group");
        return g;
    }
    fail(field + ".kind", "expected \"finite\" or \"presented\"");
}

// ---------------------------------------------------------------------------
// twistings

using AnyTwisting = std::variant<TwistingFunction<FiniteGroup>, TwistingFunction<PresentedGroup>>;

/// Labels map edge ids to words in the group; unlisted edges carry the identity.
inline AnyTwisting twisting_from_json(const json& j, const PresentationPtr& base)
{
    using namespace detail;
    const auto group = group_from_json(member(j, "group", "document"));
    const json& labels = j.contains("labels") ? j["labels"] : json::object();
    if (!labels.is_object())
        fail("labels", "expected an object keyed by edge id");
    for (auto it = labels.begin(); it != labels.end(); ++it) {
        const auto c = base->find(it.key());
        if (!c || c->dim != 1)
            fail("labels", "'" + it.key() + "' is not an edge of " + base->name());
    }
    return std::visit(
        [&](const auto& G) -> AnyTwisting {
            using G_t = std::decay_t<decltype(G)>;
            std::vector<typename G_t::element_type> out(base->cell_count(1), G.identity());
            for (int e = 0; e < base->cell_count(1); ++e) {
                const auto& id = base->cell_name(CellRef{1, e});
                if (labels.contains(id))
                    out[e] = G.evaluate(string_at(labels[id], "labels." + id));
            }
            return TwistingFunction<G_t>(base, G, std::move(out));
        },
        group);
}

// ---------------------------------------------------------------------------
// cocycles

using AnyCocycle = std::variant<GroupCochain, PresentedHomomorphism>;

inline Coefficients coefficients_from_name(const std::string& text)
{
    std::string t = text;
    for (auto& ch : t)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (t == "z")
        return Coefficients::integers();
    if (t.size() >= 2 && t[0] == 'z') {
        const auto n = t.substr(t[1] == '/' ? 2 : 1);
        if (!n.empty() && std::all_of(n.begin(), n.end(), ::isdigit))
            return Coefficients::mod(std::stoi(n));
    }
    throw ParseError("unknown coefficients '" + text + "' (expected z or zN)");
}

/// Finite groups: {"degree": k, "coeff": "z2", "values": [{"args": [...],
/// "value": v}]}, unlisted tuples zero. Presented groups (degree 1 only):
/// {"degree": 1, "coeff": ..., "generators": [v, ...]}.
inline AnyCocycle cocycle_from_json(const json& j, const AnyGroup& group)
{
    using namespace detail;
    const int degree = static_cast<int>(integer_at(member(j, "degree", "document"), "degree"));
    const auto coeff = coefficients_from_name(string_at(member(j, "coeff", "document"), "coeff"));
    if (const auto* G = std::get_if<PresentedGroup>(&group)) {
        if (degree != 1)
            throw Unsupported("only degree-1 classes are available for presented groups");
        std::vector<Integer> values;
        for (const auto& v : member(j, "generators", "document"))
            values.emplace_back(v.get<long long>());
        return PresentedHomomorphism(*G, std::move(values), coeff);
    }
    const auto& G = std::get<FiniteGroup>(group);
    auto c = GroupCochain::zero(G, degree, coeff);
    std::vector<Integer> values = c.values();
    const json& list = j.contains("values") ? j["values"] : json::array();
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string field = "values[" + std::to_string(i) + "]";
        const auto args = member(list[i], "args", field).get<std::vector<std::string>>();
        if (static_cast<int>(args.size()) != degree)
            fail(field + ".args", "expected " + std::to_string(degree) + " group elements");
        std::size_t idx = 0;
        for (const auto& a : args)
            idx = idx * G.order() + static_cast<std::size_t>(G.element(a));
        values[idx] = integer_at(member(list[i], "value", field), field + ".value");
    }
    return GroupCochain(G, degree, coeff, std::move(values));
}

// ---------------------------------------------------------------------------
// maps

/// {"source": complex or path, "target": complex or path, "images": {id: FaceRef}}.
/// Paths are resolved against `dir`.
inline SimplicialMap map_from_json(const json& j, const std::filesystem::path& dir = {})
{
    using namespace detail;
    auto load = [&](const char* key) {
        const json& v = member(j, key, "document");
        if (v.is_string())
            return std::make_shared<const Presentation>(read_complex(dir / v.get<std::string>()).complex);
        return std::make_shared<const Presentation>(complex_from_json(v).complex);
    };
    auto S = load("source");
    auto T = load("target");
    const json& images = member(j, "images", "document");
    return SimplicialMap::from_lookup(S, T, [&](CellRef c) {
        const auto& id = S->cell_name(c);
        if (!images.contains(id))
            fail("images", "no image for '" + id + "'");
        const json& img = images[id];
        if (img.is_string())
            return face_ref(*T, json{{"base", img}}, "images." + id);
        return face_ref(*T, img, "images." + id);
    });
}

inline json map_to_json(const SimplicialMap& f)
{
    json images = json::object();
    const auto& S = *f.source();
    for (int d = 0; d <= S.dimension(); ++d)
        for (int i = 0; i < S.cell_count(d); ++i)
            images[S.cell_name(CellRef{d, i})] = detail::face_ref_json(*f.target(), f.image(CellRef{d, i}));
    return json{{"source", complex_to_json(S)}, {"target", complex_to_json(*f.target())}, {"images", images}};
}

} // namespace kanforge::io
