#include "adsvol/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace adsvol {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

double num(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) fail(std::string("missing number \"") + key + "\"");
    return j[key].get<double>();
}

std::vector<double> nums(const json& j, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& x : j) {
        if (!x.is_number()) fail(what + " must be an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

Box parse_box(const json& j, int d, const char* name) {
    if (!j.is_object() || !j.contains("min") || !j.contains("max")) fail(std::string(name) + " needs min and max");
    Box b{nums(j["min"], name), nums(j["max"], name)};
    if (b.dim() != d || static_cast<int>(b.hi.size()) != d) fail(std::string(name) + " has the wrong dimension");
    for (int k = 0; k < d; ++k)
        if (b.lo[static_cast<size_t>(k)] > b.hi[static_cast<size_t>(k)]) fail(std::string(name) + " has min > max");
    return b;
}

json box_json(const Box& b) { return {{"min", b.lo}, {"max", b.hi}}; }

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GoodPolytope parse_polytope(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) fail("polytope must be a JSON object");
    if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer()) fail("missing integer ambient_dim");
    GoodPolytope P;
    P.ambient_dim = j["ambient_dim"].get<int>();
    if (P.ambient_dim < 2) fail("ambient_dim must be at least 2");
    if (!j.contains("facets") || !j["facets"].is_array()) fail("missing facets array");
    for (const auto& f : j["facets"]) {
        if (!f.is_object() || !f.contains("b")) fail("facet needs a, b, c");
        const auto b = nums(f["b"], "facet b");
        if (static_cast<int>(b.size()) != P.ambient_dim) fail("facet b has the wrong dimension");
        P.facets.push_back({num(f, "a"), MVector(b, P.sig()), num(f, "c")});
    }
    if (j.contains("bound_box")) P.upper = SheetExtent::bounded(parse_box(j["bound_box"], P.ambient_dim, "bound_box"));
    if (j.contains("lower_box")) {
        const auto& lb = j["lower_box"];
        if (lb.is_string() && lb.get<std::string>() == "empty") P.lower = SheetExtent::empty();
        else P.lower = SheetExtent::bounded(parse_box(lb, P.ambient_dim, "lower_box"));
    }
    return P;
}

std::string polytope_to_json(const GoodPolytope& P) {
    json j;
    j["ambient_dim"] = P.ambient_dim;
    j["facets"] = json::array();
    for (const auto& f : P.facets) j["facets"].push_back({{"a", f.a}, {"b", f.b.coords}, {"c", f.c}});
    if (P.upper.state == SheetExtent::State::Bounded) j["bound_box"] = box_json(P.upper.box);
    if (P.lower.state == SheetExtent::State::Bounded) j["lower_box"] = box_json(P.lower.box);
    if (P.lower.state == SheetExtent::State::Empty) j["lower_box"] = "empty";
    return j.dump(2);
}

IsometryWord parse_word(const std::string& text, int d) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("moves")) j = j["moves"];
    if (!j.is_array()) fail("isometry word must be a list of moves");
    IsometryWord w;
    for (const auto& m : j) {
        if (!m.is_object() || !m.contains("type") || !m["type"].is_string()) fail("move needs a type");
        const auto type = m["type"].get<std::string>();
        if (type == "inversion_j") {
            w.moves.push_back(InversionJ{});
        } else if (type == "inversion_jminus") {
            w.moves.push_back(InversionJminus{});
        } else if (type == "similarity") {
            w.moves.push_back(Similarity{num(m, "lambda")});
        } else if (type == "translation") {
            if (!m.contains("w")) fail("translation needs w");
            const auto v = nums(m["w"], "translation w");
            if (static_cast<int>(v.size()) != d) fail("translation w has the wrong dimension");
            w.moves.push_back(Translation{MVector(v, lorentz(d - 1))});
        } else if (type == "linear") {
            if (!m.contains("matrix") || !m["matrix"].is_array()) fail("linear move needs matrix");
            LinearFix0 L;
            L.n = static_cast<int>(m["matrix"].size());
            for (const auto& row : m["matrix"]) {
                const auto r = nums(row, "matrix row");
                if (static_cast<int>(r.size()) != L.n) fail("linear matrix must be square");
                L.m.insert(L.m.end(), r.begin(), r.end());
            }
            w.moves.push_back(L);
        } else {
            fail("unknown move type " + type);
        }
        try {
            check_primitive(w.moves.back(), d);
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    return w;
}

std::string word_to_json(const IsometryWord& w) {
    json j = json::array();
    for (const auto& m : w.moves) {
        json o{{"type", type_name(m)}};
        if (const auto* L = std::get_if<LinearFix0>(&m)) {
            json rows = json::array();
            for (int i = 0; i < L->n; ++i)
                rows.push_back(std::vector<double>(L->m.begin() + i * L->n, L->m.begin() + (i + 1) * L->n));
            o["matrix"] = rows;
        } else if (const auto* T = std::get_if<Translation>(&m)) {
            o["w"] = T->w.coords;
        } else if (const auto* S = std::get_if<Similarity>(&m)) {
            o["lambda"] = S->lambda;
        }
        j.push_back(o);
    }
    return j.dump(2);
}

BoundaryPolygon parse_polygon(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("sides")) fail("polygon needs vertices and sides");
    BoundaryPolygon G;
    for (const auto& v : j["vertices"]) {
        const auto x = nums(v, "vertex");
        if (x.size() != 2) fail("vertex needs two coordinates");
        G.vertices.push_back({x[0], x[1]});
    }
    if (!j["sides"].is_array()) fail("sides must be an array");
    for (const auto& s : j["sides"]) {
        if (!s.is_object() || !s.contains("type")) fail("side needs a type");
        const auto type = s["type"].get<std::string>();
        PolygonSide side;
        if (type == "segment") {
            side.kind = PolygonSide::Kind::Segment;
        } else if (type == "conic") {
            side.kind = PolygonSide::Kind::Conic;
            const auto b = nums(s.value("b", json()), "conic b");
            if (b.size() != 2) fail("conic b needs two entries");
            side.h = {num(s, "a"), MVector(b, lorentz(1)), num(s, "c")};
        } else {
            fail("unknown side type " + type);
        }
        G.sides.push_back(side);
    }
    if (G.sides.size() != G.vertices.size()) fail("polygon needs one side per vertex");
    return G;
}

std::string polygon_to_json(const BoundaryPolygon& G) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : G.vertices) j["vertices"].push_back({v.p, v.q});
    j["sides"] = json::array();
    for (const auto& s : G.sides) {
        if (s.kind == PolygonSide::Kind::Segment) j["sides"].push_back({{"type", "segment"}});
        else j["sides"].push_back({{"type", "conic"}, {"a", s.h.a}, {"b", s.h.b.coords}, {"c", s.h.c}});
    }
    return j.dump(2);
}

}  // namespace adsvol
