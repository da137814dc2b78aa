#include <adsvol/io.hpp>
#include <adsvol/samples.hpp>
#include <doctest.h>

#include <functional>

using namespace adsvol;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("polytope round trip") {
    const auto P = cylinder(2.0);
    const auto Q = parse_polytope(polytope_to_json(P));
    REQUIRE(Q.facets.size() == P.facets.size());
    for (size_t i = 0; i < P.facets.size(); ++i) CHECK(same_halfspace(P.facets[i], Q.facets[i], 0.0));
    CHECK(Q.upper.state == SheetExtent::State::Bounded);
    CHECK(Q.lower.state == SheetExtent::State::Empty);
    CHECK(Q.upper.box.hi == P.upper.box.hi);
}

TEST_CASE("word round trip") {
    const auto g = random_isometry(3, kAllClasses, 3, 4);
    const auto h = parse_word(word_to_json(g), 3);
    REQUIRE(h.moves.size() == g.moves.size());
    for (size_t i = 0; i < g.moves.size(); ++i) CHECK(std::string(type_name(g.moves[i])) == type_name(h.moves[i]));
}

TEST_CASE("polygon round trip") {
    const auto G = random_conic_polygon(2);
    const auto H = parse_polygon(polygon_to_json(G));
    REQUIRE(H.size() == G.size());
    for (int i = 0; i < G.size(); ++i) {
        CHECK(H.vertices[static_cast<size_t>(i)].p == G.vertices[static_cast<size_t>(i)].p);
        CHECK(H.sides[static_cast<size_t>(i)].kind == G.sides[static_cast<size_t>(i)].kind);
    }
}

TEST_CASE("malformed input is a parse error") {
    CHECK(kind_of([] { parse_polytope("{not json"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_polytope(R"({"facets": []})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_polytope(R"({"ambient_dim": 3, "facets": [{"a": 1, "b": [0, 0], "c": 1}]})"); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] {
              parse_polytope(
                  R"({"ambient_dim": 2, "facets": [{"a": 1, "b": [0, 0], "c": 1}], "bound_box": {"min": [0, 1], "max": [0, 0]}})");
          }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_word(R"([{"type": "rotation"}])", 3); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_word(R"([{"type": "translation", "w": [1, 0, 0]}])", 3); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_polygon(R"({"vertices": [[1, 0]], "sides": []})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { read_file("/nonexistent/adsvol.json"); }) == ErrorKind::Parse);
}
