#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "linkgenus/document.hpp"
#include "linkgenus/errors.hpp"

using namespace linkgenus;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/linkgenus_io_") + name + ".json";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    return path;
}

const char* full_doc = R"({
  "window": {"knots": ["K2", "K1"], "lk": [[0, 3], [3, 0]]},
  "cover": {"n": 4, "branch": {"K2": 7, "K1": 1}},
  "cycles": [[{"knot": "K2", "coeff": 2}], []]
})";

} // namespace

TEST_CASE("json values keep exact integers") {
    JsonValue v = JsonValue::parse("{\"a\": 123456789012345678901234567890, \"b\": [1, -2]}");
    CHECK(v.at("a").as_int() == Int("123456789012345678901234567890"));
    CHECK(v.at("b").items()[1].as_int() == -2);
    CHECK(v.dump() == "{\"a\":123456789012345678901234567890,\"b\":[1,-2]}");

    CHECK_THROWS_AS(JsonValue::parse("{\"x\": 1.5}"), ValidationError);
    CHECK_THROWS_AS(JsonValue::parse("{\"x\": 1e3}"), ValidationError);
    CHECK_THROWS_AS(JsonValue::parse("{\"x\": 1.0}"), ValidationError);
    CHECK_NOTHROW(JsonValue::parse("{\"x\": -0}"));
}

TEST_CASE("json parse errors carry context") {
    CHECK_THROWS_AS(JsonValue::parse("{\"a\": 1,}"), ValidationError);
    CHECK_THROWS_AS(JsonValue::parse(""), ValidationError);
    CHECK_THROWS_AS(JsonValue::parse("[1, 2"), ValidationError);

    // Duplicate keys silently dropping data would corrupt linking matrices.
    bool caught = false;
    try {
        JsonValue::parse("{\"a\": 1, \"a\": 2}");
    } catch (const ValidationError& e) {
        caught = true;
        CHECK(std::string(e.what()).find("\"a\"") != std::string::npos);
    }
    CHECK(caught);
}

TEST_CASE("json accessors name the expected kind") {
    JsonValue v = JsonValue::parse("{\"s\": \"hi\", \"n\": null, \"t\": true}");
    CHECK(v.at("s").as_string() == "hi");
    CHECK(v.at("t").as_bool());
    CHECK(v.at("n").is(JsonValue::Kind::Null));
    CHECK(v.find("missing") == nullptr);
    CHECK_THROWS_AS(v.at("missing"), ValidationError);

    bool caught = false;
    try {
        v.at("s").as_int();
    } catch (const ValidationError& e) {
        caught = true;
        CHECK(std::string(e.what()).find("integer") != std::string::npos);
    }
    CHECK(caught);
}

TEST_CASE("json dump is deterministic and reparses to the same value") {
    JsonValue obj = JsonValue::object();
    obj.set("name", "a\"b\\c\n\t");
    obj.set("big", Int("-98765432109876543210"));
    JsonValue arr = JsonValue::array();
    arr.push_back(JsonValue());
    arr.push_back(true);
    arr.push_back(std::string("\x01 ctrl"));
    obj.set("mix", std::move(arr));
    obj.set("name", "replaced"); // set overwrites in place, order kept

    std::string flat = obj.dump();
    CHECK(JsonValue::parse(flat) == obj);
    CHECK(JsonValue::parse(obj.dump(2)) == obj);
    CHECK(obj.dump() == JsonValue::parse(flat).dump());

    JsonValue small = JsonValue::object();
    small.set("a", 1);
    CHECK(small.dump(2) == "{\n  \"a\": 1\n}");
}

TEST_CASE("input documents parse and canonicalize") {
    InputDocument doc = parse_document(JsonValue::parse(full_doc));
    CHECK(doc.window.knots() == (std::vector<std::string>{"K2", "K1"}));
    CHECK(doc.window.lk("K1", "K2") == 3);
    REQUIRE(doc.has_cover);
    // Branch entries come back in window order with reduced characters.
    REQUIRE(doc.cover.branch.size() == 2);
    CHECK(doc.cover.branch[0].first == "K2");
    CHECK(doc.cover.branch[0].second == 3);
    CHECK(doc.cover.branch[1].first == "K1");
    CHECK(doc.cover.branch[1].second == 1);
    REQUIRE(doc.cycles.size() == 2);
    REQUIRE(doc.cycles[0].terms.size() == 1);
    CHECK(doc.cycles[0].terms[0].component == 0); // defaulted
    CHECK(doc.cycles[0].terms[0].coeff == 2);
    CHECK(doc.cycles[1].terms.empty());

    InputDocument bare = parse_document(
        JsonValue::parse(R"({"window": {"knots": [], "lk": []}})"));
    CHECK(!bare.has_cover);
    CHECK(bare.cycles.empty());
    CHECK(bare.window.size() == 0);
}

TEST_CASE("input documents reject malformed content") {
    auto parse = [](const char* text) { return parse_document(JsonValue::parse(text)); };

    CHECK_THROWS_AS(parse(R"({"wndow": {}})"), ValidationError);
    CHECK_THROWS_AS(parse(R"({"window": {"knots": ["K1"], "lk": [[0]], "extra": 1}})"),
                    ValidationError);
    CHECK_THROWS_AS(parse(R"({"window": {"knots": ["K1"], "lk": []}})"), ValidationError);
    CHECK_THROWS_AS(parse(R"({"window": {"knots": ["K1"], "lk": [[0, 1]]}})"), ValidationError);
    CHECK_THROWS_AS(parse(R"({"window": {"knots": ["K1", "K1"], "lk": [[0,0],[0,0]]}})"),
                    ValidationError);
    CHECK_THROWS_AS(parse(R"({"window": {"knots": [3], "lk": [[0]]}})"), ValidationError);

    const char* bad_cover = R"({
      "window": {"knots": ["K1"], "lk": [[0]]},
      "cover": {"n": 4, "branch": {"K1": 2}}
    })";
    CHECK_THROWS_AS(parse(bad_cover), ValidationError); // character not onto

    const char* stray_cycle = R"({
      "window": {"knots": ["K1"], "lk": [[0]]},
      "cycles": [[{"knot": "K9"}]]
    })";
    CHECK_THROWS_AS(parse(stray_cycle), ValidationError);

    const char* stray_field = R"({
      "window": {"knots": ["K1"], "lk": [[0]]},
      "cycles": [[{"knot": "K1", "weight": 2}]]
    })";
    CHECK_THROWS_AS(parse(stray_field), ValidationError);
}

TEST_CASE("side documents parse against the window") {
    LinkWindow w({"K1", "K2"}, IntMatrix{{0, 1}, {1, 0}});

    BaseIdele x = parse_base_idele(
        JsonValue::parse(R"({"support": {"K1": {"l": 1, "m": -2}, "K2": {"m": 0, "l": 0}}})"), w);
    CHECK(x.at("K1") == (TorusClass{1, -2}));
    CHECK(x.support.count("K2") == 0); // zero entries are dropped

    CHECK_THROWS_AS(
        parse_base_idele(JsonValue::parse(R"({"support": {"K9": {"l": 1, "m": 0}}})"), w),
        ValidationError);
    CHECK_THROWS_AS(
        parse_base_idele(JsonValue::parse(R"({"support": {"K1": {"l": 1, "mu": 0}}})"), w),
        ValidationError);

    CoverIdele ci = parse_cover_idele(
        JsonValue::parse(R"({"support": {"K2": [{"l": 0, "m": 1}, {"l": 2}]}})"), w);
    REQUIRE(ci.support.at("K2").size() == 2);
    CHECK(ci.support.at("K2")[1] == (TorusClass{2, 0}));

    Chain2 ch = parse_chain(JsonValue::parse(R"({"coeffs": {"K1": 2, "K2": 0}})"), w);
    CHECK(ch.at("K1") == 2);
    CHECK(ch.coeffs.size() == 1);
    CHECK_THROWS_AS(parse_chain(JsonValue::parse(R"({"coeffs": {"K9": 1}})"), w),
                    ValidationError);
}

TEST_CASE("serialization round-trips through the parsers") {
    InputDocument doc = parse_document(JsonValue::parse(full_doc));

    JsonValue wj = to_json(doc.window);
    CHECK(wj.dump() == R"({"knots":["K2","K1"],"lk":[[0,3],[3,0]]})");
    JsonValue rebuilt = JsonValue::object();
    rebuilt.set("window", wj);
    rebuilt.set("cover", to_json(doc.cover));
    rebuilt.set("cycles", [&] {
        JsonValue cs = JsonValue::array();
        for (const auto& z : doc.cycles) cs.push_back(to_json(z));
        return cs;
    }());
    InputDocument again = parse_document(rebuilt);
    CHECK(again.window == doc.window);
    CHECK(again.cover.n == doc.cover.n);
    CHECK(again.cover.branch == doc.cover.branch);
    CHECK(again.cycles.size() == doc.cycles.size());
    CHECK(again.cycles[0] == doc.cycles[0]);

    CHECK(to_json(TorusClass{3, -1}).dump() == R"({"l":3,"m":-1})");

    BaseIdele bi;
    bi.set("K1", TorusClass{0, 5});
    BaseIdele bi2 = parse_base_idele(to_json(bi), doc.window);
    CHECK(bi2 == bi);

    Chain2 c2;
    c2.coeffs["K2"] = -4;
    JsonValue chain_doc = JsonValue::object();
    chain_doc.set("coeffs", to_json(c2));
    CHECK(parse_chain(chain_doc, doc.window) == c2);

    CoverIdele up;
    up.support["K1"] = {TorusClass{1, 0}, TorusClass{0, -1}};
    CHECK(parse_cover_idele(to_json(up), doc.window) == up);

    CHECK(to_json(FinAbGroup::cyclic(6)).at("display").as_string() == "Z/6");
    CHECK(json_int_array({Int(1), Int(-2)}).dump() == "[1,-2]");
}

TEST_CASE("files load with path context in errors") {
    std::string good = write_temp("good", full_doc);
    InputDocument doc = load_document(good);
    CHECK(doc.window.size() == 2);
    std::remove(good.c_str());

    CHECK_THROWS_AS(load_json_file("/tmp/linkgenus_io_absent.json"), ValidationError);

    std::string broken = write_temp("broken", "{\"a\": 0.5}");
    bool caught = false;
    try {
        load_json_file(broken);
    } catch (const ValidationError& e) {
        caught = true;
        CHECK(std::string(e.what()).find("broken") != std::string::npos);
    }
    CHECK(caught);
    std::remove(broken.c_str());
}
