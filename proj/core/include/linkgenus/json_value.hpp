#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkgenus/integers.hpp"

namespace linkgenus {

// JSON document with exact integers: numbers are arbitrary-precision and
// anything with a fraction or exponent is rejected at parse time. Object
// members keep insertion order, and the serializer is deterministic, so
// equal documents dump to identical bytes.
class JsonValue {
  public:
    enum class Kind { Null, Bool, Int, String, Array, Object };
    using Member = std::pair<std::string, JsonValue>;

    JsonValue() = default;
    JsonValue(bool b) : kind_(Kind::Bool), bool_(b) {}
    JsonValue(Int v) : kind_(Kind::Int), int_(std::move(v)) {}
    JsonValue(int v) : kind_(Kind::Int), int_(v) {}
    JsonValue(std::string s) : kind_(Kind::String), str_(std::move(s)) {}
    JsonValue(const char* s) : kind_(Kind::String), str_(s) {}
    static JsonValue array() { return JsonValue(Kind::Array); }
    static JsonValue object() { return JsonValue(Kind::Object); }

    Kind kind() const { return kind_; }
    bool is(Kind k) const { return kind_ == k; }

    // Typed accessors; wrong-kind access is a ValidationError since it only
    // happens while reading user input.
    bool as_bool() const;
    const Int& as_int() const;
    const std::string& as_string() const;
    const std::vector<JsonValue>& items() const;
    const std::vector<Member>& members() const;

    void push_back(JsonValue v);
    // Appends, or overwrites an existing key in place.
    void set(const std::string& key, JsonValue v);
    const JsonValue* find(const std::string& key) const;
    const JsonValue& at(const std::string& key) const;

    bool operator==(const JsonValue& o) const;

    // indent < 0 gives the compact form, otherwise that many spaces per level.
    std::string dump(int indent = -1) const;
    static JsonValue parse(const std::string& text);

  private:
    explicit JsonValue(Kind k) : kind_(k) {}
    void dump_to(std::string& out, int indent, int depth) const;

    Kind kind_ = Kind::Null;
    bool bool_ = false;
    Int int_ = 0;
    std::string str_;
    std::vector<JsonValue> arr_;
    std::vector<Member> obj_;

    friend struct JsonSaxBuilder;
};

// Name of a kind for error messages ("integer", "object", ...).
const char* json_kind_name(JsonValue::Kind k);

} // namespace linkgenus
