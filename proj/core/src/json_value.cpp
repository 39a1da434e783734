#include "linkgenus/json_value.hpp"

#include <json.hpp>

#include "linkgenus/errors.hpp"

namespace linkgenus {

const char* json_kind_name(JsonValue::Kind k) {
    switch (k) {
    case JsonValue::Kind::Null: return "null";
    case JsonValue::Kind::Bool: return "boolean";
    case JsonValue::Kind::Int: return "integer";
    case JsonValue::Kind::String: return "string";
    case JsonValue::Kind::Array: return "array";
    case JsonValue::Kind::Object: return "object";
    }
    return "unknown";
}

namespace {

[[noreturn]] void wrong_kind(JsonValue::Kind want, JsonValue::Kind got) {
    throw ValidationError(std::string("expected ") + json_kind_name(want) + ", got " +
                          json_kind_name(got));
}

} // namespace

bool JsonValue::as_bool() const {
    if (kind_ != Kind::Bool) wrong_kind(Kind::Bool, kind_);
    return bool_;
}

const Int& JsonValue::as_int() const {
    if (kind_ != Kind::Int) wrong_kind(Kind::Int, kind_);
    return int_;
}

const std::string& JsonValue::as_string() const {
    if (kind_ != Kind::String) wrong_kind(Kind::String, kind_);
    return str_;
}

const std::vector<JsonValue>& JsonValue::items() const {
    if (kind_ != Kind::Array) wrong_kind(Kind::Array, kind_);
    return arr_;
}

const std::vector<JsonValue::Member>& JsonValue::members() const {
    if (kind_ != Kind::Object) wrong_kind(Kind::Object, kind_);
    return obj_;
}

void JsonValue::push_back(JsonValue v) {
    internal_check(kind_ == Kind::Array, "push_back on a non-array");
    arr_.push_back(std::move(v));
}

void JsonValue::set(const std::string& key, JsonValue v) {
    internal_check(kind_ == Kind::Object, "set on a non-object");
    for (auto& [k, old] : obj_)
        if (k == key) {
            old = std::move(v);
            return;
        }
    obj_.emplace_back(key, std::move(v));
}

const JsonValue* JsonValue::find(const std::string& key) const {
    if (kind_ != Kind::Object) wrong_kind(Kind::Object, kind_);
    for (const auto& [k, v] : obj_)
        if (k == key) return &v;
    return nullptr;
}

const JsonValue& JsonValue::at(const std::string& key) const {
    const JsonValue* v = find(key);
    if (!v) throw ValidationError("missing field \"" + key + "\"");
    return *v;
}

bool JsonValue::operator==(const JsonValue& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
    case Kind::Null: return true;
    case Kind::Bool: return bool_ == o.bool_;
    case Kind::Int: return int_ == o.int_;
    case Kind::String: return str_ == o.str_;
    case Kind::Array: return arr_ == o.arr_;
    case Kind::Object: return obj_ == o.obj_;
    }
    return false;
}

namespace {

void escape_into(const std::string& s, std::string& out) {
    static const char* hex = "0123456789abcdef";
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                out += "\\u00";
                out += hex[(c >> 4) & 0xf];
                out += hex[c & 0xf];
            } else {
                out += c;
            }
        }
    }
    out += '"';
}

void newline_pad(std::string& out, int indent, int depth) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

} // namespace

void JsonValue::dump_to(std::string& out, int indent, int depth) const {
    switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Bool: out += bool_ ? "true" : "false"; break;
    case Kind::Int: out += to_string(int_); break;
    case Kind::String: escape_into(str_, out); break;
    case Kind::Array:
        if (arr_.empty()) {
            out += "[]";
            break;
        }
        out += '[';
        for (std::size_t i = 0; i < arr_.size(); ++i) {
            if (i) out += ',';
            newline_pad(out, indent, depth + 1);
            arr_[i].dump_to(out, indent, depth + 1);
        }
        newline_pad(out, indent, depth);
        out += ']';
        break;
    case Kind::Object:
        if (obj_.empty()) {
            out += "{}";
            break;
        }
        out += '{';
        for (std::size_t i = 0; i < obj_.size(); ++i) {
            if (i) out += ',';
            newline_pad(out, indent, depth + 1);
            escape_into(obj_[i].first, out);
            out += indent < 0 ? ":" : ": ";
            obj_[i].second.dump_to(out, indent, depth + 1);
        }
        newline_pad(out, indent, depth);
        out += '}';
        break;
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    dump_to(out, indent, 0);
    return out;
}

// SAX builder on top of the vendored parser. Oversized integer literals
// arrive through number_float with the raw token, which is re-read exactly
// when it is plain digits and rejected otherwise.
struct JsonSaxBuilder {
    using json = nlohmann::json;

    JsonValue root;
    struct Open {
        JsonValue value;
        std::string key;
    };
    std::vector<Open> open;
    std::string pending_key;
    std::string error;

    bool place(JsonValue v, const std::string& key) {
        if (open.empty()) {
            root = std::move(v);
            return true;
        }
        JsonValue& top = open.back().value;
        if (top.kind() == JsonValue::Kind::Array) {
            top.push_back(std::move(v));
            return true;
        }
        if (top.find(key)) {
            error = "duplicate key \"" + key + "\"";
            return false;
        }
        top.set(key, std::move(v));
        return true;
    }
    bool scalar(JsonValue v) { return place(std::move(v), pending_key); }

    bool null() { return scalar(JsonValue()); }
    bool boolean(bool v) { return scalar(JsonValue(v)); }
    bool number_integer(json::number_integer_t v) { return scalar(JsonValue(Int(v))); }
    bool number_unsigned(json::number_unsigned_t v) { return scalar(JsonValue(Int(v))); }
    bool number_float(json::number_float_t, const json::string_t& raw) {
        std::size_t digits = raw.size() && raw[0] == '-' ? raw.size() - 1 : raw.size();
        if (digits == 0 || raw.find_first_not_of("0123456789", raw[0] == '-' ? 1 : 0) !=
                               std::string::npos) {
            error = "non-integer number " + raw;
            return false;
        }
        return scalar(JsonValue(Int(raw)));
    }
    bool string(json::string_t& v) { return scalar(JsonValue(v)); }
    bool binary(json::binary_t&) {
        error = "binary values are not accepted";
        return false;
    }
    bool start_object(std::size_t) {
        open.push_back({JsonValue::object(), pending_key});
        return true;
    }
    bool key(json::string_t& k) {
        pending_key = k;
        return true;
    }
    bool end_object() {
        Open done = std::move(open.back());
        open.pop_back();
        return place(std::move(done.value), done.key);
    }
    bool start_array(std::size_t) {
        open.push_back({JsonValue::array(), pending_key});
        return true;
    }
    bool end_array() { return end_object(); }
    bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
        if (error.empty()) error = std::string(ex.what()) + " at byte " + std::to_string(position);
        return false;
    }
};

JsonValue JsonValue::parse(const std::string& text) {
    JsonSaxBuilder builder;
    if (!nlohmann::json::sax_parse(text, &builder)) {
        if (builder.error.empty()) builder.error = "malformed document";
        throw ValidationError("invalid JSON: " + builder.error);
    }
    return std::move(builder.root);
}

} // namespace linkgenus
