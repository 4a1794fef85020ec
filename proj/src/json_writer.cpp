#include "invasion1d/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace invasion1d {

JsonValue JsonValue::object() {
    JsonValue v;
    v.kind_ = Kind::Object;
    return v;
}

JsonValue JsonValue::array() {
    JsonValue v;
    v.kind_ = Kind::Array;
    return v;
}

JsonValue& JsonValue::set(std::string key, JsonValue value) {
    if (kind_ != Kind::Object) throw std::logic_error("JsonValue::set on non-object");
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
}

JsonValue& JsonValue::push(JsonValue value) {
    if (kind_ != Kind::Array) throw std::logic_error("JsonValue::push on non-array");
    items_.push_back(std::move(value));
    return *this;
}

std::string JsonValue::format_double(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {
void write_escaped(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}
}  // namespace

void JsonValue::write(std::string& out) const {
    switch (kind_) {
        case Kind::Null: out += "null"; break;
        case Kind::Bool: out += bool_ ? "true" : "false"; break;
        case Kind::Int: out += std::to_string(int_); break;
        case Kind::Double: out += format_double(double_); break;
        case Kind::String: write_escaped(string_, out); break;
        case Kind::Array: {
            out += '[';
            bool first = true;
            for (const auto& v : items_) {
                if (!first) out += ',';
                first = false;
                v.write(out);
            }
            out += ']';
            break;
        }
        case Kind::Object: {
            out += '{';
            bool first = true;
            for (const auto& [k, v] : fields_) {
                if (!first) out += ',';
                first = false;
                write_escaped(k, out);
                out += ':';
                v.write(out);
            }
            out += '}';
            break;
        }
    }
}

std::string JsonValue::dump() const {
    std::string out;
    write(out);
    return out;
}

}  // namespace invasion1d
