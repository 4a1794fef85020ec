#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace invasion1d {

/// Insertion-ordered JSON value for result emission.  Numbers are printed
/// with 17 significant digits so every float round-trips exactly, and the
/// output is byte-identical across runs of the same inputs.
class JsonValue {
public:
    JsonValue() : kind_(Kind::Null) {}
    JsonValue(bool b) : kind_(Kind::Bool), bool_(b) {}
    JsonValue(int v) : kind_(Kind::Int), int_(v) {}
    JsonValue(std::int64_t v) : kind_(Kind::Int), int_(v) {}
    JsonValue(double v) : kind_(Kind::Double), double_(v) {}
    JsonValue(const char* s) : kind_(Kind::String), string_(s) {}
    JsonValue(std::string s) : kind_(Kind::String), string_(std::move(s)) {}

    static JsonValue object();
    static JsonValue array();

    JsonValue& set(std::string key, JsonValue value);  // object field, keeps order
    JsonValue& push(JsonValue value);                  // array element

    std::string dump() const;

    /// %.17g formatting used throughout the CLI outputs.
    static std::string format_double(double v);

private:
    enum class Kind { Null, Bool, Int, Double, String, Array, Object };
    Kind kind_;
    bool bool_ = false;
    std::int64_t int_ = 0;
    double double_ = 0.0;
    std::string string_;
    std::vector<JsonValue> items_;
    std::vector<std::pair<std::string, JsonValue>> fields_;

    void write(std::string& out) const;
};

}  // namespace invasion1d
