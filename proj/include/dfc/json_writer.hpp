#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dfc {

/// Insertion-ordered JSON value with a deterministic serializer. Numbers are
/// printed with 17 significant digits so reports round-trip doubles exactly
/// and byte-compare across runs.
class JsonValue {
public:
    JsonValue() : data_(nullptr) {}
    JsonValue(std::nullptr_t) : data_(nullptr) {}
    JsonValue(bool b) : data_(b) {}
    JsonValue(int v) : data_(static_cast<std::int64_t>(v)) {}
    JsonValue(std::int64_t v) : data_(v) {}
    JsonValue(std::uint64_t v) : data_(static_cast<std::int64_t>(v)) {}
    JsonValue(double v);
    JsonValue(const char* s) : data_(std::string(s)) {}
    JsonValue(std::string s) : data_(std::move(s)) {}

    static JsonValue object() {
        JsonValue v;
        v.data_ = Object{};
        return v;
    }
    static JsonValue array() {
        JsonValue v;
        v.data_ = Array{};
        return v;
    }

    JsonValue& set(const std::string& key, JsonValue value);
    JsonValue& push(JsonValue value);

    bool is_object() const { return std::holds_alternative<Object>(data_); }
    bool is_array() const { return std::holds_alternative<Array>(data_); }

    std::string dump(int indent = 0) const;

private:
    using Array = std::vector<JsonValue>;
    using Object = std::vector<std::pair<std::string, JsonValue>>;

    void write(std::string& out, int indent, int depth) const;

    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> data_;
};

} // namespace dfc
