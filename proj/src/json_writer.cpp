#include "dfc/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dfc {

JsonValue::JsonValue(double v) : data_(v) {
    if (!std::isfinite(v)) throw std::invalid_argument("JSON numbers must be finite");
}

JsonValue& JsonValue::set(const std::string& key, JsonValue value) {
    auto& obj = std::get<Object>(data_);
    for (auto& [k, v] : obj)
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    obj.emplace_back(key, std::move(value));
    return *this;
}

JsonValue& JsonValue::push(JsonValue value) {
    std::get<Array>(data_).push_back(std::move(value));
    return *this;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
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
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void newline_indent(std::string& out, int indent, int depth) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<size_t>(indent) * static_cast<size_t>(depth), ' ');
}

} // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
    if (std::holds_alternative<std::nullptr_t>(data_)) {
        out += "null";
    } else if (const bool* b = std::get_if<bool>(&data_)) {
        out += *b ? "true" : "false";
    } else if (const std::int64_t* i = std::get_if<std::int64_t>(&data_)) {
        out += std::to_string(*i);
    } else if (const double* d = std::get_if<double>(&data_)) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", *d);
        out += buf;
    } else if (const std::string* s = std::get_if<std::string>(&data_)) {
        write_escaped(out, *s);
    } else if (const Array* a = std::get_if<Array>(&data_)) {
        if (a->empty()) {
            out += "[]";
            return;
        }
        out += '[';
        for (size_t i = 0; i < a->size(); ++i) {
            if (i) out += ',';
            newline_indent(out, indent, depth + 1);
            (*a)[i].write(out, indent, depth + 1);
        }
        newline_indent(out, indent, depth);
        out += ']';
    } else {
        const Object& o = std::get<Object>(data_);
        if (o.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        for (size_t i = 0; i < o.size(); ++i) {
            if (i) out += ',';
            newline_indent(out, indent, depth + 1);
            write_escaped(out, o[i].first);
            out += indent > 0 ? ": " : ":";
            o[i].second.write(out, indent, depth + 1);
        }
        newline_indent(out, indent, depth);
        out += '}';
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    if (indent > 0) out += '\n';
    return out;
}

} // namespace dfc
