#pragma once

#include "cylhardy/format.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cylhardy {

// Minimal insertion-ordered JSON object emitter. Key order is the call
// order, floats print at full precision, nesting goes through put_object.
class JsonWriter {
public:
    void put(const std::string& key, double v) { fields_.emplace_back(key, fmt17(v)); }
    void put(const std::string& key, int v) { fields_.emplace_back(key, std::to_string(v)); }
    void put(const std::string& key, bool v) { fields_.emplace_back(key, v ? "true" : "false"); }
    void put(const std::string& key, const char* v) { put_string(key, v); }
    void put(const std::string& key, const std::string& v) { put_string(key, v); }
    void put_object(const std::string& key, const JsonWriter& v) {
        fields_.emplace_back(key, v.str());
    }

    std::string str() const {
        std::string out = "{";
        for (std::size_t k = 0; k < fields_.size(); ++k) {
            if (k) out += ',';
            out += quote(fields_[k].first);
            out += ':';
            out += fields_[k].second;
        }
        out += '}';
        return out;
    }

private:
    static std::string quote(const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        out += '"';
        return out;
    }
    void put_string(const std::string& key, const std::string& v) {
        fields_.emplace_back(key, quote(v));
    }

    std::vector<std::pair<std::string, std::string>> fields_;
};

} // namespace cylhardy
