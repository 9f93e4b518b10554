#pragma once

#include <map>
#include <string>
#include <vector>

namespace sva {

/// Structured verification outcome: one line per checked identity, with the
/// residual recorded when nonzero, plus named extracted values (e.g. a
/// central charge). Machine-readable so the CLI can print residuals.
struct Report {
    struct Item {
        std::string label;
        bool pass = false;
        std::string detail; // residual or explanation when failing, may be set on pass too
    };

    std::string title;
    std::vector<Item> items;
    std::vector<std::pair<std::string, std::string>> values;

    bool pass() const {
        for (auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(const std::string& label, bool ok, const std::string& detail = "") {
        items.push_back({label, ok, detail});
    }
    void value(const std::string& key, const std::string& val) { values.emplace_back(key, val); }
    void merge(const Report& sub);

    std::string text() const;
    std::string json_str(int indent = 2) const;
};

} // namespace sva
