#include "sva/report.hpp"

#include <sstream>

#include <json.hpp>

namespace sva {

void Report::merge(const Report& sub) {
    for (auto& it : sub.items) items.push_back({sub.title + ": " + it.label, it.pass, it.detail});
    for (auto& [k, v] : sub.values) values.emplace_back(sub.title + ": " + k, v);
}

std::string Report::text() const {
    std::ostringstream os;
    os << title << (pass() ? "  [PASS]" : "  [FAIL]") << "\n";
    for (auto& it : items) {
        os << "  " << (it.pass ? "ok  " : "FAIL") << "  " << it.label;
        if (!it.detail.empty()) os << "   " << it.detail;
        os << "\n";
    }
    for (auto& [k, v] : values) os << "  " << k << " = " << v << "\n";
    return os.str();
}

std::string Report::json_str(int indent) const {
    nlohmann::json j;
    j["schema"] = "susyva-report/1";
    j["title"] = title;
    j["pass"] = pass();
    j["checks"] = nlohmann::json::array();
    for (auto& it : items) {
        nlohmann::json c;
        c["label"] = it.label;
        c["pass"] = it.pass;
        if (!it.detail.empty()) c["detail"] = it.detail;
        j["checks"].push_back(c);
    }
    j["values"] = nlohmann::json::object();
    for (auto& [k, v] : values) j["values"][k] = v;
    return j.dump(indent);
}

} // namespace sva
