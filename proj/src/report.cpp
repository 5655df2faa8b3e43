#include "qsp/report.hpp"

#include <json.hpp>

namespace qsp {

bool Report::any_failed() const {
    for (const auto& c : checks)
        if (c.status == "fail") return true;
    return false;
}

void Report::append(std::vector<CheckRecord> more) {
    for (auto& c : more) checks.push_back(std::move(c));
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["family"] = family;
    nlohmann::ordered_json bj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : bindings) bj[k] = v.str();
    j["bindings"] = bj;
    j["seed"] = seed;
    nlohmann::ordered_json cj = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json r;
        r["name"] = c.name;
        r["paper_eq"] = c.paper_eq;
        r["status"] = c.status;
        r["witness"] = c.witness;
        cj.push_back(std::move(r));
    }
    j["checks"] = cj;
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::string s = command + "  [family " + family;
    for (const auto& [k, v] : bindings) s += ", " + k + " = " + v.str();
    s += ", seed " + std::to_string(seed) + "]\n";
    size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
        std::string status = c.status == "n/a" ? "note" : c.status;
        s += "  " + status + std::string(6 - status.size(), ' ') + c.name;
        if (!c.paper_eq.empty()) s += std::string(width + 2 - c.name.size(), ' ') + c.paper_eq;
        s += "\n";
        if (!c.witness.empty()) s += "         " + c.witness + "\n";
    }
    size_t failed = 0;
    for (const auto& c : checks)
        if (c.status == "fail") ++failed;
    s += failed == 0 ? "all checks passed\n" : std::to_string(failed) + " check(s) failed\n";
    return s;
}

}  // namespace qsp
