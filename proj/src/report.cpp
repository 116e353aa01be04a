#include "dualmds/report.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace dualmds {

void RunReport::parameter(std::string name, nlohmann::ordered_json value) {
    parameters_.emplace_back(std::move(name), std::move(value));
}

Check& RunReport::check(std::string name, bool passed, nlohmann::ordered_json payload) {
    checks_.push_back({std::move(name), passed, std::move(payload)});
    return checks_.back();
}

bool RunReport::passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::string RunReport::to_text() const {
    std::string out = fmt::format("command: {}\n", command_);
    for (const auto& [name, value] : parameters_) out += fmt::format("  {} = {}\n", name, value.dump());
    for (const auto& c : checks_) {
        out += fmt::format("[{}] {}", c.passed ? "PASS" : "FAIL", c.name);
        if (!c.payload.empty()) out += fmt::format("  {}", c.payload.dump());
        out += '\n';
    }
    for (const auto& n : notes_) out += fmt::format("note: {}\n", n);
    out += fmt::format("status: {}  ({:.3f} s)\n", passed() ? "pass" : "fail", duration_seconds_);
    return out;
}

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["command"] = command_;
    doc["status"] = passed() ? "pass" : "fail";
    doc["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : parameters_) doc["parameters"][name] = value;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"payload", c.payload}});
    doc["notes"] = notes_;
    return doc;
}

}  // namespace dualmds
