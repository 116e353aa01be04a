#pragma once

// Run reports for the command-line front end: a text block for people and a
// JSON document for scripts. JSON field names are part of the interface:
//   command, status ("pass" | "fail"), parameters {name: value},
//   checks [{name, passed, payload}].
// Wall-clock duration appears only in the text block.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace dualmds {

struct Check {
    std::string name;
    bool passed;
    nlohmann::ordered_json payload;
};

class RunReport {
public:
    explicit RunReport(std::string command) : command_(std::move(command)) {}

    void parameter(std::string name, nlohmann::ordered_json value);
    Check& check(std::string name, bool passed, nlohmann::ordered_json payload = nlohmann::ordered_json::object());
    void note(std::string text) { notes_.push_back(std::move(text)); }
    void set_duration(double seconds) { duration_seconds_ = seconds; }

    const std::string& command() const { return command_; }
    const std::vector<Check>& checks() const { return checks_; }
    bool passed() const;

    std::string to_text() const;
    nlohmann::ordered_json to_json() const;

private:
    std::string command_;
    std::vector<std::pair<std::string, nlohmann::ordered_json>> parameters_;
    std::vector<Check> checks_;
    std::vector<std::string> notes_;
    double duration_seconds_ = 0.0;
};

}  // namespace dualmds
