#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace coverhom {

/// Result of one CLI command. The JSON and text renderings are produced from
/// the same fields, so the numbers in both are identical by construction.
/// Timings are kept out of the default rendering so byte-identical reruns
/// stay byte-identical.
struct Report {
    std::string command;
    nlohmann::json input_summary = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::pair<std::string, bool>> assertions;
    double elapsed_ms = 0.0;

    bool all_ok() const {
        for (const auto& [name, ok] : assertions)
            if (!ok) return false;
        return true;
    }

    nlohmann::json to_json(bool with_timing = false) const {
        nlohmann::json j{{"command", command}, {"input", input_summary}, {"results", results}};
        if (!assertions.empty()) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& [name, ok] : assertions) a.push_back({{"name", name}, {"ok", ok}});
            j["assertions"] = a;
        }
        if (with_timing) j["elapsed_ms"] = elapsed_ms;
        return j;
    }

    std::string to_text(bool with_timing = false) const {
        std::ostringstream os;
        os << "command: " << command << "\n";
        if (!input_summary.empty()) os << "input: " << input_summary.dump() << "\n";
        render(os, results, "");
        for (const auto& [name, ok] : assertions)
            os << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (with_timing) os << "elapsed_ms: " << elapsed_ms << "\n";
        return os.str();
    }

private:
    static void render(std::ostringstream& os, const nlohmann::json& j, const std::string& prefix) {
        if (j.is_object()) {
            for (const auto& [key, value] : j.items()) {
                const std::string name = prefix.empty() ? key : prefix + "." + key;
                if (value.is_object()) {
                    render(os, value, name);
                } else {
                    os << name << ": " << value.dump() << "\n";
                }
            }
        } else {
            os << prefix << ": " << j.dump() << "\n";
        }
    }
};

} // namespace coverhom
