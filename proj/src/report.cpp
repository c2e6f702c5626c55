#include "macd/report.hpp"

#include <fstream>
#include <stdexcept>

namespace macd {

const std::string& tool_version() {
    static const std::string v = "1.0.0";
    return v;
}

namespace {

nlohmann::json header(const std::string& task, std::uint64_t seed) {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["task"] = task;
    j["tool_version"] = tool_version();
    j["seed"] = seed;
    return j;
}

}  // namespace

nlohmann::json identity_report_json(const IdentityReport& rep) {
    auto j = header("verify " + rep.id, rep.seed);
    j["n"] = rep.n;
    j["sizes"] = rep.sizes;
    j["draws"] = nlohmann::json::array();
    for (const auto& r : rep.records) {
        nlohmann::json d;
        d["draw"] = r.draw;
        d["params"] = r.params;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["error_bound"] = r.error_bound;
        d["status"] = r.status;
        if (!r.message.empty()) d["message"] = r.message;
        j["draws"].push_back(d);
    }
    j["status"] = rep.passed() ? "PASS" : "FAIL";
    return j;
}

nlohmann::json orthogonality_report_json(const VerificationReport& rep, std::uint64_t seed) {
    auto j = header("verify " + rep.name, seed);
    j["n"] = rep.n;
    j["window"] = rep.window;
    j["checks"] = rep.checks;
    j["failures"] = rep.failures;
    j["redraws"] = rep.redraws;
    j["draws"] = nlohmann::json::array();
    for (int d = 0; d < rep.draws; ++d) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& x : rep.witnesses)
            if (x.draw == d)
                w.push_back({{"m", x.m}, {"l", x.l}, {"relation", x.relation}, {"value", to_string(x.value)}});
        j["draws"].push_back({{"draw", d}, {"status", w.empty() ? "PASS" : "FAIL"}, {"witnesses", w}});
    }
    j["status"] = rep.passed() ? "PASS" : "FAIL";
    return j;
}

nlohmann::json suite_report_json(const SuiteResult& suite) {
    auto j = header("suite " + suite.name, suite.seed);
    j["draws"] = nlohmann::json::array();
    for (const auto& c : suite.checks)
        j["draws"].push_back({{"criterion", c.criterion},
                              {"name", c.name},
                              {"cases", c.cases},
                              {"detail", c.detail},
                              {"status", c.passed ? "PASS" : "FAIL"}});
    j["status"] = suite.passed() ? "PASS" : "FAIL";
    return j;
}

void write_report(const nlohmann::json& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << report.dump(2) << '\n';
}

}  // namespace macd
