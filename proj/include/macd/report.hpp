#pragma once

#include <string>

#include <json.hpp>

#include "macd/hyperseries.hpp"
#include "macd/matinv.hpp"
#include "macd/suites.hpp"

namespace macd {

inline constexpr int kReportSchema = 1;
const std::string& tool_version();

// top level: {schema, task, tool_version, seed, draws, status}; wall time is
// added by the caller so that everything else is reproducible
nlohmann::json identity_report_json(const IdentityReport& rep);
nlohmann::json orthogonality_report_json(const VerificationReport& rep, std::uint64_t seed);
nlohmann::json suite_report_json(const SuiteResult& suite);

void write_report(const nlohmann::json& report, const std::string& path);

}  // namespace macd
