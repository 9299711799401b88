#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "twistspin/twistspin.hpp"

namespace twistspin {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportRow {
    std::string name;
    std::string check;  // lemma2 | theorem1 | error
    VerificationReport report;
    std::string error;  // nonempty for rows that failed to run
};

std::string render_abelian(const AbelianInvariants& inv);

// Stable key order: { tool_version, config, rows: [ { name, n, order,
// abelian, longitude_trivial, double_coset, verdict, millis } ] }.
// Timings are zeroed unless with_timings is set so reports are byte-stable.
nlohmann::ordered_json report_json(const nlohmann::ordered_json& config,
                                   const std::vector<ReportRow>& rows, bool with_timings);

std::string report_text(const std::vector<ReportRow>& rows, bool with_timings);

Verdict worst_verdict(const std::vector<ReportRow>& rows);

}  // namespace twistspin
