#include "twistspin/report.hpp"

#include <sstream>

namespace twistspin {

std::string render_abelian(const AbelianInvariants& inv) {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < inv.free_rank; ++i) {
        if (!first) out << " + ";
        out << "Z";
        first = false;
    }
    for (const BigInt& d : inv.torsion) {
        if (!first) out << " + ";
        out << "Z/" << d;
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

nlohmann::ordered_json report_json(const nlohmann::ordered_json& config,
                                   const std::vector<ReportRow>& rows, bool with_timings) {
    nlohmann::ordered_json doc;
    doc["tool_version"] = kToolVersion;
    doc["config"] = config;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const ReportRow& row : rows) {
        nlohmann::ordered_json j;
        j["name"] = row.name;
        j["n"] = row.report.n;
        if (!row.error.empty()) {
            j["order"] = nullptr;
            j["abelian"] = nullptr;
            j["longitude_trivial"] = nullptr;
            j["double_coset"] = nullptr;
            j["verdict"] = "ERROR";
            j["millis"] = 0;
            j["error"] = row.error;
            doc["rows"].push_back(std::move(j));
            continue;
        }
        const VerificationReport& r = row.report;
        if (r.order)
            j["order"] = *r.order;
        else
            j["order"] = nullptr;
        j["abelian"] = render_abelian(r.abelian);
        j["longitude_trivial"] = to_string(r.longitude_trivial);
        if (r.double_coset_ok)
            j["double_coset"] = *r.double_coset_ok;
        else
            j["double_coset"] = nullptr;
        j["verdict"] = to_string(r.verdict);
        j["millis"] = with_timings ? r.millis : 0;
        doc["rows"].push_back(std::move(j));
    }
    return doc;
}

std::string report_text(const std::vector<ReportRow>& rows, bool with_timings) {
    std::ostringstream out;
    for (const ReportRow& row : rows) {
        if (!row.error.empty()) {
            out << row.name << " n=" << row.report.n << ' ' << row.check
                << ": ERROR (" << row.error << ")\n";
            continue;
        }
        const VerificationReport& r = row.report;
        out << row.name << " n=" << r.n << ' ' << row.check << ": " << to_string(r.verdict);
        out << " (order=";
        if (r.order)
            out << *r.order;
        else
            out << "overflow";
        out << ", abelian=" << render_abelian(r.abelian)
            << ", longitude=" << to_string(r.longitude_trivial);
        if (r.double_coset_ok) out << ", double_coset=" << (*r.double_coset_ok ? "true" : "false");
        if (with_timings) out << ", millis=" << r.millis;
        out << ")\n";
        for (const CheckResult& c : r.checks)
            if (c.verdict != Verdict::Pass)
                out << "    " << c.name << ": " << to_string(c.verdict)
                    << (c.detail.empty() ? "" : " — " + c.detail) << '\n';
    }
    return out.str();
}

Verdict worst_verdict(const std::vector<ReportRow>& rows) {
    Verdict v = Verdict::Pass;
    for (const ReportRow& row : rows) {
        if (!row.error.empty()) return Verdict::Fail;
        if (row.report.verdict == Verdict::Fail) return Verdict::Fail;
        if (row.report.verdict == Verdict::Inconclusive) v = Verdict::Inconclusive;
    }
    return v;
}

}  // namespace twistspin
