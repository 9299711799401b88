#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "twistspin/report.hpp"
#include "twistspin/twistspin.hpp"

namespace ts = twistspin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitFail = 3;

long default_max_cosets() {
    if (const char* env = std::getenv("TWISTSPIN_MAX_COSETS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return ts::Limits{}.max_cosets;
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw ts::MalformedSyntax("empty n list");
    return out;
}

struct CsvRow {
    std::string name;
    std::string notation;
    std::string payload;
    std::optional<long> expected_det;
};

// Minimal CSV reader with double-quote escaping (payloads contain commas).
std::vector<std::vector<std::string>> read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string cur;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (quoted) {
                if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    cur.push_back(c);
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                fields.push_back(cur);
                cur.clear();
            } else if (c != '\r') {
                cur.push_back(c);
            }
        }
        fields.push_back(cur);
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::vector<CsvRow> read_knot_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ts::Error("cannot open " + path);
    auto raw = read_csv(in);
    if (raw.empty())
        throw ts::MalformedSyntax("expected CSV header name,notation,payload[,expected_det]");
    const auto& header = raw.front();
    if (header.size() < 3 || header[0] != "name" || header[1] != "notation" ||
        header[2] != "payload")
        throw ts::MalformedSyntax("expected CSV header name,notation,payload[,expected_det]");
    std::vector<CsvRow> rows;
    for (std::size_t i = 1; i < raw.size(); ++i) {
        const auto& f = raw[i];
        if (f.size() < 3) throw ts::MalformedSyntax("short CSV row " + std::to_string(i));
        CsvRow row;
        row.name = f[0];
        row.notation = f[1];
        row.payload = f[2];
        if (f.size() > 3 && !f[3].empty()) row.expected_det = std::stol(f[3]);
        rows.push_back(std::move(row));
    }
    return rows;
}

ts::KnotInput knot_from_row(const CsvRow& row) {
    if (row.notation == "pd")
        return ts::KnotInput{row.name, ts::parse_pd(row.payload)};
    if (row.notation == "braid")
        return ts::KnotInput{row.name, ts::parse_braid(row.payload)};
    if (row.notation == "two_bridge")
        return ts::KnotInput{row.name, ts::parse_two_bridge(row.payload)};
    throw ts::MalformedSyntax("unknown notation '" + row.notation + "'");
}

struct Task {
    std::function<ts::ReportRow()> run;
};

// Row-level parallelism; results land in their input slot, so output order
// is independent of the degree.
std::vector<ts::ReportRow> run_tasks(const std::vector<Task>& tasks, int jobs) {
    std::vector<ts::ReportRow> rows(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = tasks[i].run();
        return rows;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) rows[i] = tasks[i].run();
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rows;
}

ts::ReportRow lemma2_row(const ts::KnotInput& k, int n, const ts::Limits& lim,
                         std::optional<long> expected_det) {
    ts::ReportRow row;
    row.name = k.name;
    row.check = "lemma2";
    row.report.n = n;
    try {
        row.report = n % 2 == 1 ? ts::verify_lemma2_odd(k, n, lim)
                                : ts::verify_lemma2_even(k, n, lim, expected_det);
    } catch (const ts::Error& e) {
        row.error = e.what();
    }
    return row;
}

ts::ReportRow theorem1_row(const ts::KnotInput& k, int n, const ts::Limits& lim) {
    ts::ReportRow row;
    row.name = k.name;
    row.check = "theorem1";
    row.report.n = n;
    try {
        row.report = ts::verify_theorem1_group_level(k, n, lim);
    } catch (const ts::Error& e) {
        row.error = e.what();
    }
    return row;
}

int emit_report(const std::vector<ts::ReportRow>& rows, const nlohmann::ordered_json& config,
                const std::string& out_path, std::string format, bool timings) {
    if (format.empty()) format = out_path.empty() ? "text" : "json";
    std::string body = format == "json"
                           ? ts::report_json(config, rows, timings).dump(2) + "\n"
                           : ts::report_text(rows, timings);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ts::Error("cannot write " + out_path);
        out << body;
    }
    switch (ts::worst_verdict(rows)) {
        case ts::Verdict::Pass: return kExitOk;
        case ts::Verdict::Inconclusive: return kExitInconclusive;
        default: return kExitFail;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twist-spun 2-knot group computations and verification"};
    app.require_subcommand(1);

    std::string knot_text, n_list = "1", out_path, format;
    long max_cosets = default_max_cosets();
    int twist = 0, n_single = 0, jobs = 1;
    bool rp2 = false, timings = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--max-cosets", max_cosets, "coset limit per enumeration");
    };

    CLI::App* group = app.add_subcommand("group", "presentation / order / abelian invariants");
    group->require_subcommand(1);
    CLI::App* g_wirt = group->add_subcommand("wirtinger", "print the knot group presentation");
    g_wirt->add_option("knot", knot_text, "PD[...] | BR[...] | TB[p/q]")->required();
    CLI::App* g_tw = group->add_subcommand("twistspin", "print the twist-spun presentation");
    g_tw->add_option("knot", knot_text)->required();
    g_tw->add_option("--n", n_single, "twist parameter")->required();
    g_tw->add_flag("--rp2", rp2, "connected sum with P1(+-2)");
    CLI::App* g_ord = group->add_subcommand("order", "group order by coset enumeration");
    g_ord->add_option("knot", knot_text)->required();
    g_ord->add_option("--twist", twist, "twist parameter");
    g_ord->add_flag("--rp2", rp2);
    add_common(g_ord);
    CLI::App* g_ab = group->add_subcommand("abelian", "abelian invariants");
    g_ab->add_option("knot", knot_text)->required();
    g_ab->add_option("--twist", twist);
    g_ab->add_flag("--rp2", rp2);

    CLI::App* verify = app.add_subcommand("verify", "run the handle-triviality and parity-invariance checks");
    verify->require_subcommand(1);
    auto add_verify_opts = [&](CLI::App* cmd) {
        cmd->add_option("knot", knot_text)->required();
        cmd->add_option("--n", n_list, "comma-separated twist parameters");
        cmd->add_option("--out", out_path, "report file path");
        cmd->add_option("--format", format, "json|text");
        cmd->add_option("--jobs", jobs, "parallel workers");
        cmd->add_flag("--timings", timings, "include real timings in the report");
        add_common(cmd);
    };
    CLI::App* v_l2 = verify->add_subcommand("lemma2", "handle-triviality checks");
    add_verify_opts(v_l2);
    CLI::App* v_t1 = verify->add_subcommand("theorem1", "n vs n+2 invariant equality");
    add_verify_opts(v_t1);

    std::string csv_path, checks = "lemma2,theorem1";
    CLI::App* table = app.add_subcommand("table", "batch-verify a knot table CSV");
    table->add_option("csv", csv_path, "CSV with header name,notation,payload[,expected_det]")
        ->required();
    table->add_option("--n", n_list, "comma-separated twist parameters");
    table->add_option("--checks", checks, "comma-separated: lemma2,theorem1");
    table->add_option("--out", out_path);
    table->add_option("--format", format, "json|text");
    table->add_option("--jobs", jobs);
    table->add_flag("--timings", timings);
    add_common(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        ts::Limits lim;
        lim.max_cosets = max_cosets;

        if (g_wirt->parsed()) {
            std::cout << ts::render_presentation(ts::knot_group(ts::parse_knot(knot_text)))
                      << '\n';
            return kExitOk;
        }
        if (g_tw->parsed()) {
            auto p = ts::twist_spin_presentation(ts::knot_group(ts::parse_knot(knot_text)),
                                                 n_single);
            if (rp2) p = ts::connect_sum_rp2(p);
            std::cout << ts::render_presentation(p) << '\n';
            return kExitOk;
        }
        if (g_ord->parsed() || g_ab->parsed()) {
            auto p = ts::knot_group(ts::parse_knot(knot_text));
            if (twist > 0) p = ts::twist_spin_presentation(p, twist);
            if (rp2) p = ts::connect_sum_rp2(p);
            if (g_ab->parsed()) {
                std::cout << "abelian: " << ts::render_abelian(ts::abelian_invariants(p))
                          << '\n';
                return kExitOk;
            }
            auto ord = ts::group_order(p, lim);
            if (!ord.complete()) {
                std::cout << "order: overflow\n";
                return kExitInconclusive;
            }
            std::cout << "order: " << ord.order << '\n';
            return kExitOk;
        }

        if (v_l2->parsed() || v_t1->parsed()) {
            const ts::KnotInput k = ts::parse_knot(knot_text);
            const std::vector<int> ns = parse_n_list(n_list);
            std::vector<Task> tasks;
            for (int n : ns) {
                if (v_l2->parsed())
                    tasks.push_back({[=] { return lemma2_row(k, n, lim, std::nullopt); }});
                else
                    tasks.push_back({[=] { return theorem1_row(k, n, lim); }});
            }
            auto rows = run_tasks(tasks, jobs);
            nlohmann::ordered_json config{{"command", v_l2->parsed() ? "verify lemma2"
                                                                     : "verify theorem1"},
                                          {"knot", knot_text},
                                          {"n", ns},
                                          {"max_cosets", lim.max_cosets},
                                          {"jobs", jobs}};
            return emit_report(rows, config, out_path, format, timings);
        }

        if (table->parsed()) {
            const std::vector<CsvRow> csv = read_knot_table(csv_path);
            const std::vector<int> ns = parse_n_list(n_list);
            const bool do_lemma2 = checks.find("lemma2") != std::string::npos;
            const bool do_theorem1 = checks.find("theorem1") != std::string::npos;

            std::vector<Task> tasks;
            for (const CsvRow& row : csv) {
                ts::KnotInput k;
                std::string parse_error;
                try {
                    k = knot_from_row(row);
                } catch (const ts::Error& e) {
                    parse_error = e.what();
                }
                for (int n : ns) {
                    if (!parse_error.empty()) {
                        ts::ReportRow bad;
                        bad.name = row.name;
                        bad.check = "parse";
                        bad.report.n = n;
                        bad.error = parse_error;
                        tasks.push_back({[bad] { return bad; }});
                        continue;
                    }
                    auto det = row.expected_det;
                    if (do_lemma2)
                        tasks.push_back({[=] { return lemma2_row(k, n, lim, det); }});
                    if (do_theorem1 && (n % 2 == 1 || k.is_two_bridge()))
                        tasks.push_back({[=] { return theorem1_row(k, n, lim); }});
                }
            }
            auto rows = run_tasks(tasks, jobs);
            nlohmann::ordered_json config{{"command", "table"},
                                          {"csv", csv_path},
                                          {"n", ns},
                                          {"checks", checks},
                                          {"max_cosets", lim.max_cosets},
                                          {"jobs", jobs}};
            return emit_report(rows, config, out_path, format, timings);
        }
    } catch (const ts::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
