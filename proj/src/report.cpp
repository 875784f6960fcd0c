#include "trigsum/report.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

// Numeric-aware param comparison so k=7 sorts before k=11.
int compare_param_value(const std::string& a, const std::string& b) {
    auto numeric = [](const std::string& s) {
        if (s.empty()) return false;
        size_t start = (s[0] == '-') ? 1 : 0;
        if (start == s.size()) return false;
        return s.find_first_not_of("0123456789", start) == std::string::npos;
    };
    if (numeric(a) && numeric(b)) {
        long va = std::stol(a), vb = std::stol(b);
        return (va < vb) ? -1 : (va > vb) ? 1 : 0;
    }
    return a.compare(b);
}

bool check_less(const CheckReport& a, const CheckReport& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    size_t n = std::min(a.params.size(), b.params.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.params[i].first != b.params[i].first) return a.params[i].first < b.params[i].first;
        int c = compare_param_value(a.params[i].second, b.params[i].second);
        if (c != 0) return c < 0;
    }
    return a.params.size() < b.params.size();
}

}  // namespace

long ReportDocument::pass_count() const {
    long c = 0;
    for (const auto& r : checks)
        if (!r.skipped && r.pass) ++c;
    return c;
}

long ReportDocument::fail_count() const {
    long c = 0;
    for (const auto& r : checks)
        if (!r.skipped && !r.pass) ++c;
    return c;
}

long ReportDocument::skipped_count() const {
    long c = 0;
    for (const auto& r : checks)
        if (r.skipped) ++c;
    return c;
}

void ReportDocument::sort_canonical() { std::stable_sort(checks.begin(), checks.end(), check_less); }

std::string ReportDocument::to_json() const {
    nlohmann::ordered_json doc;
    doc["schema_version"] = schema_version;
    doc["engine"] = engine;
    doc["engine_version"] = engine_version;
    doc["suite"] = suite;
    doc["precision_bits"] = precision_bits;
    doc["tolerance"] = tolerance;
    doc["seed"] = seed;
    doc["summary"] = {{"pass", pass_count()},
                      {"fail", fail_count()},
                      {"skipped_hypothesis", skipped_count()},
                      {"total", static_cast<long>(checks.size())}};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : checks) {
        nlohmann::ordered_json c;
        c["identity"] = r.identity;
        nlohmann::ordered_json params;
        for (const auto& [k, v] : r.params) params[k] = v;
        c["params"] = params;
        if (r.skipped) {
            c["skipped"] = true;
            c["reason"] = r.note;
        } else {
            c["lhs"] = r.lhs;
            c["rhs"] = r.rhs;
            c["abs_diff"] = r.abs_diff;
            c["tolerance"] = r.tolerance;
            c["exact"] = r.exact;
            c["pass"] = r.pass;
            if (!r.note.empty()) c["note"] = r.note;
        }
        arr.push_back(std::move(c));
    }
    doc["checks"] = std::move(arr);
    return doc.dump(1) + "\n";
}

ReportDocument ReportDocument::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed report: ") + e.what());
    }
    ReportDocument out;
    try {
        out.schema_version = doc.at("schema_version").get<int>();
        out.engine = doc.value("engine", "");
        out.engine_version = doc.value("engine_version", "");
        out.suite = doc.at("suite").get<std::string>();
        out.precision_bits = doc.at("precision_bits").get<long>();
        out.tolerance = doc.value("tolerance", "");
        out.seed = doc.value("seed", 0UL);
        for (const auto& c : doc.at("checks")) {
            CheckReport r;
            r.identity = c.at("identity").get<std::string>();
            if (c.contains("params"))
                for (auto it = c["params"].begin(); it != c["params"].end(); ++it)
                    r.params.emplace_back(it.key(), it.value().get<std::string>());
            if (c.value("skipped", false)) {
                r.skipped = true;
                r.note = c.value("reason", "");
            } else {
                r.lhs = c.at("lhs").get<std::string>();
                r.rhs = c.at("rhs").get<std::string>();
                r.abs_diff = c.value("abs_diff", "");
                r.tolerance = c.value("tolerance", "");
                r.exact = c.value("exact", false);
                r.pass = c.at("pass").get<bool>();
                r.note = c.value("note", "");
            }
            out.checks.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("report missing required field: ") + e.what());
    }
    return out;
}

std::string ReportDocument::summary_table() const {
    struct Row {
        long pass = 0, fail = 0, skipped = 0;
    };
    std::map<std::string, Row> rows;
    for (const auto& r : checks) {
        Row& row = rows[r.identity];
        if (r.skipped)
            ++row.skipped;
        else if (r.pass)
            ++row.pass;
        else
            ++row.fail;
    }
    std::ostringstream os;
    os << "suite: " << suite << "  precision_bits: " << precision_bits << "\n";
    os << "identity                                             pass   fail   skip\n";
    for (const auto& [id, row] : rows) {
        os << id;
        for (size_t i = id.size(); i < 52; ++i) os << ' ';
        char buf[64];
        std::snprintf(buf, sizeof(buf), " %5ld  %5ld  %5ld\n", row.pass, row.fail, row.skipped);
        os << buf;
    }
    os << "total: " << pass_count() << " pass, " << fail_count() << " fail, " << skipped_count()
       << " skipped\n";
    for (const auto& r : checks) {
        if (r.skipped || r.pass) continue;
        os << "FAIL " << r.identity << " (";
        for (size_t i = 0; i < r.params.size(); ++i)
            os << (i ? ", " : "") << r.params[i].first << "=" << r.params[i].second;
        os << ")\n  lhs=" << r.lhs << "\n  rhs=" << r.rhs << "\n  abs_diff=" << r.abs_diff
           << " tolerance=" << r.tolerance << "\n";
        if (!r.note.empty()) os << "  note: " << r.note << "\n";
    }
    return os.str();
}

namespace {

CheckReport run_one(const CheckTask& task) {
    try {
        return task.run();
    } catch (const Error& e) {
        CheckReport r;
        r.identity = "runner.error";
        r.pass = false;
        r.note = std::string(error_kind_name(e.kind())) + ": " + e.what();
        return r;
    } catch (const std::exception& e) {
        CheckReport r;
        r.identity = "runner.error";
        r.pass = false;
        r.note = e.what();
        return r;
    }
}

}  // namespace

ReportDocument run_tasks(const std::string& suite, const PrecisionContext& ctx, unsigned long seed,
                         std::vector<CheckTask> tasks, int jobs) {
    ReportDocument doc;
    doc.suite = suite;
    doc.precision_bits = ctx.precision_bits;
    doc.tolerance = ctx.tolerance.str();
    doc.seed = seed;
    doc.checks.resize(tasks.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) doc.checks[i] = run_one(tasks[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                doc.checks[i] = run_one(tasks[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    doc.sort_canonical();
    return doc;
}

}  // namespace trigsum
