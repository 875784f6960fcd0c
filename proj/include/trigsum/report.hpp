#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trigsum/check.hpp"

namespace trigsum {

/// Machine-readable result of one suite run. Serialization is canonical:
/// checks sorted by (identity, params), no timestamps, so two runs at the
/// same precision produce byte-identical bodies.
struct ReportDocument {
    int schema_version = 1;
    std::string engine = "trigsum";
    std::string engine_version = "0.1.0";
    std::string suite;
    long precision_bits = 256;
    std::string tolerance;
    unsigned long seed = 0;
    std::vector<CheckReport> checks;

    long pass_count() const;
    long fail_count() const;
    long skipped_count() const;

    void sort_canonical();
    std::string to_json() const;
    static ReportDocument from_json(const std::string& text);

    /// Summary table grouped by identity tag, with failure details.
    std::string summary_table() const;
};

struct CheckTask {
    std::function<CheckReport()> run;
};

/// Runs tasks (optionally across threads), collects reports, sorts them
/// canonically into a document.
ReportDocument run_tasks(const std::string& suite, const PrecisionContext& ctx, unsigned long seed,
                         std::vector<CheckTask> tasks, int jobs = 1);

}  // namespace trigsum
