// Acceptance battery: every criterion below runs the relevant verification
// suite at 256-bit precision (relative tolerance 2^-224) and prints one
// pass/fail line. Exit code is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "trigsum/suites.hpp"

using namespace trigsum;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report_line(int criterion, bool pass, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
    if (!pass) ++failures;
}

ReportDocument run(const std::string& suite, long max_k = 101, long max_pq = 0) {
    SuiteConfig config;
    config.suite = suite;
    config.max_k = max_k;
    config.max_pq = max_pq;
    return run_suite(config);
}

const CheckReport* find_check(const ReportDocument& doc, const std::string& identity,
                              const std::vector<std::pair<std::string, std::string>>& params) {
    for (const auto& c : doc.checks) {
        if (c.identity != identity) continue;
        bool all = true;
        for (const auto& want : params) {
            bool found = false;
            for (const auto& have : c.params)
                if (have == want) { found = true; break; }
            if (!found) { all = false; break; }
        }
        if (all) return &c;
    }
    return nullptr;
}

std::string counts(const ReportDocument& doc) {
    return std::to_string(doc.pass_count()) + " pass, " + std::to_string(doc.fail_count()) +
           " fail, " + std::to_string(doc.skipped_count()) + " skipped";
}

}  // namespace

int main() {
    auto battery_start = std::chrono::steady_clock::now();

    {  // 1. root-of-unity lemma tables, k <= 101, within 60 s single-worker
        auto t0 = std::chrono::steady_clock::now();
        ReportDocument lemmas = run("lemmas");
        ReportDocument mixed = run("mixed", 101, 31);
        double secs = seconds_since(t0);
        bool pass = lemmas.fail_count() == 0 && mixed.fail_count() == 0 && secs <= 60.0;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "pole-sum tables and mixed lemma laws, k <= 101 (%s; %s; %.1f s)",
                      counts(lemmas).c_str(), counts(mixed).c_str(), secs);
        report_line(1, pass, buf);
    }

    {  // 2. the 13 trig families with the paper's literal values
        ReportDocument doc = run("section3");
        const CheckReport* v18 = find_check(doc, "trig.paper_example.cos2_over_cos4", {{"k", "5"}});
        const CheckReport* v41 = find_check(doc, "trig.paper_example.cos2_over_cos4", {{"k", "7"}});
        const CheckReport* v28 =
            find_check(doc, "trig.paper_example.sin2_over_sin4_half", {{"k", "7"}});
        bool literals = v18 != nullptr && v18->pass && v18->rhs == "18" && v41 != nullptr &&
                        v41->pass && v41->rhs == "41" && v28 != nullptr && v28->pass &&
                        v28->rhs == "28";
        const CheckReport* tri = find_check(doc, "trig.triangular_identity", {{"m", "50"}});
        bool pass = doc.fail_count() == 0 && literals && tri != nullptr && tri->pass;
        report_line(2, pass,
                    "trig families k <= 101, literal values 18/41/28, triangular identity, exact "
                    "corollaries (" +
                        counts(doc) + ")");
    }

    {  // 3. negative controls
        ReportDocument doc = run("negative-controls");
        long branch_controls = 0;
        for (const auto& c : doc.checks)
            if (c.identity == "negcontrol.trig_branch.cos2_over_cos4") ++branch_controls;
        bool pass = doc.fail_count() == 0 && branch_controls == 49;  // odd 5..101
        report_line(3, pass,
                    "wrong-branch and perturbed-law controls all fail as expected (" + counts(doc) +
                        ")");
    }

    {  // 4. two-period sums, pairs <= 25, within 120 s
        auto t0 = std::chrono::steady_clock::now();
        ReportDocument doc = run("twoperiod", 101, 25);
        double secs = seconds_since(t0);
        const CheckReport* v0 = find_check(doc, "twoperiod.paper_value.csc2", {{"p", "2"}, {"q", "3"}});
        const CheckReport* v16 =
            find_check(doc, "twoperiod.paper_value.csc2", {{"p", "3"}, {"q", "4"}});
        const CheckReport* v96 =
            find_check(doc, "twoperiod.paper_value.csc2", {{"p", "3"}, {"q", "7"}});
        const CheckReport* v32 =
            find_check(doc, "twoperiod.paper_value.sec2", {{"p", "3"}, {"q", "5"}});
        bool literals = v0 && v0->pass && v0->rhs == "0" && v16 && v16->pass && v16->rhs == "16" &&
                        v96 && v96->pass && v96->rhs == "96" && v32 && v32->pass && v32->rhs == "32";
        bool pass = doc.fail_count() == 0 && literals && secs <= 120.0;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "two-period semi-closed and special values 0/16/96/32 (%s; %.1f s)",
                      counts(doc).c_str(), secs);
        report_line(4, pass, buf);
    }

    {  // 5. reciprocity laws <= 31, exact Dedekind subsuite, four-sum quadruples
        ReportDocument doc = run("reciprocity", 101, 31);
        const CheckReport* ds =
            find_check(doc, "reciprocity.law.DEDEKIND_S", {{"p", "1"}, {"q", "3"}});
        bool dedekind_exact = ds != nullptr && ds->pass && ds->exact && ds->lhs == "1/18" &&
                              ds->tolerance == "0";
        const CheckReport* tlaw = find_check(doc, "reciprocity.law.T_LAW", {{"p", "2"}, {"q", "3"}});
        bool tlaw_value = tlaw != nullptr && tlaw->pass && tlaw->rhs == "-80";
        long four_sums = 0;
        for (const auto& c : doc.checks)
            if (c.identity == "reciprocity.four_sum" && c.pass) ++four_sums;
        bool pass = doc.fail_count() == 0 && dedekind_exact && tlaw_value && four_sums == 3;
        report_line(5, pass,
                    "two-term laws <= 31 with the exact Dedekind subsuite and four-sum quadruples (" +
                        counts(doc) + ")");
    }

    {  // 6. contour residues, odd 5 <= k <= 41, a in {1,2,3}
        ReportDocument doc = run("residues", 41);
        const CheckReport* s28 =
            find_check(doc, "residue.section9.G_SIN", {{"k", "7"}, {"a", "1"}});
        bool value28 = s28 != nullptr && s28->pass && s28->lhs.rfind("28.0000", 0) == 0;
        bool pass = doc.fail_count() == 0 && value28;
        report_line(6, pass,
                    "residue quadrature vs closed forms and half-range identities (" + counts(doc) +
                        ")");
    }

    {  // 7. character sums
        ReportDocument doc = run("charsums", 101, 31);
        const CheckReport* ex1 = find_check(doc, "charsum.paper_example1", {{"p", "13"}});
        const CheckReport* disc_sin =
            find_check(doc, "charsum.example2_discrepancy.sin", {{"p", "13"}});
        bool documented = disc_sin != nullptr && disc_sin->pass &&
                          disc_sin->note.find("candidate[formula]") != std::string::npos &&
                          disc_sin->note.find("candidate[example]") != std::string::npos &&
                          disc_sin->note.find("oracle") != std::string::npos;
        long two_char = 0, multi = 0;
        for (const auto& c : doc.checks) {
            if (c.identity == "charsum.two_char" && c.pass) ++two_char;
            if (c.identity == "charsum.multi_sin" && c.pass) ++multi;
        }
        bool pass = doc.fail_count() == 0 && ex1 != nullptr && ex1->pass && documented &&
                    two_char >= 3 * 4 && multi >= 2 * 3;
        report_line(7, pass,
                    "ratio/multi-sin/two-character theorems with the a = 5 example discrepancy "
                    "recorded (" +
                        counts(doc) + ")");
    }

    {  // 8. class numbers
        ReportDocument doc = run("classnumbers");
        bool pass = doc.fail_count() == 0 && doc.pass_count() == 10;
        report_line(8, pass, "class number table reproduced exactly (" + counts(doc) + ")");
    }

    {  // 9. determinism and total runtime
        SuiteConfig config;
        config.suite = "section3";
        config.max_k = 31;
        std::string first = run_suite(config).to_json();
        std::string second = run_suite(config).to_json();
        double total = seconds_since(battery_start);
        bool pass = (first == second) && total <= 900.0;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "byte-identical repeated reports; battery completed in %.1f s", total);
        report_line(9, pass, buf);
    }

    if (failures == 0) std::printf("acceptance: all 9 criteria passed\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
