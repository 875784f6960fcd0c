#include <doctest.h>

#include "trigsum/suites.hpp"

using namespace trigsum;

TEST_CASE("suite registry") {
    CHECK(suite_exists("section3"));
    CHECK(suite_exists("negative-controls"));
    CHECK_FALSE(suite_exists("no-such-suite"));
    SuiteConfig bad;
    bad.suite = "no-such-suite";
    CHECK_THROWS_AS(run_suite(bad), Error);
}

TEST_CASE("classnumbers suite runs clean and serializes deterministically") {
    SuiteConfig config;
    config.suite = "classnumbers";
    ReportDocument doc1 = run_suite(config);
    CHECK(doc1.fail_count() == 0);
    CHECK(doc1.pass_count() == 10);
    ReportDocument doc2 = run_suite(config);
    CHECK(doc1.to_json() == doc2.to_json());
}

TEST_CASE("parallel run produces the identical report body") {
    SuiteConfig config;
    config.suite = "twoperiod";
    config.max_pq = 7;
    ReportDocument serial = run_suite(config);
    config.jobs = 4;
    ReportDocument parallel = run_suite(config);
    CHECK(serial.fail_count() == 0);
    CHECK(serial.to_json() == parallel.to_json());
}

TEST_CASE("round trip through JSON keeps the body identical") {
    SuiteConfig config;
    config.suite = "classnumbers";
    ReportDocument doc = run_suite(config);
    std::string body = doc.to_json();
    ReportDocument parsed = ReportDocument::from_json(body);
    CHECK(parsed.to_json() == body);
    CHECK(parsed.suite == "classnumbers");
    CHECK(parsed.pass_count() == doc.pass_count());
    CHECK_THROWS_AS(ReportDocument::from_json("{not json"), Error);
}

TEST_CASE("negative-control suite passes because the controls fail") {
    SuiteConfig config;
    config.suite = "negative-controls";
    config.max_k = 21;
    ReportDocument doc = run_suite(config);
    CHECK(doc.fail_count() == 0);
    CHECK(doc.pass_count() > 0);
    // every control note flags the inverted expectation
    for (const auto& c : doc.checks) CHECK(c.note.find("control passes") != std::string::npos);
}

TEST_CASE("summary table lists failures with both sides") {
    SuiteConfig config;
    config.suite = "classnumbers";
    ReportDocument doc = run_suite(config);
    doc.checks[0].pass = false;
    std::string table = doc.summary_table();
    CHECK(table.find("FAIL charsum.class_number") != std::string::npos);
    CHECK(table.find("lhs=") != std::string::npos);
    CHECK(table.find("tolerance=") != std::string::npos);
}
