#pragma once

#include <string>
#include <vector>

#include "trigsum/report.hpp"

namespace trigsum {

struct SuiteConfig {
    std::string suite = "all";
    long precision_bits = 256;
    bool has_tolerance_override = false;
    double tolerance_override = 0.0;  // interpreted at full precision when set
    long max_k = 101;                 // cap on single-modulus sweeps
    long max_pq = 0;                  // cap on (p, q) sweeps; 0 = suite default
    int jobs = 1;
    unsigned long seed = 20240801;
};

const std::vector<std::string>& suite_names();
bool suite_exists(const std::string& name);

ReportDocument run_suite(const SuiteConfig& config);

}  // namespace trigsum
