#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ringlab {

// Outcome of one acceptance check.  `pass` requires both the mathematical
// verdict and, when limit_ms > 0, staying inside the wall-clock budget.
struct CriterionResult {
    std::string id;    // stable short id, "c01".."c10"
    std::string name;  // what the check establishes
    bool pass = false;
    std::string detail;  // one-line outcome summary (counts, pinned values)
    std::uint64_t duration_ms = 0;
    std::uint64_t limit_ms = 0;  // 0 = untimed
};

struct DeskSuiteResult {
    std::vector<CriterionResult> criteria;
    bool pass = false;  // conjunction over criteria
};

// The reference rings every whole-suite check runs over: Z2..Z12, the 2x2
// matrix and upper-triangular rings over small fields, and a product ring.
const std::vector<std::string>& desk_suite_rings();

// Runs the ten acceptance checks in order; jobs = worker threads for the
// parallel sweeps (0 = hardware default).  Never throws on a failing
// criterion -- failures land in the per-criterion results; construction
// errors for the fixed, known-good inputs would be library bugs and may
// still propagate.
DeskSuiteResult run_desk_suite(unsigned jobs = 0);

}  // namespace ringlab
