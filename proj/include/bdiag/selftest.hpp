#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bdiag {

// quick trims the heavy populations for interactive use; full runs the
// complete battery; deep adds the weight-6 enumeration row.
enum class CheckLevel { quick, full, deep };

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CriterionResult> run_selftests(CheckLevel level);

// One "PASS/FAIL <index> <name>: <detail>" line per criterion; returns true
// iff every criterion passed.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace bdiag
