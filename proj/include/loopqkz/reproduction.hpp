#pragma once

#include "loopqkz/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace loopqkz {

struct ReproductionOptions {
    /// Caps every system size below its full bound; 0 keeps the full bounds.
    int max_size = 0;
    /// Largest FPL grid size (odd, 7..15).
    int fpl_max = 13;
    std::uint64_t seed = 1;
    /// Print each summary line to stderr as its criterion finishes.
    bool verbose = false;
};

/// One acceptance criterion. Findings that the criterion only records, such as
/// conjectural positivity, go to `notes` and never fail it.
struct CriterionResult {
    int id = 0;
    std::string title;
    Report report;
    std::vector<std::string> notes;
    double seconds = 0;

    bool passed() const { return report.ok(); }
};

/// Runs criteria 1..12 in order. Only ids listed in `only` are run when it is
/// non-empty.
std::vector<CriterionResult> reproduce(const ReproductionOptions& opt, const std::vector<int>& only = {});

/// Every criterion that ran passed.
bool all_passed(const std::vector<CriterionResult>& results);

/// "criterion  3 PASS  qKZ closed forms (9 checks)"; timings are left out so
/// that identical runs print identical lines.
std::string summary_line(const CriterionResult& r);

}  // namespace loopqkz
