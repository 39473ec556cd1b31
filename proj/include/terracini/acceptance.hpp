#pragma once

#include <string>
#include <vector>

#include "terracini/sampling.hpp"

namespace terracini {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::vector<std::string> details; // one entry per failed sub-check
};

/// Runs the whole verification suite against the built-in catalog. The last
/// criterion re-runs criteria 1-14 with the same configuration and compares
/// the two serialized transcripts byte for byte. faultCriterion != 0 injects
/// a wrong expected value into that criterion (harness self-test).
std::vector<CriterionResult> run_paper_suite(const SampleConfig& cfg, int faultCriterion = 0);

/// Canonical JSON transcript of the results (sorted keys, LF, trailing \n).
std::string suite_transcript(const std::vector<CriterionResult>& results, const SampleConfig& cfg);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace terracini
