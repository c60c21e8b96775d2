#pragma once

#include <string>
#include <vector>

namespace edgeideal {

struct CriterionResult {
    std::string id;     // short name, e.g. "ferrers"
    std::string title;
    bool pass = false;
    std::string detail; // counts, mismatches, reported statuses
};

CriterionResult verify_ferrers(long long max_cells = 8);
CriterionResult verify_froberg();
CriterionResult verify_complement_chordal();
CriterionResult verify_chordal_vd();
CriterionResult verify_whiskers();
CriterionResult verify_ears();
CriterionResult verify_golden();
CriterionResult verify_calculus();
CriterionResult verify_pdim_bounds();
CriterionResult verify_skeleton_vd();
CriterionResult verify_engine();
CriterionResult verify_determinism();

/// All criteria in order. Names accepted by run_criterion: ferrers, froberg,
/// chordal-complement, chordal-vd, whiskers, ears, golden, calculus, bounds,
/// skeleton, engine, determinism.
std::vector<CriterionResult> run_all_criteria();
CriterionResult run_criterion(const std::string& name);
std::vector<std::string> criterion_names();

} // namespace edgeideal
