#pragma once

#include <string>
#include <vector>

#include "graphlap/multigraph.hpp"

namespace graphlap {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counts on success, first failures otherwise
};

/// Names of the verification suites, in report order.
std::vector<std::string> suite_names();

/// Run one suite by name. `n_max` overrides the suite's graph-size ceiling
/// where that makes sense; 0 keeps the default. Unknown names throw.
SuiteResult run_suite(const std::string& name, int n_max = 0);

std::vector<SuiteResult> run_all_suites();

/// Connected simple graphs (n <= n_max) whose critical group exponent is not
/// attained by any vertex pair.
struct ExponentSearchHit {
    Multigraph graph;
    Int exponent;
    Int max_pair_order;
};
std::vector<ExponentSearchHit> search_exponent_gap(int n_max);

/// Maximal number of collapsed values over the Laplacians (positive
/// semidefinite convention) of connected simple graphs with n_max vertices.
struct CollapsedCountResult {
    Multigraph graph{1};
    std::vector<Int> values;
};
CollapsedCountResult search_collapsed_count(int n_max);

}  // namespace graphlap
