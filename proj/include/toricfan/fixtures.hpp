#pragma once

#include "toricfan/rational.hpp"

#include <string>
#include <vector>

// Bundled ray systems and reference data used by the CLI `verify` command and
// the test suites.
namespace toricfan::fixtures {

// Six rays in R^3 whose maximal fans are all complete.
std::vector<IntVector> dim3_rays();
IntMatrix dim3_weights(); // published kernel basis, rows

// Seven rays in R^4 whose maximal fans are projective or non-complete.
std::vector<IntVector> dim4_rays();
IntMatrix dim4_weights(); // published weight matrix, rows (rational row space)

// Seven rays u1..u7 in R^4 and the eight maximal cones (1-based indices) of the
// maximal non-complete fan over them.
std::vector<IntVector> sec5_rays();
std::vector<std::vector<int>> sec5_cones();

std::vector<IntVector> p2_rays();
std::vector<IntVector> p1_rays();
// P^2 rays followed by +-e3 in R^3.
std::vector<IntVector> p2_times_p1_rays();

struct CensusRow {
    std::string descriptor; // "X \ (Z(b, d) ∪ ...)" or "X"
    bool nondegenerate = false;
    bool git = false;
    bool simplicial = false; // meaningful only when nondegenerate
};

// Reference census for dim3_rays(), in published order.
const std::vector<CensusRow>& dim3_census();

} // namespace toricfan::fixtures
