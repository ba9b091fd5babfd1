#pragma once

#include "toricfan/git.hpp"
#include "toricfan/projectivity.hpp"

#include <cstdint>

namespace toricfan {

class OracleDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ClassificationRecord {
    OpenSetDescriptor descriptor;
    Collection collection;
    bool nondegenerate = false;
    std::optional<Fan> fan;
    bool simplicial = false;
    bool complete = false;
    bool projective = false; // LP verdict
    bool git = false;        // hit by the chamber scan
    Coverage coverage;
};

struct CensusOptions {
    unsigned jobs = 1;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    int git_depth = 3;
    int git_max_depth = 6;
};

struct CensusCounts {
    std::size_t rows = 0, nondegenerate = 0, degenerate = 0;
    std::size_t projective = 0, projective_simplicial = 0;
    std::size_t complete_nonprojective = 0, complete_nonprojective_simplicial = 0;
    std::size_t noncomplete = 0, noncomplete_simplicial = 0;
    std::size_t degenerate_git = 0;
};

struct CensusReport {
    RaySystem rays;
    WeightSystem weights;
    std::size_t catalog_size = 0;
    EnumerationStats enumeration;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    int git_depth = 0;
    std::size_t git_characters = 0;
    std::vector<ClassificationRecord> rows; // sorted by descriptor
    CensusCounts counts;
};

// Full pipeline. Throws OracleDisagreement if the LP and the chamber scan
// disagree on a nondegenerate row.
CensusReport run_census(const std::vector<IntVector>& rays, const CensusOptions& opt);

CensusCounts count_rows(const std::vector<ClassificationRecord>& rows);

std::string counts_line(const CensusCounts& c);
std::string report_json(const CensusReport& r);
std::string report_markdown(const CensusReport& r);
std::string report_csv(const CensusReport& r);

// Runs a bundled fixture check; lines describing each check go to log.
// Returns true on pass.
bool verify_fixture(const std::string& name, std::ostream& log, const CensusOptions& opt);

} // namespace toricfan
