#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cutkit/json.hpp"
#include "cutkit/oracle.hpp"

namespace cutkit::testing {

inline std::filesystem::path fixture_dir() { return CUTKIT_FIXTURES_DIR; }

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline JobFile load_fixture(const std::string& relative) { return parse_job(slurp(fixture_dir() / relative)); }

inline std::vector<std::filesystem::path> fixture_files() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(fixture_dir()))
        if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

/// The oracle over every cut in a job, with the job's own table and bounds.
inline OracleReport run_job(const JobFile& job, SampleConfig cfg) {
    if (job.params.max_denominator) cfg.max_denominator = *job.params.max_denominator;
    if (job.params.max_support) cfg.max_support = *job.params.max_support;
    if (job.params.max_label) cfg.max_label = *job.params.max_label;
    const CovarianceTable& table = job.covariance_table ? *job.covariance_table : kCovarianceTable;
    OracleReport total;
    total.seed = cfg.seed;
    for (const QuasiCutPoint& p : job.items) {
        if (p.is_interior()) continue;
        total.merge(check_cut(p.as_cut(), classify(p.as_cut(), table), cfg));
    }
    return total;
}

} // namespace cutkit::testing
