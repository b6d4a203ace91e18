#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicard/classify.hpp"
#include "bicard/relcat.hpp"

namespace bicard::survey {

using nlohmann::json;

struct Options {
    int n = 4;
    bool exhaustive = false;
    int sample_count = 1000;
    std::uint64_t seed = 0;
    int jobs = 1;
    // Operator-pair budget per relation; 0 disables the categoricity column
    // for n > 4 (it stays on for small n where the search is exhaustive).
    long long relcat_budget = 0;
};

struct Result {
    std::vector<json> records;  // one per relation, in sweep order
    json summary;
    bool pass = false;
};

Result run_survey(const Options& opt);

/// Deterministic worker pool: each index writes only its own slot.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

/// Rendering helpers shared by the command line tool.
std::string render_json_lines(const Result& r);
std::string render_csv(const Result& r);
std::string render_text(const Result& r);

json slice_report_json(const SliceReport& sr);
json relation_record(const InvariantRelation& E, long long relcat_budget);

}  // namespace bicard::survey
