#pragma once

#include "yangirr/criteria.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace yangirr::cli {

using json = nlohmann::json;

// {"lambda": [...], "mu": [...], "N": n, "h": "p/q"}; h may also be an
// integer and defaults to 0. Throws Error(InvalidInput).
ModuleSpec parse_spec(const json& j);
std::vector<ModuleSpec> parse_specs(const json& j);
json spec_json(const ModuleSpec& s);
Rat parse_h(const json& j);

json diagram_report(const json& input);
// criterion is one of "thm33", "thm34", "thm23". For thm23 the input is
// either {"alpha", "beta", "N"} or a list of two specs whose diagrams are a
// reversed and a usual Young diagram.
json check_report(const json& input, const std::string& criterion);
// Oracle verdicts next to the criteria for one spec list. Sets
// "agree" = false if an iff criterion or a sufficient one contradicts the
// oracle.
json oracle_report(const json& input, std::size_t cap);
json intertwiner_report(const json& input, bool with_matrix);

struct SweepJob {
    std::vector<std::vector<ModuleSpec>> tuples;
    std::vector<std::string> ids;  // one per tuple
    int vary = -1;                 // factor whose h is shifted; -1 = last
    int lo = 0, hi = -1;           // integer window, empty if lo > hi
    std::set<std::string> checks;  // thm33, thm34, thm23, oracle, intertwiner_rank
    std::size_t cap = 0;
};

// {"tuples": [[spec, ...], ...]} or {"specs": [spec, ...]}, optional "ids",
// "vary", "window": "a..b", "checks": [...].
SweepJob parse_job(const json& j);
// "a..b" -> (a, b)
std::pair<int, int> parse_window(const std::string& w);

struct SweepRow {
    std::string spec_ids;
    Rat h_difference;
    std::optional<bool> thm33, thm34, thm23_set_hit, oracle;
    std::optional<std::size_t> rank, full_rank;
    bool skipped = false;  // dimension cap hit
    bool agree = true;
};

std::vector<SweepRow> run_sweep(const SweepJob& job, bool parallel = true);
std::string rows_csv(const std::vector<SweepRow>& rows);
json rows_json(const std::vector<SweepRow>& rows);

}  // namespace yangirr::cli
