#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlines/distance_matrix.hpp"
#include "mlines/enumeration.hpp"
#include "mlines/graph.hpp"
#include "mlines/verification.hpp"

namespace mlines {

// One unit of work for the suite: a graph, a metric, or both (graphs carry
// their induced metric when connected).
struct Instance {
    std::string id;
    std::optional<Graph> graph;
    std::optional<DistanceMatrix> metric;
    std::vector<std::string> vertex_names;
    bool is_fixture = false;
};

// Sink returns false to stop the stream early.
using InstanceSink = std::function<bool(Instance&&)>;
using InstanceSource = std::function<void(const InstanceSink&)>;

InstanceSource family_source(const FamilySpec& spec);
InstanceSource fixture_source(const std::vector<std::string>& names);  // throws on unknown name
InstanceSource graph6_file_source(const std::string& path);
InstanceSource metric_file_source(const std::string& path);
InstanceSource concat_sources(std::vector<InstanceSource> sources);

// Compact self-describing ids: graph6 for graphs, "m<n>:<digits>" for
// metrics (upper triangle, row-major).
std::string metric_instance_id(const DistanceMatrix& d);

struct CheckDef {
    std::string name;
    std::string summary;
    std::function<Verdict(const Instance&)> run;
};

const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(std::string_view name);  // null when unknown

struct CheckTally {
    std::int64_t pass = 0, fail = 0, exempt = 0, unmet = 0;
};

struct SuiteReport {
    std::map<std::string, CheckTally> by_check;
    std::vector<Verdict> failures;
    std::int64_t instances = 0;
    bool complete = true;
    std::int64_t total_fails() const;
};

struct SuiteOptions {
    int jobs = 1;
    std::int64_t max_instances = -1;  // budget; -1 means unlimited
    bool timings = false;             // adds duration_ms to emitted verdicts
    // Called in instance-stream order regardless of worker count.
    std::function<void(const Verdict&, std::int64_t duration_ms)> on_verdict;
};

SuiteReport run_suite(const InstanceSource& source, const std::vector<const CheckDef*>& checks,
                      const SuiteOptions& options);

// JSONL/CSV/plain-text emission for verdicts and summaries.
std::string verdict_jsonl(const Verdict& v, bool with_timing = false,
                          std::int64_t duration_ms = 0);
std::string summary_csv(const SuiteReport& report);
std::string summary_human(const SuiteReport& report);

}  // namespace mlines
