#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mlines/distance_matrix.hpp"
#include "mlines/graph.hpp"

namespace mlines {

enum class Status { Pass, Fail, Exempt, PreconditionUnmet };
std::string_view status_name(Status s);

// One named check evaluated on one instance. Failures always carry a witness;
// exemptions name their reason; metrics hold the quantities the check
// computed along the way.
struct Verdict {
    std::string check;
    std::string instance;
    Status status = Status::Pass;
    nlohmann::json witness;  // null unless fail or exempt
    std::map<std::string, std::int64_t> metrics;
};

// Fewer lines than points forces a universal line.
Verdict check_chen_chvatal(const DistanceMatrix& d, const std::string& id);

// Distance-2 lines plus bridges reach the vertex count for connected
// bipartite graphs, except on the 4-cycle and K_{2,3}.
Verdict check_br_bound(const Graph& g, const std::string& id);

// 2-connected bipartite twin-free graphs have at least |G| distance-2 lines;
// cross-checked against the constructive partner assignment.
Verdict check_notwins_bound(const Graph& g, const std::string& id);

// Non-universal lines plus universal pairs reach the point count on 2-metrics.
Verdict check_up_bound(const DistanceMatrix& d, const std::string& id);

// The base-point line families vF, vS, S*, FS and their counting and
// disjointness facts, for one base point or aggregated over all of them.
Verdict check_line_families(const DistanceMatrix& d, int base_point, const std::string& id);
Verdict check_line_families_all(const DistanceMatrix& d, const std::string& id);

// Removing one twin: the non-universal line count drops by at least
// 2|U| + |W|, and universal pairs survive except those absorbed by U.
Verdict check_twin_removal(const DistanceMatrix& d, const std::string& id);

// Bundle of structural facts about distance-2 lines: cut structure inside a
// line, universal distance-2 pairs, the cut-vertex composition bound,
// consequences of two pairs generating one line, and the twin-deletion
// relations. Clauses self-gate on their own hypotheses.
Verdict check_structural(const Graph& g, const std::string& id);

// The six exceptional graphs beat the line-plus-bridge bound and carry at
// least two universal pairs each.
Verdict check_exceptional_graphs(const std::string& fixture_name);

}  // namespace mlines
