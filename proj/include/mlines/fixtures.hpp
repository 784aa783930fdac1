#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mlines/graph.hpp"

namespace mlines {

// Embedded named graphs: the six exceptional graphs of the line-plus-bridge
// bound, the base-point family demonstration graph, and two squares glued at
// a vertex. They double as golden test instances.
struct Fixture {
    std::string name;
    Graph graph;
    std::vector<std::string> vertex_names;  // empty means numeric labels
    std::string description;
};

const std::vector<Fixture>& all_fixtures();
const Fixture* find_fixture(std::string_view name);  // case-insensitive; null when unknown

// Names of the six graphs exempted from the line-plus-bridge bound.
const std::vector<std::string>& exceptional_fixture_names();

}  // namespace mlines
