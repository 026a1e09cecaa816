#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace topo {

using Graph = std::map<int, std::set<int>>;

/**
 * Proper coloring of `graph` with colors 1..num_colors, or nullopt when none
 * exists.
 *
 * Exhaustive backtracking. The next vertex is the uncolored one with the most
 * distinct neighbor colors (ties: more uncolored neighbors, then smallest
 * id); colors are tried in ascending order. The result depends only on the
 * graph.
 */
std::optional<std::map<int, int>> color_graph(const Graph& graph, int num_colors);

/// Connected components of `graph`, each sorted, ordered by smallest member.
std::vector<std::vector<int>> graph_components(const Graph& graph);

} // namespace topo
