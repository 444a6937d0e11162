#pragma once

#include <optional>

#include "graphlap/constructions.hpp"

namespace graphlap {

/// h equal-length paths from v_i to v_j, as vertex sequences plus the edge
/// copy taken at each step. Position k of every path is the "layer k" edge.
struct PathSystem {
    int i = 0;
    int j = 0;
    std::vector<std::vector<int>> vertices;   // each of size length + 1
    std::vector<std::vector<EdgeRef>> edges;  // each of size length
    long length() const { return edges.empty() ? 0 : static_cast<long>(edges[0].size()); }
};

/// True iff PS is a valid system of paths: well-formed equal-length paths with
/// distinct edges, consistent shared numbering, every layer's removal
/// separating v_i from v_j, and every path a shortest path.
bool verify_path_system(const Multigraph& g, const PathSystem& ps);

/// The pair has order 1 iff v_i reaches v_j inside the bridges-only subgraph.
bool order_one_pair(const Multigraph& g, int i, int j);

/// Spreadness of the Laplacian, decided combinatorially: no pair of order 1
/// iff the graph is multiply connected.
bool spread_check(const Multigraph& g);

enum class SearchStatus { found, absent, budget_exceeded };

struct TwoPathResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<PathSystem> system;
};

/// Search for a system of 2 (distinct, possibly overlapping) paths between
/// v_i and v_j. Exponential; `budget` caps the number of enumerated shortest
/// paths.
TwoPathResult order_two_certificate(const Multigraph& g, int i, int j, long budget = 200000);

/// Transport a verified path system to a marking with h = number of paths
/// (weight = layer number; shared edges of a 2-system advance the weight by 2;
/// off-system components inherit their contact weight).
Marking marking_from_path_system(const Multigraph& g, const PathSystem& ps);

/// Serialize a system as `s <path> <pos> <i> <j> <copy>` lines after the graph.
void write_path_system(std::ostream& out, const Multigraph& g, const PathSystem& ps);

}  // namespace graphlap
