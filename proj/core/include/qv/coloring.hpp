// Graph coloring as independent covers: exact chromatic number by
// backtracking for small graphs, DSATUR greedy (upper bound, flagged)
// beyond that. Hyperedges make every pair of their vertices adjacent.

#pragma once

#include "qv/states.hpp"

namespace qv {

struct ColoringResult {
    std::vector<std::vector<int>> sets;  // disjoint independent sets covering V
    int colors = 0;
    bool exact = true;  // false when DSATUR was used (upper bound only)

    std::vector<int> sizes() const;
};

// Pairwise adjacency induced by the edge list (co-occurrence in any edge).
std::vector<std::vector<bool>> adjacency(const GraphSpec& g);

ColoringResult color_graph(const GraphSpec& g);

}  // namespace qv
