#ifndef CWKIT_BUBBLE_HPP
#define CWKIT_BUBBLE_HPP

#include <string>
#include <vector>

#include "cwkit/graph.hpp"

namespace cwkit {

/// Grid-of-sets model of a proper interval graph. columns[c][r] is the set of
/// vertex ids in column c at row r (rows 0-based from the top of the column).
/// Edge rule: vertices in the same column are pairwise adjacent; u in column c
/// at row r and v in column c+1 at row r' are adjacent iff r' <= r.
struct BubbleModel {
    std::vector<std::vector<std::vector<int>>> columns;
    int n = 0;  // bubbles must partition 1..n
};

Graph bubble_to_graph(const BubbleModel& b);
Graph bubble_to_graph(const BubbleModel& b, const std::vector<std::string>& names);

/// Canonical k-row model of path_power(k, n): column-major, layout order.
BubbleModel path_power_bubbles(int k, int n);

/// Deterministic ASCII rendering; marks the named vertex when given.
std::string render_bubbles(const BubbleModel& b, const Graph& g, const std::string& mark = "");

}  // namespace cwkit

#endif
