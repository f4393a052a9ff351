#pragma once

// Exhaustive labelled-graph counting. A graph on n vertices is an edge
// bitmask over the C(n,2) vertex pairs, in the same pair order as the
// packed alternating-matrix coordinates, so masks translate directly into
// spaces. Deliberately naive: every graph is visited and tested.

#include <cstdint>
#include <utility>
#include <vector>

#include "altcount/bigint.hpp"

namespace altcount::oracle {

struct GraphBudget {
    std::uint64_t max_graphs = std::uint64_t(1) << 21;      // n <= 7
    std::uint64_t max_graph_coloring_pairs = std::uint64_t(1) << 21;
    int jobs = 1;
};

std::vector<std::pair<int, int>> edges_from_mask(std::uint32_t mask, int n);

bool mask_is_connected(std::uint32_t mask, int n);
bool mask_has_no_isolated_vertex(std::uint32_t mask, int n);

BigNat count_connected(int n, const GraphBudget& budget = {});
BigNat count_no_isolated(int n, const GraphBudget& budget = {});
BigNat count_connected_no_isolated(int n, const GraphBudget& budget = {});

// Pairs (graph, ordered partition of the vertices into c nonempty
// independent classes), i.e. surjective proper c-colorings.
BigNat count_colored_pairs(int n, int c, const GraphBudget& budget = {});

} // namespace altcount::oracle
