#include "altcount/graph_oracle.hpp"

#include <sstream>

#include "altcount/altspace.hpp"
#include "altcount/parallel.hpp"

namespace altcount::oracle {

namespace {

void check_graph_budget(int n, std::uint64_t required, std::uint64_t allowed, const char* what) {
    if (n < 0)
        throw std::domain_error("graph oracle: n must be nonnegative");
    if (n > 7 || required > allowed) {
        std::ostringstream os;
        os << what << ": " << required << " objects at n = " << n
           << " exceeds the budget of " << allowed;
        throw budget_error(os.str());
    }
}

std::uint64_t graph_total(int n) { return std::uint64_t(1) << pair_count(n); }

// Adjacency bitmasks per vertex for one edge mask.
void adjacency(std::uint32_t mask, int n, std::uint8_t adj[8]) {
    for (int v = 0; v < n; ++v)
        adj[v] = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> pair_index(i, j, n) & 1) {
                adj[i] |= std::uint8_t(1) << j;
                adj[j] |= std::uint8_t(1) << i;
            }
}

} // namespace

std::vector<std::pair<int, int>> edges_from_mask(std::uint32_t mask, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> pair_index(i, j, n) & 1)
                edges.emplace_back(i, j);
    return edges;
}

bool mask_is_connected(std::uint32_t mask, int n) {
    if (n == 0)
        return true;
    std::uint8_t adj[8];
    adjacency(mask, n, adj);
    std::uint8_t visited = 1, frontier = 1;
    const std::uint8_t all = static_cast<std::uint8_t>((1u << n) - 1);
    while (frontier) {
        std::uint8_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1)
                next |= adj[v];
        frontier = static_cast<std::uint8_t>(next & ~visited);
        visited |= next;
    }
    return visited == all;
}

bool mask_has_no_isolated_vertex(std::uint32_t mask, int n) {
    std::uint8_t adj[8];
    adjacency(mask, n, adj);
    for (int v = 0; v < n; ++v)
        if (!adj[v])
            return false;
    return true;
}

BigNat count_connected(int n, const GraphBudget& budget) {
    if (n < 1)
        throw std::domain_error("count_connected: n must be at least 1");
    check_graph_budget(n, graph_total(n), budget.max_graphs, "count_connected");
    return parallel_sum(graph_total(n), budget.jobs, [n](std::size_t mask) {
        return BigNat(mask_is_connected(static_cast<std::uint32_t>(mask), n) ? 1 : 0);
    });
}

BigNat count_no_isolated(int n, const GraphBudget& budget) {
    check_graph_budget(n, graph_total(n), budget.max_graphs, "count_no_isolated");
    return parallel_sum(graph_total(n), budget.jobs, [n](std::size_t mask) {
        return BigNat(mask_has_no_isolated_vertex(static_cast<std::uint32_t>(mask), n) ? 1 : 0);
    });
}

BigNat count_connected_no_isolated(int n, const GraphBudget& budget) {
    if (n < 1)
        throw std::domain_error("count_connected_no_isolated: n must be at least 1");
    check_graph_budget(n, graph_total(n), budget.max_graphs, "count_connected_no_isolated");
    return parallel_sum(graph_total(n), budget.jobs, [n](std::size_t mask) {
        const auto m = static_cast<std::uint32_t>(mask);
        return BigNat(mask_is_connected(m, n) && mask_has_no_isolated_vertex(m, n) ? 1 : 0);
    });
}

BigNat count_colored_pairs(int n, int c, const GraphBudget& budget) {
    if (n < 0 || c < 1)
        throw std::domain_error("count_colored_pairs: need n >= 0, c >= 1");

    // Surjective colorings, each reduced to the mask of monochromatic pairs;
    // a coloring is proper for a graph iff the graph avoids all of them.
    std::uint64_t colorings = 1;
    for (int v = 0; v < n; ++v)
        colorings *= static_cast<std::uint64_t>(c);
    check_graph_budget(n, graph_total(n) * std::max<std::uint64_t>(colorings, 1),
                       budget.max_graph_coloring_pairs, "count_colored_pairs");

    std::vector<std::uint32_t> same_color_masks;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    for (std::uint64_t code = 0; code < colorings; ++code) {
        std::uint64_t rest = code;
        std::uint32_t used = 0;
        for (int v = 0; v < n; ++v) {
            color[static_cast<std::size_t>(v)] = static_cast<int>(rest % c);
            used |= std::uint32_t(1) << color[static_cast<std::size_t>(v)];
            rest /= c;
        }
        if (used != (std::uint32_t(1) << c) - 1)
            continue; // not surjective: some class empty
        std::uint32_t same = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (color[static_cast<std::size_t>(i)] == color[static_cast<std::size_t>(j)])
                    same |= std::uint32_t(1) << pair_index(i, j, n);
        same_color_masks.push_back(same);
    }

    return parallel_sum(graph_total(n), budget.jobs, [&](std::size_t mask) {
        const auto m = static_cast<std::uint32_t>(mask);
        std::uint64_t hits = 0;
        for (std::uint32_t same : same_color_masks)
            if ((m & same) == 0)
                ++hits;
        return BigNat(static_cast<unsigned long>(hits));
    });
}

} // namespace altcount::oracle
