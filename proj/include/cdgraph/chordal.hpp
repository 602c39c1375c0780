#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cdgraph/graph.hpp"

namespace cdgraph {

struct ChordalityReport
{
    bool chordal = false;
    std::optional<std::vector<Vertex>> peo; ///< perfect elimination ordering
    std::optional<VertexSet> hole;          ///< vertex set of a chordless cycle, length >= 4
    std::vector<Vertex> hole_cycle;         ///< the same hole in cyclic order
};

/// Maximum cardinality search visit order; ties go to the smallest id.
inline std::vector<Vertex> maximum_cardinality_search(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
        visited[best] = true;
        order.push_back(static_cast<Vertex>(best));
        for (Vertex w : g.neighbor_list(static_cast<Vertex>(best)))
            if (!visited[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
    return order;
}

namespace detail {

/// Hole through v whose v-neighbors on the cycle are a and b, if one exists.
inline std::optional<std::vector<Vertex>> hole_through(const Graph& g, Vertex v, Vertex a, Vertex b)
{
    Bits allowed = g.all_bits() - g.neighbor_bits(v);
    allowed.reset(static_cast<std::size_t>(v));
    allowed.set(static_cast<std::size_t>(a));
    allowed.set(static_cast<std::size_t>(b));
    auto path = shortest_path(g, a, b, allowed);
    if (!path) return std::nullopt;
    std::vector<Vertex> cycle{v};
    cycle.insert(cycle.end(), path->begin(), path->end());
    return cycle;
}

} // namespace detail

/**
 * Chordality test. MCS yields a candidate elimination ordering which is
 * verified; on failure a chordless hole is extracted, first around the
 * vertex where verification failed, then by a full scan.
 */
inline ChordalityReport is_chordal(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<Vertex> visit = maximum_cardinality_search(g);
    std::vector<Vertex> peo(visit.rbegin(), visit.rend());
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(peo[i])] = i;

    std::optional<std::pair<Vertex, std::pair<Vertex, Vertex>>> failure;
    for (std::size_t i = 0; i < n && !failure; ++i) {
        Vertex v = peo[i];
        std::vector<Vertex> later;
        for (Vertex w : g.neighbor_list(v))
            if (pos[static_cast<std::size_t>(w)] > i) later.push_back(w);
        for (std::size_t x = 0; x < later.size() && !failure; ++x)
            for (std::size_t y = x + 1; y < later.size(); ++y)
                if (!g.adjacent(later[x], later[y])) {
                    failure = {v, {later[x], later[y]}};
                    break;
                }
    }

    ChordalityReport report;
    if (!failure) {
        report.chordal = true;
        report.peo = std::move(peo);
        return report;
    }

    auto [v, ab] = *failure;
    auto cycle = detail::hole_through(g, v, ab.first, ab.second);
    for (Vertex c = 0; !cycle && c < static_cast<Vertex>(n); ++c) {
        const auto& nb = g.neighbor_list(c);
        for (std::size_t x = 0; x < nb.size() && !cycle; ++x)
            for (std::size_t y = x + 1; y < nb.size() && !cycle; ++y)
                if (!g.adjacent(nb[x], nb[y])) cycle = detail::hole_through(g, c, nb[x], nb[y]);
    }
    if (!cycle) throw InternalError("elimination ordering failed but no hole was found");
    report.hole = VertexSet(*cycle);
    report.hole_cycle = std::move(*cycle);
    return report;
}

struct SplitPartition
{
    VertexSet clique;
    VertexSet independent;
};

/**
 * Split partition with a maximum clique side, lexicographically least
 * among the maximum ones; nullopt if g is not split.
 */
inline std::optional<SplitPartition> split_partition(const Graph& g)
{
    const std::size_t n = g.order();
    if (n == 0) return SplitPartition{};
    std::vector<Vertex> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    // Hammer-Simeone degree-sequence test
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(by_degree[i]) + 1 >= i + 1) m = i + 1;
    std::size_t top = 0, rest = 0;
    for (std::size_t i = 0; i < n; ++i) (i < m ? top : rest) += g.degree(by_degree[i]);
    if (top != m * (m - 1) + rest) return std::nullopt;

    VertexSet clique(std::vector<Vertex>(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(m)));
    VertexSet independent = g.vertices() - clique;
    if (!g.is_clique(clique) || !g.is_independent(independent))
        throw InternalError("degree-sequence split test disagrees with the extracted partition");

    // every other maximum split clique is clique - x + y for y in I with N(y) = clique - x
    VertexSet best = clique;
    for (Vertex y : independent) {
        if (g.degree(y) + 1 != clique.size()) continue;
        VertexSet missing = clique - g.neighbors(y);
        if (missing.size() != 1) continue;
        Vertex x = missing.front();
        bool x_free = std::none_of(independent.begin(), independent.end(),
                                   [&](Vertex z) { return z != y && g.adjacent(x, z); });
        if (!x_free) continue;
        VertexSet candidate = clique.without(x).with(y);
        if (candidate.items() < best.items()) best = candidate;
    }
    return SplitPartition{best, g.vertices() - best};
}

} // namespace cdgraph
