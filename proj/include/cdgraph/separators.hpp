#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "cdgraph/graph.hpp"
#include "cdgraph/hypergraph.hpp"

namespace cdgraph {

inline constexpr std::size_t kDefaultSeparatorBudget = 1'000'000;

namespace detail {

inline void require_connected(const Graph& g)
{
    if (!is_connected(g)) throw DisconnectedGraph("graph is disconnected");
}

} // namespace detail

/**
 * All minimal vertex separators of a connected graph, in shortlex order.
 *
 * Seeds are N(C) for components C of g - N[v]; the family is then closed
 * under S -> N(C) for components C of g - (S ∪ N[x]), x in S.
 * Throws BudgetExceeded once more than `budget` separators are found.
 */
inline SetFamily minimal_separators(const Graph& g, std::size_t budget = kDefaultSeparatorBudget)
{
    detail::require_connected(g);
    const std::size_t n = g.order();
    std::set<Bits> seen;
    std::vector<Bits> queue;

    auto harvest = [&](const Bits& removed) {
        for (const Bits& c : components_within(g, g.all_bits() - removed)) {
            Bits s = neighborhood_of(g, c);
            if (s.none() || !seen.insert(s).second) continue;
            if (seen.size() > budget)
                throw BudgetExceeded("more than " + std::to_string(budget) + " minimal separators");
            queue.push_back(std::move(s));
        }
    };

    for (std::size_t v = 0; v < n; ++v) {
        Bits closed = g.neighbor_bits(static_cast<Vertex>(v));
        closed.set(v);
        harvest(closed);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const Bits s = queue[i];
        for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x))
            harvest(s | g.neighbor_bits(static_cast<Vertex>(x)));
    }

    SetFamily out;
    out.reserve(seen.size());
    for (const auto& s : seen) out.push_back(VertexSet::from_bits(s));
    canonicalize(out);
    return out;
}

/**
 * True iff u and v are in different components of g - s and every vertex
 * of s has a neighbor in both of those components.
 */
inline bool is_minimal_uv_separator(const Graph& g, const VertexSet& s, Vertex u, Vertex v)
{
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw InvalidInput("vertex out of range");
    if (u == v || s.contains(u) || s.contains(v) || g.adjacent(u, v))
        throw InvalidInput("u and v must be distinct, non-adjacent and outside s");
    for (Vertex x : s)
        if (!g.has_vertex(x)) throw InvalidInput("vertex " + std::to_string(x) + " out of range");

    const Bits removed = s.to_bits(g.order());
    Bits cu, cv;
    for (const Bits& c : components_within(g, g.all_bits() - removed)) {
        if (c.test(static_cast<std::size_t>(u))) cu = c;
        if (c.test(static_cast<std::size_t>(v))) cv = c;
    }
    if (cu == cv) return false;
    for (Vertex x : s)
        if (!g.neighbor_bits(x).intersects(cu) || !g.neighbor_bits(x).intersects(cv)) return false;
    return true;
}

/// Inclusion-minimal members of minimal_separators(g).
inline SetFamily minimal_cutsets(const Graph& g, std::size_t budget = kDefaultSeparatorBudget)
{
    return inclusion_minimal(minimal_separators(g, budget));
}

/// Hypergraph on V(g) whose edges are the minimal cutsets.
inline Hypergraph cutset_hypergraph(const Graph& g, std::size_t budget = kDefaultSeparatorBudget)
{
    return Hypergraph(g.order(), minimal_cutsets(g, budget));
}

} // namespace cdgraph
