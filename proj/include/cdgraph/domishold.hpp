#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdgraph/graph.hpp"
#include "cdgraph/hypergraph.hpp"
#include "cdgraph/separators.hpp"
#include "cdgraph/threshold.hpp"

namespace cdgraph {

enum class DominationMode { cd, td };

/// cd: s non-empty, connected and dominating. td: every vertex has a neighbor in s.
inline bool verify_dominating(const Graph& g, const VertexSet& s, DominationMode mode)
{
    for (Vertex v : s)
        if (!g.has_vertex(v)) return false;
    const Bits in = s.to_bits(g.order());
    Bits covered(g.order());
    for (Vertex v : s) covered |= g.neighbor_bits(v);
    if (mode == DominationMode::td) return covered.count() == g.order();
    if (s.empty()) return false;
    covered |= in;
    return covered.count() == g.order() && is_connected_within(g, in);
}

/// Verdict on CD or TD, with a structure when positive.
struct DominationReport
{
    bool positive = false;
    std::optional<WeightedStructure> structure;
    std::optional<Refutation> refutation;   ///< refutes thresholdness of the underlying hypergraph
    std::optional<Hypergraph> hypergraph;   ///< MCH or MNH, when it was built
    bool degenerate = false;
};

namespace detail {

/// (w, w(V) - t): S is a transversal iff V - S is false iff w(S) >= w(V) - t.
inline DominationReport from_separating(const Hypergraph& h, const ThresholdReport& r, Flavor flavor)
{
    DominationReport out;
    out.hypergraph = h;
    out.positive = r.threshold;
    out.refutation = r.refutation;
    if (r.structure) {
        WeightedStructure s = *r.structure;
        s.threshold = s.total_weight() - s.threshold;
        s.flavor = flavor;
        out.structure = std::move(s);
    }
    return out;
}

} // namespace detail

inline DominationReport recognize_cd(const Graph& g, std::size_t budget = kDefaultSeparatorBudget)
{
    const std::size_t n = g.order();
    DominationReport out;
    if (!is_connected(g)) {
        out.positive = true;
        out.degenerate = true;
        out.structure = WeightedStructure{std::vector<Rational>(n), 1, Flavor::cd, true};
        return out;
    }
    if (g.is_complete()) {
        out.positive = true;
        out.structure = WeightedStructure{std::vector<Rational>(n, Rational(1)), 1, Flavor::cd, false};
        return out;
    }
    Hypergraph h = cutset_hypergraph(g, budget);
    return detail::from_separating(h, is_threshold(h), Flavor::cd);
}

/// A graph with an isolated vertex has no total dominating set and is reported as not TD.
inline DominationReport recognize_td(const Graph& g)
{
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
        if (g.degree(v) == 0) return DominationReport{};
    Hypergraph h = neighborhood_hypergraph(g);
    return detail::from_separating(h, is_threshold(h), Flavor::td);
}

/**
 * Minimal connected dominating sets: singletons for complete graphs,
 * otherwise the minimal transversals of the cutset hypergraph.
 */
inline SetFamily enumerate_min_cds(const Graph& g, std::size_t budget = kDefaultSeparatorBudget)
{
    detail::require_connected(g);
    if (g.is_complete()) {
        SetFamily out;
        for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) out.push_back(VertexSet{v});
        return out;
    }
    return minimal_transversals(cutset_hypergraph(g, budget)).edges();
}

/// Checks a cd structure against minimal CD sets and maximal non-CD sets.
inline bool validates_cd(const Graph& g, const WeightedStructure& s)
{
    if (s.weights.size() != g.order() || !s.is_non_negative()) return false;
    const VertexSet all = g.vertices();
    if (!is_connected(g)) return s.weight_of(all) < s.threshold; // no CD sets exist
    for (const auto& d : enumerate_min_cds(g))
        if (s.weight_of(d) < s.threshold) return false;
    if (g.is_complete()) return s.threshold > 0;
    for (const auto& c : minimal_cutsets(g))
        if (s.weight_of(all - c) >= s.threshold) return false;
    return true;
}

/// Checks a td structure against minimal TD sets and maximal non-TD sets.
inline bool validates_td(const Graph& g, const WeightedStructure& s)
{
    if (s.weights.size() != g.order() || !s.is_non_negative()) return false;
    const VertexSet all = g.vertices();
    const Hypergraph h = neighborhood_hypergraph(g);
    if (h.has_empty_edge()) return s.weight_of(all) < s.threshold; // no TD sets exist
    const Hypergraph blocker = minimal_transversals(h);
    for (const auto& d : blocker.edges())
        if (s.weight_of(d) < s.threshold) return false;
    for (const auto& e : h.edges())
        if (s.weight_of(all - e) >= s.threshold) return false;
    return true;
}

struct WcdsSolution
{
    VertexSet set;
    Rational cost = 0;
    std::size_t enumerated_count = 0;
};

/**
 * Minimum-cost connected dominating set under non-negative costs, taken
 * over the minimal CD sets; ties go to the lexicographically least set.
 */
inline WcdsSolution solve_wcds(const Graph& g, const std::vector<Rational>& costs,
                               std::size_t budget = kDefaultSeparatorBudget)
{
    if (costs.size() != g.order())
        throw InvalidInput("expected " + std::to_string(g.order()) + " costs, got " + std::to_string(costs.size()));
    for (std::size_t v = 0; v < costs.size(); ++v)
        if (costs[v] < 0) throw InvalidInput("negative cost for vertex " + std::to_string(v));
    if (g.order() == 0) throw InvalidInput("graph has no vertices");

    const SetFamily candidates = enumerate_min_cds(g, budget);
    std::optional<WcdsSolution> best;
    for (const auto& d : candidates) {
        Rational cost = 0;
        for (Vertex v : d) cost += costs[static_cast<std::size_t>(v)];
        if (!best || cost < best->cost || (cost == best->cost && d.items() < best->set.items()))
            best = WcdsSolution{d, cost, 0};
    }
    best->enumerated_count = candidates.size();
    return *best;
}

} // namespace cdgraph
