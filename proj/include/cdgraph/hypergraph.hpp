#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdgraph/graph.hpp"

namespace cdgraph {

/**
 * Hypergraph on vertices 0..n-1. The edge list is kept duplicate-free and
 * in shortlex order; edges need not form a Sperner family.
 */
class Hypergraph
{
  public:
    Hypergraph() = default;
    Hypergraph(std::size_t n, SetFamily edges) : n_(n), edges_(std::move(edges))
    {
        for (const auto& e : edges_)
            for (Vertex v : e)
                if (v < 0 || static_cast<std::size_t>(v) >= n_)
                    throw InvalidInput("hyperedge vertex " + std::to_string(v) + " outside universe of size " +
                                       std::to_string(n_));
        canonicalize(edges_);
        bits_.reserve(edges_.size());
        for (const auto& e : edges_) bits_.push_back(e.to_bits(n_));
    }

    std::size_t order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const SetFamily& edges() const { return edges_; }
    const std::vector<Bits>& edge_bits() const { return bits_; }

    bool has_empty_edge() const { return !edges_.empty() && edges_.front().empty(); }

    /// Vertices that lie in at least one edge.
    VertexSet essential_vertices() const
    {
        Bits any(n_);
        for (const auto& b : bits_) any |= b;
        return VertexSet::from_bits(any);
    }

    /// True iff x contains some edge.
    bool contains_edge(const Bits& x) const
    {
        return std::any_of(bits_.begin(), bits_.end(), [&](const Bits& e) { return e.is_subset_of(x); });
    }
    bool contains_edge(const VertexSet& x) const { return contains_edge(x.to_bits(n_)); }

    /// True iff x meets every edge.
    bool is_transversal(const Bits& x) const
    {
        return std::all_of(bits_.begin(), bits_.end(), [&](const Bits& e) { return e.intersects(x); });
    }
    bool is_transversal(const VertexSet& x) const { return is_transversal(x.to_bits(n_)); }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

  private:
    std::size_t n_ = 0;
    SetFamily edges_;
    std::vector<Bits> bits_;
};

inline Hypergraph sperner_reduce(const Hypergraph& h) { return Hypergraph(h.order(), inclusion_minimal(h.edges())); }

enum class FamilyProperty { sperner, one_sperner, dually_sperner };

inline FamilyProperty parse_family_property(std::string_view s)
{
    if (s == "sperner") return FamilyProperty::sperner;
    if (s == "one-sperner" || s == "one_sperner" || s == "1-sperner") return FamilyProperty::one_sperner;
    if (s == "dually-sperner" || s == "dually_sperner") return FamilyProperty::dually_sperner;
    throw InvalidInput("unknown property '" + std::string(s) + "'");
}

struct PropertyCheck
{
    bool holds = true;
    std::optional<std::pair<VertexSet, VertexSet>> witness;
};

/// Checks min(|e\f|, |f\e|) against the property over all pairs of distinct edges.
inline PropertyCheck check_family_property(const Hypergraph& h, FamilyProperty prop)
{
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            std::size_t d = std::min((edges[i] - edges[j]).size(), (edges[j] - edges[i]).size());
            bool ok = prop == FamilyProperty::sperner        ? d >= 1
                      : prop == FamilyProperty::one_sperner ? d == 1
                                                            : d <= 1;
            if (!ok) return {false, std::make_pair(edges[i], edges[j])};
        }
    return {};
}

/**
 * Blocker of h by edge-by-edge multiplication with absorption.
 * No edges gives {∅}; an empty edge gives no transversals.
 */
inline Hypergraph minimal_transversals(const Hypergraph& h)
{
    const std::size_t n = h.order();
    if (h.edge_count() == 0) return Hypergraph(n, {VertexSet{}});
    if (h.has_empty_edge()) return Hypergraph(n, {});

    const Hypergraph reduced = sperner_reduce(h);
    std::vector<Bits> current{Bits(n)};
    for (const Bits& e : reduced.edge_bits()) {
        std::vector<Bits> kept, missing;
        for (auto& t : current) (t.intersects(e) ? kept : missing).push_back(std::move(t));

        // a kept set inside t+v must contain v, so index kept sets by vertex
        std::vector<std::vector<std::size_t>> by_vertex(n);
        for (std::size_t k = 0; k < kept.size(); ++k)
            for (auto v = kept[k].find_first(); v != Bits::npos; v = kept[k].find_next(v))
                if (e.test(v)) by_vertex[v].push_back(k);

        std::set<Bits> fresh;
        for (const Bits& t : missing)
            for (auto v = e.find_first(); v != Bits::npos; v = e.find_next(v)) {
                Bits c = t;
                c.set(v);
                bool absorbed = std::any_of(by_vertex[v].begin(), by_vertex[v].end(),
                                            [&](std::size_t k) { return kept[k].is_subset_of(c); });
                if (!absorbed) fresh.insert(std::move(c));
            }
        std::vector<Bits> candidates(fresh.begin(), fresh.end());
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
                dominated = j != i && candidates[j].is_proper_subset_of(candidates[i]);
            if (!dominated) kept.push_back(candidates[i]);
        }
        current = std::move(kept);
    }

    SetFamily out;
    out.reserve(current.size());
    for (const auto& b : current) out.push_back(VertexSet::from_bits(b));
    return Hypergraph(n, std::move(out));
}

/// Inclusion-minimal open neighborhoods of g.
inline Hypergraph neighborhood_hypergraph(const Graph& g)
{
    SetFamily nbhds;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) nbhds.push_back(g.neighbors(v));
    return Hypergraph(g.order(), inclusion_minimal(std::move(nbhds)));
}

struct SplitIncidence
{
    Graph graph;
    SetFamily labels; ///< labels[j] is the hyperedge of vertex order()+j
};

/// Vertices 0..n-1 form a clique; vertex n+j is adjacent to the members of edge j.
inline SplitIncidence split_incidence_graph(const Hypergraph& h)
{
    if (h.has_empty_edge()) throw InvalidInput("split-incidence graph undefined with an empty hyperedge");
    if (!check_family_property(h, FamilyProperty::sperner).holds)
        throw InvalidInput("split-incidence graph needs a Sperner hypergraph");
    const std::size_t n = h.order();
    SplitIncidence out{Graph(n + h.edge_count()), h.edges()};
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) out.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    for (std::size_t j = 0; j < h.edge_count(); ++j)
        for (Vertex v : h.edges()[j]) out.graph.add_edge(v, static_cast<Vertex>(n + j));
    return out;
}

} // namespace cdgraph
