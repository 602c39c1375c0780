#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgraph/errors.hpp"
#include "cdgraph/vertex_set.hpp"

namespace cdgraph {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is held twice: as bitsets for O(1) adjacency tests and set
 * algebra, and as sorted neighbor lists for iteration.
 */
class Graph
{
  public:
    Graph() = default;
    explicit Graph(std::size_t n) : bits_(n, Bits(n)), lists_(n) {}

    std::size_t order() const { return lists_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return bits_[idx(u)].test(idx(v)); }
    const Bits& neighbor_bits(Vertex v) const { return bits_[idx(v)]; }
    const std::vector<Vertex>& neighbor_list(Vertex v) const { return lists_[idx(v)]; }
    VertexSet neighbors(Vertex v) const { return VertexSet(lists_[idx(v)]); }
    VertexSet closed_neighborhood(Vertex v) const { return neighbors(v).with(v); }
    std::size_t degree(Vertex v) const { return lists_[idx(v)].size(); }

    bool has_vertex(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }

    VertexSet vertices() const
    {
        std::vector<Vertex> all(order());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
        return VertexSet(std::move(all));
    }

    Bits all_bits() const
    {
        Bits b(order());
        b.set();
        return b;
    }

    /// Throws InvalidInput on self-loops, out-of-range ids and duplicates.
    void add_edge(Vertex u, Vertex v)
    {
        const std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (!has_vertex(u) || !has_vertex(v)) throw InvalidInput("vertex id out of range in edge " + pair);
        if (u == v) throw InvalidInput("self-loop " + pair);
        if (adjacent(u, v)) throw InvalidInput("duplicate edge " + pair);
        bits_[idx(u)].set(idx(v));
        bits_[idx(v)].set(idx(u));
        insert_sorted(lists_[idx(u)], v);
        insert_sorted(lists_[idx(v)], u);
        ++edge_count_;
    }

    /// Adds the edge unless it is already present.
    void connect(Vertex u, Vertex v)
    {
        if (u != v && !adjacent(u, v)) add_edge(u, v);
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t u = 0; u < order(); ++u)
            for (Vertex v : lists_[u])
                if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
        return out;
    }

    bool is_complete() const { return 2 * edge_count_ == order() * (order() ? order() - 1 : 0); }

    bool is_clique(const VertexSet& s) const
    {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!adjacent(s[i], s[j])) return false;
        return true;
    }

    bool is_independent(const VertexSet& s) const
    {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (adjacent(s[i], s[j])) return false;
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.lists_ == b.lists_; }

  private:
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

    static void insert_sorted(std::vector<Vertex>& list, Vertex v)
    {
        list.insert(std::lower_bound(list.begin(), list.end(), v), v);
    }

    std::vector<Bits> bits_;
    std::vector<std::vector<Vertex>> lists_;
    std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, const std::vector<Edge>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

/// Connected components of g restricted to the vertices in `alive`.
inline std::vector<Bits> components_within(const Graph& g, const Bits& alive)
{
    std::vector<Bits> out;
    Bits seen(g.order());
    std::vector<Vertex> stack;
    for (auto s = alive.find_first(); s != Bits::npos; s = alive.find_next(s)) {
        if (seen.test(s)) continue;
        Bits comp(g.order());
        stack.assign(1, static_cast<Vertex>(s));
        seen.set(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.set(static_cast<std::size_t>(v));
            for (Vertex w : g.neighbor_list(v)) {
                auto wi = static_cast<std::size_t>(w);
                if (alive.test(wi) && !seen.test(wi)) {
                    seen.set(wi);
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

/// Components of g, each sorted, listed by minimum element.
inline std::vector<VertexSet> components(const Graph& g)
{
    std::vector<VertexSet> out;
    for (const auto& c : components_within(g, g.all_bits())) out.push_back(VertexSet::from_bits(c));
    return out; // discovery order is already by minimum element
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components_within(g, g.all_bits()).size() == 1; }

inline bool is_connected_within(const Graph& g, const Bits& alive)
{
    return alive.none() || components_within(g, alive).size() == 1;
}

/// Open neighborhood of a vertex set: vertices outside it with a neighbor inside.
inline Bits neighborhood_of(const Graph& g, const Bits& set)
{
    Bits out(g.order());
    for (auto v = set.find_first(); v != Bits::npos; v = set.find_next(v)) out |= g.neighbor_bits(static_cast<Vertex>(v));
    return out - set;
}

struct InducedSubgraph
{
    Graph graph;
    std::vector<Vertex> to_host; ///< local id -> host id
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s)
        if (!g.has_vertex(v)) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) local[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
    InducedSubgraph out{Graph(s.size()), s.items()};
    for (std::size_t i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbor_list(s[i])) {
            int j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<Vertex>(i), j);
        }
    return out;
}

/**
 * Shortest path from `from` to `to` using only vertices in `allowed`
 * (endpoints must be allowed). Neighbors are scanned in increasing order,
 * so the result is deterministic.
 */
inline std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex from, Vertex to, const Bits& allowed)
{
    std::vector<Vertex> parent(g.order(), -1);
    Bits seen(g.order());
    std::deque<Vertex> queue{from};
    seen.set(static_cast<std::size_t>(from));
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (v == to) {
            std::vector<Vertex> path{to};
            while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (Vertex w : g.neighbor_list(v)) {
            auto wi = static_cast<std::size_t>(w);
            if (allowed.test(wi) && !seen.test(wi)) {
                seen.set(wi);
                parent[wi] = v;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

/// Copy of g plus a universal vertex with id g.order().
inline Graph with_universal_vertex(const Graph& g)
{
    Graph out(g.order() + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    auto u = static_cast<Vertex>(g.order());
    for (Vertex v = 0; v < u; ++v) out.add_edge(v, u);
    return out;
}

} // namespace cdgraph
