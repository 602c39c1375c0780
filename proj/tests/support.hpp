#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <cdgraph.hpp>

namespace support {

using namespace cdgraph;

/// Connected G(n, p) sample: rejection until connected.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    for (;;) {
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (is_connected(g)) return g;
    }
}

/// Sperner hypergraph on n vertices from up to q random non-empty edges.
inline Hypergraph random_sperner_hypergraph(std::size_t n, std::size_t q, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, n / 2 + 1));
    std::uniform_int_distribution<std::size_t> count(1, q);
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    SetFamily edges;
    for (std::size_t k = count(rng); k > 0; --k) {
        std::shuffle(pool.begin(), pool.end(), rng);
        edges.emplace_back(std::vector<Vertex>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size(rng))));
    }
    return sperner_reduce(Hypergraph(n, std::move(edges)));
}

/**
 * Canonical code: the lexicographically largest upper-triangle adjacency
 * string over vertex orders that list vertices by non-increasing
 * (degree, sorted neighbor degrees).
 */
inline std::vector<bool> canonical_code(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::vector<std::size_t>> key(n);
    for (std::size_t v = 0; v < n; ++v) {
        key[v].push_back(g.degree(static_cast<Vertex>(v)));
        std::vector<std::size_t> nd;
        for (Vertex w : g.neighbor_list(static_cast<Vertex>(v))) nd.push_back(g.degree(w));
        std::sort(nd.rbegin(), nd.rend());
        key[v].insert(key[v].end(), nd.begin(), nd.end());
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });

    // permute only within runs of equal keys
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && key[order[j]] == key[order[i]]) ++j;
        runs.emplace_back(i, j);
        i = j;
    }
    std::vector<bool> best;
    std::function<void(std::size_t)> walk = [&](std::size_t r) {
        if (r == runs.size()) {
            std::vector<bool> code;
            code.reserve(n * (n - 1) / 2 + 1);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    code.push_back(g.adjacent(static_cast<Vertex>(order[i]), static_cast<Vertex>(order[j])));
            if (best.empty() || code > best) best = std::move(code);
            return;
        }
        auto [lo, hi] = runs[r];
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
        do walk(r + 1);
        while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                     order.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    walk(0);
    std::vector<bool> with_order(8); // order prefix keeps K1 and K0 apart
    for (std::size_t b = 0; b < 8; ++b) with_order[b] = (n >> b) & 1u;
    with_order.insert(with_order.end(), best.begin(), best.end());
    return with_order;
}

/// One representative per isomorphism class of graphs on exactly n vertices.
inline std::vector<Graph> all_graphs(std::size_t n)
{
    if (n == 0) return {Graph(0)};
    std::map<std::vector<bool>, Graph> classes;
    for (const Graph& base : all_graphs(n - 1))
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            Graph g(n);
            for (auto [u, v] : base.edges()) g.add_edge(u, v);
            for (std::size_t u = 0; u + 1 < n; ++u)
                if (mask >> u & 1u) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(n - 1));
            classes.emplace(canonical_code(g), std::move(g));
        }
    std::vector<Graph> out;
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

inline std::vector<Graph> all_connected_graphs(std::size_t n)
{
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

/// Induced subgraph on a bit mask of vertices.
inline Graph induced_on_mask(const Graph& g, std::uint32_t mask)
{
    std::vector<Vertex> keep;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (mask >> v & 1u) keep.push_back(static_cast<Vertex>(v));
    return induced_subgraph(g, VertexSet(keep)).graph;
}

/// Memoized hereditary properties over vertex deletion, keyed by canonical code.
class HereditaryOracle
{
public:
    /// Every connected induced subgraph is CD.
    bool all_induced_cd(const Graph& g) { return walk(g, cd_cache_, [](const Graph& h) { return recognize_cd(h).positive; }); }

    /// Every connected induced subgraph has a 1-Sperner cutset hypergraph.
    bool all_induced_one_sperner(const Graph& g)
    {
        return walk(g, sperner_cache_, [](const Graph& h) {
            return h.is_complete() || check_family_property(cutset_hypergraph(h), FamilyProperty::one_sperner).holds;
        });
    }

private:
    using Cache = std::map<std::vector<bool>, bool>;

    template <class Test>
    bool walk(const Graph& g, Cache& cache, const Test& test)
    {
        auto code = canonical_code(g);
        if (auto it = cache.find(code); it != cache.end()) return it->second;
        bool ok = !is_connected(g) || test(g);
        for (Vertex v = 0; ok && v < static_cast<Vertex>(g.order()); ++v)
            ok = walk(induced_subgraph(g, g.vertices().without(v)).graph, cache, test);
        cache.emplace(std::move(code), ok);
        return ok;
    }

    Cache cd_cache_, sperner_cache_;
};

} // namespace support
