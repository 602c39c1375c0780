#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cdgraph/graph.hpp"

namespace cdgraph {

// Deterministic constructions. Vertex numbering is part of each contract
// and is relied on by tests and certificates.

inline Graph cycle_graph(std::size_t n)
{
    if (n < 3) throw InvalidInput("cycle needs n >= 3");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return g;
}

inline Graph path_graph(std::size_t n)
{
    if (n < 1) throw InvalidInput("path needs n >= 1");
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return g;
}

inline Graph complete_graph(std::size_t n)
{
    if (n < 1) throw InvalidInput("complete graph needs n >= 1");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return g;
}

/// K_{1,n}: center 0, leaves 1..n.
inline Graph star_graph(std::size_t n)
{
    if (n < 1) throw InvalidInput("star needs n >= 1");
    Graph g(n + 1);
    for (std::size_t i = 1; i <= n; ++i) g.add_edge(0, static_cast<Vertex>(i));
    return g;
}

/// K4 minus an edge: centers 0,1; tips 2,3.
inline Graph diamond_graph() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

/// Diamond (centers 0,1; tips 2,3) plus pendant 4 attached to tip 3.
inline Graph kite_graph() { return build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {3, 4}}); }

inline Graph two_k2_graph() { return build_graph(4, {{0, 1}, {2, 3}}); }

/// C4 on 0..3 plus vertex 4 pendant at 3.
inline Graph c4_with_pendant() { return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}); }

/**
 * K_n with a triangle glued on every edge: clique u_1..u_n = 0..n-1, then
 * one tip per pair i<j in lexicographic order, adjacent to u_i and u_j.
 */
inline Graph kstar_graph(std::size_t n)
{
    if (n < 4) throw InvalidInput("kstar needs n >= 4");
    Graph g(n + n * (n - 1) / 2);
    auto tip = static_cast<Vertex>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            g.add_edge(static_cast<Vertex>(i), tip);
            g.add_edge(static_cast<Vertex>(j), tip);
            ++tip;
        }
    return g;
}

/// Id of the kstar tip over clique vertices i < j (0-based).
inline Vertex kstar_tip(std::size_t n, std::size_t i, std::size_t j)
{
    std::size_t offset = 0;
    for (std::size_t a = 0; a < i; ++a) offset += n - 1 - a;
    return static_cast<Vertex>(n + offset + (j - i - 1));
}

/// Clique u_i = i-1, independent v_i = n+i-1; u_i sees every v_j except v_i.
inline Graph ssplit_graph(std::size_t n)
{
    if (n < 2) throw InvalidInput("ssplit needs n >= 2");
    Graph g(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(n + j));
    }
    return g;
}

/**
 * n copies of P4 (x, a_i, b_i, y) sharing x = 0 and y = 1; a_i = 2+4i,
 * b_i = 3+4i, with pendants a_i' = 4+4i and b_i' = 5+4i.
 */
inline Graph gchain_graph(std::size_t n)
{
    if (n < 2) throw InvalidInput("gchain needs n >= 2");
    Graph g(4 * n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        auto a = static_cast<Vertex>(2 + 4 * i), b = a + 1, ap = a + 2, bp = a + 3;
        g.add_edge(0, a);
        g.add_edge(a, b);
        g.add_edge(b, 1);
        g.add_edge(a, ap);
        g.add_edge(b, bp);
    }
    return g;
}

/// The 62 hyperedges over v_1..v_9 (ids 0..8), in shortlex order.
inline std::vector<VertexSet> appendix_hyperedges()
{
    static constexpr const char* kEdges[] = {
        "169", "179", "189", "258", "259", "268", "269", "278", "279", "289", "347", "348", "349",
        "357", "358", "359", "367", "368", "369", "378", "379", "389", "456", "457", "458", "459",
        "467", "468", "469", "478", "479", "489", "567", "568", "569", "578", "579", "589", "678",
        "679", "689", "789", "1234", "1235", "1236", "1237", "1238", "1239", "1245", "1246", "1247",
        "1248", "1249", "1256", "1257", "1267", "1345", "1346", "1356", "2345", "2346", "2356"};
    std::vector<VertexSet> out;
    for (const char* e : kEdges) {
        std::vector<Vertex> members;
        for (const char* c = e; *c; ++c) members.push_back(*c - '1');
        out.emplace_back(std::move(members));
    }
    return out;
}

/// Clique v_1..v_9 = 0..8; vertex 9+j is adjacent exactly to appendix hyperedge j.
inline Graph appendix71_graph()
{
    auto edges = appendix_hyperedges();
    Graph g(9 + edges.size());
    for (Vertex i = 0; i < 9; ++i)
        for (Vertex j = i + 1; j < 9; ++j) g.add_edge(i, j);
    for (std::size_t j = 0; j < edges.size(); ++j)
        for (Vertex v : edges[j]) g.add_edge(v, static_cast<Vertex>(9 + j));
    return g;
}

/// Vertex order t1', c1, c1', c2, c2', t2'. Centers induce K4.
inline Graph f2_graph()
{
    return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

/// As F2 without the edge c1'c2', so the centers induce a diamond.
inline Graph f1_graph()
{
    return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {1, 3}, {1, 4}, {2, 3}});
}

/**
 * H_i: x1 = 0, x2 = 1, x3 = 2, path y_1..y_i = 3..2+i, z2 = 3+i, z3 = 4+i,
 * z1 = 5+i. {x1,x2,x3,y_1} and {y_i,z2,z3,z1} are diamonds with tips
 * x1,y_1 and y_i,z1.
 */
inline Graph h_graph(std::size_t i)
{
    if (i < 1) throw InvalidInput("H(i) needs i >= 1");
    Graph g(6 + i);
    auto y = [](std::size_t k) { return static_cast<Vertex>(2 + k); };
    const Vertex x1 = 0, x2 = 1, x3 = 2;
    const auto z2 = static_cast<Vertex>(3 + i), z3 = z2 + 1, z1 = z2 + 2;
    g.add_edge(x2, x3);
    g.add_edge(x1, x2);
    g.add_edge(x1, x3);
    g.add_edge(y(1), x2);
    g.add_edge(y(1), x3);
    for (std::size_t k = 1; k < i; ++k) g.add_edge(y(k), y(k + 1));
    g.add_edge(z2, z3);
    g.add_edge(z1, z2);
    g.add_edge(z1, z3);
    g.add_edge(y(i), z2);
    g.add_edge(y(i), z3);
    return g;
}

// Seeded random generators. Output is reproducible for a given seed on a
// given standard library; labels are shuffled so that structure does not
// follow vertex ids.

namespace detail {

inline Graph relabel(const Graph& g, std::mt19937_64& rng)
{
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(std::mt19937_64& rng) { return std::bernoulli_distribution(0.5)(rng); }

inline Graph trivially_perfect(std::size_t n, bool connected, std::mt19937_64& rng)
{
    if (n == 1) return Graph(1);
    if (connected || coin(rng)) return with_universal_vertex(trivially_perfect(n - 1, false, rng));
    std::size_t a = uniform(rng, 1, n - 1);
    Graph left = trivially_perfect(a, false, rng), right = trivially_perfect(n - a, false, rng);
    Graph out(n);
    for (auto [u, v] : left.edges()) out.add_edge(u, v);
    for (auto [u, v] : right.edges()) out.add_edge(u + static_cast<Vertex>(a), v + static_cast<Vertex>(a));
    return out;
}

} // namespace detail

/**
 * Connected chordal graph grown by simplicial insertion: each new vertex
 * attaches to a random clique inside the closed neighborhood of a random
 * existing vertex.
 */
inline Graph random_chordal_graph(std::size_t n, std::uint64_t seed)
{
    if (n < 1) throw InvalidInput("random-chordal needs n >= 1");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (std::size_t v = 1; v < n; ++v) {
        auto anchor = static_cast<Vertex>(detail::uniform(rng, 0, v - 1));
        std::vector<Vertex> clique{anchor};
        std::vector<Vertex> pool = g.neighbor_list(anchor);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (Vertex w : pool)
            if (detail::coin(rng) && std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(c, w); }))
                clique.push_back(w);
        for (Vertex c : clique) g.add_edge(c, static_cast<Vertex>(v));
    }
    return detail::relabel(g, rng);
}

/// Connected block graph: a tree of cliques of size 2..4.
inline Graph random_block_graph(std::size_t n, std::uint64_t seed)
{
    if (n < 1) throw InvalidInput("random-block needs n >= 1");
    std::mt19937_64 rng(seed);
    Graph g(n);
    std::size_t used = std::min<std::size_t>(n, detail::uniform(rng, 1, 4));
    for (std::size_t i = 0; i < used; ++i)
        for (std::size_t j = i + 1; j < used; ++j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    while (used < n) {
        auto cut = static_cast<Vertex>(detail::uniform(rng, 0, used - 1));
        std::size_t k = std::min<std::size_t>(n - used, detail::uniform(rng, 1, 3));
        std::vector<Vertex> block{cut};
        for (std::size_t i = 0; i < k; ++i) block.push_back(static_cast<Vertex>(used + i));
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) g.add_edge(block[i], block[j]);
        used += k;
    }
    return detail::relabel(g, rng);
}

/// Trivially perfect graph from the {K1, disjoint union, add universal vertex} grammar.
inline Graph random_trivially_perfect_graph(std::size_t n, std::uint64_t seed, bool connected = true)
{
    if (n < 1) throw InvalidInput("random-trivially-perfect needs n >= 1");
    std::mt19937_64 rng(seed);
    Graph g = detail::trivially_perfect(n, connected, rng);
    return detail::relabel(g, rng);
}

/// Connected split graph on n >= 2 vertices with a clique of random size.
inline Graph random_split_graph(std::size_t n, std::uint64_t seed)
{
    if (n < 2) throw InvalidInput("random-split needs n >= 2");
    std::mt19937_64 rng(seed);
    std::size_t k = detail::uniform(rng, 1, n - 1);
    Graph g(n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    for (std::size_t v = k; v < n; ++v) {
        bool any = false;
        for (std::size_t c = 0; c < k; ++c)
            if (detail::coin(rng)) {
                g.add_edge(static_cast<Vertex>(c), static_cast<Vertex>(v));
                any = true;
            }
        if (!any) g.add_edge(static_cast<Vertex>(detail::uniform(rng, 0, k - 1)), static_cast<Vertex>(v));
    }
    return detail::relabel(g, rng);
}

struct FamilyInfo
{
    std::string_view name;
    std::size_t arity;   ///< number of integer parameters
    bool seeded;
    std::string_view help;
};

inline const std::vector<FamilyInfo>& graph_families()
{
    static const std::vector<FamilyInfo> kFamilies = {
        {"cycle", 1, false, "C_n, n >= 3"},
        {"path", 1, false, "P_n, n >= 1"},
        {"complete", 1, false, "K_n, n >= 1"},
        {"star", 1, false, "K_{1,n}"},
        {"kstar", 1, false, "K_n with a triangle on every edge, n >= 4"},
        {"ssplit", 1, false, "split graph S_n on 2n vertices"},
        {"gchain", 1, false, "G_n: n P4s between x and y, with pendants"},
        {"appendix71", 0, false, "71-vertex split graph of the 62-edge hypergraph"},
        {"f1", 0, false, "forbidden graph F1"},
        {"f2", 0, false, "forbidden graph F2"},
        {"h", 1, false, "forbidden graph H_i, i >= 1"},
        {"kite", 0, false, "diamond plus a pendant at one tip"},
        {"diamond", 0, false, "K4 minus an edge"},
        {"2k2", 0, false, "two disjoint edges"},
        {"c4-pendant", 0, false, "C4 plus a pendant vertex"},
        {"random-chordal", 1, true, "seeded connected chordal graph"},
        {"random-block", 1, true, "seeded connected block graph"},
        {"random-trivially-perfect", 1, true, "seeded connected trivially perfect graph"},
        {"random-split", 1, true, "seeded connected split graph"},
    };
    return kFamilies;
}

inline Graph generate_family(std::string_view family, const std::vector<std::size_t>& params, std::uint64_t seed = 1)
{
    auto it = std::find_if(graph_families().begin(), graph_families().end(),
                           [&](const FamilyInfo& f) { return f.name == family; });
    if (it == graph_families().end()) throw InvalidInput("unknown family '" + std::string(family) + "'");
    if (params.size() != it->arity)
        throw InvalidInput("family '" + std::string(family) + "' takes " + std::to_string(it->arity) + " parameter(s)");
    std::size_t n = params.empty() ? 0 : params[0];
    if (family == "cycle") return cycle_graph(n);
    if (family == "path") return path_graph(n);
    if (family == "complete") return complete_graph(n);
    if (family == "star") return star_graph(n);
    if (family == "kstar") return kstar_graph(n);
    if (family == "ssplit") return ssplit_graph(n);
    if (family == "gchain") return gchain_graph(n);
    if (family == "appendix71") return appendix71_graph();
    if (family == "f1") return f1_graph();
    if (family == "f2") return f2_graph();
    if (family == "h") return h_graph(n);
    if (family == "kite") return kite_graph();
    if (family == "diamond") return diamond_graph();
    if (family == "2k2") return two_k2_graph();
    if (family == "c4-pendant") return c4_with_pendant();
    if (family == "random-chordal") return random_chordal_graph(n, seed);
    if (family == "random-block") return random_block_graph(n, seed);
    if (family == "random-trivially-perfect") return random_trivially_perfect_graph(n, seed);
    return random_split_graph(n, seed);
}

} // namespace cdgraph
