#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cdgraph/chordal.hpp"
#include "cdgraph/families.hpp"
#include "cdgraph/induced.hpp"

namespace cdgraph {

struct ForbiddenOccurrence
{
    std::string name;      ///< "F1", "F2" or "H<i>"
    Graph pattern;
    Embedding embedding;
};

struct HereditaryReport
{
    bool hereditarily_cd = false;
    std::optional<VertexSet> hole;
    std::vector<Vertex> hole_cycle;
    std::optional<ForbiddenOccurrence> forbidden;
};

namespace detail {

/// Induced diamond: adjacent centers c0 < c1, non-adjacent tips t0 < t1.
struct Diamond
{
    Vertex c0, c1, t0, t1;
    Bits vertices;
};

inline std::vector<Diamond> induced_diamonds(const Graph& g)
{
    std::vector<Diamond> out;
    for (auto [c0, c1] : g.edges()) {
        const Bits common = g.neighbor_bits(c0) & g.neighbor_bits(c1);
        for (auto a = common.find_first(); a != Bits::npos; a = common.find_next(a))
            for (auto b = common.find_next(a); b != Bits::npos; b = common.find_next(b)) {
                if (g.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b))) continue;
                Bits vs(g.order());
                for (std::size_t v : {static_cast<std::size_t>(c0), static_cast<std::size_t>(c1), a, b}) vs.set(v);
                out.push_back({c0, c1, static_cast<Vertex>(a), static_cast<Vertex>(b), std::move(vs)});
            }
    }
    return out;
}

/// N_{G-tip}[D - tip]: the diamond minus the tip together with its neighbors, tip excluded.
inline Bits core_closure(const Graph& g, const Diamond& d, Vertex tip)
{
    Bits core = d.vertices;
    core.reset(static_cast<std::size_t>(tip));
    Bits out = core | neighborhood_of(g, core);
    out.reset(static_cast<std::size_t>(tip));
    return out;
}

/// Vertices reachable from `from` inside `alive`, `from` included.
inline Bits reach_within(const Graph& g, Vertex from, const Bits& alive)
{
    Bits seen(g.order()), frontier(g.order());
    frontier.set(static_cast<std::size_t>(from));
    while (frontier.any()) {
        seen |= frontier;
        frontier = neighborhood_of(g, frontier) & alive;
        frontier -= seen;
    }
    return seen;
}

/**
 * Two induced diamonds with no edges between them, joined through tips u and
 * v by a path avoiding the closed neighborhoods of the rest of both
 * diamonds, give an induced H(i). The shortest such path is induced.
 * Each (diamond, tip) half is paired only with halves whose tip it reaches
 * around its own core and which reach it back.
 */
inline std::optional<ForbiddenOccurrence> extend_two_diamonds(const Graph& g)
{
    struct Half
    {
        std::size_t diamond;
        Vertex tip;
        Bits blocked;
        Bits reach;
    };
    const auto diamonds = induced_diamonds(g);
    std::vector<Half> halves;
    std::vector<std::vector<std::size_t>> by_tip(g.order());
    for (std::size_t p = 0; p < diamonds.size(); ++p)
        for (Vertex u : {diamonds[p].t0, diamonds[p].t1}) {
            Bits blocked = core_closure(g, diamonds[p], u);
            Bits reach = reach_within(g, u, g.all_bits() - blocked);
            by_tip[static_cast<std::size_t>(u)].push_back(halves.size());
            halves.push_back({p, u, std::move(blocked), std::move(reach)});
        }
    for (const Half& h1 : halves) {
        const Diamond& d1 = diamonds[h1.diamond];
        const Bits closed1 = d1.vertices | neighborhood_of(g, d1.vertices);
        const Bits targets = h1.reach - closed1;
        for (auto v = targets.find_first(); v != Bits::npos; v = targets.find_next(v))
            for (std::size_t k : by_tip[v]) {
                const Half& h2 = halves[k];
                const Diamond& d2 = diamonds[h2.diamond];
                if (!h2.reach.test(static_cast<std::size_t>(h1.tip)) || d2.vertices.intersects(closed1)) continue;
                auto path = shortest_path(g, h1.tip, h2.tip, g.all_bits() - (h1.blocked | h2.blocked));
                if (!path) continue;
                const std::size_t i = path->size();
                Embedding e;
                e.image.push_back(h1.tip == d1.t0 ? d1.t1 : d1.t0);
                e.image.push_back(d1.c0);
                e.image.push_back(d1.c1);
                e.image.insert(e.image.end(), path->begin(), path->end());
                e.image.push_back(d2.c0);
                e.image.push_back(d2.c1);
                e.image.push_back(h2.tip == d2.t0 ? d2.t1 : d2.t0);
                Graph pattern = h_graph(i);
                if (!is_induced_embedding(g, pattern, e))
                    throw InternalError("two-diamond extension is not an induced H(" + std::to_string(i) + ")");
                return ForbiddenOccurrence{"H" + std::to_string(i), std::move(pattern), std::move(e)};
            }
    }
    return std::nullopt;
}

} // namespace detail

/**
 * Hereditarily-CD test: chordality, then induced F1, F2, H1, H2, then the
 * two-diamond extension scan for H(i) with i >= 3. The first certificate
 * found is returned.
 */
inline HereditaryReport recognize_hereditarily_cd(const Graph& g)
{
    HereditaryReport out;
    ChordalityReport chordal = is_chordal(g);
    if (!chordal.chordal) {
        out.hole = chordal.hole;
        out.hole_cycle = chordal.hole_cycle;
        return out;
    }
    const std::array<std::pair<const char*, Graph>, 4> fixed = {
        {{"F1", f1_graph()}, {"F2", f2_graph()}, {"H1", h_graph(1)}, {"H2", h_graph(2)}}};
    for (const auto& [name, pattern] : fixed)
        if (auto e = find_induced(g, pattern)) {
            out.forbidden = ForbiddenOccurrence{name, pattern, *e};
            return out;
        }
    out.forbidden = detail::extend_two_diamonds(g);
    out.hereditarily_cd = !out.forbidden;
    return out;
}

} // namespace cdgraph
