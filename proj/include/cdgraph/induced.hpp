#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cdgraph/graph.hpp"

namespace cdgraph {

/// Induced-subgraph isomorphism: image[i] is the host vertex of pattern vertex i.
struct Embedding
{
    std::vector<Vertex> image;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

inline constexpr std::size_t kMaxPatternOrder = 12;

/// True iff `e` is injective and preserves adjacency and non-adjacency.
inline bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e)
{
    if (e.image.size() != pattern.order()) return false;
    Bits used(host.order());
    for (Vertex h : e.image) {
        if (!host.has_vertex(h) || used.test(static_cast<std::size_t>(h))) return false;
        used.set(static_cast<std::size_t>(h));
    }
    for (std::size_t i = 0; i < e.image.size(); ++i)
        for (std::size_t j = i + 1; j < e.image.size(); ++j)
            if (pattern.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) != host.adjacent(e.image[i], e.image[j]))
                return false;
    return true;
}

/**
 * Visits induced embeddings of `pattern` in `host` in lexicographic order
 * of the image tuple; stops when the visitor returns false.
 */
inline void for_each_induced(const Graph& host, const Graph& pattern,
                             const std::function<bool(const Embedding&)>& visit)
{
    const std::size_t p = pattern.order();
    if (p > kMaxPatternOrder)
        throw CapExceeded("pattern has " + std::to_string(p) + " vertices; the search cap is " +
                          std::to_string(kMaxPatternOrder));
    if (p > host.order()) return;

    Embedding e{std::vector<Vertex>(p, -1)};
    Bits used(host.order());
    bool stop = false;

    std::function<void(std::size_t)> extend = [&](std::size_t i) {
        if (i == p) {
            if (!visit(e)) stop = true;
            return;
        }
        Bits cand = host.all_bits() - used;
        for (std::size_t j = 0; j < i; ++j) {
            const Bits& nb = host.neighbor_bits(e.image[j]);
            if (pattern.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) cand &= nb;
            else cand -= nb;
        }
        const std::size_t need = pattern.degree(static_cast<Vertex>(i));
        for (auto h = cand.find_first(); h != Bits::npos && !stop; h = cand.find_next(h)) {
            if (host.degree(static_cast<Vertex>(h)) < need) continue;
            e.image[i] = static_cast<Vertex>(h);
            used.set(h);
            extend(i + 1);
            used.reset(h);
        }
    };
    extend(0);
}

/// Lexicographically least induced embedding, if any.
inline std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern)
{
    std::optional<Embedding> found;
    for_each_induced(host, pattern, [&](const Embedding& e) {
        found = e;
        return false;
    });
    return found;
}

} // namespace cdgraph
