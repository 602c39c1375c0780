#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdgraph/hypergraph.hpp"

namespace cdgraph {

/// A_1..A_r each contain an edge, B_1..B_r contain none, and every vertex
/// occurs equally often on both sides. Sets may repeat.
struct SummabilityWitness
{
    SetFamily A;
    SetFamily B;
};

inline bool verify_summability_witness(const Hypergraph& h, const SummabilityWitness& w)
{
    if (w.A.size() < 2 || w.A.size() != w.B.size()) return false;
    std::vector<long> balance(h.order(), 0);
    for (const auto* side : {&w.A, &w.B})
        for (const auto& s : *side)
            for (Vertex v : s)
                if (v < 0 || static_cast<std::size_t>(v) >= h.order()) return false;
    for (const auto& a : w.A) {
        if (!h.contains_edge(a)) return false;
        for (Vertex v : a) ++balance[static_cast<std::size_t>(v)];
    }
    for (const auto& b : w.B) {
        if (h.contains_edge(b)) return false;
        for (Vertex v : b) --balance[static_cast<std::size_t>(v)];
    }
    return std::all_of(balance.begin(), balance.end(), [](long x) { return x == 0; });
}

inline constexpr std::size_t kSummabilityCap2 = 20;
inline constexpr std::size_t kSummabilityCap3 = 12;

namespace detail {

/**
 * Search state over essential vertices encoded as bit masks. Each A_i may be
 * taken to be an edge: shrinking A_i and dropping the same occurrences from
 * the B side keeps the B_j false.
 */
class SummabilitySearch
{
  public:
    explicit SummabilitySearch(const Hypergraph& h) : h_(sperner_reduce(h)), essential_(h_.essential_vertices())
    {
        const std::size_t m = essential_.size();
        std::vector<int> local(h_.order(), -1);
        for (std::size_t i = 0; i < m; ++i) local[static_cast<std::size_t>(essential_[i])] = static_cast<int>(i);
        for (const auto& e : h_.edges()) {
            std::uint32_t mask = 0;
            for (Vertex v : e) mask |= 1u << local[static_cast<std::size_t>(v)];
            edges_.push_back(mask);
        }
        // truth table by upward closure over one-bit extensions
        truth_.assign(std::size_t{1} << m, 0);
        for (std::uint32_t e : edges_) truth_[e] = 1;
        for (std::uint32_t x = 0; x < truth_.size(); ++x)
            if (truth_[x])
                for (std::size_t b = 0; b < m; ++b) truth_[x | (1u << b)] = 1;
    }

    std::optional<SummabilityWitness> search(std::size_t k)
    {
        if (h_.has_empty_edge()) return std::nullopt; // no false points at all
        const std::size_t q = edges_.size();
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = i + 1; j < q; ++j)
                if (try_combination({i, j}, 2)) return witness(2);
        if (k < 3) return std::nullopt;
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = i; j < q; ++j)
                for (std::size_t l = j; l < q; ++l)
                    if (try_combination({i, j, l}, 3)) return witness(3);
        return std::nullopt;
    }

  private:
    bool is_true(std::uint32_t x) const { return truth_[x] != 0; }

    bool try_combination(std::array<std::size_t, 3> idx, std::size_t r)
    {
        std::array<int, 32> mult{};
        for (std::size_t i = 0; i < r; ++i) {
            a_[i] = edges_[idx[i]];
            for (std::size_t b = 0; b < essential_.size(); ++b)
                if (a_[i] >> b & 1u) ++mult[b];
        }
        b_.fill(0);
        items_.clear();
        for (std::size_t b = 0; b < essential_.size(); ++b) {
            if (mult[b] == static_cast<int>(r)) {
                for (std::size_t i = 0; i < r; ++i) b_[i] |= 1u << b;
            } else if (mult[b] > 0) {
                items_.push_back({static_cast<int>(b), mult[b]});
            }
        }
        for (std::size_t i = 0; i < r; ++i)
            if (is_true(b_[i])) return false;
        r_ = r;
        return assign(0);
    }

    /// Places items_[pos..] into the B side; vertices of multiplicity m go to m distinct B_i.
    bool assign(std::size_t pos)
    {
        if (pos == items_.size()) return true;
        const std::uint32_t bit = 1u << items_[pos].vertex;
        const int mult = items_[pos].multiplicity;
        // B sets are interchangeable until something distinguishes them; break that symmetry at pos 0
        const std::size_t limit = pos == 0 ? 1 : r_;
        if (mult == 1 || (mult == 2 && r_ == 3)) {
            for (std::size_t first = 0; first < limit; ++first) {
                if (mult == 1) {
                    if (place(pos, bit, first, r_)) return true;
                } else {
                    for (std::size_t second = first + 1; second < r_; ++second)
                        if (place(pos, bit, first, second)) return true;
                }
            }
            return false;
        }
        throw InternalError("unexpected multiplicity in summability search");
    }

    bool place(std::size_t pos, std::uint32_t bit, std::size_t first, std::size_t second)
    {
        const auto saved = b_;
        b_[first] |= bit;
        if (second < r_) b_[second] |= bit;
        bool ok = !is_true(b_[first]) && (second >= r_ || !is_true(b_[second])) && assign(pos + 1);
        if (!ok) b_ = saved;
        return ok;
    }

    SummabilityWitness witness(std::size_t r) const
    {
        auto lift = [&](std::uint32_t mask) {
            std::vector<Vertex> s;
            for (std::size_t b = 0; b < essential_.size(); ++b)
                if (mask >> b & 1u) s.push_back(essential_[b]);
            return VertexSet(std::move(s));
        };
        SummabilityWitness w;
        for (std::size_t i = 0; i < r; ++i) {
            w.A.push_back(lift(a_[i]));
            w.B.push_back(lift(b_[i]));
        }
        return w;
    }

    struct Item
    {
        int vertex;
        int multiplicity;
    };

    Hypergraph h_;
    VertexSet essential_;
    std::vector<std::uint32_t> edges_;
    std::vector<char> truth_;
    std::array<std::uint32_t, 3> a_{}, b_{};
    std::vector<Item> items_;
    std::size_t r_ = 0;
};

} // namespace detail

/**
 * Looks for a witness with r <= k (k in {2, 3}); nullopt means h is
 * k-asummable. Exhaustive over essential vertices, which are capped at 20
 * for k = 2 and 12 for k = 3.
 */
inline std::optional<SummabilityWitness> summability_search(const Hypergraph& h, std::size_t k)
{
    if (k != 2 && k != 3) throw InvalidInput("summability search supports k = 2 or 3, got " + std::to_string(k));
    const std::size_t m = h.essential_vertices().size();
    const std::size_t cap = k == 2 ? kSummabilityCap2 : kSummabilityCap3;
    if (m > cap)
        throw CapExceeded(std::to_string(m) + " essential vertices; the k=" + std::to_string(k) + " cap is " +
                          std::to_string(cap));
    return detail::SummabilitySearch(h).search(k);
}

} // namespace cdgraph
