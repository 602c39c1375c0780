#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace cdgraph {

using Vertex = int;
using Bits = boost::dynamic_bitset<>;

/**
 * Sorted, duplicate-free list of vertex ids.
 *
 * Ordering is shortlex (by size, then lexicographically), which is the
 * canonical order for every family of sets this library returns.
 */
class VertexSet
{
  public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> items) : items_(items) { normalize(); }
    explicit VertexSet(std::vector<Vertex> items) : items_(std::move(items)) { normalize(); }

    static VertexSet from_bits(const Bits& bits)
    {
        VertexSet s;
        s.items_.reserve(bits.count());
        for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
            s.items_.push_back(static_cast<Vertex>(i));
        return s;
    }

    Bits to_bits(std::size_t universe) const
    {
        Bits b(universe);
        for (Vertex v : items_) b.set(static_cast<std::size_t>(v));
        return b;
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    Vertex operator[](std::size_t i) const { return items_[i]; }
    Vertex front() const { return items_.front(); }
    Vertex back() const { return items_.back(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Vertex>& items() const { return items_; }

    bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

    bool is_subset_of(const VertexSet& other) const
    {
        return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
    }

    bool intersects(const VertexSet& other) const
    {
        auto a = items_.begin(), b = other.items_.begin();
        while (a != items_.end() && b != other.items_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    VertexSet with(Vertex v) const
    {
        VertexSet r = *this;
        auto it = std::lower_bound(r.items_.begin(), r.items_.end(), v);
        if (it == r.items_.end() || *it != v) r.items_.insert(it, v);
        return r;
    }

    VertexSet without(Vertex v) const
    {
        VertexSet r = *this;
        auto it = std::lower_bound(r.items_.begin(), r.items_.end(), v);
        if (it != r.items_.end() && *it == v) r.items_.erase(it);
        return r;
    }

    friend VertexSet operator|(const VertexSet& a, const VertexSet& b)
    {
        VertexSet r;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }
    friend VertexSet operator&(const VertexSet& a, const VertexSet& b)
    {
        VertexSet r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }
    friend VertexSet operator-(const VertexSet& a, const VertexSet& b)
    {
        VertexSet r;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b)
    {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.items_ <=> b.items_;
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(items_[i]);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << '{' << s.str() << '}'; }

  private:
    void normalize()
    {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<Vertex> items_;
};

using SetFamily = std::vector<VertexSet>;

/// Sorts into shortlex order and drops duplicates.
inline void canonicalize(SetFamily& family)
{
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

/// Keeps only the inclusion-minimal members; result is canonical.
inline SetFamily inclusion_minimal(SetFamily family)
{
    canonicalize(family);
    SetFamily kept;
    for (const auto& s : family) {
        // shortlex order: any proper subset of s comes earlier
        bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) { return k.is_subset_of(s); });
        if (!absorbed) kept.push_back(s);
    }
    return kept;
}

} // namespace cdgraph
