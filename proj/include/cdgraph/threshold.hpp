#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cdgraph/hypergraph.hpp"
#include "cdgraph/rational.hpp"
#include "cdgraph/simplex.hpp"
#include "cdgraph/summability.hpp"

namespace cdgraph {

enum class Flavor { separating, cd, td };

inline std::string to_string(Flavor f)
{
    switch (f) {
    case Flavor::separating: return "separating";
    case Flavor::cd: return "cd";
    case Flavor::td: return "td";
    }
    return "?";
}

/**
 * Vertex weights and a threshold.
 *
 * separating: w(X) <= t iff X contains no edge. cd / td: w(S) >= t iff S is
 * a connected / total dominating set. `degenerate` marks the conventional
 * structures for constant-true functions and disconnected graphs.
 */
struct WeightedStructure
{
    std::vector<Rational> weights;
    Rational threshold = 0;
    Flavor flavor = Flavor::separating;
    bool degenerate = false;

    Rational weight_of(const VertexSet& s) const
    {
        Rational total = 0;
        for (Vertex v : s) total += weights.at(static_cast<std::size_t>(v));
        return total;
    }

    Rational total_weight() const
    {
        Rational total = 0;
        for (const auto& w : weights) total += w;
        return total;
    }

    bool is_integral() const
    {
        return cdgraph::is_integral(threshold) &&
               std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return cdgraph::is_integral(w); });
    }

    bool is_non_negative() const
    {
        return threshold >= 0 && std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return w >= 0; });
    }
};

/// Vertices i, j with edges e (j in e, i not) and f (i in f, j not) such that
/// e - j + i and f - i + j contain no edge.
struct IncomparablePair
{
    Vertex i = 0, j = 0;
    VertexSet e, f;
};

inline SummabilityWitness to_summability_witness(const IncomparablePair& p)
{
    return {{p.e, p.f}, {p.e.without(p.j).with(p.i), p.f.without(p.i).with(p.j)}};
}

/**
 * Non-negative multipliers on the rows t - w(X) <= -1 (X in true_sets) and
 * w(Y) - t <= 0 (Y in false_sets) whose combination reads 0 <= -1.
 */
struct InfeasibilityCertificate
{
    SetFamily true_sets;
    std::vector<Rational> true_multipliers;
    SetFamily false_sets;
    std::vector<Rational> false_multipliers;
};

using Refutation = std::variant<IncomparablePair, InfeasibilityCertificate>;

struct ThresholdReport
{
    bool threshold = false;
    std::optional<WeightedStructure> structure;
    std::optional<Refutation> refutation;
};

/// Checks a refutation against h by substitution.
inline bool verify_refutation(const Hypergraph& h, const Refutation& r)
{
    if (const auto* p = std::get_if<IncomparablePair>(&r))
        return p->e.contains(p->j) && !p->e.contains(p->i) && p->f.contains(p->i) && !p->f.contains(p->j) &&
               verify_summability_witness(h, to_summability_witness(*p));

    const auto& c = std::get<InfeasibilityCertificate>(r);
    if (c.true_sets.size() != c.true_multipliers.size() || c.false_sets.size() != c.false_multipliers.size())
        return false;
    std::vector<Rational> coefficient(h.order(), Rational(0));
    Rational t_coefficient = 0, bound = 0;
    for (std::size_t k = 0; k < c.true_sets.size(); ++k) {
        const Rational& y = c.true_multipliers[k];
        if (y < 0 || !h.contains_edge(c.true_sets[k])) return false;
        t_coefficient += y;
        bound -= y;
        for (Vertex v : c.true_sets[k]) {
            if (v < 0 || static_cast<std::size_t>(v) >= h.order()) return false;
            coefficient[static_cast<std::size_t>(v)] -= y;
        }
    }
    for (std::size_t k = 0; k < c.false_sets.size(); ++k) {
        const Rational& y = c.false_multipliers[k];
        if (y < 0 || h.contains_edge(c.false_sets[k])) return false;
        t_coefficient -= y;
        for (Vertex v : c.false_sets[k]) {
            if (v < 0 || static_cast<std::size_t>(v) >= h.order()) return false;
            coefficient[static_cast<std::size_t>(v)] += y;
        }
    }
    return t_coefficient >= 0 && bound < 0 &&
           std::all_of(coefficient.begin(), coefficient.end(), [](const Rational& x) { return x >= 0; });
}

/// i dominates j: for every edge e with j in e and i not in e, e - j + i contains an edge.
inline bool dominates(const Hypergraph& h, Vertex i, Vertex j, VertexSet* failing_edge = nullptr)
{
    const auto bi = static_cast<std::size_t>(i), bj = static_cast<std::size_t>(j);
    for (std::size_t k = 0; k < h.edge_count(); ++k) {
        const Bits& e = h.edge_bits()[k];
        if (!e.test(bj) || e.test(bi)) continue;
        Bits swapped = e;
        swapped.reset(bj);
        swapped.set(bi);
        if (!h.contains_edge(swapped)) {
            if (failing_edge) *failing_edge = h.edges()[k];
            return false;
        }
    }
    return true;
}

struct StrengthPreorder
{
    bool total = true;
    SetFamily classes; ///< equivalence classes of essential vertices, strongest first
    std::optional<IncomparablePair> incomparable;
};

/// The exchange preorder on essential vertices of a Sperner hypergraph.
inline StrengthPreorder strength_preorder(const Hypergraph& h)
{
    const VertexSet essential = h.essential_vertices();
    const std::size_t m = essential.size();
    std::vector<std::vector<bool>> geq(m, std::vector<bool>(m, true));
    StrengthPreorder out;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            VertexSet e, f;
            geq[a][b] = dominates(h, essential[a], essential[b], &e);
            geq[b][a] = dominates(h, essential[b], essential[a], &f);
            if (!geq[a][b] && !geq[b][a]) {
                out.total = false;
                out.incomparable = IncomparablePair{essential[a], essential[b], e, f};
                return out;
            }
        }

    // in a total preorder, strength is the number of vertices dominated
    std::map<std::size_t, std::vector<Vertex>, std::greater<>> by_score;
    for (std::size_t a = 0; a < m; ++a)
        by_score[static_cast<std::size_t>(std::count(geq[a].begin(), geq[a].end(), true))].push_back(essential[a]);
    for (auto& [score, members] : by_score) out.classes.emplace_back(std::move(members));
    return out;
}

/// Inclusion-maximal sets containing no edge: complements of the minimal transversals.
inline SetFamily maximal_false_points(const Hypergraph& h)
{
    const VertexSet all = Graph(h.order()).vertices();
    SetFamily out;
    const Hypergraph blocker = minimal_transversals(h);
    for (const auto& t : blocker.edges()) out.push_back(all - t);
    canonicalize(out);
    return out;
}

/**
 * Scales by the least common denominator of the weights; t is rounded down
 * for separating structures and up for cd / td, which keeps both sides of
 * the defining equivalence.
 */
inline WeightedStructure integralize(const WeightedStructure& s)
{
    Integer scale = 1;
    for (const auto& w : s.weights) scale = boost::multiprecision::lcm(scale, denominator_of(w));
    WeightedStructure out = s;
    for (auto& w : out.weights) w *= scale;
    Rational t = s.threshold * scale;
    out.threshold = s.flavor == Flavor::separating ? Rational(floor_of(t)) : Rational(ceil_of(t));
    return out;
}

/// (w, w(V) - t - 1): a separating structure of the blocker.
inline WeightedStructure dual_separating_structure(const WeightedStructure& s)
{
    if (s.flavor != Flavor::separating || !s.is_integral())
        throw InvalidInput("dual structure needs an integral separating structure");
    Rational t = s.total_weight() - s.threshold - 1;
    if (t < 0) throw InvalidInput("dual threshold is negative; the function is constant");
    WeightedStructure out = s;
    out.threshold = t;
    out.degenerate = false;
    return out;
}

/// Checks a separating structure against the edges and maximal false points of h.
inline bool check_separating(const Hypergraph& h, const WeightedStructure& s)
{
    if (s.weights.size() != h.order() || !s.is_non_negative()) return false;
    const Hypergraph reduced = sperner_reduce(h);
    if (s.degenerate)
        return reduced.has_empty_edge() &&
               std::all_of(s.weights.begin(), s.weights.end(), [](const Rational& w) { return w == 0; });
    for (const auto& e : reduced.edges())
        if (s.weight_of(e) <= s.threshold) return false;
    for (const auto& f : maximal_false_points(reduced))
        if (s.weight_of(f) > s.threshold) return false;
    return true;
}

namespace detail {

struct ThresholdLp
{
    std::vector<int> column_of; ///< per vertex; -1 for weight fixed at zero
    std::size_t weight_columns = 0;
};

/// Solves t - w(X) <= -1 over `trues` and w(Y) - t <= 0 over `falses`; rows may be merged.
inline std::variant<WeightedStructure, std::vector<Rational>> solve_threshold_lp(
    std::size_t n, const ThresholdLp& lp, const SetFamily& trues, const SetFamily& falses, bool merge_rows)
{
    const std::size_t t_col = lp.weight_columns;
    LinearSystem sys;
    sys.columns = lp.weight_columns + 1;
    std::set<std::pair<int, std::vector<Rational>>> seen;
    auto add = [&](const VertexSet& s, int sign) {
        std::vector<Rational> row(sys.columns, Rational(0));
        for (Vertex v : s) {
            int c = lp.column_of[static_cast<std::size_t>(v)];
            if (c >= 0) row[static_cast<std::size_t>(c)] += sign;
        }
        row[t_col] = -sign;
        if (merge_rows && !seen.insert({sign, row}).second) return;
        sys.add_row(std::move(row), sign < 0 ? Rational(-1) : Rational(0));
    };
    for (const auto& x : trues) add(x, -1);
    for (const auto& y : falses) add(y, +1);

    FeasibilityResult r = solve_feasibility(sys);
    if (!r.feasible) return std::move(r.farkas);
    WeightedStructure s;
    s.weights.assign(n, Rational(0));
    for (std::size_t v = 0; v < n; ++v)
        if (lp.column_of[v] >= 0) s.weights[v] = r.point[static_cast<std::size_t>(lp.column_of[v])];
    s.threshold = r.point[t_col];
    return s;
}

inline InfeasibilityCertificate certificate_from(const std::vector<Rational>& y, const SetFamily& trues,
                                                 const SetFamily& falses)
{
    InfeasibilityCertificate c;
    for (std::size_t k = 0; k < trues.size(); ++k)
        if (y[k] != 0) {
            c.true_sets.push_back(trues[k]);
            c.true_multipliers.push_back(y[k]);
        }
    for (std::size_t k = 0; k < falses.size(); ++k)
        if (y[trues.size() + k] != 0) {
            c.false_sets.push_back(falses[k]);
            c.false_multipliers.push_back(y[trues.size() + k]);
        }
    return c;
}

/// Verdicts for the two constant functions, if h is one of them.
inline std::optional<ThresholdReport> constant_function_report(const Hypergraph& reduced)
{
    const std::size_t n = reduced.order();
    if (reduced.has_empty_edge())
        return ThresholdReport{true, WeightedStructure{std::vector<Rational>(n), 0, Flavor::separating, true}, {}};
    if (reduced.edge_count() == 0)
        return ThresholdReport{true, WeightedStructure{std::vector<Rational>(n), 0, Flavor::separating, false}, {}};
    return std::nullopt;
}

inline ThresholdReport finish(const Hypergraph& reduced, WeightedStructure rational)
{
    WeightedStructure s = integralize(rational);
    if (!check_separating(reduced, s)) throw InternalError("integral separating structure failed validation");
    return ThresholdReport{true, std::move(s), {}};
}

} // namespace detail

/**
 * Threshold test in exact arithmetic. Pipeline: Sperner reduction, strength
 * preorder (an incomparable pair refutes at once), maximal false points by
 * dualization, then an LP with one weight per strength class. Infeasibility
 * is re-derived on the per-vertex LP to obtain a Farkas certificate.
 */
inline ThresholdReport is_threshold(const Hypergraph& h)
{
    const Hypergraph reduced = sperner_reduce(h);
    if (auto constant = detail::constant_function_report(reduced)) return *constant;

    StrengthPreorder order = strength_preorder(reduced);
    if (!order.total) return ThresholdReport{false, {}, Refutation{*order.incomparable}};

    const SetFamily trues = reduced.edges();
    const SetFamily falses = maximal_false_points(reduced);

    // vertices of one class are interchangeable, so equal weights lose nothing
    detail::ThresholdLp by_class{std::vector<int>(h.order(), -1), order.classes.size()};
    for (std::size_t c = 0; c < order.classes.size(); ++c)
        for (Vertex v : order.classes[c]) by_class.column_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    auto merged = detail::solve_threshold_lp(h.order(), by_class, trues, falses, true);
    if (auto* s = std::get_if<WeightedStructure>(&merged)) return detail::finish(reduced, std::move(*s));

    const VertexSet essential = reduced.essential_vertices();
    detail::ThresholdLp per_vertex{std::vector<int>(h.order(), -1), essential.size()};
    for (std::size_t k = 0; k < essential.size(); ++k)
        per_vertex.column_of[static_cast<std::size_t>(essential[k])] = static_cast<int>(k);
    auto full = detail::solve_threshold_lp(h.order(), per_vertex, trues, falses, false);
    if (std::holds_alternative<WeightedStructure>(full))
        throw InternalError("class-reduced threshold LP disagrees with the per-vertex LP");
    return ThresholdReport{false, {}, Refutation{detail::certificate_from(std::get<std::vector<Rational>>(full), trues, falses)}};
}

inline constexpr std::size_t kBruteForceThresholdCap = 14;

/// One LP row per subset of essential vertices; the literal definition.
inline ThresholdReport brute_force_threshold(const Hypergraph& h, std::size_t cap = kBruteForceThresholdCap)
{
    const Hypergraph reduced = sperner_reduce(h);
    const VertexSet essential = reduced.essential_vertices();
    if (essential.size() > cap)
        throw CapExceeded(std::to_string(essential.size()) + " essential vertices; the cap is " + std::to_string(cap));
    if (auto constant = detail::constant_function_report(reduced)) return *constant;

    SetFamily trues, falses;
    for (std::size_t mask = 0; mask < (std::size_t{1} << essential.size()); ++mask) {
        std::vector<Vertex> members;
        for (std::size_t b = 0; b < essential.size(); ++b)
            if (mask >> b & 1u) members.push_back(essential[b]);
        VertexSet x(std::move(members));
        (reduced.contains_edge(x) ? trues : falses).push_back(std::move(x));
    }
    detail::ThresholdLp per_vertex{std::vector<int>(h.order(), -1), essential.size()};
    for (std::size_t k = 0; k < essential.size(); ++k)
        per_vertex.column_of[static_cast<std::size_t>(essential[k])] = static_cast<int>(k);
    auto result = detail::solve_threshold_lp(h.order(), per_vertex, trues, falses, false);
    if (auto* s = std::get_if<WeightedStructure>(&result)) return detail::finish(reduced, std::move(*s));
    return ThresholdReport{false, {}, Refutation{detail::certificate_from(std::get<std::vector<Rational>>(result), trues, falses)}};
}

} // namespace cdgraph
