#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdgraph/domishold.hpp"
#include "cdgraph/hereditary.hpp"
#include "cdgraph/summability.hpp"
#include "cdgraph/threshold.hpp"

namespace cdgraph::io {

// Text formats. '#' starts a comment; blank lines are ignored.
//   graph <n>        then   e <u> <v>
//   hypergraph <n>   then   h <v1> <v2> ...
//   weights:                w <v> <p[/q]>   and optionally   t <p[/q]>
//   witnesses:              a <v1> ...      and              b <v1> ...

namespace detail {

struct Line
{
    std::size_t number;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> out;
    std::string text;
    for (std::size_t number = 1; std::getline(in, text); ++number) {
        if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        std::istringstream words(text);
        Line line{number, {}};
        for (std::string w; words >> w;) line.tokens.push_back(w);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] inline void fail(const Line& line, const std::string& message)
{
    throw InvalidInput("line " + std::to_string(line.number) + ": " + message);
}

inline long parse_count(const Line& line, const std::string& token)
{
    long value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size() || value < 0)
        fail(line, "expected a non-negative integer, got '" + token + "'");
    return value;
}

inline Vertex parse_vertex(const Line& line, const std::string& token, std::size_t n)
{
    long v = parse_count(line, token);
    if (static_cast<std::size_t>(v) >= n) fail(line, "vertex '" + token + "' out of range");
    return static_cast<Vertex>(v);
}

inline std::size_t parse_header(const std::vector<Line>& lines, std::string_view keyword)
{
    if (lines.empty()) throw InvalidInput("empty input; expected '" + std::string(keyword) + " <n>'");
    const Line& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != keyword)
        fail(head, "expected header '" + std::string(keyword) + " <n>'");
    return static_cast<std::size_t>(parse_count(head, head.tokens[1]));
}

inline Rational parse_rational_token(const Line& line, const std::string& token)
{
    try {
        return parse_rational(token);
    } catch (const InvalidInput& e) {
        fail(line, e.what());
    }
}

} // namespace detail

inline Graph read_graph(std::istream& in)
{
    auto lines = detail::tokenize(in);
    const std::size_t n = detail::parse_header(lines, "graph");
    Graph g(n);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.tokens[0] != "e" || line.tokens.size() != 3) detail::fail(line, "expected 'e <u> <v>'");
        Vertex u = detail::parse_vertex(line, line.tokens[1], n), v = detail::parse_vertex(line, line.tokens[2], n);
        try {
            g.add_edge(u, v);
        } catch (const InvalidInput& e) {
            detail::fail(line, e.what());
        }
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g)
{
    out << "graph " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

inline Hypergraph read_hypergraph(std::istream& in)
{
    auto lines = detail::tokenize(in);
    const std::size_t n = detail::parse_header(lines, "hypergraph");
    SetFamily edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.tokens[0] != "h") detail::fail(line, "expected 'h <v1> <v2> ...'");
        std::vector<Vertex> members;
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            members.push_back(detail::parse_vertex(line, line.tokens[i], n));
        VertexSet e(members);
        if (e.size() != members.size()) detail::fail(line, "repeated vertex in hyperedge");
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

inline void write_set_line(std::ostream& out, std::string_view prefix, const VertexSet& s)
{
    out << prefix;
    for (Vertex v : s) out << ' ' << v;
    out << '\n';
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h)
{
    out << "hypergraph " << h.order() << '\n';
    for (const auto& e : h.edges()) write_set_line(out, "h", e);
}

struct WeightFile
{
    std::vector<Rational> weights;
    std::optional<Rational> threshold;
};

/// Every vertex 0..n-1 must receive exactly one weight.
inline WeightFile read_weights(std::istream& in, std::size_t n)
{
    WeightFile out;
    out.weights.assign(n, Rational(0));
    std::vector<bool> seen(n, false);
    for (const auto& line : detail::tokenize(in)) {
        if (line.tokens[0] == "w" && line.tokens.size() == 3) {
            Vertex v = detail::parse_vertex(line, line.tokens[1], n);
            if (seen[static_cast<std::size_t>(v)]) detail::fail(line, "second weight for vertex " + line.tokens[1]);
            seen[static_cast<std::size_t>(v)] = true;
            out.weights[static_cast<std::size_t>(v)] = detail::parse_rational_token(line, line.tokens[2]);
        } else if (line.tokens[0] == "t" && line.tokens.size() == 2) {
            if (out.threshold) detail::fail(line, "second threshold line");
            out.threshold = detail::parse_rational_token(line, line.tokens[1]);
        } else {
            detail::fail(line, "expected 'w <v> <p[/q]>' or 't <p[/q]>'");
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) throw InvalidInput("no weight given for vertex " + std::to_string(v));
    return out;
}

inline void write_structure(std::ostream& out, const WeightedStructure& s)
{
    for (std::size_t v = 0; v < s.weights.size(); ++v) out << "w " << v << ' ' << to_string(s.weights[v]) << '\n';
    out << "t " << to_string(s.threshold) << '\n';
}

inline SummabilityWitness read_witness(std::istream& in, std::size_t n)
{
    SummabilityWitness w;
    for (const auto& line : detail::tokenize(in)) {
        if (line.tokens[0] != "a" && line.tokens[0] != "b") detail::fail(line, "expected 'a ...' or 'b ...'");
        std::vector<Vertex> members;
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            members.push_back(detail::parse_vertex(line, line.tokens[i], n));
        (line.tokens[0] == "a" ? w.A : w.B).emplace_back(std::move(members));
    }
    return w;
}

inline void write_witness(std::ostream& out, const SummabilityWitness& w)
{
    for (const auto& a : w.A) write_set_line(out, "a", a);
    for (const auto& b : w.B) write_set_line(out, "b", b);
}

// JSON. Rationals are strings "p" or "p/q"; sets are sorted arrays.

using nlohmann::json;

inline json to_json(const VertexSet& s) { return json(s.items()); }

inline json to_json(const SetFamily& f)
{
    json out = json::array();
    for (const auto& s : f) out.push_back(to_json(s));
    return out;
}

inline json to_json(const WeightedStructure& s)
{
    json weights = json::array();
    for (const auto& w : s.weights) weights.push_back(to_string(w));
    return {{"flavor", to_string(s.flavor)},
            {"weights", weights},
            {"threshold", to_string(s.threshold)},
            {"degenerate", s.degenerate}};
}

inline json to_json(const SummabilityWitness& w) { return {{"A", to_json(w.A)}, {"B", to_json(w.B)}}; }

inline json to_json(const Refutation& r)
{
    if (const auto* p = std::get_if<IncomparablePair>(&r))
        return {{"kind", "incomparable_pair"},
                {"i", p->i},
                {"j", p->j},
                {"e", to_json(p->e)},
                {"f", to_json(p->f)},
                {"summability_witness", to_json(to_summability_witness(*p))}};
    const auto& c = std::get<InfeasibilityCertificate>(r);
    auto rows = [](const SetFamily& sets, const std::vector<Rational>& ys) {
        json out = json::array();
        for (std::size_t k = 0; k < sets.size(); ++k)
            out.push_back({{"set", to_json(sets[k])}, {"multiplier", to_string(ys[k])}});
        return out;
    };
    return {{"kind", "farkas"},
            {"true_rows", rows(c.true_sets, c.true_multipliers)},
            {"false_rows", rows(c.false_sets, c.false_multipliers)}};
}

inline json to_json(const ThresholdReport& r)
{
    json out = {{"threshold", r.threshold}};
    out["structure"] = r.structure ? to_json(*r.structure) : json(nullptr);
    out["refutation"] = r.refutation ? to_json(*r.refutation) : json(nullptr);
    return out;
}

inline json to_json(const DominationReport& r, Flavor flavor)
{
    json out = {{"verdict", r.positive ? to_string(flavor) : "not_" + to_string(flavor)}, {"degenerate", r.degenerate}};
    out["structure"] = r.structure ? to_json(*r.structure) : json(nullptr);
    out["refutation"] = r.refutation ? to_json(*r.refutation) : json(nullptr);
    out["hypergraph"] = r.hypergraph ? to_json(r.hypergraph->edges()) : json(nullptr);
    return out;
}

inline json to_json(const HereditaryReport& r)
{
    json out = {{"hereditarily_cd", r.hereditarily_cd}};
    out["hole"] = r.hole ? json(r.hole_cycle) : json(nullptr);
    if (r.forbidden)
        out["forbidden"] = {{"pattern", r.forbidden->name}, {"embedding", r.forbidden->embedding.image}};
    else
        out["forbidden"] = nullptr;
    return out;
}

inline json to_json(const ChordalityReport& r)
{
    json out = {{"chordal", r.chordal}};
    out["peo"] = r.peo ? json(*r.peo) : json(nullptr);
    out["hole"] = r.hole ? json(r.hole_cycle) : json(nullptr);
    return out;
}

} // namespace cdgraph::io
