#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace cdgraph;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs)
{
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

WeightedStructure cd_structure(std::vector<Rational> w, Rational t)
{
    return WeightedStructure{std::move(w), std::move(t), Flavor::cd, false};
}

/// Clique weights 1, tips 0, t = n - 1.
WeightedStructure kstar_structure(std::size_t n)
{
    std::vector<Rational> w(kstar_graph(n).order(), Rational(0));
    for (std::size_t i = 0; i < n; ++i) w[i] = 1;
    return cd_structure(std::move(w), static_cast<long>(n - 1));
}

/// w(x) = w(y) = 1, w(a_i) = w(b_i) = 2, pendants 0, t = 4n + 1.
WeightedStructure gchain_structure(std::size_t n)
{
    std::vector<Rational> w(4 * n + 2, Rational(0));
    w[0] = w[1] = 1;
    for (std::size_t i = 0; i < n; ++i) w[2 + 4 * i] = w[3 + 4 * i] = 2;
    return cd_structure(std::move(w), static_cast<long>(4 * n + 1));
}

std::vector<Graph> random_connected_split_graphs(std::size_t count, std::uint64_t seed0)
{
    std::vector<Graph> out;
    for (std::uint64_t seed = seed0; out.size() < count; ++seed) out.push_back(random_split_graph(2 + seed % 9, seed));
    return out;
}

bool has_universal_vertex(const Graph& g)
{
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
        if (g.degree(v) + 1 == g.order()) return true;
    return false;
}

} // namespace

TEST(VerifyDominating, Examples)
{
    EXPECT_TRUE(verify_dominating(path_graph(6), {1, 2, 3, 4}, DominationMode::cd));
    EXPECT_TRUE(verify_dominating(cycle_graph(4), {0, 1}, DominationMode::cd));
    EXPECT_FALSE(verify_dominating(cycle_graph(4), {0, 2}, DominationMode::cd));
    EXPECT_FALSE(verify_dominating(cycle_graph(4), {}, DominationMode::cd));
    EXPECT_TRUE(verify_dominating(cycle_graph(4), {0, 1}, DominationMode::td));
    EXPECT_FALSE(verify_dominating(star_graph(3), {0}, DominationMode::td));
    EXPECT_TRUE(verify_dominating(star_graph(3), {0, 2}, DominationMode::td));
    EXPECT_FALSE(verify_dominating(path_graph(3), {7}, DominationMode::cd));
}

TEST(VerifyDominating, MatchesOracleOnAllSubsets)
{
    std::mt19937_64 rng(31);
    for (int k = 0; k < 40; ++k) {
        Graph g = support::random_connected_graph(8, 0.3, rng);
        oracle::MaskGraph mg(g);
        for (oracle::Mask s = 0; s <= mg.full(); ++s) {
            ASSERT_EQ(verify_dominating(g, oracle::to_set(s), DominationMode::cd), oracle::is_cd_set(mg, s));
            ASSERT_EQ(verify_dominating(g, oracle::to_set(s), DominationMode::td), oracle::is_td_set(mg, s));
        }
    }
}

TEST(RecognizeCd, Examples)
{
    auto c4 = recognize_cd(cycle_graph(4));
    EXPECT_FALSE(c4.positive);
    EXPECT_FALSE(c4.structure);
    ASSERT_TRUE(c4.refutation);
    EXPECT_TRUE(verify_refutation(*c4.hypergraph, *c4.refutation));

    auto k5 = recognize_cd(complete_graph(5));
    ASSERT_TRUE(k5.positive);
    EXPECT_EQ(k5.structure->weights, std::vector<Rational>(5, Rational(1)));
    EXPECT_EQ(k5.structure->threshold, 1);
    EXPECT_TRUE(oracle::cd_structure_valid(complete_graph(5), *k5.structure));

    Graph ex = c4_with_pendant();
    auto r = recognize_cd(ex);
    ASSERT_TRUE(r.positive);
    EXPECT_EQ(r.structure->flavor, Flavor::cd);
    EXPECT_TRUE(oracle::cd_structure_valid(ex, *r.structure));
    auto closed_form = cd_structure(ints({1, 0, 1, 2, 0}), 3);
    EXPECT_TRUE(oracle::cd_structure_valid(ex, closed_form));
    EXPECT_TRUE(validates_cd(ex, closed_form));
    EXPECT_EQ(oracle::minimal_cd_sets(ex), (SetFamily{{0, 3}, {2, 3}}));
}

TEST(RecognizeCd, DisconnectedGraphsAreDegenerateCd)
{
    Graph g = two_k2_graph();
    auto r = recognize_cd(g);
    EXPECT_TRUE(r.positive);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.structure->weights, std::vector<Rational>(4, Rational(0)));
    EXPECT_EQ(r.structure->threshold, 1);
    EXPECT_TRUE(oracle::cd_structure_valid(g, *r.structure));
    EXPECT_TRUE(validates_cd(g, *r.structure));
}

TEST(RecognizeCd, NamedFamilies)
{
    for (std::size_t n = 4; n <= 6; ++n) {
        auto r = recognize_cd(kstar_graph(n));
        ASSERT_TRUE(r.positive);
        EXPECT_TRUE(validates_cd(kstar_graph(n), *r.structure));
        EXPECT_TRUE(validates_cd(kstar_graph(n), kstar_structure(n)));
    }
    for (std::size_t n = 4; n <= 5; ++n) {
        EXPECT_TRUE(oracle::cd_structure_valid(kstar_graph(n), kstar_structure(n)));
        EXPECT_TRUE(oracle::cd_structure_valid(kstar_graph(n), *recognize_cd(kstar_graph(n)).structure));
    }
    for (std::size_t n = 2; n <= 8; ++n) {
        auto r = recognize_cd(gchain_graph(n));
        ASSERT_TRUE(r.positive);
        EXPECT_TRUE(validates_cd(gchain_graph(n), *r.structure));
        EXPECT_TRUE(validates_cd(gchain_graph(n), gchain_structure(n)));
        if (n <= 3) {
            EXPECT_TRUE(oracle::cd_structure_valid(gchain_graph(n), gchain_structure(n)));
            EXPECT_TRUE(oracle::cd_structure_valid(gchain_graph(n), *r.structure));
        }
    }
    for (std::size_t n = 3; n <= 8; ++n) EXPECT_FALSE(recognize_cd(cycle_graph(n + 1)).positive);
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(recognize_cd(path_graph(n)).positive);
    EXPECT_FALSE(recognize_cd(appendix71_graph()).positive);
    EXPECT_FALSE(recognize_cd(f1_graph()).positive);
    EXPECT_FALSE(recognize_cd(f2_graph()).positive);
    for (std::size_t i = 1; i <= 4; ++i) EXPECT_FALSE(recognize_cd(h_graph(i)).positive);
}

TEST(RecognizeCd, StructuresAreDefinitionallySoundOnAllSmallGraphs)
{
    for (std::size_t n = 1; n <= 7; ++n)
        for (const Graph& g : support::all_graphs(n)) {
            auto r = recognize_cd(g);
            if (!r.positive) continue;
            ASSERT_TRUE(r.structure);
            EXPECT_TRUE(r.structure->is_integral());
            ASSERT_TRUE(oracle::cd_structure_valid(g, *r.structure));
            EXPECT_TRUE(validates_cd(g, *r.structure));
        }
}

TEST(RecognizeCd, StructuresAreDefinitionallySoundUpToTwelve)
{
    std::mt19937_64 rng(32);
    int positive = 0;
    for (int k = 0; k < 150; ++k) {
        std::size_t n = 8 + static_cast<std::size_t>(k % 5);
        Graph g = k % 3 == 0 ? random_chordal_graph(n, static_cast<std::uint64_t>(k))
                             : support::random_connected_graph(n, 0.2 + 0.004 * k, rng);
        auto r = recognize_cd(g);
        if (!r.positive) continue;
        ++positive;
        EXPECT_TRUE(oracle::cd_structure_valid(g, *r.structure));
    }
    EXPECT_GT(positive, 40);
}

TEST(RecognizeCd, VerdictMatchesDefinitionalLp)
{
    std::mt19937_64 rng(33);
    int yes = 0;
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 4 + static_cast<std::size_t>(k % 6);
        Graph g = support::random_connected_graph(n, 0.25 + 0.003 * k, rng);
        auto r = recognize_cd(g);
        ASSERT_EQ(r.positive, oracle::is_cd_by_lp(g)) << k;
        yes += r.positive;
        if (!r.positive) {
            ASSERT_TRUE(r.refutation);
            EXPECT_TRUE(verify_refutation(*r.hypergraph, *r.refutation));
        }
    }
    EXPECT_GT(yes, 30);
    EXPECT_LT(yes, 190);
}

TEST(RecognizeCd, UniversalVertexPreservesVerdict)
{
    std::mt19937_64 rng(34);
    for (int k = 0; k < 150; ++k) {
        Graph g = support::random_connected_graph(4 + static_cast<std::size_t>(k % 6), 0.35, rng);
        EXPECT_EQ(recognize_cd(g).positive, recognize_cd(with_universal_vertex(g)).positive);
    }
    EXPECT_FALSE(recognize_cd(with_universal_vertex(cycle_graph(4))).positive);
}

TEST(RecognizeCd, CutsetHypergraphConsequences)
{
    std::mt19937_64 rng(35);
    for (int k = 0; k < 200; ++k) {
        Graph g = support::random_connected_graph(5 + static_cast<std::size_t>(k % 5), 0.35, rng);
        if (g.is_complete()) continue;
        auto r = recognize_cd(g);
        const Hypergraph& h = *r.hypergraph;
        if (check_family_property(h, FamilyProperty::one_sperner).holds) {
            EXPECT_TRUE(r.positive);
        }
        if (r.positive) {
            EXPECT_FALSE(summability_search(h, 2));
        }
    }
}

TEST(RecognizeTd, Examples)
{
    auto p6 = recognize_td(path_graph(6));
    EXPECT_FALSE(p6.positive);
    ASSERT_TRUE(p6.refutation);
    EXPECT_TRUE(verify_refutation(*p6.hypergraph, *p6.refutation));
    EXPECT_FALSE(oracle::is_td_by_lp(path_graph(6)));

    auto star = recognize_td(star_graph(3));
    ASSERT_TRUE(star.positive);
    EXPECT_EQ(star.structure->flavor, Flavor::td);
    EXPECT_TRUE(oracle::td_structure_valid(star_graph(3), *star.structure));
    EXPECT_TRUE(validates_td(star_graph(3), *star.structure));

    Graph isolated = build_graph(3, {{0, 1}});
    EXPECT_FALSE(recognize_td(isolated).positive);
    EXPECT_FALSE(recognize_td(isolated).structure);
}

TEST(RecognizeTd, VerdictAndStructuresMatchDefinition)
{
    std::mt19937_64 rng(36);
    int yes = 0;
    for (int k = 0; k < 200; ++k) {
        Graph g = support::random_connected_graph(3 + static_cast<std::size_t>(k % 7), 0.3 + 0.002 * k, rng);
        auto r = recognize_td(g);
        ASSERT_EQ(r.positive, oracle::is_td_by_lp(g)) << k;
        if (r.positive) {
            ++yes;
            EXPECT_TRUE(oracle::td_structure_valid(g, *r.structure));
            EXPECT_TRUE(validates_td(g, *r.structure));
        }
    }
    EXPECT_GT(yes, 30);
}

TEST(SplitGraphs, CutsetAndNeighborhoodHypergraphsCoincide)
{
    int checked = 0;
    for (const Graph& g : random_connected_split_graphs(300, 1)) {
        if (has_universal_vertex(g)) continue;
        ++checked;
        EXPECT_EQ(cutset_hypergraph(g), neighborhood_hypergraph(g));
    }
    EXPECT_GT(checked, 50);
}

TEST(SplitGraphs, CdIffTd)
{
    for (const Graph& g : random_connected_split_graphs(200, 1000))
        EXPECT_EQ(recognize_cd(g).positive, recognize_td(g).positive);
}

TEST(SplitGraphs, SplitIncidenceGraphIsCdIffHypergraphIsThreshold)
{
    std::mt19937_64 rng(37);
    int yes = 0, no = 0;
    for (int k = 0; k < 200; ++k) {
        Hypergraph h = support::random_sperner_hypergraph(2 + static_cast<std::size_t>(k % 6), 8, rng);
        bool threshold = is_threshold(h).threshold;
        EXPECT_EQ(threshold, recognize_cd(split_incidence_graph(h).graph).positive) << k;
        (threshold ? yes : no)++;
    }
    EXPECT_GT(yes, 20);
    EXPECT_GT(no, 20);
}

TEST(EnumerateMinCds, Examples)
{
    EXPECT_EQ(enumerate_min_cds(path_graph(6)), (SetFamily{{1, 2, 3, 4}}));
    EXPECT_EQ(enumerate_min_cds(gchain_graph(3)).size(), 2u);
    SetFamily pairs;
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = i + 1; j < 4; ++j) pairs.push_back({i, j});
    EXPECT_EQ(enumerate_min_cds(ssplit_graph(4)), pairs);
    EXPECT_EQ(oracle::minimal_cd_sets(ssplit_graph(4)), pairs);
    EXPECT_EQ(enumerate_min_cds(complete_graph(3)), (SetFamily{{0}, {1}, {2}}));
    EXPECT_EQ(enumerate_min_cds(Graph(1)), (SetFamily{{0}}));
    EXPECT_THROW(enumerate_min_cds(two_k2_graph()), DisconnectedGraph);
}

TEST(EnumerateMinCds, MatchesBruteForce)
{
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Graph& g : support::all_connected_graphs(n)) ASSERT_EQ(enumerate_min_cds(g), oracle::minimal_cd_sets(g));
    std::mt19937_64 rng(38);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 7 + static_cast<std::size_t>(k % 6);
        Graph g = support::random_connected_graph(n, 0.2 + 0.002 * k, rng);
        ASSERT_EQ(enumerate_min_cds(g), oracle::minimal_cd_sets(g)) << k;
    }
}

TEST(SolveWcds, Examples)
{
    auto p6 = solve_wcds(path_graph(6), std::vector<Rational>(6, Rational(1)));
    EXPECT_EQ(p6.cost, 4);
    EXPECT_EQ(p6.set, (VertexSet{1, 2, 3, 4}));
    EXPECT_EQ(p6.enumerated_count, 1u);

    auto k4 = solve_wcds(complete_graph(4), ints({5, 3, 3, 7}));
    EXPECT_EQ(k4.set, (VertexSet{1}));
    EXPECT_EQ(k4.cost, 3);

    std::vector<Rational> costs(10, Rational(10));
    for (std::size_t i = 0; i < 5; ++i) costs[i] = static_cast<long>(i + 1);
    auto s5 = solve_wcds(ssplit_graph(5), costs);
    EXPECT_EQ(s5.set, (VertexSet{0, 1}));
    EXPECT_EQ(s5.cost, 3);
    EXPECT_EQ(s5.cost, oracle::min_cd_cost(ssplit_graph(5), costs));

    EXPECT_THROW(solve_wcds(path_graph(3), ints({1, 1})), InvalidInput);
    EXPECT_THROW(solve_wcds(path_graph(3), ints({1, -1, 1})), InvalidInput);
    EXPECT_THROW(solve_wcds(two_k2_graph(), ints({1, 1, 1, 1})), DisconnectedGraph);
}

TEST(SolveWcds, MatchesBruteForce)
{
    std::mt19937_64 rng(39);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 3 + static_cast<std::size_t>(k % 10);
        Graph g = support::random_connected_graph(n, 0.25, rng);
        std::vector<Rational> costs(n);
        for (auto& c : costs) c = Rational(static_cast<long>(rng() % 20), static_cast<long>(rng() % 3 + 1));
        auto s = solve_wcds(g, costs);
        EXPECT_TRUE(verify_dominating(g, s.set, DominationMode::cd));
        Rational total = 0;
        for (Vertex v : s.set) total += costs[static_cast<std::size_t>(v)];
        EXPECT_EQ(s.cost, total);
        ASSERT_EQ(s.cost, oracle::min_cd_cost(g, costs)) << k;
    }
}

TEST(Counting, CutsetAndCdSetCountsBoundEachOther)
{
    std::vector<Graph> gs;
    for (std::size_t n = 4; n <= 8; ++n) gs.push_back(ssplit_graph(n));
    for (std::size_t n = 2; n <= 5; ++n) gs.push_back(gchain_graph(n));
    for (std::size_t n = 4; n <= 6; ++n) gs.push_back(kstar_graph(n));
    std::mt19937_64 rng(40);
    for (int k = 0; k < 200; ++k) gs.push_back(support::random_connected_graph(5 + static_cast<std::size_t>(k % 6), 0.35, rng));
    int checked = 0;
    for (const Graph& g : gs) {
        if (g.is_complete() || !recognize_cd(g).positive) continue;
        ++checked;
        const std::size_t n = g.order(), nu_s = minimal_cutsets(g).size(), nu_c = enumerate_min_cds(g).size();
        EXPECT_LE(nu_s, (n - 2) * nu_c);
        EXPECT_LE(nu_c, (n - 2) * nu_s);
    }
    EXPECT_GT(checked, 50);
}

TEST(Counting, ChordalCdGraphsHaveQuadraticallyManyMinimalCdSets)
{
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = seed % 2 ? random_chordal_graph(6 + seed % 20, seed) : random_split_graph(4 + seed % 20, seed);
        if (!recognize_cd(g).positive) continue;
        ++checked;
        EXPECT_LE(enumerate_min_cds(g).size(), g.order() * (g.order() - 2));
    }
    EXPECT_GT(checked, 50);
    for (std::size_t n = 4; n <= 12; ++n) EXPECT_EQ(enumerate_min_cds(ssplit_graph(n)).size(), n * (n - 1) / 2);
}

TEST(Validates, AgreesWithDefinitionOnPerturbedStructures)
{
    std::mt19937_64 rng(41);
    for (int k = 0; k < 150; ++k) {
        Graph g = support::random_connected_graph(4 + static_cast<std::size_t>(k % 5), 0.4, rng);
        auto cd = recognize_cd(g);
        if (cd.positive) {
            WeightedStructure s = *cd.structure;
            EXPECT_TRUE(validates_cd(g, s));
            s.weights[rng() % g.order()] += static_cast<long>(rng() % 3);
            s.threshold += static_cast<long>(rng() % 3) - 1;
            EXPECT_EQ(validates_cd(g, s), oracle::cd_structure_valid(g, s)) << k;
        }
        auto td = recognize_td(g);
        if (td.positive) {
            WeightedStructure s = *td.structure;
            EXPECT_TRUE(validates_td(g, s));
            s.weights[rng() % g.order()] += static_cast<long>(rng() % 3);
            s.threshold += static_cast<long>(rng() % 3) - 1;
            EXPECT_EQ(validates_td(g, s), oracle::td_structure_valid(g, s)) << k;
        }
    }
}
