#include "fixtures.hpp"
#include "oracles.hpp"
#include "safeset/contraction.hpp"
#include "safeset/enumerate.hpp"
#include "safeset/graph6.hpp"

#include <gtest/gtest.h>

using namespace safeset;

namespace {

// Pattern edges written out again, on u1..u5 = 0..4.
const std::vector<std::pair<int, int>>& pattern_edges(Pattern p) {
    static const std::vector<std::pair<int, int>> h1{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    static const std::vector<std::pair<int, int>> h2{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}};
    static const std::vector<std::pair<int, int>> h3{{0, 1}, {1, 2}, {1, 4}, {0, 3}, {2, 3}, {3, 4}};
    return p == Pattern::H1 ? h1 : p == Pattern::H2 ? h2 : h3;
}

int crossing(const oracle::Matrix& a, std::uint64_t x, std::uint64_t y) {
    const int n = static_cast<int>(a.size());
    int count = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) count += ((x >> u) & 1U) && ((y >> v) & 1U) && a[u][v];
    return count;
}

bool connected(const oracle::Matrix& a, std::uint64_t x) { return oracle::components(a, x).size() == 1; }

// Independent check of the H-pattern conditions for bags V1..V5.
bool h_valid(const oracle::Matrix& a, Pattern p, const std::array<std::uint64_t, 5>& v) {
    for (auto b : v)
        if (b == 0) return false;
    oracle::Matrix want = oracle::matrix(5, pattern_edges(p));
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (oracle::touches(a, v[i], v[j]) != want[i][j]) return false;
    if (!connected(a, v[1]) || !connected(a, v[3])) return false;
    if (p == Pattern::H2) return crossing(a, v[0], v[1]) == 1 && crossing(a, v[1], v[2]) == 1;
    if (p == Pattern::H3) {
        if (std::popcount(v[0]) != 1 || std::popcount(v[1]) != 1 || !connected(a, v[2])) return false;
        for (int x : oracle::members(v[3], static_cast<int>(a.size()))) {
            const std::uint64_t one = std::uint64_t{1} << x;
            if (oracle::touches(a, one, v[2]) && crossing(a, one, v[4]) == crossing(a, v[3], v[4])) return true;
        }
        return false;
    }
    return true;
}

// Every assignment of vertices to five labelled bags.
bool h_exists(const oracle::Matrix& a, Pattern p) {
    const int n = static_cast<int>(a.size());
    if (n < 5) return false;
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    while (true) {
        std::array<std::uint64_t, 5> v{};
        for (int x = 0; x < n; ++x) v[label[x]] |= std::uint64_t{1} << x;
        if (h_valid(a, p, v)) return true;
        int i = 0;
        while (i < n && ++label[i] == 5) label[i++] = 0;
        if (i == n) return false;
    }
}

// A connected Z whose contraction (others singletons) is K_{m,n}, m != n, m,n >= 2.
bool kmn_exists(const oracle::Matrix& a) {
    const int n = static_cast<int>(a.size());
    for (std::uint64_t z = 1; z < (std::uint64_t{1} << n); ++z) {
        if (!connected(a, z)) continue;
        std::vector<std::uint64_t> bags{z};
        for (int x = 0; x < n; ++x)
            if (!((z >> x) & 1U)) bags.push_back(std::uint64_t{1} << x);
        const int k = static_cast<int>(bags.size());
        oracle::Matrix q(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) q[i][j] = i != j && oracle::touches(a, bags[i], bags[j]);
        // complete bipartite: bags split by adjacency to bag 0
        std::vector<int> side(static_cast<std::size_t>(k));
        int left = 1;
        for (int i = 1; i < k; ++i) left += !(side[i] = q[0][i]);
        const int right = k - left;
        bool ok = left >= 2 && right >= 2 && left != right;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j)
                if (q[i][j] != (side[i] != side[j])) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST(Beta, Examples) {
    const auto p5 = beta(fx::path(5), VertexSet{1, 3});
    EXPECT_TRUE(oracle::isomorphic(fx::to_matrix(p5.quotient), fx::to_matrix(fx::path(5))));
    EXPECT_EQ(p5.bags, (std::vector<VertexSet>{VertexSet{1}, VertexSet{3}, VertexSet{0}, VertexSet{2}, VertexSet{4}}));
    EXPECT_EQ(p5.in_s, (std::vector<bool>{true, true, false, false, false}));

    // a side of K_{3,3} is independent, so every component is a singleton
    const auto k33 = beta(fx::kmn(3, 3), VertexSet{0, 1, 2});
    EXPECT_EQ(k33.quotient, fx::kmn(3, 3));
    const auto k33_edge = beta(fx::kmn(3, 3), VertexSet{0, 3});
    EXPECT_EQ(k33_edge.quotient, fx::path(2));  // an edge and the K_{2,2} left over

    const auto c6 = beta(fx::cycle(6), VertexSet{0, 3});
    EXPECT_EQ(c6.bags, (std::vector<VertexSet>{VertexSet{0}, VertexSet{3}, VertexSet{1, 2}, VertexSet{4, 5}}));
    EXPECT_TRUE(oracle::isomorphic(fx::to_matrix(c6.quotient), fx::to_matrix(fx::cycle(4))));
    EXPECT_EQ(c6.bag_of, (std::vector<int>{0, 2, 2, 1, 3, 3}));
}

TEST(Beta, RejectsTrivialSets) {
    EXPECT_THROW(beta(fx::path(3), VertexSet{}), InputError);
    EXPECT_THROW(beta(fx::path(3), VertexSet{0, 1, 2}), InputError);
    EXPECT_THROW(beta(Graph(2), VertexSet{0}), InputError);
}

TEST(LiftWeights, SumsEachBag) {
    const auto q = beta(fx::cycle(6), VertexSet{0, 3});
    const auto w = lift_weights(q, WeightFn::from_integers({1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(w.values(), WeightFn::from_integers({1, 4, 5, 11}).values());
    const auto k33 = beta(fx::kmn(3, 3), VertexSet{3, 4, 5});
    EXPECT_EQ(lift_weights(k33, WeightFn::constant(6, Rational(1))).values(), WeightFn::constant(6, Rational(1)).values());
    const auto k24 = beta(fx::kmn(2, 4), VertexSet{0, 2});
    EXPECT_EQ(lift_weights(k24, WeightFn::constant(6, Rational(1))).values(), WeightFn::from_integers({2, 4}).values());
    EXPECT_THROW(lift_weights(q, WeightFn::constant(5, Rational(1))), InputError);
}

// beta is bipartite between S-bags and the rest, adjacency follows G, bags are connected.
TEST(Beta, QuotientInvariantsOnRandomSets) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g(n, oracle::random_connected(n, 0.25, rng));
        const std::uint64_t mask = rng() & VertexSet::range(n).bits();
        if (mask == 0 || mask == VertexSet::range(n).bits()) continue;
        const auto q = beta(g, VertexSet(mask));
        const auto a = fx::to_matrix(g);
        VertexSet cover;
        for (std::size_t i = 0; i < q.bags.size(); ++i) {
            EXPECT_TRUE(connected(a, q.bags[i].bits()));
            EXPECT_EQ(q.bags[i].is_subset_of(VertexSet(mask)), q.in_s[i]);
            cover |= q.bags[i];
            for (std::size_t j = 0; j < q.bags.size(); ++j) {
                if (i == j) continue;
                const bool edge = q.quotient.has_edge(static_cast<int>(i), static_cast<int>(j));
                EXPECT_EQ(edge, oracle::touches(a, q.bags[i].bits(), q.bags[j].bits()));
                if (edge) EXPECT_NE(q.in_s[i], q.in_s[j]);
            }
        }
        EXPECT_EQ(cover, g.vertices());
        EXPECT_TRUE(is_bipartite(q.quotient));
    }
}

TEST(Beta, SingletonComponentsGiveBackTheGraph) {
    // S an independent set whose complement is independent too: every component is a singleton
    for (int n : {2, 4, 6, 8}) {
        const Graph c = n == 2 ? fx::path(2) : fx::cycle(n);
        std::uint64_t even = 0;
        for (int v = 0; v < n; v += 2) even |= std::uint64_t{1} << v;
        const auto q = beta(c, VertexSet(even));
        EXPECT_TRUE(oracle::isomorphic(fx::to_matrix(q.quotient), fx::to_matrix(c)));
    }
}

TEST(Contract, ValidatesThePartition) {
    EXPECT_EQ(contract(fx::path(4), {VertexSet{0, 1}, VertexSet{2, 3}}), fx::path(2));
    EXPECT_THROW(contract(fx::path(4), {VertexSet{0, 1}, VertexSet{1, 2, 3}}), InputError);
    EXPECT_THROW(contract(fx::path(4), {VertexSet{0, 1}, VertexSet{2}}), InputError);
    EXPECT_THROW(contract(fx::path(4), {VertexSet{0, 1, 2, 3}, VertexSet{}}), InputError);
}

TEST(FindPattern, Examples) {
    auto p5 = find_pattern(fx::path(5), Pattern::H1);
    ASSERT_TRUE(p5);
    EXPECT_EQ(p5->bags, (std::vector<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3}, VertexSet{4}}));

    const Graph c4p = fx::c4_pendant();
    auto h2 = find_pattern(c4p, Pattern::H2);
    ASSERT_TRUE(h2);
    for (VertexSet b : h2->bags) EXPECT_EQ(b.size(), 1);
    EXPECT_EQ(c4p.degree(h2->bags[4].min()), 1);
    EXPECT_FALSE(match_violation(c4p, *h2));

    auto k24 = find_pattern(fx::kmn(2, 4), Pattern::KMN);
    ASSERT_TRUE(k24);
    EXPECT_EQ(k24->m, 2);
    EXPECT_EQ(k24->n, 4);
    EXPECT_FALSE(k24->big_bag);
    for (VertexSet b : k24->bags) EXPECT_EQ(b.size(), 1);

    EXPECT_TRUE(find_pattern(fx::kmn(2, 3), Pattern::H3));
    EXPECT_FALSE(find_pattern(fx::kmn(3, 3), Pattern::KMN));
    EXPECT_FALSE(find_pattern(fx::cycle(6), Pattern::H1));
}

TEST(FindPattern, BudgetExhaustionMeansUnknown) {
    const auto r = search_pattern(fx::cycle(12), Pattern::H1, 5);
    EXPECT_EQ(r.examined, 5U);
    EXPECT_FALSE(r.match);
    EXPECT_FALSE(r.exhausted);
    const auto none = search_pattern(fx::path(5), Pattern::H1, 0);
    EXPECT_FALSE(none.match);
    EXPECT_FALSE(none.exhausted);
    const auto full = search_pattern(fx::cycle(5), Pattern::H1);
    EXPECT_FALSE(full.match);
    EXPECT_TRUE(full.exhausted);
}

TEST(MatchViolation, NamesTheBrokenCondition) {
    PatternMatch m{Pattern::H1, {VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3}, VertexSet{4}}, 0, 0, {}, {}};
    EXPECT_FALSE(match_violation(fx::path(5), m));
    EXPECT_TRUE(match_violation(fx::cycle(5), m));
    m.bags.pop_back();
    EXPECT_TRUE(match_violation(fx::path(5), m));
    PatternMatch k{Pattern::KMN, {VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3}, VertexSet{4}}, 2, 3, {}, {}};
    EXPECT_FALSE(match_violation(fx::kmn(2, 3), k));
    k.big_bag = 0;
    EXPECT_TRUE(match_violation(fx::kmn(2, 3), k));
}

// Soundness on every connected graph up to order 7, and for order <= 6
// agreement with an unpruned search over all bag assignments.
TEST(FindPattern, SoundAndCompleteOnSmallGraphs) {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            const auto a = fx::to_matrix(g);
            for (Pattern p : {Pattern::H1, Pattern::H2, Pattern::H3, Pattern::KMN}) {
                const auto r = search_pattern(g, p);
                ASSERT_TRUE(r.match || r.exhausted) << to_graph6(g);
                if (r.match) {
                    EXPECT_FALSE(match_violation(g, *r.match)) << to_graph6(g) << ' ' << pattern_name(p);
                    EXPECT_EQ(contract(g, r.match->bags), target_graph(*r.match));
                    if (p != Pattern::KMN) {
                        std::array<std::uint64_t, 5> v{};
                        for (int i = 0; i < 5; ++i) v[i] = r.match->bags[i].bits();
                        EXPECT_TRUE(h_valid(a, p, v)) << to_graph6(g) << ' ' << pattern_name(p);
                    }
                }
                if (n <= 6) {
                    const bool exists = p == Pattern::KMN ? kmn_exists(a) : h_exists(a, p);
                    EXPECT_EQ(r.match.has_value(), exists) << to_graph6(g) << ' ' << pattern_name(p);
                }
            }
        }
}

TEST(K2nStar, Examples) {
    EXPECT_FALSE(k2n_star_condition(fx::star(3), 0));
    // In K_{3,3} the rest after removing N[v] is two non-adjacent vertices.
    for (int v = 0; v < 6; ++v) EXPECT_FALSE(k2n_star_condition(fx::kmn(3, 3), v));
    EXPECT_FALSE(k2n_star_condition(fx::cycle(6), 0));
    EXPECT_TRUE(k2n_star_condition(fx::kmn(2, 3), 0));
    EXPECT_FALSE(k2n_star_condition(fx::kmn(2, 3), 2));  // degree 2
    auto m = k2n_star_match(fx::kmn(2, 4), 0);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->m, 2);
    EXPECT_EQ(m->n, 4);
    EXPECT_FALSE(match_violation(fx::kmn(2, 4), *m));
}

TEST(K2nStar, MatchesAreValidWheneverTheConditionHolds) {
    int hits = 0;
    for (int n = 4; n <= 7; ++n)
        for (const Graph& g : enumerate_connected_graphs(n))
            for (int v = 0; v < n; ++v) {
                auto m = k2n_star_match(g, v);
                EXPECT_EQ(m.has_value(), k2n_star_condition(g, v));
                if (!m) continue;
                ++hits;
                EXPECT_FALSE(match_violation(g, *m)) << to_graph6(g) << " v=" << v;
            }
    EXPECT_GT(hits, 0);
}
