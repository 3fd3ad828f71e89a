#pragma once

// Contractions: the quotient beta(G,S) whose vertices are the components of
// G[S] and G-S, general bag contraction, and the search for the forbidden
// contraction patterns used to certify s(G,w) < cs(G,w).

#include "safeset/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace safeset {

// Contract each bag to one vertex; bags must partition V(g) into nonempty sets.
inline Graph contract(const Graph& g, const std::vector<VertexSet>& bags) {
    VertexSet seen;
    for (std::size_t i = 0; i < bags.size(); ++i) {
        if (bags[i].empty()) throw InputError("bag " + std::to_string(i) + " is empty");
        g.check_subset(bags[i]);
        if (bags[i].intersects(seen)) throw InputError("bag " + std::to_string(i) + " overlaps an earlier bag at " + to_string(bags[i] & seen));
        seen |= bags[i];
    }
    if (seen != g.vertices()) throw InputError("bags miss vertices " + to_string(g.vertices() - seen));
    Graph q(static_cast<int>(bags.size()));
    for (std::size_t i = 0; i < bags.size(); ++i)
        for (std::size_t j = i + 1; j < bags.size(); ++j)
            if (adjacent(g, bags[i], bags[j])) q.add_edge(static_cast<int>(i), static_cast<int>(j));
    return q;
}

struct QuotientGraph {
    Graph quotient;
    std::vector<VertexSet> bags;
    std::vector<int> bag_of;    // vertex of G -> bag index
    std::vector<bool> in_s;     // per bag: component of G[S] (true) or of G-S (false)
};

// beta(G,S). Bags of G[S] come first, each group ordered by minimum vertex.
inline QuotientGraph beta(const Graph& g, VertexSet s) {
    g.check_subset(s);
    if (s.empty() || s == g.vertices()) throw InputError("beta needs a nonempty proper subset");
    if (!is_connected(g)) throw InputError("beta is defined on connected graphs");
    QuotientGraph q;
    for (VertexSet c : components(g, s)) {
        q.bags.push_back(c);
        q.in_s.push_back(true);
    }
    for (VertexSet d : components(g, g.vertices() - s)) {
        q.bags.push_back(d);
        q.in_s.push_back(false);
    }
    q.quotient = contract(g, q.bags);
    q.bag_of.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < q.bags.size(); ++i)
        for (int v : q.bags[i]) q.bag_of[v] = static_cast<int>(i);
    return q;
}

// Weight of each bag is the sum over its members.
inline WeightFn lift_weights(const QuotientGraph& q, const WeightFn& w) {
    if (w.size() != static_cast<int>(q.bag_of.size()))
        throw InputError("weight function has " + std::to_string(w.size()) + " entries, base graph has " +
                         std::to_string(q.bag_of.size()) + " vertices");
    std::vector<Rational> out;
    for (VertexSet b : q.bags) out.push_back(w.total(b));
    return WeightFn(std::move(out));
}

// ---------------------------------------------------------------- patterns

enum class Pattern { H1, H2, H3, KMN };

inline const char* pattern_name(Pattern p) {
    switch (p) {
        case Pattern::H1: return "H1";
        case Pattern::H2: return "H2";
        case Pattern::H3: return "H3";
        case Pattern::KMN: return "KMN";
    }
    return "?";
}

inline std::optional<Pattern> parse_pattern(std::string_view name) {
    for (Pattern p : {Pattern::H1, Pattern::H2, Pattern::H3, Pattern::KMN})
        if (name == pattern_name(p)) return p;
    return std::nullopt;
}

// The three five-vertex subgraphs of K_{2,3} outside the family, on u1..u5
// (indices 0..4). Every one has {u2,u4} as its unique minimum safe set under
// the matching witness weights. This is the only place their edges live.
inline Graph h_pattern_graph(Pattern p) {
    switch (p) {
        case Pattern::H1:  // path u1-u2-u3-u4-u5
            return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        case Pattern::H2:  // 4-cycle u1u2u3u4 with u5 pendant on u4
            return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
        case Pattern::H3:  // K_{2,3}: {u2,u4} versus {u1,u3,u5}
            return Graph(5, {{1, 0}, {1, 2}, {1, 4}, {3, 0}, {3, 2}, {3, 4}});
        case Pattern::KMN: break;
    }
    throw InputError("KMN has no fixed pattern graph");
}

inline Graph complete_bipartite(int m, int n) {
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

struct PatternMatch {
    Pattern pattern = Pattern::H1;
    // H1/H2/H3: V1..V5. KMN: the m bags of one side, then the n of the other.
    std::vector<VertexSet> bags;
    int m = 0;
    int n = 0;
    std::optional<int> big_bag;        // KMN: index of the only bag with >= 2 vertices
    std::optional<int> distinguished;  // H3: v4, the only vertex of V4 touching V5

    friend bool operator==(const PatternMatch&, const PatternMatch&) = default;
};

inline Graph target_graph(const PatternMatch& match) {
    return match.pattern == Pattern::KMN ? complete_bipartite(match.m, match.n) : h_pattern_graph(match.pattern);
}

namespace detail {

// Side conditions on an H-pattern partition whose quotient is already known
// to be the pattern graph. Returns the violated condition, if any.
inline std::optional<std::string> h_side_conditions(const Graph& g, Pattern p, const std::vector<VertexSet>& bags,
                                                    std::optional<int>* chosen_v4 = nullptr) {
    if (!is_connected(g, bags[1])) return "V2 is not connected";
    if (!is_connected(g, bags[3])) return "V4 is not connected";
    if (p == Pattern::H2) {
        if (edge_count_between(g, bags[0], bags[1]) != 1) return "|E(V1,V2)| != 1";
        if (edge_count_between(g, bags[1], bags[2]) != 1) return "|E(V2,V3)| != 1";
    }
    if (p == Pattern::H3) {
        if (bags[0].size() != 1 || bags[1].size() != 1) return "V1 and V2 must be singletons";
        if (!is_connected(g, bags[2])) return "V3 is not connected";
        const int to_v5 = edge_count_between(g, bags[3], bags[4]);
        for (int v4 : bags[3]) {
            const VertexSet one = VertexSet::single(v4);
            if (adjacent(g, one, bags[2]) && edge_count_between(g, one, bags[4]) == to_v5) {
                if (chosen_v4) *chosen_v4 = v4;
                return std::nullopt;
            }
        }
        return "no vertex of V4 touches V3 and carries every V4-V5 edge";
    }
    return std::nullopt;
}

}  // namespace detail

// Checks every invariant of a match against g; nullopt means valid.
inline std::optional<std::string> match_violation(const Graph& g, const PatternMatch& match) {
    Graph quotient;
    try {
        quotient = contract(g, match.bags);
    } catch (const InputError& e) {
        return std::string("bags are not a partition: ") + e.what();
    }
    if (match.pattern == Pattern::KMN) {
        if (match.m < 2 || match.n < 2 || match.m == match.n) return "KMN needs m != n with m, n >= 2";
        if (static_cast<int>(match.bags.size()) != match.m + match.n) return "KMN bag count differs from m + n";
        if (quotient != complete_bipartite(match.m, match.n)) return "quotient is not K_{m,n} in the listed bag order";
        std::optional<int> big;
        for (std::size_t i = 0; i < match.bags.size(); ++i) {
            if (match.bags[i].size() < 2) continue;
            if (big) return "more than one bag has two or more vertices";
            big = static_cast<int>(i);
        }
        if (big != match.big_bag) return "big_bag does not name the only large bag";
        if (big && !is_connected(g, match.bags[*big])) return "the large bag is not connected";
        return std::nullopt;
    }
    if (match.bags.size() != 5) return "H patterns need exactly five bags";
    if (quotient != h_pattern_graph(match.pattern)) return "quotient differs from the pattern graph";
    if (auto why = detail::h_side_conditions(g, match.pattern, match.bags)) return why;
    if (match.pattern == Pattern::H3) {
        if (!match.distinguished) return "H3 match lacks v4";
        const int v4 = *match.distinguished;
        const VertexSet one = VertexSet::single(v4);
        if (!match.bags[3].contains(v4)) return "v4 is not in V4";
        if (!adjacent(g, one, match.bags[2])) return "v4 has no neighbor in V3";
        if (edge_count_between(g, one, match.bags[4]) != edge_count_between(g, match.bags[3], match.bags[4]))
            return "some V4-V5 edge avoids v4";
    }
    return std::nullopt;
}

struct PatternSearchResult {
    std::optional<PatternMatch> match;
    std::uint64_t examined = 0;  // candidate partitions looked at
    bool exhausted = false;      // true when the whole space was searched without a match
};

inline constexpr std::uint64_t kDefaultPatternBudget = 1'000'000;

namespace detail {

class HPatternSearch {
 public:
    HPatternSearch(const Graph& g, Pattern p, std::uint64_t budget) : g_(g), p_(p), budget_(budget) {
        const Graph h = h_pattern_graph(p);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) forbidden_[a][b] = a != b && !h.has_edge(a, b);
        h_ = h;
    }

    PatternSearchResult run() {
        PatternSearchResult r;
        // Few large bags first: most contractions the proofs build have at most two.
        for (int cap : {1, 2, 5}) {
            if (g_.order() < 5) break;
            bags_.fill(VertexSet{});
            if (descend(0, cap)) break;
            if (out_of_budget_) break;
        }
        r.match = found_;
        r.examined = examined_;
        r.exhausted = !found_ && !out_of_budget_;
        return r;
    }

 private:
    bool descend(int v, int cap) {
        const int n = g_.order();
        if (v == n) return leaf();
        int empty = 0, big = 0;
        for (const auto& b : bags_) {
            empty += b.empty();
            big += b.size() >= 2;
        }
        if (empty > n - v) return false;
        const VertexSet nb = g_.neighbors(v);
        for (int b = 0; b < 5; ++b) {
            if (bags_[b].size() == 1 && big >= cap) continue;
            bool ok = true;
            for (int c = 0; c < 5 && ok; ++c)
                if (forbidden_[b][c] && nb.intersects(bags_[c])) ok = false;
            if (!ok) continue;
            bags_[b].insert(v);
            const bool done = descend(v + 1, cap);
            bags_[b].erase(v);
            if (done || out_of_budget_) return done;
        }
        return false;
    }

    bool leaf() {
        if (examined_ >= budget_) {
            out_of_budget_ = true;
            return false;
        }
        ++examined_;
        // forbidden adjacencies were pruned on the way down; check required ones
        for (auto [a, b] : h_.edges())
            if (!adjacent(g_, bags_[a], bags_[b])) return false;
        std::vector<VertexSet> bags(bags_.begin(), bags_.end());
        std::optional<int> v4;
        if (h_side_conditions(g_, p_, bags, &v4)) return false;
        found_ = PatternMatch{p_, std::move(bags), 0, 0, std::nullopt, p_ == Pattern::H3 ? v4 : std::nullopt};
        return true;
    }

    const Graph& g_;
    Pattern p_;
    Graph h_;
    std::uint64_t budget_;
    std::uint64_t examined_ = 0;
    bool out_of_budget_ = false;
    std::array<std::array<bool, 5>, 5> forbidden_{};
    std::array<VertexSet, 5> bags_{};
    std::optional<PatternMatch> found_;
};

// Quotient after merging z into one vertex must be K_{m,n}, m != n, m,n >= 2.
inline std::optional<PatternMatch> kmn_with_bag(const Graph& g, VertexSet z) {
    std::vector<VertexSet> bags;
    for (int v : g.vertices() - z)
        if (v < z.min()) bags.push_back(VertexSet::single(v));
    bags.push_back(z);
    for (int v : g.vertices() - z)
        if (v > z.min()) bags.push_back(VertexSet::single(v));
    const Graph q = contract(g, bags);
    auto sides = bipartition(q);
    if (!sides) return std::nullopt;
    const int a = sides->first.size(), b = sides->second.size();
    if (a < 2 || b < 2 || a == b || q.edge_count() != a * b) return std::nullopt;
    VertexSet small = a < b ? sides->first : sides->second;
    VertexSet large = a < b ? sides->second : sides->first;
    PatternMatch match{Pattern::KMN, {}, small.size(), large.size(), std::nullopt, std::nullopt};
    for (VertexSet side : {small, large})
        for (int i : side) {
            if (bags[i].size() >= 2) match.big_bag = static_cast<int>(match.bags.size());
            match.bags.push_back(bags[i]);
        }
    return match;
}

inline PatternSearchResult search_kmn(const Graph& g, std::uint64_t budget) {
    PatternSearchResult r;
    const int n = g.order();
    for (int k = 1; k <= n - 4; ++k) {
        std::uint64_t s = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
        while (s < limit) {
            const VertexSet z(s);
            if (k == 1 || is_connected(g, z)) {
                if (r.examined >= budget) return r;
                ++r.examined;
                if (auto m = kmn_with_bag(g, z)) {
                    r.match = std::move(m);
                    return r;
                }
            }
            // K_{m,n} without a large bag is the graph itself; one singleton suffices
            if (k == 1) break;
            const std::uint64_t c = s & (~s + 1);
            const std::uint64_t nx = s + c;
            s = (((nx ^ s) >> 2) / c) | nx;
        }
    }
    r.exhausted = true;
    return r;
}

}  // namespace detail

// Absence of a match means "unknown" unless `exhausted` is set.
inline PatternSearchResult search_pattern(const Graph& g, Pattern p, std::uint64_t budget = kDefaultPatternBudget) {
    if (!is_connected(g)) throw InputError("pattern search needs a connected graph");
    if (p == Pattern::KMN) return detail::search_kmn(g, budget);
    return detail::HPatternSearch(g, p, budget).run();
}

inline std::optional<PatternMatch> find_pattern(const Graph& g, Pattern p, std::uint64_t budget = kDefaultPatternBudget) {
    return search_pattern(g, p, budget).match;
}

// deg(v) >= 3, N(v) independent, every neighbor of v has degree >= 2, and
// G - N[v] connected: contracting G - N[v] then yields K_{2,deg(v)}.
inline bool k2n_star_condition(const Graph& g, int v) {
    g.check_vertex(v);
    const VertexSet nb = g.neighbors(v);
    if (nb.size() < 3) return false;
    if (adjacent(g, nb, nb)) return false;
    for (int u : nb)
        if (g.degree(u) < 2) return false;
    return is_connected(g, g.vertices() - g.closed_neighbors(v));
}

inline std::optional<PatternMatch> k2n_star_match(const Graph& g, int v) {
    if (!k2n_star_condition(g, v)) return std::nullopt;
    const VertexSet z = g.vertices() - g.closed_neighbors(v);
    PatternMatch match{Pattern::KMN, {}, 2, g.degree(v), std::nullopt, std::nullopt};
    match.bags.push_back(VertexSet::single(v));
    match.bags.push_back(z);
    if (z.size() >= 2) match.big_bag = 1;
    for (int u : g.neighbors(v)) match.bags.push_back(VertexSet::single(u));
    return match;
}

}  // namespace safeset
