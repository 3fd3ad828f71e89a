#pragma once

// Simple undirected graphs on vertices 0..n-1 (n <= 64) stored as adjacency
// bitrows, plus the structural queries the rest of the library consumes.

#include "safeset/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace safeset {

// Raised for malformed caller input (bad ids, overlapping sets, wrong lengths).
class InputError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxVertices = 64;

class VertexSet {
 public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> ids) {
        for (int v : ids) insert(v);
    }

    static VertexSet from_ids(const std::vector<int>& ids) {
        VertexSet s;
        for (int v : ids) s.insert(v);
        return s;
    }
    // {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int min() const { return std::countr_zero(bits_); }
    constexpr int max() const { return 63 - std::countl_zero(bits_); }

    void insert(int v) {
        if (v < 0 || v >= kMaxVertices) throw InputError("vertex id out of range: " + std::to_string(v));
        bits_ |= std::uint64_t{1} << v;
    }
    void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    std::vector<int> ids() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v : *this) out.push_back(v);
        return out;
    }

    class iterator {
     public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

     private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
    std::uint64_t bits_ = 0;
};

// Lexicographic order of the sorted id lists ({0,3} < {1,2}, {0} < {0,1}).
inline bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    int x = std::countr_zero(diff);
    std::uint64_t above = x >= 63 ? 0 : (~std::uint64_t{0} << (x + 1));
    if (a.contains(x)) return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

inline std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

using Edge = std::pair<int, int>;

class Graph {
 public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 0 || n > kMaxVertices) throw InputError("graph order out of range: " + std::to_string(n));
    }
    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[u] |= VertexSet::single(v);
        adj_[v] |= VertexSet::single(u);
    }

    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighbors(int v) const { return adj_[v] | VertexSet::single(v); }
    int degree(int v) const { return adj_[v].size(); }

    // Union of neighborhoods of the members of s (may intersect s).
    VertexSet neighbors(VertexSet s) const {
        VertexSet out;
        for (int v : s) out |= adj_[v];
        return out;
    }

    int edge_count() const {
        int twice = 0;
        for (const auto& row : adj_) twice += row.size();
        return twice / 2;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }
    int min_degree() const {
        if (n_ == 0) return 0;
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    // Subgraph induced on s, relabelled to 0..|s|-1 in increasing id order.
    Graph induced(VertexSet s) const {
        std::vector<int> ids = s.ids();
        std::vector<int> pos(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
        Graph h(static_cast<int>(ids.size()));
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (int v : adj_[ids[i]] & s)
                if (pos[v] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), pos[v]);
        return h;
    }

    // Copy with one extra vertex n joined to `attach`.
    Graph with_pendant(int attach) const {
        Graph h(n_ + 1);
        h.adj_.assign(adj_.begin(), adj_.end());
        h.adj_.emplace_back();
        h.add_edge(attach, n_);
        return h;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InputError("vertex id " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }
    void check_subset(VertexSet s) const {
        if (!s.is_subset_of(vertices())) throw InputError("vertex set " + to_string(s) + " exceeds graph order " + std::to_string(n_));
    }

    friend bool operator==(const Graph&, const Graph&) = default;

 private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------- weights

class WeightFn {
 public:
    WeightFn() = default;
    explicit WeightFn(std::vector<Rational> w) : w_(std::move(w)) {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i].sign() < 0) throw InputError("negative weight at vertex " + std::to_string(i) + ": " + w_[i].str());
    }
    static WeightFn constant(int n, const Rational& value) {
        return WeightFn(std::vector<Rational>(static_cast<std::size_t>(n), value));
    }
    static WeightFn from_integers(const std::vector<std::int64_t>& w) {
        std::vector<Rational> r;
        r.reserve(w.size());
        for (auto x : w) r.emplace_back(x);
        return WeightFn(std::move(r));
    }

    int size() const { return static_cast<int>(w_.size()); }
    const Rational& operator[](int v) const { return w_[v]; }
    const std::vector<Rational>& values() const { return w_; }

    Rational total(VertexSet s) const {
        Rational sum;
        for (int v : s) sum += w_[v];
        return sum;
    }

    WeightFn scaled(const Rational& c) const {
        if (c.sign() < 0) throw InputError("negative scale factor");
        std::vector<Rational> r = w_;
        for (auto& x : r) x *= c;
        return WeightFn(std::move(r));
    }

    void check_matches(const Graph& g) const {
        if (size() != g.order())
            throw InputError("weight function has " + std::to_string(size()) + " entries, graph has " + std::to_string(g.order()) + " vertices");
    }

    friend bool operator==(const WeightFn&, const WeightFn&) = default;

 private:
    std::vector<Rational> w_;
};

// ---------------------------------------------------------------- queries

// Vertices reachable from `start` inside `within`.
inline VertexSet reach(const Graph& g, int start, VertexSet within) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next = (g.neighbors(frontier) & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

// Components of g[s], ordered by minimum vertex id.
inline std::vector<VertexSet> components(const Graph& g, VertexSet s) {
    g.check_subset(s);
    std::vector<VertexSet> out;
    VertexSet rest = s;
    while (!rest.empty()) {
        VertexSet c = reach(g, rest.min(), rest);
        out.push_back(c);
        rest -= c;
    }
    return out;
}

inline bool is_connected(const Graph& g, VertexSet s) {
    if (s.empty()) return false;
    return reach(g, s.min(), s) == s;
}
inline bool is_connected(const Graph& g) { return g.order() > 0 && is_connected(g, g.vertices()); }

// E_G(a, b) as (u in a, v in b) pairs, ascending by u then v.
inline std::vector<Edge> edge_set_between(const Graph& g, VertexSet a, VertexSet b) {
    g.check_subset(a);
    g.check_subset(b);
    if (a.intersects(b)) throw InputError("edge_set_between: sets overlap in " + to_string(a & b));
    std::vector<Edge> out;
    for (int u : a)
        for (int v : g.neighbors(u) & b) out.emplace_back(u, v);
    return out;
}

inline bool adjacent(const Graph& g, VertexSet a, VertexSet b) { return g.neighbors(a).intersects(b); }

// Number of edges between disjoint a and b.
inline int edge_count_between(const Graph& g, VertexSet a, VertexSet b) {
    int c = 0;
    for (int u : a) c += (g.neighbors(u) & b).size();
    return c;
}

// BFS distances from `source`; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    VertexSet seen = VertexSet::single(source);
    VertexSet frontier = seen;
    for (int d = 0; !frontier.empty(); ++d) {
        for (int v : frontier) dist[v] = d;
        VertexSet next = g.neighbors(frontier) - seen;
        seen |= next;
        frontier = next;
    }
    return dist;
}

inline int eccentricity(const Graph& g, int v) {
    auto dist = bfs_distances(g, v);
    int e = 0;
    for (int d : dist) {
        if (d < 0) throw InputError("eccentricity undefined: graph is disconnected");
        e = std::max(e, d);
    }
    return e;
}

inline int diameter(const Graph& g) {
    if (g.order() == 0) throw InputError("diameter of the empty graph");
    if (!is_connected(g)) throw InputError("diameter undefined: graph is disconnected");
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, eccentricity(g, v));
    return d;
}

struct ChordalityResult {
    bool chordal = false;
    // Perfect elimination ordering (each vertex's later neighbors form a clique); empty unless chordal.
    std::vector<int> elimination_order;
};

inline bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s)
        if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
    return true;
}

inline bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.order()) return false;
    VertexSet later = g.vertices();
    for (int v : order) {
        if (!later.contains(v)) return false;
        later.erase(v);
        if (!is_clique(g, g.neighbors(v) & later)) return false;
    }
    return true;
}

// Maximum cardinality search; the reverse visit order is a perfect
// elimination ordering iff the graph is chordal.
inline ChordalityResult chordality(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(n));
    VertexSet unvisited = g.vertices();
    while (!unvisited.empty()) {
        int best = unvisited.min();
        for (int v : unvisited)
            if (weight[v] > weight[best]) best = v;
        visit.push_back(best);
        unvisited.erase(best);
        for (int u : g.neighbors(best) & unvisited) ++weight[u];
    }
    std::reverse(visit.begin(), visit.end());
    ChordalityResult r;
    if (is_perfect_elimination_order(g, visit)) {
        r.chordal = true;
        r.elimination_order = std::move(visit);
    }
    return r;
}

inline bool is_chordal(const Graph& g) { return chordality(g).chordal; }

// 2-colouring; in each component the side holding the smallest id goes
// first. Absent when an odd cycle exists.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    VertexSet first, second;
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        int root = rest.min();
        VertexSet mine = VertexSet::single(root), other;
        VertexSet frontier = mine, seen = mine;
        bool side = false;
        while (!frontier.empty()) {
            VertexSet next = g.neighbors(frontier) - seen;
            side = !side;
            (side ? other : mine) |= next;
            seen |= next;
            frontier = next;
        }
        if (adjacent(g, mine, mine) || adjacent(g, other, other)) return std::nullopt;
        first |= mine;
        second |= other;
        rest -= seen;
    }
    return std::make_pair(first, second);
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (v > u && (g.neighbors(u) & g.neighbors(v)).size() > 0) return false;
    return true;
}

inline bool is_dominating(const Graph& g, VertexSet s) {
    return (s | g.neighbors(s)) == g.vertices();
}

// All dominating cliques of size <= max_size, by size then lexicographically.
inline std::vector<VertexSet> dominating_cliques(const Graph& g, int max_size) {
    std::vector<VertexSet> cliques;
    // grow cliques in increasing id order so each is produced once
    std::vector<std::pair<VertexSet, VertexSet>> layer;  // (clique, candidates > max id)
    for (int v = 0; v < g.order(); ++v) {
        VertexSet above = VertexSet(g.vertices().bits() & ~((std::uint64_t{2} << v) - 1));
        layer.emplace_back(VertexSet::single(v), g.neighbors(v) & above);
    }
    for (int size = 1; size <= max_size && !layer.empty(); ++size) {
        std::vector<VertexSet> found;
        std::vector<std::pair<VertexSet, VertexSet>> next;
        for (const auto& [k, cand] : layer) {
            if (is_dominating(g, k)) found.push_back(k);
            for (int v : cand) {
                VertexSet above = VertexSet(cand.bits() & ~((std::uint64_t{2} << v) - 1));
                next.emplace_back(k | VertexSet::single(v), above & g.neighbors(v));
            }
        }
        std::sort(found.begin(), found.end(), lex_less);
        cliques.insert(cliques.end(), found.begin(), found.end());
        layer = std::move(next);
    }
    return cliques;
}

inline bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

inline bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.order() - 1; }

}  // namespace safeset
