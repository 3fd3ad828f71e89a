#pragma once

// Named small graphs shared by the test files.

#include "oracles.hpp"
#include "safeset/graph.hpp"

#include <vector>

namespace fx {

using safeset::Graph;

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph kmn(int m, int n) {
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

// Cartesian product of K_{1,m} (centre 0) with P_2: copy c in {0,1} of star
// vertex i is vertex 2i + c.
inline Graph book(int m) {
    Graph s = star(m);
    Graph g(2 * (m + 1));
    for (int i = 0; i <= m; ++i) g.add_edge(2 * i, 2 * i + 1);
    for (auto [u, v] : s.edges())
        for (int c = 0; c < 2; ++c) g.add_edge(2 * u + c, 2 * v + c);
    return g;
}

inline Graph k33_minus_edge() {
    Graph g = kmn(3, 3);
    Graph h(6);
    for (auto [u, v] : g.edges())
        if (!(u == 0 && v == 3)) h.add_edge(u, v);
    return h;
}

// Hub 0 joined to a cycle on 1..k.
inline Graph wheel(int k) {
    Graph g(k + 1);
    for (int i = 1; i <= k; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % k + 1);
    }
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

// C4 on 0..3 with a pendant 4 on vertex 3.
inline Graph c4_pendant() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}); }

// Centre 0 with legs 0-1-2, 0-3-4, 0-5-6.
inline Graph spider3() { return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

inline oracle::Matrix to_matrix(const Graph& g) { return oracle::matrix(g.order(), g.edges()); }

inline std::vector<safeset::Rational> rationals(const safeset::WeightFn& w) { return w.values(); }

}  // namespace fx
