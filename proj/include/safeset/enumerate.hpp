#pragma once

// Connected graphs up to isomorphism for small orders, grown one vertex at a
// time from the previous order and deduplicated by a canonical code.

#include "safeset/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace safeset {

inline constexpr int kMaxEnumerationOrder = 8;

enum class GraphFilter { All, Bipartite, Chordal, TriangleFree };

inline const char* filter_name(GraphFilter f) {
    switch (f) {
        case GraphFilter::All: return "all";
        case GraphFilter::Bipartite: return "bipartite";
        case GraphFilter::Chordal: return "chordal";
        case GraphFilter::TriangleFree: return "triangle-free";
    }
    return "?";
}

inline std::optional<GraphFilter> parse_filter(std::string_view s) {
    for (GraphFilter f : {GraphFilter::All, GraphFilter::Bipartite, GraphFilter::Chordal, GraphFilter::TriangleFree})
        if (s == filter_name(f)) return f;
    return std::nullopt;
}

inline bool passes(const Graph& g, GraphFilter f) {
    switch (f) {
        case GraphFilter::All: return true;
        case GraphFilter::Bipartite: return is_bipartite(g);
        case GraphFilter::Chordal: return is_chordal(g);
        case GraphFilter::TriangleFree: return is_triangle_free(g);
    }
    return false;
}

// Upper triangle, column by column, as one integer (n <= 11 fits in 64 bits).
inline std::uint64_t adjacency_code(const Graph& g, const std::vector<int>& label) {
    std::uint64_t code = 0;
    const int n = g.order();
    std::vector<int> at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) at[label[v]] = v;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(at[i], at[j]) ? 1U : 0U);
    return code;
}

namespace detail {

// Iterated degree refinement. Colours are ranks of signatures, so equal
// graphs under any relabelling get the same colour classes in the same order.
inline std::vector<int> refine_colours(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(colour[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (next == colour) break;
        colour = std::move(next);
    }
    return colour;
}

}  // namespace detail

struct CanonicalForm {
    Graph graph;
    std::uint64_t code = 0;
};

// Largest adjacency code over all labellings that list colour classes in
// colour order; every such labelling is tried, so the result is exact.
inline CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw InputError("canonical form supports at most 11 vertices");
    const auto colour = detail::refine_colours(g);
    std::vector<std::vector<int>> cells;
    {
        std::map<int, std::vector<int>> by_colour;
        for (int v = 0; v < n; ++v) by_colour[colour[v]].push_back(v);
        for (auto& [c, vs] : by_colour) cells.push_back(vs);
    }
    std::vector<int> label(static_cast<std::size_t>(n));
    std::uint64_t best = 0;
    std::vector<int> best_label;
    // odometer over the permutations of every cell
    for (auto& cell : cells) std::sort(cell.begin(), cell.end());
    while (true) {
        int pos = 0;
        for (const auto& cell : cells)
            for (int v : cell) label[v] = pos++;
        const std::uint64_t code = adjacency_code(g, label);
        if (best_label.empty() || code > best) {
            best = code;
            best_label = label;
        }
        std::size_t i = 0;
        for (; i < cells.size(); ++i)
            if (std::next_permutation(cells[i].begin(), cells[i].end())) break;
        if (i == cells.size()) break;
    }
    Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(best_label[u], best_label[v]);
    return {out, best};
}

// Connected graphs of the given order, one per isomorphism class, sorted by
// canonical code and filtered.
inline std::vector<Graph> enumerate_connected_graphs(int order, GraphFilter filter = GraphFilter::All) {
    if (order < 1 || order > kMaxEnumerationOrder)
        throw InputError("enumeration order must be in 1.." + std::to_string(kMaxEnumerationOrder) + ", got " +
                         std::to_string(order));
    // every connected graph has a vertex whose removal leaves it connected
    std::vector<CanonicalForm> level{canonical_form(Graph(1))};
    for (int n = 2; n <= order; ++n) {
        std::set<std::uint64_t> seen;
        std::vector<CanonicalForm> next;
        for (const auto& base : level) {
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                Graph g(n);
                for (auto [u, v] : base.graph.edges()) g.add_edge(u, v);
                for (int u : VertexSet(mask)) g.add_edge(u, n - 1);
                auto c = canonical_form(g);
                if (seen.insert(c.code).second) next.push_back(std::move(c));
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(), [](const CanonicalForm& a, const CanonicalForm& b) { return a.code < b.code; });
    std::vector<Graph> out;
    for (auto& c : level)
        if (passes(c.graph, filter)) out.push_back(std::move(c.graph));
    return out;
}

}  // namespace safeset
