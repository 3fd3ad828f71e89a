#pragma once

// Membership in the class of graphs with s(G,w) = cs(G,w) for every weight
// function: decided exactly for bipartite and chordal graphs, and for cycles
// and graphs with a universal vertex. Anything else is left UNDECIDED.

#include "safeset/graph.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace safeset {

enum class Verdict { Member, NonMember, Undecided };

enum class Family {
    EvenCycle,
    DoubleStar,
    Book,
    K33MinusEdge,
    DFamily,
    DStarFamily,
    // outside the bipartite list
    Cycle,
    ChordalDominatingClique,
    UniversalVertex,
};

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Member: return "MEMBER";
        case Verdict::NonMember: return "NON_MEMBER";
        case Verdict::Undecided: return "UNDECIDED";
    }
    return "?";
}

inline const char* family_name(Family f) {
    switch (f) {
        case Family::EvenCycle: return "EVEN_CYCLE";
        case Family::DoubleStar: return "DOUBLE_STAR";
        case Family::Book: return "BOOK";
        case Family::K33MinusEdge: return "K33_MINUS_EDGE";
        case Family::DFamily: return "D_FAMILY";
        case Family::DStarFamily: return "D_STAR_FAMILY";
        case Family::Cycle: return "CYCLE";
        case Family::ChordalDominatingClique: return "CHORDAL_DOMINATING_CLIQUE";
        case Family::UniversalVertex: return "UNIVERSAL_VERTEX";
    }
    return "?";
}

using FamilyParams = std::vector<std::pair<std::string, int>>;

struct FamilyClassification {
    Verdict verdict = Verdict::Undecided;
    std::optional<Family> family;
    FamilyParams params;
    std::string reason;
};

inline std::optional<int> param(const FamilyParams& ps, std::string_view key) {
    for (const auto& [k, v] : ps)
        if (k == key) return v;
    return std::nullopt;
}

// ---------------------------------------------------------------- recognizers

inline bool is_double_star(const Graph& g) { return is_tree(g) && diameter(g) <= 3; }

// Number of pages m when g is the book B_m (K_{1,m} times P_2).
inline std::optional<int> book_pages(const Graph& g) {
    const int n = g.order();
    if (n < 4 || n % 2 != 0) return std::nullopt;
    const int m = (n - 2) / 2;
    if (g.edge_count() != 3 * m + 1 || !is_connected(g)) return std::nullopt;
    for (auto [x, y] : g.edges()) {
        if (g.degree(x) != m + 1 || g.degree(y) != m + 1) continue;
        const VertexSet spine = VertexSet{x, y};
        bool others_deg2 = true;
        for (int v : g.vertices() - spine) others_deg2 = others_deg2 && g.degree(v) == 2;
        if (!others_deg2) continue;
        const VertexSet xs = g.neighbors(x) - spine, ys = g.neighbors(y) - spine;
        if (xs.intersects(ys)) continue;
        bool matched = true;
        for (int a : xs) matched = matched && (g.neighbors(a) & ys).size() == 1;
        if (matched) return m;
    }
    return std::nullopt;
}

inline bool is_k33_minus_edge(const Graph& g) {
    auto sides = bipartition(g);
    return sides && is_connected(g) && sides->first.size() == 3 && sides->second.size() == 3 && g.edge_count() == 8;
}

enum class DVariant { D, DStar };

inline const char* variant_name(DVariant v) { return v == DVariant::D ? "D" : "D*"; }

// Vertex order: X1, X2 (x first), P, Y1 (y first), Y2, Q.
inline Graph build_d_family(DVariant variant, int m, int n, int p, int q) {
    if (m < 0 || n < 0 || p < 0 || q < 0) throw InputError("D-family parameters must be nonnegative");
    const int x1 = 0, x2 = x1 + m, pp = x2 + n + 1, y1 = pp + p, y2 = y1 + m + 1, qq = y2 + n, total = qq + q;
    Graph g(total);
    const int x = x2, y = y1;
    for (int a = x1; a < x2; ++a)
        for (int b = y1; b < y2; ++b) g.add_edge(a, b);
    for (int a = x2; a < pp; ++a)
        for (int b = y2; b < qq; ++b) g.add_edge(a, b);
    for (int a = pp; a < y1; ++a) g.add_edge(a, y);
    for (int b = qq; b < total; ++b) g.add_edge(x, b);
    for (int a = x2; a < pp; ++a)
        for (int b = y1; b < y2; ++b)
            if (variant == DVariant::D || a == x || b == y) g.add_edge(a, b);
    return g;
}

struct DReading {
    DVariant variant = DVariant::D;
    int m = 0, n = 0, p = 0, q = 0;
    int x = -1, y = -1;  // dominating edge, x in X2 and y in Y1

    friend bool operator==(const DReading&, const DReading&) = default;
};

// The isomorphism D(m,n;p,q) = D(n,m;q,p) swaps the sides; keep m >= n, then p >= q.
inline DReading normalized(DReading r) {
    if (r.m < r.n || (r.m == r.n && r.p < r.q)) {
        std::swap(r.m, r.n);
        std::swap(r.p, r.q);
        std::swap(r.x, r.y);
    }
    // the two variants coincide when X2 = {x} or Y1 = {y}
    if (r.m == 0 || r.n == 0) r.variant = DVariant::D;
    return r;
}

// Membership test for a normalized reading.
inline bool d_reading_is_member(const DReading& r) {
    if (r.m >= 2 && r.n >= 2) return true;                           // (a)
    if (r.m != 1 && r.n == 0) return true;                           // (b)
    if (r.m == 1 && r.n == 1 && r.p == 0 && r.q == 0) return true;   // (c)
    if (r.m == 1 && r.n == 0 && r.p == 0 && r.q == 0) return true;   // (d)
    return false;
}

namespace detail {

inline std::optional<DReading> d_reading_from(const Graph& g, VertexSet xside, VertexSet yside, int x, int y,
                                              VertexSet x1) {
    VertexSet p, q;
    for (int v : g.neighbors(y) & xside)
        if (v != x && g.degree(v) == 1) p.insert(v);
    for (int v : g.neighbors(x) & yside)
        if (v != y && g.degree(v) == 1) q.insert(v);
    const VertexSet xp = xside - p, yp = yside - q;
    if (x1.contains(x) || !x1.is_subset_of(xp)) return std::nullopt;
    const VertexSet y1 = x1.empty() ? VertexSet::single(y) : (g.neighbors(x1.min()) & yp);
    if (!y1.contains(y)) return std::nullopt;
    const VertexSet x2 = xp - x1, y2 = yp - y1;
    const int m = x1.size(), n = y2.size();
    if (y1.size() != m + 1 || x2.size() != n + 1) return std::nullopt;
    auto complete = [&](VertexSet a, VertexSet b) {
        for (int v : a)
            if (!b.is_subset_of(g.neighbors(v))) return false;
        return true;
    };
    if (!complete(x1, y1) || !complete(x2, y2) || adjacent(g, x1, y2)) return std::nullopt;
    // pendants must hang only where the definition puts them
    if (!(g.neighbors(x1) & yside).is_subset_of(y1)) return std::nullopt;
    DReading r;
    r.m = m;
    r.n = n;
    r.p = p.size();
    r.q = q.size();
    r.x = x;
    r.y = y;
    if (complete(x2, y1)) {
        r.variant = DVariant::D;
    } else {
        // double star on X2 and Y1 with dominating edge xy
        for (int v : x2 - VertexSet::single(x))
            if ((g.neighbors(v) & y1) != VertexSet::single(y)) return std::nullopt;
        for (int v : y1 - VertexSet::single(y))
            if ((g.neighbors(v) & x2) != VertexSet::single(x)) return std::nullopt;
        r.variant = DVariant::DStar;
    }
    return r;
}

}  // namespace detail

// Every normalized D/D* reading of g, deduplicated, in a fixed order.
inline std::vector<DReading> d_family_readings(const Graph& g) {
    std::vector<DReading> out;
    if (g.order() < 2 || !is_connected(g)) return out;
    auto sides = bipartition(g);
    if (!sides) return out;
    for (int orient = 0; orient < 2; ++orient) {
        const VertexSet xside = orient == 0 ? sides->first : sides->second;
        const VertexSet yside = orient == 0 ? sides->second : sides->first;
        for (int x : xside) {
            if (g.neighbors(x) != yside) continue;
            for (int y : yside) {
                if (g.neighbors(y) != xside) continue;
                std::vector<VertexSet> candidates{VertexSet{}};
                VertexSet seen;
                for (int u : xside - VertexSet::single(x)) {
                    if (seen.contains(u) || g.degree(u) < 2) continue;
                    VertexSet cls;
                    for (int v : xside - VertexSet::single(x))
                        if (g.neighbors(v) == g.neighbors(u)) cls.insert(v);
                    seen |= cls;
                    candidates.push_back(cls);
                }
                for (VertexSet x1 : candidates) {
                    auto r = detail::d_reading_from(g, xside, yside, x, y, x1);
                    if (!r) continue;
                    DReading n = normalized(*r);
                    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const DReading& a, const DReading& b) {
        return std::tie(a.m, a.n, a.p, a.q, a.variant, a.x, a.y) < std::tie(b.m, b.n, b.p, b.q, b.variant, b.x, b.y);
    });
    return out;
}

inline std::optional<DReading> recognize_d_family(const Graph& g) {
    auto all = d_family_readings(g);
    if (all.empty()) return std::nullopt;
    return all.front();
}

// ---------------------------------------------------------------- classifiers

inline FamilyParams d_params(const DReading& r) {
    return {{"m", r.m}, {"n", r.n}, {"p", r.p}, {"q", r.q}, {"x", r.x}, {"y", r.y}};
}

inline FamilyClassification classify_bipartite(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) throw InputError("classification needs a connected graph");
    if (!is_bipartite(g)) throw InputError("graph is not bipartite");
    auto member = [](Family f, FamilyParams ps, std::string reason) {
        return FamilyClassification{Verdict::Member, f, std::move(ps), std::move(reason)};
    };
    if (is_cycle_graph(g)) return member(Family::EvenCycle, {{"length", g.order()}}, "bipartite-even-cycle");
    if (is_double_star(g)) {
        // centers are the non-leaves; a star or K1/K2 has at most one
        FamilyParams ps{{"order", g.order()}, {"diameter", diameter(g)}};
        return member(Family::DoubleStar, std::move(ps), "bipartite-double-star");
    }
    if (auto m = book_pages(g)) return member(Family::Book, {{"pages", *m}}, "bipartite-book");
    if (is_k33_minus_edge(g)) return member(Family::K33MinusEdge, {}, "bipartite-k33-minus-edge");

    const auto readings = d_family_readings(g);
    if (readings.empty()) return {Verdict::NonMember, std::nullopt, {}, "bipartite-no-listed-family"};
    const DReading& first = readings.front();
    bool all_member = true, any_member = false;
    for (const auto& r : readings) {
        all_member = all_member && d_reading_is_member(r);
        any_member = any_member || d_reading_is_member(r);
    }
    const Family tag = first.variant == DVariant::D ? Family::DFamily : Family::DStarFamily;
    if (any_member != all_member) {
        // two readings of one graph cannot disagree if the structure theory holds
        return {Verdict::Member, tag, d_params(first), "bipartite-d-family-readings-disagree"};
    }
    if (!any_member) return {Verdict::NonMember, tag, d_params(first), "bipartite-d-family-excluded"};
    // the listed family (V) asks for m >= 2 and n != 1; the smaller members
    // are all caught by the earlier families
    for (const auto& r : readings)
        if (r.m < 2 || r.n == 1) return {Verdict::Member, tag, d_params(r), "bipartite-d-family-outside-listed-range"};
    return member(tag, d_params(first), "bipartite-d-family");
}

inline FamilyClassification classify_chordal(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) throw InputError("classification needs a connected graph");
    const auto chordal = chordality(g);
    if (!chordal.chordal) throw InputError("graph is not chordal");
    // a dominating clique exists iff some maximal clique dominates; the
    // maximal cliques of a chordal graph are among {v} plus its later neighbors
    std::optional<VertexSet> dominating;
    VertexSet later = g.vertices();
    for (int v : chordal.elimination_order) {
        const VertexSet k = (g.neighbors(v) & later) | VertexSet::single(v);
        later.erase(v);
        if (is_dominating(g, k) && (!dominating || k.size() < dominating->size() ||
                                    (k.size() == dominating->size() && lex_less(k, *dominating))))
            dominating = k;
    }
    const int d = diameter(g);
    if (dominating.has_value() != (d <= 3))
        throw std::logic_error("chordal graph with diameter " + std::to_string(d) +
                               (dominating ? " has" : " lacks") + " a dominating clique");
    if (dominating)
        return {Verdict::Member, Family::ChordalDominatingClique, {{"diameter", d}, {"clique_size", dominating->size()}},
                "chordal-diam-le-3"};
    return {Verdict::NonMember, std::nullopt, {{"diameter", d}}, "chordal-diam-ge-4"};
}

inline FamilyClassification classify(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) throw InputError("classification needs a connected graph");
    if (is_bipartite(g)) return classify_bipartite(g);
    if (is_chordal(g)) return classify_chordal(g);
    if (is_cycle_graph(g)) return {Verdict::Member, Family::Cycle, {{"length", g.order()}}, "cycle"};
    // triangle-free members other than cycles have diameter at most 3
    if (is_triangle_free(g)) {
        const int d = diameter(g);
        if (d >= 4) return {Verdict::NonMember, std::nullopt, {{"diameter", d}}, "triangle-free-diam-ge-4"};
    }
    if (g.max_degree() == g.order() - 1) {
        int hub = 0;
        while (g.degree(hub) != g.order() - 1) ++hub;
        return {Verdict::Member, Family::UniversalVertex, {{"vertex", hub}}, "universal-vertex"};
    }
    return {Verdict::Undecided, std::nullopt, {}, "undecided-general-graph"};
}

}  // namespace safeset
