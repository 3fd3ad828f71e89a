#pragma once

// Exact weighted safe numbers s(G,w) and connected safe numbers cs(G,w).
//
// A nonempty S is safe when every component C of G[S] weighs at least as
// much as every component D of G-S that it touches. The search walks
// subsets by increasing size, skipping any subset heavier than the best safe
// set found so far. Weights are rescaled to integers over their common
// denominator so the inner loop never allocates.

#include "safeset/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace safeset {

inline constexpr int kSolverMaxOrder = 24;

struct SafeSetSolution {
    Rational optimum;
    VertexSet witness_set;  // lexicographically least optimal set
    bool connected_required = false;
    std::optional<std::vector<VertexSet>> all_optima;  // sorted lexicographically
};

struct SolveOptions {
    bool collect_all = false;
};

namespace detail {

// Weights multiplied through by the lcm of their denominators.
struct ScaledWeights {
    std::vector<BigInt> values;
    BigInt scale;  // common denominator
    BigInt total;
};

inline ScaledWeights scale_weights(const WeightFn& w) {
    ScaledWeights out;
    out.scale = 1;
    for (const auto& x : w.values()) out.scale = boost::multiprecision::lcm(out.scale, x.denominator());
    out.total = 0;
    for (const auto& x : w.values()) {
        out.values.push_back(x.numerator() * (out.scale / x.denominator()));
        out.total += out.values.back();
    }
    return out;
}

template <class Int>
class SubsetSearch {
 public:
    SubsetSearch(const Graph& g, std::vector<Int> w) : g_(g), w_(std::move(w)) {}

    Int weight(VertexSet s) const {
        Int sum = 0;
        for (int v : s) sum += w_[v];
        return sum;
    }

    bool is_safe(VertexSet s) const {
        const VertexSet all = g_.vertices();
        const VertexSet outside = all - s;
        // components of G-S with their weights
        comps_.clear();
        for (VertexSet rest = outside; !rest.empty();) {
            VertexSet d = reach(g_, rest.min(), rest);
            comps_.emplace_back(d, weight(d));
            rest -= d;
        }
        for (VertexSet rest = s; !rest.empty();) {
            VertexSet c = reach(g_, rest.min(), rest);
            rest -= c;
            const VertexSet touched = g_.neighbors(c) & outside;
            if (touched.empty()) continue;
            const Int wc = weight(c);
            for (const auto& [d, wd] : comps_)
                if (d.intersects(touched) && wd > wc) return false;
        }
        return true;
    }

    struct Best {
        Int value;
        VertexSet witness;
        std::vector<VertexSet> all;
    };

    Best run(bool connected, bool collect_all) const {
        const int n = g_.order();
        const VertexSet all = g_.vertices();
        Best best{weight(all), all, {}};  // V(G) is vacuously safe and connected
        for (int k = 1; k <= n; ++k) {
            // Gosper's hack over k-subsets of {0..n-1}
            std::uint64_t s = (std::uint64_t{1} << k) - 1;
            const std::uint64_t limit = std::uint64_t{1} << n;
            while (s < limit) {
                const VertexSet set(s);
                visit(set, connected, collect_all, best);
                const std::uint64_t c = s & (~s + 1);
                const std::uint64_t r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
        }
        if (collect_all) std::sort(best.all.begin(), best.all.end(), lex_less);
        return best;
    }

 private:
    void visit(VertexSet set, bool connected, bool collect_all, Best& best) const {
        const Int w = weight(set);
        if (w > best.value) return;
        const bool improves = w < best.value;
        if (!improves && !collect_all && !lex_less(set, best.witness)) return;
        if (connected && !is_connected(g_, set)) return;
        if (!is_safe(set)) return;
        if (improves) {
            best.value = w;
            best.witness = set;
            best.all.clear();
        } else if (lex_less(set, best.witness)) {
            best.witness = set;
        }
        // every subset is visited once, so no duplicates arise
        if (collect_all) best.all.push_back(set);
    }

    const Graph& g_;
    std::vector<Int> w_;
    mutable std::vector<std::pair<VertexSet, Int>> comps_;
};

inline void check_instance(const Graph& g, const WeightFn& w) {
    w.check_matches(g);
    if (g.order() == 0) throw InputError("safe sets need a nonempty graph");
    if (g.order() > kSolverMaxOrder)
        throw InputError("instance too large for the exact solver: " + std::to_string(g.order()) + " > " +
                         std::to_string(kSolverMaxOrder) + " vertices");
    if (!is_connected(g)) throw InputError("safe sets are defined for connected graphs; input is disconnected");
}

inline SafeSetSolution solve(const Graph& g, const WeightFn& w, bool connected, const SolveOptions& opt) {
    check_instance(g, w);
    const ScaledWeights scaled = scale_weights(w);
    SafeSetSolution out;
    out.connected_required = connected;
    auto finish = [&](const auto& best) {
        out.optimum = Rational(BigInt(best.value), scaled.scale);
        out.witness_set = best.witness;
        if (opt.collect_all) out.all_optima = best.all;
    };
    if (scaled.total <= BigInt(std::numeric_limits<std::int64_t>::max() / 2)) {
        std::vector<std::int64_t> ints;
        for (const auto& v : scaled.values) ints.push_back(static_cast<std::int64_t>(v));
        finish(SubsetSearch<std::int64_t>(g, std::move(ints)).run(connected, opt.collect_all));
    } else {
        finish(SubsetSearch<BigInt>(g, scaled.values).run(connected, opt.collect_all));
    }
    return out;
}

}  // namespace detail

inline bool is_safe_set(const Graph& g, const WeightFn& w, VertexSet s) {
    w.check_matches(g);
    g.check_subset(s);
    if (s.empty()) throw InputError("a safe set must be nonempty");
    const VertexSet outside = g.vertices() - s;
    const auto outside_comps = components(g, outside);
    for (VertexSet c : components(g, s)) {
        const Rational wc = w.total(c);
        for (VertexSet d : outside_comps)
            if (adjacent(g, c, d) && w.total(d) > wc) return false;
    }
    return true;
}

inline SafeSetSolution safe_number(const Graph& g, const WeightFn& w, const SolveOptions& opt = {}) {
    return detail::solve(g, w, false, opt);
}

inline SafeSetSolution connected_safe_number(const Graph& g, const WeightFn& w, const SolveOptions& opt = {}) {
    return detail::solve(g, w, true, opt);
}

inline std::vector<VertexSet> all_minimum_safe_sets(const Graph& g, const WeightFn& w) {
    return *safe_number(g, w, {.collect_all = true}).all_optima;
}

}  // namespace safeset
