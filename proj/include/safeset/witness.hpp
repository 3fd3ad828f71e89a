#pragma once

// Weight functions that separate s(G,w) from cs(G,w) on graphs contracting
// to one of the forbidden patterns, and certificates recording them.
//
// The constructions only need "alpha large, epsilon small". Rather than trust
// asymptotics, each candidate is handed to the exact solver and alpha is
// doubled until s < cs is confirmed or the cap is hit.

#include "safeset/contraction.hpp"
#include "safeset/solver.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace safeset {

struct WitnessParams {
    Rational alpha{2};
    Rational eps;   // H2 and KMN
    Rational eps3;  // H3 only
    Rational eps4;
    Rational eps5;

    friend bool operator==(const WitnessParams&, const WitnessParams&) = default;
};

// Construction preconditions that are not a mismatched pattern.
class WitnessParamError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_pattern(const PatternMatch& match, Pattern p) {
    if (match.pattern != p)
        throw InputError(std::string("expected a ") + pattern_name(p) + " match, got " + pattern_name(match.pattern));
}

inline void require_alpha(const WitnessParams& params) {
    if (params.alpha <= Rational(1)) throw WitnessParamError("alpha must exceed 1, got " + params.alpha.str());
}

// Least (a, b) with a in from, b in to and ab an edge, ordered by a then b.
inline std::pair<int, int> least_edge(const Graph& g, VertexSet from, VertexSet to) {
    for (int a : from) {
        VertexSet nb = g.neighbors(a) & to;
        if (!nb.empty()) return {a, nb.min()};
    }
    throw InputError("bags " + to_string(from) + " and " + to_string(to) + " are not adjacent");
}

}  // namespace detail

inline WeightFn weights_for_h1(const Graph& g, const PatternMatch& match, const WitnessParams& params) {
    detail::require_pattern(match, Pattern::H1);
    detail::require_alpha(params);
    const auto& V = match.bags;
    auto [v1, v2] = detail::least_edge(g, V[0], V[1]);
    auto [v4, v5] = detail::least_edge(g, V[3], V[4]);
    std::vector<Rational> w(static_cast<std::size_t>(g.order()));
    w[v1] = w[v2] = params.alpha + 1;
    w[v4] = w[v5] = params.alpha;
    for (int x : V[2]) w[x] = Rational(1, V[2].size());
    return WeightFn(std::move(w));
}

inline WeightFn weights_for_h2(const Graph& g, const PatternMatch& match, const WitnessParams& params) {
    detail::require_pattern(match, Pattern::H2);
    detail::require_alpha(params);
    if (params.eps.sign() <= 0 || params.eps >= Rational(1))
        throw WitnessParamError("H2 needs 0 < eps < 1, got " + params.eps.str());
    const auto& V = match.bags;
    auto [v1, v2] = detail::least_edge(g, V[0], V[1]);
    auto [v3, v2b] = detail::least_edge(g, V[2], V[1]);
    (void)v2b;
    auto [v4, v5] = detail::least_edge(g, V[3], V[4]);
    const Rational big = (Rational(1) + params.eps) * Rational(V[3].size() - 1);
    if (params.alpha - big <= Rational(0))
        throw WitnessParamError("H2 weight of v4 would be " + (params.alpha - big).str() + "; raise alpha");
    std::vector<Rational> w(static_cast<std::size_t>(g.order()));
    for (int x : V[3]) w[x] = Rational(1) + params.eps;
    w[v1] = w[v3] = w[v5] = params.alpha;
    w[v2] = params.alpha + 1;
    w[v4] = params.alpha - big;
    return WeightFn(std::move(w));
}

// Component of G[V5] touching both V2 and v4, least by minimum id.
inline std::optional<VertexSet> h3_component(const Graph& g, const PatternMatch& match) {
    const int v4 = match.distinguished.value_or(-1);
    if (v4 < 0) return std::nullopt;
    for (VertexSet d : components(g, match.bags[4]))
        if (adjacent(g, d, match.bags[1]) && adjacent(g, d, VertexSet::single(v4))) return d;
    return std::nullopt;
}

inline WeightFn weights_for_h3(const Graph& g, const PatternMatch& match, const WitnessParams& params) {
    detail::require_pattern(match, Pattern::H3);
    detail::require_alpha(params);
    const Rational n(g.order());
    const Rational zero(0);
    if (!(Rational(1) / n > params.eps3 && params.eps3 > Rational(2) * n * params.eps5 &&
          params.eps5 * 2 * n > Rational(2) * n * n * params.eps4 && params.eps4 > zero))
        throw WitnessParamError("H3 needs 1/n > eps3 > 2n eps5 > 2n^2 eps4 > 0");
    const auto& V = match.bags;
    if (!match.distinguished) throw InputError("H3 match lacks v4");
    const int v1 = V[0].min(), v2 = V[1].min(), v4 = *match.distinguished;
    const VertexSet n3 = g.neighbors(v4) & V[2];
    if (n3.empty()) throw InputError("v4 has no neighbor in V3");
    const int v3 = n3.min();
    const auto d = h3_component(g, match);
    if (!d) throw InputError("no component of G[V5] touches both V2 and v4");
    const int v5 = (g.neighbors(v4) & *d).min();

    std::vector<Rational> w(static_cast<std::size_t>(g.order()));
    w[v1] = params.alpha;
    w[v2] = params.alpha + 1;
    for (int a : V[2]) w[a] = Rational(1) + params.eps3;
    for (int a : V[3]) w[a] = params.eps4;
    for (int a : V[4]) w[a] = params.eps5;
    auto top_up = [&](int v, VertexSet bag) {
        w[v] = zero;
        Rational rest;
        for (int a : bag) rest += w[a];
        w[v] = params.alpha - rest;
        if (w[v] <= zero) throw WitnessParamError("H3 top-up at vertex " + std::to_string(v) + " is not positive; raise alpha");
    };
    top_up(v3, V[2]);
    top_up(v4, V[3]);
    top_up(v5, *d);
    return WeightFn(std::move(w));
}

inline WeightFn weights_for_kmn(const Graph& g, const PatternMatch& match, const WitnessParams& params) {
    detail::require_pattern(match, Pattern::KMN);
    if (!match.big_bag) return WeightFn::constant(g.order(), Rational(1));
    detail::require_alpha(params);
    const VertexSet z = match.bags.at(static_cast<std::size_t>(*match.big_bag));
    const Rational spread = params.eps * Rational(z.size() - 1);
    if (spread.sign() <= 0 || spread >= Rational(1))
        throw WitnessParamError("KMN needs 0 < eps(|Z|-1) < 1, got " + spread.str());
    std::vector<Rational> w(static_cast<std::size_t>(g.order()), params.alpha);
    for (int v : z) w[v] = params.eps;
    w[z.min()] = params.alpha - spread;
    return WeightFn(std::move(w));
}

inline WeightFn weights_for(const Graph& g, const PatternMatch& match, const WitnessParams& params) {
    switch (match.pattern) {
        case Pattern::H1: return weights_for_h1(g, match, params);
        case Pattern::H2: return weights_for_h2(g, match, params);
        case Pattern::H3: return weights_for_h3(g, match, params);
        case Pattern::KMN: return weights_for_kmn(g, match, params);
    }
    throw InputError("unknown pattern");
}

// Small rationals inside every constraint, given the order and the match.
inline WitnessParams default_params(const Graph& g, const PatternMatch& match, const Rational& alpha = Rational(2)) {
    WitnessParams p;
    p.alpha = alpha;
    const std::int64_t n = g.order();
    switch (match.pattern) {
        case Pattern::H1: break;
        case Pattern::H2: p.eps = Rational(1, 4); break;
        case Pattern::H3:
            p.eps3 = Rational(1, 2 * n);
            p.eps5 = Rational(1, 8 * n * n);
            p.eps4 = Rational(1, 32 * n * n * n);
            break;
        case Pattern::KMN:
            if (match.big_bag) p.eps = Rational(1, std::max<std::int64_t>(4, match.bags[*match.big_bag].size()));
            break;
    }
    return p;
}

// ---------------------------------------------------------------- certificates

enum class WitnessMethod { Pattern, Random };

inline const char* method_name(WitnessMethod m) { return m == WitnessMethod::Pattern ? "pattern" : "random"; }

struct WitnessCertificate {
    Graph graph;
    WeightFn weights;
    Rational s;
    Rational cs;
    VertexSet minimum_safe_set;
    WitnessMethod method = WitnessMethod::Pattern;
    std::optional<PatternMatch> source_pattern;
    std::optional<WitnessParams> params;
    std::optional<std::uint64_t> seed;
};

struct CertifyOptions {
    std::uint64_t pattern_budget = kDefaultPatternBudget;
    int max_doublings = 10;  // alpha runs 2, 4, ..., 2^11
    int random_attempts = 2000;
    std::uint64_t seed = 1;
};

// Everything a reader needs to trust a certificate; nullopt means it holds.
inline std::optional<std::string> certificate_violation(const WitnessCertificate& c) {
    const Graph& g = c.graph;
    try {
        const auto s = safe_number(g, c.weights);
        const auto cs = connected_safe_number(g, c.weights);
        if (s.optimum != c.s) return "recorded s " + c.s.str() + " differs from solver value " + s.optimum.str();
        if (cs.optimum != c.cs) return "recorded cs " + c.cs.str() + " differs from solver value " + cs.optimum.str();
        if (!(c.s < c.cs)) return "s is not below cs";
        if (c.minimum_safe_set.empty() || !is_safe_set(g, c.weights, c.minimum_safe_set))
            return "minimumSafeSet is not a safe set";
        if (c.weights.total(c.minimum_safe_set) != c.s) return "minimumSafeSet does not weigh s";
        if (is_connected(g, c.minimum_safe_set)) return "minimumSafeSet is connected, so cs would equal s";
        if (c.method == WitnessMethod::Pattern) {
            if (!c.source_pattern || !c.params) return "pattern certificate lacks its match or parameters";
            if (auto why = match_violation(g, *c.source_pattern)) return "source pattern invalid: " + *why;
            if (weights_for(g, *c.source_pattern, *c.params) != c.weights)
                return "weights differ from the construction for the recorded pattern and parameters";
        }
    } catch (const std::exception& e) {
        return std::string("certificate could not be checked: ") + e.what();
    }
    return std::nullopt;
}

inline bool verify_certificate(const WitnessCertificate& c) { return !certificate_violation(c).has_value(); }

namespace detail {

inline std::optional<WitnessCertificate> try_weights(const Graph& g, const WeightFn& w) {
    const auto s = safe_number(g, w);
    const auto cs = connected_safe_number(g, w);
    if (!(s.optimum < cs.optimum)) return std::nullopt;
    WitnessCertificate c;
    c.graph = g;
    c.weights = w;
    c.s = s.optimum;
    c.cs = cs.optimum;
    c.minimum_safe_set = s.witness_set;
    return c;
}

inline std::optional<WitnessCertificate> try_pattern(const Graph& g, const PatternMatch& match, const CertifyOptions& opt) {
    // Without such a D the graph contracts to H1 instead; that pattern is tried separately.
    if (match.pattern == Pattern::H3 && !h3_component(g, match)) return std::nullopt;
    Rational alpha(2);
    for (int k = 0; k <= opt.max_doublings; ++k, alpha *= 2) {
        const WitnessParams params = default_params(g, match, alpha);
        WeightFn w;
        try {
            w = weights_for(g, match, params);
        } catch (const WitnessParamError&) {
            continue;  // alpha still too small for the top-ups
        }
        if (auto c = try_weights(g, w)) {
            c->method = WitnessMethod::Pattern;
            c->source_pattern = match;
            c->params = params;
            return c;
        }
        // constant weights do not depend on alpha
        if (match.pattern == Pattern::KMN && !match.big_bag) break;
    }
    return std::nullopt;
}

}  // namespace detail

// Integer weights drawn uniformly from [1, n^2] with a 64-bit Mersenne
// twister; the modulo reduction keeps draws identical across standard libraries.
inline WeightFn random_integer_weights(int n, std::mt19937_64& rng) {
    const std::uint64_t top = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    std::vector<std::int64_t> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = static_cast<std::int64_t>(1 + rng() % std::max<std::uint64_t>(top, 1));
    return WeightFn::from_integers(w);
}

// Only the given pattern, no random fallback.
inline std::optional<WitnessCertificate> certify_with_pattern(const Graph& g, Pattern p, const CertifyOptions& opt = {}) {
    detail::check_instance(g, WeightFn::constant(g.order(), Rational(1)));
    auto match = find_pattern(g, p, opt.pattern_budget);
    if (!match) return std::nullopt;
    return detail::try_pattern(g, *match, opt);
}

// Absent means no certificate was found, never that g is a member.
inline std::optional<WitnessCertificate> certify_non_membership(const Graph& g, const CertifyOptions& opt = {}) {
    detail::check_instance(g, WeightFn::constant(g.order(), Rational(1)));
    // A complete bipartite K_{m,n} needs no parameter search at all.
    if (auto m = detail::kmn_with_bag(g, VertexSet::single(0)); m && !m->big_bag)
        if (auto c = detail::try_pattern(g, *m, opt)) return c;
    for (Pattern p : {Pattern::H1, Pattern::H2, Pattern::H3, Pattern::KMN}) {
        auto match = find_pattern(g, p, opt.pattern_budget);
        if (!match) continue;
        if (auto c = detail::try_pattern(g, *match, opt)) return c;
    }
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.random_attempts; ++i) {
        if (auto c = detail::try_weights(g, random_integer_weights(g.order(), rng))) {
            c->method = WitnessMethod::Random;
            c->seed = opt.seed;
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace safeset
