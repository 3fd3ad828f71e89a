#pragma once

// Verification campaigns: enumerate small graphs, classify them, and check
// every verdict against solver evidence. Members get random weight samples
// that must all give s = cs; non-members must receive a verified certificate.
// Disagreements are collected as failures; nothing here throws on bad data.

#include "safeset/contraction.hpp"
#include "safeset/enumerate.hpp"
#include "safeset/family.hpp"
#include "safeset/graph6.hpp"
#include "safeset/solver.hpp"
#include "safeset/witness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace safeset {

enum class Sweep { Bipartite, Chordal, TriangleFree, All };

inline const char* sweep_name(Sweep s) {
    switch (s) {
        case Sweep::Bipartite: return "bipartite";
        case Sweep::Chordal: return "chordal";
        case Sweep::TriangleFree: return "triangle-free";
        case Sweep::All: return "all";
    }
    return "?";
}

inline std::optional<Sweep> parse_sweep(std::string_view s) {
    for (Sweep w : {Sweep::Bipartite, Sweep::Chordal, Sweep::TriangleFree, Sweep::All})
        if (s == sweep_name(w)) return w;
    return std::nullopt;
}

inline bool in_sweep(const Graph& g, Sweep s) {
    switch (s) {
        case Sweep::Bipartite: return is_bipartite(g);
        case Sweep::Chordal: return is_chordal(g);
        case Sweep::TriangleFree: return is_triangle_free(g);
        case Sweep::All: return true;
    }
    return false;
}

struct WeightSample {
    WeightFn weights;
    Rational s;
    Rational cs;
};

struct SamplingEvidence {
    std::uint64_t seed = 0;
    int sample_count = 0;
    std::vector<WeightSample> samples;
    bool all_equal = true;
};

// One minimum safe set of an s < cs instance, pushed through beta(G,S).
struct BetaChainCheck {
    std::string graph6;
    VertexSet safe_set;
    bool complement_disconnected = false;
    std::string beta_graph6;
    Verdict beta_verdict = Verdict::Undecided;
    bool beta_gap = false;  // s < cs on beta with the lifted weights
    bool ok = false;
};

struct CampaignFailure {
    std::string graph6;
    std::string kind;
    std::string message;
};

struct GraphRecord {
    std::string graph6;
    int order = 0;
    std::vector<Sweep> sweeps;
    FamilyClassification classification;
    std::optional<WitnessCertificate> certificate;
    std::optional<SamplingEvidence> evidence;
};

struct CampaignCounts {
    int total = 0;
    int bipartite = 0;
    int chordal = 0;
    int triangle_free = 0;
    int members = 0;
    int non_members = 0;
    int undecided = 0;
    int certified = 0;
    int sampled = 0;
    int beta_checks = 0;
};

struct CampaignOptions {
    int min_order = 1;
    int max_order = 7;
    int samples = 50;
    std::uint64_t seed = 1;
    std::vector<Sweep> sweeps{Sweep::Bipartite, Sweep::Chordal, Sweep::TriangleFree};
    int jobs = 0;  // 0: hardware concurrency
    bool timing = false;
    bool check_members_uncertifiable = true;
    std::optional<std::vector<Graph>> input;  // replaces the enumerator
    CertifyOptions certify{};
};

struct CampaignReport {
    int min_order = 1;
    int max_order = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<Sweep> sweeps;
    CampaignCounts counts;
    std::vector<GraphRecord> records;
    std::vector<CampaignFailure> failures;
    std::vector<BetaChainCheck> beta_chain;
    std::optional<double> wall_seconds;  // only with timing on, so replays stay byte-identical

    bool passed() const { return failures.empty(); }
};

// splitmix64 finaliser; spreads (seed, index) into independent streams
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline SamplingEvidence sample_equality(const Graph& g, int count, std::uint64_t seed) {
    SamplingEvidence ev;
    ev.seed = seed;
    ev.sample_count = count;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        WeightSample smp{random_integer_weights(g.order(), rng), {}, {}};
        smp.s = safe_number(g, smp.weights).optimum;
        smp.cs = connected_safe_number(g, smp.weights).optimum;
        ev.all_equal = ev.all_equal && smp.s == smp.cs;
        ev.samples.push_back(std::move(smp));
    }
    return ev;
}

inline std::vector<BetaChainCheck> beta_chain_checks(const Graph& g, const WeightFn& w) {
    std::vector<BetaChainCheck> out;
    for (VertexSet s : all_minimum_safe_sets(g, w)) {
        BetaChainCheck c;
        c.graph6 = to_graph6(g);
        c.safe_set = s;
        c.complement_disconnected = s != g.vertices() && !is_connected(g, g.vertices() - s);
        if (s != g.vertices()) {
            const auto q = beta(g, s);
            const WeightFn lifted = lift_weights(q, w);
            c.beta_graph6 = to_graph6(q.quotient);
            c.beta_verdict = classify_bipartite(q.quotient).verdict;
            c.beta_gap = safe_number(q.quotient, lifted).optimum < connected_safe_number(q.quotient, lifted).optimum;
        }
        c.ok = c.complement_disconnected && c.beta_verdict == Verdict::NonMember && c.beta_gap;
        out.push_back(std::move(c));
    }
    return out;
}

namespace detail {

struct GraphOutcome {
    GraphRecord record;
    std::vector<CampaignFailure> failures;
    std::vector<BetaChainCheck> beta;
};

inline GraphOutcome examine_graph(const Graph& g, std::vector<Sweep> sweeps, std::uint64_t seed,
                                  const CampaignOptions& opt) {
    GraphOutcome out;
    GraphRecord& rec = out.record;
    rec.graph6 = to_graph6(g);
    rec.order = g.order();
    rec.sweeps = std::move(sweeps);
    auto fail = [&](std::string kind, std::string msg) {
        out.failures.push_back({rec.graph6, std::move(kind), std::move(msg)});
    };
    auto swept = [&](Sweep s) { return std::find(rec.sweeps.begin(), rec.sweeps.end(), s) != rec.sweeps.end(); };
    try {
        if (!is_connected(g)) {
            fail("input", "graph is disconnected");
            return out;
        }
        rec.classification = classify(g);
        const auto& cl = rec.classification;
        if (cl.reason == "bipartite-d-family-readings-disagree" || cl.reason == "bipartite-d-family-outside-listed-range")
            fail("classification", "D-family readings conflict: " + cl.reason);

        const bool chordal = is_chordal(g);
        if (chordal && swept(Sweep::Chordal)) {
            // cross-check: dominating clique and diameter <= 3 must agree (throws otherwise)
            const auto cc = classify_chordal(g);
            if (cc.verdict != cl.verdict)
                fail("chordal", std::string("chordal verdict ") + verdict_name(cc.verdict) + " differs from " +
                                    verdict_name(cl.verdict));
        }
        const int diam = diameter(g);
        const bool tf_needs_cert = swept(Sweep::TriangleFree) && is_triangle_free(g) && !is_cycle_graph(g) && diam >= 4;

        if (cl.verdict == Verdict::Member) {
            rec.evidence = sample_equality(g, opt.samples, seed);
            if (!rec.evidence->all_equal) fail("member-sample-gap", "a random weight function gives s < cs");
            if (opt.check_members_uncertifiable) {
                CertifyOptions co = opt.certify;
                co.seed = seed;
                if (auto c = certify_non_membership(g, co)) {
                    rec.certificate = c;
                    fail("member-certified", "a verified s < cs certificate exists for a member");
                }
            }
            if (tf_needs_cert) fail("triangle-free", "member triangle-free non-cycle with diameter " + std::to_string(diam));
        } else {
            CertifyOptions co = opt.certify;
            co.seed = seed;
            if (chordal && swept(Sweep::Chordal) && cl.verdict == Verdict::NonMember) {
                rec.certificate = certify_with_pattern(g, Pattern::H1, co);
                if (!rec.certificate) fail("chordal-h1", "no H1 certificate for a chordal graph of diameter " + std::to_string(diam));
            }
            if (!rec.certificate) rec.certificate = certify_non_membership(g, co);
            if (!rec.certificate && cl.verdict == Verdict::NonMember)
                fail("non-member-uncertified", "no certificate found for a non-member");
            if (!rec.certificate && tf_needs_cert)
                fail("triangle-free", "no certificate for a triangle-free non-cycle with diameter " + std::to_string(diam));
        }
        if (rec.certificate) {
            if (auto why = certificate_violation(*rec.certificate)) fail("certificate-invalid", *why);
            out.beta = beta_chain_checks(g, rec.certificate->weights);
            for (const auto& b : out.beta)
                if (!b.ok) fail("beta-chain", "minimum safe set " + to_string(b.safe_set) + " breaks the beta chain");
        }
    } catch (const std::exception& e) {
        fail("exception", e.what());
    }
    return out;
}

}  // namespace detail

inline CampaignReport run_characterization_campaign(const CampaignOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.min_order = opt.min_order;
    report.max_order = opt.max_order;
    report.samples = opt.samples;
    report.seed = opt.seed;
    report.sweeps = opt.sweeps;

    // one entry per distinct graph, with every sweep it belongs to
    std::vector<std::pair<Graph, std::vector<Sweep>>> work;
    auto add = [&](const Graph& g) {
        // disconnected input is kept so it shows up as a failure
        const bool connected = is_connected(g);
        std::vector<Sweep> member_of;
        for (Sweep s : opt.sweeps)
            if (!connected || in_sweep(g, s)) member_of.push_back(s);
        if (!member_of.empty()) work.emplace_back(g, std::move(member_of));
    };
    try {
        if (opt.input) {
            for (const auto& g : *opt.input) add(g);
        } else {
            for (int n = std::max(1, opt.min_order); n <= opt.max_order; ++n)
                for (const auto& g : enumerate_connected_graphs(n)) add(g);
        }
    } catch (const std::exception& e) {
        report.failures.push_back({"", "enumeration", e.what()});
        return report;
    }

    std::vector<detail::GraphOutcome> outcomes(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++)
            outcomes[i] = detail::examine_graph(work[i].first, work[i].second, mix_seed(opt.seed, i), opt);
    };
    int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(work.size(), 1)));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // merge in enumeration order, independent of completion order
    for (auto& o : outcomes) {
        auto& c = report.counts;
        const auto& rec = o.record;
        ++c.total;
        for (Sweep s : rec.sweeps) {
            c.bipartite += s == Sweep::Bipartite;
            c.chordal += s == Sweep::Chordal;
            c.triangle_free += s == Sweep::TriangleFree;
        }
        c.members += rec.classification.verdict == Verdict::Member;
        c.non_members += rec.classification.verdict == Verdict::NonMember;
        c.undecided += rec.classification.verdict == Verdict::Undecided;
        c.certified += rec.certificate.has_value();
        c.sampled += rec.evidence.has_value();
        c.beta_checks += static_cast<int>(o.beta.size());
        report.records.push_back(std::move(o.record));
        for (auto& f : o.failures) report.failures.push_back(std::move(f));
        for (auto& b : o.beta) report.beta_chain.push_back(std::move(b));
    }
    if (opt.timing)
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace safeset
