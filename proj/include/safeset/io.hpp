#pragma once

// JSON and CSV views of the library types. Rationals travel as strings
// ("3", "7/2") so nothing is ever rounded through a double.

#include "safeset/campaign.hpp"
#include "safeset/contraction.hpp"
#include "safeset/family.hpp"
#include "safeset/graph6.hpp"
#include "safeset/solver.hpp"
#include "safeset/witness.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace safeset {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------- scalars

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j, const std::string& field) {
    try {
        if (j.is_string()) return Rational::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    } catch (const std::exception& e) {
        throw InputError("field '" + field + "': " + e.what());
    }
    if (j.is_number_float())
        throw InputError("field '" + field + "': floating-point value " + j.dump() + " is not exact; write it as \"p/q\"");
    throw InputError("field '" + field + "': expected a rational string or an integer, got " + j.dump());
}

inline json to_json(VertexSet s) {
    json a = json::array();
    for (int v : s) a.push_back(v);
    return a;
}

inline VertexSet vertex_set_from_json(const json& j, const std::string& field) {
    if (!j.is_array()) throw InputError("field '" + field + "': expected an array of vertex ids");
    VertexSet s;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw InputError("field '" + field + "[" + std::to_string(i) + "]': expected an integer vertex id");
        const auto v = j[i].get<std::int64_t>();
        if (v < 0 || v >= kMaxVertices) throw InputError("field '" + field + "[" + std::to_string(i) + "]': vertex id out of range");
        if (s.contains(static_cast<int>(v)))
            throw InputError("field '" + field + "': vertex " + std::to_string(v) + " listed twice");
        s.insert(static_cast<int>(v));
    }
    return s;
}

inline const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
    return j.at(key);
}

inline json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(what + ": malformed JSON: " + e.what());
    }
}

// ---------------------------------------------------------------- weights

inline json to_json(const WeightFn& w) {
    json a = json::array();
    for (const auto& x : w.values()) a.push_back(x.str());
    return a;
}

// Accepts {"weights": [...]} or a bare array.
inline WeightFn weights_from_json(const json& j) {
    const json& arr = j.is_object() ? require(j, "weights", "weights") : j;
    if (!arr.is_array()) throw InputError("field 'weights': expected an array");
    std::vector<Rational> w;
    for (std::size_t i = 0; i < arr.size(); ++i) w.push_back(rational_from_json(arr[i], "weights[" + std::to_string(i) + "]"));
    return WeightFn(std::move(w));
}

// ---------------------------------------------------------------- solutions

inline json to_json(const SafeSetSolution& s) {
    json j;
    j["optimum"] = to_json(s.optimum);
    j["witnessSet"] = to_json(s.witness_set);
    j["connected"] = s.connected_required;
    if (s.all_optima) {
        json a = json::array();
        for (VertexSet x : *s.all_optima) a.push_back(to_json(x));
        j["allOptima"] = a;
    }
    return j;
}

inline json solution_report(const Graph& g, const SafeSetSolution& s, const SafeSetSolution& cs) {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    j["graph6"] = to_graph6(g);
    j["s"] = to_json(s);
    j["cs"] = to_json(cs);
    j["gap"] = s.optimum < cs.optimum;
    return j;
}

// ---------------------------------------------------------------- families

inline json to_json(const FamilyClassification& c) {
    json j;
    j["verdict"] = verdict_name(c.verdict);
    if (c.family) j["family"] = family_name(*c.family);
    if (!c.params.empty()) {
        json p = json::object();
        for (const auto& [k, v] : c.params) p[k] = v;
        j["params"] = p;
    }
    j["reason"] = c.reason;
    return j;
}

inline json classification_report(const Graph& g, const FamilyClassification& c) {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    j["graph6"] = to_graph6(g);
    const json body = to_json(c);
    for (auto& [k, v] : body.items()) j[k] = v;
    return j;
}

// ---------------------------------------------------------------- patterns

inline json to_json(const PatternMatch& m) {
    json j;
    j["pattern"] = pattern_name(m.pattern);
    json bags = json::array();
    for (VertexSet b : m.bags) bags.push_back(to_json(b));
    j["bags"] = bags;
    json p = json::object();
    if (m.pattern == Pattern::KMN) {
        p["m"] = m.m;
        p["n"] = m.n;
        if (m.big_bag) p["bigBag"] = *m.big_bag;
    }
    if (m.distinguished) p["v4"] = *m.distinguished;
    j["params"] = p;
    return j;
}

inline PatternMatch pattern_match_from_json(const json& j) {
    const std::string where = "pattern";
    const json& name = require(j, "pattern", where);
    if (!name.is_string()) throw InputError("field 'pattern.pattern': expected a string");
    auto p = parse_pattern(name.get<std::string>());
    if (!p) throw InputError("field 'pattern.pattern': unknown pattern " + name.dump());
    PatternMatch m;
    m.pattern = *p;
    const json& bags = require(j, "bags", where);
    if (!bags.is_array()) throw InputError("field 'pattern.bags': expected an array");
    for (std::size_t i = 0; i < bags.size(); ++i) m.bags.push_back(vertex_set_from_json(bags[i], "pattern.bags[" + std::to_string(i) + "]"));
    const json params = j.value("params", json::object());
    auto int_field = [&](const char* key) -> std::optional<int> {
        if (!params.contains(key)) return std::nullopt;
        if (!params[key].is_number_integer()) throw InputError(std::string("field 'pattern.params.") + key + "': expected an integer");
        return params[key].get<int>();
    };
    m.m = int_field("m").value_or(0);
    m.n = int_field("n").value_or(0);
    m.big_bag = int_field("bigBag");
    m.distinguished = int_field("v4");
    return m;
}

inline json to_json(const WitnessParams& p, Pattern pattern, bool big_bag) {
    json j;
    j["alpha"] = to_json(p.alpha);
    if (pattern == Pattern::H2 || (pattern == Pattern::KMN && big_bag)) j["eps"] = to_json(p.eps);
    if (pattern == Pattern::H3) {
        j["eps3"] = to_json(p.eps3);
        j["eps4"] = to_json(p.eps4);
        j["eps5"] = to_json(p.eps5);
    }
    return j;
}

inline WitnessParams params_from_json(const json& j) {
    if (!j.is_object()) throw InputError("field 'params': expected an object");
    WitnessParams p;
    p.alpha = rational_from_json(require(j, "alpha", "params"), "params.alpha");
    for (auto [key, slot] : {std::pair{"eps", &p.eps}, {"eps3", &p.eps3}, {"eps4", &p.eps4}, {"eps5", &p.eps5}})
        if (j.contains(key)) *slot = rational_from_json(j.at(key), std::string("params.") + key);
    return p;
}

// ---------------------------------------------------------------- certificates

inline json to_json(const WitnessCertificate& c) {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    j["graph6"] = to_graph6(c.graph);
    j["method"] = method_name(c.method);
    if (c.source_pattern) j["pattern"] = to_json(*c.source_pattern);
    if (c.params && c.source_pattern)
        j["params"] = to_json(*c.params, c.source_pattern->pattern, c.source_pattern->big_bag.has_value());
    j["weights"] = to_json(c.weights);
    j["s"] = to_json(c.s);
    j["cs"] = to_json(c.cs);
    j["minimumSafeSet"] = to_json(c.minimum_safe_set);
    if (c.seed) j["seed"] = *c.seed;
    return j;
}

inline WitnessCertificate certificate_from_json(const json& j) {
    const std::string where = "certificate";
    if (!j.is_object()) throw InputError("certificate: expected a JSON object");
    WitnessCertificate c;
    const json& g6 = require(j, "graph6", where);
    if (!g6.is_string()) throw InputError("field 'graph6': expected a string");
    try {
        c.graph = from_graph6(g6.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(std::string("field 'graph6': ") + e.what());
    }
    const json& method = require(j, "method", where);
    if (method == "pattern") c.method = WitnessMethod::Pattern;
    else if (method == "random") c.method = WitnessMethod::Random;
    else throw InputError("field 'method': expected \"pattern\" or \"random\", got " + method.dump());
    if (j.contains("pattern")) c.source_pattern = pattern_match_from_json(j.at("pattern"));
    if (j.contains("params")) c.params = params_from_json(j.at("params"));
    c.weights = weights_from_json(require(j, "weights", where));
    c.s = rational_from_json(require(j, "s", where), "s");
    c.cs = rational_from_json(require(j, "cs", where), "cs");
    c.minimum_safe_set = vertex_set_from_json(require(j, "minimumSafeSet", where), "minimumSafeSet");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
            throw InputError("field 'seed': expected a nonnegative integer");
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    return c;
}

// ---------------------------------------------------------------- quotients

inline std::vector<VertexSet> partition_from_json(const json& j) {
    const json& bags = j.is_object() ? require(j, "bags", "partition") : j;
    if (!bags.is_array()) throw InputError("field 'bags': expected an array of arrays");
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < bags.size(); ++i) out.push_back(vertex_set_from_json(bags[i], "bags[" + std::to_string(i) + "]"));
    return out;
}

inline json quotient_report(const Graph& quotient, const std::vector<VertexSet>& bags, const std::vector<bool>* in_s = nullptr) {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    j["graph6"] = to_graph6(quotient);
    json b = json::array();
    for (VertexSet s : bags) b.push_back(to_json(s));
    j["bags"] = b;
    int n = 0;
    for (VertexSet s : bags) n += s.size();
    std::vector<int> bag_of(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < bags.size(); ++i)
        for (int v : bags[i])
            if (v < n) bag_of[v] = static_cast<int>(i);
    j["bagOf"] = bag_of;
    if (in_s) {
        json side = json::array();
        for (bool x : *in_s) side.push_back(x ? "IN_S" : "OUT_S");
        j["bagSide"] = side;
    }
    return j;
}

// ---------------------------------------------------------------- campaigns

inline json to_json(const SamplingEvidence& e) {
    json j;
    j["seed"] = e.seed;
    j["sampleCount"] = e.sample_count;
    j["allEqual"] = e.all_equal;
    json samples = json::array();
    for (const auto& s : e.samples) {
        json x;
        x["weights"] = to_json(s.weights);
        x["s"] = to_json(s.s);
        x["cs"] = to_json(s.cs);
        samples.push_back(x);
    }
    j["samples"] = samples;
    return j;
}

inline json to_json(const CampaignReport& r) {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    j["minOrder"] = r.min_order;
    j["maxOrder"] = r.max_order;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    json sweeps = json::array();
    for (Sweep s : r.sweeps) sweeps.push_back(sweep_name(s));
    j["sweeps"] = sweeps;
    const auto& c = r.counts;
    j["counts"] = {{"total", c.total},       {"bipartite", c.bipartite},   {"chordal", c.chordal},
                   {"triangleFree", c.triangle_free}, {"members", c.members}, {"nonMembers", c.non_members},
                   {"undecided", c.undecided}, {"certified", c.certified}, {"sampled", c.sampled},
                   {"betaChecks", c.beta_checks}};
    j["passed"] = r.passed();
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"graph6", f.graph6}, {"kind", f.kind}, {"message", f.message}});
    j["failures"] = failures;
    json records = json::array();
    for (const auto& rec : r.records) {
        json x;
        x["graph6"] = rec.graph6;
        x["order"] = rec.order;
        json sw = json::array();
        for (Sweep s : rec.sweeps) sw.push_back(sweep_name(s));
        x["sweeps"] = sw;
        x["classification"] = to_json(rec.classification);
        if (rec.certificate) x["certificate"] = to_json(*rec.certificate);
        if (rec.evidence) x["evidence"] = to_json(*rec.evidence);
        records.push_back(x);
    }
    j["records"] = records;
    json beta = json::array();
    for (const auto& b : r.beta_chain) {
        beta.push_back({{"graph6", b.graph6},
                        {"safeSet", to_json(b.safe_set)},
                        {"complementDisconnected", b.complement_disconnected},
                        {"betaGraph6", b.beta_graph6},
                        {"betaVerdict", verdict_name(b.beta_verdict)},
                        {"betaGap", b.beta_gap},
                        {"ok", b.ok}});
    }
    j["betaChain"] = beta;
    if (r.wall_seconds) j["wallSeconds"] = *r.wall_seconds;
    return j;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

// One row per graph.
inline std::string campaign_csv(const CampaignReport& r) {
    std::ostringstream out;
    out << "graph6,order,sweeps,verdict,family,reason,method,pattern,s,cs,samples,all_equal\n";
    for (const auto& rec : r.records) {
        std::string sweeps;
        for (Sweep s : rec.sweeps) sweeps += (sweeps.empty() ? "" : ";") + std::string(sweep_name(s));
        const auto& cl = rec.classification;
        out << csv_field(rec.graph6) << ',' << rec.order << ',' << sweeps << ',' << verdict_name(cl.verdict) << ','
            << (cl.family ? family_name(*cl.family) : "") << ',' << cl.reason << ',';
        if (rec.certificate) {
            const auto& c = *rec.certificate;
            out << method_name(c.method) << ',' << (c.source_pattern ? pattern_name(c.source_pattern->pattern) : "") << ','
                << c.s.str() << ',' << c.cs.str();
        } else {
            out << ",,,";
        }
        out << ',' << (rec.evidence ? rec.evidence->sample_count : 0) << ','
            << (rec.evidence ? (rec.evidence->all_equal ? "true" : "false") : "") << '\n';
    }
    return out.str();
}

}  // namespace safeset
