#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scx/bounds.hpp"
#include "scx/complex.hpp"
#include "scx/experiment.hpp"
#include "scx/laplacian.hpp"

namespace scx {

using json = nlohmann::ordered_json;

/// 17 significant digits; round-trips any double.
inline std::string fmt_full(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Six significant digits, for tables.
inline std::string fmt6(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline json to_json(const SpectralSummary& s)
{
    json j;
    j["k"] = s.k;
    j["eigenvalues"] = s.eigenvalues;
    j["mu_k"] = s.mu ? json(*s.mu) : json(nullptr);
    j["zero_count"] = s.zero_count;
    j["tolerance"] = s.tolerance;
    return j;
}

inline json to_json(const BoundsReport& r)
{
    json j;
    j["name"] = r.name;
    j["k"] = r.k;
    j["status"] = r.status == BoundStatus::ok ? "ok" : "not_applicable";
    if (r.status == BoundStatus::ok) {
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["residual"] = r.residual;
    } else {
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["residual"] = nullptr;
    }
    j["holds"] = r.holds;
    j["ingredients"] = r.ingredients;
    j["flags"] = r.flags;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json to_json(const VanishingCertificate& c)
{
    json j;
    j["name"] = c.name;
    j["k"] = c.k;
    j["lambda2"] = c.lambda2;
    j["threshold"] = c.threshold;
    j["condition_holds"] = c.condition_holds;
    j["implied_betti_zero"] = c.implied_betti_zero;
    j["exact_betti"] = c.exact_betti ? json(*c.exact_betti) : json(nullptr);
    j["ingredients"] = c.ingredients;
    j["flags"] = c.flags;
    return j;
}

inline json complex_to_json(const SimplicialComplex& x)
{
    json j;
    j["n"] = x.ambient_order();
    j["f_vector"] = x.f_vector();
    json faces = json::array();
    for (int d = 0; d <= x.top_dim(); ++d)
        for (const Simplex& s : x.faces(d)) faces.push_back(std::vector<Vertex>(s.begin(), s.end()));
    j["faces"] = std::move(faces);
    j["connected"] = x.is_connected();
    return j;
}

inline std::string mode_name(Mode m) { return m == Mode::vanishing ? "vanishing" : "nonvanishing"; }

inline json to_json(const ExperimentConfig& c)
{
    json j;
    j["mode"] = mode_name(c.mode);
    j["n"] = c.n;
    j["k"] = c.k;
    switch (c.p_spec.kind) {
    case PSpec::Kind::explicit_p: j["p_spec"] = {{"kind", "explicit"}, {"p", c.p_spec.value}}; break;
    case PSpec::Kind::threshold: j["p_spec"] = {{"kind", "threshold"}, {"c", c.p_spec.value}}; break;
    case PSpec::Kind::power: j["p_spec"] = {{"kind", "power"}, {"alpha", c.p_spec.value}}; break;
    }
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["budget"] = c.betti_budget;
    return j;
}

inline json to_json(const ExperimentSummary& s)
{
    json j;
    j["config"] = to_json(s.config);
    j["p"] = s.p;
    j["warnings"] = s.warnings;
    json f;
    for (const auto& [name, q] : s.frequencies)
        f[name] = {{"count", q.count}, {"total", q.total}, {"rate", q.rate}, {"wilson95", {q.lower, q.upper}}};
    j["frequencies"] = std::move(f);
    json st;
    for (const auto& [name, q] : s.stats) st[name] = {{"samples", q.samples}, {"mean", q.mean}, {"max", q.max}};
    j["stats"] = std::move(st);
    j["violations"] = {{"certificate", s.certificate_violations},
                       {"witness", s.witness_violations},
                       {"d_k_exceeds_b_k", s.dk_bk_violations}};
    return j;
}

inline json to_json(const TrialRecord& r, bool timing)
{
    json j;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["degenerate"] = r.degenerate;
    j["disconnected"] = r.disconnected;
    j["full_skeleton"] = r.full_skeleton;
    j["skeleton_clique"] = r.skeleton_clique;
    j["lambda2"] = r.lambda2 ? json(*r.lambda2) : json(nullptr);
    j["d_k"] = r.d_k;
    j["b_k"] = r.b_k;
    j["certificate"] = r.certificate;
    j["betti"] = r.betti.empty() ? json(nullptr) : json(r.betti);
    j["over_budget"] = r.over_budget;
    j["vanished"] = r.vanished();
    if (r.lambda_r_found) j["lambda_r"] = *r.lambda_r_found;
    if (r.witness) j["witness"] = *r.witness;
    if (timing) j["runtime_ms"] = r.runtime_ms;
    return j;
}

inline const char* kCsvHeader = "trial,seed,n,p,k,full_skeleton,lambda2,d_k,b_k,certificate,betti_k,lambda_r,runtime_ms";

/// One CSV row per trial; fields that were not computed are left empty.
/// runtime_ms is only filled when `timing` is set, so default output is reproducible.
inline void write_csv_row(std::ostream& out, const ExperimentSummary& s, const TrialRecord& r, bool timing)
{
    out << r.trial << ',' << r.seed << ',' << s.config.n << ',' << fmt_full(s.p) << ',' << s.config.k << ','
        << (r.full_skeleton ? 1 : 0) << ',' << (r.lambda2 ? fmt_full(*r.lambda2) : "") << ',' << r.d_k << ','
        << r.b_k << ',' << (r.certificate ? 1 : 0) << ',';
    if (auto b = r.betti_k()) out << *b;
    out << ',';
    if (r.lambda_r_found) out << (*r.lambda_r_found ? 1 : 0);
    out << ',';
    if (timing) out << fmt_full(r.runtime_ms);
    out << '\n';
}

/// Human-readable summary lines, each prefixed with `prefix`.
inline void write_summary_table(std::ostream& out, const ExperimentSummary& s, const std::string& prefix = "")
{
    out << prefix << "mode " << mode_name(s.config.mode) << "  n " << s.config.n << "  k " << s.config.k << "  p "
        << fmt6(s.p) << "  trials " << s.config.trials << "  seed " << s.config.seed << '\n';
    for (const auto& w : s.warnings) out << prefix << "warning: " << w << '\n';
    for (const auto& [name, f] : s.frequencies) {
        char line[160];
        std::snprintf(line, sizeof line, "%-16s %6zu/%-6zu %-10s [%s, %s]", name.c_str(), f.count, f.total,
                      fmt6(f.rate).c_str(), fmt6(f.lower).c_str(), fmt6(f.upper).c_str());
        out << prefix << line << '\n';
    }
    for (const auto& [name, st] : s.stats) {
        char line[160];
        std::snprintf(line, sizeof line, "%-16s mean %-10s max %-10s (n=%zu)", name.c_str(), fmt6(st.mean).c_str(),
                      fmt6(st.max).c_str(), st.samples);
        out << prefix << line << '\n';
    }
    out << prefix << "violations: certificate " << s.certificate_violations << "  witness " << s.witness_violations
        << "  d_k>b_k " << s.dk_bk_violations << '\n';
}

} // namespace scx
