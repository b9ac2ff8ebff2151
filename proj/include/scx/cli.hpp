#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scx/bounds.hpp"
#include "scx/complex.hpp"
#include "scx/errors.hpp"
#include "scx/exact_rank.hpp"
#include "scx/experiment.hpp"
#include "scx/io.hpp"
#include "scx/laplacian.hpp"
#include "scx/report.hpp"

namespace scx::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInputError = 1, kBudgetExhausted = 2 };

struct Options {
    std::string graph_path;
    std::string complex_path;
    std::string sub_path;
    std::optional<int> k;
    std::optional<int> max_dim;
    std::string format;
    std::optional<double> budget;
    bool hodge = false;
    bool no_banner = false;

    std::string mode = "vanishing";
    std::optional<std::size_t> n;
    std::optional<double> p, c, alpha;
    std::size_t trials = 1;
    std::optional<std::uint64_t> seed;
    std::size_t threads = 1;
    bool count_all = false;
    bool timing = false;
};

namespace detail {

inline double resolve_budget(const Options& o)
{
    if (o.budget) return *o.budget;
    if (const char* env = std::getenv("SCX_BUDGET")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("SCX_BUDGET is not a number: ") + env);
        }
    }
    return kDefaultBettiBudget;
}

// Complex named by --graph (clique complex, capped) or --complex (face list).
inline SimplicialComplex load_complex(const Options& o, int default_cap)
{
    if (o.graph_path.empty() == o.complex_path.empty())
        throw std::invalid_argument("give exactly one of --graph or --complex");
    if (!o.graph_path.empty()) {
        auto in = open_input(o.graph_path);
        return clique_complex(read_edge_list(in), o.max_dim.value_or(std::max(1, default_cap)));
    }
    auto in = open_input(o.complex_path);
    return read_face_list(in);
}

inline void warn_flags(const SimplicialComplex& x, std::ostream& err)
{
    if (x.empty()) err << "warning: complex is empty (degenerate)\n";
    else if (!x.is_connected()) err << "warning: 1-skeleton is disconnected\n";
}

inline void require_format(const std::string& f, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (f == a) return;
    throw std::invalid_argument("format \"" + f + "\" not supported by this command");
}

inline int cmd_build(const Options& o, bool neighborhood, std::ostream& out, std::ostream& err)
{
    if (o.graph_path.empty()) throw std::invalid_argument("--graph is required");
    const std::string fmt = o.format.empty() ? "table" : o.format;
    require_format(fmt, {"table", "json"});
    auto in = open_input(o.graph_path);
    const Graph g = read_edge_list(in);
    const SimplicialComplex x = neighborhood ? neighborhood_complex(g, o.max_dim) : clique_complex(g, o.max_dim.value_or(2));
    warn_flags(x, err);
    if (fmt == "table") {
        write_face_list(out, x);
        return kOk;
    }
    json j = complex_to_json(x);
    if (o.k) j["betti"] = {{"k", *o.k}, {"value", betti_reduced_exact(x, *o.k, resolve_budget(o))}};
    out << j.dump(2) << '\n';
    return kOk;
}

inline int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err)
{
    if (!o.k) throw std::invalid_argument("--k is required");
    const std::string fmt = o.format.empty() ? "json" : o.format;
    require_format(fmt, {"table", "json"});
    const SimplicialComplex x = load_complex(o, *o.k + 1);
    warn_flags(x, err);
    const SpectralSummary s = spectrum(x, *o.k);
    std::optional<std::vector<double>> graph_eig;
    if (*o.k == 0 && x.count(0) > 0) graph_eig = eigenvalues_sym(graph_laplacian(x.one_skeleton()));

    if (fmt == "json") {
        // "eigenvalues" is the graph Laplacian at k = 0 and Delta_k otherwise;
        // "reduced_eigenvalues" is always Delta_k, the operator mu_k is read from.
        json j = to_json(s);
        j["reduced_eigenvalues"] = s.eigenvalues;
        if (graph_eig) {
            j["eigenvalues"] = *graph_eig;
            j["lambda2"] = graph_eig->size() >= 2 ? json((*graph_eig)[1]) : json(nullptr);
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "k " << s.k << '\n' << "mu_k " << (s.mu ? fmt6(*s.mu) : "undefined") << '\n';
    out << "zero_count " << s.zero_count << "  (tolerance " << fmt6(s.tolerance) << ")\n" << "eigenvalues";
    for (double e : s.eigenvalues) out << ' ' << fmt6(e);
    out << '\n';
    if (graph_eig) {
        out << "graph_laplacian";
        for (double e : *graph_eig) out << ' ' << fmt6(e);
        out << '\n';
    }
    return kOk;
}

inline int cmd_betti(const Options& o, std::ostream& out, std::ostream& err)
{
    if (!o.k) throw std::invalid_argument("--k is required");
    const std::string fmt = o.format.empty() ? "table" : o.format;
    require_format(fmt, {"table", "json"});
    const SimplicialComplex x = load_complex(o, *o.k + 1);
    warn_flags(x, err);
    const std::size_t b = betti_reduced_exact(x, *o.k, resolve_budget(o));
    std::optional<std::size_t> h;
    if (o.hodge && *o.k >= 0) h = hodge_kernel_dim(x, *o.k);
    if (fmt == "table") {
        out << b << '\n';
        if (h) out << "hodge " << *h << '\n';
        return kOk;
    }
    json j{{"k", *o.k}, {"betti", b}, {"method", "exact"}};
    if (h) j["hodge_kernel_dim"] = *h;
    out << j.dump(2) << '\n';
    return kOk;
}

inline int cmd_bounds(const Options& o, std::ostream& out, std::ostream& err)
{
    if (!o.k) throw std::invalid_argument("--k is required");
    const int k = *o.k;
    if (k < 1) throw std::invalid_argument("--k must be >= 1 for bounds");
    const std::string fmt = o.format.empty() ? "table" : o.format;
    require_format(fmt, {"table", "json"});
    const SimplicialComplex x = load_complex(o, k + 1);
    warn_flags(x, err);
    std::optional<SimplicialComplex> sub;
    if (!o.sub_path.empty()) {
        auto in = open_input(o.sub_path);
        sub = read_face_list(in);
    }
    const double budget = resolve_budget(o);

    std::vector<BoundsReport> reports;
    std::vector<VanishingCertificate> certs;
    if (matches_clique_complex(x, k + 1)) {
        reports.push_back(check_abm_recursion(x, k));
    } else {
        BoundsReport r{.name = "abm_recursion", .k = k, .status = BoundStatus::not_applicable};
        r.note = "X is not a clique complex through dimension k+1";
        reports.push_back(r);
    }
    reports.push_back(check_general_bound(x, k));
    if (sub) {
        reports.push_back(check_subcomplex_bound(x, *sub, k));
        if (matches_clique_complex(x, k + 1) && sub->count(0) == x.count(0) && sub->count(1) == x.count(1))
            certs.push_back(vanishing_certificate_subcomplex(x, *sub, k, budget));
    }
    if (!x.empty() && matches_clique_complex(x, k)) certs.push_back(vanishing_certificate_general(x, k, budget));

    json q;
    q["n"] = x.count(0);
    for (int j = 1; j <= k + 1; ++j) q["D_k_" + std::to_string(j)] = d_k(x, k, j);
    q["B_k"] = count_boundary_subcomplexes(x, k);
    if (sub) q["S_k"] = s_k(x, *sub, k);

    if (fmt == "json") {
        json j;
        j["k"] = k;
        j["quantities"] = q;
        j["reports"] = json::array();
        for (const auto& r : reports) j["reports"].push_back(to_json(r));
        j["certificates"] = json::array();
        for (const auto& c : certs) j["certificates"].push_back(to_json(c));
        out << j.dump(2) << '\n';
        return kOk;
    }
    char line[200];
    std::snprintf(line, sizeof line, "%-14s %-14s %-14s %-14s %s\n", "bound", "lhs", "rhs", "residual", "holds");
    out << line;
    for (const auto& r : reports) {
        if (r.status == BoundStatus::ok)
            std::snprintf(line, sizeof line, "%-14s %-14s %-14s %-14s %s\n", r.name.c_str(), fmt6(r.lhs).c_str(),
                          fmt6(r.rhs).c_str(), fmt6(r.residual).c_str(), r.holds ? "yes" : "NO");
        else
            std::snprintf(line, sizeof line, "%-14s %-44s n/a\n", r.name.c_str(), r.note.c_str());
        out << line;
    }
    for (const auto& c : certs) {
        out << "certificate " << c.name << ": lambda2 " << fmt6(c.lambda2) << " vs threshold " << fmt6(c.threshold)
            << (c.condition_holds ? " -> fires" : " -> does not fire");
        if (c.exact_betti) out << " (exact betti " << *c.exact_betti << ")";
        out << '\n';
    }
    out << "quantities";
    for (const auto& [name, v] : q.items()) out << ' ' << name << '=' << v.dump();
    out << '\n';
    return kOk;
}

inline int cmd_mc(const Options& o, std::ostream& out, std::ostream& err)
{
    if (!o.seed) throw std::invalid_argument("--seed is required for random experiments");
    if (!o.n) throw std::invalid_argument("--n is required");
    if (!o.k) throw std::invalid_argument("--k is required");
    const int given = (o.p ? 1 : 0) + (o.c ? 1 : 0) + (o.alpha ? 1 : 0);
    if (given != 1) throw std::invalid_argument("give exactly one of --p, --c, --alpha");
    const std::string fmt = o.format.empty() ? "table" : o.format;
    require_format(fmt, {"table", "json", "csv"});

    ExperimentConfig c;
    c.n = *o.n;
    c.k = *o.k;
    c.trials = o.trials;
    c.seed = *o.seed;
    c.threads = o.threads;
    c.count_all_cliques = o.count_all;
    c.betti_budget = resolve_budget(o);
    if (o.mode == "vanishing") c.mode = Mode::vanishing;
    else if (o.mode == "nonvanishing") c.mode = Mode::nonvanishing;
    else throw std::invalid_argument("--mode must be vanishing or nonvanishing");
    c.p_spec = o.p ? PSpec::explicit_p(*o.p) : o.c ? PSpec::threshold(*o.c) : PSpec::power(*o.alpha);
    validate(c);
    for (const auto& w : config_warnings(c)) err << "warning: " << w << '\n';

    const ExperimentResult res = run_experiment(c);
    const auto& s = res.summary;
    if (s.frequencies.at("disconnected").count > 0)
        err << "warning: " << s.frequencies.at("disconnected").count << " trial graph(s) disconnected\n";
    if (s.frequencies.at("degenerate").count > 0)
        err << "warning: " << s.frequencies.at("degenerate").count << " trial(s) with empty neighborhood complex\n";

    if (fmt == "csv") {
        out << kCsvHeader << '\n';
        for (const auto& r : res.trials) write_csv_row(out, s, r, o.timing);
        write_summary_table(out, s, "# ");
    } else if (fmt == "json") {
        json j = to_json(s);
        j["trials"] = json::array();
        for (const auto& r : res.trials) j["trials"].push_back(to_json(r, o.timing));
        out << j.dump(2) << '\n';
    } else {
        write_summary_table(out, s);
    }
    return kOk;
}

} // namespace detail

/// Entry point shared by the scx binary and the tests. Returns the process exit
/// code: 0 success, 1 input error, 2 budget exhaustion.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Simplicial Laplacian spectra, Betti numbers and spectral-gap bounds", "scx"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--no-banner", o.no_banner, "Suppress the version banner on stderr");

    auto add_input = [&](CLI::App* s) {
        s->add_option("--graph", o.graph_path, "Edge-list file");
        s->add_option("--complex", o.complex_path, "Face-list file");
        s->add_option("--max-dim", o.max_dim, "Dimension cap for built complexes");
        s->add_option("--format", o.format, "json | table (| csv for mc)");
        s->add_option("--budget", o.budget, "Exact-Betti work budget (|X(k)|*|X(k+1)|)");
    };

    auto* build = app.add_subcommand("build", "Clique complex of a graph");
    add_input(build);
    build->add_option("--k", o.k, "Also report the exact reduced Betti number in dimension k (json)");
    auto* nbhd = app.add_subcommand("nbhd", "Neighborhood complex of a graph");
    add_input(nbhd);
    nbhd->add_option("--k", o.k, "Also report the exact reduced Betti number in dimension k (json)");

    auto* spec = app.add_subcommand("spectrum", "Spectrum of the reduced Laplacian Delta_k");
    add_input(spec);
    spec->add_option("--k", o.k, "Dimension")->required();

    auto* betti = app.add_subcommand("betti", "Exact reduced Betti number");
    add_input(betti);
    betti->add_option("--k", o.k, "Dimension")->required();
    betti->add_flag("--hodge", o.hodge, "Also report dim ker Delta_k");

    auto* bounds = app.add_subcommand("bounds", "Spectral-gap inequalities and vanishing certificates");
    add_input(bounds);
    bounds->add_option("--k", o.k, "Dimension (>= 1)")->required();
    bounds->add_option("--sub", o.sub_path, "Face-list file of a subcomplex X'");

    auto* mc = app.add_subcommand("mc", "Monte-Carlo runs on neighborhood complexes of G(n, p)");
    mc->add_option("--mode", o.mode, "vanishing | nonvanishing");
    mc->add_option("--n", o.n, "Vertex count")->required();
    mc->add_option("--k", o.k, "Cohomology dimension")->required();
    mc->add_option("--p", o.p, "Explicit edge probability");
    mc->add_option("--c", o.c, "Threshold offset c");
    mc->add_option("--alpha", o.alpha, "Exponent alpha, p = n^alpha");
    mc->add_option("--trials", o.trials, "Trial count");
    mc->add_option("--seed", o.seed, "Run seed (required)");
    mc->add_option("--threads", o.threads, "Worker threads");
    mc->add_option("--format", o.format, "json | csv | table");
    mc->add_option("--budget", o.budget, "Exact-Betti work budget per trial");
    mc->add_flag("--count-all", o.count_all, "Count every unextendable clique instead of stopping at the first");
    mc->add_flag("--timing", o.timing, "Fill runtime_ms (makes output run-dependent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    if (!o.no_banner) err << "scx " << kVersion << '\n';

    try {
        if (build->parsed()) return detail::cmd_build(o, false, out, err);
        if (nbhd->parsed()) return detail::cmd_build(o, true, out, err);
        if (spec->parsed()) return detail::cmd_spectrum(o, out, err);
        if (betti->parsed()) return detail::cmd_betti(o, out, err);
        if (bounds->parsed()) return detail::cmd_bounds(o, out, err);
        if (mc->parsed()) return detail::cmd_mc(o, out, err);
    } catch (const BudgetExceeded& e) {
        err << "error: budget exhausted: " << e.what() << '\n';
        return kBudgetExhausted;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"scx"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace scx::cli
