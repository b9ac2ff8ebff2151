#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "scx/bounds.hpp"
#include "scx/complex.hpp"
#include "scx/errors.hpp"
#include "scx/exact_rank.hpp"
#include "scx/extension.hpp"
#include "scx/laplacian.hpp"
#include "scx/random.hpp"

namespace scx {

enum class Mode { vanishing, nonvanishing };

/// How the edge probability of a run is chosen.
struct PSpec {
    enum class Kind { explicit_p, threshold, power };
    Kind kind = Kind::explicit_p;
    /// p itself, the threshold offset c, or the exponent alpha.
    double value = 0.0;

    static PSpec explicit_p(double p) { return {Kind::explicit_p, p}; }
    static PSpec threshold(double c) { return {Kind::threshold, c}; }
    static PSpec power(double alpha) { return {Kind::power, alpha}; }
};

inline constexpr double kDefaultBettiBudget = 5e7;

struct ExperimentConfig {
    std::size_t n = 0;
    int k = 1;
    PSpec p_spec;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    Mode mode = Mode::vanishing;
    /// Cap on |X(k)| * |X(k+1)| for the exact Betti computation of a trial.
    double betti_budget = kDefaultBettiBudget;
    /// Count every qualifying r-clique instead of stopping at the first.
    bool count_all_cliques = false;
    std::size_t clique_budget = 10'000'000;
    std::size_t threads = 1;
};

inline double resolve_p(const ExperimentConfig& c)
{
    switch (c.p_spec.kind) {
    case PSpec::Kind::threshold: return p_threshold_main(c.n, c.k, c.p_spec.value);
    case PSpec::Kind::power: return p_power(c.n, c.p_spec.value);
    case PSpec::Kind::explicit_p: break;
    }
    if (!(c.p_spec.value >= 0.0 && c.p_spec.value <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    return c.p_spec.value;
}

inline void validate(const ExperimentConfig& c)
{
    if (c.n < 2) throw std::invalid_argument("n must be >= 2");
    if (c.k < 1) throw std::invalid_argument("k must be >= 1");
    if (c.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (c.betti_budget < 0) throw std::invalid_argument("budget must be >= 0");
    if (c.threads < 1) throw std::invalid_argument("threads must be >= 1");
    (void)resolve_p(c);
}

/// Non-fatal configuration remarks (regime outside the one the run is meant to probe).
inline std::vector<std::string> config_warnings(const ExperimentConfig& c)
{
    std::vector<std::string> w;
    if (c.mode == Mode::nonvanishing) {
        if (c.p_spec.kind != PSpec::Kind::power) {
            w.emplace_back("nonvanishing run without a power-law p; the alpha window does not apply");
        } else {
            const double lo = -2.0 / (c.k + 1), hi = -1.0 / (c.k + 1);
            const double a = c.p_spec.value;
            if (!(a > lo && a < hi))
                w.emplace_back("alpha = " + std::to_string(a) + " outside (" + std::to_string(lo) + ", "
                               + std::to_string(hi) + ")");
        }
    }
    if (c.p_spec.kind == PSpec::Kind::threshold) {
        const double base = ((c.k + 1) * std::log(static_cast<double>(c.n)) + c.p_spec.value) / static_cast<double>(c.n);
        if (base <= 0.0) w.emplace_back("threshold base is non-positive; p resolved to 0");
    }
    return w;
}

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    /// N(G) is the empty complex.
    bool degenerate = false;
    /// G itself is disconnected.
    bool disconnected = false;
    bool full_skeleton = false;
    /// k-skeleton of N equals that of the clique complex of its 1-skeleton.
    bool skeleton_clique = false;
    std::optional<double> lambda2;
    std::size_t d_k = 0;
    std::size_t b_k = 0;
    bool certificate = false;
    double certificate_threshold = 0.0;
    /// Exact reduced Betti numbers for dimensions -1..k; empty when over budget.
    std::vector<std::size_t> betti;
    bool over_budget = false;
    std::optional<bool> lambda_r_found;
    std::optional<std::vector<Vertex>> witness;
    double runtime_ms = 0.0;

    std::optional<std::size_t> betti_k() const
    {
        if (betti.empty()) return std::nullopt;
        return betti.back();
    }

    /// H~^i(N) = 0 for all i <= k. Exact Betti numbers decide when available; over
    /// budget the certificate (which speaks to dimension k only) stands in.
    /// Degenerate trials never count: the empty complex has H~^{-1} != 0.
    bool vanished() const
    {
        if (betti.empty()) return certificate;
        for (std::size_t b : betti)
            if (b != 0) return false;
        return true;
    }

    bool certificate_violation() const { return certificate && betti_k() && *betti_k() != 0; }
    bool witness_violation() const { return lambda_r_found.value_or(false) && betti_k() && *betti_k() == 0; }
    bool dk_bk_violation() const { return skeleton_clique && d_k > b_k; }
};

/// Empirical frequency with a Wilson score interval.
struct Frequency {
    std::size_t count = 0;
    std::size_t total = 0;
    double rate = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

inline Frequency wilson(std::size_t count, std::size_t total, double z = 1.959963984540054)
{
    Frequency f{count, total};
    if (total == 0) return f;
    const double n = static_cast<double>(total);
    const double ph = static_cast<double>(count) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (ph + z2 / (2 * n)) / denom;
    const double half = z / denom * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n));
    f.rate = ph;
    f.lower = std::max(0.0, std::min(ph, center - half));
    f.upper = std::min(1.0, std::max(ph, center + half));
    return f;
}

struct SampleStat {
    std::size_t samples = 0;
    double mean = 0.0;
    double max = 0.0;
};

struct ExperimentSummary {
    ExperimentConfig config;
    double p = 0.0;
    std::vector<std::string> warnings;
    std::map<std::string, Frequency> frequencies;
    std::map<std::string, SampleStat> stats;
    std::size_t certificate_violations = 0;
    std::size_t witness_violations = 0;
    std::size_t dk_bk_violations = 0;
};

struct ExperimentResult {
    ExperimentSummary summary;
    std::vector<TrialRecord> trials;
};

/// One trial: sample G, build N(G) capped at dimension k+1 and record the
/// certificate ingredients, exact Betti numbers within budget and, in
/// nonvanishing mode, the unextendable-clique search with r = k+2.
inline TrialRecord run_trial(const ExperimentConfig& c, double p, std::size_t trial)
{
    const auto t0 = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.trial = trial;
    rec.seed = trial_seed(c.seed, trial);
    const int k = c.k;

    const Graph g = gnp(c.n, p, rec.seed);
    rec.disconnected = !g.is_connected();
    const SimplicialComplex nb = neighborhood_complex(g, k + 1);
    rec.degenerate = nb.empty();

    if (!rec.degenerate) {
        rec.full_skeleton = nb.is_full_skeleton(k);
        rec.skeleton_clique = matches_clique_complex(nb, k);
        rec.lambda2 = mu(nb, 0);
        rec.d_k = d_k(nb, k, k + 1);
        rec.b_k = count_boundary_subcomplexes(nb, k);
        if (rec.skeleton_clique) {
            const double n = static_cast<double>(nb.count(0));
            rec.certificate_threshold = k * n / (k + 1) + (k + 1) * static_cast<double>(rec.d_k);
            rec.certificate = *rec.lambda2 - rec.certificate_threshold > kStrictMargin;
        }
    }

    double work = 0.0;
    for (int i = -1; i <= k; ++i) work = std::max(work, betti_work(nb, i));
    if (work <= c.betti_budget) {
        for (int i = -1; i <= k; ++i) rec.betti.push_back(betti_reduced_exact(nb, i));
    } else {
        rec.over_budget = true;
    }

    if (c.mode == Mode::nonvanishing) {
        auto found = find_unextendable_clique(g, static_cast<std::size_t>(k + 2), c.count_all_cliques, c.clique_budget);
        rec.lambda_r_found = found.found;
        rec.witness = found.witness;
    }

    rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

inline ExperimentSummary summarize(const ExperimentConfig& c, double p, const std::vector<TrialRecord>& trials)
{
    ExperimentSummary s;
    s.config = c;
    s.p = p;
    s.warnings = config_warnings(c);
    const std::size_t t = trials.size();
    auto freq = [&](const std::string& name, auto pred) {
        std::size_t count = 0;
        for (const auto& r : trials)
            if (pred(r)) ++count;
        s.frequencies[name] = wilson(count, t);
    };
    freq("full_skeleton", [](const TrialRecord& r) { return r.full_skeleton; });
    freq("skeleton_clique", [](const TrialRecord& r) { return r.skeleton_clique; });
    freq("certificate", [](const TrialRecord& r) { return r.certificate; });
    freq("vanishing", [](const TrialRecord& r) { return r.vanished(); });
    freq("betti_computed", [](const TrialRecord& r) { return !r.betti.empty(); });
    freq("betti_k_nonzero", [](const TrialRecord& r) { return r.betti_k().value_or(0) > 0; });
    freq("degenerate", [](const TrialRecord& r) { return r.degenerate; });
    freq("disconnected", [](const TrialRecord& r) { return r.disconnected; });
    freq("over_budget", [](const TrialRecord& r) { return r.over_budget; });
    if (c.mode == Mode::nonvanishing)
        freq("lambda_r_found", [](const TrialRecord& r) { return r.lambda_r_found.value_or(false); });

    auto stat = [&](const std::string& name, auto get) {
        SampleStat st;
        double sum = 0.0;
        for (const auto& r : trials) {
            const std::optional<double> v = get(r);
            if (!v) continue;
            sum += *v;
            st.max = st.samples == 0 ? *v : std::max(st.max, *v);
            ++st.samples;
        }
        if (st.samples) st.mean = sum / static_cast<double>(st.samples);
        s.stats[name] = st;
    };
    stat("lambda2", [](const TrialRecord& r) { return r.lambda2; });
    stat("d_k", [](const TrialRecord& r) { return std::optional<double>(static_cast<double>(r.d_k)); });
    stat("b_k", [](const TrialRecord& r) { return std::optional<double>(static_cast<double>(r.b_k)); });
    stat("betti_k", [](const TrialRecord& r) {
        auto b = r.betti_k();
        return b ? std::optional<double>(static_cast<double>(*b)) : std::nullopt;
    });

    for (const auto& r : trials) {
        s.certificate_violations += r.certificate_violation();
        s.witness_violations += r.witness_violation();
        s.dk_bk_violations += r.dk_bk_violation();
    }
    return s;
}

/// Runs all trials (optionally on several threads) and reduces them in trial order.
inline ExperimentResult run_experiment(const ExperimentConfig& c)
{
    validate(c);
    const double p = resolve_p(c);
    std::vector<TrialRecord> trials(c.trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < c.trials;) {
            try {
                trials[i] = run_trial(c, p, i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < c.threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);
    ExperimentResult res{summarize(c, p, trials), std::move(trials)};
    return res;
}

inline ExperimentResult mc_vanishing(ExperimentConfig c)
{
    c.mode = Mode::vanishing;
    return run_experiment(c);
}

inline ExperimentResult mc_nonvanishing(ExperimentConfig c)
{
    c.mode = Mode::nonvanishing;
    return run_experiment(c);
}

} // namespace scx
