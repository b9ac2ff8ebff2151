#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scx/complex.hpp"
#include "scx/exact_rank.hpp"
#include "scx/laplacian.hpp"

namespace scx {

/// Residuals at or above -kResidualTolerance count as an inequality holding.
inline constexpr double kResidualTolerance = 1e-9;
/// A strict certificate condition lhs > rhs fires only when lhs - rhs exceeds this.
inline constexpr double kStrictMargin = 1e-9;

enum class BoundStatus { ok, not_applicable };

/// One evaluated inequality lhs >= rhs with every quantity that went into it.
struct BoundsReport {
    std::string name;
    int k = 0;
    BoundStatus status = BoundStatus::ok;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool holds = false;
    std::map<std::string, double> ingredients;
    std::vector<std::string> flags;
    std::string note;
};

/// Outcome of a spectral vanishing test for H~^k.
struct VanishingCertificate {
    std::string name;
    int k = 0;
    double lambda2 = 0.0;
    double threshold = 0.0;
    bool condition_holds = false;
    /// Set iff condition_holds: the certificate asserts H~^k = 0.
    bool implied_betti_zero = false;
    /// Exact reduced Betti number, computed whenever the certificate fires.
    std::optional<std::size_t> exact_betti;
    std::map<std::string, double> ingredients;
    std::vector<std::string> flags;
};

namespace detail {

inline std::vector<std::string> complex_flags(const SimplicialComplex& x)
{
    std::vector<std::string> f;
    if (x.empty()) f.emplace_back("degenerate");
    else if (!x.is_connected()) f.emplace_back("disconnected");
    return f;
}

inline void finish(BoundsReport& r)
{
    r.residual = r.lhs - r.rhs;
    r.holds = r.residual >= -kResidualTolerance;
}

inline BoundsReport not_applicable(BoundsReport r, std::string why)
{
    r.status = BoundStatus::not_applicable;
    r.holds = false;
    r.note = std::move(why);
    return r;
}

inline void require_k_at_least_one(int k)
{
    if (k < 1) throw std::invalid_argument("k must be >= 1");
}

} // namespace detail

/// True iff X(d) is exactly the set of (d+1)-cliques of G_X for every d <= max_dim.
inline bool matches_clique_complex(const SimplicialComplex& x, int max_dim)
{
    if (x.empty()) return true;
    const auto cliques = clique_complex(x.one_skeleton(), std::max(1, max_dim));
    for (int d = 0; d <= max_dim; ++d)
        if (cliques.count(d) != x.count(d)) return false;
    return true;
}

/// S_k(X, X'): max over sigma in X'(k) of the number of (k+1)-faces of X
/// containing sigma that are missing from X'.
inline std::size_t s_k(const SimplicialComplex& x, const SimplicialComplex& sub, int k)
{
    detail::require_k_at_least_one(k);
    if (!sub.is_subcomplex_of(x)) throw std::invalid_argument("X' is not a subcomplex of X");
    std::size_t best = 0;
    const auto verts = x.vertices();
    for (const Simplex& sigma : sub.faces(k)) {
        std::size_t missing = 0;
        for (Vertex v : verts) {
            if (sigma.contains(v)) continue;
            const Simplex tau = sigma.insert_vertex(v).first;
            if (x.contains(tau) && !sub.contains(tau)) ++missing;
        }
        best = std::max(best, missing);
    }
    return best;
}

/// D_k(X, j): max over sigma in X(k) of the number of vertices u outside lk(sigma)
/// that lie in lk(sigma \ {v}) for exactly j vertices v of sigma. 0 when X(k) is empty.
inline std::size_t d_k(const SimplicialComplex& x, int k, int j)
{
    detail::require_k_at_least_one(k);
    if (j < 1 || j > k + 1) throw std::invalid_argument("j must lie in [1, k+1]");
    std::size_t best = 0;
    const auto verts = x.vertices();
    for (const Simplex& sigma : x.faces(k)) {
        std::size_t hits = 0;
        for (Vertex u : verts) {
            if (sigma.contains(u) || x.contains(sigma.insert_vertex(u).first)) continue;
            int facets = 0;
            for (std::size_t i = 0; i < sigma.size(); ++i)
                if (x.contains(sigma.face(i).insert_vertex(u).first)) ++facets;
            if (facets == j) ++hits;
        }
        best = std::max(best, hits);
    }
    return best;
}

/// B_k: number of (k+2)-vertex sets whose (k+1)-subsets are all faces while the
/// set itself is not. X must have been built with dimension cap >= k+1.
inline std::size_t count_boundary_subcomplexes(const SimplicialComplex& x, int k)
{
    detail::require_k_at_least_one(k);
    std::size_t count = 0;
    const auto verts = x.vertices();
    // each candidate S is visited once, as sigma = S minus its largest vertex
    for (const Simplex& sigma : x.faces(k)) {
        for (auto it = std::upper_bound(verts.begin(), verts.end(), sigma.vertices().back()); it != verts.end(); ++it) {
            const Simplex s = sigma.insert_vertex(*it).first;
            if (x.contains(s)) continue;
            bool all = true;
            for (std::size_t i = 0; i + 1 < s.size() && all; ++i) all = x.contains(s.face(i));
            if (all) ++count;
        }
    }
    return count;
}

/// k mu_k(X) >= (k+1) mu_{k-1}(X) - n for clique complexes X.
inline BoundsReport check_abm_recursion(const SimplicialComplex& x, int k)
{
    detail::require_k_at_least_one(k);
    if (!matches_clique_complex(x, k + 1))
        throw std::invalid_argument("check_abm_recursion requires a clique complex (through dimension k+1)");
    BoundsReport r{.name = "abm_recursion", .k = k, .flags = detail::complex_flags(x)};
    const auto mk = mu(x, k);
    const auto mk1 = mu(x, k - 1);
    const double n = static_cast<double>(x.count(0));
    r.ingredients["n"] = n;
    if (!mk || !mk1) return detail::not_applicable(r, "mu_k or mu_{k-1} undefined (empty cochain space)");
    r.ingredients["mu_k"] = *mk;
    r.ingredients["mu_k_minus_1"] = *mk1;
    r.lhs = k * *mk;
    r.rhs = (k + 1) * *mk1 - n;
    detail::finish(r);
    return r;
}

/// mu_k(X') >= mu_k(X) - (k+2) S_k(X, X').
inline BoundsReport check_subcomplex_bound(const SimplicialComplex& x, const SimplicialComplex& sub, int k)
{
    const std::size_t s = s_k(x, sub, k);
    BoundsReport r{.name = "subcomplex", .k = k, .flags = detail::complex_flags(sub)};
    r.ingredients["S_k"] = static_cast<double>(s);
    const auto mx = mu(x, k);
    const auto ms = mu(sub, k);
    if (!mx || !ms) return detail::not_applicable(r, "X(k) or X'(k) is empty");
    r.ingredients["mu_k_X"] = *mx;
    r.ingredients["mu_k_sub"] = *ms;
    r.lhs = *ms;
    r.rhs = *mx - (k + 2) * static_cast<double>(s);
    detail::finish(r);
    return r;
}

/// k mu_k(X) >= (k+1) mu_{k-1}(X) - n - sum_{j=2}^{k+1} (k(k+1)+j) D_k(X, j).
inline BoundsReport check_general_bound(const SimplicialComplex& x, int k)
{
    detail::require_k_at_least_one(k);
    BoundsReport r{.name = "general", .k = k, .flags = detail::complex_flags(x)};
    const double n = static_cast<double>(x.count(0));
    r.ingredients["n"] = n;
    double penalty = 0.0;
    for (int j = 2; j <= k + 1; ++j) {
        const auto d = static_cast<double>(d_k(x, k, j));
        r.ingredients["D_k_" + std::to_string(j)] = d;
        penalty += (k * (k + 1) + j) * d;
    }
    const auto mk = mu(x, k);
    const auto mk1 = mu(x, k - 1);
    if (!mk || !mk1) return detail::not_applicable(r, "mu_k or mu_{k-1} undefined (empty cochain space)");
    r.ingredients["mu_k"] = *mk;
    r.ingredients["mu_k_minus_1"] = *mk1;
    r.lhs = k * *mk;
    r.rhs = (k + 1) * *mk1 - n - penalty;
    detail::finish(r);
    return r;
}

namespace detail {

inline void fire(VanishingCertificate& c, const SimplicialComplex& target, std::optional<double> budget)
{
    c.condition_holds = c.lambda2 - c.threshold > kStrictMargin;
    c.implied_betti_zero = c.condition_holds;
    if (c.condition_holds) c.exact_betti = betti_reduced_exact(target, c.k, budget);
}

} // namespace detail

/// lambda_2(G_X) > kn/(k+1) + (k+2)/(k+1) S_k(X, X') implies H~^k(X') = 0, for X a
/// clique complex and X' a subcomplex with the same 1-skeleton.
inline VanishingCertificate vanishing_certificate_subcomplex(const SimplicialComplex& x, const SimplicialComplex& sub,
                                                             int k, std::optional<double> budget = std::nullopt)
{
    detail::require_k_at_least_one(k);
    if (!matches_clique_complex(x, k + 1)) throw std::invalid_argument("X must be a clique complex (through dimension k+1)");
    const std::size_t s = s_k(x, sub, k);
    if (sub.count(0) != x.count(0) || sub.count(1) != x.count(1))
        throw std::invalid_argument("X' must have the same 1-skeleton as X");
    if (x.empty()) throw std::invalid_argument("certificate needs a nonempty complex");
    VanishingCertificate c{.name = "subcomplex", .k = k, .flags = detail::complex_flags(sub)};
    const double n = static_cast<double>(x.count(0));
    c.lambda2 = *mu(x, 0);
    c.threshold = k * n / (k + 1) + static_cast<double>(k + 2) / (k + 1) * static_cast<double>(s);
    c.ingredients = {{"n", n}, {"S_k", static_cast<double>(s)}, {"lambda2", c.lambda2}};
    detail::fire(c, sub, budget);
    return c;
}

/// lambda_2(G_X) > kn/(k+1) + (k+1) D_k(X, k+1) implies H~^k(X) = 0, when the
/// k-skeleton of X is the k-skeleton of the clique complex of G_X.
inline VanishingCertificate vanishing_certificate_general(const SimplicialComplex& x, int k,
                                                          std::optional<double> budget = std::nullopt)
{
    detail::require_k_at_least_one(k);
    if (x.empty()) throw std::invalid_argument("certificate needs a nonempty complex");
    if (!matches_clique_complex(x, k))
        throw std::invalid_argument("k-skeleton of X differs from that of the clique complex of G_X");
    VanishingCertificate c{.name = "general", .k = k, .flags = detail::complex_flags(x)};
    const double n = static_cast<double>(x.count(0));
    const auto d = static_cast<double>(d_k(x, k, k + 1));
    c.lambda2 = *mu(x, 0);
    c.threshold = k * n / (k + 1) + (k + 1) * d;
    c.ingredients = {{"n", n}, {"D_k_top", d}, {"lambda2", c.lambda2}};
    detail::fire(c, x, budget);
    return c;
}

} // namespace scx
