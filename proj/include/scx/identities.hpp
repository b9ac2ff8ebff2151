#pragma once

// Combinatorial (link-sum) forms of cochain norms. Each function here is the
// right-hand side of an exact identity whose left-hand side is computed from
// coboundary matrices; tests check the two agree.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "scx/coboundary.hpp"
#include "scx/complex.hpp"

namespace scx::identities {

namespace detail {

// X(d) as a list, with X(-1) = { empty simplex }.
inline std::vector<Simplex> faces_or_empty(const SimplicialComplex& x, int d)
{
    if (d == -1) return {Simplex{}};
    auto f = x.faces(d);
    return {f.begin(), f.end()};
}

// phi evaluated on the oriented simplex [prefix..., eta...]; 0 off the complex.
inline double eval_oriented(const SimplicialComplex& x, const Cochain& phi, std::initializer_list<Vertex> prefix,
                            const Simplex& eta)
{
    auto [s, sign] = eta.prepend(std::span<const Vertex>(prefix.begin(), prefix.size()));
    auto idx = x.index_of(s);
    return idx ? sign * phi.values[static_cast<Eigen::Index>(*idx)] : 0.0;
}

// Vertices of lk(eta).
inline std::vector<Vertex> link_vertices(const SimplicialComplex& x, const Simplex& eta)
{
    std::vector<Vertex> out;
    for (Vertex v : x.vertices())
        if (!eta.contains(v) && x.contains(eta.insert_vertex(v).first)) out.push_back(v);
    return out;
}

} // namespace detail

/// sum_sigma deg(sigma) phi(sigma)^2 - 2 sum_{eta in X(k-1)} sum_{vw in lk(eta)} phi(v eta) phi(w eta)
/// which equals ||delta_k phi||^2.
inline double coboundary_norm_sq_by_links(const SimplicialComplex& x, const Cochain& phi)
{
    const int k = phi.k;
    if (k < 0) throw std::invalid_argument("needs k >= 0");
    double diag = 0.0;
    const auto faces = x.faces(k);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const double v = phi.values[static_cast<Eigen::Index>(i)];
        diag += static_cast<double>(x.degree(faces[i])) * v * v;
    }
    double cross = 0.0;
    for (const Simplex& eta : detail::faces_or_empty(x, k - 1)) {
        const auto lk = detail::link_vertices(x, eta);
        for (std::size_t a = 0; a < lk.size(); ++a)
            for (std::size_t b = a + 1; b < lk.size(); ++b) {
                const Vertex v = lk[a], w = lk[b];
                if (!x.contains(eta.prepend(std::vector<Vertex>{v, w}).first)) continue;
                cross += detail::eval_oriented(x, phi, {v}, eta) * detail::eval_oriented(x, phi, {w}, eta);
            }
    }
    return diag - 2.0 * cross;
}

/// sum_sigma (sum_{tau in sigma(k-1)} deg tau) phi(sigma)^2
///   - 2 sum_{eta in X(k-2)} sum_{vw in lk(eta)} sum_{u in lk(v eta) & lk(w eta)} phi(vu eta) phi(wu eta)
/// which equals sum_u ||delta_{k-1} phi_u||^2. Needs k >= 1.
inline double restricted_coboundary_sum_by_links(const SimplicialComplex& x, const Cochain& phi)
{
    const int k = phi.k;
    if (k < 1) throw std::invalid_argument("needs k >= 1");
    double diag = 0.0;
    const auto faces = x.faces(k);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        double degsum = 0.0;
        for (std::size_t j = 0; j < faces[i].size(); ++j) degsum += static_cast<double>(x.degree(faces[i].face(j)));
        const double v = phi.values[static_cast<Eigen::Index>(i)];
        diag += degsum * v * v;
    }
    double cross = 0.0;
    for (const Simplex& eta : detail::faces_or_empty(x, k - 2)) {
        const auto lk = detail::link_vertices(x, eta);
        for (std::size_t a = 0; a < lk.size(); ++a)
            for (std::size_t b = a + 1; b < lk.size(); ++b) {
                const Vertex v = lk[a], w = lk[b];
                if (!x.contains(eta.prepend(std::vector<Vertex>{v, w}).first)) continue;
                const Simplex v_eta = eta.insert_vertex(v).first;
                const Simplex w_eta = eta.insert_vertex(w).first;
                for (Vertex u : x.vertices()) {
                    if (u == v || u == w || eta.contains(u)) continue;
                    if (!x.contains(v_eta.insert_vertex(u).first) || !x.contains(w_eta.insert_vertex(u).first))
                        continue;
                    cross += detail::eval_oriented(x, phi, {v, u}, eta) * detail::eval_oriented(x, phi, {w, u}, eta);
                }
            }
    }
    return diag - 2.0 * cross;
}

/// sum over vertices u of ||delta_{k-1} phi_u||^2, by matrices.
inline double restricted_coboundary_sum(const SimplicialComplex& x, const Cochain& phi)
{
    double total = 0.0;
    for (Vertex u : x.vertices()) total += apply_coboundary(x, restrict_cochain(x, phi, u)).norm_sq();
    return total;
}

/// sum over vertices u of ||delta*_{k-2} phi_u||^2. Needs k >= 1.
inline double restricted_adjoint_sum(const SimplicialComplex& x, const Cochain& phi)
{
    if (phi.k < 1) throw std::invalid_argument("needs k >= 1");
    double total = 0.0;
    for (Vertex u : x.vertices()) total += apply_adjoint(x, restrict_cochain(x, phi, u)).norm_sq();
    return total;
}

/// sum over vertices u of ||phi_u||^2; equals (k+1) ||phi||^2.
inline double restricted_norm_sum(const SimplicialComplex& x, const Cochain& phi)
{
    double total = 0.0;
    for (Vertex u : x.vertices()) total += restrict_cochain(x, phi, u).norm_sq();
    return total;
}

} // namespace scx::identities
