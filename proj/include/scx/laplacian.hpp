#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "scx/coboundary.hpp"
#include "scx/complex.hpp"
#include "scx/eigen_sym.hpp"
#include "scx/graph.hpp"

namespace scx {

/// Unnormalized graph Laplacian L(G) = D - A.
inline Eigen::MatrixXd graph_laplacian(const Graph& g)
{
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (Vertex v = 0; v < g.order(); ++v) {
        l(v, v) = static_cast<double>(g.degree(v));
        for (Vertex w : g.neighbors(v)) l(v, w) = -1.0;
    }
    return l;
}

/// Reduced Laplacian Delta_k = D_{k-1} D_{k-1}^T + D_k^T D_k on C^k(X), where
/// D_j = coboundary_matrix(X, j). At k = 0 this is the all-ones matrix plus L(G_X).
/// An empty X(k) gives the 0x0 matrix.
inline Eigen::MatrixXd laplacian(const SimplicialComplex& x, int k)
{
    if (k < 0) throw std::invalid_argument("laplacian dimension must be >= 0");
    const auto dim = static_cast<Eigen::Index>(x.count(k));
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(dim, dim);
    if (dim == 0) return l;

    // up part: each (k+1)-face couples its k-faces
    const auto up = coboundary_matrix(x, k);
    for (std::size_t r = 0; r < up.rows(); ++r) {
        const auto row = up.row(r);
        for (const auto& a : row)
            for (const auto& b : row) l(a.col, b.col) += a.sign * b.sign;
    }

    // down part: k-faces sharing a (k-1)-face, grouped by that face
    const auto down = coboundary_matrix(x, k - 1);
    std::vector<std::vector<std::pair<Eigen::Index, int>>> by_col(down.cols());
    for (std::size_t r = 0; r < down.rows(); ++r)
        for (const auto& e : down.row(r)) by_col[e.col].emplace_back(static_cast<Eigen::Index>(r), e.sign);
    for (const auto& group : by_col)
        for (const auto& [i, si] : group)
            for (const auto& [j, sj] : group) l(i, j) += si * sj;
    return l;
}

/// Eigen-data of Delta_k(X).
struct SpectralSummary {
    int k = 0;
    std::vector<double> eigenvalues;   // ascending
    std::optional<double> mu;          // absent when X(k) is empty
    std::size_t zero_count = 0;
    double tolerance = 0.0;
};

/// Default zero threshold: 1e-8 * max(1, lambda_max).
inline double default_zero_tolerance(const std::vector<double>& ascending)
{
    const double top = ascending.empty() ? 0.0 : ascending.back();
    return 1e-8 * std::max(1.0, top);
}

inline SpectralSummary summarize_spectrum(int k, std::vector<double> eig, std::optional<double> tol = std::nullopt)
{
    SpectralSummary s;
    s.k = k;
    s.tolerance = tol.value_or(default_zero_tolerance(eig));
    if (s.tolerance <= 0) throw std::invalid_argument("zero tolerance must be positive");
    s.zero_count = static_cast<std::size_t>(
        std::count_if(eig.begin(), eig.end(), [&](double e) { return e < s.tolerance; }));
    if (!eig.empty()) s.mu = eig.front();
    s.eigenvalues = std::move(eig);
    return s;
}

inline SpectralSummary spectrum(const SimplicialComplex& x, int k, std::optional<double> tol = std::nullopt,
                                const JacobiOptions& opt = {})
{
    return summarize_spectrum(k, eigenvalues_sym(laplacian(x, k), opt), tol);
}

/// mu_k(X), the minimal eigenvalue of Delta_k; absent when X(k) is empty.
inline std::optional<double> mu(const SimplicialComplex& x, int k, const JacobiOptions& opt = {})
{
    return spectrum(x, k, std::nullopt, opt).mu;
}

/// dim ker Delta_k, i.e. the reduced Betti number by Hodge theory.
inline std::size_t hodge_kernel_dim(const SimplicialComplex& x, int k, std::optional<double> tol = std::nullopt)
{
    return spectrum(x, k, tol).zero_count;
}

/// lambda_2(L(G)).
inline double spectral_gap(const Graph& g, const JacobiOptions& opt = {})
{
    if (g.order() < 2) throw std::invalid_argument("spectral gap needs at least 2 vertices");
    return eigenvalues_sym(graph_laplacian(g), opt)[1];
}

} // namespace scx
