#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "scx/complex.hpp"
#include "scx/graph.hpp"

namespace oracle {

using Face = std::vector<std::uint32_t>;
using FaceSet = std::set<Face>;

inline Face bits_to_face(std::uint32_t mask)
{
    Face f;
    for (std::uint32_t v = 0; v < 32; ++v)
        if (mask >> v & 1U) f.push_back(v);
    return f;
}

inline bool adjacent(const std::vector<std::vector<bool>>& a, std::uint32_t u, std::uint32_t v) { return a[u][v]; }

inline std::vector<std::vector<bool>> adjacency(const scx::Graph& g)
{
    std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

// Every vertex subset of size 1..max_dim+1 that is a clique.
inline FaceSet clique_faces(const scx::Graph& g, int max_dim)
{
    const auto a = adjacency(g);
    const std::uint32_t n = static_cast<std::uint32_t>(g.order());
    FaceSet out;
    for (std::uint32_t m = 1; m < (1U << n); ++m) {
        Face f = bits_to_face(m);
        if (static_cast<int>(f.size()) > max_dim + 1) continue;
        bool ok = true;
        for (std::size_t i = 0; i < f.size() && ok; ++i)
            for (std::size_t j = i + 1; j < f.size() && ok; ++j) ok = a[f[i]][f[j]];
        if (ok) out.insert(f);
    }
    return out;
}

// Every nonempty vertex subset with a common neighbor.
inline FaceSet neighborhood_faces(const scx::Graph& g, int max_dim = 64)
{
    const auto a = adjacency(g);
    const std::uint32_t n = static_cast<std::uint32_t>(g.order());
    FaceSet out;
    for (std::uint32_t m = 1; m < (1U << n); ++m) {
        Face f = bits_to_face(m);
        if (static_cast<int>(f.size()) > max_dim + 1) continue;
        for (std::uint32_t w = 0; w < n; ++w) {
            if (std::all_of(f.begin(), f.end(), [&](std::uint32_t v) { return a[v][w]; })) {
                out.insert(f);
                break;
            }
        }
    }
    return out;
}

inline FaceSet faces_of(const scx::SimplicialComplex& x)
{
    FaceSet out;
    for (int d = 0; d <= x.top_dim(); ++d)
        for (const auto& s : x.faces(d)) out.insert(Face(s.begin(), s.end()));
    return out;
}

inline std::vector<Face> of_dim(const FaceSet& fs, int d)
{
    std::vector<Face> out;
    for (const auto& f : fs)
        if (static_cast<int>(f.size()) == d + 1) out.push_back(f);
    return out; // std::set order is lexicographic
}

// Dense coboundary k -> k+1 built from the boundary definition, with X(-1) = {empty}.
inline Eigen::MatrixXd coboundary_dense(const FaceSet& fs, int k)
{
    const auto hi = of_dim(fs, k + 1);
    if (k == -1) return Eigen::MatrixXd::Ones(static_cast<Eigen::Index>(hi.size()), fs.empty() ? 0 : 1);
    const auto lo = of_dim(fs, k);
    std::map<Face, Eigen::Index> col;
    for (std::size_t i = 0; i < lo.size(); ++i) col[lo[i]] = static_cast<Eigen::Index>(i);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(hi.size()), static_cast<Eigen::Index>(lo.size()));
    for (std::size_t r = 0; r < hi.size(); ++r) {
        for (std::size_t j = 0; j < hi[r].size(); ++j) {
            Face f = hi[r];
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
            m(static_cast<Eigen::Index>(r), col.at(f)) = (j % 2 == 0) ? 1.0 : -1.0;
        }
    }
    return m;
}

// Fraction-free Gaussian elimination on an integer matrix.
inline std::size_t bareiss_rank(const Eigen::MatrixXd& md)
{
    using boost::multiprecision::cpp_int;
    const auto rows = static_cast<std::size_t>(md.rows());
    const auto cols = static_cast<std::size_t>(md.cols());
    std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long long>(md(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[i][j] * a[rank][c] - a[i][c] * a[rank][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

inline std::size_t reduced_betti(const FaceSet& fs, int k)
{
    const std::size_t dim_k = k == -1 ? (fs.empty() ? 0 : 1) : of_dim(fs, k).size();
    const std::size_t up = bareiss_rank(coboundary_dense(fs, k));
    const std::size_t down = k == -1 ? 0 : bareiss_rank(coboundary_dense(fs, k - 1));
    return dim_k - up - down;
}

inline std::vector<double> eigen_spectrum(const Eigen::MatrixXd& m)
{
    if (m.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end());
    return v;
}

inline Eigen::MatrixXd laplacian_dense(const FaceSet& fs, int k)
{
    const Eigen::MatrixXd up = coboundary_dense(fs, k);
    const Eigen::MatrixXd down = coboundary_dense(fs, k - 1);
    return down * down.transpose() + up.transpose() * up;
}

// Tries every injective choice of v_1..v_r outside A.
inline bool xuv_exhaustive(const scx::Graph& g, const std::vector<std::uint32_t>& a)
{
    const auto adj = adjacency(g);
    const std::size_t r = a.size();
    std::vector<std::uint32_t> outside;
    for (std::uint32_t v = 0; v < g.order(); ++v)
        if (std::find(a.begin(), a.end(), v) == a.end()) outside.push_back(v);
    std::vector<std::uint32_t> pick;
    std::vector<bool> used(g.order(), false);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == r) return true;
        for (std::uint32_t v : outside) {
            if (used[v]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < r && ok; ++j)
                if (j != i) ok = adj[a[j]][v];
            if (!ok) continue;
            used[v] = true;
            if (self(self, i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

inline scx::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<scx::Edge> e;
    for (scx::Vertex u = 0; u < n; ++u)
        for (scx::Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return scx::Graph::from_edges(n, e);
}

// Removes each face of dimension >= min_dim (and everything above it) with probability q.
inline scx::SimplicialComplex delete_faces(const scx::SimplicialComplex& x, int min_dim, double q, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(q);
    std::vector<scx::Simplex> removed;
    std::vector<scx::Simplex> keep;
    for (int d = 0; d <= x.top_dim(); ++d) {
        for (const auto& s : x.faces(d)) {
            const bool under_removed =
                std::any_of(removed.begin(), removed.end(), [&](const scx::Simplex& r) { return r.is_subset_of(s); });
            if (under_removed) continue;
            if (d >= min_dim && coin(rng)) {
                removed.push_back(s);
                continue;
            }
            keep.push_back(s);
        }
    }
    return scx::SimplicialComplex::from_faces(x.ambient_order(), keep);
}

} // namespace oracle
