#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "scx/complex.hpp"

namespace scx {

/// Real k-cochain indexed by the canonical order of X(k). For k = -1 it holds a
/// single value.
struct Cochain {
    int k = 0;
    Eigen::VectorXd values;

    double norm_sq() const { return values.squaredNorm(); }
};

inline std::size_t cochain_dim(const SimplicialComplex& x, int k)
{
    if (k < -1) throw std::invalid_argument("cochain dimension must be >= -1");
    return k == -1 ? 1 : x.count(k);
}

inline Cochain zero_cochain(const SimplicialComplex& x, int k)
{
    return {k, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cochain_dim(x, k)))};
}

/// Matrix of delta_k in canonical bases: one row per (k+1)-face, one column per
/// k-face, entries in {-1, 0, +1} stored row-compressed.
class SignedIncidenceMatrix {
public:
    struct Entry {
        std::uint32_t col;
        std::int8_t sign;
    };

    SignedIncidenceMatrix(int k, std::size_t rows, std::size_t cols) : k_(k), rows_(rows), cols_(cols)
    {
        row_ptr_.reserve(rows + 1);
        row_ptr_.push_back(0);
    }

    int k() const { return k_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const { return entries_.size(); }

    std::span<const Entry> row(std::size_t i) const
    {
        return std::span<const Entry>(entries_).subspan(row_ptr_[i], row_ptr_[i + 1] - row_ptr_[i]);
    }

    Eigen::MatrixXd to_dense() const
    {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (const Entry& e : row(i)) m(static_cast<Eigen::Index>(i), e.col) = e.sign;
        return m;
    }

    Eigen::VectorXd apply(const Eigen::VectorXd& x) const
    {
        check_size(x, cols_);
        Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (const Entry& e : row(i)) y[static_cast<Eigen::Index>(i)] += e.sign * x[e.col];
        return y;
    }

    Eigen::VectorXd apply_transpose(const Eigen::VectorXd& y) const
    {
        check_size(y, rows_);
        Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (const Entry& e : row(i)) x[e.col] += e.sign * y[static_cast<Eigen::Index>(i)];
        return x;
    }

    void push(std::uint32_t col, int sign) { entries_.push_back({col, static_cast<std::int8_t>(sign)}); }
    void end_row() { row_ptr_.push_back(entries_.size()); }

private:
    static void check_size(const Eigen::VectorXd& v, std::size_t n)
    {
        if (static_cast<std::size_t>(v.size()) != n)
            throw std::invalid_argument("vector length " + std::to_string(v.size()) + " does not match "
                                        + std::to_string(n));
    }

    int k_;
    std::size_t rows_, cols_;
    std::vector<std::size_t> row_ptr_;
    std::vector<Entry> entries_;
};

/// delta_k(X). Row tau carries (-1)^j at the column of its j-th face; for k = -1
/// the matrix is the all-ones column over X(0).
inline SignedIncidenceMatrix coboundary_matrix(const SimplicialComplex& x, int k)
{
    if (k < -1) throw std::invalid_argument("coboundary dimension must be >= -1");
    if (k == -1) {
        SignedIncidenceMatrix m(-1, x.count(0), 1);
        for (std::size_t i = 0; i < x.count(0); ++i) {
            m.push(0, 1);
            m.end_row();
        }
        return m;
    }
    SignedIncidenceMatrix m(k, x.count(k + 1), x.count(k));
    for (const Simplex& t : x.faces(k + 1)) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            auto idx = x.index_of(t.face(j));
            if (!idx) throw std::logic_error("complex is not downward closed");
            m.push(static_cast<std::uint32_t>(*idx), (j % 2 == 0) ? 1 : -1);
        }
        m.end_row();
    }
    return m;
}

namespace detail {

inline void check_cochain(const SimplicialComplex& x, const Cochain& phi)
{
    if (static_cast<std::size_t>(phi.values.size()) != cochain_dim(x, phi.k))
        throw std::invalid_argument("cochain length does not match |X(" + std::to_string(phi.k) + ")|");
}

} // namespace detail

/// delta*_{k-1} phi via the link sum: (delta* phi)(tau) = sum over v in lk(tau) of
/// phi([v, tau]), the oriented union rewritten canonically with its sign.
inline Cochain apply_adjoint(const SimplicialComplex& x, const Cochain& phi)
{
    if (phi.k < 0) throw std::invalid_argument("adjoint needs a cochain of dimension >= 0");
    detail::check_cochain(x, phi);
    Cochain out = zero_cochain(x, phi.k - 1);
    if (phi.k == 0) {
        out.values[0] = phi.values.sum();
        return out;
    }
    const auto verts = x.vertices();
    const auto tau_faces = x.faces(phi.k - 1);
    for (std::size_t i = 0; i < tau_faces.size(); ++i) {
        const Simplex& tau = tau_faces[i];
        double acc = 0.0;
        for (Vertex v : verts) {
            if (tau.contains(v)) continue;
            auto [s, sign] = tau.insert_vertex(v);
            if (auto idx = x.index_of(s)) acc += sign * phi.values[static_cast<Eigen::Index>(*idx)];
        }
        out.values[static_cast<Eigen::Index>(i)] = acc;
    }
    return out;
}

/// phi_u(tau) = phi([u, tau]) when u is in lk(tau), else 0.
inline Cochain restrict_cochain(const SimplicialComplex& x, const Cochain& phi, Vertex u)
{
    if (phi.k < 0) throw std::invalid_argument("restriction needs a cochain of dimension >= 0");
    detail::check_cochain(x, phi);
    if (!x.contains(Simplex{u})) throw std::invalid_argument("vertex " + std::to_string(u) + " is not in the complex");
    Cochain out = zero_cochain(x, phi.k - 1);
    if (phi.k == 0) {
        out.values[0] = phi.values[static_cast<Eigen::Index>(*x.index_of(Simplex{u}))];
        return out;
    }
    const auto tau_faces = x.faces(phi.k - 1);
    for (std::size_t i = 0; i < tau_faces.size(); ++i) {
        const Simplex& tau = tau_faces[i];
        if (tau.contains(u)) continue;
        auto [s, sign] = tau.insert_vertex(u);
        if (auto idx = x.index_of(s)) out.values[static_cast<Eigen::Index>(i)] = sign * phi.values[static_cast<Eigen::Index>(*idx)];
    }
    return out;
}

inline Cochain apply_coboundary(const SimplicialComplex& x, const Cochain& phi)
{
    detail::check_cochain(x, phi);
    return {phi.k + 1, coboundary_matrix(x, phi.k).apply(phi.values)};
}

} // namespace scx
