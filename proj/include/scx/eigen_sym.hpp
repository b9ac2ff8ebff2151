#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "scx/errors.hpp"

namespace scx {

struct JacobiOptions {
    /// Stop once ||off(A)||_F < relative_tolerance * ||M||_F.
    double relative_tolerance = 1e-12;
    /// Largest accepted dimension.
    std::size_t max_dim = 2500;
    int max_sweeps = 100;
    /// Entry-wise asymmetry accepted on input.
    double symmetry_tolerance = 1e-12;
};

/// Full spectrum of a real symmetric matrix by cyclic Jacobi rotations, ascending.
///
/// Throws std::invalid_argument for non-square or asymmetric input and
/// BudgetExceeded above `max_dim`.
inline std::vector<double> eigenvalues_sym(const Eigen::MatrixXd& m, const JacobiOptions& opt = {})
{
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues_sym: matrix is not square");
    const auto n = m.rows();
    if (static_cast<std::size_t>(n) > opt.max_dim)
        throw BudgetExceeded("eigenvalues_sym: dimension " + std::to_string(n) + " exceeds cap "
                             + std::to_string(opt.max_dim));
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = j + 1; i < n; ++i)
            if (std::abs(m(i, j) - m(j, i)) > opt.symmetry_tolerance)
                throw std::invalid_argument("eigenvalues_sym: matrix is not symmetric");

    Eigen::MatrixXd a = 0.5 * (m + m.transpose());
    const double target = opt.relative_tolerance * a.norm();

    auto off_norm = [&] {
        double s = 0.0;
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index i = 0; i < n; ++i)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < opt.max_sweeps && off_norm() > target; ++sweep) {
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = c * arp - s * arq;
                    a(r, q) = s * arp + c * arq;
                    a(p, r) = a(r, p);
                    a(q, r) = a(r, q);
                }
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace scx
