#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "scx/coboundary.hpp"
#include "scx/complex.hpp"
#include "scx/errors.hpp"

namespace scx {

/// Rank over Q of a signed incidence matrix by sparse row reduction with exact
/// rational arithmetic.
///
/// Each row is reduced against stored pivot rows keyed by their largest column
/// until it vanishes or exposes a new pivot column. Pivot rows are normalised to
/// a leading coefficient of 1. With canonical lexicographic face order the
/// cofaces of the lowest vertices are processed first and claim pivots on faces
/// avoiding that vertex, which keeps reduced rows short on dense complexes.
inline std::size_t rank_exact(const SignedIncidenceMatrix& m)
{
    using Row = std::vector<std::pair<std::uint32_t, mpq_class>>;
    const std::size_t limit = std::min(m.rows(), m.cols());
    std::vector<std::optional<Row>> pivot(m.cols());
    std::size_t rank = 0;
    Row work, scratch;

    for (std::size_t r = 0; r < m.rows() && rank < limit; ++r) {
        work.clear();
        for (const auto& e : m.row(r)) work.emplace_back(e.col, mpq_class(e.sign));
        std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

        while (!work.empty()) {
            const std::uint32_t lead = work.back().first;
            if (!pivot[lead]) {
                const mpq_class inv = 1 / work.back().second;
                for (auto& [c, v] : work) v *= inv;
                pivot[lead] = std::move(work);
                work = Row{};
                ++rank;
                break;
            }
            // work -= factor * pivot, merging two column-sorted rows
            const Row& p = *pivot[lead];
            const mpq_class factor = work.back().second;
            scratch.clear();
            auto a = work.begin();
            auto b = p.begin();
            while (a != work.end() || b != p.end()) {
                if (b == p.end() || (a != work.end() && a->first < b->first)) {
                    scratch.push_back(std::move(*a++));
                } else if (a == work.end() || b->first < a->first) {
                    scratch.emplace_back(b->first, -factor * b->second);
                    ++b;
                } else {
                    mpq_class v = a->second - factor * b->second;
                    if (sgn(v) != 0) scratch.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            std::swap(work, scratch);
        }
    }
    return rank;
}

/// Work estimate used for exact-Betti budgeting: |X(k)| * |X(k+1)|.
inline double betti_work(const SimplicialComplex& x, int k)
{
    return static_cast<double>(cochain_dim(x, k)) * static_cast<double>(x.count(k + 1));
}

/// Reduced Betti number dim H~^k(X; R) = (|X(k)| - rank D_k) - rank D_{k-1}, with
/// the augmentation D_{-1} included; exact. Accepts k = -1 (1 for the empty
/// complex, else 0). `budget` caps betti_work; exceeding it throws BudgetExceeded.
inline std::size_t betti_reduced_exact(const SimplicialComplex& x, int k,
                                       std::optional<double> budget = std::nullopt)
{
    if (k < -1) throw std::invalid_argument("Betti dimension must be >= -1");
    if (budget && betti_work(x, k) > *budget)
        throw BudgetExceeded("exact Betti work " + std::to_string(betti_work(x, k)) + " exceeds budget "
                             + std::to_string(*budget));
    const std::size_t dim = cochain_dim(x, k);
    if (dim == 0) return 0;
    const std::size_t up = rank_exact(coboundary_matrix(x, k));
    const std::size_t down = k >= 0 ? rank_exact(coboundary_matrix(x, k - 1)) : 0;
    return dim - up - down;
}

} // namespace scx
