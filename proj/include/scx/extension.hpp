#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "scx/graph.hpp"

namespace scx {

namespace detail {

// Kuhn's augmenting-path matching from left positions to right vertices.
class AugmentingMatcher {
public:
    AugmentingMatcher(const std::vector<std::vector<Vertex>>& cand, std::size_t right_size)
        : cand_(cand), owner_(right_size, kFree)
    {
    }

    std::size_t solve()
    {
        std::size_t matched = 0;
        for (std::size_t i = 0; i < cand_.size(); ++i) {
            visited_.assign(owner_.size(), 0);
            if (augment(i)) ++matched;
            else return matched; // one unmatched position already rules out a perfect matching
        }
        return matched;
    }

private:
    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

    bool augment(std::size_t i)
    {
        for (Vertex v : cand_[i]) {
            if (visited_[v]) continue;
            visited_[v] = 1;
            if (owner_[v] == kFree || augment(owner_[v])) {
                owner_[v] = i;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<Vertex>>& cand_;
    std::vector<std::size_t> owner_;
    std::vector<char> visited_;
};

} // namespace detail

/// Whether the clique G[A] extends to an X_{A,B} subgraph: distinct v_1..v_r outside
/// A with v_i adjacent to every u_j, j != i. Edges u_i ~ v_i are allowed.
/// Throws std::invalid_argument unless G[A] is a clique.
inline bool is_xuv_extendable(const Graph& g, std::span<const Vertex> a)
{
    if (!g.is_clique(a)) throw std::invalid_argument("G[A] is not a clique");
    for (Vertex u : a)
        if (u >= g.order()) throw std::invalid_argument("vertex out of range");
    const std::size_t r = a.size();
    if (r == 0) return true;

    VertexSet outside(g.order());
    outside.set();
    for (Vertex u : a) outside.reset(u);

    std::vector<std::vector<Vertex>> cand(r);
    for (std::size_t i = 0; i < r; ++i) {
        VertexSet c = outside;
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) c &= g.neighbor_set(a[j]);
        for (auto v = c.find_first(); v != VertexSet::npos; v = c.find_next(v)) cand[i].push_back(static_cast<Vertex>(v));
        if (cand[i].empty()) return false;
    }
    return detail::AugmentingMatcher(cand, g.order()).solve() == r;
}

struct UnextendableCliqueResult {
    bool found = false;
    std::optional<std::vector<Vertex>> witness;
    /// Number of qualifying r-sets seen before stopping (a lower bound on Lambda_r).
    std::size_t lambda_r_lower = 0;
    /// r-cliques examined.
    std::size_t examined = 0;
    bool budget_exhausted = false;
};

/// Scans r-cliques in lexicographic order for one that is maximal (no common
/// neighbor) and not X_{U,V}-extendable. Stops at the first witness unless
/// `count_all`; stops after `max_cliques` cliques either way.
inline UnextendableCliqueResult find_unextendable_clique(const Graph& g, std::size_t r, bool count_all = false,
                                                         std::size_t max_cliques = 10'000'000)
{
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    UnextendableCliqueResult res;
    std::vector<Vertex> clique;
    bool stop = false;

    auto visit = [&](auto&& self, const VertexSet& cand) -> void {
        if (clique.size() == r) {
            if (res.examined == max_cliques) {
                res.budget_exhausted = true;
                stop = true;
                return;
            }
            ++res.examined;
            if (g.common_neighbors(clique).none() && !is_xuv_extendable(g, clique)) {
                ++res.lambda_r_lower;
                if (!res.found) {
                    res.found = true;
                    res.witness = clique;
                }
                if (!count_all) stop = true;
            }
            return;
        }
        for (auto w = cand.find_first(); w != VertexSet::npos && !stop; w = cand.find_next(w)) {
            VertexSet next = cand & g.neighbor_set(static_cast<Vertex>(w));
            // keep only vertices above w so each clique is produced once, ascending
            for (auto x = next.find_first(); x != VertexSet::npos && x <= w; x = next.find_next(x)) next.reset(x);
            clique.push_back(static_cast<Vertex>(w));
            self(self, next);
            clique.pop_back();
        }
    };
    VertexSet all(g.order());
    all.set();
    visit(visit, all);
    return res;
}

} // namespace scx
