#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "scx/graph.hpp"
#include "scx/simplex.hpp"

namespace scx {

/// Finite abstract simplicial complex over the ambient vertex range 0..n-1.
///
/// Faces are bucketed by dimension, each bucket sorted lexicographically, and
/// every bucket carries a face -> position index. Immutable once built; every
/// factory returns a downward-closed complex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the given faces.
    static SimplicialComplex from_faces(std::size_t n, std::span<const Simplex> generators)
    {
        std::vector<std::unordered_map<Simplex, char, SimplexHash>> seen;
        std::vector<std::vector<Simplex>> buckets;
        auto add = [&](const Simplex& s) {
            const auto d = static_cast<std::size_t>(s.dim());
            if (seen.size() <= d) {
                seen.resize(d + 1);
                buckets.resize(d + 1);
            }
            if (seen[d].emplace(s, 1).second) buckets[d].push_back(s);
        };
        for (const Simplex& g : generators) {
            if (g.empty()) continue;
            if (g.vertices().back() >= n)
                throw std::invalid_argument("face vertex " + std::to_string(g.vertices().back())
                                            + " out of range for n = " + std::to_string(n));
            if (g.size() > 30) throw std::invalid_argument("face too large to close (more than 30 vertices)");
            const std::uint32_t full = (1u << g.size()) - 1;
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                std::vector<Vertex> sub;
                for (std::size_t i = 0; i < g.size(); ++i)
                    if (mask & (1u << i)) sub.push_back(g[i]);
                add(Simplex(std::move(sub)));
            }
        }
        return from_closed(n, std::move(buckets));
    }

    static SimplicialComplex from_faces(std::size_t n, std::initializer_list<Simplex> generators)
    {
        return from_faces(n, std::span<const Simplex>(generators.begin(), generators.size()));
    }

    /// Trusted constructor: `buckets[d]` must already be the complete set of d-faces
    /// of a downward-closed family (order irrelevant).
    static SimplicialComplex from_closed(std::size_t n, std::vector<std::vector<Simplex>> buckets)
    {
        SimplicialComplex x;
        x.n_ = n;
        while (!buckets.empty() && buckets.back().empty()) buckets.pop_back();
        x.faces_ = std::move(buckets);
        x.index_.resize(x.faces_.size());
        for (std::size_t d = 0; d < x.faces_.size(); ++d) {
            auto& b = x.faces_[d];
            if (!std::is_sorted(b.begin(), b.end())) std::sort(b.begin(), b.end());
            x.index_[d].reserve(b.size());
            for (std::size_t i = 0; i < b.size(); ++i) x.index_[d].emplace(b[i], i);
        }
        return x;
    }

    std::size_t ambient_order() const { return n_; }

    /// Highest dimension with at least one face; -1 for the empty complex.
    int top_dim() const { return static_cast<int>(faces_.size()) - 1; }

    bool empty() const { return faces_.empty(); }

    std::size_t count(int d) const
    {
        if (d < 0 || d > top_dim()) return 0;
        return faces_[static_cast<std::size_t>(d)].size();
    }

    std::span<const Simplex> faces(int d) const
    {
        if (d < 0 || d > top_dim()) return {};
        return faces_[static_cast<std::size_t>(d)];
    }

    std::vector<std::size_t> f_vector() const
    {
        std::vector<std::size_t> f;
        for (const auto& b : faces_) f.push_back(b.size());
        return f;
    }

    std::size_t total_faces() const
    {
        std::size_t t = 0;
        for (const auto& b : faces_) t += b.size();
        return t;
    }

    std::optional<std::size_t> index_of(const Simplex& s) const
    {
        const int d = s.dim();
        if (d < 0 || d > top_dim()) return std::nullopt;
        const auto& m = index_[static_cast<std::size_t>(d)];
        auto it = m.find(s);
        if (it == m.end()) return std::nullopt;
        return it->second;
    }

    /// The empty simplex counts as a face of every nonempty complex.
    bool contains(const Simplex& s) const
    {
        if (s.empty()) return !empty();
        return index_of(s).has_value();
    }

    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> vs;
        for (const Simplex& s : faces(0)) vs.push_back(s[0]);
        return vs;
    }

    /// G_X on the vertex set of X, relabelled so that graph vertex i is the i-th
    /// smallest vertex of X.
    Graph one_skeleton() const
    {
        const auto vs = vertices();
        std::vector<Edge> e;
        for (const Simplex& s : faces(1)) {
            auto a = std::lower_bound(vs.begin(), vs.end(), s[0]) - vs.begin();
            auto b = std::lower_bound(vs.begin(), vs.end(), s[1]) - vs.begin();
            e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
        return Graph::from_edges(vs.size(), e);
    }

    /// G_X on the ambient vertex range 0..n-1 (vertices outside X are isolated).
    Graph one_skeleton_ambient() const
    {
        std::vector<Edge> e;
        for (const Simplex& s : faces(1)) e.emplace_back(s[0], s[1]);
        return Graph::from_edges(n_, e);
    }

    bool is_connected() const { return !empty() && one_skeleton().is_connected(); }

    /// Number of (dim+1)-faces containing `s`.
    std::size_t degree(const Simplex& s) const
    {
        require_face(s);
        std::size_t deg = 0;
        for (Vertex v : vertices())
            if (!s.contains(v) && contains(s.insert_vertex(v).first)) ++deg;
        return deg;
    }

    /// lk(s) = { eta : eta disjoint from s, s u eta in X }, over the same ambient range.
    SimplicialComplex link(const Simplex& s) const
    {
        require_face(s);
        std::vector<std::vector<Simplex>> buckets;
        for (int d = s.dim() + 1; d <= top_dim(); ++d) {
            for (const Simplex& t : faces(d)) {
                if (!s.is_subset_of(t)) continue;
                std::vector<Vertex> rest;
                std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
                const auto ld = rest.size() - 1;
                if (buckets.size() <= ld) buckets.resize(ld + 1);
                buckets[ld].emplace_back(std::move(rest));
            }
        }
        return from_closed(n_, std::move(buckets));
    }

    SimplicialComplex skeleton(int k) const
    {
        if (k < 0) throw std::invalid_argument("skeleton dimension must be >= 0");
        std::vector<std::vector<Simplex>> buckets;
        for (int d = 0; d <= std::min(k, top_dim()); ++d)
            buckets.emplace_back(faces(d).begin(), faces(d).end());
        return from_closed(n_, std::move(buckets));
    }

    /// True iff every (k+1)-subset of V(X) is a face.
    bool is_full_skeleton(int k) const
    {
        if (k < 0) throw std::invalid_argument("skeleton dimension must be >= 0");
        return count(k) == binomial(count(0), static_cast<std::size_t>(k) + 1);
    }

    bool is_subcomplex_of(const SimplicialComplex& other) const
    {
        for (int d = 0; d <= top_dim(); ++d)
            for (const Simplex& s : faces(d))
                if (!other.contains(s)) return false;
        return true;
    }

    /// Exhaustive face-of-face check; used by tests and for untrusted input.
    bool is_downward_closed() const
    {
        for (int d = 1; d <= top_dim(); ++d)
            for (const Simplex& s : faces(d))
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (!contains(s.face(j))) return false;
        return true;
    }

    void require_face(const Simplex& s) const
    {
        if (!s.empty() && !contains(s)) throw std::invalid_argument("simplex is not a face of the complex");
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.faces_ == b.faces_; }

    static std::size_t binomial(std::size_t n, std::size_t k)
    {
        if (k > n) return 0;
        k = std::min(k, n - k);
        std::size_t r = 1;
        for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
};

namespace detail {

// Depth-first enumeration of ascending vertex sequences. `extend(prefix, state, w)`
// returns the child state or nullopt when prefix+w is rejected.
template <class State, class Extend>
void enumerate_ascending(std::vector<Vertex>& prefix, const State& state, std::size_t n, int max_dim,
                         std::vector<std::vector<Simplex>>& buckets, Extend&& extend)
{
    const auto d = prefix.size() - 1;
    if (buckets.size() <= d) buckets.resize(d + 1);
    buckets[d].emplace_back(prefix);
    if (static_cast<int>(d) >= max_dim) return;
    for (Vertex w = prefix.back() + 1; w < n; ++w) {
        std::optional<State> next = extend(state, w);
        if (!next) continue;
        prefix.push_back(w);
        enumerate_ascending(prefix, *next, n, max_dim, buckets, extend);
        prefix.pop_back();
    }
}

} // namespace detail

/// Clique complex of `g`, keeping faces of dimension <= max_dim.
inline SimplicialComplex clique_complex(const Graph& g, int max_dim)
{
    if (max_dim < 1) throw std::invalid_argument("clique complex needs max_dim >= 1");
    const std::size_t n = g.order();
    std::vector<std::vector<Simplex>> buckets;
    std::vector<Vertex> prefix;
    for (Vertex v = 0; v < n; ++v) {
        prefix.assign(1, v);
        detail::enumerate_ascending(prefix, g.neighbor_set(v), n, max_dim, buckets,
                                    [&](const VertexSet& cand, Vertex w) -> std::optional<VertexSet> {
                                        if (!cand.test(w)) return std::nullopt;
                                        return cand & g.neighbor_set(w);
                                    });
    }
    return SimplicialComplex::from_closed(n, std::move(buckets));
}

/// Neighborhood complex: faces are the vertex sets with a common neighbor.
/// Isolated vertices of `g` are not vertices of the result. An edgeless graph
/// yields the empty complex.
inline SimplicialComplex neighborhood_complex(const Graph& g, std::optional<int> max_dim = std::nullopt)
{
    const int cap = max_dim.value_or(std::numeric_limits<int>::max());
    if (cap < 0) throw std::invalid_argument("neighborhood complex needs max_dim >= 0");
    const std::size_t n = g.order();
    std::vector<std::vector<Simplex>> buckets;
    std::vector<Vertex> prefix;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        prefix.assign(1, v);
        detail::enumerate_ascending(prefix, g.neighbor_set(v), n, cap, buckets,
                                    [&](const VertexSet& common, Vertex w) -> std::optional<VertexSet> {
                                        VertexSet c = common & g.neighbor_set(w);
                                        if (c.none()) return std::nullopt;
                                        return c;
                                    });
    }
    return SimplicialComplex::from_closed(n, std::move(buckets));
}

} // namespace scx
