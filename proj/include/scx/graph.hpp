#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace scx {

using Vertex = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and one bitset
/// row per vertex for O(n/64) common-neighborhood intersections.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : adj_(n), rows_(n, VertexSet(n)) {}

    /// Builds a graph from unordered pairs; duplicates are merged.
    /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
    static Graph from_edges(std::size_t n, std::span<const Edge> pairs)
    {
        Graph g(n);
        for (auto [u, v] : pairs) {
            if (u >= n || v >= n) {
                throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v)
                                            + ") out of range for n = " + std::to_string(n));
            }
            if (u == v) {
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            }
            g.rows_[u].set(v);
            g.rows_[v].set(u);
        }
        g.rebuild_lists();
        return g;
    }

    static Graph from_edges(std::size_t n, std::initializer_list<Edge> pairs)
    {
        return from_edges(n, std::span<const Edge>(pairs.begin(), pairs.size()));
    }

    static Graph complete(std::size_t n)
    {
        std::vector<Edge> e;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
        return from_edges(n, e);
    }

    static Graph cycle(std::size_t n)
    {
        std::vector<Edge> e;
        for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
        return from_edges(n, e);
    }

    std::size_t order() const { return adj_.size(); }

    std::size_t size() const
    {
        std::size_t twice = 0;
        for (const auto& a : adj_) twice += a.size();
        return twice / 2;
    }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    const VertexSet& neighbor_set(Vertex v) const { return rows_[v]; }

    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Common neighborhood N(A) of a vertex set.
    VertexSet common_neighbors(std::span<const Vertex> a) const
    {
        VertexSet c(order());
        c.set();
        for (Vertex v : a) c &= rows_[v];
        return c;
    }

    bool is_clique(std::span<const Vertex> a) const
    {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                if (a[i] == a[j] || !adjacent(a[i], a[j])) return false;
        return true;
    }

    std::size_t component_count() const
    {
        std::vector<char> seen(order(), 0);
        std::vector<Vertex> stack;
        std::size_t comps = 0;
        for (Vertex s = 0; s < order(); ++s) {
            if (seen[s]) continue;
            ++comps;
            seen[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : adj_[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        return comps;
    }

    bool is_connected() const { return component_count() <= 1; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void rebuild_lists()
    {
        for (std::size_t v = 0; v < rows_.size(); ++v) {
            adj_[v].clear();
            for (auto w = rows_[v].find_first(); w != VertexSet::npos; w = rows_[v].find_next(w))
                adj_[v].push_back(static_cast<Vertex>(w));
        }
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<VertexSet> rows_;
};

} // namespace scx
