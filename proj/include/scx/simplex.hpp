#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scx/graph.hpp"

namespace scx {

/// A simplex stored in canonical (strictly ascending) vertex order.
///
/// The ascending order fixes the orientation class of every simplex. Orientation
/// signs only appear when an oriented union such as [v, tau] is rewritten in
/// canonical form; see `insert_vertex`.
class Simplex {
public:
    Simplex() = default;

    /// Throws std::invalid_argument unless `vs` is strictly ascending.
    explicit Simplex(std::vector<Vertex> vs) : v_(std::move(vs))
    {
        for (std::size_t i = 1; i < v_.size(); ++i)
            if (v_[i - 1] >= v_[i]) throw std::invalid_argument("simplex vertices must be strictly ascending");
    }

    Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

    /// Sorts `vs`; throws on repeated vertices.
    static Simplex canonical(std::vector<Vertex> vs)
    {
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw std::invalid_argument("simplex has a repeated vertex");
        Simplex s;
        s.v_ = std::move(vs);
        return s;
    }

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    Vertex operator[](std::size_t i) const { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    std::span<const Vertex> vertices() const { return v_; }

    bool contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

    /// The j-th face: the vertex at position j removed.
    Simplex face(std::size_t j) const
    {
        Simplex s;
        s.v_.reserve(v_.size() - 1);
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (i != j) s.v_.push_back(v_[i]);
        return s;
    }

    Simplex without(Vertex v) const
    {
        auto it = std::lower_bound(v_.begin(), v_.end(), v);
        return face(static_cast<std::size_t>(it - v_.begin()));
    }

    /// Position at which `v` would be inserted (number of vertices below v).
    std::size_t insertion_position(Vertex v) const
    {
        return static_cast<std::size_t>(std::lower_bound(v_.begin(), v_.end(), v) - v_.begin());
    }

    /// Canonical form of the oriented union [v, this] and its orientation sign.
    /// The sign is +1 when v lands at an even position.
    std::pair<Simplex, int> insert_vertex(Vertex v) const
    {
        const std::size_t pos = insertion_position(v);
        if (pos < v_.size() && v_[pos] == v) throw std::invalid_argument("vertex already in simplex");
        Simplex s;
        s.v_.reserve(v_.size() + 1);
        s.v_.insert(s.v_.end(), v_.begin(), v_.begin() + static_cast<std::ptrdiff_t>(pos));
        s.v_.push_back(v);
        s.v_.insert(s.v_.end(), v_.begin() + static_cast<std::ptrdiff_t>(pos), v_.end());
        return {std::move(s), (pos % 2 == 0) ? 1 : -1};
    }

    /// Canonical form of the oriented simplex [prefix..., this...] and its sign.
    std::pair<Simplex, int> prepend(std::span<const Vertex> prefix) const
    {
        std::pair<Simplex, int> acc{*this, 1};
        for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
            auto [s, sign] = acc.first.insert_vertex(*it);
            acc = {std::move(s), acc.second * sign};
        }
        return acc;
    }

    bool is_subset_of(const Simplex& other) const
    {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    bool disjoint_from(const Simplex& other) const
    {
        auto a = v_.begin();
        auto b = other.v_.begin();
        while (a != v_.end() && b != other.v_.end()) {
            if (*a == *b) return false;
            if (*a < *b) ++a; else ++b;
        }
        return true;
    }

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    std::vector<Vertex> v_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
        for (Vertex v : s) h = (h ^ v) * 0x100000001b3ULL + (h >> 29);
        return h;
    }
};

} // namespace scx
