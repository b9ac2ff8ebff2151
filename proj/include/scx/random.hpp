#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "scx/graph.hpp"

namespace scx {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based keyed generator: the draw for (key, a, b) depends on nothing else,
/// so samples are order independent and reproducible under any scheduling.
constexpr std::uint64_t keyed_bits(std::uint64_t key, std::uint64_t a, std::uint64_t b)
{
    return mix64(mix64(mix64(key) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
}

/// Uniform double in [0, 1) with 53 random bits.
constexpr double keyed_uniform(std::uint64_t key, std::uint64_t a, std::uint64_t b)
{
    return static_cast<double>(keyed_bits(key, a, b) >> 11) * 0x1.0p-53;
}

/// Seed of trial `trial` within a run seeded by `seed`.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial)
{
    return keyed_bits(seed, 0x7472ULL, trial);
}

/// Erdos-Renyi G(n, p): pair {u, v} is kept iff keyed_uniform(seed, u, v) < p.
inline Graph gnp(std::size_t n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (keyed_uniform(seed, u, v) < p) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

/// p = (((k+1) ln n + c) / n)^(1/(k+2)). A non-positive base resolves to p = 0;
/// p > 1 is rejected.
inline double p_threshold_main(std::size_t n, int k, double c)
{
    if (n < 2) throw std::invalid_argument("threshold needs n >= 2");
    if (k < 1) throw std::invalid_argument("threshold needs k >= 1");
    const double base = ((k + 1) * std::log(static_cast<double>(n)) + c) / static_cast<double>(n);
    if (base <= 0.0) return 0.0;
    const double p = std::pow(base, 1.0 / (k + 2));
    if (p > 1.0) throw std::invalid_argument("threshold p = " + std::to_string(p) + " exceeds 1 (n too small for k, c)");
    return p;
}

/// p = n^alpha.
inline double p_power(std::size_t n, double alpha)
{
    if (n < 1) throw std::invalid_argument("power law needs n >= 1");
    const double p = std::pow(static_cast<double>(n), alpha);
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("n^alpha = " + std::to_string(p) + " is not a probability");
    return p;
}

} // namespace scx
