#pragma once

#include <cstdint>
#include <random>

#include "kprod/graph.hpp"

namespace kprod {

/// All randomness goes through mt19937_64, whose output sequence is fixed by
/// the standard. The helpers below avoid the std distributions, whose
/// algorithms differ between standard libraries.
using Rng = std::mt19937_64;

/// splitmix64 finaliser over (base, index): per-instance seeds that do not
/// depend on execution order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// True with probability p (exactly false at 0, exactly true at 1).
bool bernoulli(Rng& rng, double p);

/// G(n, p): each pair independently with probability p.
Graph random_graph(int n, double p, std::uint64_t seed);

inline constexpr int kConnectedRetries = 100;

/// G(n, p) resampled until connected. After `retries` failures the last
/// sample is joined with a uniform random spanning tree (Prüfer decoding).
/// Throws GraphError when p = 0 and n >= 2.
Graph random_connected_graph(int n, double p, std::uint64_t seed, int retries = kConnectedRetries);

/// Bipartite graph with classes {0..a-1} and {a..a+b-1}; only cross pairs drawn.
Graph random_bipartite_graph(int a, int b, double p, std::uint64_t seed);

/// As above, resampled until connected, falling back to adding a random
/// spanning tree of K_{a,b}. Throws GraphError when p = 0 and a + b >= 2.
Graph random_connected_bipartite_graph(int a, int b, double p, std::uint64_t seed,
                                       int retries = kConnectedRetries);

}  // namespace kprod
