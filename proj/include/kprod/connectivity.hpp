#pragma once

#include <span>
#include <vector>

#include "kprod/graph.hpp"

namespace kprod {

/// Why removing a cut's vertices satisfies the connectivity definition.
enum class ResidualVerdict { disconnected, trivial };

/// Which construction produced a cut: a minimum cut of the graph itself, or
/// one of the two product constructions (C × V(K_n), or an open neighbourhood).
enum class CutOrigin { minimum_cut, copy, neighborhood };

/// A vertex set whose removal leaves a disconnected or single-vertex graph.
struct CutWitness {
    std::vector<Vertex> vertices;  // sorted
    ResidualVerdict residual_verdict = ResidualVerdict::disconnected;
    CutOrigin origin = CutOrigin::minimum_cut;

    friend bool operator==(const CutWitness&, const CutWitness&) = default;
};

/// Exact vertex connectivity κ(G). κ(K1) = 0, κ(disconnected) = 0,
/// κ(K_t) = t - 1. Throws GraphError on the empty graph.
///
/// Minimum local connectivity over the pairs that can witness a minimum
/// cut: a min-degree vertex v against each non-neighbour, and each
/// non-adjacent pair of v's neighbours. Pairs are evaluated in parallel.
int kappa(const Graph& g);

/// Single-threaded reference for `kappa`; same pairs, same result.
int kappa_serial(const Graph& g);

/// Minimum vertex cut, lexicographically smallest (as a sorted sequence)
/// among all cuts of size κ(G). Complete graphs give all but the last vertex.
CutWitness min_vertex_cut(const Graph& g);

/// True iff G - S is disconnected or a single vertex. Removing every vertex
/// gives false. Throws GraphError for out-of-range members of S.
bool is_separator(const Graph& g, std::span<const Vertex> separator);

inline constexpr int kDefaultBruteForceCap = 12;

/// Smallest k such that some k-subset is a separator, by enumerating
/// subsets in increasing size. Independent of the flow code path. Throws
/// GraphError when the graph has more than `cap` vertices or is empty.
int brute_force_kappa(const Graph& g, int cap = kDefaultBruteForceCap);

}  // namespace kprod
