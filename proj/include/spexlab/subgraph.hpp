#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spexlab/constructions.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

/// witness[i] is the host vertex that pattern vertex i maps to.
using Embedding = std::vector<Vertex>;

/// Non-induced subgraph search: an injective map V(h) -> V(g) carrying every
/// edge of h onto an edge of g. Requires |V(h)| <= |V(g)| <= 64.
std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& h);

bool is_embedding(const Graph& g, const Graph& h, const Embedding& map);

struct CycleWitness {
    Vertex center = 0;
    /// Each cycle as center, a, ..., b with b adjacent to the center.
    std::vector<std::vector<Vertex>> cycles;
};

/// Exhaustive search for t cycles of lengths 2k_i through a common center
/// that share no other vertex. Absence proves the graph is free of the
/// intersecting even cycle. Requires |V(g)| <= 64.
std::optional<CycleWitness> contains_intersecting_even_cycles(const Graph& g, const CycleSpec& spec);

bool is_cycle_witness(const Graph& g, const CycleSpec& spec, const CycleWitness& w);

/// A simple path on `ell` vertices, or nullopt when none exists.
std::optional<std::vector<Vertex>> has_path_on(const Graph& g, int ell);

struct PathSystem {
    /// One path per spec entry, largest first; path i has 2k_i - 1 vertices.
    std::vector<std::vector<Vertex>> paths;
    std::vector<Vertex> u_side;
    std::vector<Vertex> w_side;
};

/// Vertex-disjoint paths of orders 2k_i - 1 with both ends in U, using only
/// edges inside U or between U and W. Edges inside W are ignored.
std::optional<PathSystem> find_disjoint_path_system(const Graph& g, std::span<const Vertex> u_side,
                                                    std::span<const Vertex> w_side,
                                                    const CycleSpec& spec);

/// The graph with every edge inside W removed.
Graph restrict_to_u_edges(const Graph& g, std::span<const Vertex> w_side);

bool is_path_system(const Graph& g, const CycleSpec& spec, const PathSystem& ps);

inline constexpr int kMinorHostLimit = 12;
inline constexpr int kMinorPatternLimit = 8;

/// Whether h is a minor of g, by exhaustive search over contractions.
/// Requires |V(h)| <= 8 and |V(g)| <= 12.
bool contains_minor(const Graph& g, const Graph& h);

} // namespace spexlab
