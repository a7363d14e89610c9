#pragma once

#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Canonical relabeling of a dense graph.
struct CanonicalLabeling {
    /// order[i] is the original vertex placed at canonical position i.
    std::vector<Vertex> order;
    /// The graph relabeled so that vertex order[i] becomes i.
    Graph graph;
};

/// Computes a canonical labeling by color refinement followed by an
/// individualization search over refined cells. Twin vertices and
/// automorphisms discovered at leaves prune the search; neither changes the
/// result. Requires n <= 64.
CanonicalLabeling canonical_labeling(const Graph& g);

/// Canonical byte string: the graph6 line of the canonically relabeled graph.
/// Two graphs have equal strings iff they are isomorphic.
std::string canonical_form(const Graph& g);

/// Stable cells of the coarsest equitable refinement of the unit partition,
/// listed in the label-invariant order used by the canonical search.
std::vector<std::vector<Vertex>> equitable_refinement(const Graph& g);

} // namespace spexlab
