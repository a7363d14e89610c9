#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spexlab/constructions.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

/// A forbidden intersecting even cycle or an explicit forbidden graph.
using Forbidden = std::variant<CycleSpec, Graph>;

/// The forbidden graph itself (the cycle graph for a CycleSpec).
Graph forbidden_graph(const Forbidden& f);
std::string describe(const Forbidden& f);

/// True iff g has no subgraph isomorphic to the forbidden graph. Cycle
/// specs use the specialized detector, explicit graphs the generic search.
bool is_free(const Graph& g, const Forbidden& f);

struct EnumFilter {
    bool connected_only = false;
    std::optional<int> min_edges;
    std::optional<int> max_edges;
    std::optional<Forbidden> freeness;
};

inline constexpr int kMaxEnumOrder = 9;

/// Calls sink once per isomorphism class on n vertices passing the filter,
/// with each graph in canonical labeling. Emission order is fixed for fixed
/// inputs regardless of the worker count (workers <= 0 means the default).
void enumerate_graphs(int n, const EnumFilter& filter, const std::function<void(const Graph&)>& sink,
                      int workers = 0);

std::vector<Graph> enumerate_graphs(int n, const EnumFilter& filter, int workers = 0);

} // namespace spexlab
