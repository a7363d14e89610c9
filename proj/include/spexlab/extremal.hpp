#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spexlab/constructions.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

enum class Objective { edges, lambda };

/// Candidates whose floating lambda lies within this distance of the leader
/// are re-ranked exactly.
inline constexpr double kLambdaTieTolerance = 1e-9;
inline constexpr double kPerronSlack = 1e-6;

struct SearchOptions {
    int workers = 0;
    /// Lambda mode only: restrict to F-free graphs to which no edge can be
    /// added without creating F.
    bool maximal_only = true;
};

struct ExtremalReport {
    int n = 0;
    std::string forbidden_kind;  // "cycles", "cycles-paths" or "graph"
    std::string forbidden_label;
    std::string forbidden_graph6;
    Objective mode = Objective::edges;
    bool maximal_only = false;
    long long candidates = 0;

    long long optimum_edges = 0;
    double optimum_lambda = 0.0;
    /// Canonical graph6 strings, sorted.
    std::vector<std::string> argmax;
    std::vector<bool> argmax_connected;
    /// Every candidate within kLambdaTieTolerance of the optimum (edges mode:
    /// the argmax itself).
    std::vector<std::string> tie_set;
    bool unique = false;
    /// The argmax was settled in exact arithmetic.
    bool certified = false;

    std::optional<std::string> prediction_name;
    std::optional<std::string> prediction;
    std::optional<bool> prediction_free;
    std::optional<bool> matches_prediction;

    std::optional<std::string> construction_name;
    std::optional<long long> construction_edges;
    std::optional<bool> construction_free;
    std::optional<double> aks_bound;
    std::optional<bool> within_aks_bound;
    std::optional<double> lambda_upper;
    std::optional<bool> within_lambda_upper;
    std::optional<bool> perron_bound_ok;
    std::optional<double> perron_min_margin;

    std::vector<std::string> notes;
};

struct Construction {
    std::string name;
    Graph graph;
};

/// S+_{n,kappa} when some k_i >= 3, F_{n,t} when every k_i = 2; nullopt when
/// n is too small for the construction.
std::optional<Construction> predicted_construction(int n, const CycleSpec& spec);
std::optional<Construction> predicted_construction(int n, const CyclePathSpec& spec);
/// S_{n, c-1} where c is the smallest color class of a connected bipartite h.
std::optional<Construction> predicted_construction(int n, const Graph& h);

/// Maximum edge count over all F-free graphs on n <= 9 vertices.
ExtremalReport ex_search(int n, const Forbidden& f, const SearchOptions& opt = {});

/// Maximum spectral radius over all F-free graphs on n <= 9 vertices.
ExtremalReport spex_search(int n, const Forbidden& f, const SearchOptions& opt = {});
ExtremalReport spex_search_forbidden_graph(int n, const Graph& h, const SearchOptions& opt = {});
ExtremalReport spex_search_cycles_paths(int n, const CyclePathSpec& spec, const SearchOptions& opt = {});

/// Same searches over externally supplied graphs, which must share one
/// order. Graphs containing F are skipped; no maximality restriction.
ExtremalReport search_graphs(const std::vector<Graph>& graphs, const Forbidden& f, Objective mode,
                             const SearchOptions& opt = {});

} // namespace spexlab
