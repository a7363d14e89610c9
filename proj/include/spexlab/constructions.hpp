#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// The multiset {k_1 <= ... <= k_t} describing t even cycles of lengths
/// 2k_i that share one common vertex.
class CycleSpec {
public:
    explicit CycleSpec(std::vector<int> ks);
    /// Parses "2,2,3" (the k values, not the cycle lengths).
    static CycleSpec parse(std::string_view text);

    const std::vector<int>& ks() const noexcept { return ks_; }
    int t() const noexcept { return static_cast<int>(ks_.size()); }
    int kappa() const noexcept { return kappa_; }
    int max_k() const noexcept { return ks_.back(); }
    bool all_fours() const noexcept { return max_k() == 2; }
    int vertex_count() const noexcept { return 2 * kappa_ + t() + 1; }
    std::string to_string() const;

    friend bool operator==(const CycleSpec&, const CycleSpec&) = default;

private:
    std::vector<int> ks_;
    int kappa_ = 0;
};

/// t1 even cycles (k_i >= 2) and t2 paths on 2p_i vertices (p_i >= 2)
/// hanging from one common vertex.
struct CyclePathSpec {
    std::vector<int> cycle_ks;
    std::vector<int> path_ps;

    CyclePathSpec(std::vector<int> cycles, std::vector<int> paths);
    int t() const noexcept { return static_cast<int>(cycle_ks.size() + path_ps.size()); }
    int kappa() const noexcept;
    int max_param() const noexcept;
};

Graph make_empty(int n);
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);

/// K_k join an independent set of n-k vertices; vertices 0..k-1 form the clique.
Graph make_S(int n, int k);
/// make_S(n, k) plus the edge {k, k+1}.
Graph make_S_plus(int n, int k);
/// K_k join a maximal matching on n-k vertices; pairs {k,k+1}, {k+2,k+3}, ...
/// with the last vertex unmatched when n-k is odd.
Graph make_F(int n, int k);
/// floor(k/2) disjoint edges plus one isolated vertex when k is odd.
Graph make_matching(int k);

/// Vertex 0 is the center; cycle i uses the next 2k_i - 1 labels in order.
Graph make_intersecting_even_cycles(const CycleSpec& spec);
/// Vertex 0 is the center; cycles first, then each path as 2p_i - 1 new
/// vertices attached to the center at one end.
Graph make_intersecting_cycles_paths(const CyclePathSpec& spec);

/// Complete bipartite K_{a,b}: side A = 0..a-1, side B = a..a+b-1.
Graph make_K(int a, int b);
/// K_{a,b} with the path a - (a+1) - (a+2) added inside side B.
Graph make_Kp(int a, int b);
/// K_{a,b} with the edges {a,a+1} and {a+2,a+3} added inside side B.
Graph make_Km(int a, int b);

/// Cell structure of the join constructions; every cell listed is non-empty
/// and the partition is equitable.
std::vector<std::vector<Vertex>> partition_S(int n, int k);
std::vector<std::vector<Vertex>> partition_S_plus(int n, int k);
std::vector<std::vector<Vertex>> partition_F(int n, int k);

} // namespace spexlab
