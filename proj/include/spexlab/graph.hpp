#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spexlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Graphs up to this order use one 64-bit adjacency row per vertex.
inline constexpr int kDenseLimit = 64;
inline constexpr int kMaxOrder = 1'000'000;

/// Loop-free undirected simple graph.
///
/// Storage is chosen by order: bitset rows for n <= 64, sorted neighbor
/// lists otherwise. Both layouts answer the same queries; the bitset
/// accessors (`row`, `all_mask`) are only valid on dense graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }
    bool is_dense() const noexcept { return n_ <= kDenseLimit; }

    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::vector<Edge> edges() const;
    std::vector<int> degree_sequence() const;

    template <typename Fn>
    void for_each_neighbor(Vertex v, Fn&& fn) const {
        if (is_dense()) {
            std::uint64_t r = rows_[v];
            while (r) {
                fn(static_cast<Vertex>(__builtin_ctzll(r)));
                r &= r - 1;
            }
        } else {
            for (std::uint32_t u : lists_[v]) fn(static_cast<Vertex>(u));
        }
    }

    std::uint64_t row(Vertex v) const { return rows_[v]; }
    std::uint64_t all_mask() const noexcept {
        return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    }

    /// Returns false if the edge was already present.
    bool add_edge(Vertex u, Vertex v);
    bool remove_edge(Vertex u, Vertex v);

    Graph with_edge(Vertex u, Vertex v) const;
    Graph relabeled(std::span<const Vertex> perm) const;
    Graph induced(std::span<const Vertex> keep) const;
    Graph without_vertex(Vertex v) const;
    /// Merges v into u (u keeps its label, labels above v shift down).
    Graph contracted(Vertex u, Vertex v) const;

    bool is_connected() const;
    std::vector<std::vector<Vertex>> components() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<std::vector<std::uint32_t>> lists_;
};

struct Bipartition {
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;
    int smallest_class_size = 0;
};

int degree(const Graph& g, Vertex v);

/// shells[i] = vertices at distance exactly i from u, for i = 0..depth.
std::vector<std::vector<Vertex>> neighborhood_shells(const Graph& g, Vertex u, int depth);

/// Number of edges with one end in a and the other in b. The sets must be disjoint.
std::size_t count_edges_between(const Graph& g, std::span<const Vertex> a,
                                std::span<const Vertex> b);

/// Number of edges with both ends in a.
std::size_t count_edges_within(const Graph& g, std::span<const Vertex> a);

/// Two-coloring of a connected graph, or nullopt when it has an odd cycle.
/// Throws std::invalid_argument on disconnected input.
std::optional<Bipartition> bipartition(const Graph& g);

std::uint64_t sum_of_squared_degrees(const Graph& g);

} // namespace spexlab
