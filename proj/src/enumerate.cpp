#include "spexlab/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "spexlab/canonical.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/parallel.hpp"
#include "spexlab/subgraph.hpp"

namespace spexlab {

Graph forbidden_graph(const Forbidden& f) {
    if (const auto* spec = std::get_if<CycleSpec>(&f)) return make_intersecting_even_cycles(*spec);
    return std::get<Graph>(f);
}

std::string describe(const Forbidden& f) {
    if (const auto* spec = std::get_if<CycleSpec>(&f)) return "spec " + spec->to_string();
    return "graph " + graph6_encode(std::get<Graph>(f));
}

bool is_free(const Graph& g, const Forbidden& f) {
    if (const auto* spec = std::get_if<CycleSpec>(&f)) {
        if (spec->vertex_count() > g.order()) return true;
        return !contains_intersecting_even_cycles(g, *spec);
    }
    const Graph& h = std::get<Graph>(f);
    if (h.order() > g.order() || h.size() > g.size()) return true;
    return !contains_subgraph(g, h);
}

namespace {

using Mask = std::uint64_t;

struct Parent {
    Graph graph;
    std::string g6;
};

Parent make_parent(Graph g) {
    std::string s = graph6_encode(g);
    return {std::move(g), std::move(s)};
}

/// Canonical augmentation of one parent. A child C = P + v is kept iff
/// deleting the canonically last vertex of C gives back the class of P;
/// isomorphic children of the same parent are merged.
std::vector<Graph> children(const Parent& p, const std::optional<Forbidden>& forbid) {
    const Graph& pg = p.graph;
    const int m = pg.order();
    const Vertex v = m;
    std::vector<int> pdeg = pg.degree_sequence();
    std::vector<Mask> bad;
    std::unordered_set<std::string> seen;
    std::vector<Graph> out;
    const Mask limit = Mask{1} << m;
    for (Mask s = 0; s < limit; ++s) {
        const int dv = __builtin_popcountll(s);
        bool top = true;
        for (int u = 0; u < m && top; ++u) top = pdeg[u] + static_cast<int>((s >> u) & 1U) <= dv;
        if (!top) continue;
        if (forbid && std::any_of(bad.begin(), bad.end(), [&](Mask b) { return (b & s) == b; })) continue;

        Graph c(m + 1);
        for (auto [a, b] : pg.edges()) c.add_edge(a, b);
        for (Mask r = s; r; r &= r - 1) c.add_edge(v, __builtin_ctzll(r));

        if (forbid && !is_free(c, *forbid)) {
            bad.push_back(s);
            continue;
        }
        auto cells = equitable_refinement(c);
        if (std::find(cells.back().begin(), cells.back().end(), v) == cells.back().end()) continue;
        CanonicalLabeling lab = canonical_labeling(c);
        const Vertex w = lab.order.back();
        if (w != v && canonical_form(c.without_vertex(w)) != p.g6) continue;
        if (seen.insert(graph6_encode(lab.graph)).second) out.push_back(std::move(lab.graph));
    }
    return out;
}

bool passes_post(const Graph& g, const EnumFilter& f) {
    if (f.connected_only && !g.is_connected()) return false;
    const auto m = static_cast<long long>(g.size());
    if (f.min_edges && m < *f.min_edges) return false;
    if (f.max_edges && m > *f.max_edges) return false;
    return true;
}

} // namespace

void enumerate_graphs(int n, const EnumFilter& filter, const std::function<void(const Graph&)>& sink,
                      int workers) {
    if (n < 1 || n > kMaxEnumOrder) {
        throw std::invalid_argument("built-in enumeration supports 1 <= n <= 9, got " + std::to_string(n));
    }
    if (filter.min_edges && filter.max_edges && *filter.min_edges > *filter.max_edges) {
        throw std::invalid_argument("min_edges exceeds max_edges");
    }
    Graph single(1);
    if (n == 1) {
        if ((!filter.freeness || is_free(single, *filter.freeness)) && passes_post(single, filter)) sink(single);
        return;
    }
    std::vector<Parent> level{make_parent(single)};
    if (filter.freeness && !is_free(single, *filter.freeness)) return;

    for (int order = 2; order < n; ++order) {
        std::vector<std::vector<Graph>> parts(level.size());
        parallel_for(level.size(), workers, [&](std::size_t i) { parts[i] = children(level[i], filter.freeness); });
        std::vector<Parent> next;
        for (auto& part : parts) {
            for (auto& g : part) next.push_back(make_parent(std::move(g)));
        }
        level = std::move(next);
    }

    // Final level: bounded blocks keep memory flat while preserving order.
    constexpr std::size_t kBlock = 512;
    for (std::size_t start = 0; start < level.size(); start += kBlock) {
        const std::size_t count = std::min(kBlock, level.size() - start);
        std::vector<std::vector<Graph>> parts(count);
        parallel_for(count, workers,
                     [&](std::size_t i) { parts[i] = children(level[start + i], filter.freeness); });
        for (const auto& part : parts) {
            for (const auto& g : part) {
                if (passes_post(g, filter)) sink(g);
            }
        }
    }
}

std::vector<Graph> enumerate_graphs(int n, const EnumFilter& filter, int workers) {
    std::vector<Graph> out;
    enumerate_graphs(n, filter, [&](const Graph& g) { out.push_back(g); }, workers);
    return out;
}

} // namespace spexlab
