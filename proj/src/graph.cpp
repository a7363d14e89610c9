#include "spexlab/graph.hpp"

#include <algorithm>
#include <queue>

namespace spexlab {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder) {
        throw std::invalid_argument("graph order out of range: " + std::to_string(n));
    }
    if (is_dense()) {
        rows_.assign(static_cast<std::size_t>(n), 0);
    } else {
        lists_.resize(static_cast<std::size_t>(n));
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    if (g.is_dense()) {
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
    // Bulk path for large graphs: append then sort each list once.
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.lists_[u].push_back(static_cast<std::uint32_t>(v));
        g.lists_[v].push_back(static_cast<std::uint32_t>(u));
    }
    std::size_t twice = 0;
    for (auto& l : g.lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        twice += l.size();
    }
    g.m_ = twice / 2;
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (is_dense()) return (rows_[u] >> v) & 1U;
    const auto& l = lists_[u];
    return std::binary_search(l.begin(), l.end(), static_cast<std::uint32_t>(v));
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    if (is_dense()) return __builtin_popcountll(rows_[v]);
    return static_cast<int>(lists_[v].size());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex v = 0; v < n_; ++v) {
        for_each_neighbor(v, [&](Vertex u) {
            if (v < u) out.emplace_back(v, u);
        });
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (is_dense()) {
        if ((rows_[u] >> v) & 1U) return false;
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
    } else {
        auto& lu = lists_[u];
        auto it = std::lower_bound(lu.begin(), lu.end(), static_cast<std::uint32_t>(v));
        if (it != lu.end() && *it == static_cast<std::uint32_t>(v)) return false;
        lu.insert(it, static_cast<std::uint32_t>(v));
        auto& lv = lists_[v];
        lv.insert(std::lower_bound(lv.begin(), lv.end(), static_cast<std::uint32_t>(u)),
                  static_cast<std::uint32_t>(u));
    }
    ++m_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (is_dense()) {
        if (!((rows_[u] >> v) & 1U)) return false;
        rows_[u] &= ~(std::uint64_t{1} << v);
        rows_[v] &= ~(std::uint64_t{1} << u);
    } else {
        auto& lu = lists_[u];
        auto it = std::lower_bound(lu.begin(), lu.end(), static_cast<std::uint32_t>(v));
        if (it == lu.end() || *it != static_cast<std::uint32_t>(v)) return false;
        lu.erase(it);
        auto& lv = lists_[v];
        lv.erase(std::lower_bound(lv.begin(), lv.end(), static_cast<std::uint32_t>(u)));
    }
    --m_;
    return true;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw std::invalid_argument("permutation size does not match graph order");
    }
    std::vector<Edge> es;
    es.reserve(m_);
    for (auto [u, v] : edges()) es.emplace_back(perm[u], perm[v]);
    Graph g = from_edges(n_, es);
    if (g.m_ != m_) throw std::invalid_argument("relabeling is not a permutation");
    return g;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        if (index[keep[i]] != -1) throw std::invalid_argument("duplicate vertex in induced set");
        index[keep[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for_each_neighbor(keep[i], [&](Vertex u) {
            if (index[u] > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), index[u]);
        });
    }
    return from_edges(static_cast<int>(keep.size()), es);
}

Graph Graph::without_vertex(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> keep;
    keep.reserve(static_cast<std::size_t>(n_ - 1));
    for (Vertex u = 0; u < n_; ++u) {
        if (u != v) keep.push_back(u);
    }
    return induced(keep);
}

Graph Graph::contracted(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("cannot contract a vertex with itself");
    auto relabel = [v](Vertex w) { return w > v ? w - 1 : w; };
    std::vector<Edge> es;
    for (auto [a, b] : edges()) {
        Vertex x = a == v ? u : a;
        Vertex y = b == v ? u : b;
        if (x != y) es.emplace_back(relabel(x), relabel(y));
    }
    return from_edges(n_ - 1, es);
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        out.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for_each_neighbor(v, [&](Vertex w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            });
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.rows_ == b.rows_ && a.lists_ == b.lists_;
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

std::vector<std::vector<Vertex>> neighborhood_shells(const Graph& g, Vertex u, int depth) {
    if (u < 0 || u >= g.order()) throw std::out_of_range("vertex out of range");
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<Vertex>> shells(static_cast<std::size_t>(depth) + 1);
    dist[u] = 0;
    shells[0].push_back(u);
    for (int i = 0; i < depth; ++i) {
        for (Vertex v : shells[i]) {
            g.for_each_neighbor(v, [&](Vertex w) {
                if (dist[w] == -1) {
                    dist[w] = i + 1;
                    shells[i + 1].push_back(w);
                }
            });
        }
        std::sort(shells[i + 1].begin(), shells[i + 1].end());
    }
    return shells;
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
        in[v] = 1;
    }
    return in;
}

} // namespace

std::size_t count_edges_between(const Graph& g, std::span<const Vertex> a,
                                std::span<const Vertex> b) {
    auto in_a = membership(g, a);
    auto in_b = membership(g, b);
    for (Vertex v : b) {
        if (in_a[v]) throw std::invalid_argument("vertex sets overlap");
    }
    std::size_t count = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in_a[v]) continue;
        g.for_each_neighbor(v, [&](Vertex w) { count += in_b[w] ? 1 : 0; });
    }
    return count;
}

std::size_t count_edges_within(const Graph& g, std::span<const Vertex> a) {
    auto in_a = membership(g, a);
    std::size_t twice = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in_a[v]) continue;
        g.for_each_neighbor(v, [&](Vertex w) { twice += in_a[w] ? 1 : 0; });
    }
    return twice / 2;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    if (!g.is_connected()) {
        throw std::invalid_argument("bipartition requires a connected graph; decompose first");
    }
    const int n = g.order();
    Bipartition out;
    if (n == 0) return out;
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::queue<Vertex> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        bool odd = false;
        g.for_each_neighbor(v, [&](Vertex w) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                q.push(w);
            } else if (color[w] == color[v]) {
                odd = true;
            }
        });
        if (odd) return std::nullopt;
    }
    for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? out.side_a : out.side_b).push_back(v);
    out.smallest_class_size =
        static_cast<int>(std::min(out.side_a.size(), out.side_b.size()));
    return out;
}

std::uint64_t sum_of_squared_degrees(const Graph& g) {
    std::uint64_t s = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto d = static_cast<std::uint64_t>(g.degree(v));
        s += d * d;
    }
    return s;
}

} // namespace spexlab
