#include "spexlab/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace spexlab {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::vector<Vertex> range(int lo, int hi) {
    std::vector<Vertex> out(static_cast<std::size_t>(std::max(0, hi - lo)));
    std::iota(out.begin(), out.end(), lo);
    return out;
}

void add_join_edges(std::vector<Edge>& es, int n, int k) {
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    }
}

} // namespace

CycleSpec::CycleSpec(std::vector<int> ks) : ks_(std::move(ks)) {
    require(!ks_.empty(), "cycle spec needs at least one cycle");
    for (int k : ks_) require(k >= 2, "cycle spec entries must be >= 2");
    std::sort(ks_.begin(), ks_.end());
    for (int k : ks_) kappa_ += k - 1;
}

CycleSpec CycleSpec::parse(std::string_view text) {
    std::vector<int> ks;
    while (true) {
        auto comma = text.find(',');
        std::string_view tok = text.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("malformed cycle spec '" + std::string(text) + "'");
        }
        ks.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return CycleSpec(std::move(ks));
}

std::string CycleSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < ks_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ks_[i]);
    }
    return out;
}

CyclePathSpec::CyclePathSpec(std::vector<int> cycles, std::vector<int> paths)
    : cycle_ks(std::move(cycles)), path_ps(std::move(paths)) {
    require(!cycle_ks.empty() || !path_ps.empty(), "need at least one cycle or path");
    for (int k : cycle_ks) require(k >= 2, "cycle parameters must be >= 2");
    for (int p : path_ps) require(p >= 2, "path parameters must be >= 2");
    std::sort(cycle_ks.begin(), cycle_ks.end());
    std::sort(path_ps.begin(), path_ps.end());
}

int CyclePathSpec::kappa() const noexcept {
    int s = 0;
    for (int k : cycle_ks) s += k;
    for (int p : path_ps) s += p;
    return s - t();
}

int CyclePathSpec::max_param() const noexcept {
    int m = 0;
    for (int k : cycle_ks) m = std::max(m, k);
    for (int p : path_ps) m = std::max(m, p);
    return m;
}

Graph make_empty(int n) { return Graph(n); }

Graph make_complete(int n) { return make_S(n, n); }

Graph make_cycle(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

Graph make_path(int n) {
    require(n >= 0, "negative order");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

Graph make_S(int n, int k) {
    require(k >= 0 && k <= n, "make_S requires 0 <= k <= n");
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(n));
    add_join_edges(es, n, k);
    return Graph::from_edges(n, es);
}

Graph make_S_plus(int n, int k) {
    require(k >= 0 && n >= k + 2, "make_S_plus requires n >= k + 2");
    std::vector<Edge> es;
    add_join_edges(es, n, k);
    es.emplace_back(k, k + 1);
    return Graph::from_edges(n, es);
}

Graph make_F(int n, int k) {
    require(k >= 0 && k <= n, "make_F requires 0 <= k <= n");
    std::vector<Edge> es;
    add_join_edges(es, n, k);
    for (int v = k; v + 1 < n; v += 2) es.emplace_back(v, v + 1);
    return Graph::from_edges(n, es);
}

Graph make_matching(int k) {
    require(k >= 0, "negative order");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < k; v += 2) es.emplace_back(v, v + 1);
    return Graph::from_edges(k, es);
}

Graph make_intersecting_even_cycles(const CycleSpec& spec) {
    std::vector<Edge> es;
    int next = 1;
    for (int k : spec.ks()) {
        const int first = next;
        const int last = next + 2 * k - 2;
        es.emplace_back(0, first);
        for (int v = first; v < last; ++v) es.emplace_back(v, v + 1);
        es.emplace_back(last, 0);
        next = last + 1;
    }
    return Graph::from_edges(spec.vertex_count(), es);
}

Graph make_intersecting_cycles_paths(const CyclePathSpec& spec) {
    std::vector<Edge> es;
    int next = 1;
    for (int k : spec.cycle_ks) {
        const int first = next;
        const int last = next + 2 * k - 2;
        es.emplace_back(0, first);
        for (int v = first; v < last; ++v) es.emplace_back(v, v + 1);
        es.emplace_back(last, 0);
        next = last + 1;
    }
    for (int p : spec.path_ps) {
        const int first = next;
        const int last = next + 2 * p - 2;
        es.emplace_back(0, first);
        for (int v = first; v < last; ++v) es.emplace_back(v, v + 1);
        next = last + 1;
    }
    return Graph::from_edges(next, es);
}

Graph make_K(int a, int b) {
    require(a >= 0 && b >= 0, "negative side size");
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    }
    return Graph::from_edges(a + b, es);
}

Graph make_Kp(int a, int b) {
    require(a >= 0 && b >= 3, "make_Kp requires b >= 3");
    Graph g = make_K(a, b);
    g.add_edge(a, a + 1);
    g.add_edge(a + 1, a + 2);
    return g;
}

Graph make_Km(int a, int b) {
    require(a >= 0 && b >= 4, "make_Km requires b >= 4");
    Graph g = make_K(a, b);
    g.add_edge(a, a + 1);
    g.add_edge(a + 2, a + 3);
    return g;
}

std::vector<std::vector<Vertex>> partition_S(int n, int k) {
    require(k >= 0 && k <= n, "partition_S requires 0 <= k <= n");
    std::vector<std::vector<Vertex>> cells;
    if (k > 0) cells.push_back(range(0, k));
    if (n > k) cells.push_back(range(k, n));
    return cells;
}

std::vector<std::vector<Vertex>> partition_S_plus(int n, int k) {
    require(k >= 0 && n >= k + 2, "partition_S_plus requires n >= k + 2");
    std::vector<std::vector<Vertex>> cells;
    if (k > 0) cells.push_back(range(0, k));
    cells.push_back({k, k + 1});
    if (n > k + 2) cells.push_back(range(k + 2, n));
    return cells;
}

std::vector<std::vector<Vertex>> partition_F(int n, int k) {
    require(k >= 0 && k <= n, "partition_F requires 0 <= k <= n");
    std::vector<std::vector<Vertex>> cells;
    if (k > 0) cells.push_back(range(0, k));
    const int matched = ((n - k) / 2) * 2;
    if (matched > 0) cells.push_back(range(k, k + matched));
    if ((n - k) % 2 == 1) cells.push_back({n - 1});
    return cells;
}

} // namespace spexlab
