#include "spexlab/subgraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "spexlab/canonical.hpp"

namespace spexlab {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

void require_dense_host(const Graph& g, const char* what) {
    if (!g.is_dense()) throw std::invalid_argument(std::string(what) + " requires a host graph on at most 64 vertices");
}

// ---------------------------------------------------------------------------
// Generic embedding search.

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {
        const int nh = h.order();
        order_.reserve(static_cast<std::size_t>(nh));
        std::vector<char> placed(static_cast<std::size_t>(nh), 0);
        std::vector<int> placed_nbrs(static_cast<std::size_t>(nh), 0);
        for (int step = 0; step < nh; ++step) {
            int best = -1;
            for (int v = 0; v < nh; ++v) {
                if (placed[v]) continue;
                if (best == -1 || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] && h.degree(v) > h.degree(best))) {
                    best = v;
                }
            }
            placed[best] = 1;
            order_.push_back(best);
            h.for_each_neighbor(best, [&](Vertex w) { ++placed_nbrs[w]; });
        }
        std::vector<int> pos(static_cast<std::size_t>(nh));
        for (int i = 0; i < nh; ++i) pos[order_[i]] = i;
        back_.resize(static_cast<std::size_t>(nh));
        for (int i = 0; i < nh; ++i) {
            h.for_each_neighbor(order_[i], [&](Vertex w) {
                if (pos[w] < i) back_[i].push_back(w);
            });
        }
        const std::vector<int> hdeg = h.degree_sequence();
        const int maxdeg = nh ? *std::max_element(hdeg.begin(), hdeg.end()) : 0;
        by_degree_.assign(static_cast<std::size_t>(maxdeg) + 1, 0);
        for (int d = 0; d <= maxdeg; ++d) {
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) >= d) by_degree_[d] |= bit(v);
            }
        }
        map_.assign(static_cast<std::size_t>(nh), -1);
    }

    std::optional<Embedding> run() {
        if (extend(0, 0)) return map_;
        return std::nullopt;
    }

private:
    bool extend(int i, Mask used) {
        if (i == static_cast<int>(order_.size())) return true;
        const Vertex hv = order_[i];
        Mask cand = g_.all_mask() & ~used & by_degree_[h_.degree(hv)];
        for (Vertex w : back_[i]) cand &= g_.row(map_[w]);
        while (cand) {
            const Vertex gv = __builtin_ctzll(cand);
            cand &= cand - 1;
            map_[hv] = gv;
            if (extend(i + 1, used | bit(gv))) return true;
        }
        map_[hv] = -1;
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> back_;
    std::vector<Mask> by_degree_;
    Embedding map_;
};

// ---------------------------------------------------------------------------
// Intersecting even cycles through a fixed center.

class CycleSearch {
public:
    CycleSearch(const Graph& g, const CycleSpec& spec) : g_(g) {
        for (auto it = spec.ks().rbegin(); it != spec.ks().rend(); ++it) lengths_.push_back(2 * *it);
        suffix_need_.assign(lengths_.size() + 1, 0);
        for (int i = static_cast<int>(lengths_.size()) - 1; i >= 0; --i) {
            suffix_need_[i] = suffix_need_[i + 1] + lengths_[i] - 1;
        }
    }

    std::optional<CycleWitness> run() {
        const int n = g_.order();
        std::vector<Vertex> centers(static_cast<std::size_t>(n));
        std::iota(centers.begin(), centers.end(), 0);
        std::stable_sort(centers.begin(), centers.end(),
                         [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
        const int t = static_cast<int>(lengths_.size());
        if (suffix_need_[0] + 1 > n) return std::nullopt;
        for (Vertex c : centers) {
            if (g_.degree(c) < 2 * t) break;
            center_ = c;
            nc_ = g_.row(c);
            cycles_.clear();
            if (solve(0, bit(c), -1)) return CycleWitness{c, cycles_};
        }
        return std::nullopt;
    }

private:
    bool solve(std::size_t i, Mask used, Vertex prev_start) {
        if (i == lengths_.size()) return true;
        const Mask free = g_.all_mask() & ~used;
        if (__builtin_popcountll(free) < suffix_need_[i]) return false;
        const int remaining_cycles = static_cast<int>(lengths_.size() - i);
        if (__builtin_popcountll(nc_ & free) < 2 * remaining_cycles) return false;
        Mask starts = nc_ & free;
        if (i > 0 && lengths_[i] == lengths_[i - 1] && prev_start >= 0) {
            starts &= ~((bit(prev_start) << 1) - 1);
        }
        while (starts) {
            const Vertex a = __builtin_ctzll(starts);
            starts &= starts - 1;
            path_.assign(1, a);
            if (grow(i, used | bit(a), a, lengths_[i] - 2)) return true;
        }
        return false;
    }

    // Extends path_ (starting at a) by `left` more vertices; the final one
    // must be a neighbor of the center with a larger label than a.
    bool grow(std::size_t i, Mask used, Vertex a, int left) {
        const Vertex cur = path_.back();
        Mask next = g_.row(cur) & g_.all_mask() & ~used;
        if (left == 1) next &= nc_ & ~((bit(a) << 1) - 1);
        while (next) {
            const Vertex v = __builtin_ctzll(next);
            next &= next - 1;
            path_.push_back(v);
            if (left == 1) {
                std::vector<Vertex> cycle{center_};
                cycle.insert(cycle.end(), path_.begin(), path_.end());
                cycles_.push_back(std::move(cycle));
                auto saved = path_;
                if (solve(i + 1, used | bit(v), a)) return true;
                path_ = std::move(saved);
                cycles_.pop_back();
            } else if (grow(i, used | bit(v), a, left - 1)) {
                return true;
            }
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> lengths_;
    std::vector<int> suffix_need_;
    Vertex center_ = 0;
    Mask nc_ = 0;
    std::vector<Vertex> path_;
    std::vector<std::vector<Vertex>> cycles_;
};

// ---------------------------------------------------------------------------
// Paths.

struct StateKey {
    Mask visited;
    int end;
    bool operator==(const StateKey&) const = default;
};

struct StateHash {
    std::size_t operator()(const StateKey& k) const noexcept {
        return std::hash<Mask>{}(k.visited * 0x9E3779B97F4A7C15ULL ^ static_cast<Mask>(k.end));
    }
};

class PathSearch {
public:
    PathSearch(const Graph& g, int ell) : g_(g), ell_(ell) {}

    std::optional<std::vector<Vertex>> run() {
        for (Vertex s = 0; s < g_.order(); ++s) {
            path_.assign(1, s);
            if (dfs(bit(s), s)) return path_;
        }
        return std::nullopt;
    }

private:
    bool dfs(Mask visited, Vertex end) {
        if (static_cast<int>(path_.size()) == ell_) return true;
        if (dead_.count({visited, end})) return false;
        Mask next = g_.row(end) & ~visited;
        while (next) {
            const Vertex v = __builtin_ctzll(next);
            next &= next - 1;
            path_.push_back(v);
            if (dfs(visited | bit(v), v)) return true;
            path_.pop_back();
        }
        dead_.insert({visited, end});
        return false;
    }

    const Graph& g_;
    int ell_;
    std::vector<Vertex> path_;
    std::unordered_set<StateKey, StateHash> dead_;
};

class PathSystemSearch {
public:
    PathSystemSearch(std::vector<Mask> rows, Mask u_mask, const CycleSpec& spec)
        : rows_(std::move(rows)), u_mask_(u_mask) {
        for (auto it = spec.ks().rbegin(); it != spec.ks().rend(); ++it) orders_.push_back(2 * *it - 1);
    }

    std::optional<std::vector<std::vector<Vertex>>> run() {
        if (solve(0, 0, -1)) return found_;
        return std::nullopt;
    }

private:
    bool solve(std::size_t i, Mask used, Vertex prev_start) {
        if (i == orders_.size()) return true;
        Mask starts = u_mask_ & ~used;
        if (i > 0 && orders_[i] == orders_[i - 1] && prev_start >= 0) {
            starts &= ~((bit(prev_start) << 1) - 1);
        }
        while (starts) {
            const Vertex a = __builtin_ctzll(starts);
            starts &= starts - 1;
            path_.assign(1, a);
            if (grow(i, used | bit(a), a, orders_[i] - 1)) return true;
        }
        return false;
    }

    bool grow(std::size_t i, Mask used, Vertex a, int left) {
        Mask next = rows_[path_.back()] & ~used;
        if (left == 1) next &= u_mask_ & ~((bit(a) << 1) - 1);
        while (next) {
            const Vertex v = __builtin_ctzll(next);
            next &= next - 1;
            path_.push_back(v);
            if (left == 1) {
                found_.push_back(path_);
                auto saved = path_;
                if (solve(i + 1, used | bit(v), a)) return true;
                path_ = std::move(saved);
                found_.pop_back();
            } else if (grow(i, used | bit(v), a, left - 1)) {
                return true;
            }
            path_.pop_back();
        }
        return false;
    }

    std::vector<Mask> rows_;
    Mask u_mask_;
    std::vector<int> orders_;
    std::vector<Vertex> path_;
    std::vector<std::vector<Vertex>> found_;
};

Mask side_mask(const Graph& g, std::span<const Vertex> side) {
    Mask m = 0;
    for (Vertex v : side) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
        m |= bit(v);
    }
    return m;
}

} // namespace

std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& h) {
    require_dense_host(g, "contains_subgraph");
    if (h.order() > g.order()) throw std::invalid_argument("pattern has more vertices than host");
    if (h.size() > g.size()) return std::nullopt;
    auto found = EmbeddingSearch(g, h).run();
    if (found && !is_embedding(g, h, *found)) throw std::logic_error("embedding failed validation");
    return found;
}

bool is_embedding(const Graph& g, const Graph& h, const Embedding& map) {
    if (static_cast<int>(map.size()) != h.order()) return false;
    std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : map) {
        if (v < 0 || v >= g.order() || hit[v]) return false;
        hit[v] = 1;
    }
    for (auto [a, b] : h.edges()) {
        if (!g.adjacent(map[a], map[b])) return false;
    }
    return true;
}

std::optional<CycleWitness> contains_intersecting_even_cycles(const Graph& g, const CycleSpec& spec) {
    require_dense_host(g, "contains_intersecting_even_cycles");
    auto found = CycleSearch(g, spec).run();
    if (found && !is_cycle_witness(g, spec, *found)) throw std::logic_error("cycle witness failed validation");
    return found;
}

bool is_cycle_witness(const Graph& g, const CycleSpec& spec, const CycleWitness& w) {
    if (static_cast<int>(w.cycles.size()) != spec.t()) return false;
    std::vector<int> lengths;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (const auto& cyc : w.cycles) {
        if (cyc.size() < 4 || cyc.front() != w.center) return false;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Vertex a = cyc[i];
            Vertex b = cyc[(i + 1) % cyc.size()];
            if (a < 0 || a >= g.order() || b < 0 || b >= g.order() || !g.adjacent(a, b)) return false;
            if (i > 0) {
                if (seen[a]) return false;
                seen[a] = 1;
            }
        }
        lengths.push_back(static_cast<int>(cyc.size()));
    }
    if (w.center < 0 || w.center >= g.order() || seen[w.center]) return false;
    std::vector<int> want;
    for (int k : spec.ks()) want.push_back(2 * k);
    std::sort(lengths.begin(), lengths.end());
    return lengths == want;
}

std::optional<std::vector<Vertex>> has_path_on(const Graph& g, int ell) {
    require_dense_host(g, "has_path_on");
    if (ell < 1) throw std::invalid_argument("path order must be positive");
    if (ell > g.order()) return std::nullopt;
    return PathSearch(g, ell).run();
}

Graph restrict_to_u_edges(const Graph& g, std::span<const Vertex> w_side) {
    std::vector<char> in_w(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : w_side) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
        in_w[v] = 1;
    }
    std::vector<Edge> keep;
    for (auto [a, b] : g.edges()) {
        if (!(in_w[a] && in_w[b])) keep.emplace_back(a, b);
    }
    return Graph::from_edges(g.order(), keep);
}

std::optional<PathSystem> find_disjoint_path_system(const Graph& g, std::span<const Vertex> u_side,
                                                    std::span<const Vertex> w_side,
                                                    const CycleSpec& spec) {
    require_dense_host(g, "find_disjoint_path_system");
    const Mask um = side_mask(g, u_side);
    const Mask wm = side_mask(g, w_side);
    if ((um & wm) != 0 || (um | wm) != g.all_mask() ||
        u_side.size() + w_side.size() != static_cast<std::size_t>(g.order())) {
        throw std::invalid_argument("U and W must partition the vertex set");
    }
    std::vector<Mask> rows(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row(v) & ((um >> v) & 1U ? g.all_mask() : um);
    auto paths = PathSystemSearch(std::move(rows), um, spec).run();
    if (!paths) return std::nullopt;
    PathSystem ps{std::move(*paths), {u_side.begin(), u_side.end()}, {w_side.begin(), w_side.end()}};
    if (!is_path_system(g, spec, ps)) throw std::logic_error("path system failed validation");
    return ps;
}

bool is_path_system(const Graph& g, const CycleSpec& spec, const PathSystem& ps) {
    if (static_cast<int>(ps.paths.size()) != spec.t()) return false;
    std::vector<char> in_u(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : ps.u_side) in_u[v] = 1;
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> orders;
    for (const auto& p : ps.paths) {
        if (p.empty() || !in_u[p.front()] || !in_u[p.back()]) return false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 0 || p[i] >= g.order() || used[p[i]]) return false;
            used[p[i]] = 1;
            if (i + 1 < p.size()) {
                if (!g.adjacent(p[i], p[i + 1])) return false;
                if (!in_u[p[i]] && !in_u[p[i + 1]]) return false;
            }
        }
        orders.push_back(static_cast<int>(p.size()));
    }
    std::vector<int> want;
    for (int k : spec.ks()) want.push_back(2 * k - 1);
    std::sort(orders.begin(), orders.end());
    return orders == want;
}

bool contains_minor(const Graph& g, const Graph& h) {
    if (h.order() > kMinorPatternLimit || g.order() > kMinorHostLimit) {
        throw std::invalid_argument("contains_minor supports |V(h)| <= 8 and |V(g)| <= 12");
    }
    if (h.order() > g.order()) return false;
    // Every minor is a subgraph of some contraction of g, so it suffices to
    // walk contraction states (deduplicated up to isomorphism) and test each
    // for h as a subgraph.
    std::unordered_set<std::string> seen{canonical_form(g)};
    std::vector<Graph> stack{g};
    while (!stack.empty()) {
        Graph s = std::move(stack.back());
        stack.pop_back();
        if (s.order() < h.order() || s.size() < h.size()) continue;
        if (contains_subgraph(s, h)) return true;
        if (s.order() == h.order()) continue;
        for (auto [u, v] : s.edges()) {
            Graph c = s.contracted(u, v);
            if (c.size() < h.size()) continue;
            if (seen.insert(canonical_form(c)).second) stack.push_back(std::move(c));
        }
    }
    return false;
}

} // namespace spexlab
