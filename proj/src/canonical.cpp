#include "spexlab/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "spexlab/graph6.hpp"

namespace spexlab {

namespace {

using Rows = std::vector<std::uint64_t>;
using Colors = std::vector<int>;

int cell_count(const Colors& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

/// Refines an ordered partition until it is equitable. New cells are
/// ordered by (old cell, neighbor counts into every cell), so each old cell
/// is replaced in place by its ordered fragments.
void refine(const Rows& rows, Colors& colors) {
    const int n = static_cast<int>(rows.size());
    int k = cell_count(colors);
    std::vector<std::uint8_t> keys;
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> masks;
    while (true) {
        masks.assign(static_cast<std::size_t>(k), 0);
        for (int v = 0; v < n; ++v) masks[colors[v]] |= std::uint64_t{1} << v;
        const int width = k + 1;
        keys.assign(static_cast<std::size_t>(n) * width, 0);
        for (int v = 0; v < n; ++v) {
            std::uint8_t* key = &keys[static_cast<std::size_t>(v) * width];
            key[0] = static_cast<std::uint8_t>(colors[v]);
            for (int c = 0; c < k; ++c) {
                key[c + 1] = static_cast<std::uint8_t>(__builtin_popcountll(rows[v] & masks[c]));
            }
        }
        std::iota(idx.begin(), idx.end(), 0);
        auto cmp = [&](int a, int b) {
            return std::memcmp(&keys[static_cast<std::size_t>(a) * width],
                               &keys[static_cast<std::size_t>(b) * width], width) < 0;
        };
        std::sort(idx.begin(), idx.end(), cmp);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && cmp(idx[i - 1], idx[i])) ++next;
            colors[idx[i]] = next;
        }
        const int nk = n == 0 ? 0 : next + 1;
        if (nk == k) return;
        k = nk;
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : n_(g.order()), rows_(static_cast<std::size_t>(n_)) {
        for (int v = 0; v < n_; ++v) rows_[v] = g.row(v);
    }

    std::vector<Vertex> run() {
        Colors colors(static_cast<std::size_t>(n_), 0);
        std::vector<Vertex> prefix;
        search(colors, prefix);
        return best_lab_;
    }

private:
    Rows permuted(const std::vector<Vertex>& lab) const {
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
        Rows out(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t r = rows_[lab[i]];
            while (r) {
                out[i] |= std::uint64_t{1} << pos[__builtin_ctzll(r)];
                r &= r - 1;
            }
        }
        return out;
    }

    void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        std::vector<Vertex> sigma(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) sigma[from[i]] = to[i];
        autos_.push_back(std::move(sigma));
    }

    void leaf(const Colors& colors) {
        std::vector<Vertex> lab(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) lab[colors[v]] = v;
        Rows pr = permuted(lab);
        if (first_lab_.empty()) {
            first_lab_ = lab;
            first_rows_ = pr;
            best_lab_ = lab;
            best_rows_ = std::move(pr);
            return;
        }
        if (pr == first_rows_) {
            record_automorphism(first_lab_, lab);
        } else if (pr == best_rows_) {
            record_automorphism(best_lab_, lab);
        } else if (pr > best_rows_) {
            best_rows_ = std::move(pr);
            best_lab_ = std::move(lab);
        }
    }

    bool twins(Vertex a, Vertex b) const {
        const std::uint64_t ba = std::uint64_t{1} << a;
        const std::uint64_t bb = std::uint64_t{1} << b;
        return (rows_[a] & ~bb) == (rows_[b] & ~ba);
    }

    void search(Colors colors, std::vector<Vertex>& prefix) {
        refine(rows_, colors);
        const int k = cell_count(colors);
        if (k == n_) {
            leaf(colors);
            return;
        }
        // First non-singleton cell.
        std::vector<int> size(static_cast<std::size_t>(k), 0);
        for (int v = 0; v < n_; ++v) ++size[colors[v]];
        int target = 0;
        while (size[target] == 1) ++target;
        std::vector<Vertex> cell;
        for (int v = 0; v < n_; ++v) {
            if (colors[v] == target) cell.push_back(v);
        }

        std::vector<Vertex> tried;
        for (Vertex v : cell) {
            bool skip = false;
            for (Vertex u : tried) {
                if (twins(u, v)) {
                    skip = true;
                    break;
                }
            }
            if (!skip && !tried.empty() && !autos_.empty()) {
                UnionFind uf(n_);
                for (const auto& sigma : autos_) {
                    bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                             [&](Vertex p) { return sigma[p] == p; });
                    if (!fixes) continue;
                    for (int x = 0; x < n_; ++x) uf.unite(x, sigma[x]);
                }
                for (Vertex u : tried) {
                    if (uf.find(u) == uf.find(v)) {
                        skip = true;
                        break;
                    }
                }
            }
            if (skip) continue;
            Colors next = colors;
            for (int w = 0; w < n_; ++w) {
                if (next[w] > target || (next[w] == target && w != v)) ++next[w];
            }
            prefix.push_back(v);
            search(std::move(next), prefix);
            prefix.pop_back();
            tried.push_back(v);
        }
    }

    int n_;
    Rows rows_;
    std::vector<std::vector<Vertex>> autos_;
    std::vector<Vertex> first_lab_, best_lab_;
    Rows first_rows_, best_rows_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    if (!g.is_dense()) throw std::invalid_argument("canonical labeling requires n <= 64");
    CanonicalLabeling out;
    if (g.order() == 0) {
        out.graph = g;
        return out;
    }
    out.order = CanonSearch(g).run();
    std::vector<Vertex> perm(out.order.size());
    for (std::size_t i = 0; i < out.order.size(); ++i) perm[out.order[i]] = static_cast<Vertex>(i);
    out.graph = g.relabeled(perm);
    return out;
}

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_labeling(g).graph); }

std::vector<std::vector<Vertex>> equitable_refinement(const Graph& g) {
    if (!g.is_dense()) throw std::invalid_argument("equitable refinement requires n <= 64");
    Rows rows(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
    Colors colors(rows.size(), 0);
    refine(rows, colors);
    std::vector<std::vector<Vertex>> cells(static_cast<std::size_t>(cell_count(colors)));
    for (int v = 0; v < g.order(); ++v) cells[colors[v]].push_back(v);
    return cells;
}

} // namespace spexlab
