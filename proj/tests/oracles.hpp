#pragma once

// Independent reference implementations used only by the tests. None of them
// call into the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spexlab/graph.hpp"

namespace oracle {

using spexlab::Graph;

inline std::vector<std::vector<int>> matrix(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

/// graph6 written straight from the format description: N(n) then the upper
/// triangle column by column, packed six bits per byte, plus 63.
inline std::string graph6(const Graph& g) {
    const long n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        for (int sh = 12; sh >= 0; sh -= 6) out += static_cast<char>(((n >> sh) & 63) + 63);
    } else {
        out += "~~";
        for (int sh = 30; sh >= 0; sh -= 6) out += static_cast<char>(((n >> sh) & 63) + 63);
    }
    std::vector<int> bits;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    }
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + bits[i + b];
        out += static_cast<char>(v + 63);
    }
    return out;
}

/// Lexicographically smallest adjacency string over all n! relabelings.
inline std::string brute_canonical(const Graph& g) {
    const int n = g.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    const auto a = matrix(g);
    std::string best;
    do {
        std::string s;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) s += static_cast<char>('0' + a[p[i]][p[j]]);
        }
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && brute_canonical(a) == brute_canonical(b);
}

/// Non-induced subgraph test by trying every injective map.
inline bool brute_contains(const Graph& g, const Graph& h) {
    const int n = g.order();
    const int k = h.order();
    if (k > n) return false;
    if (h.size() > g.size()) return false;
    const auto he = h.edges();
    std::vector<int> map(k, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (auto [x, y] : he) {
                int other = x == i ? y : (y == i ? x : -1);
                if (other >= 0 && other < i && !g.adjacent(v, map[other])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[v] = true;
            map[i] = v;
            if (self(self, i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Largest adjacency eigenvalue by a dense symmetric eigensolve.
inline double dense_lambda(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

/// Every labeled graph on n vertices, edge set indexed by bitmask.
inline Graph labeled(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if (mask >> bit & 1) g.add_edge(i, j);
        }
    }
    return g;
}

} // namespace oracle
