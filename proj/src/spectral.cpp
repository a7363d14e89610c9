#include "spexlab/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace spexlab {

namespace {

/// Adjacency of one connected component in compressed rows.
struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<int> targets;
    int n() const { return static_cast<int>(offsets.size()) - 1; }
};

Csr component_csr(const Graph& g, const std::vector<Vertex>& comp) {
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    Csr csr;
    csr.offsets.reserve(comp.size() + 1);
    csr.offsets.push_back(0);
    for (Vertex v : comp) {
        g.for_each_neighbor(v, [&](Vertex w) { csr.targets.push_back(local[w]); });
        csr.offsets.push_back(csr.targets.size());
    }
    return csr;
}

SpectralResult iterate(const Csr& a, double tol, long max_iter) {
    const int n = a.n();
    SpectralResult r;
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    std::vector<long double> ax(static_cast<std::size_t>(n), 0.0L);
    for (long it = 0;; ++it) {
        long double num = 0, den = 0;
        for (int v = 0; v < n; ++v) {
            long double s = 0;
            for (std::size_t e = a.offsets[v]; e < a.offsets[v + 1]; ++e) s += x[a.targets[e]];
            ax[v] = s;
            num += static_cast<long double>(x[v]) * s;
            den += static_cast<long double>(x[v]) * x[v];
        }
        const long double lambda = num / den;
        long double res = 0;
        for (int v = 0; v < n; ++v) res = std::max(res, std::abs(ax[v] - lambda * x[v]));
        r.lambda = static_cast<double>(lambda);
        r.residual = static_cast<double>(res);
        r.iterations = it;
        if (res <= tol) {
            r.converged = true;
            break;
        }
        if (it >= max_iter) break;
        double scale = 0;
        for (int v = 0; v < n; ++v) {
            x[v] = static_cast<double>(x[v] + ax[v]);
            scale = std::max(scale, x[v]);
        }
        for (double& xv : x) xv /= scale;
    }
    double top = *std::max_element(x.begin(), x.end());
    for (double& xv : x) xv /= top;
    r.perron = std::move(x);
    return r;
}

} // namespace

SpectralResult power_iteration(const Graph& g, double tol, long max_iter) {
    if (g.order() == 0) throw std::invalid_argument("power iteration needs a non-empty graph");
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    SpectralResult best;
    best.converged = true;
    long total = 0;
    bool have = false;
    std::vector<Vertex> best_comp;
    SpectralResult best_local;
    for (const auto& comp : g.components()) {
        SpectralResult local;
        if (comp.size() == 1) {
            local.lambda = 0;
            local.perron = {1.0};
            local.converged = true;
        } else {
            local = iterate(component_csr(g, comp), tol, max_iter);
        }
        total += local.iterations;
        best.converged = best.converged && local.converged;
        if (!have || local.lambda > best_local.lambda) {
            have = true;
            best_local = std::move(local);
            best_comp = comp;
        }
    }
    best.lambda = best_local.lambda;
    best.residual = best_local.residual;
    best.iterations = total;
    best.perron.assign(static_cast<std::size_t>(g.order()), 0.0);
    for (std::size_t i = 0; i < best_comp.size(); ++i) best.perron[best_comp[i]] = best_local.perron[i];
    return best;
}

double lambda_S_closed_form(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("lambda_S_closed_form requires 1 <= k <= n");
    const double km1 = k - 1.0;
    return (km1 + std::sqrt(km1 * km1 + 4.0 * k * (static_cast<double>(n) - k))) / 2.0;
}

QuotientMatrix quotient_matrix(const Graph& g, std::vector<std::vector<Vertex>> classes) {
    const int n = g.order();
    std::vector<int> cell(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].empty()) throw NotEquitable("empty cell in partition");
        for (Vertex v : classes[i]) {
            if (v < 0 || v >= n) throw NotEquitable("partition names a vertex outside the graph");
            if (cell[v] != -1) throw NotEquitable("cells overlap");
            cell[v] = static_cast<int>(i);
        }
    }
    if (std::find(cell.begin(), cell.end(), -1) != cell.end()) {
        throw NotEquitable("partition does not cover every vertex");
    }
    const std::size_t c = classes.size();
    QuotientMatrix q;
    q.matrix.assign(c, std::vector<long long>(c, 0));
    std::vector<long long> counts(c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t idx = 0; idx < classes[i].size(); ++idx) {
            std::fill(counts.begin(), counts.end(), 0);
            g.for_each_neighbor(classes[i][idx], [&](Vertex w) { ++counts[cell[w]]; });
            if (idx == 0) {
                q.matrix[i] = counts;
            } else if (counts != q.matrix[i]) {
                throw NotEquitable("partition is not equitable at cell " + std::to_string(i));
            }
        }
    }
    q.classes = std::move(classes);
    return q;
}

double quotient_spectral_radius(const Graph& g, std::vector<std::vector<Vertex>> classes) {
    QuotientMatrix q = quotient_matrix(g, std::move(classes));
    std::vector<std::vector<BigInt>> m(q.matrix.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (long long x : q.matrix[i]) m[i].emplace_back(x);
    }
    return largest_real_root(Polynomial::from_integers(characteristic_polynomial(m)));
}

double spectral_radius(const Graph& g, const std::vector<std::vector<Vertex>>& classes) {
    try {
        return quotient_spectral_radius(g, classes);
    } catch (const NotEquitable&) {
        return power_iteration(g).lambda;
    }
}

bool certified_lower_bound(const Graph& g, std::span<const double> y, double c) {
    if (static_cast<int>(y.size()) != g.order()) {
        throw std::invalid_argument("vector dimension does not match graph order");
    }
    bool nonzero = false;
    for (double v : y) {
        if (!std::isfinite(v) || v < 0) throw std::invalid_argument("vector must be finite and non-negative");
        nonzero = nonzero || v > 0;
    }
    if (!nonzero) throw std::invalid_argument("vector must be non-zero");
    if (!std::isfinite(c)) throw std::invalid_argument("bound must be finite");

    // Write every value as m * 2^e and scale to a common exponent so the
    // comparison runs on integers.
    auto split = [](double x, long long& m, int& e) {
        if (x == 0) {
            m = 0;
            e = 0;
            return;
        }
        double f = std::frexp(x, &e);
        m = static_cast<long long>(std::ldexp(f, 53));
        e -= 53;
    };
    std::vector<long long> mant(y.size());
    std::vector<int> expo(y.size());
    int emin = 0;
    bool first = true;
    for (std::size_t i = 0; i < y.size(); ++i) {
        split(y[i], mant[i], expo[i]);
        if (mant[i] != 0 && (first || expo[i] < emin)) {
            emin = expo[i];
            first = false;
        }
    }
    std::vector<BigInt> scaled(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        scaled[i] = mant[i] == 0 ? BigInt(0) : BigInt(mant[i]) << (expo[i] - emin);
    }
    long long mc = 0;
    int ec = 0;
    split(c, mc, ec);
    for (Vertex v = 0; v < g.order(); ++v) {
        BigInt lhs = 0;
        g.for_each_neighbor(v, [&](Vertex w) { lhs += scaled[w]; });
        BigInt rhs = BigInt(mc) * scaled[v];
        if (ec >= 0) {
            rhs <<= ec;
        } else {
            lhs <<= -ec;
        }
        if (lhs < rhs) return false;
    }
    return true;
}

LambdaBounds lambda_bounds(int n, const CycleSpec& spec) {
    if (n <= spec.kappa()) throw std::invalid_argument("lambda_bounds requires n > kappa");
    LambdaBounds b;
    b.lower = lambda_S_closed_form(n, spec.kappa());
    b.upper = std::sqrt(static_cast<double>(4 * spec.kappa() + spec.t()) * (n - 1.0));
    return b;
}

std::vector<BigInt> adjacency_characteristic_polynomial(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n), std::vector<BigInt>(n, 0));
    for (auto [u, v] : g.edges()) {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    return characteristic_polynomial(a);
}

namespace {

Polynomial adjacency_polynomial(const Graph& g) {
    if (g.order() == 0) return Polynomial({Rational(0), Rational(1)});
    return Polynomial::from_integers(adjacency_characteristic_polynomial(g));
}

int roots_in(const SturmChain& chain, const Rational& lo, const Rational& hi) {
    return chain.roots_above(lo) - chain.roots_above(hi);
}

} // namespace

std::strong_ordering exact_lambda_compare(const Graph& g1, const Graph& g2) {
    if (g1.order() > kExactCompareLimit || g2.order() > kExactCompareLimit) {
        double l1 = g1.order() ? power_iteration(g1).lambda : 0.0;
        double l2 = g2.order() ? power_iteration(g2).lambda : 0.0;
        if (std::abs(l1 - l2) <= 1e-9) return std::strong_ordering::equal;
        return l1 < l2 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    SturmChain c1(adjacency_polynomial(g1));
    SturmChain c2(adjacency_polynomial(g2));
    Polynomial common = gcd(c1.squarefree(), c2.squarefree());
    std::optional<SturmChain> cg;
    if (common.degree() >= 1) cg.emplace(common);
    RootInterval a = isolate_largest_root(c1);
    RootInterval b = isolate_largest_root(c2);
    while (true) {
        if (a.hi <= b.lo) return std::strong_ordering::less;
        if (b.hi <= a.lo) return std::strong_ordering::greater;
        if (cg) {
            const Rational lo = a.lo > b.lo ? a.lo : b.lo;
            const Rational hi = a.hi < b.hi ? a.hi : b.hi;
            if (lo < hi && roots_in(*cg, lo, hi) > 0) return std::strong_ordering::equal;
        }
        narrow_largest_root(c1, a);
        narrow_largest_root(c2, b);
    }
}

} // namespace spexlab
