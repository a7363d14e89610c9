#include "spexlab/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "spexlab/spectral.hpp"

namespace spexlab {

namespace {

BigInt binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    BigInt out = 1;
    for (long long i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

Rational rpow(const Rational& x, long long e) {
    Rational out = 1;
    for (long long i = 0; i < e; ++i) out *= x;
    return out;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

} // namespace

bool alon_condition(const BoundQuery& q) {
    if (q.a < 1 || q.b < 1 || q.r < 1 || q.n < 1) throw std::invalid_argument("a, b, r, n must be positive");
    if (q.d < 0 || q.d > q.n - 1) throw std::invalid_argument("average degree must lie in [0, n-1]");
    const Rational lhs = rpow(q.d, q.r) / rpow(Rational(q.n), q.r - 1) -
                         Rational(binomial(q.n, q.r)) * rpow(Rational(q.a + q.b - 1, q.n), q.r);
    return lhs > q.a - 1;
}

double aks_bound(int n, const CycleSpec& spec) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const double kappa = spec.kappa();
    const double s = 2.0 * kappa + spec.t();
    return 0.5 * std::sqrt(kappa + s * s / 2.0) * std::pow(static_cast<double>(n), 1.5);
}

bool within_aks_bound(long long edges, int n, const CycleSpec& spec) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    // e <= 1/2 sqrt(X) n^(3/2)  <=>  8 e^2 <= (2 kappa + (2 kappa + t)^2) n^3
    const BigInt s = 2 * spec.kappa() + spec.t();
    const BigInt lhs = BigInt(8) * edges * edges;
    const BigInt nn = n;
    return edges <= 0 || lhs <= (2 * spec.kappa() + s * s) * nn * nn * nn;
}

Rational erdos_gallai_bound(int n, int ell) {
    if (ell < 2) throw std::invalid_argument("path order must be at least 2");
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    return Rational(static_cast<long long>(ell - 2) * n, 2);
}

Rational degree_square_bound(int n, const CycleSpec& spec) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return Rational(BigInt(4 * spec.kappa() + spec.t()) * (n - 1) * n);
}

Rational bipartition_edge_bound(int n_u, int n_total, const CycleSpec& spec) {
    if (n_u < 0 || n_u > n_total) throw std::invalid_argument("need 0 <= nU <= nTotal");
    return Rational(BigInt(4 * spec.kappa() + spec.t() - 2) * (n_u + n_total), 2);
}

std::string to_decimal(const Rational& x, int digits) {
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    if (den == 1) return num.str();
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt mag = abs(num) * scale;
    BigInt q = mag / den;
    if ((mag % den) * 2 >= den) ++q;
    std::string body = q.str();
    if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    if (digits > 0) body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    return (num < 0 ? "-" : "") + body;
}

std::string bounds_csv(const std::vector<int>& ns, const std::vector<CycleSpec>& specs) {
    std::ostringstream out;
    out << "spec,kappa,t,n,aks_bound,degree_square_bound,path_order,erdos_gallai_bound,"
           "lambda_lower,lambda_upper\n";
    for (const auto& spec : specs) {
        const int path_order = 4 * spec.kappa() + spec.t();
        for (int n : ns) {
            out << '"' << spec.to_string() << "\"," << spec.kappa() << ',' << spec.t() << ',' << n << ','
                << format_double(aks_bound(n, spec)) << ',' << to_decimal(degree_square_bound(n, spec)) << ','
                << path_order << ',' << to_decimal(erdos_gallai_bound(n, path_order)) << ',';
            if (n > spec.kappa()) {
                LambdaBounds lb = lambda_bounds(n, spec);
                out << format_double(lb.lower) << ',' << format_double(lb.upper);
            } else {
                out << ',';
            }
            out << '\n';
        }
    }
    out << "# aks_bound drops the subtracted O(1/n) term, so it is slightly larger than the stated bound\n";
    return out.str();
}

} // namespace spexlab
