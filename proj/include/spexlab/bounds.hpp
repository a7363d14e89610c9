#pragma once

#include <string>
#include <vector>

#include "spexlab/constructions.hpp"
#include "spexlab/exact.hpp"

namespace spexlab {

/// Bipartite H with sides of sizes a and b, every vertex of side B having
/// degree at most r, against a host on n vertices of average degree d.
struct BoundQuery {
    long long a = 1;
    long long b = 1;
    long long r = 1;
    long long n = 1;
    Rational d = 0;
};

/// d^r / n^(r-1) - C(n, r) ((a + b - 1) / n)^r > a - 1, decided exactly.
bool alon_condition(const BoundQuery& q);

/// 1/2 (kappa + (2 kappa + t)^2 / 2)^(1/2) n^(3/2), without the subtracted
/// O(1/n) correction.
double aks_bound(int n, const CycleSpec& spec);
/// Exact test of edges <= aks_bound(n, spec).
bool within_aks_bound(long long edges, int n, const CycleSpec& spec);

/// (ell - 2) n / 2: edge bound for graphs without a path on ell vertices.
Rational erdos_gallai_bound(int n, int ell);
/// (4 kappa + t)(n - 1) n
Rational degree_square_bound(int n, const CycleSpec& spec);
/// (4 kappa + t - 2)(nU + nTotal) / 2
Rational bipartition_edge_bound(int n_u, int n_total, const CycleSpec& spec);

/// Fixed-point rendering with `digits` decimals, rounded half away from zero.
/// Integers print without a fractional part.
std::string to_decimal(const Rational& x, int digits = 6);

/// CSV table over the grid, one row per (spec, n), with a trailing comment
/// line describing the loosened edge bound.
std::string bounds_csv(const std::vector<int>& ns, const std::vector<CycleSpec>& specs);

} // namespace spexlab
