#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

#include "spexlab/constructions.hpp"
#include "spexlab/exact.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

struct SpectralResult {
    double lambda = 0.0;
    /// Non-negative, maximum entry exactly 1.
    std::vector<double> perron;
    /// max_v |(A x)_v - lambda x_v|
    double residual = 0.0;
    long iterations = 0;
    bool converged = false;
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr long kDefaultMaxIterations = 1'000'000;

/// Shifted power iteration x <- (A + I)x / ||(A + I)x||_inf from the all-ones
/// vector, with lambda reported as the Rayleigh quotient of A. Disconnected
/// graphs are solved per component; the winning component carries the vector
/// and all other entries are zero. When max_iter is exhausted the best
/// estimate is returned with converged = false.
SpectralResult power_iteration(const Graph& g, double tol = kDefaultTolerance,
                               long max_iter = kDefaultMaxIterations);

/// Spectral radius of K_k join (n-k)K_1.
double lambda_S_closed_form(int n, int k);

class NotEquitable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct QuotientMatrix {
    std::vector<std::vector<Vertex>> classes;
    /// entry (i, j) = neighbors in cell j of any vertex of cell i
    std::vector<std::vector<long long>> matrix;
};

/// Validates that `classes` partitions V(g) equitably and builds the
/// quotient. Throws NotEquitable otherwise.
QuotientMatrix quotient_matrix(const Graph& g, std::vector<std::vector<Vertex>> classes);

/// Largest eigenvalue of the quotient matrix, located by Sturm bisection on
/// its exact characteristic polynomial. Throws NotEquitable.
double quotient_spectral_radius(const Graph& g, std::vector<std::vector<Vertex>> classes);

/// Quotient route when the partition is equitable, power iteration otherwise.
double spectral_radius(const Graph& g, const std::vector<std::vector<Vertex>>& classes);

/// True iff A y >= c y entrywise, decided in exact arithmetic on the binary
/// values of y and c. A true answer certifies lambda(g) >= c.
bool certified_lower_bound(const Graph& g, std::span<const double> y, double c);

struct LambdaBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// lower = lambda_S_closed_form(n, kappa), upper = sqrt((4 kappa + t)(n - 1)).
LambdaBounds lambda_bounds(int n, const CycleSpec& spec);

/// Integer characteristic polynomial of the adjacency matrix.
std::vector<BigInt> adjacency_characteristic_polynomial(const Graph& g);

/// Exact comparison of spectral radii for graphs on at most 12 vertices;
/// larger inputs fall back to power iteration with ties at 1e-9.
std::strong_ordering exact_lambda_compare(const Graph& g1, const Graph& g2);

inline constexpr int kExactCompareLimit = 12;

} // namespace spexlab
