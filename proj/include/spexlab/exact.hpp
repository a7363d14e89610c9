#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spexlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double (every double is a dyadic rational).
Rational exact_rational(double x);

/// Dense polynomial with rational coefficients, coeffs[i] multiplies x^i.
/// The zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial from_integers(const std::vector<BigInt>& coeffs);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const;
    int sign_at(const Rational& x) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial operator-() const;

    /// Quotient and remainder of Euclidean division; divisor must be non-zero.
    static void divide(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    friend Polynomial gcd(Polynomial a, Polynomial b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Characteristic polynomial det(xI - A) of a square integer matrix, by the
/// Faddeev-LeVerrier recurrence in exact integer arithmetic.
/// Returned coefficients are indexed by power of x.
std::vector<BigInt> characteristic_polynomial(const std::vector<std::vector<BigInt>>& a);

/// Sturm chain of the square-free part of a polynomial; counts distinct
/// real roots above any rational point.
class SturmChain {
public:
    explicit SturmChain(const Polynomial& p);

    const Polynomial& squarefree() const { return chain_.front(); }
    /// Number of distinct real roots strictly greater than x.
    int roots_above(const Rational& x) const;
    int root_count() const;
    /// Cauchy bound: every real root lies in (-bound, bound).
    Rational root_bound() const;

private:
    int variations_at(const Rational& x) const;
    int variations_at_infinity(bool positive) const;
    std::vector<Polynomial> chain_;
};

/// Half-open interval (lo, hi] holding the largest real root of a
/// polynomial and no other root. Shrink with `narrow`.
struct RootInterval {
    Rational lo;
    Rational hi;
    Rational width() const { return hi - lo; }
};

/// Isolates the largest real root; the polynomial must have a real root.
RootInterval isolate_largest_root(const SturmChain& chain);
/// Halves an isolating interval of the largest root in place.
void narrow_largest_root(const SturmChain& chain, RootInterval& iv);

/// Largest real root as a double, narrowed until the interval width is below
/// 2^-56 relative to its magnitude.
double largest_real_root(const Polynomial& p);

} // namespace spexlab
