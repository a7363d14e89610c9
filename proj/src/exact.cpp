#include "spexlab/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace spexlab {

Rational exact_rational(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
    if (x == 0.0) return Rational(0);
    int e = 0;
    double m = std::frexp(x, &e);
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    e -= 53;
    Rational r{BigInt(mant)};
    if (e > 0) {
        r *= Rational(BigInt(1) << e);
    } else if (e < 0) {
        r /= Rational(BigInt(1) << -e);
    }
    return r;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from_integers(const std::vector<BigInt>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& x : coeffs) c.emplace_back(x);
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int Polynomial::sign_at(const Rational& x) const {
    Rational v = (*this)(x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    std::vector<Rational> c = c_;
    Rational lead = c.back();
    for (auto& x : c) x /= lead;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
}

void Polynomial::divide(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    std::vector<Rational> quo(rem.size() >= b.c_.size() ? rem.size() - b.c_.size() + 1 : 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] / b.c_.back();
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    q = Polynomial(std::move(quo));
    r = Polynomial(std::move(rem));
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        Polynomial::divide(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<BigInt> characteristic_polynomial(const std::vector<std::vector<BigInt>>& a) {
    const std::size_t n = a.size();
    for (const auto& row : a) {
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    }
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    std::vector<std::vector<BigInt>> am(n, std::vector<BigInt>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I, using am = A M_{k-1} from the previous step.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] = am[i][j];
            m[i][i] += c[n - k + 1];
        }
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                BigInt s = 0;
                for (std::size_t l = 0; l < n; ++l) {
                    if (a[i][l] != 0) s += a[i][l] * m[l][j];
                }
                am[i][j] = std::move(s);
            }
            trace += am[i][i];
        }
        c[n - k] = -trace / static_cast<long long>(k);
    }
    return c;
}

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no Sturm chain");
    Polynomial g = gcd(p, p.derivative());
    Polynomial sf, rem;
    Polynomial::divide(p, g, sf, rem);
    chain_.push_back(sf);
    if (sf.degree() < 1) return;
    chain_.push_back(sf.derivative());
    while (true) {
        Polynomial q, r;
        Polynomial::divide(chain_[chain_.size() - 2], chain_.back(), q, r);
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int count = 0;
    int prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::variations_at_infinity(bool positive) const {
    int count = 0;
    int prev = 0;
    for (const auto& q : chain_) {
        int s = q.leading() > 0 ? 1 : -1;
        if (!positive && q.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::roots_above(const Rational& x) const {
    return variations_at(x) - variations_at_infinity(true);
}

int SturmChain::root_count() const {
    return variations_at_infinity(false) - variations_at_infinity(true);
}

Rational SturmChain::root_bound() const {
    const auto& c = squarefree().coeffs();
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Rational r = abs(c[i] / c.back());
        if (r > m) m = r;
    }
    return m + 1;
}

RootInterval isolate_largest_root(const SturmChain& chain) {
    if (chain.root_count() == 0) throw std::domain_error("polynomial has no real root");
    RootInterval iv{-chain.root_bound(), chain.root_bound()};
    while (chain.roots_above(iv.lo) > 1) narrow_largest_root(chain, iv);
    return iv;
}

void narrow_largest_root(const SturmChain& chain, RootInterval& iv) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (chain.roots_above(mid) >= 1) {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
}

double largest_real_root(const Polynomial& p) {
    SturmChain chain(p);
    RootInterval iv = isolate_largest_root(chain);
    while (true) {
        Rational scale = abs(iv.hi) > 1 ? Rational(abs(iv.hi)) : Rational(1);
        if (iv.width() * (BigInt(1) << 56) <= scale) break;
        narrow_largest_root(chain, iv);
    }
    if (chain.squarefree().sign_at(iv.hi) == 0) return static_cast<double>(iv.hi);
    return static_cast<double>(Rational((iv.lo + iv.hi) / 2));
}

} // namespace spexlab
