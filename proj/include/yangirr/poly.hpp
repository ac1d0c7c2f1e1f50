#pragma once

#include "yangirr/rational.hpp"

#include <string>
#include <vector>

namespace yangirr {

// Univariate polynomial over Q, coefficients low to high, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c);  // NOLINT: constant polynomial
    explicit Poly(std::vector<Rat> coeffs);

    static Poly x();
    // x + a
    static Poly linear(const Rat& a);
    // monic product of (x - r) over roots
    static Poly from_roots(const std::vector<Rat>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;
    Rat lead() const;

    Rat operator()(const Rat& t) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    // p(x + a)
    Poly shifted(const Rat& a) const;
    Poly derivative() const;

    // multiplicity of t as a root; -1 for the zero polynomial
    int order_at(const Rat& t) const;
    // exact division by (x - t)^k; requires order_at(t) >= k
    Poly deflate(const Rat& t, int k) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str(const char* var = "u") const;

private:
    void trim();
    std::vector<Rat> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
Poly operator*(Poly a, const Rat& s);

// quotient and remainder; b nonzero
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
// monic gcd (zero if both zero)
Poly gcd(Poly a, Poly b);

}  // namespace yangirr
