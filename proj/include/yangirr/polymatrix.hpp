#pragma once

#include "yangirr/matrix.hpp"
#include "yangirr/poly.hpp"

#include <vector>

namespace yangirr {

// Matrix polynomial sum_d C_d x^d.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols) {}
    static PolyMatrix constant(const RatMatrix& m);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }

    const std::vector<RatMatrix>& coeffs() const { return coef_; }
    RatMatrix coeff(int d) const;
    // accumulate m * x^d
    void add_term(int d, const RatMatrix& m);

    RatMatrix operator()(const Rat& t) const;
    Poly entry(std::size_t i, std::size_t j) const;

    PolyMatrix shifted(const Rat& a) const;  // P(x + a)
    PolyMatrix transpose() const;

    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    PolyMatrix& operator*=(const Rat& s);

    bool operator==(const PolyMatrix& o) const;

    void trim();

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<RatMatrix> coef_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const Poly& p, const PolyMatrix& m);
PolyMatrix operator*(const PolyMatrix& m, const RatMatrix& c);
PolyMatrix operator*(const RatMatrix& c, const PolyMatrix& m);
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

// Entrywise numerator / den with a scalar denominator polynomial.
struct RatFnMatrix {
    PolyMatrix num;
    Poly den;

    RatMatrix operator()(const Rat& t) const;
    // exact equality as rational functions (cross multiplication)
    bool equals(const RatFnMatrix& o) const;
};

struct LaurentTerm {
    int order = 0;
    RatMatrix coeff;
};

// Leading term of the Laurent expansion at x = point.
LaurentTerm laurent_leading(const RatFnMatrix& m, const Rat& point);

}  // namespace yangirr
