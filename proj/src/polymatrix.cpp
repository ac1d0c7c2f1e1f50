#include "yangirr/polymatrix.hpp"
#include "yangirr/errors.hpp"

#include <stdexcept>

namespace yangirr {

PolyMatrix PolyMatrix::constant(const RatMatrix& m) {
    PolyMatrix p(m.rows(), m.cols());
    p.add_term(0, m);
    return p;
}

RatMatrix PolyMatrix::coeff(int d) const {
    if (d < 0 || d > degree()) return RatMatrix(r_, c_);
    return coef_[d];
}

void PolyMatrix::add_term(int d, const RatMatrix& m) {
    if (m.rows() != r_ || m.cols() != c_) throw std::invalid_argument("add_term: shape mismatch");
    while (static_cast<int>(coef_.size()) <= d) coef_.emplace_back(r_, c_);
    coef_[d] += m;
    trim();
}

void PolyMatrix::trim() {
    while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

RatMatrix PolyMatrix::operator()(const Rat& t) const {
    RatMatrix acc(r_, c_);
    for (int d = degree(); d >= 0; --d) {
        acc *= t;
        acc += coef_[d];
    }
    return acc;
}

Poly PolyMatrix::entry(std::size_t i, std::size_t j) const {
    std::vector<Rat> c(coef_.size());
    for (std::size_t d = 0; d < coef_.size(); ++d) c[d] = coef_[d](i, j);
    return Poly(std::move(c));
}

PolyMatrix PolyMatrix::shifted(const Rat& a) const {
    // sum_d C_d (x+a)^d = sum_e x^e sum_{d>=e} binom(d,e) a^(d-e) C_d
    PolyMatrix out(r_, c_);
    int D = degree();
    if (D < 0) return out;
    if (sgn(a) == 0) return *this;
    std::vector<std::vector<mpz_class>> binom(D + 1, std::vector<mpz_class>(D + 1));
    for (int n = 0; n <= D; ++n) {
        binom[n][0] = 1;
        for (int k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : mpz_class(0));
    }
    std::vector<Rat> apow(D + 1);
    apow[0] = 1;
    for (int k = 1; k <= D; ++k) apow[k] = apow[k - 1] * a;
    for (int e = 0; e <= D; ++e) {
        RatMatrix m(r_, c_);
        for (int d = e; d <= D; ++d) {
            Rat f = apow[d - e] * Rat(binom[d][e]);
            m += coef_[d] * f;
        }
        out.add_term(e, m);
    }
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(c_, r_);
    for (std::size_t d = 0; d < coef_.size(); ++d) t.add_term(static_cast<int>(d), coef_[d].transpose());
    return t;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    for (std::size_t d = 0; d < o.coef_.size(); ++d) add_term(static_cast<int>(d), o.coef_[d]);
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    for (std::size_t d = 0; d < o.coef_.size(); ++d) add_term(static_cast<int>(d), o.coef_[d] * Rat(-1));
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Rat& s) {
    for (auto& m : coef_) m *= s;
    trim();
    return *this;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && coef_ == o.coef_;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("PolyMatrix *: shape mismatch");
    PolyMatrix c(a.rows(), b.cols());
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) c.add_term(i + j, a.coeffs()[i] * b.coeffs()[j]);
    return c;
}

PolyMatrix operator*(const Poly& p, const PolyMatrix& m) {
    PolyMatrix c(m.rows(), m.cols());
    for (int i = 0; i <= p.degree(); ++i) {
        if (sgn(p.coeffs()[i]) == 0) continue;
        for (int j = 0; j <= m.degree(); ++j) c.add_term(i + j, m.coeffs()[j] * p.coeffs()[i]);
    }
    return c;
}

PolyMatrix operator*(const PolyMatrix& m, const RatMatrix& c) {
    PolyMatrix out(m.rows(), c.cols());
    for (int j = 0; j <= m.degree(); ++j) out.add_term(j, m.coeffs()[j] * c);
    return out;
}

PolyMatrix operator*(const RatMatrix& c, const PolyMatrix& m) {
    PolyMatrix out(c.rows(), m.cols());
    for (int j = 0; j <= m.degree(); ++j) out.add_term(j, c * m.coeffs()[j]);
    return out;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) c.add_term(i + j, kron(a.coeffs()[i], b.coeffs()[j]));
    return c;
}

RatMatrix RatFnMatrix::operator()(const Rat& t) const {
    Rat d = den(t);
    if (sgn(d) == 0) throw Error(ErrorKind::InvalidInput, "evaluation at a pole " + to_string(t));
    RatMatrix m = num(t);
    m *= Rat(1) / d;
    return m;
}

bool RatFnMatrix::equals(const RatFnMatrix& o) const {
    PolyMatrix lhs = o.den * num;
    PolyMatrix rhs = den * o.num;
    return lhs == rhs;
}

LaurentTerm laurent_leading(const RatFnMatrix& m, const Rat& point) {
    if (m.den.is_zero()) throw Error(ErrorKind::InvalidInput, "zero denominator");
    if (m.num.is_zero()) throw Error(ErrorKind::IdenticallyZero, "numerator vanishes identically");
    PolyMatrix n = m.num.shifted(point);
    int on = 0;
    while (n.coeffs()[on].is_zero()) ++on;
    int od = m.den.order_at(point);
    Poly ds = m.den.shifted(point);
    LaurentTerm t;
    t.order = on - od;
    t.coeff = n.coeffs()[on];
    t.coeff *= Rat(1) / ds.coeffs()[od];
    return t;
}

}  // namespace yangirr
