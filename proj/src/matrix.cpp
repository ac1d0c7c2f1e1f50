#include "yangirr/matrix.hpp"

#include <stdexcept>

namespace yangirr {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (sgn(x) != 0) return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec RatMatrix::column(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec RatMatrix::apply(const Vec& v) const {
    if (v.size() != c_) throw std::invalid_argument("apply: size mismatch");
    Vec out(r_);
    for (std::size_t i = 0; i < r_; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < c_; ++j)
            if (sgn(a_[i * c_ + j]) != 0 && sgn(v[j]) != 0) s += a_[i * c_ + j] * v[j];
        out[i] = s;
    }
    return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("+=: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("-=: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rat& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
RatMatrix operator*(RatMatrix a, const Rat& s) { return a *= s; }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("*: shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    Rat t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rat& y = b(k, j);
                if (sgn(y) == 0) continue;
                t = x * y;
                c(i, j) += t;
            }
        }
    return c;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rat& x = a(i, j);
            if (sgn(x) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (sgn(b(k, l)) != 0) c(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return c;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec c(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t k = 0; k < b.size(); ++k)
            if (sgn(b[k]) != 0) c[i * b.size() + k] = a[i] * b[k];
    }
    return c;
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = Rat(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::size_t rank(const RatMatrix& m) {
    // Bareiss elimination on integer-scaled rows: every intermediate entry
    // is a minor of the scaled matrix, so no fractions appear.
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class L = 1;
        for (std::size_t j = 0; j < C; ++j)
            if (sgn(m(i, j)) != 0) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (L / m(i, j).get_den());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::size_t rank_gauss_jordan(const RatMatrix& m) {
    RatMatrix t = m;
    return rref(t).size();
}

std::vector<Vec> kernel_basis(const RatMatrix& m) {
    RatMatrix t = m;
    auto piv = rref(t);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -t(k, f);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> image_basis(const RatMatrix& m) {
    RatMatrix t = m;
    auto piv = rref(t);
    std::vector<Vec> out;
    for (auto p : piv) out.push_back(m.column(p));
    return out;
}

Vec SpanBasis::reduce(const Vec& v) const {
    if (v.size() != len_) throw std::invalid_argument("SpanBasis: length mismatch");
    Vec w = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (sgn(w[piv_[k]]) == 0) continue;
        Rat f = w[piv_[k]];
        for (const auto& [j, x] : rows_[k]) w[j] -= f * x;
    }
    return w;
}

bool SpanBasis::add(const Vec& v) {
    Vec w = reduce(v);
    std::size_t p = 0;
    while (p < len_ && sgn(w[p]) == 0) ++p;
    if (p == len_) return false;
    Rat inv = Rat(1) / w[p];
    Sparse s;
    for (std::size_t j = 0; j < len_; ++j)
        if (sgn(w[j]) != 0) s.emplace_back(static_cast<std::uint32_t>(j), w[j] * inv);
    // clear the new pivot from existing rows
    for (auto& row : rows_) {
        Rat f = 0;
        for (const auto& [j, x] : row)
            if (j == p) { f = x; break; }
        if (sgn(f) == 0) continue;
        Vec dense(len_);
        for (const auto& [j, x] : row) dense[j] = x;
        for (const auto& [j, x] : s) dense[j] -= f * x;
        row.clear();
        for (std::size_t j = 0; j < len_; ++j)
            if (sgn(dense[j]) != 0) row.emplace_back(static_cast<std::uint32_t>(j), dense[j]);
    }
    rows_.push_back(std::move(s));
    piv_.push_back(p);
    return true;
}

Vec SpanBasis::coords(const Vec& v) const {
    Vec c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[piv_[k]];
    return c;
}

Vec SpanBasis::row(std::size_t k) const {
    Vec v(len_);
    for (const auto& [j, x] : rows_[k]) v[j] = x;
    return v;
}

}  // namespace yangirr
