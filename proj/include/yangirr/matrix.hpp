#pragma once

#include "yangirr/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace yangirr {

// Dense row-major matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<Rat>& data() const { return a_; }
    std::vector<Rat>& data() { return a_; }

    bool is_zero() const;
    bool is_square() const { return r_ == c_; }
    RatMatrix transpose() const;
    Vec column(std::size_t j) const;
    Vec apply(const Vec& v) const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rat& s);

    bool operator==(const RatMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(RatMatrix a, const Rat& s);
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
Vec kron(const Vec& a, const Vec& b);

// Fraction-free (Bareiss) rank.
std::size_t rank(const RatMatrix& m);
// Same quantity via Gauss-Jordan over Q; kept as a cross-check.
std::size_t rank_gauss_jordan(const RatMatrix& m);
std::vector<Vec> kernel_basis(const RatMatrix& m);
// Basis of the column space, taken from the pivot columns of m.
std::vector<Vec> image_basis(const RatMatrix& m);
// Reduced row echelon form, returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

// Incrementally built span in reduced form: every stored row has a 1 at its
// pivot and 0 at every other row's pivot, so coordinates are pivot entries.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t len) : len_(len) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t length() const { return len_; }

    // Returns true if v was independent and got added.
    bool add(const Vec& v);
    // Residual of v modulo the span.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const { return is_zero(reduce(v)); }
    // Coordinates of v; v must lie in the span.
    Vec coords(const Vec& v) const;
    Vec row(std::size_t k) const;
    std::size_t pivot(std::size_t k) const { return piv_[k]; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

private:
    using Sparse = std::vector<std::pair<std::uint32_t, Rat>>;
    std::size_t len_;
    std::vector<Sparse> rows_;
    std::vector<std::size_t> piv_;
};

}  // namespace yangirr
