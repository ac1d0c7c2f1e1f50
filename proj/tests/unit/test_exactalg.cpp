#include "oracles.hpp"
#include "yangirr/closure.hpp"
#include "yangirr/eigen.hpp"
#include "yangirr/errors.hpp"
#include "yangirr/polymatrix.hpp"
#include "yangirr/yangian.hpp"

#include <doctest.h>

#include <random>

using namespace yangirr;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int spread) {
    std::uniform_int_distribution<int> dist(-spread, spread);
    RatMatrix m(r, c);
    for (auto& x : m.data()) x = oracle::frac(dist(rng), 1 + (dist(rng) & 1));
    return m;
}

// rank-k product of random factors
RatMatrix random_rank(std::mt19937& rng, std::size_t n, std::size_t k) {
    if (k == 0) return RatMatrix(n, n);
    return random_matrix(rng, n, k, 4) * random_matrix(rng, k, n, 4);
}

}  // namespace

TEST_CASE("rationals parse and print") {
    CHECK(parse_rat("3") == 3);
    CHECK(parse_rat("-7/14") == oracle::frac(-1, 2));
    CHECK(to_string(oracle::frac(4, 6)) == "2/3");
    CHECK(to_string(Rat(-5)) == "-5");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    const Poly p = Poly::from_roots({1, 2, 2});
    CHECK(p.degree() == 3);
    CHECK(p(2) == 0);
    CHECK(p.order_at(2) == 2);
    CHECK(p.order_at(1) == 1);
    CHECK(p.order_at(0) == 0);
    CHECK(p.deflate(2, 2) == Poly::linear(-1));
    CHECK(Poly().order_at(0) == -1);

    const Poly q = Poly::linear(3) * Poly::linear(-1);
    for (int t = -3; t <= 3; ++t) CHECK(q.shifted(5)(t) == q(t + 5));
    CHECK(gcd(p, Poly::linear(-2) * Poly::linear(7)) == Poly::linear(-2));

    Poly quo, rem;
    divmod(p, q, quo, rem);
    CHECK(quo * q + rem == p);
    CHECK(rem.degree() < q.degree());
    CHECK(Poly(std::vector<Rat>{1, 0, 3}).derivative() == Poly(std::vector<Rat>{0, 6}));
}

TEST_CASE("rank of trivial matrices") {
    CHECK(rank(RatMatrix::identity(5)) == 5);
    CHECK(kernel_basis(RatMatrix::identity(5)).empty());
    CHECK(rank(RatMatrix(4, 3)) == 0);
    CHECK(kernel_basis(RatMatrix(4, 3)).size() == 3);
}

TEST_CASE("Bareiss rank agrees with Gauss-Jordan on random matrices") {
    std::mt19937 rng(20261017);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const std::size_t k = trial % (n + 1);
        RatMatrix m = random_rank(rng, n, k);
        CHECK(rank(m) == rank_gauss_jordan(m));
        CHECK(rank(m) <= k);
        const auto ker = kernel_basis(m);
        CHECK(ker.size() == n - rank(m));
        for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
        CHECK(image_basis(m).size() == rank(m));
        RatMatrix r = random_matrix(rng, n, n + 2, 3);
        CHECK(rank(r) == rank_gauss_jordan(r));
        CHECK(rank(r) == rank(r.transpose()));
    }
}

TEST_CASE("span basis coordinates") {
    SpanBasis b(4);
    CHECK(b.add({1, 2, 0, 1}));
    CHECK(b.add({0, 1, 1, 0}));
    CHECK_FALSE(b.add({1, 3, 1, 1}));
    CHECK(b.dim() == 2);
    const Vec v = {2, 7, 3, 2};
    REQUIRE(b.contains(v));
    const Vec c = b.coords(v);
    Vec back(4);
    for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t i = 0; i < 4; ++i) back[i] += c[k] * b.row(k)[i];
    CHECK(back == v);
    CHECK_FALSE(b.contains({0, 0, 0, 1}));
}

TEST_CASE("charpoly against permutation-expansion determinant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const RatMatrix m = random_matrix(rng, 4, 4, 5);
        const Poly cp = charpoly(m);
        for (int t = -2; t <= 2; ++t) {
            RatMatrix shifted = RatMatrix::identity(4) * Rat(t) - m;
            CHECK(cp(t) == oracle::det(shifted));
        }
    }
}

TEST_CASE("rational roots") {
    CHECK(rational_roots(Poly::from_roots({oracle::frac(1, 3), -2, -2, 5})) == std::vector<Rat>{-2, oracle::frac(1, 3), 5});
    // x^2 - 2 has no rational roots
    CHECK(rational_roots(Poly(std::vector<Rat>{-2, 0, 1})).empty());
    CHECK(rational_roots(Poly(std::vector<Rat>{-2, 0, 1}) * Poly::linear(oracle::frac(-3, 7))) == std::vector<Rat>{oracle::frac(3, 7)});
}

TEST_CASE("polynomial matrices") {
    PolyMatrix a(2, 2);
    RatMatrix c0 = RatMatrix::identity(2), c1(2, 2);
    c1(0, 1) = 1;
    a.add_term(0, c0);
    a.add_term(1, c1);
    for (int t = -2; t <= 2; ++t) {
        CHECK(a.shifted(3)(t) == a(t + 3));
        CHECK((a * a)(t) == a(t) * a(t));
        CHECK(kron(a, a)(t) == kron(a(t), a(t)));
        CHECK(a.transpose()(t) == a(t).transpose());
    }
    CHECK(a.entry(0, 1) == Poly::x());
}

TEST_CASE("Laurent leading term examples") {
    const RatMatrix m = oracle::unit(2, 0, 1) + RatMatrix::identity(2) * Rat(2);
    const auto constant = laurent_leading({PolyMatrix::constant(m), Poly(1)}, 0);
    CHECK(constant.order == 0);
    CHECK(constant.coeff == m);

    const auto pole = laurent_leading({PolyMatrix::constant(RatMatrix::identity(3)), Poly::x()}, 0);
    CHECK(pole.order == -1);
    CHECK(pole.coeff == RatMatrix::identity(3));

    // R(u, v) = ((u - v) id + P)/(u - v) in u at u = v: residue P. In v the
    // residue is -P since u - v = -(v - u).
    const Rat v = oracle::frac(2, 3);
    const RatFnMatrix r{yang_r_cleared(2, v), Poly::linear(-v)};
    const auto at_u = laurent_leading(r, v);
    CHECK(at_u.order == -1);
    CHECK(at_u.coeff == flip(2));
}

TEST_CASE("Laurent leading term matches the limit near the point") {
    // m(z) = (B (z - 1) + C (z - 1)^2) / ((z - 1)^2 (z + 2)) at z = 1
    std::mt19937 rng(3);
    const RatMatrix B = random_matrix(rng, 3, 3, 4), C = random_matrix(rng, 3, 3, 4);
    PolyMatrix num(3, 3);
    num.add_term(0, B * Rat(-1));
    num.add_term(1, B);  // B (z - 1)
    num.add_term(2, C);
    num.add_term(1, C * Rat(-2));
    num.add_term(0, C);  // + C (z - 1)^2
    const Poly den = Poly::from_roots({1, 1, -2});
    const RatFnMatrix f{num, den};
    const auto lt = laurent_leading(f, 1);
    CHECK(lt.order == -1);
    Rat prev_err = -1;
    for (int e = 2; e <= 6; e += 2) {
        Rat step = 1;
        for (int i = 0; i < e; ++i) step /= 10;
        RatMatrix scaled = f(1 + step) * step;  // times (z - 1)^{-order}
        RatMatrix diff = scaled - lt.coeff;
        Rat err = 0;
        for (const auto& x : diff.data()) err = std::max(err, Rat(abs(x)));
        if (prev_err >= 0) CHECK(err < prev_err);
        CHECK(err < 100 * step);
        prev_err = err;
    }
}

TEST_CASE("algebra closure examples") {
    CHECK(algebra_closure_dim({RatMatrix::identity(3)}, 9) == 1);
    std::vector<RatMatrix> units;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) units.push_back(oracle::unit(3, a, b));
    CHECK(algebra_closure_dim(units, 9) == 9);
    // upper triangular 2x2
    CHECK(algebra_closure_dim({oracle::unit(2, 0, 1), oracle::unit(2, 0, 0)}, 4) == 3);
    // a single shift on 3 dims generates span(1, S, S^2)
    CHECK(algebra_closure_dim({oracle::unit(3, 0, 1) + oracle::unit(3, 1, 2)}, 9) == 3);

    const GeneratorSet g = module_action({{{1, 0}, {}, 2, 0}, {{1, 0}, {}, 2, oracle::frac(1, 3)}});
    CHECK(algebra_closure_dim(g.coefficients(), 16) == 16);
}

TEST_CASE("closure: serial and parallel, modular and rational agree") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t d = 3 + trial % 4;
        std::vector<RatMatrix> gens;
        // block upper triangular pattern makes some cases reducible
        for (int k = 0; k < 2; ++k) {
            RatMatrix m = random_matrix(rng, d, d, 3);
            if (trial % 2)
                for (std::size_t i = d / 2; i < d; ++i)
                    for (std::size_t j = 0; j < d / 2; ++j) m(i, j) = 0;
            gens.push_back(m);
        }
        ClosureOptions serial_q{false, false, nullptr}, par_q{false, true, nullptr};
        ClosureOptions serial_p{true, false, nullptr}, par_p{true, true, nullptr};
        const std::size_t ref = algebra_closure_dim(gens, d * d, serial_q);
        CHECK(algebra_closure_dim(gens, d * d, par_q) == ref);
        CHECK(algebra_closure_dim(gens, d * d, serial_p) == ref);
        CHECK(algebra_closure_dim(gens, d * d, par_p) == ref);
        if (trial % 2) CHECK(ref < d * d);
    }
}

TEST_CASE("closure dimension is monotone in the generator set") {
    const GeneratorSet g = module_action({{{1, 0}, {}, 2, 0}, {{1, 0}, {}, 2, 1}});
    const auto gens = g.coefficients();
    std::size_t prev = 0;
    std::vector<RatMatrix> part;
    for (const auto& m : gens) {
        part.push_back(m);
        const std::size_t d = algebra_closure_dim(part, 16);
        CHECK(d >= prev);
        prev = d;
    }
    CHECK(prev < 16);
}

TEST_CASE("invariant closure examples") {
    const Vec seed = {1, 2, 0};
    const auto span_id = invariant_closure({RatMatrix::identity(3)}, seed);
    CHECK(span_id.size() == 1);
    std::vector<RatMatrix> units;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) units.push_back(oracle::unit(3, a, b));
    CHECK(invariant_closure(units, seed).size() == 3);
}

TEST_CASE("simultaneous eigenbasis") {
    RatMatrix d(2, 2);
    d(0, 0) = 1;
    d(1, 1) = 2;
    const auto lines = simultaneous_eigenbasis({d});
    REQUIRE(lines.size() == 2);
    for (const auto& l : lines) CHECK(d.apply(l.vector) == [&] {
        Vec w = l.vector;
        for (auto& x : w) x *= l.eigenvalues[0];
        return w;
    }());
    try {
        simultaneous_eigenbasis({RatMatrix::identity(2)});
        FAIL("degenerate family accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSimultaneouslyDiagonalizable);
    }
    // Jordan block is not diagonalizable
    RatMatrix j = RatMatrix::identity(2);
    j(0, 1) = 1;
    CHECK_THROWS_AS(simultaneous_eigenbasis({j}), Error);
}
