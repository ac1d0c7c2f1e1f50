#include "yangirr/eigen.hpp"
#include "yangirr/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace yangirr {

Poly charpoly(const RatMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    RatMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        RatMatrix am = a * m;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rat(static_cast<long>(k));
    }
    return Poly(std::move(c));
}

namespace {

using I64 = std::int64_t;

I64 modp(const mpz_class& z, I64 p) {
    mpz_class m = z % mpz_class(static_cast<long>(p));
    if (m < 0) m += p;
    return m.get_si();
}

I64 powmod(I64 a, I64 e, I64 p) {
    I64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = static_cast<I64>((__int128)r * a % p);
        a = static_cast<I64>((__int128)a * a % p);
        e >>= 1;
    }
    return r;
}

std::vector<I64> trim_p(std::vector<I64> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// degree of gcd over F_p
int gcd_degree_p(std::vector<I64> a, std::vector<I64> b, I64 p) {
    a = trim_p(a);
    b = trim_p(b);
    while (!b.empty()) {
        I64 inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            I64 f = static_cast<I64>((__int128)a.back() * inv % p);
            std::size_t s = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[s + i] = ((a[s + i] - static_cast<I64>((__int128)f * b[i] % p)) % p + p) % p;
            a = trim_p(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

mpz_class eval_mod(const std::vector<mpz_class>& f, const mpz_class& x, const mpz_class& m) {
    mpz_class acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc = (acc * x + *it) % m;
    }
    if (acc < 0) acc += m;
    return acc;
}

bool is_prime_small(I64 n) {
    if (n < 2) return false;
    for (I64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& f0) {
    if (f0.degree() <= 0) return {};
    Poly g = gcd(f0, f0.derivative());
    Poly sf, rem;
    divmod(f0, g, sf, rem);

    mpz_class L = 1;
    for (const auto& c : sf.coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> a;
    for (const auto& c : sf.coeffs()) a.push_back(c.get_num() * (L / c.get_den()));
    mpz_class G = 0;
    for (const auto& x : a) mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), x.get_mpz_t());
    for (auto& x : a) x /= G;

    std::vector<Rat> roots;
    if (a[0] == 0) {
        roots.push_back(0);
        a.erase(a.begin());
    }
    const int deg = static_cast<int>(a.size()) - 1;
    if (deg == 1) {
        Rat r(-a[0], a[1]);
        r.canonicalize();
        roots.push_back(r);
    } else if (deg > 1) {
        I64 p = 10007;
        for (;; p += 2) {
            if (!is_prime_small(p)) continue;
            if (modp(a.back(), p) == 0) continue;
            std::vector<I64> fp(a.size()), dp;
            for (std::size_t i = 0; i < a.size(); ++i) fp[i] = modp(a[i], p);
            for (std::size_t i = 1; i < a.size(); ++i) dp.push_back(static_cast<I64>((__int128)fp[i] * static_cast<I64>(i) % p));
            if (gcd_degree_p(fp, dp, p) == 0) break;
        }
        std::vector<I64> fp(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) fp[i] = modp(a[i], p);
        std::vector<mpz_class> da;
        for (std::size_t i = 1; i < a.size(); ++i) da.push_back(a[i] * static_cast<long>(i));

        mpz_class H = abs(a.front()) > abs(a.back()) ? abs(a.front()) : abs(a.back());
        mpz_class bound = 2 * H * H + 1;
        for (I64 x = 0; x < p; ++x) {
            I64 acc = 0;
            for (auto it = fp.rbegin(); it != fp.rend(); ++it)
                acc = static_cast<I64>(((__int128)acc * x + *it) % p);
            if (acc != 0) continue;
            mpz_class M = p, r = x;
            while (M <= bound) {
                mpz_class M2 = M * M;
                mpz_class fv = eval_mod(a, r, M2);
                mpz_class dv = eval_mod(da, r, M2);
                mpz_class inv;
                if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), M2.get_mpz_t()) == 0) break;
                r = (r - fv * inv) % M2;
                if (r < 0) r += M2;
                M = M2;
            }
            if (M <= bound) continue;
            // rational reconstruction
            mpz_class lim;
            mpz_class half = M / 2;
            mpz_sqrt(lim.get_mpz_t(), half.get_mpz_t());
            mpz_class r0 = M, r1 = r, t0 = 0, t1 = 1;
            while (r1 > lim) {
                mpz_class q = r0 / r1;
                mpz_class tmp = r0 - q * r1;
                r0 = r1;
                r1 = tmp;
                tmp = t0 - q * t1;
                t0 = t1;
                t1 = tmp;
            }
            if (t1 == 0) continue;
            Rat cand(r1, t1);
            cand.canonicalize();
            Rat v = 0;
            for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * cand + Rat(*it);
            if (sgn(v) == 0) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<EigenLine> simultaneous_eigenbasis(const std::vector<RatMatrix>& family) {
    if (family.empty()) throw Error(ErrorKind::InvalidInput, "empty family");
    const std::size_t n = family[0].rows();
    struct Block {
        std::vector<Vec> basis;
        std::vector<Rat> eig;
    };
    std::vector<Block> blocks(1);
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = 1;
        blocks[0].basis.push_back(std::move(e));
    }
    for (const auto& X : family) {
        if (X.rows() != n || X.cols() != n) throw Error(ErrorKind::InvalidInput, "family shape mismatch");
        std::vector<Block> next;
        for (auto& b : blocks) {
            const std::size_t k = b.basis.size();
            SpanBasis span(n);
            for (const auto& v : b.basis) span.add(v);
            std::vector<Vec> rows;
            for (std::size_t i = 0; i < span.dim(); ++i) rows.push_back(span.row(i));
            RatMatrix M(k, k);
            for (std::size_t i = 0; i < k; ++i) {
                Vec w = X.apply(rows[i]);
                if (!span.contains(w))
                    throw Error(ErrorKind::NotSimultaneouslyDiagonalizable, "family does not commute");
                Vec c = span.coords(w);
                for (std::size_t j = 0; j < k; ++j) M(j, i) = c[j];
            }
            auto lift = [&](const Vec& c) {
                Vec v(n);
                for (std::size_t j = 0; j < k; ++j)
                    if (sgn(c[j]) != 0)
                        for (std::size_t t = 0; t < n; ++t) v[t] += c[j] * rows[j][t];
                return v;
            };
            if (k == 1) {
                Block nb{rows, b.eig};
                nb.eig.push_back(M(0, 0));
                next.push_back(std::move(nb));
                continue;
            }
            auto ev = rational_roots(charpoly(M));
            std::size_t total = 0;
            for (const auto& lam : ev) {
                RatMatrix S = M;
                for (std::size_t i = 0; i < k; ++i) S(i, i) -= lam;
                auto ker = kernel_basis(S);
                total += ker.size();
                Block nb;
                nb.eig = b.eig;
                nb.eig.push_back(lam);
                for (const auto& c : ker) nb.basis.push_back(lift(c));
                next.push_back(std::move(nb));
            }
            if (total != k)
                throw Error(ErrorKind::NotSimultaneouslyDiagonalizable,
                            "member not diagonalizable over Q on a joint eigenspace");
        }
        blocks = std::move(next);
    }
    std::vector<EigenLine> out;
    for (auto& b : blocks) {
        if (b.basis.size() != 1)
            throw Error(ErrorKind::NotSimultaneouslyDiagonalizable,
                        "joint eigenspace of dimension " + std::to_string(b.basis.size()));
        out.push_back({b.basis[0], b.eig});
    }
    return out;
}

}  // namespace yangirr
