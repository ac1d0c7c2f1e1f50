#include "yangirr/closure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace yangirr {

namespace {

// GF(2^61 - 1)
struct Fp {
    using T = std::uint64_t;
    static constexpr T P = (T(1) << 61) - 1;
    static T zero() { return 0; }
    static T one() { return 1; }
    static bool is_zero(T a) { return a == 0; }
    static T add(T a, T b) {
        T s = a + b;
        return s >= P ? s - P : s;
    }
    static T sub(T a, T b) { return a >= b ? a - b : a + P - b; }
    static T mul(T a, T b) {
        unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
        T lo = static_cast<T>(x & P);
        T hi = static_cast<T>(x >> 61);
        T s = lo + hi;
        return s >= P ? s - P : s;
    }
    static T inv(T a) {
        T r = 1, e = P - 2;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    static T from_int(const mpz_class& z) {
        mpz_class m = z % mpz_class(static_cast<unsigned long>(P));
        if (m < 0) m += static_cast<unsigned long>(P);
        return static_cast<T>(m.get_ui());
    }
};

struct Qf {
    using T = Rat;
    static T zero() { return 0; }
    static T one() { return 1; }
    static bool is_zero(const T& a) { return sgn(a) == 0; }
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T inv(const T& a) { return Rat(1) / a; }
};

template <class F>
struct SparseGen {
    std::int64_t degree = 0;
    std::vector<std::uint32_t> r, k;
    std::vector<typename F::T> v;
};

template <class F>
class ClosureEngine {
    using T = typename F::T;

    struct Class {
        std::vector<std::uint32_t> supp;  // flat indices r*d + c
        std::vector<std::int32_t> pos;    // flat index -> position in supp
        std::vector<std::vector<T>> rows;
        std::vector<std::uint32_t> piv;
    };

public:
    ClosureEngine(std::size_t d, const std::vector<std::int64_t>* codes, bool parallel)
        : d_(d), codes_(codes), parallel_(parallel) {}

    std::size_t run(const std::vector<SparseGen<F>>& gens, std::size_t cap, std::size_t& products) {
        std::size_t full = std::min(cap, d_ * d_);
        {
            Class& c0 = cls(0);
            std::vector<T> id(c0.supp.size(), F::zero());
            for (std::size_t i = 0; i < d_; ++i) id[c0.pos[i * d_ + i]] = F::one();
            insert(0, std::move(id));
        }
        for (const auto& g : gens) {
            if (dim_ >= full) break;
            Class& c = cls(g.degree);
            std::vector<T> v(c.supp.size(), F::zero());
            for (std::size_t t = 0; t < g.v.size(); ++t) {
                std::int32_t p = c.pos[g.r[t] * d_ + g.k[t]];
                v[p] = F::add(v[p], g.v[t]);
            }
            reduce(c, v, 0);
            insert(g.degree, std::move(v));
        }
        std::size_t head = 0;
        const std::size_t G = gens.size();
        std::vector<std::vector<T>> batch(G);
        std::vector<std::int64_t> bdeg(G);
        while (head < order_.size() && dim_ < full) {
            auto [w, idx] = order_[head++];
            std::vector<T> e = cls(w).rows[idx];
            std::map<std::int64_t, std::size_t> snap;
            for (std::size_t g = 0; g < G; ++g) {
                bdeg[g] = gens[g].degree + w;
                Class& c = cls(bdeg[g]);
                snap.emplace(bdeg[g], c.rows.size());
            }
            std::vector<Class*> targets(G);
            std::vector<std::size_t> snapn(G);
            for (std::size_t g = 0; g < G; ++g) {
                targets[g] = &cls(bdeg[g]);
                snapn[g] = snap[bdeg[g]];
            }
            const Class& src = cls(w);
            // products against the snapshot are independent of each other
#pragma omp parallel for schedule(dynamic) if (parallel_)
            for (std::size_t g = 0; g < G; ++g) {
                batch[g] = multiply(gens[g], src, e, *targets[g]);
                reduce_range(*targets[g], batch[g], 0, snapn[g]);
            }
            products += G;
            for (std::size_t g = 0; g < G && dim_ < full; ++g) {
                reduce_range(*targets[g], batch[g], snapn[g], targets[g]->rows.size());
                insert(bdeg[g], std::move(batch[g]));
            }
        }
        return std::min(dim_, full);
    }

private:
    Class& cls(std::int64_t w) {
        auto it = classes_.find(w);
        if (it != classes_.end()) return it->second;
        Class c;
        c.pos.assign(d_ * d_, -1);
        for (std::size_t r = 0; r < d_; ++r)
            for (std::size_t col = 0; col < d_; ++col) {
                std::int64_t deg = codes_ ? (*codes_)[r] - (*codes_)[col] : 0;
                if (deg != w) continue;
                c.pos[r * d_ + col] = static_cast<std::int32_t>(c.supp.size());
                c.supp.push_back(static_cast<std::uint32_t>(r * d_ + col));
            }
        return classes_.emplace(w, std::move(c)).first->second;
    }

    std::vector<T> multiply(const SparseGen<F>& g, const Class& src, const std::vector<T>& e,
                            const Class& dst) const {
        std::vector<T> E(d_ * d_, F::zero());
        for (std::size_t t = 0; t < e.size(); ++t) E[src.supp[t]] = e[t];
        std::vector<T> out(dst.supp.size(), F::zero());
        for (std::size_t t = 0; t < g.v.size(); ++t) {
            const std::size_t r = g.r[t], k = g.k[t];
            const T& a = g.v[t];
            for (std::size_t c = 0; c < d_; ++c) {
                const T& b = E[k * d_ + c];
                if (F::is_zero(b)) continue;
                std::int32_t p = dst.pos[r * d_ + c];
                if (p < 0) throw std::logic_error("closure: product left its degree class");
                out[p] = F::add(out[p], F::mul(a, b));
            }
        }
        return out;
    }

    static void reduce_range(const Class& c, std::vector<T>& v, std::size_t from, std::size_t to) {
        for (std::size_t k = from; k < to; ++k) {
            const T f = v[c.piv[k]];
            if (F::is_zero(f)) continue;
            const auto& row = c.rows[k];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (!F::is_zero(row[j])) v[j] = F::sub(v[j], F::mul(f, row[j]));
        }
    }

    static void reduce(const Class& c, std::vector<T>& v, std::size_t from) {
        reduce_range(c, v, from, c.rows.size());
    }

    void insert(std::int64_t w, std::vector<T>&& v) {
        Class& c = cls(w);
        std::size_t p = 0;
        while (p < v.size() && F::is_zero(v[p])) ++p;
        if (p == v.size()) return;
        T inv = F::inv(v[p]);
        for (auto& x : v)
            if (!F::is_zero(x)) x = F::mul(x, inv);
        c.piv.push_back(static_cast<std::uint32_t>(p));
        c.rows.push_back(std::move(v));
        order_.emplace_back(w, c.rows.size() - 1);
        ++dim_;
    }

    std::size_t d_;
    const std::vector<std::int64_t>* codes_;
    bool parallel_;
    std::map<std::int64_t, Class> classes_;
    std::vector<std::pair<std::int64_t, std::size_t>> order_;
    std::size_t dim_ = 0;
};

}  // namespace

bool homogeneous_degree(const RatMatrix& m, const std::vector<std::int64_t>& grading,
                        std::int64_t& degree) {
    bool seen = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(m(i, j)) == 0) continue;
            std::int64_t w = grading[i] - grading[j];
            if (!seen) {
                degree = w;
                seen = true;
            } else if (w != degree) {
                return false;
            }
        }
    if (!seen) degree = 0;
    return true;
}

std::size_t algebra_closure_dim(const std::vector<RatMatrix>& gens, std::size_t cap,
                                const ClosureOptions& opt, ClosureStats* stats) {
    ClosureStats local;
    ClosureStats& st = stats ? *stats : local;
    st = ClosureStats{};
    std::size_t d = 0;
    for (const auto& g : gens) {
        if (!g.is_square()) throw std::invalid_argument("closure: non-square generator");
        if (d == 0) d = g.rows();
        if (g.rows() != d) throw std::invalid_argument("closure: mixed generator sizes");
    }
    if (d == 0) {
        st.dim = gens.empty() ? 0 : 1;
        return st.dim;
    }
    std::vector<std::int64_t> degs(gens.size(), 0);
    bool graded = opt.grading != nullptr && opt.grading->size() == d;
    if (graded)
        for (std::size_t i = 0; i < gens.size() && graded; ++i)
            graded = homogeneous_degree(gens[i], *opt.grading, degs[i]);
    if (!graded) std::fill(degs.begin(), degs.end(), 0);
    st.graded = graded;
    const std::vector<std::int64_t>* codes = graded ? opt.grading : nullptr;
    const std::size_t full = std::min(cap, d * d);

    if (opt.modular_prefilter) {
        std::vector<SparseGen<Fp>> mg;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto& g = gens[i];
            mpz_class L = 1;
            for (const auto& x : g.data())
                if (sgn(x) != 0) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den_mpz_t());
            SparseGen<Fp> s;
            s.degree = degs[i];
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t k = 0; k < d; ++k) {
                    const Rat& x = g(r, k);
                    if (sgn(x) == 0) continue;
                    mpz_class z = x.get_num() * (L / x.get_den());
                    Fp::T v = Fp::from_int(z);
                    if (v == 0) continue;
                    s.r.push_back(static_cast<std::uint32_t>(r));
                    s.k.push_back(static_cast<std::uint32_t>(k));
                    s.v.push_back(v);
                }
            if (!s.v.empty()) mg.push_back(std::move(s));
        }
        ClosureEngine<Fp> eng(d, codes, opt.parallel);
        std::size_t dm = eng.run(mg, cap, st.products);
        st.used_modular = true;
        if (dm >= full) {
            st.dim = full;
            return full;
        }
    }

    std::vector<SparseGen<Qf>> qg;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        SparseGen<Qf> s;
        s.degree = degs[i];
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t k = 0; k < d; ++k)
                if (sgn(gens[i](r, k)) != 0) {
                    s.r.push_back(static_cast<std::uint32_t>(r));
                    s.k.push_back(static_cast<std::uint32_t>(k));
                    s.v.push_back(gens[i](r, k));
                }
        if (!s.v.empty()) qg.push_back(std::move(s));
    }
    ClosureEngine<Qf> eng(d, codes, opt.parallel);
    st.dim = eng.run(qg, cap, st.products);
    st.used_rational = true;
    return st.dim;
}

std::vector<Vec> invariant_closure(const std::vector<RatMatrix>& gens, const Vec& seed) {
    SpanBasis span(seed.size());
    std::vector<Vec> out;
    if (!span.add(seed)) return out;
    out.push_back(seed);
    for (std::size_t head = 0; head < out.size() && out.size() < seed.size(); ++head) {
        for (const auto& g : gens) {
            Vec w = g.apply(out[head]);
            if (span.add(w)) out.push_back(std::move(w));
            if (out.size() == seed.size()) break;
        }
    }
    return out;
}

}  // namespace yangirr
