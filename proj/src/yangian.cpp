#include "yangirr/yangian.hpp"

#include "yangirr/eigen.hpp"
#include "yangirr/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace yangirr {

namespace {

constexpr std::size_t kMaxFullSpace = 4096;

// Index arithmetic on (C^N)^{xn}; position 0 is the most significant digit.
struct Tensor {
    int N = 0, n = 0;
    std::size_t len = 1;
    std::vector<std::size_t> stride;

    Tensor(int N_, int n_) : N(N_), n(n_), stride(n_) {
        for (int p = n - 1; p >= 0; --p) {
            stride[p] = len;
            len *= static_cast<std::size_t>(N);
            if (len > kMaxFullSpace)
                throw Error(ErrorKind::DimensionCapExceeded,
                            "tensor space (C^" + std::to_string(N) + ")^" + std::to_string(n) + " is too large");
        }
    }
    int digit(std::size_t I, int p) const { return static_cast<int>((I / stride[p]) % N); }
    std::size_t with_digit(std::size_t I, int p, int d) const {
        return I - static_cast<std::size_t>(digit(I, p)) * stride[p] + static_cast<std::size_t>(d) * stride[p];
    }
    std::size_t swapped(std::size_t I, int p, int q) const {
        int dp = digit(I, p), dq = digit(I, q);
        return with_digit(with_digit(I, p, dq), q, dp);
    }
    std::size_t permuted(std::size_t I, const std::vector<int>& perm) const {
        std::size_t J = 0;
        for (int p = 0; p < n; ++p) J += static_cast<std::size_t>(digit(I, p)) * stride[perm[p]];
        return J;
    }
    Weight weight(std::size_t I) const {
        Weight w(N, 0);
        for (int p = 0; p < n; ++p) ++w[digit(I, p)];
        return w;
    }
};

// Vector-valued polynomial, coefficients by degree.
using PVec = std::vector<Vec>;

PVec times_linear(const PVec& x, const Rat& a, std::size_t len) {
    if (x.empty()) return {};
    PVec out(x.size() + 1, Vec(len));
    for (std::size_t d = 0; d < x.size(); ++d)
        for (std::size_t I = 0; I < len; ++I) {
            if (sgn(x[d][I]) == 0) continue;
            out[d + 1][I] += x[d][I];
            out[d][I] += a * x[d][I];
        }
    return out;
}

// (x + a) X + P_{pq} X
PVec apply_cleared_flip(const PVec& x, const Rat& a, const Tensor& t, int p, int q) {
    PVec out = times_linear(x, a, t.len);
    for (std::size_t d = 0; d < x.size(); ++d)
        for (std::size_t I = 0; I < t.len; ++I)
            if (sgn(x[d][I]) != 0) out[d][t.swapped(I, p, q)] += x[d][I];
    return out;
}

// num[i*N + j] columns: T_ij numerators applied to each basis row, in basis
// coordinates. a[p] is the shift of tensor position p.
std::vector<PolyMatrix> realize(const Tensor& t, const std::vector<Rat>& a, const ImageBasis& basis,
                                bool verify) {
    const int N = t.N;
    const std::size_t D = basis.dim();
    std::vector<std::vector<RatMatrix>> coef(N * N, std::vector<RatMatrix>(t.n + 1, RatMatrix(D, D)));
    for (std::size_t b = 0; b < D; ++b) {
        std::vector<PVec> X(N * N);
        for (int k = 0; k < N; ++k) X[k * N + k] = PVec{basis.rows[b]};
        for (int p = t.n - 1; p >= 0; --p) {
            std::vector<PVec> Y(N * N);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    PVec y = times_linear(X[i * N + j], a[p], t.len);
                    std::size_t deg = y.size();
                    for (int k = 0; k < N; ++k) deg = std::max(deg, X[k * N + j].size());
                    if (deg == 0) continue;
                    y.resize(deg, Vec(t.len));
                    for (std::size_t J = 0; J < t.len; ++J) {
                        const PVec& src = X[t.digit(J, p) * N + j];
                        if (src.empty()) continue;
                        const std::size_t I = t.with_digit(J, p, i);
                        for (std::size_t d = 0; d < src.size(); ++d)
                            if (sgn(src[d][I]) != 0) y[d][J] += src[d][I];
                    }
                    Y[i * N + j] = std::move(y);
                }
            X = std::move(Y);
        }
        for (int ij = 0; ij < N * N; ++ij)
            for (std::size_t d = 0; d < X[ij].size(); ++d) {
                Vec c = basis.coords(X[ij][d]);
                if (verify && basis.combine(c) != X[ij][d])
                    throw Error(ErrorKind::Internal, "realized action leaves the symmetrizer image");
                for (std::size_t r = 0; r < D; ++r) coef[ij][d](r, b) = c[r];
            }
    }
    std::vector<PolyMatrix> num(N * N, PolyMatrix(D, D));
    for (int ij = 0; ij < N * N; ++ij) {
        for (int d = 0; d <= t.n; ++d)
            if (!coef[ij][d].is_zero()) num[ij].add_term(d, coef[ij][d]);
        num[ij].trim();
    }
    return num;
}

// Cheap enough to verify the image membership of every realized vector.
bool affordable(std::size_t len, std::size_t D) { return len * D * D <= 4000000; }

std::vector<SignedPerm> block_group(const std::vector<std::vector<std::size_t>>& blocks, int n, bool signed_sum) {
    std::vector<SignedPerm> out(1);
    out[0].perm.resize(n);
    std::iota(out[0].perm.begin(), out[0].perm.end(), 0);
    for (const auto& blk : blocks) {
        if (blk.size() < 2) continue;
        std::vector<int> idx(blk.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<SignedPerm> next;
        do {
            int inv = 0;
            for (std::size_t x = 0; x < idx.size(); ++x)
                for (std::size_t y = x + 1; y < idx.size(); ++y)
                    if (idx[x] > idx[y]) ++inv;
            const int sg = (signed_sum && inv % 2) ? -1 : 1;
            for (const auto& g : out) {
                SignedPerm h = g;
                for (std::size_t x = 0; x < blk.size(); ++x) h.perm[blk[x]] = static_cast<int>(blk[idx[x]]);
                h.sign = g.sign * sg;
                next.push_back(std::move(h));
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
        out = std::move(next);
    }
    return out;
}

Vec apply_group(const std::vector<SignedPerm>& G, const Tensor& t, const Vec& v) {
    Vec out(t.len);
    for (std::size_t I = 0; I < t.len; ++I) {
        if (sgn(v[I]) == 0) continue;
        for (const auto& g : G) {
            if (g.sign > 0)
                out[t.permuted(I, g.perm)] += v[I];
            else
                out[t.permuted(I, g.perm)] -= v[I];
        }
    }
    return out;
}

RatMatrix group_matrix(const std::vector<SignedPerm>& G, const Tensor& t) {
    RatMatrix m(t.len, t.len);
    for (std::size_t I = 0; I < t.len; ++I)
        for (const auto& g : G) m(t.permuted(I, g.perm), I) += g.sign;
    return m;
}

Vec basis_vector(std::size_t len, std::size_t I) {
    Vec e(len);
    e[I] = 1;
    return e;
}

std::vector<Rat> shifts_of(const SkewDiagram& d, const Rat& h) {
    std::vector<Rat> a;
    for (int c : d.contents) a.push_back(Rat(c) + h);
    return a;
}

GeneratorSet from_base(const BaseRealization& base, const Rat& h) {
    GeneratorSet g;
    g.N = base.diagram.N;
    g.dim = base.image.dim();
    g.den = base.den.shifted(h);
    for (const auto& m : base.num) g.num.push_back(m.shifted(h));
    g.weights = base.weights;
    g.factor_dims = {g.dim};
    return g;
}

std::size_t resolve_cap(std::size_t cap) { return cap == 0 ? default_dim_cap() : cap; }

void check_cap(std::size_t dim, std::size_t cap) {
    if (dim > cap)
        throw Error(ErrorKind::DimensionCapExceeded,
                    "module dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
}

std::vector<std::shared_ptr<const BaseRealization>> bases_of(const std::vector<ModuleSpec>& specs,
                                                             std::size_t cap) {
    common_rank(specs);
    std::vector<std::shared_ptr<const BaseRealization>> out;
    std::size_t dim = 1;
    for (const auto& s : specs) {
        out.push_back(base_realization(diagram_of(s)));
        dim *= out.back()->image.dim();
        check_cap(dim, cap);
    }
    return out;
}

void check_sequence(const std::vector<int>& s, int N) {
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (s[x] < 1 || s[x] > N) throw Error(ErrorKind::BadIndexSequence, "index out of range 1..N");
        if (x > 0 && s[x] <= s[x - 1]) throw Error(ErrorKind::BadIndexSequence, "indices not strictly increasing");
    }
}

void check_pair(const std::vector<int>& i_seq, const std::vector<int>& j_seq, int N) {
    if (i_seq.size() != j_seq.size() || i_seq.empty())
        throw Error(ErrorKind::BadIndexSequence, "index sequences must be nonempty and of equal length");
    if (static_cast<int>(i_seq.size()) > N) throw Error(ErrorKind::BadIndexSequence, "sequence longer than N");
    check_sequence(i_seq, N);
    check_sequence(j_seq, N);
}

// All permutations of 0..k-1 with signs.
std::vector<std::pair<std::vector<int>, int>> signed_permutations(int k) {
    std::vector<std::pair<std::vector<int>, int>> out;
    std::vector<int> g(k);
    std::iota(g.begin(), g.end(), 0);
    do {
        int inv = 0;
        for (int x = 0; x < k; ++x)
            for (int y = x + 1; y < k; ++y)
                if (g[x] > g[y]) ++inv;
        out.push_back({g, inv % 2 ? -1 : 1});
    } while (std::next_permutation(g.begin(), g.end()));
    return out;
}

// Factor list (row, column, shift r) of each term, left to right.
struct MinorTerm {
    std::vector<std::tuple<int, int, int>> factors;
    int sign = 1;
};

std::vector<MinorTerm> minor_terms(const std::vector<int>& i_seq, const std::vector<int>& j_seq, bool reversed) {
    const int k = static_cast<int>(i_seq.size());
    std::vector<MinorTerm> out;
    for (const auto& [g, sg] : signed_permutations(k)) {
        MinorTerm t;
        t.sign = sg;
        if (!reversed) {
            for (int r = 0; r < k; ++r) t.factors.emplace_back(i_seq[r], j_seq[g[r]], r);
        } else {
            for (int r = k - 1; r >= 0; --r) t.factors.emplace_back(i_seq[g[r]], j_seq[r], r);
        }
        out.push_back(std::move(t));
    }
    return out;
}

Poly minor_den(const GeneratorSet& g, int k) {
    Poly den(Rat(1));
    for (int r = 0; r < k; ++r) den *= g.den.shifted(Rat(-r));
    return den;
}

RatFn reduce(RatFn f) {
    Poly c = gcd(f.num, f.den);
    if (c.degree() > 0) {
        Poly q, r;
        divmod(f.num, c, q, r);
        f.num = q;
        divmod(f.den, c, q, r);
        f.den = q;
    }
    return f;
}

RatFn mul(const RatFn& a, const RatFn& b) { return reduce({a.num * b.num, a.den * b.den}); }
RatFn div(const RatFn& a, const RatFn& b) { return reduce({a.num * b.den, a.den * b.num}); }
RatFn shift(const RatFn& a, const Rat& s) { return {a.num.shifted(s), a.den.shifted(s)}; }

// prod_{j<k} f(u - j)
RatFn twist_product(const RatFn& f, int k) {
    RatFn out{Poly(Rat(1)), Poly(Rat(1))};
    for (int j = 0; j < k; ++j) out = mul(out, shift(f, Rat(-j)));
    return out;
}

RatFn rho(const SkewDiagram& d, const Rat& h, int k) {
    RatFn r{Poly(Rat(1)), Poly(Rat(1))};
    for (int i = 1; i <= d.M; ++i) {
        r.num *= Poly::linear(h + d.mu[i - 1] - i - k + 1);
        r.den *= Poly::linear(h - i - k + 1);
    }
    for (int i = 1; i <= d.M + k; ++i) r.num *= Poly::linear(h - i + 1);
    return r;
}

PolyMatrix column_of(const Vec& v) {
    RatMatrix m(v.size(), 1);
    for (std::size_t r = 0; r < v.size(); ++r) m(r, 0) = v[r];
    return PolyMatrix::constant(m);
}

Vec as_vec(const RatMatrix& m) {
    Vec v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, 0);
    return v;
}

bool proportional(const Vec& a, const Vec& b) {
    std::size_t z = 0;
    while (z < a.size() && sgn(a[z]) == 0) ++z;
    if (z == a.size() || sgn(b[z]) == 0) return false;
    const Rat s = b[z] / a[z];
    for (std::size_t r = 0; r < a.size(); ++r)
        if (a[r] * s != b[r]) return false;
    return true;
}

}  // namespace

std::size_t default_dim_cap() {
    if (const char* env = std::getenv("YANGIRR_DIM_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 64;
}

RatMatrix flip(int N) {
    RatMatrix P(N * N, N * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) P(b * N + a, a * N + b) = 1;
    return P;
}

RatMatrix yang_r(int N, const Rat& u, const Rat& v) {
    if (u == v) throw Error(ErrorKind::PoleAtEqualArguments, "R(u, v) has a pole at u = v");
    return RatMatrix::identity(N * N) + flip(N) * (Rat(1) / (u - v));
}

PolyMatrix yang_r_cleared(int N, const Rat& v) {
    PolyMatrix m(N * N, N * N);
    m.add_term(1, RatMatrix::identity(N * N));
    m.add_term(0, flip(N) - RatMatrix::identity(N * N) * v);
    m.trim();
    return m;
}

Vec SymmetrizerSet::apply_p(const Vec& v) const { return apply_group(row_group, Tensor(N, n), v); }
Vec SymmetrizerSet::apply_q(const Vec& v) const { return apply_group(column_group, Tensor(N, n), v); }
Vec SymmetrizerSet::apply(const Vec& v) const { return apply_p(apply_q(v)); }
RatMatrix SymmetrizerSet::p_matrix() const { return group_matrix(row_group, Tensor(N, n)); }
RatMatrix SymmetrizerSet::q_matrix() const { return group_matrix(column_group, Tensor(N, n)); }
RatMatrix SymmetrizerSet::y_matrix() const { return p_matrix() * q_matrix(); }

SymmetrizerSet young_symmetrizer(const SkewDiagram& d, int N) {
    SymmetrizerSet s;
    s.N = N;
    s.n = static_cast<int>(d.size());
    Tensor(N, s.n);  // size check
    std::map<int, std::vector<std::size_t>> rows;
    for (std::size_t p = 0; p < d.size(); ++p) rows[d.boxes[p].row].push_back(p);
    std::vector<std::vector<std::size_t>> row_blocks, col_blocks;
    for (auto& [r, cells] : rows) row_blocks.push_back(cells);
    for (const auto& c : d.columns) col_blocks.push_back(c.cells);
    s.row_group = block_group(row_blocks, s.n, false);
    s.column_group = block_group(col_blocks, s.n, true);
    return s;
}

RatMatrix permutation_matrix(const std::vector<int>& perm, int N) {
    Tensor t(N, static_cast<int>(perm.size()));
    RatMatrix m(t.len, t.len);
    for (std::size_t I = 0; I < t.len; ++I) m(t.permuted(I, perm), I) = 1;
    return m;
}

Vec ImageBasis::coords(const Vec& v) const {
    Vec c(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) c[r] = v[pivots[r]];
    return c;
}

Vec ImageBasis::combine(const Vec& c) const {
    Vec v(len);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (sgn(c[r]) == 0) continue;
        for (std::size_t I = 0; I < len; ++I)
            if (sgn(rows[r][I]) != 0) v[I] += c[r] * rows[r][I];
    }
    return v;
}

bool ImageBasis::contains(const Vec& v) const { return combine(coords(v)) == v; }

ImageBasis kron(const ImageBasis& a, const ImageBasis& b) {
    ImageBasis out;
    out.len = a.len * b.len;
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < b.dim(); ++y) {
            out.rows.push_back(kron(a.rows[x], b.rows[y]));
            out.pivots.push_back(a.pivots[x] * b.len + b.pivots[y]);
        }
    return out;
}

std::shared_ptr<const BaseRealization> base_realization(const SkewDiagram& d) {
    using Key = std::tuple<Weight, Weight, int>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const BaseRealization>> cache;
    const Key key{d.lambda, d.mu, d.N};
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto base = std::make_shared<BaseRealization>();
    base->diagram = d;
    base->sym = young_symmetrizer(d, d.N);
    const Tensor t(d.N, static_cast<int>(d.size()));
    SpanBasis span(t.len);
    for (std::size_t I = 0; I < t.len; ++I) {
        Vec v = base->sym.apply(basis_vector(t.len, I));
        if (!is_zero(v)) span.add(v);
    }
    base->image.len = t.len;
    for (std::size_t r = 0; r < span.dim(); ++r) {
        base->image.rows.push_back(span.row(r));
        base->image.pivots.push_back(span.pivot(r));
        base->weights.push_back(t.weight(span.pivot(r)));
    }
    if (base->image.dim() == 0) throw Error(ErrorKind::EmptyModule, "symmetrizer image is zero");
    base->den = Poly(Rat(1));
    for (int c : d.contents) base->den *= Poly::linear(Rat(c));
    base->num = realize(t, shifts_of(d, 0), base->image, affordable(t.len, base->image.dim()));
    cache.emplace(key, base);
    return base;
}

std::vector<RatMatrix> GeneratorSet::coefficients() const {
    std::vector<RatMatrix> out;
    for (const auto& m : num)
        for (const auto& c : m.coeffs())
            if (!c.is_zero()) out.push_back(c);
    return out;
}

std::vector<std::int64_t> GeneratorSet::grading() const {
    int total = 0;
    for (const auto& w : weights) total = std::max(total, std::accumulate(w.begin(), w.end(), 0));
    const std::int64_t base = 2 * total + 1;
    std::int64_t scale = 1;
    for (int a = 0; a < N; ++a) {
        if (scale > (std::int64_t(1) << 55) / base) return {};
        scale *= base;
    }
    std::vector<std::int64_t> codes;
    for (const auto& w : weights) {
        std::int64_t c = 0, s = 1;
        for (int a = 0; a < N; ++a, s *= base) c += w[a] * s;
        codes.push_back(c);
    }
    return codes;
}

GeneratorSet fold(const GeneratorSet& a, const GeneratorSet& b) {
    if (a.N != b.N) throw Error(ErrorKind::InvalidInput, "fold of different N");
    const int N = a.N;
    GeneratorSet g;
    g.N = N;
    g.dim = a.dim * b.dim;
    g.den = a.den * b.den;
    g.num.assign(N * N, PolyMatrix(g.dim, g.dim));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            PolyMatrix& m = g.num[i * N + j];
            for (int k = 0; k < N; ++k) m += kron(a.num[i * N + k], b.num[k * N + j]);
            m.trim();
        }
    for (const auto& wa : a.weights)
        for (const auto& wb : b.weights) {
            Weight w(N);
            for (int x = 0; x < N; ++x) w[x] = wa[x] + wb[x];
            g.weights.push_back(w);
        }
    g.factor_dims = a.factor_dims;
    g.factor_dims.insert(g.factor_dims.end(), b.factor_dims.begin(), b.factor_dims.end());
    return g;
}

GeneratorSet module_action(const std::vector<ModuleSpec>& specs, std::size_t cap) {
    auto bases = bases_of(specs, resolve_cap(cap));
    GeneratorSet g = from_base(*bases[0], specs[0].h);
    for (std::size_t s = 1; s < specs.size(); ++s) g = fold(g, from_base(*bases[s], specs[s].h));
    return g;
}

GeneratorSet module_action_direct(const std::vector<ModuleSpec>& specs, std::size_t cap) {
    auto bases = bases_of(specs, resolve_cap(cap));
    const int N = specs[0].N;
    ImageBasis basis = bases[0]->image;
    std::vector<Rat> a = shifts_of(bases[0]->diagram, specs[0].h);
    std::vector<Weight> weights = bases[0]->weights;
    int n = static_cast<int>(bases[0]->diagram.size());
    for (std::size_t s = 1; s < specs.size(); ++s) {
        basis = kron(basis, bases[s]->image);
        auto as = shifts_of(bases[s]->diagram, specs[s].h);
        a.insert(a.end(), as.begin(), as.end());
        n += static_cast<int>(bases[s]->diagram.size());
        std::vector<Weight> w;
        for (const auto& x : weights)
            for (const auto& y : bases[s]->weights) {
                Weight z(N);
                for (int c = 0; c < N; ++c) z[c] = x[c] + y[c];
                w.push_back(z);
            }
        weights = std::move(w);
    }
    const Tensor t(N, n);
    GeneratorSet g;
    g.N = N;
    g.dim = basis.dim();
    g.den = Poly(Rat(1));
    for (const auto& x : a) g.den *= Poly::linear(x);
    g.num = realize(t, a, basis, true);
    g.weights = weights;
    for (const auto& b : bases) g.factor_dims.push_back(b->image.dim());
    return g;
}

GeneratorSet module_action_opposite(const std::vector<ModuleSpec>& specs, std::size_t cap) {
    std::vector<ModuleSpec> rev(specs.rbegin(), specs.rend());
    GeneratorSet r = module_action(rev, cap);
    const std::size_t n = specs.size();
    std::vector<std::size_t> dims(r.factor_dims.rbegin(), r.factor_dims.rend());
    // forward multi-index -> index in the reversed product
    std::vector<std::size_t> to_rev(r.dim);
    for (std::size_t f = 0; f < r.dim; ++f) {
        std::vector<std::size_t> digits(n);
        std::size_t x = f;
        for (std::size_t s = n; s-- > 0;) {
            digits[s] = x % dims[s];
            x /= dims[s];
        }
        std::size_t idx = 0;
        for (std::size_t s = n; s-- > 0;) idx = idx * dims[s] + digits[s];
        to_rev[f] = idx;
    }
    GeneratorSet g;
    g.N = r.N;
    g.dim = r.dim;
    g.den = r.den;
    g.factor_dims = dims;
    for (std::size_t f = 0; f < g.dim; ++f) g.weights.push_back(r.weights[to_rev[f]]);
    for (const auto& m : r.num) {
        PolyMatrix out(g.dim, g.dim);
        for (int d = 0; d <= m.degree(); ++d) {
            const RatMatrix& c = m.coeffs()[d];
            RatMatrix o(g.dim, g.dim);
            for (std::size_t x = 0; x < g.dim; ++x)
                for (std::size_t y = 0; y < g.dim; ++y) o(x, y) = c(to_rev[x], to_rev[y]);
            out.add_term(d, o);
        }
        out.trim();
        g.num.push_back(std::move(out));
    }
    return g;
}

bool check_defining_relation(const GeneratorSet& g, const std::vector<std::pair<Rat, Rat>>& points) {
    const int N = g.N;
    auto eval = [&](const Rat& u) {
        const Rat dn = g.den(u);
        if (sgn(dn) == 0) throw Error(ErrorKind::PoleAtEqualArguments, "sample point at a pole of T(u)");
        std::vector<RatMatrix> T;
        for (const auto& m : g.num) T.push_back(m(u) * (Rat(1) / dn));
        return T;
    };
    for (const auto& [u, v] : points) {
        auto Tu = eval(u), Tv = eval(v);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k)
                    for (int l = 0; l < N; ++l) {
                        RatMatrix lhs = (Tu[i * N + j] * Tv[k * N + l] - Tv[k * N + l] * Tu[i * N + j]) * (u - v);
                        RatMatrix rhs = Tv[k * N + j] * Tu[i * N + l] - Tu[k * N + j] * Tv[i * N + l];
                        if (lhs != rhs) return false;
                    }
    }
    return true;
}

RatFnMatrix quantum_minor(const GeneratorSet& g, const std::vector<int>& i_seq, const std::vector<int>& j_seq,
                          bool reversed) {
    check_pair(i_seq, j_seq, g.N);
    const int k = static_cast<int>(i_seq.size());
    std::vector<std::vector<PolyMatrix>> S(k);
    for (int r = 0; r < k; ++r)
        for (const auto& m : g.num) S[r].push_back(m.shifted(Rat(-r)));
    PolyMatrix num(g.dim, g.dim);
    for (const auto& t : minor_terms(i_seq, j_seq, reversed)) {
        PolyMatrix prod;
        bool first = true;
        for (auto [i, j, r] : t.factors) {
            const PolyMatrix& f = S[r][(i - 1) * g.N + (j - 1)];
            prod = first ? f : prod * f;
            first = false;
        }
        if (t.sign < 0) prod *= Rat(-1);
        num += prod;
    }
    num.trim();
    return {num, minor_den(g, k)};
}

RatMatrix quantum_minor_at(const GeneratorSet& g, const std::vector<int>& i_seq, const std::vector<int>& j_seq,
                           const Rat& u) {
    check_pair(i_seq, j_seq, g.N);
    const int k = static_cast<int>(i_seq.size());
    std::vector<std::vector<RatMatrix>> S(k);
    for (int r = 0; r < k; ++r) {
        const Rat dn = g.den(u - r);
        if (sgn(dn) == 0) throw Error(ErrorKind::PoleAtEqualArguments, "sample point at a pole of T(u)");
        for (const auto& m : g.num) S[r].push_back(m(u - r) * (Rat(1) / dn));
    }
    RatMatrix out(g.dim, g.dim);
    for (const auto& t : minor_terms(i_seq, j_seq, false)) {
        RatMatrix prod = RatMatrix::identity(g.dim);
        for (auto [i, j, r] : t.factors) prod = prod * S[r][(i - 1) * g.N + (j - 1)];
        if (t.sign < 0)
            out -= prod;
        else
            out += prod;
    }
    return out;
}

RatFnMatrix quantum_minor_apply(const GeneratorSet& g, const std::vector<int>& i_seq, const std::vector<int>& j_seq,
                                const Vec& v) {
    check_pair(i_seq, j_seq, g.N);
    if (v.size() != g.dim) throw Error(ErrorKind::InvalidInput, "vector length differs from module dimension");
    const int k = static_cast<int>(i_seq.size());
    std::vector<std::vector<PolyMatrix>> S(k);
    for (int r = 0; r < k; ++r)
        for (const auto& m : g.num) S[r].push_back(m.shifted(Rat(-r)));
    const PolyMatrix v0 = column_of(v);
    PolyMatrix num(g.dim, 1);
    for (const auto& t : minor_terms(i_seq, j_seq, false)) {
        PolyMatrix w = v0;
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
            auto [i, j, r] = *it;
            w = S[r][(i - 1) * g.N + (j - 1)] * w;
            if (w.is_zero()) break;
        }
        if (t.sign < 0) w *= Rat(-1);
        num += w;
    }
    num.trim();
    return {num, minor_den(g, k)};
}

std::vector<int> seq_i(int k) {
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

std::vector<int> seq_j(int k) {
    std::vector<int> s = seq_i(k);
    s.back() = k + 1;
    return s;
}

ABCD abcd_series(const GeneratorSet& g, int k) {
    ABCD out;
    if (k == 0) {
        out.A = {PolyMatrix::constant(RatMatrix::identity(g.dim)), Poly(Rat(1))};
        return out;
    }
    if (k < 0 || k > g.N) throw Error(ErrorKind::BadIndexSequence, "k out of range 0..N");
    out.A = quantum_minor(g, seq_i(k), seq_i(k));
    if (k < g.N) {
        out.B = quantum_minor(g, seq_i(k), seq_j(k));
        out.C = quantum_minor(g, seq_j(k), seq_i(k));
        out.D = quantum_minor(g, seq_j(k), seq_j(k));
    }
    return out;
}

Vec singular_vector(const std::vector<ModuleSpec>& specs) {
    auto bases = bases_of(specs, static_cast<std::size_t>(-1));
    Vec out{Rat(1)};
    for (const auto& b : bases) {
        const SkewDiagram& d = b->diagram;
        const Tensor t(d.N, static_cast<int>(d.size()));
        std::size_t I = 0;
        for (const auto& col : d.columns)
            for (int r = 0; r < col.height(); ++r) I += static_cast<std::size_t>(r) * t.stride[col.cells[r]];
        Vec full = b->sym.apply(basis_vector(t.len, I));
        if (is_zero(full)) throw Error(ErrorKind::Internal, "image of the depth vector is zero");
        Vec c = b->image.coords(full);
        if (b->image.combine(c) != full) throw Error(ErrorKind::Internal, "depth vector image outside the basis span");
        out = kron(out, c);
    }
    return out;
}

void verify_singular(const GeneratorSet& g, const Vec& zeta) {
    for (int k = 1; k < g.N; ++k)
        if (!quantum_minor_apply(g, seq_j(k), seq_i(k), zeta).num.is_zero())
            throw Error(ErrorKind::NotSingular, "C_" + std::to_string(k) + "(u) does not annihilate the vector");
}

RatFn a_eigenvalue(const GeneratorSet& g, int k, const Vec& v) {
    if (k == 0) return {Poly(Rat(1)), Poly(Rat(1))};
    RatFnMatrix w = quantum_minor_apply(g, seq_i(k), seq_i(k), v);
    std::size_t z = 0;
    while (z < v.size() && sgn(v[z]) == 0) ++z;
    if (z == v.size()) throw Error(ErrorKind::InvalidInput, "zero vector");
    Poly p = w.num.is_zero() ? Poly() : w.num.entry(z, 0) * (Rat(1) / v[z]);
    if (!(p * column_of(v) == w.num) && !(p.is_zero() && w.num.is_zero()))
        throw Error(ErrorKind::NotSingular, "vector is not an eigenvector of A_" + std::to_string(k));
    return reduce({p, w.den});
}

bool drinfeld_check(const GeneratorSet& g, const Vec& zeta, const DrinfeldData& expected) {
    const int N = g.N;
    if (static_cast<int>(expected.roots.size()) != N - 1) return false;
    std::vector<RatFn> a;
    for (int k = 0; k <= N; ++k) a.push_back(a_eigenvalue(g, k, zeta));
    for (int k = 1; k < N; ++k) {
        RatFn lhs = div(mul(a[k + 1], shift(a[k - 1], Rat(-1))), mul(a[k], shift(a[k], Rat(-1))));
        Poly P = Poly::from_roots(expected.roots[k - 1]);
        RatFn rhs{P.shifted(Rat(-1)), P};
        if (!lhs.equals(rhs)) return false;
    }
    return true;
}

ImageBasis pair_image(const ModuleSpec& a, const ModuleSpec& b) {
    common_rank({a, b});
    return kron(base_realization(diagram_of(a))->image, base_realization(diagram_of(b))->image);
}

Intertwiner intertwiner(const ModuleSpec& a, const ModuleSpec& b) {
    common_rank({a, b});
    const SkewDiagram A = diagram_of(a), B = diagram_of(b);
    const int m = static_cast<int>(A.size()), n = static_cast<int>(B.size());
    const Tensor t(a.N, m + n);
    const ImageBasis basis = pair_image(a, b);
    const Rat h = a.h - b.h;
    const std::size_t D = basis.dim();
    // the product is applied to vectors, so its rightmost factor comes first
    std::vector<std::tuple<int, int, Rat>> factors;
    for (int k = 1; k <= m; ++k)
        for (int l = n; l >= 1; --l)
            factors.emplace_back(k - 1, m + l - 1, Rat(B.contents[l - 1] - A.contents[k - 1]) - h);
    Poly den(Rat(1));
    for (const auto& f : factors) den *= Poly::linear(std::get<2>(f));
    const bool verify = affordable(t.len, D);
    std::vector<RatMatrix> coef(factors.size() + 1, RatMatrix(D, D));
    for (std::size_t c = 0; c < D; ++c) {
        PVec x{basis.rows[c]};
        for (const auto& [p, q, s] : factors) x = apply_cleared_flip(x, s, t, p, q);
        for (std::size_t d = 0; d < x.size(); ++d) {
            Vec co = basis.coords(x[d]);
            if (verify && basis.combine(co) != x[d])
                throw Error(ErrorKind::Internal, "R-matrix product leaves the symmetrizer image");
            for (std::size_t r = 0; r < D; ++r) coef[d](r, c) = co[r];
        }
    }
    PolyMatrix num(D, D);
    for (std::size_t d = 0; d < coef.size(); ++d)
        if (!coef[d].is_zero()) num.add_term(static_cast<int>(d), coef[d]);
    num.trim();
    LaurentTerm lt = laurent_leading({num, den}, Rat(0));
    Intertwiner R;
    R.matrix = lt.coeff;
    R.order = lt.order;
    R.dim = D;
    R.rank = rank(R.matrix);
    return R;
}

bool check_intertwining(const Intertwiner& R, const ModuleSpec& a, const ModuleSpec& b) {
    const std::size_t cap = static_cast<std::size_t>(-1);
    GeneratorSet g = module_action({a, b}, cap);
    GeneratorSet gp = module_action_opposite({a, b}, cap);
    if (g.dim != R.dim) return false;
    for (std::size_t x = 0; x < g.num.size(); ++x) {
        PolyMatrix lhs = R.matrix * gp.num[x];
        PolyMatrix rhs = g.num[x] * R.matrix;
        lhs.trim();
        rhs.trim();
        if (!(lhs == rhs)) return false;
    }
    return true;
}

RatMatrix intertwiner_product_at(const ModuleSpec& a, const ModuleSpec& b, const Rat& h, const Rat& z) {
    common_rank({a, b});
    const SkewDiagram A = diagram_of(a), B = diagram_of(b);
    const int m = static_cast<int>(A.size()), n = static_cast<int>(B.size());
    const Tensor t(a.N, m + n);
    auto ba = base_realization(A), bb = base_realization(B);
    const std::size_t lb = bb->image.len;
    RatMatrix out(t.len, t.len);
    for (std::size_t I = 0; I < t.len; ++I) {
        Vec v = kron(ba->sym.apply(basis_vector(ba->image.len, I / lb)),
                     bb->sym.apply(basis_vector(lb, I % lb)));
        for (int k = 1; k <= m; ++k)
            for (int l = n; l >= 1; --l) {
                const Rat s = z + B.contents[l - 1] - A.contents[k - 1] - h;
                if (sgn(s) == 0) throw Error(ErrorKind::PoleAtEqualArguments, "R-matrix factor has a pole");
                Vec w = v;
                for (std::size_t J = 0; J < t.len; ++J)
                    if (sgn(v[J]) != 0) w[t.swapped(J, k - 1, m + l - 1)] += v[J] / s;
                v = std::move(w);
            }
        for (std::size_t J = 0; J < t.len; ++J) out(J, I) = v[J];
    }
    return out;
}

RatMatrix jucys_murphy_form(const ModuleSpec& a, const ModuleSpec& b, const Rat& h, const Rat& z, bool denominators) {
    common_rank({a, b});
    const SkewDiagram A = diagram_of(a), B = diagram_of(b);
    if (!as_reversed_young(A)) throw Error(ErrorKind::ShapeNotSpecial, "first factor is not a reversed Young diagram");
    if (!as_usual_young(B)) throw Error(ErrorKind::ShapeNotSpecial, "second factor is not a usual Young diagram");
    const int m = static_cast<int>(A.size()), n = static_cast<int>(B.size());
    const Tensor t(a.N, m + n);
    auto ba = base_realization(A), bb = base_realization(B);
    const std::size_t lb = bb->image.len;
    // factor p: (h - z) - X_p, X_p = sum over q > p of P_pq
    std::vector<Rat> scale(m + n, Rat(1));
    if (denominators)
        for (int p = 0; p < m + n; ++p) {
            const Rat d = p < m ? Rat(h + A.contents[p] - z) : Rat(h - B.contents[p - m] - z);
            if (sgn(d) == 0) throw Error(ErrorKind::PoleAtEqualArguments, "Jucys-Murphy factor has a pole");
            scale[p] = Rat(1) / d;
        }
    RatMatrix out(t.len, t.len);
    for (std::size_t I = 0; I < t.len; ++I) {
        Vec v = kron(ba->sym.apply(basis_vector(ba->image.len, I / lb)),
                     bb->sym.apply(basis_vector(lb, I % lb)));
        for (int p = m + n - 1; p >= 0; --p) {
            Vec w(t.len);
            for (std::size_t J = 0; J < t.len; ++J) {
                if (sgn(v[J]) == 0) continue;
                w[J] += (h - z) * v[J];
                for (int q = p + 1; q < m + n; ++q) w[t.swapped(J, p, q)] -= v[J];
            }
            for (auto& x : w) x *= scale[p];
            v = std::move(w);
        }
        for (std::size_t J = 0; J < t.len; ++J) out(J, I) = v[J];
    }
    return out;
}

RatMatrix restrict_operator(const ImageBasis& basis, const RatMatrix& full) {
    const std::size_t D = basis.dim();
    RatMatrix out(D, D);
    for (std::size_t c = 0; c < D; ++c) {
        Vec w = full.apply(basis.rows[c]);
        Vec co = basis.coords(w);
        if (basis.combine(co) != w) throw Error(ErrorKind::Internal, "operator does not preserve the subspace");
        for (std::size_t r = 0; r < D; ++r) out(r, c) = co[r];
    }
    return out;
}

OracleReport irreducible_oracle(const GeneratorSet& g, const ClosureOptions& opt) {
    OracleReport rep;
    rep.dim = g.dim;
    const auto codes = g.grading();
    ClosureOptions o = opt;
    if (!o.grading && !codes.empty()) o.grading = &codes;
    rep.closure_dim = algebra_closure_dim(g.coefficients(), g.dim * g.dim, o, &rep.stats);
    rep.irreducible = rep.closure_dim == g.dim * g.dim;
    return rep;
}

bool irreducible(const GeneratorSet& g) { return irreducible_oracle(g).irreducible; }

bool cyclicity_oracle(const GeneratorSet& g, const Vec& zeta) {
    return invariant_closure(g.coefficients(), zeta).size() == g.dim;
}

bool cocyclicity_oracle(const GeneratorSet& g, const Vec& zeta) {
    // The dual module carries T_ij -> T_ji transposed, and the functional dual
    // to zeta is the same coordinate vector once zeta spans its weight space.
    std::size_t z = 0;
    while (z < zeta.size() && sgn(zeta[z]) == 0) ++z;
    if (z == zeta.size()) throw Error(ErrorKind::InvalidInput, "zero vector");
    if (std::count(g.weights.begin(), g.weights.end(), g.weights[z]) != 1)
        throw Error(ErrorKind::Internal, "weight space of the singular vector is not one-dimensional");
    std::vector<RatMatrix> gens;
    for (const auto& m : g.coefficients()) gens.push_back(m.transpose());
    return invariant_closure(gens, zeta).size() == g.dim;
}

RatFn column_singular_eigenvalue(const ModuleSpec& s, int k) {
    const SkewDiagram d = diagram_of(s);
    RatFn f{Poly(Rat(1)), Poly(Rat(1))};
    for (const auto& c : d.columns) {
        const int top = d.contents[c.cells[0]];
        f.num *= Poly::linear(s.h + top + 1);
        f.den *= Poly::linear(s.h + top - std::min(k, c.height()) + 1);
    }
    return reduce(f);
}

RatFn scheme_eigenvalue(const ModuleSpec& s, const GZScheme& sch, int k) {
    const SkewDiagram d = diagram_of(s);
    RatFn f{Poly(Rat(1)), Poly(Rat(1))};
    for (int i = 1; i <= d.M + k; ++i) f.num *= Poly::linear(s.h + sch.at(d.M + k, i) - i + 1);
    return div(f, rho(d, s.h, k));
}

RatFn twist_factor(const ModuleSpec& s) {
    const SkewDiagram d = diagram_of(s);
    return div(column_singular_eigenvalue(s, 1), scheme_eigenvalue(s, scheme_top(d), 1));
}

GZReport gz_eigenbasis_check(const ModuleSpec& s) {
    const SkewDiagram d = diagram_of(s);
    const int N = s.N;
    GeneratorSet g = module_action({s});
    std::vector<RatFnMatrix> A(N + 1);
    std::vector<RatMatrix> family;
    std::vector<std::pair<int, int>> label;  // (k, degree)
    for (int k = 1; k <= N; ++k) {
        A[k] = quantum_minor(g, seq_i(k), seq_i(k));
        for (int e = 0; e <= A[k].num.degree(); ++e) {
            family.push_back(A[k].num.coeffs()[e]);
            label.push_back({k, e});
        }
    }
    std::vector<EigenLine> lines;
    try {
        lines = simultaneous_eigenbasis(family);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotSimultaneouslyDiagonalizable)
            throw Error(ErrorKind::DegenerateSpectrum, e.what());
        throw;
    }
    GZReport rep;
    rep.lines = lines.size();
    const RatFn f = twist_factor(s);
    std::vector<RatFn> phi(N + 1);
    for (int k = 0; k <= N; ++k) phi[k] = twist_product(f, k);
    const auto schemes = enumerate_gz_schemes(d);

    // match each line to the unique scheme with the same A_k eigenvalues
    std::vector<int> scheme_of(lines.size(), -1);
    std::vector<int> line_of(schemes.size(), -1);
    rep.eigenvalues_ok = lines.size() == g.dim && schemes.size() == g.dim;
    for (std::size_t x = 0; x < lines.size(); ++x) {
        std::vector<Vec> p(N + 1);
        for (std::size_t q = 0; q < family.size(); ++q) {
            auto [k, e] = label[q];
            p[k].resize(std::max<std::size_t>(p[k].size(), e + 1));
            p[k][e] = lines[x].eigenvalues[q];
        }
        for (std::size_t sc = 0; sc < schemes.size(); ++sc) {
            bool match = true;
            for (int k = 1; k <= N && match; ++k) {
                RatFn ours{Poly(p[k]), A[k].den};
                match = ours.equals(mul(scheme_eigenvalue(s, schemes[sc], k), phi[k]));
            }
            if (!match) continue;
            if (scheme_of[x] >= 0 || line_of[sc] >= 0) rep.eigenvalues_ok = false;
            scheme_of[x] = static_cast<int>(sc);
            line_of[sc] = static_cast<int>(x);
        }
        if (scheme_of[x] < 0) rep.eigenvalues_ok = false;
    }
    if (!rep.eigenvalues_ok) return rep;

    // rho_k(u) X_k(u) xi / Phi_k(u) at u = nu_ki for X = B (down) or C (up)
    auto transition = [&](std::size_t x, int k, int i, bool down) {
        const GZScheme& sch = schemes[scheme_of[x]];
        const int lam = sch.at(d.M + k, i);
        const Rat nu = Rat(i - 1 - lam) - s.h;
        RatFnMatrix w = down ? quantum_minor_apply(g, seq_i(k), seq_j(k), lines[x].vector)
                             : quantum_minor_apply(g, seq_j(k), seq_i(k), lines[x].vector);
        const RatFn r = rho(d, s.h, k);
        RatFnMatrix v{(r.num * phi[k].den) * w.num, r.den * phi[k].num * w.den};
        GZScheme nb = sch;
        nb.at(d.M + k, i) += down ? -1 : 1;
        const bool target = is_valid_scheme(nb, d);
        ++rep.transitions;
        // the expression must be a polynomial in u
        for (std::size_t row = 0; row < g.dim && !v.num.is_zero(); ++row) {
            Poly q, rem;
            divmod(v.num.entry(row, 0), v.den, q, rem);
            if (!rem.is_zero()) return false;
        }
        Vec val(g.dim);
        if (!v.num.is_zero()) {
            LaurentTerm lt = laurent_leading(v, nu);
            if (lt.order < 0) return false;
            if (lt.order == 0) val = as_vec(lt.coeff);
        }
        if (!target) return is_zero(val);
        auto it = std::find(schemes.begin(), schemes.end(), nb);
        return proportional(lines[line_of[it - schemes.begin()]].vector, val);
    };
    rep.lowering_ok = rep.raising_ok = true;
    for (std::size_t x = 0; x < lines.size(); ++x)
        for (int k = 1; k < N; ++k)
            for (int i = 1; i <= d.M + k; ++i) {
                if (!transition(x, k, i, true)) rep.lowering_ok = false;
                if (!transition(x, k, i, false)) rep.raising_ok = false;
            }
    return rep;
}

bool coproduct_minor_check(const std::vector<ModuleSpec>& specs, const std::vector<int>& i_seq,
                           const std::vector<int>& j_seq, const std::vector<Rat>& points) {
    const int N = common_rank(specs);
    check_pair(i_seq, j_seq, N);
    const int k = static_cast<int>(i_seq.size());
    GeneratorSet whole = module_action(specs, static_cast<std::size_t>(-1));
    std::vector<GeneratorSet> parts;
    for (const auto& s : specs) parts.push_back(module_action({s}, static_cast<std::size_t>(-1)));
    // all increasing k-subsets of 1..N
    std::vector<std::vector<int>> subsets;
    std::vector<int> sel(N, 0);
    std::fill(sel.begin(), sel.begin() + k, 1);
    do {
        std::vector<int> s;
        for (int x = 0; x < N; ++x)
            if (sel[x]) s.push_back(x + 1);
        subsets.push_back(s);
    } while (std::prev_permutation(sel.begin(), sel.end()));
    const std::size_t n = specs.size();
    for (const auto& u : points) {
        RatMatrix lhs = quantum_minor_at(whole, i_seq, j_seq, u);
        // chain[s][K] = sum over paths ending at subset K after factor s
        std::map<std::vector<int>, RatMatrix> acc;
        for (const auto& K : subsets)
            acc[K] = quantum_minor_at(parts[0], i_seq, n == 1 ? j_seq : K, u);
        if (n == 1) {
            if (acc.begin()->second != lhs) return false;
            continue;
        }
        for (std::size_t s = 1; s < n; ++s) {
            std::map<std::vector<int>, RatMatrix> next;
            const bool last = s + 1 == n;
            for (const auto& K2 : subsets) {
                if (last && K2 != j_seq) continue;
                RatMatrix sum;
                bool first = true;
                for (const auto& K1 : subsets) {
                    RatMatrix term = kron(acc[K1], quantum_minor_at(parts[s], K1, K2, u));
                    if (first) sum = term;
                    else sum += term;
                    first = false;
                }
                next[K2] = std::move(sum);
            }
            acc = std::move(next);
        }
        if (acc.at(j_seq) != lhs) return false;
    }
    return true;
}

}  // namespace yangirr
