#include "yangirr/criteria.hpp"
#include "yangirr/errors.hpp"

#include <algorithm>
#include <set>

namespace yangirr {

ModuleSpec usual_spec(const Weight& beta, int N, const Rat& h) {
    const SkewDiagram d = usual_young(beta, N);
    return {d.lambda, d.mu, N, h};
}

ModuleSpec reversed_spec(const Weight& alpha, int N, const Rat& h) {
    const SkewDiagram d = reversed_young(alpha, N);
    return {d.lambda, d.mu, N, h};
}

SkewDiagram diagram_of(const ModuleSpec& s) { return make_skew(s.lambda, s.mu, s.N); }

int common_rank(const std::vector<ModuleSpec>& specs) {
    if (specs.empty()) throw Error(ErrorKind::InvalidInput, "no module specs");
    const int N = specs[0].N;
    for (const auto& s : specs) {
        if (s.N != N) throw Error(ErrorKind::InvalidInput, "specs mix different N");
        diagram_of(s);
    }
    return N;
}

DrinfeldData drinfeld_roots(const ModuleSpec& s) {
    const SkewDiagram d = diagram_of(s);
    DrinfeldData out;
    out.roots.resize(std::max(0, s.N - 1));
    for (int k = 1; k < s.N; ++k) {
        for (int c : column_bottom_contents(d, k)) out.roots[k - 1].push_back(-s.h - c);
        std::sort(out.roots[k - 1].begin(), out.roots[k - 1].end());
    }
    return out;
}

std::vector<Rat> q_zero_set(const ModuleSpec& s, int k) {
    if (k < 1 || k >= s.N) throw Error(ErrorKind::InvalidInput, "k out of range");
    const std::vector<Rat> roots = drinfeld_roots(s).roots[k - 1];
    auto mult = [&](const Rat& x) { return std::count(roots.begin(), roots.end(), x); };
    std::vector<Rat> out;
    for (const auto& x : roots)
        if (mult(x) > mult(x + 1)) out.push_back(x);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

XSet x_set_enumerated(const ModuleSpec& s) {
    const SkewDiagram d = diagram_of(s);
    XSet out;
    out.values.resize(std::max(0, s.N - 1));
    std::vector<std::set<Rat>> acc(out.values.size());
    for (auto sch : enumerate_gz_schemes(d)) {
        for (int k = 1; k < s.N; ++k) {
            const int m = d.M + k;
            for (int i = 1; i <= m; ++i) {
                int v = sch.at(m, i);
                sch.at(m, i) = v - 1;
                if (is_valid_scheme(sch, d)) acc[k - 1].insert(Rat(i - v - 1) - s.h);
                sch.at(m, i) = v;
            }
        }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) out.values[k].assign(acc[k].begin(), acc[k].end());
    return out;
}

bool x_set_rectangle(const ModuleSpec& s, XSet& out) {
    if (!s.mu.empty()) return false;
    const SkewDiagram d = diagram_of(s);
    auto rect = as_rectangle(d);
    if (!rect || rect->height <= 0 || rect->height >= s.N) return false;
    const int kw = rect->width, l = rect->height, N = s.N;
    // shift to the normalized rectangle with top-left content 0
    const Rat h = s.h + rect->top_left;
    out.values.assign(N - 1, {});
    for (int k = 1; k < N; ++k) {
        const int lo = std::max(0, l - N + k) - kw, hi = std::min(k, l);
        for (int t = lo + 1; t < hi; ++t) out.values[k - 1].push_back(Rat(t - 1) - h);
        std::sort(out.values[k - 1].begin(), out.values[k - 1].end());
    }
    return true;
}

XSet x_set(const ModuleSpec& s) {
    XSet out;
    if (x_set_rectangle(s, out)) return out;
    return x_set_enumerated(s);
}

namespace {

enum class Direction { Both, Forward, Backward };

CriterionReport pair_test(const std::vector<ModuleSpec>& specs, Direction dir) {
    const int N = common_rank(specs);
    const int n = static_cast<int>(specs.size());
    std::vector<XSet> xs;
    std::vector<std::vector<std::vector<Rat>>> qs(n);
    for (const auto& s : specs) xs.push_back(x_set(s));
    for (int s = 0; s < n; ++s)
        for (int k = 1; k < N; ++k) qs[s].push_back(q_zero_set(specs[s], k));
    CriterionReport rep;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            if (r == s) continue;
            if (dir == Direction::Forward && r > s) continue;
            if (dir == Direction::Backward && r < s) continue;
            for (int k = 1; k < N; ++k)
                for (const auto& x : xs[r].values[k - 1])
                    if (std::binary_search(qs[s][k - 1].begin(), qs[s][k - 1].end(), x)) {
                        rep.holds = false;
                        rep.witnesses.push_back({r + 1, s + 1, k, x});
                    }
        }
    return rep;
}

}  // namespace

CriterionReport thm33_irreducible(const std::vector<ModuleSpec>& specs) {
    return pair_test(specs, Direction::Both);
}

CriterionReport prop31_cyclic_condition(const std::vector<ModuleSpec>& specs) {
    return pair_test(specs, Direction::Forward);
}

CriterionReport prop32_cocyclic_condition(const std::vector<ModuleSpec>& specs) {
    return pair_test(specs, Direction::Backward);
}

std::vector<int> thm23_noninvertible_set(const Weight& alpha, const Weight& beta, int N) {
    std::set<int> out;
    for (int i = 1; i <= N; ++i) {
        Weight a = alpha, b = beta;
        a.resize(std::max<std::size_t>(a.size(), N), 0);
        b.resize(std::max<std::size_t>(b.size(), N), 0);
        a.resize(N);
        b.resize(N);
        auto [lo, hi] = gamma_extremes(a, b, i);
        for (int h = lo - i + 1; h <= hi - i; ++h) out.insert(h);
    }
    return {out.begin(), out.end()};
}

void thm34_windows(int N, int kr, int lr, int ks, int ls, int lo[2], int hi[2]) {
    lo[0] = -std::min(ls, N - lr) - kr;
    hi[0] = std::min(0, lr - ls) + std::min(0, ks - kr);
    lo[1] = std::max(0, lr - ls) + std::max(0, ks - kr);
    hi[1] = std::min(lr, N - ls) + ks;
}

RectangleReport thm34_irreducible(const std::vector<ModuleSpec>& specs) {
    const int N = common_rank(specs);
    struct Norm {
        int k, l;
        Rat h;
    };
    std::vector<Norm> v;
    for (std::size_t s = 0; s < specs.size(); ++s) {
        auto rect = as_rectangle(diagram_of(specs[s]));
        if (!rect)
            throw Error(ErrorKind::NotRectangular, "spec " + std::to_string(s + 1) + " is not a rectangle");
        v.push_back({rect->width, rect->height, specs[s].h + rect->top_left});
    }
    RectangleReport rep;
    for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t s = r + 1; s < v.size(); ++s) {
            // one-dimensional factors never obstruct
            if (v[r].l == 0 || v[r].l == N || v[s].l == 0 || v[s].l == N) continue;
            const Rat d = v[r].h - v[s].h;
            if (!is_integer(d)) continue;
            int lo[2], hi[2];
            thm34_windows(N, v[r].k, v[r].l, v[s].k, v[s].l, lo, hi);
            for (int p = 0; p < 2; ++p)
                if (Rat(lo[p]) < d && d < Rat(hi[p])) {
                    rep.irreducible = false;
                    rep.witnesses.push_back({static_cast<int>(r) + 1, static_cast<int>(s) + 1, p + 1,
                                             lo[p], hi[p], d});
                }
        }
    return rep;
}

}  // namespace yangirr
