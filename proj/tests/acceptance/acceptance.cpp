// Acceptance suite: one PASS/FAIL line per criterion. A criterion passes when
// every check holds and the wall time stays within its budget.
#include "yangirr/criteria.hpp"
#include "yangirr/diagrams.hpp"
#include "yangirr/errors.hpp"
#include "yangirr/yangian.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace yangirr;

namespace {

Rat frac(long a, long b) {
    Rat r(a, b);
    r.canonicalize();
    return r;
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

ModuleSpec vec(int N, const Rat& h) {
    Weight l(N, 0);
    l[0] = 1;
    return {l, {}, N, h};
}

ModuleSpec rect(int k, int l, int N, const Rat& h) {
    Weight w(N, 0);
    for (int i = 0; i < l; ++i) w[i] = k;
    return {w, {}, N, h};
}

std::string str(std::size_t n) { return std::to_string(n); }

// Diagrams with at most 6 boxes for the symmetrizer and GZ counts.
std::vector<SkewDiagram> small_corpus() {
    return {
        make_skew({5, 5, 3, 2}, {3, 2}, 2),  // top six boxes of the nine-box example
        make_skew({1, 0}, {}, 2),
        make_skew({2, 1, 0}, {}, 3),
        make_skew({3, 1, 0}, {}, 3),
        make_skew({2, 2, 0}, {}, 3),
        make_skew({3, 2, 1, 0}, {2, 1}, 2),
        make_skew({4, 2, 1}, {2}, 2),
        make_skew({2, 1, 1}, {}, 3),
        make_skew({3, 3, 1, 0}, {2, 1}, 2),
        usual_young({2, 1}, 2),
        usual_young({3, 2}, 2),
        reversed_young({2, 1}, 2),
        make_skew({3, 2, 2, 0}, {1}, 3),
    };
}

Outcome c1_rmatrix() {
    const std::vector<Rat> s = {frac(1, 3), frac(-5, 7), frac(9, 4), frac(-11, 6), frac(2, 9), 3, frac(-1, 2)};
    std::size_t triples = 0;
    for (int N = 2; N <= 3; ++N) {
        const RatMatrix idN = RatMatrix::identity(N), id2 = RatMatrix::identity(N * N);
        // R13 = P23 R12 P23
        const RatMatrix p23 = kron(idN, flip(N));
        for (std::size_t t = 0; t + 2 < s.size(); ++t) {
            const Rat u = s[t], v = s[t + 1], w = s[t + 2];
            if (yang_r(N, u, v) * yang_r(N, v, u) != id2 * (1 - 1 / ((u - v) * (u - v))))
                return {false, "unitarity fails"};
            const RatMatrix r12 = kron(yang_r(N, u, v), idN);
            const RatMatrix r13 = p23 * kron(yang_r(N, u, w), idN) * p23;
            const RatMatrix r23 = kron(idN, yang_r(N, v, w));
            if (r12 * r13 * r23 != r23 * r13 * r12) return {false, "Yang-Baxter fails"};
            ++triples;
        }
    }
    return {true, str(triples) + " triples, N in {2,3}"};
}

Outcome c2_symmetrizer_rank() {
    std::size_t n = 0, dense = 0;
    for (const auto& d : small_corpus()) {
        const std::size_t ssyt = enumerate_ssyt(d, d.N).size();
        const auto base = base_realization(d);
        if (base->image.dim() != ssyt) return {false, "rank != |SSYT| for lambda " + weight_str(d.lambda)};
        std::size_t len = 1;
        for (std::size_t p = 0; p < d.size(); ++p) len *= d.N;
        if (len <= 256) {
            if (rank(base->sym.y_matrix()) != ssyt) return {false, "dense rank mismatch"};
            ++dense;
        }
        ++n;
    }
    return {true, str(n) + " diagrams, " + str(dense) + " also by dense rank"};
}

Outcome c3_gz_ssyt() {
    std::size_t n = 0;
    for (const auto& d : small_corpus()) {
        if (enumerate_gz_schemes(d).size() != enumerate_ssyt(d, d.N).size())
            return {false, "mismatch for lambda " + weight_str(d.lambda)};
        ++n;
    }
    return {true, str(n) + " diagrams"};
}

Outcome c4_singular() {
    const std::vector<ModuleSpec> specs = {
        vec(2, 0), vec(3, frac(1, 2)), {{2, 0}, {}, 2, 1}, usual_spec({2, 1}, 2, 0),
        {{2, 1, 0}, {}, 3, frac(-1, 3)}, {{3, 2, 1, 0}, {2, 1}, 2, 2}, {{5, 5, 3, 2}, {3, 2}, 2, 0},
        {{2, 2, 0}, {}, 3, 1}, {{1, 1, 0}, {}, 3, frac(2, 5)},
    };
    const std::vector<Rat> pts = {frac(3, 7), frac(-9, 11), frac(13, 17), frac(29, 13)};
    for (const auto& s : specs) {
        const GeneratorSet g = module_action({s});
        const Vec z = singular_vector({s});
        for (int k = 1; k < s.N; ++k)
            for (const Rat& u : pts)
                if (!is_zero(abcd_series(g, k).C(u).apply(z))) return {false, "C_k zeta != 0"};
        // eigenvalue of A_k on zeta: top scheme formula times prod_{j<k} f(u - j)
        const GZScheme top = scheme_top(diagram_of(s));
        const RatFn f = twist_factor(s);
        RatFn acc{Poly(1), Poly(1)};
        for (int k = 1; k <= s.N; ++k) {
            acc = {acc.num * f.num.shifted(-(k - 1)), acc.den * f.den.shifted(-(k - 1))};
            const RatFn expect = scheme_eigenvalue(s, top, k);
            if (!a_eigenvalue(g, k, z).equals({expect.num * acc.num, expect.den * acc.den}))
                return {false, "A_k eigenvalue mismatch for lambda " + weight_str(s.lambda)};
        }
        if (!drinfeld_check(g, z, drinfeld_roots(s))) return {false, "Drinfeld roots mismatch"};
    }
    return {true, str(specs.size()) + " modules"};
}

Outcome c5_minors() {
    const std::vector<std::vector<ModuleSpec>> mods = {
        {vec(2, 0), vec(2, 1)}, {usual_spec({2, 1}, 2, 0)}, {{{2, 1, 0}, {}, 3, frac(1, 3)}},
        {vec(3, 0), vec(3, 2)}, {{{3, 2, 1, 0}, {2, 1}, 2, 0}, vec(2, frac(1, 2))}, {{{2, 2, 0}, {}, 3, 0}},
    };
    const Rat u = frac(5, 7);
    for (const auto& m : mods) {
        const GeneratorSet g = module_action(m);
        for (int k = 1; k <= g.N; ++k) {
            std::vector<std::vector<int>> js = {seq_i(k)};
            if (k < g.N) js.push_back(seq_j(k));
            for (const auto& j : js) {
                if (!quantum_minor(g, seq_i(k), j, false).equals(quantum_minor(g, seq_i(k), j, true)))
                    return {false, "orderings differ"};
                if (!quantum_minor(g, j, seq_i(k), false).equals(quantum_minor(g, j, seq_i(k), true)))
                    return {false, "orderings differ"};
            }
        }
        const RatFnMatrix qdet = abcd_series(g, g.N).A;
        const RatMatrix q = qdet(u);
        for (const auto& c : g.coefficients())
            if (q * c != c * q) return {false, "A_N not central"};
        for (const auto& c : qdet.num.coeffs())
            for (const auto& t : g.coefficients())
                if (c * t != t * c) return {false, "A_N coefficient not central"};
    }
    return {true, str(mods.size()) + " modules"};
}

Outcome c6_intertwining() {
    struct Case {
        Weight a, b;
        Rat h;
    };
    const std::vector<Case> cases = {
        {{1, 0}, {1, 0}, -1}, {{1, 0}, {1, 0}, 0}, {{1, 0}, {1, 0}, 1}, {{1, 0}, {2, 0}, 2},
        {{2, 1}, {1, 0}, -1}, {{1, 1}, {2, 0}, 0}, {{2, 0}, {1, 1}, 1}, {{2, 1}, {2, 0}, frac(1, 3)},
    };
    std::size_t singular = 0;
    for (const auto& c : cases) {
        const ModuleSpec a = reversed_spec(c.a, 2, c.h), b = usual_spec(c.b, 2, 0);
        const Intertwiner r = intertwiner(a, b);
        if (!check_intertwining(r, a, b)) return {false, "intertwining fails"};
        singular += !r.invertible();
    }
    return {true, str(cases.size()) + " cases, " + str(singular) + " singular"};
}

Outcome c7_noninvertible() {
    const std::vector<Weight> shapes = {{0, 0}, {1, 0}, {2, 0}, {1, 1}, {3, 0}, {2, 1}};
    std::size_t rows = 0, singular = 0;
    for (const auto& al : shapes)
        for (const auto& be : shapes) {
            const auto set = thm23_noninvertible_set(al, be, 2);
            for (int h = -6; h <= 6; ++h) {
                const Intertwiner r = intertwiner(reversed_spec(al, 2, h), usual_spec(be, 2, 0));
                const bool predicted = std::binary_search(set.begin(), set.end(), h);
                if (predicted != !r.invertible())
                    return {false, "disagreement at alpha " + weight_str(al) + " beta " + weight_str(be) +
                                       " h " + std::to_string(h)};
                singular += predicted;
                ++rows;
            }
        }
    return {true, str(rows) + " rows, " + str(singular) + " singular, 0 disagreements"};
}

struct RectangleSweep {
    std::size_t rows = 0, reducible = 0, max_dim = 0, cyclic_checked = 0, cocyclic_checked = 0;
    std::string failure;
    std::string cyclic_failure;
};

const RectangleSweep& rectangle_sweep() {
    static const RectangleSweep result = [] {
        RectangleSweep out;
        const std::vector<std::pair<int, int>> shapes = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
        for (const auto& [k1, l1] : shapes)
            for (const auto& [k2, l2] : shapes)
                for (int d = -5; d <= 5; ++d) {
                    const std::vector<ModuleSpec> t = {rect(k1, l1, 2, d), rect(k2, l2, 2, 0)};
                    const GeneratorSet g = module_action(t);
                    out.max_dim = std::max(out.max_dim, g.dim);
                    const bool oracle = irreducible(g);
                    const bool crit = thm34_irreducible(t).irreducible;
                    ++out.rows;
                    out.reducible += !oracle;
                    if (oracle != crit && out.failure.empty())
                        out.failure = "disagreement at (" + std::to_string(k1) + "x" + std::to_string(l1) + ", " +
                                      std::to_string(k2) + "x" + std::to_string(l2) + ") d " + std::to_string(d);
                    const Vec z = singular_vector(t);
                    if (prop31_cyclic_condition(t).holds) {
                        ++out.cyclic_checked;
                        if (!cyclicity_oracle(g, z) && out.cyclic_failure.empty())
                            out.cyclic_failure = "cyclicity fails at d " + std::to_string(d);
                    }
                    if (prop32_cocyclic_condition(t).holds) {
                        ++out.cocyclic_checked;
                        if (!cocyclicity_oracle(g, z) && out.cyclic_failure.empty())
                            out.cyclic_failure = "cocyclicity fails at d " + std::to_string(d);
                    }
                }
        return out;
    }();
    return result;
}

Outcome c8_rectangles() {
    const RectangleSweep& s = rectangle_sweep();
    if (!s.failure.empty()) return {false, s.failure};
    if (s.max_dim > 36) return {false, "realized dim " + str(s.max_dim) + " > 36"};
    return {true, str(s.rows) + " rows, " + str(s.reducible) + " reducible, max dim " + str(s.max_dim)};
}

Outcome c9_sufficient() {
    // pool of small modules: (lambda, mu, N)
    const std::vector<std::tuple<Weight, Weight, int>> pool = {
        {{1, 0}, {}, 2},       {{2, 0}, {}, 2},          {{2, 1}, {}, 2},         {{3, 1}, {}, 2},
        {{3, 2, 1, 0}, {2, 1}, 2}, {{4, 2, 1}, {2}, 2},  {{1, 0, 0}, {}, 3},      {{1, 1, 0}, {}, 3},
        {{2, 1, 0}, {}, 3},    {{2, 0, 0}, {}, 3},       {{2, 2, 0}, {}, 3},      {{2, 1, 1, 0}, {1}, 3},
    };
    std::mt19937 rng(1234567);
    std::size_t tuples = 0, sufficient = 0, attempts = 0, skipped = 0, max_dim = 0;
    while (sufficient < 30 && attempts < 5000) {
        ++attempts;
        const int N = rng() % 2 ? 2 : 3;
        const int n = rng() % 2 ? 2 : 3;
        std::vector<ModuleSpec> t;
        for (int f = 0; f < n; ++f) {
            std::vector<std::size_t> choices;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (std::get<2>(pool[i]) == N) choices.push_back(i);
            const auto& [lam, mu, nn] = pool[choices[rng() % choices.size()]];
            // h in steps of 1/2 over [-3, 3]
            const Rat h = frac(static_cast<long>(rng() % 13) - 6, 2);
            t.push_back({lam, mu, nn, h});
        }
        std::size_t dim = 1;
        bool boxes_ok = true;
        for (const auto& s : t) {
            const SkewDiagram d = diagram_of(s);
            boxes_ok = boxes_ok && d.size() <= 5;
            dim *= enumerate_ssyt(d, N).size();
        }
        if (!boxes_ok || dim > 48 || dim < 2) continue;
        ++tuples;
        if (!thm33_irreducible(t).holds) {
            ++skipped;
            continue;
        }
        ++sufficient;
        max_dim = std::max(max_dim, dim);
        if (!irreducible(module_action(t))) return {false, "counterexample at tuple " + str(tuples)};
    }
    if (sufficient < 30) return {false, "only " + str(sufficient) + " tuples satisfied the criterion"};
    return {true, str(tuples) + " tuples, " + str(sufficient) + " with criterion true, 0 counterexamples, max dim " +
                      str(max_dim) + ", " + str(skipped) + " not covered"};
}

Outcome c10_gamma() {
    std::vector<Weight> box;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) box.push_back({a, b, c});
    std::size_t pairs = 0;
    for (const auto& al : box)
        for (const auto& be : box) {
            const auto lr = lr_expand(al, be, 3);
            for (int i = 1; i <= 3; ++i) {
                int lo = 1 << 20, hi = -(1 << 20);
                for (const auto& [g, m] : lr) {
                    lo = std::min(lo, g[i - 1]);
                    hi = std::max(hi, g[i - 1]);
                }
                if (gamma_extremes(al, be, i) != std::pair<int, int>{lo, hi})
                    return {false, "mismatch at " + weight_str(al) + ", " + weight_str(be)};
            }
            ++pairs;
        }
    return {true, str(pairs) + " pairs"};
}

Outcome c11_jucys_murphy() {
    const std::vector<std::pair<Weight, Weight>> pairs = {{{1, 0}, {1, 0}}, {{2, 0}, {1, 1}}, {{2, 1}, {1, 0}},
                                                          {{1, 0}, {2, 1}}, {{1, 1}, {2, 0}}};
    const std::vector<std::pair<Rat, Rat>> pts = {{frac(1, 2), frac(1, 3)}, {4, frac(-2, 7)}, {frac(-5, 3), frac(3, 11)}};
    for (const auto& [al, be] : pairs)
        for (const auto& [h, z] : pts) {
            const ModuleSpec a = reversed_spec(al, 2, 0), b = usual_spec(be, 2, 0);
            if (jucys_murphy_form(a, b, h, z) != intertwiner_product_at(a, b, h, z))
                return {false, "mismatch at alpha " + weight_str(al) + " beta " + weight_str(be)};
        }
    return {true, str(pairs.size()) + " pairs x " + str(pts.size()) + " points"};
}

Outcome c12_cyclicity() {
    const RectangleSweep& s = rectangle_sweep();
    if (!s.cyclic_failure.empty()) return {false, s.cyclic_failure};
    return {true, str(s.cyclic_checked) + " cyclic and " + str(s.cocyclic_checked) + " cocyclic rows confirmed"};
}

Outcome c13_gz() {
    const std::vector<ModuleSpec> specs = {
        vec(2, frac(1, 3)), usual_spec({2, 1}, 2, 0), {{2, 1, 0}, {}, 3, frac(1, 2)}, {{2, 0}, {}, 2, 1},
        {{3, 2, 1, 0}, {2, 1}, 2, frac(1, 3)}, vec(3, 0),
    };
    std::size_t lines = 0, transitions = 0;
    for (const auto& s : specs) {
        const GZReport r = gz_eigenbasis_check(s);
        if (!r.ok()) return {false, "transition check fails for lambda " + weight_str(s.lambda)};
        lines += r.lines;
        transitions += r.transitions;
    }
    return {true, str(specs.size()) + " modules, " + str(lines) + " lines, " + str(transitions) + " transitions"};
}

Outcome c14_coproduct() {
    const std::vector<Rat> pts = {frac(1, 3), frac(-5, 7), frac(7, 11)};
    std::size_t checks = 0;
    for (int n = 2; n <= 3; ++n) {
        std::vector<ModuleSpec> t;
        for (int f = 0; f < n; ++f) t.push_back(vec(2, frac(f * 3 - 1, 2)));
        for (int k = 1; k <= 2; ++k) {
            std::vector<std::vector<int>> seqs = k == 1 ? std::vector<std::vector<int>>{{1}, {2}}
                                                        : std::vector<std::vector<int>>{{1, 2}};
            for (const auto& i : seqs)
                for (const auto& j : seqs) {
                    if (!coproduct_minor_check(t, i, j, pts)) return {false, "mismatch for n " + std::to_string(n)};
                    ++checks;
                }
        }
    }
    return {true, str(checks) + " minor identities"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "R-matrix unitarity and Yang-Baxter", 1, c1_rmatrix},
        {2, "symmetrizer rank equals SSYT count", 30, c2_symmetrizer_rank},
        {3, "GZ schemes equal SSYT count", 10, c3_gz_ssyt},
        {4, "singular vectors, A_k eigenvalues, Drinfeld roots", 60, c4_singular},
        {5, "quantum minor orderings and centre", 60, c5_minors},
        {6, "intertwining property", 120, c6_intertwining},
        {7, "noninvertible set equals intertwiner rank drops", 600, c7_noninvertible},
        {8, "rectangle criterion equals irreducibility oracle", 900, c8_rectangles},
        {9, "sufficient criterion is sound", 1200, c9_sufficient},
        {10, "gamma extremes equal LR min/max", 60, c10_gamma},
        {11, "Jucys-Murphy form equals ordered product", 60, c11_jucys_murphy},
        {12, "cyclicity and cocyclicity on rectangle rows", 900, c12_cyclicity},
        {13, "GZ eigenbasis transitions", 120, c13_gz},
        {14, "coproduct of quantum minors", 30, c14_coproduct},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = o.ok && secs <= c.budget_s;
        if (o.ok && !pass) o.detail += "; over budget";
        failed += !pass;
        std::printf("C%02d %s  %-50s %8.2fs / %5.0fs  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs, c.budget_s,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
