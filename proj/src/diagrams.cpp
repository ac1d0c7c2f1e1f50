#include "yangirr/diagrams.hpp"
#include "yangirr/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace yangirr {

bool is_nonincreasing(const Weight& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] > w[i - 1]) return false;
    return true;
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

int SkewDiagram::index_of(int row, int col) const {
    for (std::size_t p = 0; p < boxes.size(); ++p)
        if (boxes[p].row == row && boxes[p].col == col) return static_cast<int>(p);
    return -1;
}

namespace {

// Boxes of lambda/mu where rows past mu use `floor`.
std::vector<Box> box_set(const Weight& lambda, const Weight& mu, int floor) {
    std::vector<Box> out;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        int lo = i < mu.size() ? mu[i] : floor;
        for (int j = lo + 1; j <= lambda[i]; ++j) out.push_back({static_cast<int>(i) + 1, j});
    }
    return out;
}

int tallest_column(const std::vector<Box>& boxes, int* where) {
    std::map<int, int> h;
    for (const auto& b : boxes) ++h[b.col];
    int best = 0;
    for (auto [c, n] : h)
        if (n > best) {
            best = n;
            if (where) *where = c;
        }
    return best;
}

}  // namespace

SkewDiagram make_skew(Weight lambda, Weight mu, int N) {
    if (N < 1) throw Error(ErrorKind::InvalidInput, "N must be at least 1");
    if (!is_nonincreasing(lambda))
        throw Error(ErrorKind::InvalidInput, "lambda " + weight_str(lambda) + " is not non-increasing");
    if (!is_nonincreasing(mu))
        throw Error(ErrorKind::InvalidInput, "mu " + weight_str(mu) + " is not non-increasing");
    const int M = static_cast<int>(mu.size());
    const int L = static_cast<int>(lambda.size());
    if (L < M + N) {
        if (M == 0 && (lambda.empty() || lambda.back() >= 0)) {
            lambda.resize(N, 0);
        } else {
            throw Error(ErrorKind::InvalidInput, "lambda has length " + std::to_string(L) +
                                                     ", expected M+N = " + std::to_string(M + N));
        }
    } else if (L > M + N) {
        int floor = M == 0 ? std::min(0, lambda.back()) : lambda.back();
        int col = 0;
        int t = tallest_column(box_set(lambda, mu, floor), &col);
        if (t > N)
            throw Error(ErrorKind::EmptyModule, "column " + std::to_string(col) + " has " +
                                                    std::to_string(t) + " boxes, more than N = " +
                                                    std::to_string(N));
        throw Error(ErrorKind::InvalidInput, "lambda has length " + std::to_string(L) +
                                                 ", expected M+N = " + std::to_string(M + N));
    }
    for (int i = 0; i < M; ++i)
        if (lambda[i] < mu[i])
            throw Error(ErrorKind::EmptyModule, "lambda_" + std::to_string(i + 1) + " = " +
                                                    std::to_string(lambda[i]) + " < mu_" +
                                                    std::to_string(i + 1) + " = " + std::to_string(mu[i]));
    if (M > 0 && mu[M - 1] < lambda[M + N - 1])
        throw Error(ErrorKind::EmptyModule, "mu_M = " + std::to_string(mu[M - 1]) +
                                                " < lambda_{M+N} = " + std::to_string(lambda[M + N - 1]));

    SkewDiagram d;
    d.lambda = lambda;
    d.mu = mu;
    d.N = N;
    d.M = M;
    d.boxes = box_set(lambda, mu, lambda[M + N - 1]);
    int col = 0;
    int t = tallest_column(d.boxes, &col);
    if (t > N)
        throw Error(ErrorKind::EmptyModule, "column " + std::to_string(col) + " has " + std::to_string(t) +
                                                " boxes, more than N = " + std::to_string(N));
    std::map<int, Column> cols;
    for (std::size_t p = 0; p < d.boxes.size(); ++p) {
        d.contents.push_back(d.boxes[p].content());
        auto& c = cols[d.boxes[p].col];
        c.col = d.boxes[p].col;
        c.cells.push_back(p);
    }
    for (auto& [j, c] : cols) d.columns.push_back(std::move(c));
    return d;
}

std::vector<int> row_tableau_contents(const SkewDiagram& d) { return d.contents; }

InverseColumnTableau inverse_column_tableau(const SkewDiagram& d) {
    InverseColumnTableau t;
    t.number.assign(d.size(), 0);
    t.g.assign(d.size(), 0);
    int q = 0;
    for (auto it = d.columns.rbegin(); it != d.columns.rend(); ++it)
        for (auto p = it->cells.rbegin(); p != it->cells.rend(); ++p) {
            ++q;
            t.number[*p] = q;
            t.g[q - 1] = static_cast<int>(*p) + 1;
        }
    return t;
}

std::vector<int> column_bottom_contents(const SkewDiagram& d, int k) {
    std::vector<int> out;
    for (const auto& c : d.columns)
        if (c.height() == k) out.push_back(d.contents[c.cells.back()]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Filling> enumerate_ssyt(const SkewDiagram& d, int N) {
    const std::size_t n = d.size();
    std::vector<int> left(n, -1), above(n, -1);
    for (std::size_t p = 0; p < n; ++p) {
        left[p] = d.index_of(d.boxes[p].row, d.boxes[p].col - 1);
        above[p] = d.index_of(d.boxes[p].row - 1, d.boxes[p].col);
    }
    std::vector<Filling> out;
    Filling f(n, 0);
    auto rec = [&](auto&& self, std::size_t p) -> void {
        if (p == n) {
            out.push_back(f);
            return;
        }
        int lo = 1;
        if (left[p] >= 0) lo = std::max(lo, f[left[p]]);
        if (above[p] >= 0) lo = std::max(lo, f[above[p]] + 1);
        for (int v = lo; v <= N; ++v) {
            f[p] = v;
            self(self, p + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<std::optional<int>>> tableau_grid(const SkewDiagram& d, const Filling& f) {
    std::vector<std::vector<std::optional<int>>> grid;
    if (d.boxes.empty()) return grid;
    int r0 = d.boxes.front().row, r1 = d.boxes.back().row;
    int c0 = d.boxes.front().col, c1 = c0;
    for (const auto& b : d.boxes) {
        c0 = std::min(c0, b.col);
        c1 = std::max(c1, b.col);
    }
    grid.assign(r1 - r0 + 1, std::vector<std::optional<int>>(c1 - c0 + 1));
    for (std::size_t p = 0; p < d.size(); ++p) grid[d.boxes[p].row - r0][d.boxes[p].col - c0] = f[p];
    return grid;
}

bool is_valid_scheme(const GZScheme& s, const SkewDiagram& d) {
    const int T = d.M + d.N;
    if (static_cast<int>(s.rows.size()) != T) return false;
    for (int m = 1; m <= T; ++m)
        if (static_cast<int>(s.rows[m - 1].size()) != m) return false;
    for (int i = 1; i <= T; ++i)
        if (s.at(T, i) != d.lambda[i - 1]) return false;
    for (int m = 1; m <= d.M; ++m)
        for (int i = 1; i <= m; ++i)
            if (s.at(m, i) != d.mu[i - 1]) return false;
    for (int m = 2; m <= T; ++m)
        for (int i = 1; i < m; ++i)
            if (!(s.at(m, i) >= s.at(m - 1, i) && s.at(m - 1, i) >= s.at(m, i + 1))) return false;
    return true;
}

std::vector<GZScheme> enumerate_gz_schemes(const SkewDiagram& d) {
    const int T = d.M + d.N;
    GZScheme s;
    s.rows.resize(T);
    for (int m = 1; m <= T; ++m) s.rows[m - 1].assign(m, 0);
    s.rows[T - 1] = d.lambda;
    for (int m = 1; m <= d.M; ++m)
        for (int i = 1; i <= m; ++i) s.at(m, i) = d.mu[i - 1];
    std::vector<GZScheme> out;
    // fill rows T-1 down to M+1 entry by entry
    auto rec = [&](auto&& self, int m, int i) -> void {
        if (m == d.M) {
            if (m == 0) {
                out.push_back(s);
                return;
            }
            for (int j = 1; j <= m; ++j)
                if (!(s.at(m + 1, j) >= s.at(m, j) && s.at(m, j) >= s.at(m + 1, j + 1))) return;
            out.push_back(s);
            return;
        }
        if (i > m) {
            self(self, m - 1, 1);
            return;
        }
        for (int v = s.at(m + 1, i + 1); v <= s.at(m + 1, i); ++v) {
            s.at(m, i) = v;
            self(self, m, i + 1);
        }
    };
    rec(rec, T - 1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GZScheme> enumerate_gz_schemes(const Weight& lambda, const Weight& mu, int N) {
    return enumerate_gz_schemes(make_skew(lambda, mu, N));
}

GZScheme scheme_top(const SkewDiagram& d) {
    const int T = d.M + d.N;
    GZScheme s;
    s.rows.resize(T);
    for (int m = 1; m <= T; ++m) {
        s.rows[m - 1].resize(m);
        for (int i = 1; i <= m; ++i) {
            int v;
            if (m <= d.M)
                v = d.mu[i - 1];
            else if (i > m - d.M)
                v = std::min(d.lambda[i - 1], d.mu[i - m + d.M - 1]);
            else
                v = d.lambda[i - 1];
            s.at(m, i) = v;
        }
    }
    return s;
}

namespace {

Weight pad(const Weight& w, int N) {
    Weight out = w;
    if (static_cast<int>(out.size()) > N) {
        for (std::size_t i = N; i < out.size(); ++i)
            if (out[i] != 0) throw Error(ErrorKind::InvalidInput, "weight " + weight_str(w) + " has more than N parts");
        out.resize(N);
    }
    out.resize(N, 0);
    if (!is_nonincreasing(out) || (N > 0 && out.back() < 0))
        throw Error(ErrorKind::InvalidInput, "weight " + weight_str(w) + " is not a partition");
    return out;
}

// Number of LR tableaux of shape gamma/beta with content alpha.
int lr_count(const Weight& gamma, const Weight& beta, const Weight& alpha) {
    const int N = static_cast<int>(gamma.size());
    // reading order: rows top to bottom, right to left
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < N; ++r)
        for (int c = gamma[r] - 1; c >= beta[r]; --c) cells.emplace_back(r, c);
    std::map<std::pair<int, int>, int> val;
    std::vector<int> cnt(N + 1, 0);
    int total = 0;
    auto rec = [&](auto&& self, std::size_t p) -> void {
        if (p == cells.size()) {
            for (int v = 1; v <= N; ++v)
                if (cnt[v] != alpha[v - 1]) return;
            ++total;
            return;
        }
        auto [r, c] = cells[p];
        int hi = N;
        auto right = val.find({r, c + 1});
        if (right != val.end()) hi = std::min(hi, right->second);
        int lo = 1;
        if (r > 0 && c >= beta[r - 1] && c < gamma[r - 1]) lo = val[{r - 1, c}] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (cnt[v] >= alpha[v - 1]) continue;
            if (v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;
            ++cnt[v];
            val[{r, c}] = v;
            self(self, p + 1);
            val.erase({r, c});
            --cnt[v];
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace

std::vector<std::pair<Weight, int>> lr_expand(const Weight& alpha0, const Weight& beta0, int N) {
    const Weight alpha = pad(alpha0, N), beta = pad(beta0, N);
    int size = 0;
    for (int x : alpha) size += x;
    std::vector<std::pair<Weight, int>> out;
    Weight gamma = beta;
    // distribute `size` extra boxes over rows keeping gamma a partition
    auto rec = [&](auto&& self, int r, int left) -> void {
        if (r == N) {
            if (left != 0) return;
            int m = lr_count(gamma, beta, alpha);
            if (m > 0) out.emplace_back(gamma, m);
            return;
        }
        int cap = left;
        if (r > 0) cap = std::min(cap, gamma[r - 1] - beta[r]);
        for (int a = 0; a <= cap; ++a) {
            gamma[r] = beta[r] + a;
            self(self, r + 1, left - a);
        }
        gamma[r] = beta[r];
    };
    rec(rec, 0, size);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, int> gamma_extremes(const Weight& alpha, const Weight& beta, int i) {
    const int N = static_cast<int>(std::max(alpha.size(), beta.size()));
    const Weight a = pad(alpha, N), b = pad(beta, N);
    if (i < 1 || i > N) throw Error(ErrorKind::InvalidInput, "index out of range");
    int lo = a[i - 1] + b[N - 1];
    for (int j = 0; i + j <= N; ++j) lo = std::max(lo, a[i + j - 1] + b[N - j - 1]);
    int hi = a[0] + b[i - 1];
    for (int j = 0; j < i; ++j) hi = std::min(hi, a[j] + b[i - j - 1]);
    return {lo, hi};
}

SkewDiagram usual_young(const Weight& beta, int N) {
    // (beta, 0^N) / 0^N keeps the columns of height N
    Weight lambda = pad(beta, N);
    lambda.resize(2 * N, 0);
    return make_skew(lambda, Weight(N, 0), N);
}

SkewDiagram reversed_young(const Weight& alpha0, int N) {
    const Weight alpha = pad(alpha0, N);
    const int c = N - alpha[0];
    Weight lambda(2 * N, N), mu(N);
    for (int i = N; i < 2 * N; ++i) lambda[i] = c;
    for (int i = 0; i < N; ++i) mu[i] = N - alpha[N - 1 - i];
    return make_skew(lambda, mu, N);
}

std::optional<Weight> as_usual_young(const SkewDiagram& d) {
    const int N = d.N;
    if (d.boxes.empty()) return Weight(N, 0);
    const Box& first = d.boxes.front();
    if (first.content() != 0) return std::nullopt;
    const int t = first.row - 1;
    Weight beta(N, 0);
    std::set<std::pair<int, int>> got;
    for (const auto& b : d.boxes) {
        int r = b.row - t, c = b.col - t;
        if (r < 1 || r > N || c < 1) return std::nullopt;
        got.insert({r, c});
        beta[r - 1] = std::max(beta[r - 1], c);
    }
    if (!is_nonincreasing(beta)) return std::nullopt;
    std::size_t n = 0;
    for (int r = 1; r <= N; ++r)
        for (int c = 1; c <= beta[r - 1]; ++c, ++n)
            if (!got.count({r, c})) return std::nullopt;
    if (n != got.size()) return std::nullopt;
    return beta;
}

std::optional<Weight> as_reversed_young(const SkewDiagram& d) {
    const int N = d.N;
    if (d.boxes.empty()) return Weight(N, 0);
    const Box& last = d.boxes.back();
    if (last.content() != 0) return std::nullopt;
    const int t = last.row - N;
    Weight alpha(N, 0);
    std::set<std::pair<int, int>> got;
    for (const auto& b : d.boxes) {
        int r = b.row - t, c = b.col - t;
        if (r < 1 || r > N || c > N) return std::nullopt;
        got.insert({r, c});
        alpha[N - r] = std::max(alpha[N - r], N - c + 1);
    }
    if (!is_nonincreasing(alpha)) return std::nullopt;
    std::size_t n = 0;
    for (int r = 1; r <= N; ++r)
        for (int c = N - alpha[N - r] + 1; c <= N; ++c, ++n)
            if (!got.count({r, c})) return std::nullopt;
    if (n != got.size()) return std::nullopt;
    return alpha;
}

std::optional<Rectangle> as_rectangle(const SkewDiagram& d) {
    if (d.boxes.empty()) return Rectangle{};
    const Box& tl = d.boxes.front();
    int k = 0;
    while (k < static_cast<int>(d.size()) && d.boxes[k].row == tl.row) ++k;
    if (d.size() % k != 0) return std::nullopt;
    const int l = static_cast<int>(d.size()) / k;
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < k; ++c) {
            const Box& b = d.boxes[r * k + c];
            if (b.row != tl.row + r || b.col != tl.col + c) return std::nullopt;
        }
    return Rectangle{k, l, tl.content()};
}

}  // namespace yangirr
