#include "oracles.hpp"
#include "yangirr/diagrams.hpp"
#include "yangirr/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace yangirr;

namespace {

const SkewDiagram& nine_box() {
    static const SkewDiagram d = make_skew({5, 5, 3, 2, 0, -2}, {3, 2, 2, 1}, 2);
    return d;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

std::vector<Weight> partitions_in_box(int rows, int cols) {
    std::vector<Weight> out;
    Weight w(rows, 0);
    std::function<void(int, int)> rec = [&](int i, int cap) {
        if (i == rows) {
            out.push_back(w);
            return;
        }
        for (int x = 0; x <= cap; ++x) {
            w[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, cols);
    return out;
}

oracle::Cells cells_of(const SkewDiagram& d) {
    oracle::Cells c;
    for (const auto& b : d.boxes) c.push_back({b.row, b.col});
    return c;
}

}  // namespace

TEST_CASE("skew diagram of the nine-box example") {
    const SkewDiagram& d = nine_box();
    CHECK(d.M == 4);
    CHECK(d.size() == 9);
    CHECK(cells_of(d) == oracle::skew_cells({5, 5, 3, 2, 0, -2}, {3, 2, 2, 1}));
    std::vector<int> bottoms;
    for (const auto& c : d.columns) bottoms.push_back(d.contents[c.cells.back()]);
    std::sort(bottoms.begin(), bottoms.end());
    CHECK(bottoms == std::vector<int>{-6, -5, -2, 0, 2, 3});
}

TEST_CASE("skew diagram small cases and errors") {
    const SkewDiagram one = make_skew({1, 0}, {}, 2);
    REQUIRE(one.size() == 1);
    CHECK(one.boxes[0] == Box{1, 1});
    CHECK(one.contents[0] == 0);
    // padding with zeros for short lambda
    CHECK(make_skew({1}, {}, 3).lambda == Weight{1, 0, 0});

    CHECK(kind_of([] { make_skew({2, 2}, {}, 1); }) == ErrorKind::EmptyModule);
    CHECK(kind_of([] { make_skew({1, 0}, {2}, 1); }) == ErrorKind::EmptyModule);
    CHECK(kind_of([] { make_skew({0, 1}, {}, 2); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { make_skew({1, 0}, {}, 0); }) == ErrorKind::InvalidInput);
    try {
        make_skew({1, 0}, {2}, 1);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("lambda_1") != std::string::npos);
    }
}

TEST_CASE("row tableau contents") {
    CHECK(row_tableau_contents(nine_box()) == std::vector<int>{3, 4, 1, 2, 3, 0, -2, -6, -5});
    CHECK(row_tableau_contents(make_skew({1, 0}, {}, 2)) == std::vector<int>{0});
    // a column of height 3 with top content c1 = 2
    const SkewDiagram column = make_skew({1, 1, 1, 0}, {}, 4);
    CHECK(row_tableau_contents(column) == std::vector<int>{0, -1, -2});
    // shifted right by two columns: content c1 = 2
    const SkewDiagram shifted = make_skew({3, 3, 3, 2, 2, 2}, {2, 2, 2}, 3);
    CHECK(row_tableau_contents(shifted) == std::vector<int>{2, 1, 0});
}

TEST_CASE("inverse column tableau of the nine-box example") {
    const auto t = inverse_column_tableau(nine_box());
    CHECK(t.number == std::vector<int>{4, 2, 6, 3, 1, 5, 7, 9, 8});
    // g(q) for q = 1..9
    CHECK(t.g == std::vector<int>{5, 2, 4, 1, 6, 3, 7, 9, 8});
    for (int q = 1; q <= 9; ++q) CHECK(t.number[t.g[q - 1] - 1] == q);
}

TEST_CASE("inverse column tableau of one column") {
    for (int n = 1; n <= 4; ++n) {
        Weight lambda(n + 1, 0);
        for (int i = 0; i < n; ++i) lambda[i] = 1;
        const auto t = inverse_column_tableau(make_skew(lambda, {}, n + 1));
        for (int p = 1; p <= n; ++p) CHECK(t.g[p - 1] == n - p + 1);
    }
}

TEST_CASE("column bottom contents") {
    CHECK(column_bottom_contents(nine_box(), 2) == std::vector<int>{0, 2, 3});
    CHECK(column_bottom_contents(nine_box(), 1) == std::vector<int>{-6, -5, -2});
    CHECK(column_bottom_contents(nine_box(), 3).empty());
    CHECK(column_bottom_contents(make_skew({1, 0}, {}, 2), 2).empty());
}

TEST_CASE("SSYT examples") {
    CHECK(enumerate_ssyt(make_skew({2, 1, 0}, {}, 3), 2).size() == 2);
    for (int N = 1; N <= 4; ++N) CHECK(enumerate_ssyt(make_skew({1, 0, 0, 0, 0}, {}, 5), N).size() == std::size_t(N));
    CHECK(enumerate_ssyt(make_skew({1, 1, 0}, {}, 3), 2).size() == 1);
}

TEST_CASE("SSYT enumeration equals brute-force filter") {
    const std::vector<std::pair<Weight, Weight>> shapes = {
        {{2, 1, 0}, {}}, {{3, 1, 0}, {}}, {{2, 2, 0}, {}}, {{3, 2, 1}, {1}}, {{3, 2, 1}, {2, 1}},
        {{2, 1, 1}, {}}, {{4, 2, 1}, {2}},
    };
    for (const auto& [lam, mu] : shapes)
        for (int N = 1; N <= 3; ++N) {
            const SkewDiagram d = make_skew(lam, mu, static_cast<int>(lam.size() - mu.size()));
            const auto tabs = enumerate_ssyt(d, N);
            CHECK(tabs.size() == oracle::ssyt_count(cells_of(d), N));
            CHECK(std::is_sorted(tabs.begin(), tabs.end()));
            for (const auto& t : tabs) CHECK(oracle::semistandard(cells_of(d), t));
        }
    CHECK(enumerate_ssyt(nine_box(), 2).size() == oracle::ssyt_count(cells_of(nine_box()), 2));
}

TEST_CASE("tableau grid") {
    const SkewDiagram d = make_skew({2, 1, 0}, {1}, 2);
    const auto grid = tableau_grid(d, {7, 9});
    bool seen7 = false, seen9 = false, hole = false;
    for (const auto& row : grid)
        for (const auto& c : row) {
            if (!c) hole = true;
            else if (*c == 7) seen7 = true;
            else if (*c == 9) seen9 = true;
        }
    CHECK(seen7);
    CHECK(seen9);
    CHECK(hole);
}

TEST_CASE("GZ scheme examples") {
    const auto vec = enumerate_gz_schemes({1, 0}, {}, 2);
    REQUIRE(vec.size() == 2);
    CHECK(vec[0].at(1, 1) == 0);
    CHECK(vec[1].at(1, 1) == 1);
    // one-dimensional: lambda/mu with no freedom
    CHECK(enumerate_gz_schemes({2, 2}, {2}, 1).size() == 1);
    for (const auto& s : vec) CHECK(is_valid_scheme(s, make_skew({1, 0}, {}, 2)));
}

TEST_CASE("GZ schemes equal SSYT in number, and match brute force") {
    std::vector<std::tuple<Weight, Weight, int>> corpus = {
        {{5, 5, 3, 2, 0, -2}, {3, 2, 2, 1}, 2},
        {{2, 1, 0}, {}, 3},
        {{3, 1, 0}, {}, 3},
        {{2, 2, 1}, {1}, 2},
        {{3, 2, 1, 0}, {2, 1}, 2},
        {{4, 3, 1, 0}, {3}, 3},
        {{2, 1, 1}, {}, 3},
    };
    for (const auto& [lam, mu, N] : corpus) {
        const SkewDiagram d = make_skew(lam, mu, N);
        const auto schemes = enumerate_gz_schemes(d);
        CHECK(schemes.size() == enumerate_ssyt(d, N).size());
        CHECK(schemes.size() == oracle::gz_count(d.lambda, d.mu));
        CHECK(std::is_sorted(schemes.begin(), schemes.end()));
        for (const auto& s : schemes) CHECK(is_valid_scheme(s, d));
    }
}

TEST_CASE("top scheme dominates") {
    CHECK(scheme_top(make_skew({1, 0}, {}, 2)).at(1, 1) == 1);
    for (const auto& [lam, mu, N] : std::vector<std::tuple<Weight, Weight, int>>{
             {{5, 5, 3, 2, 0, -2}, {3, 2, 2, 1}, 2}, {{3, 1, 0}, {}, 3}, {{3, 2, 1, 0}, {2, 1}, 2}}) {
        const SkewDiagram d = make_skew(lam, mu, N);
        const GZScheme top = scheme_top(d);
        CHECK(is_valid_scheme(top, d));
        for (const auto& s : enumerate_gz_schemes(d))
            for (std::size_t m = 0; m < s.rows.size(); ++m)
                for (std::size_t i = 0; i < s.rows[m].size(); ++i) CHECK(top.rows[m][i] >= s.rows[m][i]);
    }
}

TEST_CASE("LR examples") {
    using R = std::vector<std::pair<Weight, int>>;
    CHECK(lr_expand({1, 0}, {1, 0}, 2) == R{{{1, 1}, 1}, {{2, 0}, 1}});
    CHECK(lr_expand({0, 0, 0}, {2, 1, 0}, 3) == R{{{2, 1, 0}, 1}});
    CHECK(lr_expand({1, 0, 0}, {1, 1, 0}, 3) == R{{{1, 1, 1}, 1}, {{2, 1, 0}, 1}});
}

TEST_CASE("LR expansion equals brute force") {
    for (int N = 2; N <= 3; ++N)
        for (const auto& a : partitions_in_box(N, 2))
            for (const auto& b : partitions_in_box(N, 2)) {
                const auto lib = lr_expand(a, b, N);
                const auto ref = oracle::lr(a, b, N);
                CHECK(lib.size() == ref.size());
                for (const auto& [g, m] : lib) {
                    auto it = ref.find(g);
                    REQUIRE(it != ref.end());
                    CHECK(it->second == m);
                }
            }
}

TEST_CASE("gamma extremes examples") {
    CHECK(gamma_extremes({1, 0}, {1, 0}, 1) == std::pair<int, int>{1, 2});
    CHECK(gamma_extremes({0, 0, 0}, {3, 1, 0}, 2) == std::pair<int, int>{1, 1});
    CHECK(gamma_extremes({4, 3, 1}, {4, 3, 1}, 2) == std::pair<int, int>{4, 7});
}

TEST_CASE("gamma extremes equal LR min and max") {
    for (int N = 2; N <= 3; ++N)
        for (const auto& a : partitions_in_box(N, 2))
            for (const auto& b : partitions_in_box(N, 2)) {
                const auto lr = lr_expand(a, b, N);
                for (int i = 1; i <= N; ++i) {
                    int lo = 1 << 20, hi = -(1 << 20);
                    for (const auto& [g, m] : lr) {
                        lo = std::min(lo, g[i - 1]);
                        hi = std::max(hi, g[i - 1]);
                    }
                    CHECK(gamma_extremes(a, b, i) == std::pair<int, int>{lo, hi});
                }
            }
}

TEST_CASE("usual and reversed Young diagrams") {
    for (const auto& beta : partitions_in_box(2, 3)) {
        const SkewDiagram u = usual_young(beta, 2);
        CHECK(cells_of(u) == oracle::young_cells(beta));
        REQUIRE(as_usual_young(u));
        CHECK(*as_usual_young(u) == beta);
        const SkewDiagram r = reversed_young(beta, 2);
        CHECK(r.size() == u.size());
        REQUIRE(as_reversed_young(r));
        CHECK(*as_reversed_young(r) == beta);
        // boxes (i, j) with N - alpha_{N-i+1} < j <= N
        for (const auto& b : r.boxes) {
            CHECK(b.col <= 2);
            CHECK(b.col > 2 - beta[2 - b.row]);
        }
    }
    CHECK_FALSE(as_usual_young(nine_box()));
    CHECK_FALSE(as_reversed_young(nine_box()));
}

TEST_CASE("rectangle detection") {
    const auto r = as_rectangle(make_skew({2, 2, 0}, {}, 3));
    REQUIRE(r);
    CHECK(r->width == 2);
    CHECK(r->height == 2);
    CHECK(r->top_left == 0);
    CHECK_FALSE(as_rectangle(make_skew({2, 1, 0}, {}, 3)));
    CHECK_FALSE(as_rectangle(nine_box()));
}
