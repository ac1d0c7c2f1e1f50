#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace yangirr {

// Non-increasing integer sequence; entries may be negative.
using Weight = std::vector<int>;

bool is_nonincreasing(const Weight& w);
std::string weight_str(const Weight& w);

struct Box {
    int row = 0;  // 1-based, increasing downwards
    int col = 0;  // may be <= 0
    int content() const { return col - row; }
    bool operator==(const Box& o) const { return row == o.row && col == o.col; }
};

struct Column {
    int col = 0;
    std::vector<std::size_t> cells;  // row-tableau indices, top to bottom
    int height() const { return static_cast<int>(cells.size()); }
};

struct SkewDiagram {
    Weight lambda;  // length M + N after normalization
    Weight mu;      // length M
    int N = 0;
    int M = 0;
    std::vector<Box> boxes;      // row-tableau order: rows downwards, left to right
    std::vector<int> contents;   // same order
    std::vector<Column> columns; // ascending col

    std::size_t size() const { return boxes.size(); }
    // row-tableau index of (row, col), or -1
    int index_of(int row, int col) const;
};

// Validates and builds lambda/mu. Errors: InvalidInput for malformed
// sequences, EmptyModule when the module vanishes (message names the failed
// condition). If mu is empty and lambda is shorter than N it is padded with
// zeros.
SkewDiagram make_skew(Weight lambda, Weight mu, int N);

std::vector<int> row_tableau_contents(const SkewDiagram& d);

struct InverseColumnTableau {
    std::vector<int> number;  // inverse-column number of each box, row-tableau order
    std::vector<int> g;       // g[q - 1] = row-tableau number of the box numbered q
};

// Boxes numbered by columns from right to left, upwards in each column.
InverseColumnTableau inverse_column_tableau(const SkewDiagram& d);

// Contents of the bottom boxes of the columns of height exactly k, ascending.
std::vector<int> column_bottom_contents(const SkewDiagram& d, int k);

// Value per box in row-tableau order.
using Filling = std::vector<int>;

// Semistandard fillings with entries 1..N, lexicographic in row-tableau order.
std::vector<Filling> enumerate_ssyt(const SkewDiagram& d, int N);

// Row-major grid over the bounding box; std::nullopt where there is no box.
std::vector<std::vector<std::optional<int>>> tableau_grid(const SkewDiagram& d, const Filling& f);

// Triangular array; rows[m - 1] holds lambda_{m,1..m}.
struct GZScheme {
    std::vector<Weight> rows;
    int at(int m, int i) const { return rows[m - 1][i - 1]; }
    int& at(int m, int i) { return rows[m - 1][i - 1]; }
    bool operator==(const GZScheme& o) const { return rows == o.rows; }
    bool operator<(const GZScheme& o) const { return rows < o.rows; }
};

bool is_valid_scheme(const GZScheme& s, const SkewDiagram& d);
// Lexicographic in rows m = 1, 2, ...
std::vector<GZScheme> enumerate_gz_schemes(const SkewDiagram& d);
std::vector<GZScheme> enumerate_gz_schemes(const Weight& lambda, const Weight& mu, int N);
// The scheme dominating every other one entrywise.
GZScheme scheme_top(const SkewDiagram& d);

// gl_N tensor product multiplicities: (gamma, multiplicity), sorted by gamma.
std::vector<std::pair<Weight, int>> lr_expand(const Weight& alpha, const Weight& beta, int N);
// (min, max) of gamma_i over the tensor product, closed form.
std::pair<int, int> gamma_extremes(const Weight& alpha, const Weight& beta, int i);

// Young diagram with boxes (i, j), 1 <= i <= N, 0 < j <= beta_i.
SkewDiagram usual_young(const Weight& beta, int N);
// Reversed diagram with boxes (i, j), 1 <= i <= N, N - alpha_{N-i+1} < j <= N.
SkewDiagram reversed_young(const Weight& alpha, int N);

// Detectors, up to a diagonal translation (which keeps contents).
std::optional<Weight> as_usual_young(const SkewDiagram& d);
std::optional<Weight> as_reversed_young(const SkewDiagram& d);

struct Rectangle {
    int width = 0;     // k
    int height = 0;    // l
    int top_left = 0;  // content of the top-left box
};
// Empty diagrams are reported as height 0.
std::optional<Rectangle> as_rectangle(const SkewDiagram& d);

}  // namespace yangirr
