#pragma once

#include "yangirr/diagrams.hpp"
#include "yangirr/rational.hpp"

#include <vector>

namespace yangirr {

// One elementary module: lambda/mu with shift h.
struct ModuleSpec {
    Weight lambda;
    Weight mu;
    int N = 0;
    Rat h = 0;
};

// Specs whose diagrams are exactly the usual Young diagram of beta and the
// reversed Young diagram of alpha, full columns included. alpha and beta are
// padded with zeros to N parts.
ModuleSpec usual_spec(const Weight& beta, int N, const Rat& h);
ModuleSpec reversed_spec(const Weight& alpha, int N, const Rat& h);

// Normalized diagram of a spec; throws like make_skew.
SkewDiagram diagram_of(const ModuleSpec& s);
// Throws if the specs are empty, invalid, or mix different N.
int common_rank(const std::vector<ModuleSpec>& specs);

// roots[k - 1] lists the roots of P_k, k = 1..N-1, ascending with repeats.
struct DrinfeldData {
    std::vector<std::vector<Rat>> roots;
};

DrinfeldData drinfeld_roots(const ModuleSpec& s);
// Zeros of P_k(u) / P_k(u + 1), ascending.
std::vector<Rat> q_zero_set(const ModuleSpec& s, int k);

// values[k - 1] for k = 1..N-1, ascending, no repeats.
struct XSet {
    std::vector<std::vector<Rat>> values;
};

// Uses the rectangle closed form when it applies, else enumeration.
XSet x_set(const ModuleSpec& s);
XSet x_set_enumerated(const ModuleSpec& s);
// Closed form for mu empty and a k-by-l rectangle with 0 < l < N.
// Returns false if the shape does not qualify.
bool x_set_rectangle(const ModuleSpec& s, XSet& out);

struct PairWitness {
    int r = 0, s = 0, k = 0;  // 1-based
    Rat x;                    // common point of X_k^(r) and the zeros of Q_k^(s)
};

struct CriterionReport {
    bool holds = true;
    std::vector<PairWitness> witnesses;
};

// Sufficient condition for irreducibility over all ordered pairs r != s.
CriterionReport thm33_irreducible(const std::vector<ModuleSpec>& specs);
// Same test restricted to r < s (cyclicity of the tensor product of
// singular vectors) and to r > s (cocyclicity).
CriterionReport prop31_cyclic_condition(const std::vector<ModuleSpec>& specs);
CriterionReport prop32_cocyclic_condition(const std::vector<ModuleSpec>& specs);

// Integers h where the intertwiner for reversed alpha and usual beta is singular.
std::vector<int> thm23_noninvertible_set(const Weight& alpha, const Weight& beta, int N);

struct IntervalWitness {
    int r = 0, s = 0;  // 1-based, r < s
    int pair = 0;      // 1: lower window, 2: upper window
    int lo = 0, hi = 0;  // open bounds
    Rat difference;      // normalized h^(r) - h^(s)
};

struct RectangleReport {
    bool irreducible = true;
    std::vector<IntervalWitness> witnesses;
};

// Iff criterion for products of rectangles. Throws NotRectangular.
RectangleReport thm34_irreducible(const std::vector<ModuleSpec>& specs);

// Open windows (lo, hi) for pair (r, s) of normalized rectangles k x l.
void thm34_windows(int N, int kr, int lr, int ks, int ls, int lo[2], int hi[2]);

}  // namespace yangirr
