#pragma once

#include "yangirr/matrix.hpp"
#include "yangirr/poly.hpp"

#include <vector>

namespace yangirr {

// det(x I - m), via Faddeev-LeVerrier.
Poly charpoly(const RatMatrix& m);

// Distinct rational roots, ascending. Uses p-adic lifting of the roots of the
// square-free part modulo a small prime, then rational reconstruction, and
// keeps only candidates that vanish exactly.
std::vector<Rat> rational_roots(const Poly& f);

struct EigenLine {
    Vec vector;
    std::vector<Rat> eigenvalues;  // one per family member
};

// Joint eigenlines of a commuting family. Throws
// NotSimultaneouslyDiagonalizable when a joint eigenspace has dimension > 1,
// a member is not diagonalizable, or its spectrum is not rational.
std::vector<EigenLine> simultaneous_eigenbasis(const std::vector<RatMatrix>& family);

}  // namespace yangirr
