#pragma once

#include "yangirr/matrix.hpp"

#include <cstdint>
#include <vector>

namespace yangirr {

struct ClosureOptions {
    // Run the closure modulo a 61-bit prime first; a full result there is a
    // certificate over Q (dimension over F_p never exceeds dimension over Q).
    // Anything short of full is recomputed over Q.
    bool modular_prefilter = true;
    // OpenMP over the products of one batch; the serial path is the reference.
    bool parallel = true;
    // Optional weight label per basis index. When every generator is
    // homogeneous for it, the span is tracked per degree.
    const std::vector<std::int64_t>* grading = nullptr;
};

struct ClosureStats {
    std::size_t dim = 0;
    std::size_t products = 0;
    bool graded = false;
    bool used_modular = false;
    bool used_rational = false;
};

// Dimension of the unital algebra generated by square matrices of size d.
// Stops early once the dimension reaches min(cap, d*d).
std::size_t algebra_closure_dim(const std::vector<RatMatrix>& gens, std::size_t cap,
                                const ClosureOptions& opt = {}, ClosureStats* stats = nullptr);

// Smallest subspace containing seed and stable under every generator.
std::vector<Vec> invariant_closure(const std::vector<RatMatrix>& gens, const Vec& seed);

// Weight label of m for a grading, or false if m is not homogeneous.
bool homogeneous_degree(const RatMatrix& m, const std::vector<std::int64_t>& grading,
                        std::int64_t& degree);

}  // namespace yangirr
