#pragma once

#include "yangirr/closure.hpp"
#include "yangirr/criteria.hpp"
#include "yangirr/matrix.hpp"
#include "yangirr/polymatrix.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace yangirr {

// Realized dimension limit; YANGIRR_DIM_CAP overrides the default of 64.
std::size_t default_dim_cap();

// id + P/(u - v) on (C^N)^{x2}. Throws PoleAtEqualArguments when u == v.
RatMatrix yang_r(int N, const Rat& u, const Rat& v);
// (u - v) id + P as a polynomial in u.
PolyMatrix yang_r_cleared(int N, const Rat& v);
// Flip P on (C^N)^{x2}.
RatMatrix flip(int N);

// Permutation of tensor positions with a sign; perm[p] is the new position of factor p.
struct SignedPerm {
    std::vector<int> perm;
    int sign = 1;
};

struct SymmetrizerSet {
    std::vector<SignedPerm> row_group;     // P: unsigned sum
    std::vector<SignedPerm> column_group;  // Q: signed sum
    int N = 0;
    int n = 0;
    // y = P Q applied to a vector of length N^n
    Vec apply(const Vec& v) const;
    Vec apply_p(const Vec& v) const;
    Vec apply_q(const Vec& v) const;
    // Dense forms; only for N^n <= 1024.
    RatMatrix p_matrix() const;
    RatMatrix q_matrix() const;
    RatMatrix y_matrix() const;
};

SymmetrizerSet young_symmetrizer(const SkewDiagram& d, int N);
RatMatrix permutation_matrix(const std::vector<int>& perm, int N);

// Reduced basis of a subspace of the full tensor space.
struct ImageBasis {
    std::size_t len = 0;
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;
    std::size_t dim() const { return rows.size(); }
    Vec coords(const Vec& v) const;
    Vec combine(const Vec& c) const;
    bool contains(const Vec& v) const;
};
ImageBasis kron(const ImageBasis& a, const ImageBasis& b);

// Module lambda/mu at h = 0 on the image of its Young symmetrizer.
struct BaseRealization {
    SkewDiagram diagram;
    SymmetrizerSet sym;
    ImageBasis image;
    std::vector<Weight> weights;  // gl_N weight of each basis vector
    Poly den;                     // prod (u + c_p)
    std::vector<PolyMatrix> num;  // index i*N + j, 0-based
};

// Cached; safe to call from several threads.
std::shared_ptr<const BaseRealization> base_realization(const SkewDiagram& d);

// T_ij(u) = num[i][j](u) / den(u) on a realized tensor product.
struct GeneratorSet {
    int N = 0;
    std::size_t dim = 0;
    Poly den;
    std::vector<PolyMatrix> num;
    std::vector<Weight> weights;
    std::vector<std::size_t> factor_dims;

    const PolyMatrix& T(int i, int j) const { return num[(i - 1) * N + (j - 1)]; }  // 1-based
    RatFnMatrix series(int i, int j) const { return {T(i, j), den}; }
    // every nonzero u-coefficient of every numerator
    std::vector<RatMatrix> coefficients() const;
    std::vector<std::int64_t> grading() const;
};

// Tensor product in the given (coproduct) order. Throws EmptyModule,
// DimensionCapExceeded.
GeneratorSet module_action(const std::vector<ModuleSpec>& specs, std::size_t cap = 0);
// Same module built from one R-matrix product over all boxes of all specs.
// Used to cross-check the per-factor route; small cases only.
GeneratorSet module_action_direct(const std::vector<ModuleSpec>& specs, std::size_t cap = 0);
// The opposite coproduct on the same space: reversed order, then the
// factor-exchange permutation.
GeneratorSet module_action_opposite(const std::vector<ModuleSpec>& specs, std::size_t cap = 0);
GeneratorSet fold(const GeneratorSet& a, const GeneratorSet& b);

// Checks the defining relation
// (u - v)[T_ij(u), T_kl(v)] = T_kj(v) T_il(u) - T_kj(u) T_il(v)
// at every given (u, v) pair, for all index quadruples.
bool check_defining_relation(const GeneratorSet& g, const std::vector<std::pair<Rat, Rat>>& points);

// Quantum minor with rows i_seq, columns j_seq (1-based, strictly increasing).
// reversed = false: sum_g sgn g T_{i1 j_g1}(u) ... T_{ik j_gk}(u-k+1).
// reversed = true:  sum_g sgn g T_{i_gk jk}(u-k+1) ... T_{i_g1 j1}(u).
RatFnMatrix quantum_minor(const GeneratorSet& g, const std::vector<int>& i_seq,
                          const std::vector<int>& j_seq, bool reversed = false);
RatMatrix quantum_minor_at(const GeneratorSet& g, const std::vector<int>& i_seq,
                           const std::vector<int>& j_seq, const Rat& u);
// Numerator (dim x 1) and denominator of the minor applied to v.
RatFnMatrix quantum_minor_apply(const GeneratorSet& g, const std::vector<int>& i_seq,
                                const std::vector<int>& j_seq, const Vec& v);

struct ABCD {
    RatFnMatrix A, B, C, D;
};
// A_k for 0 <= k <= N (A_0 = 1); B, C, D for 1 <= k <= N-1.
ABCD abcd_series(const GeneratorSet& g, int k);
std::vector<int> seq_i(int k);  // (1..k)
std::vector<int> seq_j(int k);  // (1..k-1, k+1)

// Tensor product of the images of e_{depth} in every factor, in the
// coordinates of module_action(specs).
Vec singular_vector(const std::vector<ModuleSpec>& specs);
// Verifies C_k(u) zeta = 0 for all k, else throws NotSingular.
void verify_singular(const GeneratorSet& g, const Vec& zeta);

// Eigenvalue of A_k(u) on an eigenvector, as num/den. Throws NotSingular if
// v is not an eigenvector.
struct RatFn {
    Poly num, den;
    bool equals(const RatFn& o) const { return num * o.den == o.num * den; }
    Rat operator()(const Rat& t) const { return num(t) / den(t); }
};
RatFn a_eigenvalue(const GeneratorSet& g, int k, const Vec& v);

// A_{k+1}(u) A_{k-1}(u-1) / (A_k(u) A_k(u-1)) on zeta equals P_k(u-1)/P_k(u).
bool drinfeld_check(const GeneratorSet& g, const Vec& zeta, const DrinfeldData& expected);

struct Intertwiner {
    RatMatrix matrix;  // on im Y_a (x) im Y_b, Kronecker basis
    int order = 0;     // Laurent order at z = 0
    std::size_t dim = 0;
    std::size_t rank = 0;
    bool invertible() const { return rank == dim; }
};

// Leading Laurent coefficient at z = 0 of the ordered R-matrix product for
// V_a(h_a - h_b) (x) V_b(z).
Intertwiner intertwiner(const ModuleSpec& a, const ModuleSpec& b);
// R Delta'(T_ij(u)) = Delta(T_ij(u)) R for all i, j, exactly.
bool check_intertwining(const Intertwiner& R, const ModuleSpec& a, const ModuleSpec& b);

// Full-space operators on (C^N)^{x(m+n)} at a point (h, z).
// The ordered R-matrix product times Y_a (x) Y_b.
RatMatrix intertwiner_product_at(const ModuleSpec& a, const ModuleSpec& b, const Rat& h, const Rat& z);
// The commuting Jucys-Murphy product times Y_a (x) Y_b. a must be a reversed
// and b a usual Young diagram (ShapeNotSpecial otherwise). With
// denominators = false the scalar denominators are dropped.
RatMatrix jucys_murphy_form(const ModuleSpec& a, const ModuleSpec& b, const Rat& h, const Rat& z,
                            bool denominators = true);
// Basis of im Y_a (x) im Y_b inside the full space.
ImageBasis pair_image(const ModuleSpec& a, const ModuleSpec& b);
// Matrix of a full-space operator preserving the image, in its basis.
RatMatrix restrict_operator(const ImageBasis& basis, const RatMatrix& full);

struct OracleReport {
    bool irreducible = false;
    std::size_t dim = 0;
    std::size_t closure_dim = 0;
    ClosureStats stats;
};
OracleReport irreducible_oracle(const GeneratorSet& g, const ClosureOptions& opt = {});
bool irreducible(const GeneratorSet& g);
bool cyclicity_oracle(const GeneratorSet& g, const Vec& zeta);
bool cocyclicity_oracle(const GeneratorSet& g, const Vec& zeta);

// A_k eigenvalue on the singular vector from the column structure:
// prod over columns (u+h+c_top+1)/(u+h+c_top-min(k,height)+1).
RatFn column_singular_eigenvalue(const ModuleSpec& s, int k);
// rho_k(u)^{-1} prod_i (u + h + lambda_{M+k,i} - i + 1).
RatFn scheme_eigenvalue(const ModuleSpec& s, const GZScheme& sch, int k);
// f with A_k(realized) = A_k(elementary) prod_{j<k} f(u - j).
RatFn twist_factor(const ModuleSpec& s);

struct GZReport {
    std::size_t lines = 0;
    std::size_t transitions = 0;  // (line, k, i, B or C) images checked
    bool eigenvalues_ok = false;
    bool lowering_ok = false;
    bool raising_ok = false;
    bool ok() const { return eigenvalues_ok && lowering_ok && raising_ok; }
};
// Eigenlines of the A_k coefficients matched to schemes and the B_k / C_k
// images at the points nu_ki. Throws DegenerateSpectrum.
GZReport gz_eigenbasis_check(const ModuleSpec& s);

// Delta^{(n)} of a quantum minor against the sum over intermediate sequences
// of tensor products of factor minors, at the sample points.
bool coproduct_minor_check(const std::vector<ModuleSpec>& specs, const std::vector<int>& i_seq,
                           const std::vector<int>& j_seq, const std::vector<Rat>& points);

}  // namespace yangirr
