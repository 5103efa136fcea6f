#pragma once

// Central monomials of T_N: the integer kernel of B, the weight symmetries
// and the reconstruction of a kernel vector from its boundary weights.

#include "qtetra/ncalgebra.hpp"
#include "qtetra/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qtetra {

/// Weight per vertex in lexicographic order.
using WeightVector = std::vector<std::int64_t>;

/// floor(N/2) for N >= 3, and 1 for N = 2.
int chi(int N);

struct CenterBasis {
    int N = 0;
    /// Primitive integer kernel vectors straight from the elimination.
    std::vector<WeightVector> elimination;
    /// Same span, rebased so the k-th vector has boundary weights
    /// alpha_{1,j} = [j == k + 2] for j = 2 .. chi(N) + 1.
    std::vector<WeightVector> basis;
};

/// Exact nullspace of B by fraction-free elimination.
CenterBasis kernel_basis(int N);

/// B alpha as an integer vector.
WeightVector apply_B(const IncidenceMatrix& B, const WeightVector& alpha);
bool in_kernel(int N, const WeightVector& alpha);
/// Throws std::invalid_argument on a negative entry.
bool is_central(int N, const WeightVector& alpha);
/// M(alpha) Z_v == Z_v M(alpha) in T_N for every generator, exactly.
bool commutes_with_generators(const AlgebraPtr& algebra, const WeightVector& alpha);

struct Reconstruction {
    WeightVector alpha_tilde;  // may be negative
    std::int64_t m = 0;        // minimal shift by the all-ones vector
    WeightVector alpha;        // alpha_tilde + m, nonnegative
};

/// Unique kernel vector with alpha_{1,j} = beta_{j-1}, j = 2 .. chi(N) + 1.
/// Throws std::invalid_argument on a wrong beta length.
Reconstruction reconstruct_weights(int N, const std::vector<std::int64_t>& beta);

/// alpha_{K(v)} == alpha_v for K in {rho, mu1, mu2, mu3}.
bool has_symmetries(int N, const WeightVector& alpha);

/// Weights drawn on the triangle, row i holding alpha_{i,i+1} .. alpha_{i,N}.
std::string weight_grid(int N, const WeightVector& alpha);

/// Symmetries of every basis vector and invariance of central monomials
/// under rho and the mu_k as literal polynomial equality.
SuiteReport verify_center_symmetries(int N);

/// Non-decreasing beta with entries in [0, bound] whose reconstruction needs
/// a positive shift.
std::vector<std::vector<std::int64_t>> shift_counterexamples(int N, int bound);

}  // namespace qtetra
