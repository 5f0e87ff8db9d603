#pragma once

// Symmetric polynomial constructions: power sums, complete homogeneous,
// elementary and monomial bases, Schur polynomials by two independent
// routes (Jacobi-Trudi determinant and quotient of alternants), Pieri
// growth, and Littlewood-Richardson expansion of Schur products.

#include <map>
#include <vector>

#include "ptelab/partition.hpp"
#include "ptelab/sparse_poly.hpp"

namespace ptelab::symfunc {

SparsePoly power_sum(int t, int nvars);        // p_t, with p_0 = nvars
SparsePoly complete_h(int r, int nvars);       // h_r, h_0 = 1, h_{<0} = 0
SparsePoly elementary_e(int r, int nvars);     // e_r, 0 when r > nvars
SparsePoly monomial_symmetric(const Partition& mu, int nvars);  // m_mu

// Schur polynomial via det(h_{lambda_i - i + j}); throws std::domain_error
// when l(lambda) > nvars (the polynomial would be identically zero).
SparsePoly schur_jacobi_trudi(const Partition& lambda, int nvars);

// Same object via antisymmetrization: A_{lambda+delta} / A_delta with the
// division performed exactly. Independent of the determinant route.
SparsePoly schur_alternant(const Partition& lambda, int nvars);

// Memoized by (lambda, nvars); delegates to the Jacobi-Trudi route.
const SparsePoly& schur_cached(const Partition& lambda, int nvars);

// All partitions obtained from lambda by adding a horizontal strip of r boxes.
std::vector<Partition> pieri_row(const Partition& lambda, int r);

using SchurExpansion = std::map<Partition, Int, PartitionGradedLess>;

// Structure constants of s_mu * s_nu in the Schur basis, computed by the
// signed iterated-Pieri expansion of the Jacobi-Trudi determinant.
// Postcondition checked: all surviving coefficients are positive integers.
SchurExpansion lr_expand(const Partition& mu, const Partition& nu);

}  // namespace ptelab::symfunc
