#pragma once

// Diagonal polynomial matrices on the Cartan subalgebra: one polynomial
// entry per k-subset of {1..n}, in the chart with coordinates x_1..x_{n-1}
// and the last coordinate substituted to zero. Provides the symmetric-ideal
// membership test, the diagonal Schur-matrix family, the restricted M-type
// matrices, and the free-basis verification report.

#include <string>
#include <vector>

#include "ptelab/exact_matrix.hpp"
#include "ptelab/partition.hpp"
#include "ptelab/report.hpp"
#include "ptelab/sparse_poly.hpp"
#include "ptelab/weights.hpp"

namespace ptelab::cartan {

using weights::IndexSet;

class DiagPolyMatrix {
public:
    // nvars is n-1 for the standard chart (last slot zeroed) or n for the
    // ambient chart (last coordinate kept symbolic).
    DiagPolyMatrix(int k, int n, int nvars);

    int k() const { return k_; }
    int n() const { return n_; }
    int nvars() const { return nvars_; }
    int count() const { return static_cast<int>(subsets_.size()); }

    const std::vector<IndexSet>& subsets() const { return subsets_; }
    const SparsePoly& entry(int idx) const;
    const SparsePoly& entry(const IndexSet& s) const;
    void set_entry(int idx, SparsePoly p);
    int subset_index(const IndexSet& s) const;  // -1 when absent

    DiagPolyMatrix operator+(const DiagPolyMatrix& o) const;
    DiagPolyMatrix operator-(const DiagPolyMatrix& o) const;
    // Entrywise scaling by a polynomial coefficient (module action).
    DiagPolyMatrix scaled(const SparsePoly& q) const;
    bool operator==(const DiagPolyMatrix& o) const;

    // Sum of the diagonal entries.
    SparsePoly trace() const;
    bool is_zero() const;

    // Conjugation by a permutation sigma of {1..n} (1-based image list):
    // result entry at sigma(S) is the old entry at S with x_i -> x_{sigma(i)}
    // (a variable sent to slot n vanishes in the standard chart). Ambient
    // symmetric families are fixed points for every sigma; standard-chart
    // families only for sigma fixing the zeroed slot n, since terms that the
    // chart already erased cannot be recovered by substitution.
    DiagPolyMatrix permuted(const std::vector<int>& sigma) const;

    // Coefficient vector over (subset, monomial) pairs for all monomials of
    // total degree <= max_degree; shared coordinatization for rank work.
    std::vector<Rat> flatten(int max_degree) const;

    std::string to_string() const;  // one "{S}: poly" line per subset

private:
    int k_, n_, nvars_;
    std::vector<IndexSet> subsets_;
    std::vector<SparsePoly> entries_;
};

// True iff g (homogeneous, in n variables) lies in the ideal generated by
// the power sums p_1..p_n. Decided degree-by-degree with exact elimination.
// Throws std::invalid_argument on non-homogeneous input or arity mismatch.
bool ideal_membership(const SparsePoly& g, int n);

// Entry at S = {s_1 < ... < s_k} is the Schur polynomial of lambda evaluated
// on the slot variables (x_{s_1}, ..., x_{s_k}) with slot n zeroed.
// Requires l(lambda) <= k.
DiagPolyMatrix diag_schur_matrix(int k, int n, const Partition& lambda);

// s * diag{p_{s-1}(slots)} - s*(k/n)*p_{s-1}(x_1..x_{n-1}) * Id, the
// leading-term diagonal matrix of the degree-s Casimir restricted to the
// Cartan chart. Requires s >= 2.
DiagPolyMatrix restricted_mtype(int k, int n, int s);

// Same object in the ambient chart: polynomials in all n variables, no
// zero substitution. Substituting x_n -> 0 recovers restricted_mtype.
DiagPolyMatrix restricted_mtype_ambient(int k, int n, int s);

// Checks, with witnesses in the report:
//  (a) the diagonal Schur matrices for box partitions are linearly independent;
//  (b) for every |lambda| <= degree_bound, the Schur polynomial in k of the n
//      variables avoids the power-sum ideal exactly when lambda fits the box;
//  (c) every restricted_mtype(k,n,s), 2 <= s <= k+1, is a combination of the
//      box family with symmetric homogeneous polynomial coefficients.
CheckReport verify_free_basis(int k, int n, int degree_bound);

}  // namespace ptelab::cartan
