#pragma once

// Concrete matrix realizations: exterior-power representations of sl(n),
// the degree-p Casimir element as an explicit matrix (parallel kernel with
// a serial reference), tensor-product representations via the coproduct,
// the difference matrices acting on tensor constituents, and exact
// certification of their spectra by annihilating products and rank counts.

#include <string>
#include <vector>

#include "ptelab/exact_matrix.hpp"
#include "ptelab/rational.hpp"
#include "ptelab/report.hpp"
#include "ptelab/separation.hpp"
#include "ptelab/weights.hpp"

namespace ptelab::matmodel {

using linalg::ExactMatrix;

class Rep {
public:
    Rep(int n, std::vector<std::string> labels, std::vector<ExactMatrix> gens);

    int rank_n() const { return n_; }
    int dim() const;
    const std::vector<std::string>& labels() const { return labels_; }

    // Generator matrix for X_{ij}, 1-based indices.
    const ExactMatrix& gen(int i, int j) const;

    // Structure checks: bracket relations on all index tuples and the
    // vanishing of the generator trace-sum. Exact; gated by dimension.
    CheckReport check_structure() const;

    // True when m commutes with every generator.
    bool is_invariant(const ExactMatrix& m) const;

private:
    int n_;
    std::vector<std::string> labels_;
    std::vector<ExactMatrix> gens_;  // (i-1)*n + (j-1)
};

// The k-th exterior power of the defining representation, basis indexed by
// k-subsets in lexicographic order. Requires 1 <= k <= n-1.
Rep fundamental_rep(int n, int k);

// Tensor-product representation through x -> x (x) 1 + 1 (x) x.
Rep tensor_delta(const Rep& a, const Rep& b);

inline constexpr int kDefaultCasimirBound = 6;

// Sum over all n^p index tuples of pi(X_{i1 i2}) ... pi(X_{ip i1}).
// Parallel over the leading index; exact arithmetic keeps the reduction
// order-independent. Throws std::domain_error when p exceeds p_bound,
// std::invalid_argument when p < 2.
ExactMatrix casimir(const Rep& r, int p, int p_bound = kDefaultCasimirBound);

// Reference implementation: same contraction, straight serial loop.
ExactMatrix casimir_serial(const Rep& r, int p, int p_bound = kDefaultCasimirBound);

// The scalar c for a matrix equal to c * Id; throws std::domain_error
// otherwise (a non-scalar Casimir signals a reducible representation).
Rat scalar_of(const ExactMatrix& m);

// casimir(tensor_delta(a,b), p) - casimir(a,p) (x) I - I (x) casimir(b,p).
ExactMatrix kostant_matrix(const Rep& a, const Rep& b, int p,
                           int p_bound = kDefaultCasimirBound);

struct SpectrumLine {
    Rat eigenvalue;
    Int predicted_mult;       // sum of constituent dimensions sharing the value
    int verified_mult = -1;   // rank-derived; -1 when not computed
    std::vector<weights::IndexSet> constituents;
    bool pass = false;
};

struct SpectrumReport {
    int n = 0, k = 0, j = 0, p = 0;
    bool assumption_based = false;  // predicted values rest on the p >= 3 surrogate
    bool annihilation_ok = false;
    std::vector<SpectrumLine> lines;

    bool pass() const;
    CheckReport to_checks() const;
};

// Certifies the spectrum of kostant_matrix(fundamental_rep(n,k),
// fundamental_rep(n,j), p): predicted eigenvalues are S_p differences over
// the constituents of the tensor product; the product of (M - c) over the
// distinct predictions must vanish exactly, and each eigenvalue's rank-based
// multiplicity must equal the total dimension of its constituents.
// dim_bound guards the tensor dimension (throws std::domain_error beyond).
SpectrumReport spectrum_verify(int n, int k, int j, int p = 2, int dim_bound = 600);

}  // namespace ptelab::matmodel
