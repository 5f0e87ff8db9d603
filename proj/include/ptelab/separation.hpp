#pragma once

// Tensor-product decomposition of (k-th exterior power) (x) V_nu by the
// subset rule, total subordination, the S-functional eigenvalue vectors
// attached to constituents, the separation index, and exact collision
// detection between constituents.

#include <vector>

#include "ptelab/rational.hpp"
#include "ptelab/weights.hpp"

namespace ptelab::separation {

using weights::FundWeight;
using weights::IndexSet;
using weights::YoungPattern;

struct Constituent {
    IndexSet I;
    YoungPattern pattern;  // rows of nu plus the indicator of I; dominant
    Int dim;
};

struct FunctionalVector {
    IndexSet I;
    std::vector<Rat> values;  // (S_2, ..., S_p), length p - 1... see functionals()
};

// One constituent per k-subset I of {1..n} whose shifted pattern stays
// dominant, in lexicographic I order. Requires 1 <= k <= n-k and a
// weight of matching rank.
std::vector<Constituent> tensor_decompose(int n, int k, const FundWeight& nu);

// True iff the decomposition has the full binom(n,k) constituents.
bool totally_subordinate(int n, int k, const FundWeight& nu);

// (S_2(nu + 1_I), ..., S_p(nu + 1_I)) exactly; requires the shifted pattern
// to be dominant (throws std::domain_error otherwise) and p >= 2.
FunctionalVector functionals(int n, int k, const FundWeight& nu, const IndexSet& I, int p);

// Smallest t >= 2 such that the vectors (S_2..S_t) of all constituents are
// pairwise distinct. Requires total subordination (throws std::domain_error).
int separation_index(int n, int k, const FundWeight& nu);

struct Collision {
    IndexSet I, J;              // I < J lexicographically
    std::vector<Rat> shared;    // common (S_2..S_depth) vector
};

// All unordered constituent pairs whose functional vectors agree through
// S_depth, found by exact-key grouping; deterministic lexicographic order.
// Requires total subordination and depth >= 2.
std::vector<Collision> find_collisions(int n, int k, const FundWeight& nu, int depth);

}  // namespace ptelab::separation
