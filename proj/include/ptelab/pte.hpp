#pragma once

// Equal-power-sum (PTE) machinery: exact verification of claimed solutions,
// exhaustive canonical search by power-sum hash-join, extraction of integer
// solutions from constituent collisions, and the constructive ideal-solution
// search driven by the separation module.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptelab/rational.hpp"
#include "ptelab/separation.hpp"
#include "ptelab/weights.hpp"

namespace ptelab::pte {

struct WeightProvenance {
    std::vector<std::int64_t> nu;  // fundamental-weight coefficients
    std::vector<int> I, J;         // colliding index sets

    bool operator==(const WeightProvenance& o) const {
        return nu == o.nu && I == o.I && J == o.J;
    }
};

struct PteSolution {
    std::vector<std::int64_t> x, y;  // canonical: descending, min entry 0, x >= y lex
    int degree = 0;                  // degree the solution is claimed/found at
    int max_degree = 0;              // largest degree at which power sums agree
    bool ideal = false;              // max_degree == size - 1
    std::optional<WeightProvenance> provenance;  // nullopt means brute search

    int size() const { return static_cast<int>(x.size()); }
    bool operator==(const PteSolution& o) const;
};

// Power sums sum_i v_i^j for j = 1..m, exact.
std::vector<Int> power_sums(const std::vector<std::int64_t>& v, int m);

bool is_trivial(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y);

struct VerifyResult {
    bool ok = false;        // power sums agree through the requested degree
    bool trivial = false;   // equal as multisets (degree unbounded)
    int max_degree = 0;     // largest agreeing degree; meaningless when trivial
};

// Exact verification at degree m plus the maximal agreeing degree.
// Throws std::invalid_argument on size mismatch or m < 0.
VerifyResult verify(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y,
                    int m);

// Canonical representative of the solution class under translation, common
// sorting, and swapping the two lists.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> canonical_form(
    std::vector<std::int64_t> x, std::vector<std::int64_t> y);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Loud failure channel: a depth-k collision whose index sets intersect
// would contradict the disjointness corollary the ideal search relies on.
class CorollaryViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SearchOptions {
    std::uint64_t max_candidates = 50'000'000;  // enumerated multisets / weights
    int time_budget_seconds = 0;                // 0 disables the wall-clock budget
};

// All non-trivial solution classes of the given size and degree with entries
// representable inside [-bound, bound], canonicalized and deduplicated, in
// deterministic lexicographic order. Parallel over the leading entry.
std::vector<PteSolution> brute_search(int size, int degree, int bound,
                                      const SearchOptions& opts = {});

// Reference implementation: identical semantics, straight serial loop.
std::vector<PteSolution> brute_search_serial(int size, int degree, int bound,
                                             const SearchOptions& opts = {});

// True iff no non-trivial pair of the given size agrees through degree = size
// within the bound; exhaustive via brute_search emptiness.
bool theorem29_validate(int size, int bound, const SearchOptions& opts = {});

struct Extraction {
    std::vector<std::int64_t> x, y;  // size k - r, descending
    int r = 0;                       // overlap |I intersect J|
    int guaranteed_degree = 0;       // recomputed from the S-functionals
};

// Integer lists read off the symmetric difference of two constituents:
// row value minus row index over I\J and J\I. The degree is recomputed
// from S-functional agreement and re-verified on the integer lists.
// Throws std::invalid_argument when I = J, std::domain_error when either
// shifted pattern fails dominance.
Extraction extract_from_collision(int n, int k, const weights::FundWeight& nu,
                                  const weights::IndexSet& I, const weights::IndexSet& J);

struct IdealSearchOptions {
    SearchOptions search;
    std::string checkpoint_path;  // empty disables checkpointing
};

struct IdealSearchResult {
    std::vector<PteSolution> solutions;  // deterministic canonical order
    std::uint64_t weights_scanned = 0;
    std::uint64_t collisions_found = 0;
    bool resumed = false;                // a checkpoint was loaded
};

// Constructive search for ideal solutions of size k (degree k-1): scans
// strictly dominant weights for n = 2k with coefficients in [1, bound],
// collects depth-k collisions, asserts disjointness on each, extracts and
// verifies. Resumable by leading-coefficient checkpoint blocks.
// Throws std::invalid_argument for k < 2 or bound < 1.
IdealSearchResult ideal_search(int k, std::int64_t nu_coeff_bound,
                               const IdealSearchOptions& opts = {});

// Record schema {"X","Y","size","degree","max_degree","ideal","provenance"};
// provenance is the string "brute" or an object {"nu","I","J"}.
std::string solution_to_json(const PteSolution& s);
PteSolution solution_from_json(const std::string& line);
std::string solution_to_text(const PteSolution& s);

}  // namespace ptelab::pte
