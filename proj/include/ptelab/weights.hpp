#pragma once

// Weight bookkeeping for sl(n): fundamental-weight coefficient vectors,
// Young-type row patterns (f-lists), k-element index sets, the centered
// power-sum functionals S_k, central-character comparison, and Weyl
// dimension. Everything is exact; patterns may be non-dominant ("raw")
// where noted, and all semantics are invariant under translating every
// row by the same constant.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptelab/rational.hpp"

namespace ptelab::weights {

class YoungPattern;

// Nonnegative-integer coefficients on the fundamental weights of sl(n):
// weight = sum a_i * omega_i, i = 1..n-1.
class FundWeight {
public:
    FundWeight(int n, std::vector<std::int64_t> a);

    static FundWeight omega(int n, int k);  // single fundamental weight
    static FundWeight rho(int n);           // all coefficients 1

    int rank_n() const { return n_; }
    const std::vector<std::int64_t>& coeffs() const { return a_; }
    std::int64_t coeff(int i) const;        // 1-based

    bool is_dominant() const;               // all a_i >= 0
    bool is_regular() const;                // all a_i >= 1

    YoungPattern pattern() const;           // f_i = a_i + ... + a_{n-1}, f_n = 0

    bool operator==(const FundWeight& o) const { return n_ == o.n_ && a_ == o.a_; }

    std::string to_string() const;          // "a=[1,1,1]"
    static FundWeight parse(const std::string& text);  // accepts with/without "a="

private:
    int n_;
    std::vector<std::int64_t> a_;
};

// Row pattern (f_1, ..., f_n). Dominant when weakly decreasing; raw
// patterns (arbitrary integers) are legal inputs to the S-functionals.
class YoungPattern {
public:
    YoungPattern(int n, std::vector<std::int64_t> f);

    int rank_n() const { return n_; }
    const std::vector<std::int64_t>& rows() const { return f_; }
    std::int64_t row(int i) const;          // 1-based

    bool is_dominant() const;

    // Average row value; the centering constant.
    Rat a0() const;
    // Centering offsets c_t = a0 + t - n; satisfies f_t - c_t = (f_t - t) + (n - a0).
    Rat c_t(int t) const;
    // m_i = f_i - a0.
    std::vector<Rat> centered_m() const;
    // Multiset {m_i + n - i} sorted descending; equality of these multisets
    // is exactly central-character equality.
    std::vector<Rat> shifted_multiset() const;

    YoungPattern translated(std::int64_t c) const;  // add c to every row

    bool operator==(const YoungPattern& o) const { return n_ == o.n_ && f_ == o.f_; }

    std::string to_string() const;          // "f=[3,2,1,0]"
    static YoungPattern parse(const std::string& text);

private:
    int n_;
    std::vector<std::int64_t> f_;
};

// Strictly increasing subset of {1, ..., n}.
class IndexSet {
public:
    IndexSet(int n, std::vector<int> elems);

    int rank_n() const { return n_; }
    int k() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elems() const { return elems_; }
    bool contains(int i) const;

    static std::vector<IndexSet> all_ksubsets(int n, int k);  // lex order

    int intersect_size(const IndexSet& o) const;
    std::vector<int> minus(const IndexSet& o) const;  // elements of *this not in o

    bool operator==(const IndexSet& o) const { return n_ == o.n_ && elems_ == o.elems_; }
    bool operator<(const IndexSet& o) const;          // lex on element lists

    std::string to_string() const;                    // "{1,4}"
    static IndexSet parse(int n, const std::string& text);

private:
    int n_;
    std::vector<int> elems_;
};

// S_k(p) = sum_i [(m_i + n - i)^k - (n - i)^k] with m the centered rows.
// S_1 vanishes identically; k must be >= 1.
Rat s_functional(const YoungPattern& p, int k);

// Central characters agree iff the shifted multisets agree.
bool char_equal(const YoungPattern& p, const YoungPattern& q);

struct ShiftedPattern {
    YoungPattern pattern;
    bool dominant;
};

// Rows of p incremented on the positions of I (the weight nu + 1_I).
ShiftedPattern add_lambda_I(const YoungPattern& p, const IndexSet& I);

// Pattern whose S-functionals track the power sums of the list:
// f_i = xs_i - (n - i) for xs sorted weakly decreasing (throws otherwise).
YoungPattern lists_to_pattern(const std::vector<std::int64_t>& xs);

// Weyl dimension formula; requires a dominant pattern.
Int weyl_dim(const YoungPattern& p);

}  // namespace ptelab::weights
