#pragma once

// Sparse multivariate polynomials over the rationals.
// Terms live in a map keyed by exponent vector under graded-lex order, so
// iteration (and therefore printing) is canonical and deterministic.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptelab/rational.hpp"

namespace ptelab {

// Graded lexicographic on exponent vectors of equal length:
// lower total degree first, then lex. Map iteration ascends, so the
// leading (greatest) term is the map's last element.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class SparsePoly {
public:
    using TermMap = std::map<std::vector<int>, Rat, GradedLexLess>;

    explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}

    static SparsePoly zero(int nvars) { return SparsePoly(nvars); }
    static SparsePoly constant(int nvars, const Rat& c);
    static SparsePoly variable(int nvars, int index);  // 0-based x_index
    static SparsePoly monomial(std::vector<int> exps, const Rat& coeff);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;                       // total degree, -1 for zero
    bool is_homogeneous() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rat coeff(const std::vector<int>& exps) const;
    void add_term(const std::vector<int>& exps, const Rat& c);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rat& c) const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly pow(int e) const;

    // Exact division: returns quotient, throws std::domain_error when the
    // divisor does not divide exactly (leading-term reduction in graded-lex).
    SparsePoly divide_exact(const SparsePoly& divisor) const;

    // Substitute variable i by target[i]-th variable of an nvars_out ring,
    // or by 0 when target[i] < 0. Handles both renames and zero-slotting.
    SparsePoly substitute_vars(const std::vector<int>& target, int nvars_out) const;

    // Apply a permutation of the variables: x_i -> x_{perm[i]}.
    SparsePoly permute_vars(const std::vector<int>& perm) const;

    // Exact evaluation at a rational point.
    Rat evaluate(const std::vector<Rat>& point) const;

    // Canonical text: descending graded-lex, "x0^2*x1 - 2*x1 + 3/2" style.
    std::string to_string() const;

    // Exponent vectors of total degree exactly d in nvars variables,
    // in ascending graded-lex order (shared monomial-basis enumeration).
    static std::vector<std::vector<int>> monomials_of_degree(int nvars, int d);

private:
    int nvars_;
    TermMap terms_;  // invariant: no zero coefficients stored
};

inline SparsePoly operator*(const Rat& c, const SparsePoly& p) { return p * c; }

}  // namespace ptelab
