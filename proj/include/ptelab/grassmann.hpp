#pragma once

// Arithmetic in the box-truncated Schur-basis ring attached to the (k, n-k)
// rectangle (the cohomology ring of the Grassmannian of k-planes in n-space):
// Schubert-class multiplication, the defining relation polynomials in the
// generators w_1..w_k, reduction of w-polynomials into the ring, and the
// presentation verification report.

#include <map>
#include <string>
#include <vector>

#include "ptelab/partition.hpp"
#include "ptelab/rational.hpp"
#include "ptelab/report.hpp"

namespace ptelab::grassmann {

class GrassElement {
public:
    GrassElement(int k, int n);

    static GrassElement schubert(int k, int n, const Partition& lambda);  // one class
    static GrassElement one(int k, int n) { return schubert(k, n, Partition()); }

    int k() const { return k_; }
    int n() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<Partition, Rat, PartitionGradedLess>& coeffs() const { return coeffs_; }
    Rat coeff(const Partition& lambda) const;
    // Adds c * s_lambda; classes outside the box are rejected, use
    // add_truncated for the quotient-map behavior.
    void add(const Partition& lambda, const Rat& c);
    // Adds c * s_lambda, silently dropping lambda outside the box.
    void add_truncated(const Partition& lambda, const Rat& c);

    GrassElement operator+(const GrassElement& o) const;
    GrassElement operator-(const GrassElement& o) const;
    GrassElement operator*(const Rat& c) const;
    bool operator==(const GrassElement& o) const;
    bool operator!=(const GrassElement& o) const { return !(*this == o); }

    std::string to_string() const;  // "s[2,1] + 2*s[1]" in graded-lex order

private:
    int k_, n_;
    std::map<Partition, Rat, PartitionGradedLess> coeffs_;  // no zeros stored
};

// Schubert-basis product: Littlewood-Richardson expansion with every class
// outside the k x (n-k) box truncated away. Throws on (k,n) mismatch.
GrassElement mul(const GrassElement& a, const GrassElement& b);

// Polynomials in the graded generators w_1..w_k with deg(w_i) = i.
class WPoly {
public:
    explicit WPoly(int k);

    static WPoly zero(int k) { return WPoly(k); }
    static WPoly constant(int k, const Rat& c);
    static WPoly generator(int k, int i);  // w_i, 1-based

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    // Weighted degree sum(i * t_i) of the largest term, -1 for zero.
    int weighted_degree() const;
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Rat& c);
    WPoly operator+(const WPoly& o) const;
    WPoly operator-(const WPoly& o) const;
    WPoly operator*(const WPoly& o) const;
    WPoly operator*(const Rat& c) const;
    bool operator==(const WPoly& o) const;

    // Terms of weighted degree exactly d.
    WPoly graded_component(int d) const;
    // Drop terms of weighted degree greater than d.
    WPoly truncated(int d) const;

    std::string to_string() const;  // "w1^3 + 2*w1*w2"

private:
    int k_;
    std::map<std::vector<int>, Rat> terms_;  // exponent vector t_1..t_k
};

// The degree-(n-k+s) relation polynomial: sum over exponent vectors t with
// sum(i*t_i) = n-k+s of ((t_s+...+t_k)/sum(t)) * multinomial(t) * w^t.
// With signed = true each term also carries (-1)^{sum(t)}; for s = 1 the
// tail factor is 1 and the polynomial is the weighted-degree-(n-k+1) piece
// of the formal inverse of 1 + w_1 + ... + w_k.
// Requires 1 <= s <= k <= n-k.
WPoly relation_f(int s, int k, int n, bool signed_variant);

// Image of p under w_i -> column class s_{(1^i)}, expanded by mul.
GrassElement reduce_w_poly(const WPoly& p, int k, int n);

struct PresentationReport {
    CheckReport checks;
    bool signed_annihilates = false;    // signed relations reduce to zero
    bool unsigned_annihilates = false;  // unsigned relations reduce to zero
    bool pass() const { return checks.all_pass(); }
};

// Coefficients of the polynomial [n choose k]_q by the Pascal-type
// recurrence; independent of any partition enumeration.
std::vector<Int> gaussian_binomial(int n, int k);

// Checks: (a) the signed relations annihilate in the ring (and records which
// sign convention annihilates); (b) total dimension is binom(n,k); (c) the
// graded dimension sequence matches gaussian_binomial; (d) low weighted-degree
// w-monomials have linearly independent images.
PresentationReport verify_presentation(int k, int n);

}  // namespace ptelab::grassmann
