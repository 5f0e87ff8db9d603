#pragma once

// Exact arithmetic aliases and small helpers shared by every module.
// All core computation is integer or rational; nothing here approximates.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptelab {

using Int = mpz_class;
using Rat = mpq_class;

// n/d with canonicalization (mpq_class(n, d) alone does not reduce).
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Exact integer power with nonnegative exponent.
inline Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// Exact rational power: (p/q)^e computed on numerator and denominator.
inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return out;  // num/den coprime stays coprime under powers
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// Division known to be exact; throws if it is not.
inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("div_exact: not divisible");
    Int out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// "p/q" with the "/q" omitted for integers; matches the CLI text format.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline std::string int_str(const Int& z) { return z.get_str(); }

// Lexicographic compare for sorted-vector keys in ordered containers.
struct RatVecLess {
    bool operator()(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

struct IntVecLess {
    bool operator()(const std::vector<Int>& a, const std::vector<Int>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

}  // namespace ptelab
