#include "ptelab/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ptelab::symfunc {

SparsePoly power_sum(int t, int nvars) {
    if (t < 0) throw std::invalid_argument("power_sum: negative degree");
    if (t == 0) return SparsePoly::constant(nvars, Rat(nvars));
    SparsePoly p(nvars);
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = t;
        p.add_term(e, Rat(1));
    }
    return p;
}

SparsePoly complete_h(int r, int nvars) {
    if (r < 0) return SparsePoly::zero(nvars);
    SparsePoly p(nvars);
    for (auto& e : SparsePoly::monomials_of_degree(nvars, r)) p.add_term(e, Rat(1));
    return p;
}

SparsePoly elementary_e(int r, int nvars) {
    if (r < 0 || r > nvars) return SparsePoly::zero(nvars);
    SparsePoly p(nvars);
    // Exponent vectors that are 0/1 with exactly r ones.
    std::vector<int> idx(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == r) {
            std::vector<int> e(static_cast<std::size_t>(nvars), 0);
            for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
            p.add_term(e, Rat(1));
            return;
        }
        for (int i = start; i < nvars; ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return p;
}

SparsePoly monomial_symmetric(const Partition& mu, int nvars) {
    if (mu.length() > nvars) return SparsePoly::zero(nvars);
    SparsePoly p(nvars);
    std::vector<int> e(mu.parts().begin(), mu.parts().end());
    e.resize(static_cast<std::size_t>(nvars), 0);
    std::sort(e.begin(), e.end());
    // Iterating distinct permutations gives each monomial exactly once.
    do {
        p.add_term(e, Rat(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return p;
}

namespace {

// Determinant of a matrix of polynomials by cofactor expansion; sizes here
// are at most the number of rows of a partition, so this stays small.
SparsePoly poly_det(const std::vector<std::vector<SparsePoly>>& m, int nvars) {
    std::size_t n = m.size();
    if (n == 0) return SparsePoly::constant(nvars, Rat(1));
    if (n == 1) return m[0][0];
    SparsePoly det(nvars);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<SparsePoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<SparsePoly> row;
            row.reserve(n - 1);
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        SparsePoly term = m[0][j] * poly_det(minor, nvars);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace

SparsePoly schur_jacobi_trudi(const Partition& lambda, int nvars) {
    if (lambda.length() > nvars)
        throw std::domain_error("schur_jacobi_trudi: more rows than variables");
    int l = lambda.length();
    if (l == 0) return SparsePoly::constant(nvars, Rat(1));
    std::vector<std::vector<SparsePoly>> m(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) {
        auto& row = m[static_cast<std::size_t>(i - 1)];
        row.reserve(static_cast<std::size_t>(l));
        for (int j = 1; j <= l; ++j)
            row.push_back(complete_h(lambda.part(i) - i + j, nvars));
    }
    return poly_det(m, nvars);
}

SparsePoly schur_alternant(const Partition& lambda, int nvars) {
    if (lambda.length() > nvars)
        throw std::domain_error("schur_alternant: more rows than variables");
    int n = nvars;
    // Exponents lambda_i + (n - i), i = 1..n.
    std::vector<int> shift(static_cast<std::size_t>(n));
    std::vector<int> delta(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        shift[static_cast<std::size_t>(i - 1)] = lambda.part(i) + n - i;
        delta[static_cast<std::size_t>(i - 1)] = n - i;
    }
    auto alternant = [n](const std::vector<int>& exps) {
        SparsePoly a(n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            // Parity of the permutation by counting inversions.
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
            std::vector<int> e(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                e[static_cast<std::size_t>(j)] =
                    exps[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
            a.add_term(e, (inv % 2 == 0) ? Rat(1) : Rat(-1));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return a;
    };
    SparsePoly num = alternant(shift);
    SparsePoly den = alternant(delta);
    return num.divide_exact(den);
}

const SparsePoly& schur_cached(const Partition& lambda, int nvars) {
    static std::map<std::pair<int, std::vector<int>>, SparsePoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(nvars, lambda.parts());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(std::move(key), schur_jacobi_trudi(lambda, nvars)).first;
    return it->second;
}

std::vector<Partition> pieri_row(const Partition& lambda, int r) {
    if (r < 0) return {};
    if (r == 0) return {lambda};
    std::vector<Partition> out;
    int rows = lambda.length() + 1;
    std::vector<int> mu(static_cast<std::size_t>(rows), 0);
    // Horizontal strip: lambda_i <= mu_i <= lambda_{i-1}, extra boxes sum to r.
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i > rows) {
            if (remaining == 0) {
                std::vector<int> parts(mu.begin(), mu.begin() + rows);
                out.emplace_back(std::move(parts));
            }
            return;
        }
        int lo = lambda.part(i);
        int hi = (i == 1) ? lambda.part(1) + remaining
                          : std::min(lambda.part(i - 1), lambda.part(i) + remaining);
        for (int v = lo; v <= hi; ++v) {
            mu[static_cast<std::size_t>(i - 1)] = v;
            self(self, i + 1, remaining - (v - lo));
        }
        mu[static_cast<std::size_t>(i - 1)] = lambda.part(i);
    };
    rec(rec, 1, r);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return PartitionGradedLess{}(a, b);
    });
    return out;
}

SchurExpansion lr_expand(const Partition& mu, const Partition& nu) {
    SchurExpansion total;
    int l = nu.length();
    if (l == 0) {
        total[mu] = 1;
        return total;
    }
    std::vector<int> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
        // Row budget for position i under this permutation term of the
        // determinant: nu_i - i + (sigma(i) + 1).
        std::vector<int> rowlens(static_cast<std::size_t>(l));
        bool dead = false;
        for (int i = 1; i <= l && !dead; ++i) {
            int r = nu.part(i) - i + perm[static_cast<std::size_t>(i - 1)] + 1;
            if (r < 0) dead = true;
            rowlens[static_cast<std::size_t>(i - 1)] = r;
        }
        if (dead) continue;
        SchurExpansion cur;
        cur[mu] = 1;
        for (int r : rowlens) {
            SchurExpansion next;
            for (const auto& [lam, c] : cur)
                for (const auto& grown : pieri_row(lam, r)) next[grown] += c;
            cur = std::move(next);
        }
        Int sign = (inv % 2 == 0) ? 1 : -1;
        for (const auto& [lam, c] : cur) total[lam] += sign * c;
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (auto it = total.begin(); it != total.end();) {
        if (it->second == 0) {
            it = total.erase(it);
        } else {
            if (it->second < 0)
                throw std::logic_error("lr_expand: negative structure constant");
            ++it;
        }
    }
    return total;
}

}  // namespace ptelab::symfunc
