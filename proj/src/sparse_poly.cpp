#include "ptelab/sparse_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptelab {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparsePoly SparsePoly::constant(int nvars, const Rat& c) {
    SparsePoly p(nvars);
    if (c != 0) p.terms_[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = c;
    return p;
}

SparsePoly SparsePoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw std::out_of_range("SparsePoly::variable: index out of range");
    SparsePoly p(nvars);
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_[std::move(e)] = Rat(1);
    return p;
}

SparsePoly SparsePoly::monomial(std::vector<int> exps, const Rat& coeff) {
    SparsePoly p(static_cast<int>(exps.size()));
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("SparsePoly::monomial: negative exponent");
    if (coeff != 0) p.terms_[std::move(exps)] = coeff;
    return p;
}

int SparsePoly::degree() const {
    if (terms_.empty()) return -1;
    // Leading term is last in graded-lex ascending order.
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    }
    return true;
}

Rat SparsePoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::add_term(const std::vector<int>& exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("SparsePoly::add_term: arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_[exps] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    r += o;
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    r -= o;
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: arity mismatch");
    SparsePoly r(nvars_);
    std::vector<int> e(static_cast<std::size_t>(nvars_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i)
                e[static_cast<std::size_t>(i)] =
                    ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
    SparsePoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

SparsePoly SparsePoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("SparsePoly::pow: negative exponent");
    SparsePoly r = constant(nvars_, Rat(1));
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

SparsePoly SparsePoly::divide_exact(const SparsePoly& divisor) const {
    if (nvars_ != divisor.nvars_) throw std::invalid_argument("divide_exact: arity mismatch");
    if (divisor.is_zero()) throw std::domain_error("divide_exact: division by zero");
    SparsePoly rem = *this;
    SparsePoly quot(nvars_);
    const auto& dlead = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        std::vector<int> q(static_cast<std::size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i) {
            int d = rlead.first[static_cast<std::size_t>(i)] -
                    dlead.first[static_cast<std::size_t>(i)];
            if (d < 0) throw std::domain_error("divide_exact: not exactly divisible");
            q[static_cast<std::size_t>(i)] = d;
        }
        Rat qc = rlead.second / dlead.second;
        SparsePoly qm = monomial(q, qc);
        quot += qm;
        rem -= qm * divisor;
        // Each step cancels the current leading term, so the leading term of
        // rem strictly decreases in graded-lex order and the loop terminates.
    }
    return quot;
}

SparsePoly SparsePoly::substitute_vars(const std::vector<int>& target, int nvars_out) const {
    if (static_cast<int>(target.size()) != nvars_)
        throw std::invalid_argument("substitute_vars: map arity mismatch");
    SparsePoly r(nvars_out);
    std::vector<int> e(static_cast<std::size_t>(nvars_out));
    for (const auto& [src, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        bool vanished = false;
        for (int i = 0; i < nvars_ && !vanished; ++i) {
            int exp = src[static_cast<std::size_t>(i)];
            if (exp == 0) continue;
            int t = target[static_cast<std::size_t>(i)];
            if (t < 0) {
                vanished = true;  // variable sent to zero, monomial dies
            } else if (t >= nvars_out) {
                throw std::out_of_range("substitute_vars: target out of range");
            } else {
                e[static_cast<std::size_t>(t)] += exp;
            }
        }
        if (!vanished) r.add_term(e, c);
    }
    return r;
}

SparsePoly SparsePoly::permute_vars(const std::vector<int>& perm) const {
    return substitute_vars(perm, nvars_);
}

Rat SparsePoly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluate: point arity mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i) {
            int exp = e[static_cast<std::size_t>(i)];
            if (exp > 0)
                term *= rat_pow(point[static_cast<std::size_t>(i)],
                                static_cast<unsigned long>(exp));
        }
        total += term;
    }
    return total;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded-lex: biggest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        bool coeff_shown = (a != 1) || !any_var;
        if (coeff_shown) os << rat_str(a);
        bool need_star = coeff_shown;
        for (int i = 0; i < nvars_; ++i) {
            int exp = e[static_cast<std::size_t>(i)];
            if (exp == 0) continue;
            if (need_star) os << '*';
            os << 'x' << i;
            if (exp > 1) os << '^' << exp;
            need_star = true;
        }
    }
    return os.str();
}

std::vector<std::vector<int>> SparsePoly::monomials_of_degree(int nvars, int d) {
    if (nvars < 0 || d < 0) throw std::invalid_argument("monomials_of_degree: negative input");
    std::vector<std::vector<int>> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            cur[static_cast<std::size_t>(pos)] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

}  // namespace ptelab
