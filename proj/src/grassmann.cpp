#include "ptelab/grassmann.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ptelab/exact_matrix.hpp"
#include "ptelab/symfunc.hpp"

namespace ptelab::grassmann {

GrassElement::GrassElement(int k, int n) : k_(k), n_(n) {
    if (k < 0 || n < 1 || k > n) throw std::invalid_argument("GrassElement: bad (k,n)");
}

GrassElement GrassElement::schubert(int k, int n, const Partition& lambda) {
    GrassElement e(k, n);
    e.add(lambda, Rat(1));
    return e;
}

Rat GrassElement::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void GrassElement::add(const Partition& lambda, const Rat& c) {
    if (!lambda.in_box(k_, n_ - k_))
        throw std::domain_error("GrassElement::add: class outside the box");
    add_truncated(lambda, c);
}

void GrassElement::add_truncated(const Partition& lambda, const Rat& c) {
    if (c == 0 || !lambda.in_box(k_, n_ - k_)) return;
    auto it = coeffs_.find(lambda);
    if (it == coeffs_.end()) {
        coeffs_[lambda] = c;
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

GrassElement GrassElement::operator+(const GrassElement& o) const {
    if (k_ != o.k_ || n_ != o.n_) throw std::invalid_argument("GrassElement: box mismatch");
    GrassElement r = *this;
    for (const auto& [lam, c] : o.coeffs_) r.add_truncated(lam, c);
    return r;
}

GrassElement GrassElement::operator-(const GrassElement& o) const {
    if (k_ != o.k_ || n_ != o.n_) throw std::invalid_argument("GrassElement: box mismatch");
    GrassElement r = *this;
    for (const auto& [lam, c] : o.coeffs_) r.add_truncated(lam, -c);
    return r;
}

GrassElement GrassElement::operator*(const Rat& c) const {
    GrassElement r(k_, n_);
    if (c != 0)
        for (const auto& [lam, v] : coeffs_) r.coeffs_[lam] = v * c;
    return r;
}

bool GrassElement::operator==(const GrassElement& o) const {
    return k_ == o.k_ && n_ == o.n_ && coeffs_ == o.coeffs_;
}

std::string GrassElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : coeffs_) {
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
        if (a != 1) os << rat_str(a) << '*';
        os << 's' << lam.to_string();
    }
    return os.str();
}

namespace {

const symfunc::SchurExpansion& lr_cached(const Partition& a, const Partition& b) {
    static std::map<std::pair<std::vector<int>, std::vector<int>>, symfunc::SchurExpansion>
        cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(a.parts(), b.parts());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(std::move(key), symfunc::lr_expand(a, b)).first;
    return it->second;
}

}  // namespace

GrassElement mul(const GrassElement& a, const GrassElement& b) {
    if (a.k() != b.k() || a.n() != b.n())
        throw std::invalid_argument("mul: box-parameter mismatch");
    GrassElement r(a.k(), a.n());
    for (const auto& [lam, ca] : a.coeffs()) {
        for (const auto& [mu, cb] : b.coeffs()) {
            Rat c = ca * cb;
            for (const auto& [nu, m] : lr_cached(lam, mu))
                r.add_truncated(nu, c * Rat(m));
        }
    }
    return r;
}

WPoly::WPoly(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("WPoly: need k >= 1");
}

WPoly WPoly::constant(int k, const Rat& c) {
    WPoly p(k);
    if (c != 0) p.terms_[std::vector<int>(static_cast<std::size_t>(k), 0)] = c;
    return p;
}

WPoly WPoly::generator(int k, int i) {
    if (i < 1 || i > k) throw std::out_of_range("WPoly::generator");
    WPoly p(k);
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    p.terms_[std::move(e)] = Rat(1);
    return p;
}

namespace {

int wdeg(const std::vector<int>& t) {
    int d = 0;
    for (std::size_t i = 0; i < t.size(); ++i) d += static_cast<int>(i + 1) * t[i];
    return d;
}

}  // namespace

int WPoly::weighted_degree() const {
    int best = -1;
    for (const auto& [t, c] : terms_) {
        (void)c;
        best = std::max(best, wdeg(t));
    }
    return best;
}

void WPoly::add_term(const std::vector<int>& exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != k_)
        throw std::invalid_argument("WPoly::add_term: arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_[exps] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WPoly WPoly::operator+(const WPoly& o) const {
    if (k_ != o.k_) throw std::invalid_argument("WPoly: arity mismatch");
    WPoly r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

WPoly WPoly::operator-(const WPoly& o) const {
    if (k_ != o.k_) throw std::invalid_argument("WPoly: arity mismatch");
    WPoly r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
    return r;
}

WPoly WPoly::operator*(const WPoly& o) const {
    if (k_ != o.k_) throw std::invalid_argument("WPoly: arity mismatch");
    WPoly r(k_);
    std::vector<int> e(static_cast<std::size_t>(k_));
    for (const auto& [ta, ca] : terms_)
        for (const auto& [tb, cb] : o.terms_) {
            for (int i = 0; i < k_; ++i)
                e[static_cast<std::size_t>(i)] =
                    ta[static_cast<std::size_t>(i)] + tb[static_cast<std::size_t>(i)];
            r.add_term(e, ca * cb);
        }
    return r;
}

WPoly WPoly::operator*(const Rat& c) const {
    WPoly r(k_);
    if (c != 0)
        for (const auto& [t, v] : terms_) r.terms_[t] = v * c;
    return r;
}

bool WPoly::operator==(const WPoly& o) const { return k_ == o.k_ && terms_ == o.terms_; }

WPoly WPoly::graded_component(int d) const {
    WPoly r(k_);
    for (const auto& [t, c] : terms_)
        if (wdeg(t) == d) r.terms_[t] = c;
    return r;
}

WPoly WPoly::truncated(int d) const {
    WPoly r(k_);
    for (const auto& [t, c] : terms_)
        if (wdeg(t) <= d) r.terms_[t] = c;
    return r;
}

std::string WPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Sort by weighted degree then lex for a stable graded print.
    std::vector<std::pair<std::vector<int>, Rat>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int da = wdeg(a.first), db = wdeg(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : items) {
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
        bool any = std::any_of(t.begin(), t.end(), [](int x) { return x > 0; });
        bool shown = (a != 1) || !any;
        if (shown) os << rat_str(a);
        bool star = shown;
        for (int i = 0; i < k_; ++i) {
            int e = t[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (star) os << '*';
            os << 'w' << (i + 1);
            if (e > 1) os << '^' << e;
            star = true;
        }
    }
    return os.str();
}

WPoly relation_f(int s, int k, int n, bool signed_variant) {
    if (!(1 <= s && s <= k && k <= n - k))
        throw std::invalid_argument("relation_f: need 1 <= s <= k <= n-k");
    int target = n - k + s;
    WPoly out(k);
    std::vector<int> t(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == k) {
            if (remaining != 0) return;
            long total = std::accumulate(t.begin(), t.end(), 0L);
            if (total == 0) return;
            long tail = 0;
            for (int j = s; j <= k; ++j) tail += t[static_cast<std::size_t>(j - 1)];
            if (tail == 0) return;
            // multinomial(total; t_1..t_k)
            Int multi = factorial(static_cast<unsigned long>(total));
            for (int x : t) multi = div_exact(multi, factorial(static_cast<unsigned long>(x)));
            Rat coeff = make_rat(Int(tail), Int(total)) * Rat(multi);
            if (signed_variant && (total % 2 != 0)) coeff = -coeff;
            out.add_term(t, coeff);
            return;
        }
        int w = i + 1;  // weight of generator w_{i+1}
        for (int e = 0; e * w <= remaining; ++e) {
            t[static_cast<std::size_t>(i)] = e;
            self(self, i + 1, remaining - e * w);
        }
        t[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, target);
    return out;
}

GrassElement reduce_w_poly(const WPoly& p, int k, int n) {
    GrassElement out(k, n);
    for (const auto& [t, c] : p.terms()) {
        GrassElement term = GrassElement::one(k, n);
        for (int i = 1; i <= k; ++i) {
            GrassElement column = GrassElement::schubert(k, n, Partition::single_column(i));
            for (int e = 0; e < t[static_cast<std::size_t>(i - 1)]; ++e)
                term = mul(term, column);
        }
        out = out + term * c;
    }
    return out;
}

std::vector<Int> gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("gaussian_binomial: k out of range");
    // poly[m][j] holds the coefficient list for [m choose j]_q.
    std::vector<std::vector<std::vector<Int>>> tbl(static_cast<std::size_t>(n + 1));
    for (int m = 0; m <= n; ++m) {
        int jmax = std::min(m, k);
        tbl[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(jmax + 1));
        for (int j = 0; j <= jmax; ++j) {
            auto& poly = tbl[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
            if (j == 0 || j == m) {
                poly = {Int(1)};
                continue;
            }
            const auto& a = tbl[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)];
            const auto& b = tbl[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)];
            std::size_t len = std::max(a.size(), b.size() + static_cast<std::size_t>(j));
            poly.assign(len, Int(0));
            for (std::size_t i = 0; i < a.size(); ++i) poly[i] += a[i];
            for (std::size_t i = 0; i < b.size(); ++i)
                poly[i + static_cast<std::size_t>(j)] += b[i];
        }
    }
    return tbl[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

PresentationReport verify_presentation(int k, int n) {
    if (k < 1 || k > n - k)
        throw std::invalid_argument("verify_presentation: need 1 <= k <= n-k");
    PresentationReport rep;
    std::ostringstream params;
    params << "k=" << k << ",n=" << n;

    // (a) relation images under both sign conventions.
    {
        bool all_signed = true, all_unsigned = true;
        std::string witness;
        for (int s = 1; s <= k; ++s) {
            bool sz = reduce_w_poly(relation_f(s, k, n, true), k, n).is_zero();
            bool uz = reduce_w_poly(relation_f(s, k, n, false), k, n).is_zero();
            if (!sz && witness.empty()) {
                std::ostringstream w;
                w << "signed relation s=" << s << " has nonzero image";
                witness = w.str();
            }
            all_signed = all_signed && sz;
            all_unsigned = all_unsigned && uz;
        }
        rep.signed_annihilates = all_signed;
        rep.unsigned_annihilates = all_unsigned;
        rep.checks.add("relations_annihilate", params.str(), all_signed, witness);
        std::string convention;
        if (all_signed && all_unsigned)
            convention = "both sign conventions annihilate";
        else if (all_signed)
            convention = "signed variant annihilates; unsigned does not";
        else if (all_unsigned)
            convention = "unsigned variant annihilates; signed does not";
        else
            convention = "neither convention annihilates";
        rep.checks.add("sign_convention_recorded", params.str(), all_signed, convention);
    }

    auto box = Partition::in_box_all(k, n - k);

    // (b) total dimension.
    {
        Int expected = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        bool pass = Int(static_cast<long>(box.size())) == expected;
        std::ostringstream d;
        d << box.size() << " box classes vs binom " << int_str(expected);
        rep.checks.add("total_dimension", params.str(), pass, d.str());
    }

    // (c) graded dimensions against the q-binomial coefficients.
    {
        auto gb = gaussian_binomial(n, k);
        std::vector<Int> counts(static_cast<std::size_t>(k * (n - k) + 1), Int(0));
        for (const auto& lam : box) counts[static_cast<std::size_t>(lam.size())] += 1;
        bool pass = counts.size() == gb.size();
        if (pass)
            for (std::size_t i = 0; i < gb.size(); ++i) pass = pass && counts[i] == gb[i];
        std::ostringstream d;
        d << "graded dims";
        for (const auto& c : counts) d << ' ' << int_str(c);
        rep.checks.add("graded_dimensions", params.str(), pass, d.str());
    }

    // (d) independence of images of low weighted-degree w-monomials.
    {
        // Coordinates over the box classes.
        std::map<std::vector<int>, std::size_t> col;
        for (std::size_t i = 0; i < box.size(); ++i) col[box[i].parts()] = i;
        linalg::RowEchelon ech(static_cast<int>(box.size()));
        int total = 0, independent = 0;
        std::vector<int> t(static_cast<std::size_t>(k), 0);
        auto rec = [&](auto&& self, int i, int remaining) -> void {
            if (i == k) {
                WPoly mono(k);
                mono.add_term(t, Rat(1));
                GrassElement img = reduce_w_poly(mono, k, n);
                std::vector<Rat> row(box.size(), Rat(0));
                for (const auto& [lam, c] : img.coeffs()) row[col.at(lam.parts())] = c;
                ++total;
                if (ech.add(std::move(row))) ++independent;
                return;
            }
            int w = i + 1;
            for (int e = 0; e * w <= remaining; ++e) {
                t[static_cast<std::size_t>(i)] = e;
                self(self, i + 1, remaining - e * w);
            }
            t[static_cast<std::size_t>(i)] = 0;
        };
        rec(rec, 0, n - k);
        bool pass = independent == total;
        std::ostringstream d;
        d << independent << " of " << total << " monomial images independent";
        rep.checks.add("low_degree_monomials_independent", params.str(), pass, d.str());
    }

    return rep;
}

}  // namespace ptelab::grassmann
