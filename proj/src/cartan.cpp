#include "ptelab/cartan.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ptelab/symfunc.hpp"

namespace ptelab::cartan {

DiagPolyMatrix::DiagPolyMatrix(int k, int n, int nvars) : k_(k), n_(n), nvars_(nvars) {
    if (k < 0 || n < 1 || k > n) throw std::invalid_argument("DiagPolyMatrix: bad (k,n)");
    if (nvars != n - 1 && nvars != n)
        throw std::invalid_argument("DiagPolyMatrix: nvars must be n-1 or n");
    subsets_ = IndexSet::all_ksubsets(n, k);
    entries_.assign(subsets_.size(), SparsePoly::zero(nvars));
}

const SparsePoly& DiagPolyMatrix::entry(int idx) const {
    if (idx < 0 || idx >= count()) throw std::out_of_range("DiagPolyMatrix::entry");
    return entries_[static_cast<std::size_t>(idx)];
}

const SparsePoly& DiagPolyMatrix::entry(const IndexSet& s) const {
    int idx = subset_index(s);
    if (idx < 0) throw std::out_of_range("DiagPolyMatrix::entry: no such subset");
    return entries_[static_cast<std::size_t>(idx)];
}

void DiagPolyMatrix::set_entry(int idx, SparsePoly p) {
    if (idx < 0 || idx >= count()) throw std::out_of_range("DiagPolyMatrix::set_entry");
    if (p.nvars() != nvars_) throw std::invalid_argument("DiagPolyMatrix: entry arity mismatch");
    entries_[static_cast<std::size_t>(idx)] = std::move(p);
}

int DiagPolyMatrix::subset_index(const IndexSet& s) const {
    auto it = std::lower_bound(subsets_.begin(), subsets_.end(), s);
    if (it == subsets_.end() || !(*it == s)) return -1;
    return static_cast<int>(it - subsets_.begin());
}

DiagPolyMatrix DiagPolyMatrix::operator+(const DiagPolyMatrix& o) const {
    if (k_ != o.k_ || n_ != o.n_ || nvars_ != o.nvars_)
        throw std::invalid_argument("DiagPolyMatrix: shape mismatch");
    DiagPolyMatrix r = *this;
    for (int i = 0; i < count(); ++i)
        r.entries_[static_cast<std::size_t>(i)] += o.entries_[static_cast<std::size_t>(i)];
    return r;
}

DiagPolyMatrix DiagPolyMatrix::operator-(const DiagPolyMatrix& o) const {
    if (k_ != o.k_ || n_ != o.n_ || nvars_ != o.nvars_)
        throw std::invalid_argument("DiagPolyMatrix: shape mismatch");
    DiagPolyMatrix r = *this;
    for (int i = 0; i < count(); ++i)
        r.entries_[static_cast<std::size_t>(i)] -= o.entries_[static_cast<std::size_t>(i)];
    return r;
}

DiagPolyMatrix DiagPolyMatrix::scaled(const SparsePoly& q) const {
    DiagPolyMatrix r = *this;
    for (auto& e : r.entries_) e = e * q;
    return r;
}

bool DiagPolyMatrix::operator==(const DiagPolyMatrix& o) const {
    return k_ == o.k_ && n_ == o.n_ && nvars_ == o.nvars_ && entries_ == o.entries_;
}

SparsePoly DiagPolyMatrix::trace() const {
    SparsePoly t(nvars_);
    for (const auto& e : entries_) t += e;
    return t;
}

bool DiagPolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const SparsePoly& p) { return p.is_zero(); });
}

DiagPolyMatrix DiagPolyMatrix::permuted(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != n_)
        throw std::invalid_argument("permuted: sigma must have n entries");
    // Variable map for the substitution x_i -> x_{sigma(i)}.
    std::vector<int> varmap(static_cast<std::size_t>(nvars_));
    for (int i = 1; i <= nvars_; ++i) {
        int image = sigma[static_cast<std::size_t>(i - 1)];
        if (image < 1 || image > n_) throw std::invalid_argument("permuted: bad sigma image");
        if (image == n_ && nvars_ == n_ - 1)
            varmap[static_cast<std::size_t>(i - 1)] = -1;  // sent to the zero slot
        else
            varmap[static_cast<std::size_t>(i - 1)] = image - 1;
    }
    DiagPolyMatrix r(k_, n_, nvars_);
    for (int idx = 0; idx < count(); ++idx) {
        // Image subset sigma(S), re-sorted.
        std::vector<int> image;
        image.reserve(static_cast<std::size_t>(k_));
        for (int e : subsets_[static_cast<std::size_t>(idx)].elems())
            image.push_back(sigma[static_cast<std::size_t>(e - 1)]);
        std::sort(image.begin(), image.end());
        int target = r.subset_index(IndexSet(n_, image));
        r.set_entry(target,
                    entries_[static_cast<std::size_t>(idx)].substitute_vars(varmap, nvars_));
    }
    return r;
}

std::vector<Rat> DiagPolyMatrix::flatten(int max_degree) const {
    // Column index per exponent vector, degrees 0..max_degree, graded-lex.
    std::vector<std::vector<int>> monoms;
    for (int d = 0; d <= max_degree; ++d) {
        auto layer = SparsePoly::monomials_of_degree(nvars_, d);
        monoms.insert(monoms.end(), layer.begin(), layer.end());
    }
    std::map<std::vector<int>, std::size_t, GradedLexLess> col;
    for (std::size_t i = 0; i < monoms.size(); ++i) col[monoms[i]] = i;
    std::vector<Rat> out(static_cast<std::size_t>(count()) * monoms.size(), Rat(0));
    for (int idx = 0; idx < count(); ++idx) {
        for (const auto& [e, c] : entries_[static_cast<std::size_t>(idx)].terms()) {
            auto it = col.find(e);
            if (it == col.end())
                throw std::domain_error("flatten: entry degree exceeds max_degree");
            out[static_cast<std::size_t>(idx) * monoms.size() + it->second] = c;
        }
    }
    return out;
}

std::string DiagPolyMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < count(); ++i)
        os << subsets_[static_cast<std::size_t>(i)].to_string() << ": "
           << entries_[static_cast<std::size_t>(i)].to_string() << '\n';
    return os.str();
}

namespace {

// Echelon basis of the degree-d piece of the power-sum ideal in n variables,
// expressed over the degree-d monomial basis. Cached: rebuilding it per
// membership query would dominate the sweeps in verify_free_basis.
const linalg::RowEchelon& ideal_piece(int n, int d) {
    static std::map<std::pair<int, int>, linalg::RowEchelon> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto basis = SparsePoly::monomials_of_degree(n, d);
    std::map<std::vector<int>, std::size_t, GradedLexLess> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    linalg::RowEchelon ech(static_cast<int>(basis.size()));
    for (int i = 1; i <= std::min(n, d); ++i) {
        SparsePoly p = symfunc::power_sum(i, n);
        for (const auto& m : SparsePoly::monomials_of_degree(n, d - i)) {
            SparsePoly gen = p * SparsePoly::monomial(m, Rat(1));
            std::vector<Rat> row(basis.size(), Rat(0));
            for (const auto& [e, c] : gen.terms()) row[col.at(e)] = c;
            ech.add(std::move(row));
        }
    }
    return cache.emplace(key, std::move(ech)).first->second;
}

}  // namespace

bool ideal_membership(const SparsePoly& g, int n) {
    if (g.nvars() != n) throw std::invalid_argument("ideal_membership: arity mismatch");
    if (g.is_zero()) return true;
    if (!g.is_homogeneous())
        throw std::invalid_argument("ideal_membership: input must be homogeneous");
    int d = g.degree();
    if (d == 0) return false;  // constants other than zero never belong
    const auto& ech = ideal_piece(n, d);
    auto basis = SparsePoly::monomials_of_degree(n, d);
    std::map<std::vector<int>, std::size_t, GradedLexLess> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    std::vector<Rat> row(basis.size(), Rat(0));
    for (const auto& [e, c] : g.terms()) row[col.at(e)] = c;
    return ech.contains(std::move(row));
}

namespace {

// Substitution map sending slot j (of k slot variables) to the chart
// variable for subset element s_j, with slot n zeroed.
std::vector<int> slot_map(const IndexSet& s, int n) {
    std::vector<int> map;
    map.reserve(s.elems().size());
    for (int e : s.elems()) map.push_back(e == n ? -1 : e - 1);
    return map;
}

}  // namespace

DiagPolyMatrix diag_schur_matrix(int k, int n, const Partition& lambda) {
    if (lambda.length() > k)
        throw std::domain_error("diag_schur_matrix: partition has more rows than slots");
    DiagPolyMatrix m(k, n, n - 1);
    const SparsePoly& s_slots = symfunc::schur_cached(lambda, k);
    for (int idx = 0; idx < m.count(); ++idx) {
        const IndexSet& s = m.subsets()[static_cast<std::size_t>(idx)];
        m.set_entry(idx, s_slots.substitute_vars(slot_map(s, n), n - 1));
    }
    return m;
}

namespace {

DiagPolyMatrix mtype_impl(int k, int n, int s, bool ambient) {
    if (s < 2) throw std::invalid_argument("restricted_mtype: s must be >= 2");
    if (k < 1 || k > n) throw std::invalid_argument("restricted_mtype: bad (k,n)");
    int nv = ambient ? n : n - 1;
    DiagPolyMatrix m(k, n, nv);
    SparsePoly p_slots = symfunc::power_sum(s - 1, k);
    SparsePoly p_all = symfunc::power_sum(s - 1, nv);
    Rat correction = Rat(s) * make_rat(k, n);
    for (int idx = 0; idx < m.count(); ++idx) {
        const IndexSet& sub = m.subsets()[static_cast<std::size_t>(idx)];
        std::vector<int> map;
        map.reserve(sub.elems().size());
        for (int e : sub.elems())
            map.push_back((!ambient && e == n) ? -1 : e - 1);
        SparsePoly entry = p_slots.substitute_vars(map, nv) * Rat(s) - p_all * correction;
        m.set_entry(idx, std::move(entry));
    }
    return m;
}

}  // namespace

DiagPolyMatrix restricted_mtype(int k, int n, int s) { return mtype_impl(k, n, s, false); }

DiagPolyMatrix restricted_mtype_ambient(int k, int n, int s) {
    return mtype_impl(k, n, s, true);
}

CheckReport verify_free_basis(int k, int n, int degree_bound) {
    if (k < 1 || k > n - k) throw std::invalid_argument("verify_free_basis: need 1 <= k <= n-k");
    CheckReport report;
    std::ostringstream params;
    params << "k=" << k << ",n=" << n << ",bound=" << degree_bound;

    auto box = Partition::in_box_all(k, n - k);

    // (a) Linear independence of the box family over a shared flattening.
    {
        int max_deg = k * (n - k);
        linalg::RowEchelon ech(static_cast<int>(box.size()) == 0
                                   ? 1
                                   : static_cast<int>(diag_schur_matrix(k, n, box[0])
                                                          .flatten(max_deg)
                                                          .size()));
        int independent = 0;
        for (const auto& lam : box)
            if (ech.add(diag_schur_matrix(k, n, lam).flatten(max_deg))) ++independent;
        bool pass = independent == static_cast<int>(box.size());
        std::ostringstream d;
        d << "rank " << independent << " of " << box.size();
        report.add("diag_family_independent", params.str(), pass, d.str());
    }

    // (b) Box membership biconditional against the power-sum ideal.
    {
        bool pass = true;
        std::string witness;
        for (const auto& lam : Partition::up_to_size(degree_bound)) {
            SparsePoly s_k_vars = lam.length() > k
                                      ? SparsePoly::zero(k)
                                      : symfunc::schur_cached(lam, k);
            // Embed into n variables (slots k+1..n unused).
            std::vector<int> embed(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) embed[static_cast<std::size_t>(i)] = i;
            SparsePoly g = s_k_vars.substitute_vars(embed, n);
            bool member = ideal_membership(g, n);
            bool in_box = lam.in_box(k, n - k);
            if (member == !in_box) continue;
            pass = false;
            witness = lam.to_string() + (member ? " unexpectedly in ideal" : " escapes ideal");
            break;
        }
        report.add("box_membership_biconditional", params.str(), pass, witness);
    }

    // (c) Each restricted M-type decomposes over the box family with
    //     symmetric homogeneous coefficients.
    {
        bool pass = true;
        std::string witness;
        for (int s = 2; s <= k + 1 && pass; ++s) {
            int d = s - 1;  // common homogeneous degree of all entries
            std::vector<std::vector<Rat>> columns;
            for (const auto& lam : box) {
                if (lam.size() > d) continue;
                DiagPolyMatrix base = diag_schur_matrix(k, n, lam);
                for (const auto& mu : Partition::of_size(d - lam.size(), n - 1)) {
                    SparsePoly msym = symfunc::monomial_symmetric(mu, n - 1);
                    columns.push_back(base.scaled(msym).flatten(d));
                }
            }
            std::vector<Rat> target = restricted_mtype(k, n, s).flatten(d);
            if (!linalg::in_span(columns, target)) {
                pass = false;
                std::ostringstream w;
                w << "s=" << s << " not in module span";
                witness = w.str();
            }
        }
        report.add("mtype_in_module_span", params.str(), pass, witness);
    }

    return report;
}

}  // namespace ptelab::cartan
