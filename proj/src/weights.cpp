#include "ptelab/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptelab::weights {

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* tag) {
    std::string s = text;
    auto strip = [](std::string& t) {
        while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
    };
    strip(s);
    // Accept an optional "a=" / "f=" prefix.
    if (s.size() >= 2 && s[1] == '=' && (s[0] == tag[0])) s = s.substr(2);
    strip(s);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("parse: unbalanced brackets");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<std::int64_t> out;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            strip(tok);
            if (tok.empty()) throw std::invalid_argument("parse: empty entry");
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("parse: bad entry '" + tok + "'");
            out.push_back(v);
        }
    }
    return out;
}

std::string format_int_list(const std::vector<std::int64_t>& v, const char* tag) {
    std::ostringstream os;
    os << tag << "=[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

}  // namespace

FundWeight::FundWeight(int n, std::vector<std::int64_t> a) : n_(n), a_(std::move(a)) {
    if (n_ < 2) throw std::invalid_argument("FundWeight: rank n must be >= 2");
    if (static_cast<int>(a_.size()) != n_ - 1)
        throw std::invalid_argument("FundWeight: need exactly n-1 coefficients");
}

FundWeight FundWeight::omega(int n, int k) {
    if (k < 1 || k > n - 1) throw std::out_of_range("FundWeight::omega: k out of range");
    std::vector<std::int64_t> a(static_cast<std::size_t>(n - 1), 0);
    a[static_cast<std::size_t>(k - 1)] = 1;
    return FundWeight(n, std::move(a));
}

FundWeight FundWeight::rho(int n) {
    return FundWeight(n, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 1));
}

std::int64_t FundWeight::coeff(int i) const {
    if (i < 1 || i > n_ - 1) throw std::out_of_range("FundWeight::coeff");
    return a_[static_cast<std::size_t>(i - 1)];
}

bool FundWeight::is_dominant() const {
    return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v >= 0; });
}

bool FundWeight::is_regular() const {
    return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v >= 1; });
}

YoungPattern FundWeight::pattern() const {
    std::vector<std::int64_t> f(static_cast<std::size_t>(n_), 0);
    // f_i = a_i + ... + a_{n-1}; suffix sums with f_n = 0.
    for (int i = n_ - 1; i >= 1; --i)
        f[static_cast<std::size_t>(i - 1)] =
            f[static_cast<std::size_t>(i)] + a_[static_cast<std::size_t>(i - 1)];
    return YoungPattern(n_, std::move(f));
}

std::string FundWeight::to_string() const { return format_int_list(a_, "a"); }

FundWeight FundWeight::parse(const std::string& text) {
    auto a = parse_int_list(text, "a");
    const int n = static_cast<int>(a.size()) + 1;
    return FundWeight(n, std::move(a));
}

YoungPattern::YoungPattern(int n, std::vector<std::int64_t> f) : n_(n), f_(std::move(f)) {
    if (n_ < 1) throw std::invalid_argument("YoungPattern: n must be >= 1");
    if (static_cast<int>(f_.size()) != n_)
        throw std::invalid_argument("YoungPattern: need exactly n rows");
}

std::int64_t YoungPattern::row(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("YoungPattern::row");
    return f_[static_cast<std::size_t>(i - 1)];
}

bool YoungPattern::is_dominant() const {
    for (int i = 0; i + 1 < n_; ++i)
        if (f_[static_cast<std::size_t>(i)] < f_[static_cast<std::size_t>(i + 1)]) return false;
    return true;
}

Rat YoungPattern::a0() const {
    Int sum(0);
    for (auto v : f_) sum += Int(static_cast<long>(v));
    return make_rat(sum, Int(n_));
}

Rat YoungPattern::c_t(int t) const {
    if (t < 1 || t > n_) throw std::out_of_range("YoungPattern::c_t");
    return a0() + Rat(t - n_);
}

std::vector<Rat> YoungPattern::centered_m() const {
    Rat avg = a0();
    std::vector<Rat> m;
    m.reserve(f_.size());
    for (auto v : f_) m.push_back(Rat(static_cast<long>(v)) - avg);
    return m;
}

std::vector<Rat> YoungPattern::shifted_multiset() const {
    auto m = centered_m();
    for (int i = 1; i <= n_; ++i) m[static_cast<std::size_t>(i - 1)] += Rat(n_ - i);
    std::sort(m.begin(), m.end(), [](const Rat& a, const Rat& b) { return a > b; });
    return m;
}

YoungPattern YoungPattern::translated(std::int64_t c) const {
    auto f = f_;
    for (auto& v : f) v += c;
    return YoungPattern(n_, std::move(f));
}

std::string YoungPattern::to_string() const { return format_int_list(f_, "f"); }

YoungPattern YoungPattern::parse(const std::string& text) {
    auto f = parse_int_list(text, "f");
    const int n = static_cast<int>(f.size());
    return YoungPattern(n, std::move(f));
}

IndexSet::IndexSet(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
    if (n_ < 1) throw std::invalid_argument("IndexSet: n must be >= 1");
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1 || elems_[i] > n_)
            throw std::invalid_argument("IndexSet: element out of range");
        if (i + 1 < elems_.size() && elems_[i] >= elems_[i + 1])
            throw std::invalid_argument("IndexSet: elements must be strictly increasing");
    }
}

bool IndexSet::contains(int i) const {
    return std::binary_search(elems_.begin(), elems_.end(), i);
}

std::vector<IndexSet> IndexSet::all_ksubsets(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("all_ksubsets: k out of range");
    std::vector<IndexSet> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            out.emplace_back(IndexSet(n, cur));
            return;
        }
        for (int v = start; v <= n - (k - pos - 1); ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

int IndexSet::intersect_size(const IndexSet& o) const {
    std::vector<int> tmp;
    std::set_intersection(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                          std::back_inserter(tmp));
    return static_cast<int>(tmp.size());
}

std::vector<int> IndexSet::minus(const IndexSet& o) const {
    std::vector<int> tmp;
    std::set_difference(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                        std::back_inserter(tmp));
    return tmp;
}

bool IndexSet::operator<(const IndexSet& o) const {
    return std::lexicographical_compare(elems_.begin(), elems_.end(), o.elems_.begin(),
                                        o.elems_.end());
}

std::string IndexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    os << '}';
    return os.str();
}

IndexSet IndexSet::parse(int n, const std::string& text) {
    std::string s = text;
    auto strip = [](std::string& t) {
        while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
    };
    strip(s);
    if (!s.empty() && (s.front() == '{' || s.front() == '[')) {
        char close = s.front() == '{' ? '}' : ']';
        if (s.back() != close) throw std::invalid_argument("IndexSet::parse: unbalanced braces");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> elems;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            strip(tok);
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("IndexSet::parse: bad entry");
            elems.push_back(v);
        }
    }
    return IndexSet(n, std::move(elems));
}

Rat s_functional(const YoungPattern& p, int k) {
    if (k < 1) throw std::invalid_argument("s_functional: k must be >= 1");
    int n = p.rank_n();
    auto m = p.centered_m();
    Rat total(0);
    for (int i = 1; i <= n; ++i) {
        Rat base = m[static_cast<std::size_t>(i - 1)] + Rat(n - i);
        total += rat_pow(base, static_cast<unsigned long>(k));
        total -= rat_pow(Rat(n - i), static_cast<unsigned long>(k));
    }
    return total;
}

bool char_equal(const YoungPattern& p, const YoungPattern& q) {
    if (p.rank_n() != q.rank_n())
        throw std::invalid_argument("char_equal: rank mismatch");
    return p.shifted_multiset() == q.shifted_multiset();
}

ShiftedPattern add_lambda_I(const YoungPattern& p, const IndexSet& I) {
    if (I.rank_n() != p.rank_n())
        throw std::invalid_argument("add_lambda_I: rank mismatch");
    std::vector<std::int64_t> f(p.rows());
    for (int i : I.elems()) f[static_cast<std::size_t>(i - 1)] += 1;
    YoungPattern shifted(p.rank_n(), std::move(f));
    bool dom = shifted.is_dominant();
    return ShiftedPattern{std::move(shifted), dom};
}

YoungPattern lists_to_pattern(const std::vector<std::int64_t>& xs) {
    int n = static_cast<int>(xs.size());
    if (n < 1) throw std::invalid_argument("lists_to_pattern: empty list");
    for (int i = 0; i + 1 < n; ++i)
        if (xs[static_cast<std::size_t>(i)] < xs[static_cast<std::size_t>(i + 1)])
            throw std::invalid_argument("lists_to_pattern: list must be weakly decreasing");
    std::vector<std::int64_t> f(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        f[static_cast<std::size_t>(i - 1)] = xs[static_cast<std::size_t>(i - 1)] - (n - i);
    return YoungPattern(n, std::move(f));
}

Int weyl_dim(const YoungPattern& p) {
    if (!p.is_dominant()) throw std::domain_error("weyl_dim: pattern not dominant");
    int n = p.rank_n();
    Int num(1), den(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            num *= Int(static_cast<long>(p.row(i) - p.row(j) + j - i));
            den *= Int(j - i);
        }
    }
    return div_exact(num, den);
}

}  // namespace ptelab::weights
