#include "ptelab/separation.hpp"

#include <map>
#include <stdexcept>

namespace ptelab::separation {

std::vector<Constituent> tensor_decompose(int n, int k, const FundWeight& nu) {
    if (!(1 <= k && k <= n - k))
        throw std::invalid_argument("tensor_decompose: need 1 <= k <= n-k");
    if (nu.rank_n() != n) throw std::invalid_argument("tensor_decompose: rank mismatch");
    if (!nu.is_dominant()) throw std::domain_error("tensor_decompose: nu not dominant");
    YoungPattern base = nu.pattern();
    std::vector<Constituent> out;
    for (const auto& I : IndexSet::all_ksubsets(n, k)) {
        auto shifted = weights::add_lambda_I(base, I);
        if (!shifted.dominant) continue;
        Int d = weights::weyl_dim(shifted.pattern);
        out.push_back(Constituent{I, std::move(shifted.pattern), std::move(d)});
    }
    return out;
}

bool totally_subordinate(int n, int k, const FundWeight& nu) {
    Int full = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Int(static_cast<long>(tensor_decompose(n, k, nu).size())) == full;
}

FunctionalVector functionals(int n, int k, const FundWeight& nu, const IndexSet& I, int p) {
    if (p < 2) throw std::invalid_argument("functionals: need p >= 2");
    if (nu.rank_n() != n || I.rank_n() != n)
        throw std::invalid_argument("functionals: rank mismatch");
    if (I.k() != k) throw std::invalid_argument("functionals: subset size mismatch");
    auto shifted = weights::add_lambda_I(nu.pattern(), I);
    if (!shifted.dominant)
        throw std::domain_error("functionals: constituent pattern not dominant");
    FunctionalVector v{I, {}};
    v.values.reserve(static_cast<std::size_t>(p - 1));
    for (int q = 2; q <= p; ++q)
        v.values.push_back(weights::s_functional(shifted.pattern, q));
    return v;
}

namespace {

// Constituents must exhaust all subsets for the separation questions to be
// well-posed; shared guard for separation_index and find_collisions.
std::vector<Constituent> subordinate_constituents(int n, int k, const FundWeight& nu,
                                                  const char* who) {
    auto cons = tensor_decompose(n, k, nu);
    Int full = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (Int(static_cast<long>(cons.size())) != full)
        throw std::domain_error(std::string(who) + ": weight is not totally subordinate");
    return cons;
}

}  // namespace

int separation_index(int n, int k, const FundWeight& nu) {
    auto cons = subordinate_constituents(n, k, nu, "separation_index");
    // The index is provably at most k+1; the cap below only guards against
    // an implementation fault, not a mathematical possibility.
    constexpr int kCap = 64;
    for (int t = 2; t <= kCap; ++t) {
        std::map<std::vector<Rat>, int, RatVecLess> seen;
        bool separated = true;
        for (const auto& c : cons) {
            std::vector<Rat> key;
            key.reserve(static_cast<std::size_t>(t - 1));
            for (int q = 2; q <= t; ++q)
                key.push_back(weights::s_functional(c.pattern, q));
            if (++seen[key] > 1) {
                separated = false;
                break;
            }
        }
        if (separated) return t;
    }
    throw std::logic_error("separation_index: exceeded iteration cap");
}

std::vector<Collision> find_collisions(int n, int k, const FundWeight& nu, int depth) {
    if (depth < 2) throw std::invalid_argument("find_collisions: need depth >= 2");
    auto cons = subordinate_constituents(n, k, nu, "find_collisions");
    // Group by exact functional vector; constituents arrive in lex I order,
    // so pairs within each group come out lexicographically as well.
    std::map<std::vector<Rat>, std::vector<std::size_t>, RatVecLess> groups;
    std::vector<std::vector<Rat>> vecs(cons.size());
    for (std::size_t idx = 0; idx < cons.size(); ++idx) {
        std::vector<Rat> key;
        key.reserve(static_cast<std::size_t>(depth - 1));
        for (int q = 2; q <= depth; ++q)
            key.push_back(weights::s_functional(cons[idx].pattern, q));
        vecs[idx] = key;
        groups[std::move(key)].push_back(idx);
    }
    std::vector<Collision> out;
    for (std::size_t a = 0; a < cons.size(); ++a) {
        const auto& members = groups.at(vecs[a]);
        for (std::size_t b : members) {
            if (b <= a) continue;
            out.push_back(Collision{cons[a].I, cons[b].I, vecs[a]});
        }
    }
    return out;
}

}  // namespace ptelab::separation
