#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ptelab/rational.hpp"
#include "ptelab/weights.hpp"
#include "test_util.hpp"

using ptelab::Int;
using ptelab::make_rat;
using ptelab::Rat;
namespace w = ptelab::weights;

namespace {
w::YoungPattern random_pattern(int n) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(n));
    for (auto& v : f) v = testutil::rand_int(-6, 6);
    return w::YoungPattern(n, std::move(f));
}
}

TEST_SUITE("weights") {

TEST_CASE("fundamental weight basics") {
    auto rho = w::FundWeight::rho(4);
    CHECK(rho.coeffs() == std::vector<std::int64_t>{1, 1, 1});
    CHECK(rho.is_dominant());
    CHECK(rho.is_regular());
    CHECK(rho.pattern() == w::YoungPattern(4, {3, 2, 1, 0}));

    auto om2 = w::FundWeight::omega(4, 2);
    CHECK(om2.coeffs() == std::vector<std::int64_t>{0, 1, 0});
    CHECK(om2.pattern() == w::YoungPattern(4, {1, 1, 0, 0}));
    CHECK(om2.is_dominant());
    CHECK_FALSE(om2.is_regular());
    CHECK(om2.coeff(2) == 1);
    CHECK(om2.coeff(1) == 0);

    CHECK_FALSE(w::FundWeight(3, {1, -1}).is_dominant());
    CHECK_THROWS_AS(w::FundWeight(3, {1}), std::invalid_argument);
}

TEST_CASE("fundamental weight text round trip") {
    auto nu = w::FundWeight(4, {2, 0, 1});
    CHECK(nu.to_string() == "a=[2,0,1]");
    CHECK(w::FundWeight::parse("a=[2,0,1]") == nu);
    CHECK(w::FundWeight::parse("2,0,1") == nu);
}

TEST_CASE("pattern centering identities") {
    auto p = w::YoungPattern(4, {3, 2, 1, 0});
    CHECK(p.a0() == make_rat(3, 2));
    for (int i = 0; i < 10; ++i) {
        auto q = random_pattern(testutil::rand_int(2, 5));
        int n = q.rank_n();
        for (int t = 1; t <= n; ++t) {
            // f_t - c_t = (f_t - t) + (n - a0) ties the two shift conventions.
            Rat lhs = Rat(static_cast<long>(q.row(t))) - q.c_t(t);
            Rat rhs = Rat(static_cast<long>(q.row(t) - t)) + (Rat(n) - q.a0());
            CHECK(lhs == rhs);
        }
        auto m = q.centered_m();
        Rat sum(0);
        for (const auto& v : m) sum += v;
        CHECK(sum == 0);
    }
}

TEST_CASE("shifted multiset is sorted descending and translation invariant") {
    for (int i = 0; i < 10; ++i) {
        auto p = random_pattern(4);
        auto s = p.shifted_multiset();
        for (std::size_t j = 1; j < s.size(); ++j) CHECK(s[j - 1] >= s[j]);
        CHECK(p.translated(7).shifted_multiset() == s);
        CHECK(p.translated(-3).shifted_multiset() == s);
    }
}

TEST_CASE("first functional vanishes identically") {
    for (int i = 0; i < 20; ++i) {
        auto p = random_pattern(testutil::rand_int(2, 6));
        CHECK(w::s_functional(p, 1) == 0);
    }
}

TEST_CASE("second functional examples") {
    CHECK(w::s_functional(w::FundWeight::omega(2, 1).pattern(), 2) == make_rat(3, 2));
    CHECK(w::s_functional(w::FundWeight::omega(3, 1).pattern(), 2) == make_rat(8, 3));
    CHECK(w::s_functional(w::FundWeight::omega(4, 2).pattern(), 2) == 5);
    // Adjoint pattern for rank 2: explicit value 4.
    CHECK(w::s_functional(w::YoungPattern(2, {2, 0}), 2) == 4);
    CHECK(w::s_functional(w::YoungPattern(2, {1, 1}), 2) == 0);
}

TEST_CASE("functionals are translation invariant") {
    for (int i = 0; i < 10; ++i) {
        auto p = random_pattern(4);
        auto q = p.translated(testutil::rand_int(-5, 5));
        for (int k = 1; k <= 4; ++k)
            CHECK(w::s_functional(p, k) == w::s_functional(q, k));
    }
}

TEST_CASE("character comparison") {
    auto p = w::YoungPattern(2, {2, 0});
    CHECK(w::char_equal(p, p));
    CHECK(w::char_equal(p, p.translated(5)));
    // A different raw pattern carrying the same shifted multiset {2, -1}.
    CHECK(w::char_equal(p, w::YoungPattern(2, {-2, 2})));
    CHECK_FALSE(w::char_equal(p, w::YoungPattern(2, {1, 0})));
    CHECK_THROWS_AS(w::char_equal(p, w::YoungPattern(3, {2, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("index sets") {
    auto all = w::IndexSet::all_ksubsets(4, 2);
    REQUIRE(all.size() == 6);
    CHECK(all[0] == w::IndexSet(4, {1, 2}));
    CHECK(all[1] == w::IndexSet(4, {1, 3}));
    CHECK(all[2] == w::IndexSet(4, {1, 4}));
    CHECK(all[3] == w::IndexSet(4, {2, 3}));
    CHECK(all[5] == w::IndexSet(4, {3, 4}));
    CHECK(all[2] < all[3]);

    auto I = w::IndexSet(4, {1, 4});
    auto J = w::IndexSet(4, {2, 3});
    CHECK(I.contains(4));
    CHECK_FALSE(I.contains(2));
    CHECK(I.intersect_size(J) == 0);
    CHECK(I.minus(J) == std::vector<int>{1, 4});
    CHECK(w::IndexSet(4, {1, 2}).intersect_size(w::IndexSet(4, {1, 3})) == 1);
    CHECK(w::IndexSet(4, {1, 2}).minus(w::IndexSet(4, {1, 3})) == std::vector<int>{2});

    CHECK(I.to_string() == "{1,4}");
    CHECK(w::IndexSet::parse(4, "{1,4}") == I);
    CHECK(w::IndexSet::parse(4, "1,4") == I);

    CHECK_THROWS_AS(w::IndexSet(4, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(w::IndexSet(4, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(w::IndexSet(4, {3, 5}), std::invalid_argument);
}

TEST_CASE("indicator shifts of patterns") {
    auto om2 = w::FundWeight::omega(4, 2).pattern();
    auto up = w::add_lambda_I(om2, w::IndexSet(4, {1, 3}));
    CHECK(up.pattern == w::YoungPattern(4, {2, 1, 1, 0}));
    CHECK(up.dominant);
    auto bad = w::add_lambda_I(om2, w::IndexSet(4, {2, 4}));
    CHECK(bad.pattern == w::YoungPattern(4, {1, 2, 0, 1}));
    CHECK_FALSE(bad.dominant);
}

TEST_CASE("patterns from integer lists") {
    auto p = w::lists_to_pattern({2, -4});
    CHECK(p == w::YoungPattern(2, {1, -4}));
    auto q = w::lists_to_pattern({6, 2, 1});
    CHECK(q == w::YoungPattern(3, {4, 1, 1}));
    CHECK_THROWS_AS(w::lists_to_pattern({1, 2}), std::invalid_argument);
}

TEST_CASE("list power sums match functional shifts") {
    // With the list entries taken as the pattern's shifted row values,
    // equal-sum lists agree on power sums through m exactly when the
    // functionals S_2..S_m coincide, and the first disagreeing functional
    // is the first disagreeing power sum.
    std::vector<std::int64_t> xs{6, 2, 1}, ys{5, 4, 0};  // degree exactly 2
    auto px = w::lists_to_pattern(xs);
    auto py = w::lists_to_pattern(ys);
    CHECK(w::s_functional(px, 2) == w::s_functional(py, 2));
    CHECK(w::s_functional(px, 3) == Rat(54));
    CHECK(w::s_functional(py, 3) == Rat(18));

    std::vector<std::int64_t> us{11, 7, 4, 0}, vs{10, 9, 2, 1};  // degree exactly 3
    auto pu = w::lists_to_pattern(us);
    auto pv = w::lists_to_pattern(vs);
    CHECK(w::s_functional(pu, 2) == Rat(60));
    CHECK(w::s_functional(pv, 2) == Rat(60));
    CHECK(w::s_functional(pu, 3) == Rat(270));
    CHECK(w::s_functional(pv, 3) == Rat(270));
    CHECK(w::s_functional(pu, 4) == Rat(2640));
    CHECK(w::s_functional(pv, 4) == Rat(1920));
}

TEST_CASE("weyl dimension") {
    CHECK(w::weyl_dim(w::YoungPattern(3, {2, 1, 0})) == Int(8));
    CHECK(w::weyl_dim(w::FundWeight::omega(4, 2).pattern()) == Int(6));
    CHECK(w::weyl_dim(w::YoungPattern(4, {3, 2, 1, 0})) == Int(64));
    CHECK(w::weyl_dim(w::YoungPattern(2, {5, 5})) == Int(1));
    CHECK(w::weyl_dim(w::YoungPattern(4, {0, 0, 0, 0})) == Int(1));
    CHECK_THROWS_AS(w::weyl_dim(w::YoungPattern(2, {0, 1})), std::domain_error);
}

TEST_CASE("pattern text round trip") {
    auto p = w::YoungPattern(4, {3, 2, 1, 0});
    CHECK(p.to_string() == "f=[3,2,1,0]");
    CHECK(w::YoungPattern::parse("f=[3,2,1,0]") == p);
    CHECK(w::YoungPattern::parse("3,2,1,0") == p);
}

}  // TEST_SUITE
