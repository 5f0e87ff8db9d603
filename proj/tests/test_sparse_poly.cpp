#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "ptelab/rational.hpp"
#include "ptelab/sparse_poly.hpp"

using ptelab::make_rat;
using ptelab::Rat;
using ptelab::SparsePoly;

namespace {
SparsePoly x(int nvars, int i) { return SparsePoly::variable(nvars, i); }
}

TEST_SUITE("sparse_poly") {

TEST_CASE("basic arithmetic") {
    auto a = x(2, 0) + x(2, 1);
    auto sq = a * a;
    SparsePoly expect(2);
    expect.add_term({2, 0}, Rat(1));
    expect.add_term({1, 1}, Rat(2));
    expect.add_term({0, 2}, Rat(1));
    CHECK(sq == expect);

    CHECK((a - a).is_zero());
    CHECK(-a + a == SparsePoly::zero(2));
    CHECK(a * Rat(0) == SparsePoly::zero(2));
    CHECK(SparsePoly::constant(2, Rat(3)) * a == a * Rat(3));
}

TEST_CASE("zero coefficients are never stored") {
    SparsePoly p(2);
    p.add_term({1, 0}, Rat(2));
    p.add_term({1, 0}, Rat(-2));
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK(p.degree() == -1);
}

TEST_CASE("degree and homogeneity") {
    auto p = x(3, 0) * x(3, 1) + x(3, 2) * x(3, 2);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    auto q = p + SparsePoly::constant(3, Rat(1));
    CHECK_FALSE(q.is_homogeneous());
    CHECK(q.degree() == 2);
    CHECK(SparsePoly::zero(3).is_homogeneous());
}

TEST_CASE("pow matches repeated multiplication") {
    auto a = x(2, 0) + x(2, 1) * Rat(2);
    SparsePoly acc = SparsePoly::constant(2, Rat(1));
    for (int e = 0; e <= 5; ++e) {
        CHECK(a.pow(e) == acc);
        acc = acc * a;
    }
}

TEST_CASE("exact division") {
    auto diff = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
    auto q = diff.divide_exact(x(2, 0) - x(2, 1));
    CHECK(q == x(2, 0) + x(2, 1));
    CHECK_THROWS_AS((x(2, 0) + SparsePoly::constant(2, Rat(1))).divide_exact(x(2, 1)),
                    std::domain_error);
}

TEST_CASE("substitution") {
    auto p = x(2, 0) * x(2, 1) + x(2, 0);
    // Send x1 to zero: only the x0 term survives.
    auto zeroed = p.substitute_vars({0, -1}, 2);
    CHECK(zeroed == x(2, 0));
    // Rename into a wider ring.
    auto renamed = p.substitute_vars({2, 0}, 3);
    CHECK(renamed == x(3, 2) * x(3, 0) + x(3, 2));
}

TEST_CASE("permutation of variables") {
    auto p = x(3, 0).pow(2) * x(3, 1) + x(3, 2);
    auto q = p.permute_vars({1, 0, 2});
    CHECK(q == x(3, 1).pow(2) * x(3, 0) + x(3, 2));
    CHECK(q.permute_vars({1, 0, 2}) == p);
}

TEST_CASE("evaluation") {
    auto p = x(2, 0).pow(2) + x(2, 1) * Rat(3);
    std::vector<Rat> pt{make_rat(1, 2), make_rat(-1, 3)};
    CHECK(p.evaluate(pt) == make_rat(-3, 4));
}

TEST_CASE("canonical printing") {
    auto p = (x(2, 0) + SparsePoly::constant(2, Rat(1))) *
             (x(2, 0) - SparsePoly::constant(2, Rat(1)));
    CHECK(p.to_string() == "x0^2 - 1");
    SparsePoly q(2);
    q.add_term({0, 1}, make_rat(3, 2));
    q.add_term({2, 1}, Rat(1));
    q.add_term({0, 0}, Rat(-2));
    CHECK(q.to_string() == "x0^2*x1 + 3/2*x1 - 2");
    CHECK(SparsePoly::zero(2).to_string() == "0");
}

TEST_CASE("monomial enumeration") {
    auto mons = SparsePoly::monomials_of_degree(2, 2);
    REQUIRE(mons.size() == 3);
    CHECK(mons[0] == std::vector<int>{0, 2});
    CHECK(mons[1] == std::vector<int>{1, 1});
    CHECK(mons[2] == std::vector<int>{2, 0});
    CHECK(SparsePoly::monomials_of_degree(4, 3).size() == 20);
    CHECK(SparsePoly::monomials_of_degree(3, 0).size() == 1);
}

TEST_CASE("coeff lookup") {
    auto p = x(2, 0) * x(2, 1) * Rat(5);
    CHECK(p.coeff({1, 1}) == Rat(5));
    CHECK(p.coeff({2, 0}) == Rat(0));
}

}  // TEST_SUITE
