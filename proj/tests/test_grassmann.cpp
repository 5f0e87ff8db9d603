#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptelab/grassmann.hpp"
#include "ptelab/partition.hpp"
#include "ptelab/rational.hpp"
#include "test_util.hpp"

using ptelab::Int;
using ptelab::Partition;
using ptelab::Rat;
namespace gr = ptelab::grassmann;

namespace {
gr::GrassElement cls(int k, int n, std::vector<int> parts) {
    return gr::GrassElement::schubert(k, n, Partition(std::move(parts)));
}
}

TEST_SUITE("grassmann") {

TEST_CASE("element basics") {
    auto e = cls(2, 4, {2, 1});
    CHECK(e.coeff(Partition({2, 1})) == 1);
    CHECK(e.coeff(Partition({1})) == 0);
    CHECK_FALSE(e.is_zero());
    CHECK((e - e).is_zero());

    gr::GrassElement z(2, 4);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.add(Partition({3}), Rat(1)), std::domain_error);
    z.add_truncated(Partition({3}), Rat(1));  // silently dropped
    CHECK(z.is_zero());
    CHECK_THROWS_AS(gr::GrassElement::schubert(2, 4, Partition({1, 1, 1})),
                    std::domain_error);
}

TEST_CASE("schubert products in the 2x2 box") {
    auto s1 = cls(2, 4, {1});
    auto p = gr::mul(s1, s1);
    CHECK(p.coeff(Partition({2})) == 1);
    CHECK(p.coeff(Partition({1, 1})) == 1);
    CHECK(p.coeffs().size() == 2);

    // Classes that would leave the box truncate away.
    CHECK(gr::mul(s1, cls(2, 4, {2, 1})) == cls(2, 4, {2, 2}));
    CHECK(gr::mul(cls(2, 4, {2}), cls(2, 4, {2})) == cls(2, 4, {2, 2}));
    CHECK(gr::mul(cls(2, 4, {2, 2}), s1).is_zero());

    // Degree of the 2-plane Grassmannian in 4-space: top coefficient 2.
    auto quad = gr::mul(gr::mul(p, s1), s1);
    CHECK(quad == cls(2, 4, {2, 2}) * Rat(2));
}

TEST_CASE("poincare duality pairing") {
    for (auto kn : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}}) {
        auto [k, n] = kn;
        Partition top(std::vector<int>(static_cast<std::size_t>(k), n - k));
        for (const auto& lam : Partition::in_box_all(k, n - k)) {
            auto prod = gr::mul(gr::GrassElement::schubert(k, n, lam),
                                gr::GrassElement::schubert(
                                    k, n, lam.complement_in_box(k, n - k)));
            CHECK(prod.coeff(top) == 1);
        }
    }
}

TEST_CASE("products are commutative and associative with integer coefficients") {
    auto a = cls(2, 5, {2, 1});
    auto b = cls(2, 5, {1, 1});
    auto c = cls(2, 5, {1});
    CHECK(gr::mul(a, b) == gr::mul(b, a));
    CHECK(gr::mul(gr::mul(a, c), b) == gr::mul(a, gr::mul(c, b)));
    const auto prod = gr::mul(a, c);
    for (const auto& [lam, coeff] : prod.coeffs()) {
        (void)lam;
        CHECK(coeff.get_den() == 1);
        CHECK(coeff > 0);
    }
}

TEST_CASE("w-polynomial arithmetic") {
    auto w1 = gr::WPoly::generator(2, 1);
    auto w2 = gr::WPoly::generator(2, 2);
    CHECK(w1.weighted_degree() == 1);
    CHECK(w2.weighted_degree() == 2);
    auto p = w1 * w1 * w1 + w2 * w1 * Rat(2);
    CHECK(p.weighted_degree() == 3);
    CHECK(p.terms().at({3, 0}) == 1);
    CHECK(p.terms().at({1, 1}) == 2);
    CHECK(p.graded_component(3) == p);
    CHECK(p.graded_component(2).is_zero());
    auto q = p + gr::WPoly::constant(2, Rat(5));
    CHECK(q.truncated(0) == gr::WPoly::constant(2, Rat(5)));
    CHECK(q.truncated(3) == q);
    CHECK((p - p).is_zero());
}

TEST_CASE("relation polynomials for the 2x2 box") {
    auto f1 = gr::relation_f(1, 2, 4, true);
    CHECK(f1.terms().at({3, 0}) == -1);
    CHECK(f1.terms().at({1, 1}) == 2);
    CHECK(f1.terms().size() == 2);

    auto f1u = gr::relation_f(1, 2, 4, false);
    CHECK(f1u.terms().at({3, 0}) == 1);
    CHECK(f1u.terms().at({1, 1}) == 2);

    auto f2 = gr::relation_f(2, 2, 4, true);
    CHECK(f2.terms().at({2, 1}) == -1);
    CHECK(f2.terms().at({0, 2}) == 1);
    CHECK(f2.terms().size() == 2);

    CHECK_THROWS_AS(gr::relation_f(3, 2, 4, true), std::invalid_argument);
    CHECK_THROWS_AS(gr::relation_f(0, 2, 4, true), std::invalid_argument);
}

TEST_CASE("signed relations vanish in the ring and unsigned ones do not") {
    for (auto kn : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
        auto [k, n] = kn;
        for (int s = 1; s <= k; ++s) {
            CHECK(gr::reduce_w_poly(gr::relation_f(s, k, n, true), k, n).is_zero());
            CHECK_FALSE(gr::reduce_w_poly(gr::relation_f(s, k, n, false), k, n).is_zero());
        }
    }
}

TEST_CASE("first signed relation matches the inverse-series construction") {
    // For s = 1 the relation is a graded piece of the formal inverse of
    // 1 + w_1 + ... + w_k, an independent way to produce the same polynomial.
    for (auto kn : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}, {3, 6}}) {
        auto [k, n] = kn;
        int top = n - k + 1;
        auto w_sum = gr::WPoly::zero(k);
        for (int i = 1; i <= k; ++i) w_sum = w_sum + gr::WPoly::generator(k, i);
        // Geometric series 1 - w + w^2 - ... truncated at weighted degree top.
        auto inverse = gr::WPoly::constant(k, Rat(1));
        auto power = gr::WPoly::constant(k, Rat(1));
        for (int d = 1; d <= top; ++d) {
            power = (power * w_sum).truncated(top);
            inverse = (d % 2 == 1) ? inverse - power : inverse + power;
        }
        CHECK(gr::relation_f(1, k, n, true) == inverse.graded_component(n - k + 1));
    }
}

TEST_CASE("complete-homogeneous polynomials reduce to single-row classes") {
    // With w_i playing the role of the elementary symmetric polynomial e_i of
    // k underlying variables, the recursion h_j = sum_i (-1)^{i+1} w_i h_{j-i}
    // produces the complete homogeneous h_j, whose image is the single-row
    // class [j]. Rows longer than n-k truncate to zero, which gives an
    // independently derived family of relations.
    for (auto kn : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}, {3, 6}}) {
        auto [k, n] = kn;
        std::vector<gr::WPoly> h{gr::WPoly::constant(k, Rat(1))};
        for (int j = 1; j <= n + 2; ++j) {
            auto next = gr::WPoly::zero(k);
            for (int i = 1; i <= std::min(j, k); ++i) {
                auto term = gr::WPoly::generator(k, i) * h[static_cast<std::size_t>(j - i)];
                next = (i % 2 == 1) ? next + term : next - term;
            }
            h.push_back(next);
        }
        for (int j = 1; j <= n + 2; ++j) {
            auto image = gr::reduce_w_poly(h[static_cast<std::size_t>(j)], k, n);
            if (j <= n - k)
                CHECK(image == gr::GrassElement::schubert(k, n, Partition({j})));
            else
                CHECK(image.is_zero());
        }
    }
}

TEST_CASE("reduction substitutes column classes") {
    auto w1 = gr::WPoly::generator(2, 1);
    auto w2 = gr::WPoly::generator(2, 2);
    CHECK(gr::reduce_w_poly(w1, 2, 4) == cls(2, 4, {1}));
    CHECK(gr::reduce_w_poly(w2, 2, 4) == cls(2, 4, {1, 1}));
    CHECK(gr::reduce_w_poly(w1 * w1, 2, 4) ==
          cls(2, 4, {2}) + cls(2, 4, {1, 1}));
    CHECK(gr::reduce_w_poly(gr::WPoly::constant(2, Rat(3)), 2, 4) ==
          gr::GrassElement::one(2, 4) * Rat(3));
}

TEST_CASE("gaussian binomial coefficients") {
    CHECK(gr::gaussian_binomial(4, 2) == std::vector<Int>{1, 1, 2, 1, 1});
    CHECK(gr::gaussian_binomial(5, 2) == std::vector<Int>{1, 1, 2, 2, 2, 1, 1});
    CHECK(gr::gaussian_binomial(3, 1) == std::vector<Int>{1, 1, 1});
    CHECK(gr::gaussian_binomial(4, 0) == std::vector<Int>{1});
    // Box-partition counts by size give the same coefficients.
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            auto coeffs = gr::gaussian_binomial(n, k);
            std::vector<Int> counts(coeffs.size(), Int(0));
            for (const auto& lam : Partition::in_box_all(k, n - k))
                counts[static_cast<std::size_t>(lam.size())] += 1;
            CHECK(coeffs == counts);
        }
}

TEST_CASE("presentation verification") {
    for (auto kn : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}}) {
        auto [k, n] = kn;
        auto rep = gr::verify_presentation(k, n);
        CHECK(rep.pass());
        CHECK(rep.signed_annihilates);
        // With a single generator every relation is one term, so both sign
        // conventions annihilate; from two generators on only the signed
        // variant reduces to zero.
        CHECK(rep.unsigned_annihilates == (k == 1));
    }
}

}  // TEST_SUITE
