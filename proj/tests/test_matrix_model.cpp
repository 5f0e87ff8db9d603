#include "doctest.h"

#include <stdexcept>
#include <utility>
#include <vector>

#include "ptelab/exact_matrix.hpp"
#include "ptelab/matrix_model.hpp"
#include "ptelab/rational.hpp"
#include "ptelab/weights.hpp"

using ptelab::Int;
using ptelab::make_rat;
using ptelab::Rat;
using ptelab::linalg::ExactMatrix;
namespace mm = ptelab::matmodel;
namespace w = ptelab::weights;

TEST_SUITE("matrix_model") {

TEST_CASE("wedge representation shapes and diagonal action") {
    auto r = mm::fundamental_rep(4, 2);
    CHECK(r.dim() == 6);
    CHECK(r.rank_n() == 4);
    // X_11 acts by [1 in S] - 2/4 on the subset basis.
    const auto& x11 = r.gen(1, 1);
    CHECK(x11.at(0, 0) == make_rat(1, 2));   // {1,2}
    CHECK(x11.at(3, 3) == make_rat(-1, 2));  // {2,3}
    CHECK(x11.at(5, 5) == make_rat(-1, 2));  // {3,4}
    CHECK_THROWS_AS(mm::fundamental_rep(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(mm::fundamental_rep(4, 4), std::invalid_argument);
}

TEST_CASE("off-diagonal generators carry wedge signs") {
    auto r = mm::fundamental_rep(3, 2);
    // Basis order: {1,2}, {1,3}, {2,3}.
    // X_12 replaces 2 by 1: {2,3} -> {1,3} without crossing.
    CHECK(r.gen(1, 2).at(1, 2) == 1);
    // X_13 replaces 3 by 1: {2,3} -> {2,1} crosses the 2, picking a sign.
    CHECK(r.gen(1, 3).at(0, 2) == -1);
    // X_13 on {1,3} -> 0 (1 already present); on {3,x} only via slot 3.
    CHECK(r.gen(1, 3).at(0, 1) == 0);
}

TEST_CASE("structure relations hold") {
    for (auto nk : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
        auto r = mm::fundamental_rep(nk.first, nk.second);
        CHECK(r.check_structure().all_pass());
    }
}

TEST_CASE("degree-2 invariant scalars") {
    auto c2 = mm::casimir(mm::fundamental_rep(2, 1), 2);
    REQUIRE(c2.as_scalar().has_value());
    CHECK(*c2.as_scalar() == make_rat(3, 2));

    CHECK(*mm::casimir(mm::fundamental_rep(3, 1), 2).as_scalar() == make_rat(8, 3));
    CHECK(*mm::casimir(mm::fundamental_rep(4, 2), 2).as_scalar() == Rat(5));

    // The scalar matches the degree-2 functional of the highest weight.
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k < n; ++k) {
            auto rep = mm::fundamental_rep(n, k);
            auto scalar = mm::casimir(rep, 2).as_scalar();
            REQUIRE(scalar.has_value());
            CHECK(*scalar ==
                  w::s_functional(w::FundWeight::omega(n, k).pattern(), 2));
        }
}

TEST_CASE("degree-3 invariant on the defining representation of rank 2") {
    // Hand-expanded contraction over all eight index tuples gives (3/2) Id,
    // which happens to coincide with the degree-2 scalar here.
    auto c3 = mm::casimir(mm::fundamental_rep(2, 1), 3, 3);
    REQUIRE(c3.as_scalar().has_value());
    CHECK(*c3.as_scalar() == make_rat(3, 2));
}

TEST_CASE("invariants commute with every generator") {
    auto rep = mm::fundamental_rep(3, 2);
    auto c2 = mm::casimir(rep, 2);
    CHECK(rep.is_invariant(c2));
    auto c3 = mm::casimir(rep, 3, 3);
    CHECK(rep.is_invariant(c3));
}

TEST_CASE("serial and parallel contractions agree") {
    auto r42 = mm::fundamental_rep(4, 2);
    CHECK(mm::casimir(r42, 2) == mm::casimir_serial(r42, 2));
    auto r31 = mm::fundamental_rep(3, 1);
    CHECK(mm::casimir(r31, 3, 3) == mm::casimir_serial(r31, 3, 3));
}

TEST_CASE("degree guard") {
    auto r = mm::fundamental_rep(2, 1);
    CHECK_THROWS_AS(mm::casimir(r, 7), std::domain_error);
    CHECK_THROWS_AS(mm::casimir(r, 3, 2), std::domain_error);
    CHECK_THROWS_AS(mm::casimir(r, 1), std::invalid_argument);
}

TEST_CASE("tensor product representation") {
    auto a = mm::fundamental_rep(2, 1);
    auto t = mm::tensor_delta(a, a);
    CHECK(t.dim() == 4);
    CHECK(t.check_structure().all_pass());
    // Coproduct on generators: x (x) 1 + 1 (x) x.
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            auto expect = a.gen(i, j).kron(ExactMatrix::identity(2)) +
                          ExactMatrix::identity(2).kron(a.gen(i, j));
            CHECK(t.gen(i, j) == expect);
        }
}

TEST_CASE("difference matrix spectrum for the smallest tensor") {
    auto a = mm::fundamental_rep(2, 1);
    auto m = mm::kostant_matrix(a, a, 2);
    REQUIRE(m.rows() == 4);
    // Eigenvalues 1 (multiplicity 3) and -3 (multiplicity 1), certified by
    // the vanishing annihilating product and exact rank counts.
    auto id = ExactMatrix::identity(4);
    auto shift1 = m - id * Rat(1);
    auto shift3 = m + id * Rat(3);
    CHECK((shift1 * shift3).is_zero());
    CHECK(shift1.rank() == 1);
    CHECK(shift3.rank() == 3);

    // The difference matrix is itself an invariant of the tensor action.
    auto t = mm::tensor_delta(a, a);
    CHECK(t.is_invariant(m));
}

TEST_CASE("difference matrices of different degrees commute") {
    auto a = mm::fundamental_rep(4, 2);
    auto b = mm::fundamental_rep(4, 1);
    auto m2 = mm::kostant_matrix(a, b, 2);
    auto m3 = mm::kostant_matrix(a, b, 3, 3);
    CHECK(m2.commutes_with(m3));
    auto t = mm::tensor_delta(a, b);
    CHECK(t.is_invariant(m2));
    CHECK(t.is_invariant(m3));
}

TEST_CASE("minimal polynomial degree matches the constituent count") {
    // V (wedge 2, n=4) against the defining factor splits into two
    // constituents, so {I, M, M^2} has rank 2.
    auto a = mm::fundamental_rep(4, 2);
    auto b = mm::fundamental_rep(4, 1);
    auto m = mm::kostant_matrix(a, b, 2);
    int d = m.rows();
    auto flat = [d](const ExactMatrix& x) {
        std::vector<Rat> v;
        v.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) v.push_back(x.at(i, j));
        return v;
    };
    ptelab::linalg::RowEchelon ech(d * d);
    CHECK(ech.add(flat(ExactMatrix::identity(d))));
    CHECK(ech.add(flat(m)));
    CHECK_FALSE(ech.add(flat(m * m)));
    CHECK(ech.rank() == 2);
}

TEST_CASE("certified spectra") {
    auto rep = mm::spectrum_verify(4, 2, 2, 2);
    CHECK(rep.pass());
    CHECK(rep.annihilation_ok);
    CHECK_FALSE(rep.assumption_based);
    // Three constituents: [2,2,0,0], [2,1,1,0], [1,1,1,1] with dims 20/15/1.
    Int total(0);
    for (const auto& line : rep.lines) {
        CHECK(line.pass);
        CHECK(line.verified_mult >= 0);
        total += line.predicted_mult;
    }
    CHECK(total == Int(36));

    auto rep21 = mm::spectrum_verify(2, 1, 1, 2);
    CHECK(rep21.pass());
    REQUIRE(rep21.lines.size() == 2);

    // Wedge factors larger than n-k are accepted here.
    auto rep31 = mm::spectrum_verify(4, 3, 1, 2);
    CHECK(rep31.pass());
}

TEST_CASE("spectrum reports convert to check records") {
    auto rep = mm::spectrum_verify(3, 1, 1, 2);
    auto checks = rep.to_checks();
    CHECK(checks.all_pass());
    bool saw_annihilation = false;
    for (const auto& rec : checks.records)
        if (rec.name == "annihilating_product_vanishes") saw_annihilation = true;
    CHECK(saw_annihilation);
}

TEST_CASE("dimension guard on spectrum verification") {
    CHECK_THROWS_AS(mm::spectrum_verify(4, 2, 2, 2, 10), std::domain_error);
}

TEST_CASE("scalar extraction rejects non-scalars") {
    auto a = mm::fundamental_rep(2, 1);
    auto m = mm::kostant_matrix(a, a, 2);
    CHECK_THROWS_AS(mm::scalar_of(m), std::domain_error);
    CHECK(mm::scalar_of(ExactMatrix::identity(3) * make_rat(7, 2)) == make_rat(7, 2));
}

}  // TEST_SUITE
