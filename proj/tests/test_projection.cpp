#include <doctest.h>

#include "oracle.hpp"
#include "srujac/constructions.hpp"
#include "srujac/jacobian.hpp"
#include "srujac/matroid.hpp"
#include "srujac/projection.hpp"

#include <algorithm>

using namespace srujac;

namespace {

HRepresentation u24() { return {u24_matrix(), ValidationLevel::full}; }
HRepresentation ag23() { return {ag23_matrix(), ValidationLevel::full}; }

std::vector<EisensteinRational> to_q(const std::vector<Eisenstein>& v) {
    std::vector<EisensteinRational> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_rational(v[i]);
    return r;
}

}  // namespace

TEST_CASE("projector is an idempotent hermitian row-space identity") {
    for (const HRepresentation& rep :
         {u24(), ag23(), gen_family({"whirl", 4}), gen_family({"t_r", 3})}) {
        MatrixQw p = projector(rep);
        CHECK(p.rows() == rep.cols());
        CHECK(p * p == p);
        CHECK(conj_transpose(p) == p);
        CHECK(to_rational(rep.matrix()) * p == to_rational(rep.matrix()));
        // idempotent, so the trace equals the rank
        EisensteinRational trace;
        for (std::size_t i = 0; i < p.rows(); ++i) trace += p(i, i);
        CHECK(trace == EisensteinRational{Rat(Int(rep.rows())), Rat(0)});
        CHECK(rank(p) == rep.rows());
    }
}

TEST_CASE("projector rejects rank-deficient inputs") {
    MatrixE m(2, 3);
    m(0, 0) = 1;
    m(1, 0) = 1;  // rank 1
    CHECK_THROWS_AS(projector(HRepresentation::from_validated(m, ValidationLevel::entries)),
                    std::invalid_argument);
}

TEST_CASE("basis averaging reproduces the projector") {
    AveragingResult au = averaging_matrix(u24());
    CHECK(au.kappa == 6);
    CHECK(is_hermitian(au.n));
    // diagonal of P sums to the rank, so trace(N) = kappa * r
    Eisenstein trace;
    for (std::size_t i = 0; i < au.n.rows(); ++i) trace += au.n(i, i);
    CHECK(trace == Eisenstein(12));

    AveragingResult aa = averaging_matrix(ag23());
    CHECK(aa.kappa == 72);
    CHECK(to_rational(aa.n) ==
          EisensteinRational{Rat(72), Rat(0)} * projector(ag23()));

    // explicit cross-check of the summation on the small case
    MatrixE manual(4, 4);
    HRepresentation rep = u24();
    for (const auto& b : enumerate_bases(rep)) manual = manual + n_b_matrix(rep, b);
    CHECK(manual == au.n);
}

TEST_CASE("averaging refuses oversized basis sets") {
    // 5145 bases exceeds the gate
    CHECK_THROWS_AS(averaging_matrix(gen_family({"t_r", 5})), std::invalid_argument);
}

TEST_CASE("dual membership splits row-space and integrality") {
    HRepresentation rep = u24();
    const MatrixE& m = rep.matrix();

    for (std::size_t i = 0; i < 2; ++i) {
        DualMembership dm = dual_membership(rep, to_q(row_vector(m, i)));
        CHECK(dm.in_row_space);
        CHECK(dm.integral_pairing);
        CHECK(dm.member);
        REQUIRE(dm.coefficients.size() == 2);
        CHECK(dm.coefficients[i] == EisensteinRational{Rat(1), Rat(0)});
    }

    // half a row stays in the row space but pairs non-integrally
    std::vector<EisensteinRational> half = to_q(row_vector(m, 0));
    for (auto& x : half) x = EisensteinRational{Rat(1, 2), Rat(0)} * x;
    DualMembership dm = dual_membership(rep, half);
    CHECK(dm.in_row_space);
    CHECK(!dm.integral_pairing);
    CHECK(!dm.member);

    // outside the row space entirely
    DualMembership out = dual_membership(
        rep, to_q({Eisenstein(1), Eisenstein(), Eisenstein(), Eisenstein()}));
    CHECK(!out.in_row_space);
    CHECK(!out.member);

    // a strict dual vector: in the rational row space with non-integral
    // coefficients, yet pairing integrally (u24 has a nontrivial jacobian);
    // rows of (MM^H)^-1 M pair to the identity
    MatrixQw linv = inverse(laplacian(rep));
    MatrixQw dual_rows = linv * to_rational(m);
    std::vector<EisensteinRational> d(4);
    for (std::size_t j = 0; j < 4; ++j) d[j] = dual_rows(0, j);
    DualMembership strict = dual_membership(rep, d);
    CHECK(strict.in_row_space);
    CHECK(strict.integral_pairing);
    CHECK(strict.member);
    bool some_coeff_fractional = std::any_of(
        strict.coefficients.begin(), strict.coefficients.end(),
        [](const EisensteinRational& x) { return !is_integral(x); });
    CHECK(some_coeff_fractional);
}

TEST_CASE("lattice and dual lattice sandwich the jacobian order") {
    // each member of a residue system for E^r maps to a dual vector;
    // sanity: dual pairing of (MM^H)^-1 M rows against M is the identity
    HRepresentation rep = ag23();
    MatrixQw linv = inverse(laplacian(rep));
    MatrixQw dual_rows = linv * to_rational(rep.matrix());
    MatrixQw pair = dual_rows * conj_transpose(to_rational(rep.matrix()));
    CHECK(pair == MatrixQw::identity(3));
}
