#include <doctest.h>

#include "oracle.hpp"
#include "srujac/constructions.hpp"
#include "srujac/matroid.hpp"

#include <algorithm>
#include <set>

using namespace srujac;

namespace {

const Eisenstein w{0, 1};

HRepresentation u24() { return {u24_matrix(), ValidationLevel::full}; }
HRepresentation ag23() { return {ag23_matrix(), ValidationLevel::full}; }

// reference: B is a basis iff the column selection is invertible
bool is_basis(const MatrixE& m, const std::vector<int>& labels) {
    if (labels.size() != m.rows()) return false;
    return !det(select_columns_by_labels(m, labels)).is_zero();
}

}  // namespace

TEST_CASE("basis enumeration matches the determinant definition") {
    auto bs = enumerate_bases(u24());
    REQUIRE(bs.size() == 6);  // every pair of the four points
    std::set<std::vector<int>> seen(bs.begin(), bs.end());
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) CHECK(seen.count({i, j}) == 1);
    CHECK(std::is_sorted(bs.begin(), bs.end()));

    auto ag = enumerate_bases(ag23());
    CHECK(ag.size() == 72);
    for (const auto& b : ag) CHECK(is_basis(ag23_matrix(), b));
    // spot-check some non-bases are absent
    std::set<std::vector<int>> agset(ag.begin(), ag.end());
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j)
            for (int k = j + 1; k <= 9; ++k) {
                std::vector<int> cand{i, j, k};
                CHECK(agset.count(cand) == is_basis(ag23_matrix(), cand));
            }
}

TEST_CASE("basis enumeration requires full row rank") {
    MatrixE tall(3, 4);
    tall(0, 0) = 1;
    tall(1, 1) = 1;
    tall(2, 0) = 1;
    tall(2, 1) = 1;  // row 2 dependent
    HRepresentation rep = HRepresentation::from_validated(tall, ValidationLevel::entries);
    CHECK_THROWS_AS(enumerate_bases(rep), std::invalid_argument);
}

TEST_CASE("standard representation puts the identity on the basis") {
    for (const auto& b : enumerate_bases(ag23())) {
        MatrixE sb = standard_rep(ag23(), b);
        MatrixE id = select_columns_by_labels(sb, b);
        CHECK(id == MatrixE::identity(3));
        // entries stay in H
        for (std::size_t i = 0; i < sb.rows(); ++i)
            for (std::size_t j = 0; j < sb.cols(); ++j) CHECK(is_h_element(sb(i, j)));
        // row space is unchanged: stacking loses no rank and gains none
        MatrixE stacked(6, 9);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 9; ++j) {
                stacked(i, j) = ag23_matrix()(i, j);
                stacked(i + 3, j) = sb(i, j);
            }
        CHECK(rank(stacked) == 3);
    }
    CHECK_THROWS_AS(standard_rep(ag23(), {1, 2, 4}), std::invalid_argument);  // a 3-point line
}

TEST_CASE("standard representation treats the basis as a set") {
    MatrixE a = standard_rep(u24(), {3, 1});
    MatrixE b = standard_rep(u24(), {1, 3});
    CHECK(a == b);
    CHECK(a.labels() == u24_matrix().labels());
}

TEST_CASE("fundamental cocircuits: support is exactly the exchange set") {
    for (const HRepresentation& rep : {u24(), ag23()}) {
        auto bases = enumerate_bases(rep);
        std::set<std::vector<int>> basis_set(bases.begin(), bases.end());
        for (const auto& b : bases)
            for (int e : b) {
                CocircuitVector cc = fundamental_cocircuit(rep, b, e);
                CHECK(cc.basis == b);
                CHECK(cc.element == e);
                std::set<int> support(cc.support.begin(), cc.support.end());
                CHECK(support.count(e) == 1);
                for (int f : rep.matrix().labels()) {
                    std::vector<int> swapped;
                    for (int x : b)
                        if (x != e) swapped.push_back(x);
                    swapped.push_back(f);
                    std::sort(swapped.begin(), swapped.end());
                    // membership in the support must match basis exchange
                    bool in_support = support.count(f) == 1;
                    bool makes_basis = f == e || basis_set.count(swapped) == 1;
                    CHECK(in_support == makes_basis);
                }
                // entries: 1 at the element, 0 elsewhere on the basis
                const MatrixE& m = rep.matrix();
                for (int x : b) {
                    const Eisenstein& v = cc.entries[m.position_of_label(x)];
                    CHECK(v == (x == e ? Eisenstein(1) : Eisenstein()));
                }
            }
    }
}

TEST_CASE("cocircuit conjugacy under basis exchange") {
    // swapping e out and f in conjugates the paired coefficients
    for (const HRepresentation& rep : {u24(), ag23()}) {
        auto bases = enumerate_bases(rep);
        std::set<std::vector<int>> basis_set(bases.begin(), bases.end());
        const MatrixE& m = rep.matrix();
        for (const auto& b : bases)
            for (int e : b) {
                CocircuitVector cc = fundamental_cocircuit(rep, b, e);
                for (int f : cc.support) {
                    if (f == e) continue;
                    std::vector<int> b2;
                    for (int x : b)
                        if (x != e) b2.push_back(x);
                    b2.push_back(f);
                    std::sort(b2.begin(), b2.end());
                    REQUIRE(basis_set.count(b2) == 1);
                    CocircuitVector cc2 = fundamental_cocircuit(rep, b2, f);
                    CHECK(cc2.entries[m.position_of_label(e)] ==
                          conj(cc.entries[m.position_of_label(f)]));
                }
            }
    }
}

TEST_CASE("n_b matrix places standard rows at basis positions") {
    HRepresentation rep = ag23();
    auto bases = enumerate_bases(rep);
    const auto& b = bases[7];
    MatrixE nb = n_b_matrix(rep, b);
    MatrixE sb = standard_rep(rep, b);
    CHECK(nb.rows() == 9);
    CHECK(nb.cols() == 9);
    std::vector<int> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < 9; ++i) {
        int label = rep.matrix().label_at(i);
        auto it = std::find(sorted.begin(), sorted.end(), label);
        if (it == sorted.end()) {
            for (std::size_t j = 0; j < 9; ++j) CHECK(nb(i, j).is_zero());
        } else {
            std::size_t which = static_cast<std::size_t>(it - sorted.begin());
            for (std::size_t j = 0; j < 9; ++j) CHECK(nb(i, j) == sb(which, j));
        }
    }
}

TEST_CASE("element deletion drops one column and keeps labels") {
    HRepresentation rep = ag23();
    HRepresentation del = delete_element(rep, 5);
    CHECK(del.cols() == 8);
    CHECK(del.level() == rep.level());
    std::vector<int> expect{1, 2, 3, 4, 6, 7, 8, 9};
    CHECK(del.matrix().labels() == expect);
    CHECK_THROWS_AS(delete_element(rep, 77), std::out_of_range);

    MatrixE two(1, 2);
    two(0, 0) = 1;
    two(0, 1) = 1;
    HRepresentation small(two, ValidationLevel::full);
    CHECK_THROWS_AS(delete_element(delete_element(small, 1), 2), std::invalid_argument);
}

TEST_CASE("rank of label subsets") {
    MatrixE m = ag23_matrix();
    CHECK(rank_of_labels(m, {1}) == 1);
    CHECK(rank_of_labels(m, {1, 2, 3}) == 3);
    CHECK(rank_of_labels(m, std::vector<int>{}) == 0);
    auto bs = enumerate_bases(ag23());
    CHECK(rank_of_labels(m, bs[0]) == 3);
}

TEST_CASE("three-connectivity") {
    CHECK(verify_three_connected(u24()));
    CHECK(verify_three_connected(ag23()));

    // a parallel pair yields a 2-separation
    MatrixE par(2, 5);
    par(0, 0) = 1;
    par(1, 1) = 1;
    par(0, 2) = 1;
    par(1, 2) = 1;
    par(0, 3) = 1;
    par(0, 4) = 1;  // columns 4 and 5 are parallel
    HRepresentation prep(par, ValidationLevel::full);
    CHECK(!verify_three_connected(prep));

    // a direct sum has a 1-separation
    HRepresentation ds = direct_sum(u24(), HRepresentation::from_validated(
                                               [] {
                                                   MatrixE m(1, 2);
                                                   m(0, 0) = 1;
                                                   m(0, 1) = w;
                                                   m.set_labels({10, 11});
                                                   return m;
                                               }(),
                                               ValidationLevel::full));
    CHECK(!verify_three_connected(ds));

    MatrixE wide(2, 20);
    for (std::size_t j = 0; j < 20; ++j) wide(j % 2, j) = 1;
    CHECK_THROWS_AS(
        verify_three_connected(HRepresentation::from_validated(wide, ValidationLevel::entries)),
        std::invalid_argument);
}
