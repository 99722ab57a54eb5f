#include "srujac/matroid.hpp"

#include "srujac/snf.hpp"

#include <algorithm>

namespace srujac {

std::vector<std::vector<int>> enumerate_bases(const HRepresentation& rep) {
    const MatrixE& m = rep.matrix();
    const std::size_t r = m.rows();
    const std::size_t n = m.cols();
    if (rank(m) < r)
        throw std::invalid_argument(
            "enumerate_bases: matrix is rank-deficient; restrict rows first");
    if (detail::binomial_capped(n, r, kBasisEnumGuard) > kBasisEnumGuard)
        throw std::invalid_argument("enumerate_bases: C(" + std::to_string(n) + ", " +
                                    std::to_string(r) + ") exceeds the enumeration guard");

    // positions in ascending label order, so bases come out lexicographic
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    std::sort(pos.begin(), pos.end(),
              [&](std::size_t x, std::size_t y) { return m.label_at(x) < m.label_at(y); });

    std::vector<std::vector<int>> bases;
    if (r <= 15) {
        std::vector<Eisenstein64> img = detail::small_image(m);
        std::vector<Eisenstein64> scratch(r * r);
        detail::for_each_combination(n, r, [&](const std::vector<std::size_t>& c) {
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t t = 0; t < r; ++t)
                    scratch[i * r + t] = img[i * n + pos[c[t]]];
            if (!ring_is_zero(detail::bareiss_det(scratch.data(), r))) {
                std::vector<int> basis(r);
                for (std::size_t t = 0; t < r; ++t) basis[t] = m.label_at(pos[c[t]]);
                bases.push_back(std::move(basis));
            }
            return true;
        });
    } else {
        std::vector<Eisenstein> scratch(r * r);
        detail::for_each_combination(n, r, [&](const std::vector<std::size_t>& c) {
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t t = 0; t < r; ++t) scratch[i * r + t] = m(i, pos[c[t]]);
            if (!ring_is_zero(detail::bareiss_det(scratch.data(), r))) {
                std::vector<int> basis(r);
                for (std::size_t t = 0; t < r; ++t) basis[t] = m.label_at(pos[c[t]]);
                bases.push_back(std::move(basis));
            }
            return true;
        });
    }

    Eisenstein d = det(m * conj_transpose(m));
    if (d.b != 0 || d.a != Int(bases.size()))
        throw std::logic_error("enumerate_bases: count " + std::to_string(bases.size()) +
                               " does not match det(MM^H) = " + to_string(d));
    return bases;
}

MatrixE standard_rep(const HRepresentation& rep, const std::vector<int>& basis) {
    const MatrixE& m = rep.matrix();
    if (basis.size() != m.rows())
        throw std::invalid_argument("standard_rep: basis size " +
                                    std::to_string(basis.size()) + " != rank " +
                                    std::to_string(m.rows()));
    std::vector<int> b = basis;
    std::sort(b.begin(), b.end());
    MatrixE sub = select_columns_by_labels(m, b);
    if (ring_is_zero(det(sub))) {
        std::string s;
        for (int e : b) s += (s.empty() ? "" : ",") + std::to_string(e);
        throw std::invalid_argument("standard_rep: {" + s + "} is not a basis");
    }
    MatrixQw mb_q = inverse(sub) * to_rational(m);
    std::optional<MatrixE> mb = to_integral(mb_q);
    if (!mb) throw std::logic_error("standard_rep: non-integral entry");
    mb->set_labels(m.labels());
    for (std::size_t i = 0; i < mb->rows(); ++i)
        for (std::size_t j = 0; j < mb->cols(); ++j)
            if (!is_h_element((*mb)(i, j)))
                throw std::logic_error("standard_rep: entry outside H");
    return *mb;
}

CocircuitVector fundamental_cocircuit(const MatrixE& standard, const std::vector<int>& basis,
                                      int element) {
    std::vector<int> b = basis;
    std::sort(b.begin(), b.end());
    auto it = std::find(b.begin(), b.end(), element);
    if (it == b.end())
        throw std::invalid_argument("fundamental_cocircuit: element " +
                                    std::to_string(element) + " not in basis");
    std::size_t row = static_cast<std::size_t>(it - b.begin());
    CocircuitVector v;
    v.basis = std::move(b);
    v.element = element;
    v.entries = row_vector(standard, row);
    for (std::size_t j = 0; j < standard.cols(); ++j)
        if (!v.entries[j].is_zero()) v.support.push_back(standard.label_at(j));
    std::sort(v.support.begin(), v.support.end());
    return v;
}

CocircuitVector fundamental_cocircuit(const HRepresentation& rep,
                                      const std::vector<int>& basis, int element) {
    return fundamental_cocircuit(standard_rep(rep, basis), basis, element);
}

MatrixE n_b_matrix(const HRepresentation& rep, const std::vector<int>& basis) {
    const MatrixE& m = rep.matrix();
    MatrixE mb = standard_rep(rep, basis);
    std::vector<int> b = basis;
    std::sort(b.begin(), b.end());
    MatrixE nb(m.cols(), m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) {
        auto it = std::find(b.begin(), b.end(), m.label_at(i));
        if (it == b.end()) continue;
        std::size_t row = static_cast<std::size_t>(it - b.begin());
        for (std::size_t j = 0; j < m.cols(); ++j) nb(i, j) = mb(row, j);
    }
    nb.set_labels(m.labels());
    return nb;
}

HRepresentation delete_element(const HRepresentation& rep, int label) {
    const MatrixE& m = rep.matrix();
    if (m.cols() < 2)
        throw std::invalid_argument("delete_element: cannot delete the last column");
    std::size_t gone = m.position_of_label(label);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j != gone) keep.push_back(j);
    return HRepresentation::from_validated(select_columns(m, keep), rep.level());
}

std::size_t rank_of_labels(const MatrixE& m, const std::vector<int>& labels) {
    return rank(select_columns_by_labels(m, labels));
}

namespace {

std::size_t rank_of_positions(const std::vector<Eisenstein64>& img, std::size_t rows,
                              std::size_t cols, const std::vector<std::size_t>& positions) {
    std::vector<Eisenstein64> scratch(rows * positions.size());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t t = 0; t < positions.size(); ++t)
            scratch[i * positions.size() + t] = img[i * cols + positions[t]];
    return detail::bareiss_rank(scratch.data(), rows, positions.size());
}

}  // namespace

bool verify_three_connected(const HRepresentation& rep) {
    const MatrixE& m = rep.matrix();
    const std::size_t n = m.cols();
    if (n > 14)
        throw std::invalid_argument("verify_three_connected: ground set larger than 14");
    const std::size_t r = rank(m);
    std::vector<Eisenstein64> img = detail::small_image(m);
    // position 0 pinned to X kills the {X,Y} <-> {Y,X} double count
    const std::uint64_t end = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask + 1 < end; ++mask) {
        std::vector<std::size_t> x{0}, y;
        for (std::size_t j = 1; j < n; ++j)
            ((mask >> (j - 1)) & 1 ? x : y).push_back(j);
        std::size_t rx = rank_of_positions(img, m.rows(), n, x);
        std::size_t ry = rank_of_positions(img, m.rows(), n, y);
        if (rx + ry <= r) return false;
        if (rx + ry <= r + 1 && x.size() >= 2 && y.size() >= 2) return false;
    }
    return true;
}

}  // namespace srujac
