#pragma once

#include "srujac/eisenstein.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace srujac {

// Dense matrix over an exact scalar.  Columns carry integer labels
// (ground-set elements); labels default to 1..n and travel with column
// selections and swaps.
template <typename S>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), d_(rows * cols), labels_(cols) {
        std::iota(labels_.begin(), labels_.end(), 1);
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    const std::vector<int>& labels() const { return labels_; }

    void set_labels(std::vector<int> labels) {
        if (labels.size() != cols_)
            throw std::invalid_argument("set_labels: expected " + std::to_string(cols_) +
                                        " labels, got " + std::to_string(labels.size()));
        std::set<int> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size())
            throw std::invalid_argument("set_labels: duplicate column label");
        labels_ = std::move(labels);
    }

    int label_at(std::size_t j) const { return labels_.at(j); }

    std::size_t position_of_label(int label) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if (labels_[j] == label) return j;
        throw std::out_of_range("no column labeled " + std::to_string(label));
    }

    void swap_columns(std::size_t j1, std::size_t j2) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j1), (*this)(i, j2));
        std::swap(labels_[j1], labels_[j2]);
    }

    void swap_rows(std::size_t i1, std::size_t i2) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i1, j), (*this)(i2, j));
    }

    // entries and shape; labels are metadata and compared separately
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

private:
    std::size_t rows_, cols_;
    std::vector<S> d_;
    std::vector<int> labels_;
};

using MatrixE = Mat<Eisenstein>;
using MatrixQw = Mat<EisensteinRational>;
using MatrixZ = Mat<Int>;

template <typename S>
Mat<S> operator+(const Mat<S>& x, const Mat<S>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("matrix sum: shape mismatch");
    Mat<S> r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) + y(i, j);
    return r;
}

template <typename S>
Mat<S> operator-(const Mat<S>& x, const Mat<S>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("matrix difference: shape mismatch");
    Mat<S> r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) - y(i, j);
    return r;
}

template <typename S>
Mat<S> operator*(const Mat<S>& x, const Mat<S>& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Mat<S> r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const S& xik = x(i, k);
            if (ring_is_zero(xik)) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

template <typename S>
Mat<S> operator*(const S& c, const Mat<S>& x) {
    Mat<S> r = x;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = c * r(i, j);
    return r;
}

template <typename S>
Mat<S> conj_transpose(const Mat<S>& x) {
    Mat<S> r(x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r(j, i) = ring_conj(x(i, j));
    return r;
}

template <typename S>
bool is_hermitian(const Mat<S>& x) {
    if (x.rows() != x.cols()) return false;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = i; j < x.cols(); ++j)
            if (x(i, j) != ring_conj(x(j, i))) return false;
    return true;
}

// row vector times matrix
template <typename S>
std::vector<S> vec_mat(const std::vector<S>& v, const Mat<S>& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vec_mat: shape mismatch");
    std::vector<S> r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (ring_is_zero(v[i])) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

template <typename S>
std::vector<S> row_vector(const Mat<S>& m, std::size_t i) {
    std::vector<S> r(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j);
    return r;
}

template <typename S>
Mat<S> select_columns(const Mat<S>& m, const std::vector<std::size_t>& positions) {
    Mat<S> r(m.rows(), positions.size());
    std::vector<int> labels(positions.size());
    for (std::size_t t = 0; t < positions.size(); ++t) {
        if (positions[t] >= m.cols()) throw std::out_of_range("select_columns: bad position");
        labels[t] = m.label_at(positions[t]);
        for (std::size_t i = 0; i < m.rows(); ++i) r(i, t) = m(i, positions[t]);
    }
    r.set_labels(std::move(labels));
    return r;
}

template <typename S>
Mat<S> select_columns_by_labels(const Mat<S>& m, const std::vector<int>& labels) {
    std::vector<std::size_t> pos(labels.size());
    for (std::size_t t = 0; t < labels.size(); ++t) pos[t] = m.position_of_label(labels[t]);
    return select_columns(m, pos);
}

namespace detail {

// One-step Bareiss on a destructive row-major n x n scratch buffer.
// Exact in any integral domain: every intermediate entry is a minor of
// the input, so the divisions are exact.
template <typename T>
T bareiss_det(T* a, std::size_t n) {
    if (n == 0) return T(1);
    bool neg = false;
    T prev = T(1);
    bool prev_is_one = true;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(a[k * n + k])) {
            std::size_t p = k + 1;
            while (p < n && ring_is_zero(a[p * n + k])) ++p;
            if (p == n) return T(0);
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            neg = !neg;
        }
        const T pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const T aik = a[i * n + k];
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = a[i * n + j] * pivot - aik * a[k * n + j];
                a[i * n + j] = prev_is_one ? std::move(num) : exact_div(num, prev);
            }
            a[i * n + k] = T(0);
        }
        prev = pivot;
        prev_is_one = (prev == T(1));
    }
    T d = a[n * n - 1];
    return neg ? -d : d;
}

// Fraction-free rank of an m x n destructive buffer.
template <typename T>
std::size_t bareiss_rank(T* a, std::size_t m, std::size_t n) {
    T prev = T(1);
    std::size_t t = 0;
    while (t < m && t < n) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m && pi == m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (!ring_is_zero(a[i * n + j])) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == m) return t;
        if (pi != t)
            for (std::size_t j = 0; j < n; ++j) std::swap(a[t * n + j], a[pi * n + j]);
        if (pj != t)
            for (std::size_t i = 0; i < m; ++i) std::swap(a[i * n + t], a[i * n + pj]);
        const T pivot = a[t * n + t];
        for (std::size_t i = t + 1; i < m; ++i) {
            const T ait = a[i * n + t];
            for (std::size_t j = t + 1; j < n; ++j)
                a[i * n + j] = exact_div(a[i * n + j] * pivot - ait * a[t * n + j], prev);
            a[i * n + t] = T(0);
        }
        prev = pivot;
        ++t;
    }
    return t;
}

}  // namespace detail

template <typename S>
S det(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    std::vector<S> scratch(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) scratch[i * m.cols() + j] = m(i, j);
    return detail::bareiss_det(scratch.data(), m.rows());
}

template <typename S>
std::size_t rank(const Mat<S>& m) {
    std::vector<S> scratch(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) scratch[i * m.cols() + j] = m(i, j);
    return detail::bareiss_rank(scratch.data(), m.rows(), m.cols());
}

// Greedy maximal independent row subset, preserving row order and labels.
template <typename S>
Mat<S> full_row_rank_restriction(const Mat<S>& m) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<S> scratch((kept.size() + 1) * m.cols());
        std::size_t t = 0;
        for (std::size_t k : kept)
            for (std::size_t j = 0; j < m.cols(); ++j) scratch[t++] = m(k, j);
        for (std::size_t j = 0; j < m.cols(); ++j) scratch[t++] = m(i, j);
        if (detail::bareiss_rank(scratch.data(), kept.size() + 1, m.cols()) == kept.size() + 1)
            kept.push_back(i);
    }
    if (kept.empty())
        throw std::invalid_argument("full_row_rank_restriction: zero matrix");
    Mat<S> r(kept.size(), m.cols());
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(kept[i], j);
    r.set_labels(m.labels());
    return r;
}

inline MatrixQw to_rational(const MatrixE& m) {
    MatrixQw r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_rational(m(i, j));
    r.set_labels(m.labels());
    return r;
}

inline std::optional<MatrixE> to_integral(const MatrixQw& m) {
    MatrixE r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto e = to_integral(m(i, j));
            if (!e) return std::nullopt;
            r(i, j) = *e;
        }
    r.set_labels(m.labels());
    return r;
}

// Gauss-Jordan inverse over the fraction field.
MatrixQw inverse(const MatrixQw& m);
inline MatrixQw inverse(const MatrixE& m) { return inverse(to_rational(m)); }

namespace detail {

// int64 coefficient image of an H-entry matrix.  Safe for all minor
// computations up to 15 x 15: intermediate Bareiss entries are minors,
// Hadamard-bounded by 15^7.5 < 2^30 in modulus, and the products formed
// from them stay below 2^63.
inline std::vector<Eisenstein64> small_image(const MatrixE& m) {
    std::vector<Eisenstein64> r(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Eisenstein& e = m(i, j);
            if (norm(e) > 1)
                throw std::invalid_argument("small_image: entry outside H");
            r[i * m.cols() + j] = {static_cast<std::int64_t>(e.a),
                                   static_cast<std::int64_t>(e.b)};
        }
    return r;
}

}  // namespace detail

}  // namespace srujac
