#pragma once

#include "srujac/matrix.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace srujac {

namespace detail {

// k-subsets of {0..n-1} in lexicographic order; visitor returns false to stop.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), std::size_t{0});
    while (true) {
        if (!f(static_cast<const std::vector<std::size_t>&>(c))) return;
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace detail

// S * A * T = diag(divisors).  S, T unimodular; divisors canonical with
// divisors[i] | divisors[i+1]; trailing zeros fill to min(m, n).
template <typename R>
struct SnfResult {
    std::vector<R> divisors;
    Mat<R> s;
    Mat<R> t;
    std::size_t rank = 0;
};

template <typename R>
SnfResult<R> snf(const Mat<R>& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Mat<R> d = a;
    Mat<R> s = Mat<R>::identity(m);
    Mat<R> t = Mat<R>::identity(n);

    // smallest norm, ties broken row-major; first == m means the block is zero
    auto find_pivot = [&](std::size_t k) -> std::pair<std::size_t, std::size_t> {
        std::pair<std::size_t, std::size_t> best{m, 0};
        Int best_norm{};
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (ring_is_zero(d(i, j))) continue;
                Int nv = ring_norm(d(i, j));
                if (best.first == m || nv < best_norm) {
                    best = {i, j};
                    best_norm = std::move(nv);
                }
            }
        return best;
    };

    auto add_row = [&](std::size_t dst, std::size_t src, const R& c) {  // row_dst += c*row_src
        for (std::size_t j = 0; j < n; ++j) d(dst, j) += c * d(src, j);
        for (std::size_t j = 0; j < m; ++j) s(dst, j) += c * s(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const R& c) {
        for (std::size_t i = 0; i < m; ++i) d(i, dst) += c * d(i, src);
        for (std::size_t i = 0; i < n; ++i) t(i, dst) += c * t(i, src);
    };

    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        auto piv = find_pivot(k);
        if (piv.first == m) break;
        rank = k + 1;
        while (true) {
            if (piv.first != k) {
                d.swap_rows(k, piv.first);
                s.swap_rows(k, piv.first);
            }
            if (piv.second != k) {
                d.swap_columns(k, piv.second);
                t.swap_columns(k, piv.second);
            }
            bool dirty = false;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (ring_is_zero(d(i, k))) continue;
                auto qr = euclidean_div(d(i, k), d(k, k));
                add_row(i, k, -qr.quotient);
                if (!ring_is_zero(d(i, k))) dirty = true;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (ring_is_zero(d(k, j))) continue;
                auto qr = euclidean_div(d(k, j), d(k, k));
                add_col(j, k, -qr.quotient);
                if (!ring_is_zero(d(k, j))) dirty = true;
            }
            if (dirty) {
                // remainders shrank something below the pivot norm; rescan
                piv = find_pivot(k);
                continue;
            }
            // row and column k are clear; repair divisibility of the block
            std::optional<std::size_t> bad_row;
            for (std::size_t i = k + 1; i < m && !bad_row; ++i)
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (ring_is_zero(d(i, j))) continue;
                    if (!ring_is_zero(euclidean_div(d(i, j), d(k, k)).remainder)) {
                        bad_row = i;
                        break;
                    }
                }
            if (!bad_row) break;
            add_row(k, *bad_row, R(1));
            piv = std::pair<std::size_t, std::size_t>{k, k};
        }
    }

    // canonicalize the diagonal; fold the units into S
    std::vector<R> divisors(std::min(m, n));
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        auto ca = canonical_associate(d(i, i));
        if (!(ca.unit == R(1))) {
            for (std::size_t j = 0; j < n; ++j) d(i, j) = ca.unit * d(i, j);
            for (std::size_t j = 0; j < m; ++j) s(i, j) = ca.unit * s(i, j);
        }
        divisors[i] = d(i, i);
    }
    return {std::move(divisors), std::move(s), std::move(t), rank};
}

// Reconstruction and unimodularity check: S*A*T == diag(divisors) and
// det(S), det(T) are units.
template <typename R>
bool snf_is_consistent(const Mat<R>& a, const SnfResult<R>& r) {
    Mat<R> p = r.s * a * r.t;
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const R want = (i == j && i < r.divisors.size()) ? r.divisors[i] : R(0);
            if (!(p(i, j) == want)) return false;
        }
    for (std::size_t i = 0; i + 1 < r.divisors.size(); ++i) {
        if (ring_is_zero(r.divisors[i])) {
            if (!ring_is_zero(r.divisors[i + 1])) return false;
            continue;
        }
        if (!ring_is_zero(r.divisors[i + 1]) &&
            !ring_is_zero(euclidean_div(r.divisors[i + 1], r.divisors[i]).remainder))
            return false;
    }
    return ring_norm(det(r.s)) == 1 && ring_norm(det(r.t)) == 1;
}

// Independent divisor computation from gcds of k x k minors.
// d_k = gcd of all k-minors, alpha_k = d_k / d_{k-1}.  Exponential in the
// matrix size; guarded to min dimension <= 8.
template <typename R>
std::vector<R> minor_gcd_divisors(const Mat<R>& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t dim = std::min(m, n);
    if (dim > 8)
        throw std::invalid_argument("minor_gcd_divisors: min dimension exceeds 8, use snf");
    std::vector<R> chain{R(1)};  // d_0 = 1
    for (std::size_t k = 1; k <= dim; ++k) {
        R g(0);
        std::vector<R> scratch(k * k);
        detail::for_each_combination(m, k, [&](const std::vector<std::size_t>& rows) {
            detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& cols) {
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        scratch[i * k + j] = a(rows[i], cols[j]);
                R dv = detail::bareiss_det(scratch.data(), k);
                if (!ring_is_zero(dv))
                    g = ring_is_zero(g) ? canonical_associate(dv).value : ring_gcd(g, dv);
                return true;
            });
            return true;
        });
        chain.push_back(g);
        if (ring_is_zero(g)) break;
    }
    std::vector<R> divisors;
    for (std::size_t k = 1; k < chain.size(); ++k) {
        if (ring_is_zero(chain[k]))
            divisors.push_back(R(0));
        else
            divisors.push_back(canonical_associate(exact_div(chain[k], chain[k - 1])).value);
    }
    divisors.resize(dim, R(0));
    return divisors;
}

template <typename R>
struct CokernelFactor {
    R divisor;      // R, R/(d), or 0 for a free summand
    bool trivial;   // unit divisor: factor is the zero module
};

// Cokernel of a square matrix as a direct sum of cyclic factors, one per
// diagonal divisor.  Trivial factors are flagged but retained.
template <typename R>
std::vector<CokernelFactor<R>> cokernel_decomposition(const Mat<R>& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("cokernel_decomposition: matrix not square");
    auto result = snf(a);
    std::vector<CokernelFactor<R>> factors;
    factors.reserve(result.divisors.size());
    for (const R& d : result.divisors)
        factors.push_back({d, !ring_is_zero(d) && ring_norm(d) == 1});
    return factors;
}

}  // namespace srujac
