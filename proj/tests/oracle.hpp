#pragma once

// Independent reference implementations used only by the tests. Everything
// here is deliberately naive: floating point, Laplace expansion, brute-force
// enumeration. The library must agree with these on small inputs.

#include "srujac/eisenstein.hpp"
#include "srujac/matrix.hpp"

#include <complex>
#include <random>
#include <vector>

namespace oracle {

using srujac::Eisenstein;
using srujac::Int;
using srujac::MatrixE;

inline std::complex<double> approx(const Eisenstein& x) {
    static const std::complex<double> w = std::polar(1.0, std::acos(-1.0) / 3.0);
    return static_cast<double>(x.a) + static_cast<double>(x.b) * w;
}

// Laplace expansion along the first row; exact, O(n!).
inline Eisenstein cofactor_det(const MatrixE& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Eisenstein acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        MatrixE sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) sub(r - 1, cc++) = m(r, c);
        Eisenstein term = m(0, j) * cofactor_det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline std::complex<double> float_det(const MatrixE& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<std::complex<double>>> a(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = approx(m(i, j));
    std::complex<double> det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
        if (std::abs(a[p][k]) < 1e-12) return 0.0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            std::complex<double> f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long long coord(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(gen);
    }
    Eisenstein eisenstein(long long bound) {
        return {Int(coord(-bound, bound)), Int(coord(-bound, bound))};
    }
    Eisenstein nonzero(long long bound) {
        while (true) {
            Eisenstein x = eisenstein(bound);
            if (!x.is_zero()) return x;
        }
    }
    // 0 or a sixth root of unity
    Eisenstein h_element() {
        long long k = coord(0, 6);
        return k == 6 ? Eisenstein() : srujac::omega_pow(static_cast<int>(k));
    }
    Eisenstein unit() { return srujac::omega_pow(static_cast<int>(coord(0, 5))); }

    MatrixE matrix(std::size_t r, std::size_t c, long long bound) {
        MatrixE m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = eisenstein(bound);
        return m;
    }
    MatrixE h_matrix_candidate(std::size_t r, std::size_t c) {
        MatrixE m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = h_element();
        return m;
    }
};

inline const std::vector<Eisenstein>& units() {
    static const std::vector<Eisenstein> us = [] {
        std::vector<Eisenstein> v;
        for (int k = 0; k < 6; ++k) v.push_back(srujac::omega_pow(k));
        return v;
    }();
    return us;
}

}  // namespace oracle
