#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace srujac {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// x = a + b*w where w = exp(i*pi/3) is a primitive sixth root of unity.
// w^2 = w - 1, w^3 = -1, w^6 = 1.  Units are exactly the powers of w.
template <typename I>
struct BasicEisenstein {
    I a{};
    I b{};

    BasicEisenstein() = default;
    BasicEisenstein(I re) : a(std::move(re)) {}  // NOLINT: implicit from integer
    BasicEisenstein(I re, I im) : a(std::move(re)), b(std::move(im)) {}
    template <typename J, std::enable_if_t<std::is_integral_v<J>, int> = 0>
    BasicEisenstein(J re) : a(re) {}  // NOLINT: lets literals convert in one step

    bool is_zero() const { return a == 0 && b == 0; }

    friend BasicEisenstein operator+(const BasicEisenstein& x, const BasicEisenstein& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend BasicEisenstein operator-(const BasicEisenstein& x, const BasicEisenstein& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend BasicEisenstein operator-(const BasicEisenstein& x) { return {-x.a, -x.b}; }
    friend BasicEisenstein operator*(const BasicEisenstein& x, const BasicEisenstein& y) {
        // (a1 + b1 w)(a2 + b2 w) = a1 a2 - b1 b2 + (a1 b2 + a2 b1 + b1 b2) w
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    BasicEisenstein& operator+=(const BasicEisenstein& y) { a += y.a; b += y.b; return *this; }
    BasicEisenstein& operator-=(const BasicEisenstein& y) { a -= y.a; b -= y.b; return *this; }
    BasicEisenstein& operator*=(const BasicEisenstein& y) { *this = *this * y; return *this; }

    friend bool operator==(const BasicEisenstein& x, const BasicEisenstein& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const BasicEisenstein& x, const BasicEisenstein& y) {
        return !(x == y);
    }
};

using Eisenstein = BasicEisenstein<Int>;
using EisensteinRational = BasicEisenstein<Rat>;
using Eisenstein64 = BasicEisenstein<std::int64_t>;  // internal fast path, see matrix.hpp

template <typename I>
BasicEisenstein<I> conj(const BasicEisenstein<I>& x) {
    // conj(w) = w^5 = 1 - w
    return {x.a + x.b, -x.b};
}

template <typename I>
I norm(const BasicEisenstein<I>& x) {
    return x.a * x.a + x.a * x.b + x.b * x.b;
}

template <typename I>
bool is_zero(const BasicEisenstein<I>& x) {
    return x.is_zero();
}

inline bool is_unit(const Eisenstein& x) { return norm(x) == 1; }
inline bool is_h_element(const Eisenstein& x) { return norm(x) <= 1; }

// w^k for any integer k, reduced mod 6.
Eisenstein omega_pow(long long k);

struct EisDivResult {
    Eisenstein quotient;
    Eisenstein remainder;
};

// x = q*y + r with norm(r) <= (3/4) norm(y).  Quotient coordinates round
// to the nearest integer, ties to even.  Throws on y == 0.
EisDivResult euclidean_div(const Eisenstein& x, const Eisenstein& y);

// Exact quotient x/y; throws std::domain_error when y does not divide x.
Eisenstein exact_div(const Eisenstein& x, const Eisenstein& y);

struct CanonicalAssociate {
    Eisenstein value;  // in {a >= 1, b >= 0} or zero
    Eisenstein unit;   // value == unit * x
};

// The unique associate of x lying in the sextant {a >= 1, b >= 0} (0 maps to 0).
CanonicalAssociate canonical_associate(const Eisenstein& x);

// Canonical gcd; throws std::domain_error on gcd(0, 0).
Eisenstein gcd(const Eisenstein& x, const Eisenstein& y);

// True iff x^6 has zero w-coordinate.  x^6 is then a nonzero rational
// integer for any x != 0.
bool sixth_power_is_integer(const Eisenstein& x);

// Canonical coset representative of x modulo the ideal (alpha).
// Distinct representatives correspond to distinct cosets; there are
// norm(alpha) of them.  alpha == 0 returns x unchanged.
Eisenstein canonical_residue(const Eisenstein& x, const Eisenstein& alpha);

// Rendering: "0", "-1", "3w", "w", "2+2w", "1-w".  The parser additionally
// accepts "w^k" (k reduced mod 6), explicit unit coefficients ("1w") and
// repeated terms.
std::string to_string(const Eisenstein& x);
std::string to_string(const EisensteinRational& x);
Eisenstein parse_eisenstein(std::string_view token);

inline EisensteinRational to_rational(const Eisenstein& x) {
    return {Rat(x.a), Rat(x.b)};
}

inline bool is_integral(const EisensteinRational& x) {
    return boost::multiprecision::denominator(x.a) == 1 &&
           boost::multiprecision::denominator(x.b) == 1;
}

std::optional<Eisenstein> to_integral(const EisensteinRational& x);

inline EisensteinRational inverse(const EisensteinRational& x) {
    Rat n = norm(x);
    if (n == 0) throw std::domain_error("eisenstein: division by zero");
    EisensteinRational c = conj(x);
    return {c.a / n, c.b / n};
}

inline EisensteinRational operator/(const EisensteinRational& x, const EisensteinRational& y) {
    return x * inverse(y);
}

// division is exact in the fraction field; lets the elimination kernels
// run over Q(w) as well
inline EisensteinRational exact_div(const EisensteinRational& x, const EisensteinRational& y) {
    return x * inverse(y);
}

// --- rational integers as a Euclidean ring, for the shared SNF engine ---

struct IntDivResult {
    Int quotient;
    Int remainder;
};

// Symmetric division: |r| <= |y|/2, ties toward even quotient.
IntDivResult euclidean_div(const Int& x, const Int& y);
Int exact_div(const Int& x, const Int& y);

struct IntCanonicalAssociate {
    Int value;
    Int unit;
};

inline IntCanonicalAssociate canonical_associate(const Int& x) {
    return x < 0 ? IntCanonicalAssociate{-x, -1} : IntCanonicalAssociate{x, 1};
}

// Uniform ring interface for the shared elimination kernels.  These carry
// distinct names because boost::multiprecision also exports conj/is_zero/gcd
// for its number types, which would make the natural spellings ambiguous.

template <typename I>
bool ring_is_zero(const BasicEisenstein<I>& x) { return x.is_zero(); }
inline bool ring_is_zero(const Int& x) { return x == 0; }
inline bool ring_is_zero(std::int64_t x) { return x == 0; }

template <typename I>
BasicEisenstein<I> ring_conj(const BasicEisenstein<I>& x) { return conj(x); }
inline Int ring_conj(const Int& x) { return x; }
inline std::int64_t ring_conj(std::int64_t x) { return x; }

inline Int ring_norm(const Eisenstein& x) { return norm(x); }
inline Int ring_norm(const Int& x) { return boost::multiprecision::abs(x); }

inline Eisenstein ring_gcd(const Eisenstein& x, const Eisenstein& y) { return gcd(x, y); }
inline Int ring_gcd(const Int& x, const Int& y) {
    if (x == 0 && y == 0) throw std::domain_error("gcd(0, 0) is undefined");
    return boost::multiprecision::gcd(x, y);
}

// int64 mirror used by the bounded-minor fast path
inline Eisenstein64 exact_div(const Eisenstein64& x, const Eisenstein64& y) {
    Eisenstein64 t = x * conj(y);
    std::int64_t n = norm(y);
    return {t.a / n, t.b / n};
}

}  // namespace srujac
