#include "srujac/eisenstein.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace srujac {

namespace {

// floor(p / q) for q > 0
Int floor_div_pos(const Int& p, const Int& q) {
    Int t = p / q;  // truncates toward zero
    if (p % q != 0 && p < 0) --t;
    return t;
}

// nearest integer to p/q (q > 0), ties to even
Int round_half_even(const Int& p, const Int& q) {
    Int f = floor_div_pos(p, q);
    Int rem2 = 2 * (p - f * q);  // in [0, 2q)
    if (rem2 < q) return f;
    if (rem2 > q) return f + 1;
    return (f % 2 == 0) ? f : f + 1;
}

Int floor_mod(const Int& p, const Int& q) {  // q > 0, result in [0, q)
    return p - floor_div_pos(p, q) * q;
}

}  // namespace

Eisenstein omega_pow(long long k) {
    static const std::array<Eisenstein, 6> table = {
        Eisenstein{1, 0}, Eisenstein{0, 1}, Eisenstein{-1, 1},
        Eisenstein{-1, 0}, Eisenstein{0, -1}, Eisenstein{1, -1}};
    long long r = k % 6;
    if (r < 0) r += 6;
    return table[static_cast<std::size_t>(r)];
}

EisDivResult euclidean_div(const Eisenstein& x, const Eisenstein& y) {
    if (y.is_zero()) throw std::domain_error("euclidean_div: division by zero");
    Eisenstein t = x * conj(y);
    Int n = norm(y);
    Eisenstein q{round_half_even(t.a, n), round_half_even(t.b, n)};
    Eisenstein r = x - q * y;
    return {q, r};
}

Eisenstein exact_div(const Eisenstein& x, const Eisenstein& y) {
    if (y.is_zero()) throw std::domain_error("exact_div: division by zero");
    Eisenstein t = x * conj(y);
    Int n = norm(y);
    if (t.a % n != 0 || t.b % n != 0)
        throw std::domain_error("exact_div: " + to_string(y) + " does not divide " +
                                to_string(x));
    return {t.a / n, t.b / n};
}

CanonicalAssociate canonical_associate(const Eisenstein& x) {
    if (x.is_zero()) return {Eisenstein{}, Eisenstein{1}};
    for (long long k = 0; k < 6; ++k) {
        Eisenstein u = omega_pow(k);
        Eisenstein c = u * x;
        if (c.a >= 1 && c.b >= 0) return {c, u};
    }
    throw std::logic_error("canonical_associate: no associate in sextant");
}

Eisenstein gcd(const Eisenstein& x, const Eisenstein& y) {
    if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Eisenstein a = x, b = y;
    while (!b.is_zero()) {
        Eisenstein r = euclidean_div(a, b).remainder;
        a = b;
        b = r;
    }
    return canonical_associate(a).value;
}

bool sixth_power_is_integer(const Eisenstein& x) {
    Eisenstein x3 = x * x * x;
    return (x3 * x3).b == 0;
}

Eisenstein canonical_residue(const Eisenstein& x, const Eisenstein& alpha) {
    if (alpha.is_zero()) return x;
    // The ideal (alpha), read as a sublattice of Z^2 in the basis (1, w),
    // is spanned by the rows (a, b) and (-b, a+b).  Reduce x against a
    // triangular basis (g, q), (0, s) with g = gcd(a, b), s = norm/g.
    const Int& a = alpha.a;
    const Int& b = alpha.b;
    Int g = boost::multiprecision::gcd(a, b);
    Int n = norm(alpha);
    Int s = n / g;
    // extended gcd on (a, -b): ra = ma*a + mb*(-b), ends with ra = +-g
    Int ra = a, rb = -b;
    Int ma = 1, mb = 0;
    Int na = 0, nb = 1;
    while (rb != 0) {
        Int q = ra / rb;
        Int t = ra - q * rb;
        ra = rb;
        rb = t;
        t = ma - q * na;
        ma = na;
        na = t;
        t = mb - q * nb;
        mb = nb;
        nb = t;
    }
    if (ra < 0) {
        ma = -ma;
        mb = -mb;
    }
    // lattice row g1 = ma*(a, b) + mb*(-b, a+b) has leading coordinate g
    Int g1b = ma * b + mb * (a + b);
    // reduce x.a into [0, g) along g1, then x.b into [0, s)
    Int t = -floor_div_pos(x.a, g);
    Int ca = x.a + t * g;
    Int cb = floor_mod(x.b + t * g1b, s);
    return {ca, cb};
}

std::string to_string(const Eisenstein& x) {
    std::ostringstream os;
    if (x.is_zero()) return "0";
    if (x.b == 0) {
        os << x.a;
        return os.str();
    }
    if (x.a != 0) os << x.a;
    if (x.b > 0 && x.a != 0) os << '+';
    if (x.b == -1)
        os << '-';
    else if (x.b != 1)
        os << x.b;
    os << 'w';
    return os.str();
}

std::string to_string(const EisensteinRational& x) {
    std::ostringstream os;
    if (x.a == 0 && x.b == 0) return "0";
    if (x.b == 0) {
        os << x.a;
        return os.str();
    }
    if (x.a != 0) os << x.a;
    if (x.b > 0 && x.a != 0) os << '+';
    if (x.b == -1)
        os << '-';
    else if (x.b != 1)
        os << x.b;
    os << 'w';
    return os.str();
}

std::optional<Eisenstein> to_integral(const EisensteinRational& x) {
    if (!is_integral(x)) return std::nullopt;
    return Eisenstein{boost::multiprecision::numerator(x.a),
                      boost::multiprecision::numerator(x.b)};
}

namespace {

[[noreturn]] void parse_fail(std::string_view token, const char* why) {
    throw std::invalid_argument("cannot parse \"" + std::string(token) + "\": " + why);
}

}  // namespace

Eisenstein parse_eisenstein(std::string_view token) {
    std::size_t i = 0;
    const std::size_t n = token.size();
    Eisenstein acc;
    bool any = false;
    while (i < n) {
        int sign = 1;
        if (token[i] == '+' || token[i] == '-') {
            if (token[i] == '-') sign = -1;
            ++i;
            if (i == n) parse_fail(token, "dangling sign");
        } else if (any) {
            parse_fail(token, "missing '+' or '-' between terms");
        }
        bool have_digits = false;
        Int mag = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(token[i]))) {
            mag = mag * 10 + (token[i] - '0');
            ++i;
            have_digits = true;
        }
        if (i < n && token[i] == 'w') {
            ++i;
            Int coeff = have_digits ? mag : Int(1);
            if (sign < 0) coeff = -coeff;
            long long exp = 1;
            if (i < n && token[i] == '^') {
                ++i;
                bool eneg = false;
                if (i < n && token[i] == '-') {
                    eneg = true;
                    ++i;
                }
                if (i == n || !std::isdigit(static_cast<unsigned char>(token[i])))
                    parse_fail(token, "bad exponent");
                long long e = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(token[i]))) {
                    e = e * 10 + (token[i] - '0');
                    if (e > 1000000) parse_fail(token, "exponent too large");
                    ++i;
                }
                exp = eneg ? -e : e;
            }
            acc += Eisenstein{coeff} * omega_pow(exp);
        } else {
            if (!have_digits) parse_fail(token, "expected digits or 'w'");
            acc += Eisenstein{sign < 0 ? -mag : mag};
        }
        any = true;
    }
    if (!any) parse_fail(token, "empty token");
    return acc;
}

IntDivResult euclidean_div(const Int& x, const Int& y) {
    if (y == 0) throw std::domain_error("euclidean_div: division by zero");
    Int ay = boost::multiprecision::abs(y);
    Int q = round_half_even(x, ay);
    if (y < 0) q = -q;
    return {q, x - q * y};
}

Int exact_div(const Int& x, const Int& y) {
    if (y == 0) throw std::domain_error("exact_div: division by zero");
    if (x % y != 0)
        throw std::domain_error("exact_div: not divisible");
    return x / y;
}

}  // namespace srujac
