#pragma once

#include "srujac/hmatrix.hpp"
#include "srujac/snf.hpp"

#include <string>
#include <vector>

namespace srujac {

// MM^H.  Requires full row rank (restrict rows first).
MatrixE laplacian(const HRepresentation& rep);

struct JacobianE {
    HRepresentation rep;               // row-restricted when the input was not full rank
    MatrixE laplacian;                 // r x r, Hermitian, nonsingular
    SnfResult<Eisenstein> snf;         // transforms retained for coset classification
    std::vector<Eisenstein> divisors;  // full canonical chain, length r
    std::vector<Eisenstein> nontrivial;  // the divisors of norm > 1
    Int order;                         // product of divisor norms = (#bases)^2
};

JacobianE jacobian_of(const HRepresentation& rep);

inline const Int& order_of(const JacobianE& j) { return j.order; }

// Invariant factors (each > 1) of the underlying abelian group.  Each
// E/(alpha) contributes the integer SNF of multiplication by alpha on the
// basis {1, w}; the per-divisor factors are then merged into one chain.
// A zero divisor (infinite group) throws.
std::vector<Int> abelianize(const std::vector<Eisenstein>& divisors);
inline std::vector<Int> abelianize(const JacobianE& j) { return abelianize(j.divisors); }

// "E/(1+w) + E/(2+2w)", "trivial" when empty
std::string group_string(const std::vector<Eisenstein>& nontrivial);
// "Z/6 + Z/6", "trivial" when empty
std::string abelian_string(const std::vector<Int>& factors);

inline bool same_e_module(const JacobianE& x, const JacobianE& y) {
    return x.nontrivial == y.nontrivial;
}

// v in Lambda_E: an Eisenstein vector with v M^H = 0.
bool in_lambda(const HRepresentation& rep, const std::vector<Eisenstein>& v);

struct SpanWitness {
    bool member = false;
    std::vector<Eisenstein> coefficients;  // z with z M = v, when member
};

// v in Lambda*_E = row_E(M): solved through a basis submatrix inverse.
SpanWitness in_lambda_star(const HRepresentation& rep, const std::vector<Eisenstein>& v);

// Complete coset invariant of [v] in E^n / (Lambda + Lambda*): the
// coordinates of v M^H T reduced modulo the SNF divisors.  Two vectors
// get the same tuple iff they differ by Lambda + Lambda*.
std::vector<Eisenstein> jacobian_class(const JacobianE& j, const std::vector<Eisenstein>& v);

struct DoublingReport {
    Int tree_count;                 // det(M M^T)
    std::vector<Int> z_factors;     // invariant factors of coker_Z(M M^T)
    std::vector<Int> doubled;       // each factor twice, still a chain
    std::vector<Int> abelianized;   // abelianize(jacobian_of(M))
    bool match = false;
};

// For a {0, +-1} totally unimodular matrix: the Eisenstein Jacobian,
// viewed as an abelian group, doubles the integer cokernel of M M^T.
DoublingReport regular_doubling(const MatrixE& m);

}  // namespace srujac
