#pragma once

#include "srujac/hmatrix.hpp"

#include <vector>

namespace srujac {

// The averaging identity N = kappa * P is asserted entrywise; gate the
// basis sum at this many bases.
inline constexpr long long kAveragingGate = 5000;

// Orthogonal projection onto the row space: P = M^H (MM^H)^-1 M, exact
// over the fraction field.  P^2 = P, P^H = P.  Requires full row rank.
MatrixQw projector(const HRepresentation& rep);

struct AveragingResult {
    MatrixE n;  // sum of N_B over all bases
    Int kappa;  // basis count
};

// N = sum over bases of N_B.  Checks N == kappa * P entrywise and
// N == N^H; a mismatch throws std::logic_error.
AveragingResult averaging_matrix(const HRepresentation& rep);

struct DualMembership {
    bool in_row_space = false;
    bool integral_pairing = false;  // v M^H has Eisenstein entries
    bool member = false;            // both: v lies in the dual lattice of row_E(M)
    std::vector<EisensteinRational> coefficients;  // z with z M = v, when in_row_space
};

DualMembership dual_membership(const HRepresentation& rep,
                               const std::vector<EisensteinRational>& v);

}  // namespace srujac
