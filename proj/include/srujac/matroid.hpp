#pragma once

#include "srujac/hmatrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace srujac {

// Exhaustive r-subset scans; refuse ground sets where C(n, r) exceeds this.
inline constexpr std::uint64_t kBasisEnumGuard = 10'000'000;

// All bases as sorted label sets, in lexicographic order.  The count is
// checked against det(MM^H) and a mismatch throws (it would mean an
// arithmetic bug, not bad input).  Requires full row rank.
std::vector<std::vector<int>> enumerate_bases(const HRepresentation& rep);

// M_B = (M[B])^-1 M, so that M_B[B] is the identity.  B is treated as a
// set; rows follow ascending label order.  All entries land in H.
MatrixE standard_rep(const HRepresentation& rep, const std::vector<int>& basis);

struct CocircuitVector {
    std::vector<int> basis;          // ascending
    int element;                     // in basis
    std::vector<Eisenstein> entries; // indexed by column position of M
    std::vector<int> support;        // labels with nonzero entry, ascending
};

// The row of M_B belonging to element (with entry 1 at element itself and
// 0 on the rest of B).  Support equals the exchange set
// {j : B - element + j is a basis}.
CocircuitVector fundamental_cocircuit(const HRepresentation& rep,
                                      const std::vector<int>& basis, int element);
CocircuitVector fundamental_cocircuit(const MatrixE& standard, const std::vector<int>& basis,
                                      int element);

// n x n matrix whose row at the position of each basis label is the
// matching row of M_B, all other rows zero.
MatrixE n_b_matrix(const HRepresentation& rep, const std::vector<int>& basis);

// Column deletion; validation level carries over (subdeterminants of the
// result are a subset).  The caller restricts rows if the rank drops.
HRepresentation delete_element(const HRepresentation& rep, int label);

std::size_t rank_of_labels(const MatrixE& m, const std::vector<int>& labels);

// Brute force over all bipartitions: true iff there is no 1- or
// 2-separation.  Guarded to ground sets of size <= 14.
bool verify_three_connected(const HRepresentation& rep);

}  // namespace srujac
