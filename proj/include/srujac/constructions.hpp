#pragma once

#include "srujac/hmatrix.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace srujac {

// "u24", "t_r:4", "ag23_del:7", ...
struct FamilySpec {
    std::string name;
    std::optional<long long> param;
};

FamilySpec parse_family_spec(const std::string& text);

// Raw family matrices, unvalidated; gen_family wraps them in
// representations.  Labels default to 1..n.
MatrixE u24_matrix();
MatrixE ag23_matrix();
MatrixE t_r_matrix(std::size_t r);      // r >= 2
MatrixE whirl_matrix(std::size_t r);    // r >= 2
MatrixE m1_matrix();
MatrixE m8_matrix();
MatrixE k_complete_matrix(std::size_t verts);  // reduced incidence of K_verts

// u24 | ag23 | ag23_del:e (e in 1..9) | t_r:r (r >= 2) | whirl:r (r >= 2) |
// counterexample_m | counterexample_mprime | graphic_complete:m (m >= 2).
// Outputs carry full validation when the total minor count fits the guard,
// entries-level otherwise.
HRepresentation gen_family(const FamilySpec& spec);

// Block diagonal sum.  Column labels must be disjoint; the weaker of the
// two validation levels carries over.
HRepresentation direct_sum(const HRepresentation& a, const HRepresentation& b);

// 2-sum along basepoint columns pa of a and pb of b.  Each input is
// normalized (pivot + swaps) so its basepoint column becomes e_1, then the
// glue stacks [A | 0], [x | y], [0 | B] where x, y are the normalized
// first rows.  Result: rank r1+r2-1, size n1+n2-2, validated at maximal.
// Loop or coloop basepoints and label collisions are rejected.
HRepresentation two_sum(const HRepresentation& a, int pa, const HRepresentation& b, int pb);

// .hmat text format: optional '#' comment lines, an optional
// "# labels: l1 l2 ..." line, a "rows cols" line, then one line of entry
// tokens per row.  Tokens are Eisenstein literals like 0, -1, w, 2+2w, w^4.
MatrixE read_matrix(std::istream& in, const std::string& source);
MatrixE read_matrix_file(const std::string& path);
void write_matrix(const MatrixE& m, std::ostream& out);
void write_matrix_file(const MatrixE& m, const std::string& path);

}  // namespace srujac
