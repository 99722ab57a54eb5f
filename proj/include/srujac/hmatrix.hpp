#pragma once

#include "srujac/matrix.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace srujac {

// entries:  every entry has norm 0 or 1 (always enforced on construction)
// maximal:  additionally every min(r,c) x min(r,c) subdeterminant is in H
// full:     every k x k subdeterminant is in H
enum class ValidationLevel { entries, maximal, full };

std::string to_string(ValidationLevel level);
ValidationLevel parse_validation_level(const std::string& s);

struct MinorViolation {
    std::size_t size;                  // k
    std::vector<std::size_t> row_set;  // 0-based positions, ascending
    std::vector<std::size_t> col_set;
    Eisenstein value;
};

struct ValidationReport {
    bool ok = false;
    ValidationLevel level = ValidationLevel::entries;
    std::uint64_t minors_checked = 0;
    std::optional<MinorViolation> violation;  // lexicographically first in (k, rows, cols)
};

// "2x2 minor at rows {1,2} cols {3,4} = -2 (norm 4)", 1-based index sets
std::string to_string(const MinorViolation& v);

// Full mode enumerates every minor; refuse inputs where that exceeds this.
inline constexpr std::uint64_t kFullMinorGuard = 5'000'000;

ValidationReport validate_h_matrix(const MatrixE& m, ValidationLevel level);

struct HValidationError : std::runtime_error {
    explicit HValidationError(const ValidationReport& r);
    ValidationReport report;
};

// A matrix whose square submatrices all have determinants in
// H = {0, sixth roots of unity}, to the recorded validation level.
class HRepresentation {
public:
    HRepresentation(MatrixE m, ValidationLevel level);  // validates; throws HValidationError

    // Wraps without re-validating; for results of operations that
    // preserve the H-matrix property by construction.
    static HRepresentation from_validated(MatrixE m, ValidationLevel level);

    const MatrixE& matrix() const { return m_; }
    ValidationLevel level() const { return level_; }
    std::size_t rows() const { return m_.rows(); }
    std::size_t cols() const { return m_.cols(); }

private:
    struct trusted_tag {};
    HRepresentation(trusted_tag, MatrixE m, ValidationLevel level);

    MatrixE m_;
    ValidationLevel level_;
};

struct EquivalenceOp {
    enum class Kind { scale_row, scale_col, swap_rows, swap_cols, pivot };
    Kind kind;
    std::size_t i = 0;   // row index (scale_row, swap_rows, pivot)
    std::size_t j = 0;   // column index (scale_col, swap_cols, pivot); second row for swap_rows
    Eisenstein unit{1};  // scale factor; must be a unit
};

// All ops preserve the represented matroid and the Jacobian.  Scaling by a
// non-unit, pivoting on a zero entry, or an out-of-range index throws.
HRepresentation apply_op(const HRepresentation& rep, const EquivalenceOp& op);
HRepresentation apply_ops(const HRepresentation& rep, const std::vector<EquivalenceOp>& ops);

HRepresentation conjugate_rep(const HRepresentation& rep);

// Script lines use 1-based indices:
//   scale_row 2 w^3
//   scale_col 4 -w
//   swap_rows 1 2
//   swap_cols 1 5
//   pivot 3 7
EquivalenceOp parse_op(const std::string& line);
std::vector<EquivalenceOp> parse_op_script(std::istream& in);
std::string to_string(const EquivalenceOp& op);

}  // namespace srujac
