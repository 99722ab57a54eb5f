#include "srujac/hmatrix.hpp"

#include "srujac/snf.hpp"

#include <istream>
#include <sstream>

namespace srujac {

std::string to_string(ValidationLevel level) {
    switch (level) {
        case ValidationLevel::entries: return "entries";
        case ValidationLevel::maximal: return "maximal";
        case ValidationLevel::full: return "full";
    }
    return "?";
}

ValidationLevel parse_validation_level(const std::string& s) {
    if (s == "entries") return ValidationLevel::entries;
    if (s == "maximal") return ValidationLevel::maximal;
    if (s == "full") return ValidationLevel::full;
    throw std::invalid_argument("unknown validation level \"" + s + "\"");
}

std::string to_string(const MinorViolation& v) {
    std::ostringstream os;
    os << v.size << "x" << v.size << " minor at rows {";
    for (std::size_t t = 0; t < v.row_set.size(); ++t)
        os << (t ? "," : "") << v.row_set[t] + 1;
    os << "} cols {";
    for (std::size_t t = 0; t < v.col_set.size(); ++t)
        os << (t ? "," : "") << v.col_set[t] + 1;
    os << "} = " << to_string(v.value) << " (norm " << norm(v.value) << ")";
    return os.str();
}

namespace {

// Scan all k x k minors in lexicographic (row_set, col_set) order.
// Returns false from the visitor-style loop on the first violation.
bool scan_minors(const MatrixE& m, const std::vector<Eisenstein64>* img, std::size_t k,
                 ValidationReport& report) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    bool ok = true;
    if (img) {
        std::vector<Eisenstein64> scratch(k * k);
        detail::for_each_combination(rows, k, [&](const std::vector<std::size_t>& rs) {
            detail::for_each_combination(cols, k, [&](const std::vector<std::size_t>& cs) {
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        scratch[i * k + j] = (*img)[rs[i] * cols + cs[j]];
                Eisenstein64 d = detail::bareiss_det(scratch.data(), k);
                ++report.minors_checked;
                if (norm(d) > 1) {
                    report.violation = MinorViolation{k, rs, cs, Eisenstein{d.a, d.b}};
                    ok = false;
                }
                return ok;
            });
            return ok;
        });
        return ok;
    }
    std::vector<Eisenstein> scratch(k * k);
    detail::for_each_combination(rows, k, [&](const std::vector<std::size_t>& rs) {
        detail::for_each_combination(cols, k, [&](const std::vector<std::size_t>& cs) {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) scratch[i * k + j] = m(rs[i], cs[j]);
            Eisenstein d = detail::bareiss_det(scratch.data(), k);
            ++report.minors_checked;
            if (norm(d) > 1) {
                report.violation = MinorViolation{k, rs, cs, d};
                ok = false;
            }
            return ok;
        });
        return ok;
    });
    return ok;
}

}  // namespace

ValidationReport validate_h_matrix(const MatrixE& m, ValidationLevel level) {
    ValidationReport report;
    report.level = level;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // entry scan doubles as the k = 1 pass, in lexicographic order
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            ++report.minors_checked;
            if (!is_h_element(m(i, j))) {
                report.violation = MinorViolation{1, {i}, {j}, m(i, j)};
                return report;
            }
        }
    const std::size_t dim = std::min(rows, cols);
    if (level == ValidationLevel::entries || dim <= 1) {
        report.ok = true;
        return report;
    }

    if (level == ValidationLevel::full) {
        Int total = 0;
        for (std::size_t k = 1; k <= dim; ++k) {
            Int c = 1;
            for (std::size_t i = 1; i <= k; ++i) c = c * Int(rows - k + i) / Int(i);
            Int c2 = 1;
            for (std::size_t i = 1; i <= k; ++i) c2 = c2 * Int(cols - k + i) / Int(i);
            total += c * c2;
        }
        if (total > kFullMinorGuard) {
            std::ostringstream os;
            os << "full validation would enumerate " << total << " minors (guard "
               << kFullMinorGuard << "); use maximal mode";
            throw std::invalid_argument(os.str());
        }
    }

    // All entries are in H, so every intermediate Bareiss value is a minor:
    // bounded by dim^(dim/2), int64-safe through dim = 15.
    std::vector<Eisenstein64> img;
    const bool small = dim <= 15;
    if (small) img = detail::small_image(m);

    if (level == ValidationLevel::maximal) {
        if (!scan_minors(m, small ? &img : nullptr, dim, report)) return report;
    } else {
        for (std::size_t k = 2; k <= dim; ++k)
            if (!scan_minors(m, small ? &img : nullptr, k, report)) return report;
    }
    report.ok = true;
    return report;
}

HValidationError::HValidationError(const ValidationReport& r)
    : std::runtime_error(r.violation ? "H-validation failed: " + to_string(*r.violation)
                                     : "H-validation failed"),
      report(r) {}

HRepresentation::HRepresentation(MatrixE m, ValidationLevel level)
    : m_(std::move(m)), level_(level) {
    ValidationReport r = validate_h_matrix(m_, level);
    if (!r.ok) throw HValidationError(r);
}

HRepresentation::HRepresentation(trusted_tag, MatrixE m, ValidationLevel level)
    : m_(std::move(m)), level_(level) {}

HRepresentation HRepresentation::from_validated(MatrixE m, ValidationLevel level) {
    return {trusted_tag{}, std::move(m), level};
}

namespace {

void check_row(const MatrixE& m, std::size_t i) {
    if (i >= m.rows())
        throw std::out_of_range("row index " + std::to_string(i + 1) + " out of range");
}

void check_col(const MatrixE& m, std::size_t j) {
    if (j >= m.cols())
        throw std::out_of_range("column index " + std::to_string(j + 1) + " out of range");
}

}  // namespace

HRepresentation apply_op(const HRepresentation& rep, const EquivalenceOp& op) {
    MatrixE m = rep.matrix();
    switch (op.kind) {
        case EquivalenceOp::Kind::scale_row: {
            check_row(m, op.i);
            if (!is_unit(op.unit))
                throw std::invalid_argument("scale_row: " + to_string(op.unit) +
                                            " is not a unit");
            for (std::size_t j = 0; j < m.cols(); ++j) m(op.i, j) = op.unit * m(op.i, j);
            break;
        }
        case EquivalenceOp::Kind::scale_col: {
            check_col(m, op.j);
            if (!is_unit(op.unit))
                throw std::invalid_argument("scale_col: " + to_string(op.unit) +
                                            " is not a unit");
            for (std::size_t i = 0; i < m.rows(); ++i) m(i, op.j) = op.unit * m(i, op.j);
            break;
        }
        case EquivalenceOp::Kind::swap_rows:
            check_row(m, op.i);
            check_row(m, op.j);
            m.swap_rows(op.i, op.j);
            break;
        case EquivalenceOp::Kind::swap_cols:
            check_col(m, op.i);
            check_col(m, op.j);
            m.swap_columns(op.i, op.j);  // labels travel with the columns
            break;
        case EquivalenceOp::Kind::pivot: {
            check_row(m, op.i);
            check_col(m, op.j);
            const Eisenstein e = m(op.i, op.j);
            if (e.is_zero()) throw std::invalid_argument("pivot on zero entry");
            if (!is_unit(e))
                throw std::invalid_argument("pivot entry " + to_string(e) + " is not a unit");
            const Eisenstein inv = conj(e);  // e^-1 for a unit
            for (std::size_t j = 0; j < m.cols(); ++j) m(op.i, j) = inv * m(op.i, j);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (i == op.i || m(i, op.j).is_zero()) continue;
                const Eisenstein f = m(i, op.j);
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m(i, j) -= f * m(op.i, j);
            }
            break;
        }
    }
    return HRepresentation::from_validated(std::move(m), rep.level());
}

HRepresentation apply_ops(const HRepresentation& rep, const std::vector<EquivalenceOp>& ops) {
    HRepresentation r = rep;
    for (const EquivalenceOp& op : ops) r = apply_op(r, op);
    return r;
}

HRepresentation conjugate_rep(const HRepresentation& rep) {
    MatrixE m = rep.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = conj(m(i, j));
    return HRepresentation::from_validated(std::move(m), rep.level());
}

EquivalenceOp parse_op(const std::string& line) {
    std::istringstream is(line);
    std::string name;
    if (!(is >> name)) throw std::invalid_argument("empty op line");
    auto read_index = [&](const char* what) -> std::size_t {
        long long v;
        if (!(is >> v) || v < 1)
            throw std::invalid_argument("op \"" + line + "\": expected 1-based " +
                                        std::string(what));
        return static_cast<std::size_t>(v - 1);
    };
    auto read_unit = [&]() -> Eisenstein {
        std::string tok;
        if (!(is >> tok)) throw std::invalid_argument("op \"" + line + "\": expected a unit");
        return parse_eisenstein(tok);
    };
    auto finish = [&](EquivalenceOp op) {
        std::string extra;
        if (is >> extra)
            throw std::invalid_argument("op \"" + line + "\": trailing token \"" + extra + "\"");
        return op;
    };
    if (name == "scale_row") {
        std::size_t i = read_index("row");
        return finish({EquivalenceOp::Kind::scale_row, i, 0, read_unit()});
    }
    if (name == "scale_col") {
        std::size_t j = read_index("column");
        return finish({EquivalenceOp::Kind::scale_col, 0, j, read_unit()});
    }
    if (name == "swap_rows") {
        std::size_t i = read_index("row");
        std::size_t j = read_index("row");
        return finish({EquivalenceOp::Kind::swap_rows, i, j, Eisenstein{1}});
    }
    if (name == "swap_cols") {
        std::size_t i = read_index("column");
        std::size_t j = read_index("column");
        return finish({EquivalenceOp::Kind::swap_cols, i, j, Eisenstein{1}});
    }
    if (name == "pivot") {
        std::size_t i = read_index("row");
        std::size_t j = read_index("column");
        return finish({EquivalenceOp::Kind::pivot, i, j, Eisenstein{1}});
    }
    throw std::invalid_argument("unknown op \"" + name + "\"");
}

std::vector<EquivalenceOp> parse_op_script(std::istream& in) {
    std::vector<EquivalenceOp> ops;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        ops.push_back(parse_op(line.substr(pos)));
    }
    return ops;
}

std::string to_string(const EquivalenceOp& op) {
    std::ostringstream os;
    switch (op.kind) {
        case EquivalenceOp::Kind::scale_row:
            os << "scale_row " << op.i + 1 << ' ' << to_string(op.unit);
            break;
        case EquivalenceOp::Kind::scale_col:
            os << "scale_col " << op.j + 1 << ' ' << to_string(op.unit);
            break;
        case EquivalenceOp::Kind::swap_rows:
            os << "swap_rows " << op.i + 1 << ' ' << op.j + 1;
            break;
        case EquivalenceOp::Kind::swap_cols:
            os << "swap_cols " << op.i + 1 << ' ' << op.j + 1;
            break;
        case EquivalenceOp::Kind::pivot:
            os << "pivot " << op.i + 1 << ' ' << op.j + 1;
            break;
    }
    return os.str();
}

}  // namespace srujac
