#include "srujac/constructions.hpp"

#include "srujac/matroid.hpp"

#include <fstream>
#include <sstream>

namespace srujac {

namespace {

const Eisenstein kOmega{0, 1};

MatrixE from_rows(std::initializer_list<std::initializer_list<Eisenstein>> rows) {
    MatrixE m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const Eisenstein& e : row) m(i, j++) = e;
        ++i;
    }
    return m;
}

}  // namespace

MatrixE u24_matrix() {
    return from_rows({{1, 0, 1, 1},
                      {0, 1, 1, kOmega}});
}

MatrixE ag23_matrix() {
    const Eisenstein w = kOmega;
    const Eisenstein wb = conj(w);
    return from_rows({{1, 0, 0, 1, 0, 1, 1, 1, 1},
                      {0, 1, 0, 1, 1, 0, wb, 1, wb},
                      {0, 0, 1, 0, 1, -w, -w, wb, wb}});
}

MatrixE t_r_matrix(std::size_t r) {
    const std::size_t n = 1 + 3 * (r - 1) + (r - 1) * (r - 2) / 2;
    MatrixE m(r, n);
    std::size_t col = 0;
    m(0, col++) = 1;
    for (std::size_t i = 0; i < r - 1; ++i) m(1 + i, col++) = 1;
    for (std::size_t i = 0; i < r - 1; ++i, ++col) {
        m(0, col) = 1;
        m(1 + i, col) = 1;
    }
    for (std::size_t i = 0; i < r - 1; ++i, ++col) {
        m(0, col) = kOmega;
        m(1 + i, col) = 1;
    }
    for (std::size_t i = 0; i < r - 1; ++i)
        for (std::size_t j = i + 1; j < r - 1; ++j, ++col) {
            m(1 + i, col) = 1;
            m(1 + j, col) = -1;
        }
    return m;
}

MatrixE whirl_matrix(std::size_t r) {
    const Eisenstein alpha = r % 2 == 0 ? kOmega : kOmega * kOmega;
    MatrixE m(r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) m(i, i) = 1;
    m(0, r) = 1;
    m(0, 2 * r - 1) = alpha;
    for (std::size_t i = 1; i < r; ++i) {
        m(i, r + i - 1) = 1;
        m(i, r + i) = 1;
    }
    return m;
}

MatrixE m1_matrix() {
    const Eisenstein w = kOmega;
    const Eisenstein w2 = w * w;
    return from_rows({{1, 0, 0, 0, -w2, w2, 1, 1},
                      {0, 1, 0, 0, w2, -w2, 0, 0},
                      {0, 0, 1, 0, 1, -1, 1, 1},
                      {0, 0, 0, 1, -w2, w, 0, 0}});
}

MatrixE m8_matrix() {
    MatrixE m(4, 15);
    const MatrixE head = m1_matrix();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 6; ++j) m(i, j) = head(i, j);
    for (std::size_t j = 6; j < 15; ++j) {
        m(0, j) = 1;
        m(2, j) = 1;
    }
    return m;
}

MatrixE k_complete_matrix(std::size_t verts) {
    // reduced incidence of K_m: drop the first vertex row
    MatrixE m(verts - 1, verts * (verts - 1) / 2);
    std::size_t col = 0;
    for (std::size_t u = 0; u < verts; ++u)
        for (std::size_t v = u + 1; v < verts; ++v, ++col) {
            if (u > 0) m(u - 1, col) = 1;
            m(v - 1, col) = -1;
        }
    return m;
}

namespace {

// full validation when the minor count fits the guard, entries otherwise
HRepresentation wrap(MatrixE m) {
    // validate before handing the matrix over, so the guard fallback still
    // has an intact copy to re-validate at the weaker level
    ValidationLevel level = ValidationLevel::full;
    ValidationReport report;
    try {
        report = validate_h_matrix(m, level);
    } catch (const std::invalid_argument&) {  // minor-count guard tripped
        level = ValidationLevel::entries;
        report = validate_h_matrix(m, level);
    }
    if (!report.ok) throw HValidationError(report);
    return HRepresentation::from_validated(std::move(m), level);
}

long long require_param(const FamilySpec& spec, long long lo, long long hi,
                        const char* what) {
    if (!spec.param)
        throw std::invalid_argument("family " + spec.name + " needs a parameter (" +
                                    std::string(what) + "), e.g. " + spec.name + ":3");
    if (*spec.param < lo || *spec.param > hi)
        throw std::invalid_argument("family " + spec.name + ": parameter " +
                                    std::to_string(*spec.param) + " out of range [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return *spec.param;
}

void forbid_param(const FamilySpec& spec) {
    if (spec.param)
        throw std::invalid_argument("family " + spec.name + " takes no parameter");
}

void relabel_sequential(MatrixE& m) {
    std::vector<int> labels(m.cols());
    std::iota(labels.begin(), labels.end(), 1);
    m.set_labels(std::move(labels));
}

HRepresentation counterexample(bool conjugate_second) {
    HRepresentation m1 = wrap(m1_matrix());
    MatrixE right = m8_matrix();
    std::vector<int> labels(right.cols());
    std::iota(labels.begin(), labels.end(), 101);
    right.set_labels(std::move(labels));
    HRepresentation m8 = wrap(std::move(right));
    if (conjugate_second) m8 = conjugate_rep(m8);
    HRepresentation glued = two_sum(m1, 1, m8, 101);
    MatrixE m = glued.matrix();
    relabel_sequential(m);
    return HRepresentation::from_validated(std::move(m), glued.level());
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    std::size_t colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (spec.name.empty()) throw std::invalid_argument("empty family name");
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        try {
            std::size_t used = 0;
            spec.param = std::stoll(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(rest);
        } catch (const std::exception&) {
            throw std::invalid_argument("family \"" + text + "\": bad parameter \"" + rest +
                                        "\"");
        }
    }
    return spec;
}

HRepresentation gen_family(const FamilySpec& spec) {
    if (spec.name == "u24") {
        forbid_param(spec);
        return wrap(u24_matrix());
    }
    if (spec.name == "ag23") {
        forbid_param(spec);
        return wrap(ag23_matrix());
    }
    if (spec.name == "ag23_del") {
        long long e = require_param(spec, 1, 9, "element to delete");
        return delete_element(wrap(ag23_matrix()), static_cast<int>(e));
    }
    if (spec.name == "t_r") {
        long long r = require_param(spec, 2, 1000, "rank");
        return wrap(t_r_matrix(static_cast<std::size_t>(r)));
    }
    if (spec.name == "whirl") {
        long long r = require_param(spec, 2, 1000, "rank");
        return wrap(whirl_matrix(static_cast<std::size_t>(r)));
    }
    if (spec.name == "counterexample_m") {
        forbid_param(spec);
        return counterexample(false);
    }
    if (spec.name == "counterexample_mprime") {
        forbid_param(spec);
        return counterexample(true);
    }
    if (spec.name == "graphic_complete") {
        long long m = require_param(spec, 2, 100, "vertex count");
        return wrap(k_complete_matrix(static_cast<std::size_t>(m)));
    }
    throw std::invalid_argument("unknown family \"" + spec.name + "\"");
}

HRepresentation direct_sum(const HRepresentation& a, const HRepresentation& b) {
    const MatrixE& x = a.matrix();
    const MatrixE& y = b.matrix();
    MatrixE m(x.rows() + y.rows(), x.cols() + y.cols());
    std::vector<int> labels;
    for (int l : x.labels()) labels.push_back(l);
    for (int l : y.labels()) labels.push_back(l);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
    try {
        m.set_labels(std::move(labels));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("direct_sum: column labels collide");
    }
    ValidationLevel level = std::min(a.level(), b.level());
    return HRepresentation::from_validated(std::move(m), level);
}

namespace {

// pivot + swaps making the column of the basepoint label equal to e_1
MatrixE normalize_basepoint(const HRepresentation& rep, int label) {
    const MatrixE& m0 = rep.matrix();
    if (rank(m0) < m0.rows())
        throw std::invalid_argument("two_sum: input is rank-deficient; restrict rows first");
    if (m0.cols() < 2)
        throw std::invalid_argument("two_sum: input needs at least 2 columns");
    std::size_t j0 = m0.position_of_label(label);
    std::size_t i0 = m0.rows();
    for (std::size_t i = 0; i < m0.rows(); ++i)
        if (!m0(i, j0).is_zero()) {
            i0 = i;
            break;
        }
    if (i0 == m0.rows())
        throw std::invalid_argument("two_sum: basepoint " + std::to_string(label) +
                                    " is a loop");
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < m0.cols(); ++j)
        if (j != j0) others.push_back(j);
    if (rank(select_columns(m0, others)) < m0.rows())
        throw std::invalid_argument("two_sum: basepoint " + std::to_string(label) +
                                    " is a coloop");

    HRepresentation r = apply_op(rep, {EquivalenceOp::Kind::pivot, i0, j0, Eisenstein{1}});
    if (i0 != 0) r = apply_op(r, {EquivalenceOp::Kind::swap_rows, 0, i0, Eisenstein{1}});
    if (j0 != 0) r = apply_op(r, {EquivalenceOp::Kind::swap_cols, 0, j0, Eisenstein{1}});
    return r.matrix();
}

}  // namespace

HRepresentation two_sum(const HRepresentation& a, int pa, const HRepresentation& b, int pb) {
    MatrixE x = normalize_basepoint(a, pa);
    MatrixE y = normalize_basepoint(b, pb);
    const std::size_t r1 = x.rows(), n1 = x.cols();
    const std::size_t r2 = y.rows(), n2 = y.cols();

    MatrixE m(r1 + r2 - 1, n1 + n2 - 2);
    std::vector<int> labels;
    for (std::size_t j = 1; j < n1; ++j) labels.push_back(x.label_at(j));
    for (std::size_t j = 1; j < n2; ++j) labels.push_back(y.label_at(j));
    // [A | 0] from the non-basepoint block of x, then the glue row
    // [x_row | y_row], then [0 | B]
    for (std::size_t i = 1; i < r1; ++i)
        for (std::size_t j = 1; j < n1; ++j) m(i - 1, j - 1) = x(i, j);
    for (std::size_t j = 1; j < n1; ++j) m(r1 - 1, j - 1) = x(0, j);
    for (std::size_t j = 1; j < n2; ++j) m(r1 - 1, n1 - 1 + j - 1) = y(0, j);
    for (std::size_t i = 1; i < r2; ++i)
        for (std::size_t j = 1; j < n2; ++j) m(r1 - 1 + i, n1 - 1 + j - 1) = y(i, j);
    try {
        m.set_labels(std::move(labels));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("two_sum: surviving column labels collide");
    }
    return HRepresentation(std::move(m), ValidationLevel::maximal);
}

namespace {

[[noreturn]] void read_fail(const std::string& source, std::size_t line,
                            const std::string& why) {
    throw std::invalid_argument(source + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

MatrixE read_matrix(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::vector<int>> labels;
    std::optional<std::pair<std::size_t, std::size_t>> dims;
    MatrixE m;
    std::size_t filled = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream is(line);
        std::string tok;
        if (!(is >> tok)) continue;  // blank
        if (tok[0] == '#') {
            std::string word;
            if (tok == "#")
                is >> word;
            else
                word = tok.substr(1);
            if (word != "labels:") continue;  // plain comment
            if (labels) read_fail(source, lineno, "duplicate labels line");
            labels.emplace();
            int l;
            while (is >> l) labels->push_back(l);
            if (!is.eof()) read_fail(source, lineno, "labels must be integers");
            continue;
        }
        if (!dims) {
            std::istringstream ds(line);
            long long r = 0, c = 0;
            std::string extra;
            if (!(ds >> r >> c) || r < 1 || c < 1 || (ds >> extra))
                read_fail(source, lineno, "expected \"rows cols\"");
            dims = {static_cast<std::size_t>(r), static_cast<std::size_t>(c)};
            m = MatrixE(dims->first, dims->second);
            continue;
        }
        if (filled == dims->first) read_fail(source, lineno, "extra row");
        std::size_t col = 0;
        std::istringstream rs(line);
        while (rs >> tok) {
            if (col == dims->second)
                read_fail(source, lineno,
                          "too many entries (expected " + std::to_string(dims->second) + ")");
            try {
                m(filled, col) = parse_eisenstein(tok);
            } catch (const std::invalid_argument& e) {
                read_fail(source, lineno, "entry " + std::to_string(col + 1) + ": " + e.what());
            }
            ++col;
        }
        if (col != dims->second)
            read_fail(source, lineno,
                      "expected " + std::to_string(dims->second) + " entries, got " +
                          std::to_string(col));
        ++filled;
    }
    if (!dims) read_fail(source, lineno, "missing \"rows cols\" line");
    if (filled != dims->first)
        read_fail(source, lineno,
                  "expected " + std::to_string(dims->first) + " rows, got " +
                      std::to_string(filled));
    if (labels) {
        try {
            m.set_labels(*labels);
        } catch (const std::invalid_argument& e) {
            read_fail(source, lineno, e.what());
        }
    }
    return m;
}

MatrixE read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_matrix(in, path);
}

void write_matrix(const MatrixE& m, std::ostream& out) {
    bool default_labels = true;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.label_at(j) != static_cast<int>(j) + 1) {
            default_labels = false;
            break;
        }
    if (!default_labels) {
        out << "# labels:";
        for (int l : m.labels()) out << ' ' << l;
        out << '\n';
    }
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << to_string(m(i, j));
        out << '\n';
    }
}

void write_matrix_file(const MatrixE& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    write_matrix(m, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace srujac
