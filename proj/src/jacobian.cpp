#include "srujac/jacobian.hpp"

#include <sstream>

namespace srujac {

MatrixE laplacian(const HRepresentation& rep) {
    const MatrixE& m = rep.matrix();
    if (rank(m) < m.rows())
        throw std::invalid_argument("laplacian: matrix is rank-deficient; restrict rows first");
    return m * conj_transpose(m);
}

JacobianE jacobian_of(const HRepresentation& rep) {
    HRepresentation r = rep;
    if (rank(rep.matrix()) < rep.rows())
        r = HRepresentation::from_validated(full_row_rank_restriction(rep.matrix()),
                                            rep.level());
    MatrixE l = laplacian(r);
    SnfResult<Eisenstein> s = snf(l);
    if (!snf_is_consistent(l, s)) throw std::logic_error("jacobian_of: SNF self-check failed");
    JacobianE j{std::move(r), std::move(l), std::move(s), {}, {}, Int(1)};
    j.divisors = j.snf.divisors;
    for (const Eisenstein& d : j.divisors) {
        if (d.is_zero()) throw std::logic_error("jacobian_of: singular Laplacian");
        j.order *= norm(d);
        if (norm(d) > 1) j.nontrivial.push_back(d);
    }
    return j;
}

std::vector<Int> abelianize(const std::vector<Eisenstein>& divisors) {
    std::vector<Int> factors;
    for (const Eisenstein& alpha : divisors) {
        if (alpha.is_zero())
            throw std::invalid_argument("abelianize: zero divisor gives an infinite group");
        if (norm(alpha) == 1) continue;
        // multiplication by alpha on the basis {1, w}:
        // alpha*1 = a + bw, alpha*w = -b + (a+b)w
        MatrixZ mult(2, 2);
        mult(0, 0) = alpha.a;
        mult(0, 1) = -alpha.b;
        mult(1, 0) = alpha.b;
        mult(1, 1) = alpha.a + alpha.b;
        for (const Int& d : snf(mult).divisors)
            if (d > 1) factors.push_back(d);
    }
    if (factors.size() <= 1) return factors;
    // merge the cyclic factors into one invariant chain
    MatrixZ diag(factors.size(), factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) diag(i, i) = factors[i];
    std::vector<Int> chain;
    for (const Int& d : snf(diag).divisors)
        if (d > 1) chain.push_back(d);
    return chain;
}

std::string group_string(const std::vector<Eisenstein>& nontrivial) {
    if (nontrivial.empty()) return "trivial";
    std::string s;
    for (const Eisenstein& d : nontrivial) {
        if (!s.empty()) s += " + ";
        s += "E/(" + to_string(d) + ")";
    }
    return s;
}

std::string abelian_string(const std::vector<Int>& factors) {
    if (factors.empty()) return "trivial";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i)
        os << (i ? " + " : "") << "Z/" << factors[i];
    return os.str();
}

bool in_lambda(const HRepresentation& rep, const std::vector<Eisenstein>& v) {
    std::vector<Eisenstein> p = vec_mat(v, conj_transpose(rep.matrix()));
    for (const Eisenstein& x : p)
        if (!x.is_zero()) return false;
    return true;
}

SpanWitness in_lambda_star(const HRepresentation& rep, const std::vector<Eisenstein>& v) {
    MatrixE m = rep.matrix();
    if (rank(m) < m.rows()) m = full_row_rank_restriction(m);
    if (v.size() != m.cols()) throw std::invalid_argument("in_lambda_star: vector length");
    const std::size_t r = m.rows();

    // greedy leftmost independent columns make an invertible r x r block
    std::vector<std::size_t> basis_pos;
    for (std::size_t j = 0; j < m.cols() && basis_pos.size() < r; ++j) {
        std::vector<std::size_t> cand = basis_pos;
        cand.push_back(j);
        if (rank(select_columns(m, cand)) == cand.size()) basis_pos = std::move(cand);
    }
    MatrixQw inv = inverse(select_columns(m, basis_pos));
    std::vector<EisensteinRational> vj(r);
    for (std::size_t t = 0; t < r; ++t) vj[t] = to_rational(v[basis_pos[t]]);
    std::vector<EisensteinRational> z = vec_mat(vj, inv);

    MatrixQw m_q = to_rational(m);
    std::vector<EisensteinRational> back = vec_mat(z, m_q);
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!(back[j] == to_rational(v[j]))) return {};
    SpanWitness w;
    w.member = true;
    for (const EisensteinRational& x : z) {
        auto e = to_integral(x);
        if (!e) return {};  // in the row space over Q(w) but not over E
        w.coefficients.push_back(*e);
    }
    return w;
}

std::vector<Eisenstein> jacobian_class(const JacobianE& j, const std::vector<Eisenstein>& v) {
    const MatrixE& m = j.rep.matrix();
    if (v.size() != m.cols()) throw std::invalid_argument("jacobian_class: vector length");
    std::vector<Eisenstein> p = vec_mat(v, conj_transpose(m));
    std::vector<Eisenstein> y = vec_mat(p, j.snf.t);
    std::vector<Eisenstein> cls(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        cls[i] = canonical_residue(y[i], j.divisors[i]);
    return cls;
}

DoublingReport regular_doubling(const MatrixE& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Eisenstein& e = m(i, j);
            if (e.b != 0 || e.a < -1 || e.a > 1)
                throw std::invalid_argument("regular_doubling: entries must be 0 or +-1");
        }
    HRepresentation rep(m, ValidationLevel::maximal);  // TU failures surface here
    if (rank(m) < m.rows())
        throw std::invalid_argument("regular_doubling: matrix is rank-deficient");

    MatrixZ mz(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mz(i, j) = m(i, j).a;
    MatrixZ g = mz * conj_transpose(mz);

    DoublingReport rpt;
    rpt.tree_count = det(g);
    for (const Int& d : snf(g).divisors)
        if (d > 1) rpt.z_factors.push_back(d);
    for (const Int& d : rpt.z_factors) {
        rpt.doubled.push_back(d);
        rpt.doubled.push_back(d);
    }
    rpt.abelianized = abelianize(jacobian_of(rep));
    rpt.match = rpt.doubled == rpt.abelianized;
    return rpt;
}

}  // namespace srujac
