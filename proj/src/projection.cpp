#include "srujac/projection.hpp"

#include "srujac/jacobian.hpp"
#include "srujac/matroid.hpp"

namespace srujac {

MatrixQw projector(const HRepresentation& rep) {
    MatrixQw m = to_rational(rep.matrix());
    if (rank(rep.matrix()) < rep.rows())
        throw std::invalid_argument("projector: matrix is rank-deficient; restrict rows first");
    MatrixQw mh = conj_transpose(m);
    MatrixQw p = mh * inverse(m * mh) * m;
    p.set_labels(rep.matrix().labels());
    return p;
}

AveragingResult averaging_matrix(const HRepresentation& rep) {
    Eisenstein d = det(laplacian(rep));
    if (d.b != 0 || d.a <= 0) throw std::logic_error("averaging_matrix: bad basis count");
    if (d.a > kAveragingGate)
        throw std::invalid_argument("averaging_matrix: " + to_string(d) +
                                    " bases exceed the averaging gate of " +
                                    std::to_string(kAveragingGate));

    const std::size_t n = rep.cols();
    MatrixE sum(n, n);
    sum.set_labels(rep.matrix().labels());
    std::vector<std::vector<int>> bases = enumerate_bases(rep);
    for (const std::vector<int>& b : bases) sum = sum + n_b_matrix(rep, b);

    AveragingResult result{std::move(sum), d.a};
    if (!is_hermitian(result.n)) throw std::logic_error("averaging_matrix: N is not Hermitian");
    MatrixQw scaled = EisensteinRational{Rat(result.kappa)} * projector(rep);
    if (!(to_rational(result.n) == scaled))
        throw std::logic_error("averaging_matrix: N != kappa * P");
    return result;
}

DualMembership dual_membership(const HRepresentation& rep,
                               const std::vector<EisensteinRational>& v) {
    const MatrixE& m = rep.matrix();
    if (v.size() != m.cols()) throw std::invalid_argument("dual_membership: vector length");
    MatrixQw m_q = to_rational(m);
    const std::size_t r = m.rows();

    DualMembership d;
    std::vector<std::size_t> basis_pos;
    for (std::size_t j = 0; j < m.cols() && basis_pos.size() < r; ++j) {
        std::vector<std::size_t> cand = basis_pos;
        cand.push_back(j);
        if (rank(select_columns(m, cand)) == cand.size()) basis_pos = std::move(cand);
    }
    if (basis_pos.size() < r)
        throw std::invalid_argument("dual_membership: matrix is rank-deficient");
    std::vector<EisensteinRational> vj(r);
    for (std::size_t t = 0; t < r; ++t) vj[t] = v[basis_pos[t]];
    std::vector<EisensteinRational> z = vec_mat(vj, inverse(select_columns(m, basis_pos)));
    std::vector<EisensteinRational> back = vec_mat(z, m_q);
    d.in_row_space = back == v;
    if (d.in_row_space) d.coefficients = std::move(z);

    d.integral_pairing = true;
    for (const EisensteinRational& x : vec_mat(v, conj_transpose(m_q)))
        if (!is_integral(x)) {
            d.integral_pairing = false;
            break;
        }
    d.member = d.in_row_space && d.integral_pairing;
    return d;
}

}  // namespace srujac
