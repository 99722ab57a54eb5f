#include "srujac/matrix.hpp"

namespace srujac {

MatrixQw inverse(const MatrixQw& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    MatrixQw a = m;
    MatrixQw inv = MatrixQw::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        if (p != k) {
            a.swap_rows(p, k);
            inv.swap_rows(p, k);
        }
        const EisensteinRational scale = inverse(a(k, k));
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) = scale * a(k, j);
            inv(k, j) = scale * inv(k, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            const EisensteinRational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(k, j);
                inv(i, j) = inv(i, j) - f * inv(k, j);
            }
        }
    }
    return inv;
}

}  // namespace srujac
