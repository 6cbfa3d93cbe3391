#include "projrig/linalg.hpp"

#include <algorithm>

namespace projrig {

int bareiss_rank(Matrix<Rational> m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    Rational prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        // first nonzero pivot in this column (exact arithmetic: any pivot works)
        std::size_t piv = row;
        while (piv < nr && sgn(m(piv, col)) == 0) ++piv;
        if (piv == nr) continue;
        m.swap_rows(row, piv);
        const Rational p = m(row, col);
        for (std::size_t i = row + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j)
                m(i, j) = (m(i, j) * p - m(i, col) * m(row, j)) / prev;
            m(i, col) = 0;
        }
        prev = p;
        ++row;
    }
    return static_cast<int>(row);
}

std::vector<std::size_t> rref(Matrix<Rational>& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && sgn(m(piv, col)) == 0) ++piv;
        if (piv == nr) continue;
        m.swap_rows(row, piv);
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < nc; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < nc; ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

ExactRankKernel rank_and_kernel(const Matrix<Rational>& m) {
    ExactRankKernel out;
    out.rank = bareiss_rank(m);

    Matrix<Rational> r = m;
    const std::vector<std::size_t> pivots = rref(r);
    // rref and Bareiss must agree on rank; both are exact.
    if (static_cast<int>(pivots.size()) != out.rank)
        throw std::logic_error("exact rank mismatch between eliminations");

    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < nc; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    out.kernel = Matrix<Rational>(nc, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        out.kernel(fc, k) = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            out.kernel(pivots[pi], k) = -r(pi, fc);
    }
    return out;
}

int span_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    Matrix<Rational> m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return bareiss_rank(std::move(m));
}

}  // namespace projrig
