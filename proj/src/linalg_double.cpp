#include <Eigen/Dense>

#include "projrig/linalg.hpp"

namespace projrig {

namespace {

Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

}  // namespace

FloatRankKernel rank_and_kernel(const Matrix<double>& m, double tol_factor) {
    FloatRankKernel out;
    const std::size_t nc = m.cols();
    if (m.rows() == 0 || nc == 0) {
        out.kernel = Matrix<double>(nc, nc);
        for (std::size_t j = 0; j < nc; ++j) out.kernel(j, j) = 1.0;
        return out;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m),
                                          Eigen::ComputeThinU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    out.singular_values.assign(sv.data(), sv.data() + sv.size());
    const double smax = sv.size() ? sv(0) : 0.0;
    out.threshold = smax * tol_factor * static_cast<double>(std::max(m.rows(), nc));
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > out.threshold) ++r;
    out.rank = r;
    const Eigen::MatrixXd& v = svd.matrixV();
    const std::size_t kdim = nc - static_cast<std::size_t>(r);
    out.kernel = Matrix<double>(nc, kdim);
    for (std::size_t j = 0; j < kdim; ++j)
        for (std::size_t i = 0; i < nc; ++i)
            out.kernel(i, j) = v(i, r + static_cast<int>(j));
    return out;
}

int span_rank(const std::vector<std::vector<double>>& rows, double tol_factor) {
    if (rows.empty()) return 0;
    Matrix<double> m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return rank_and_kernel(m, tol_factor).rank;
}

std::vector<double> lstsq_min_norm(const Matrix<double>& a, const std::vector<double>& b) {
    Eigen::VectorXd eb(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) eb(i) = b[i];
    // SVD-based pseudoinverse solve gives the minimum-norm solution for
    // rank-deficient systems, which the flex corrector relies on.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a),
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
    Eigen::VectorXd x = svd.solve(eb);
    return std::vector<double>(x.data(), x.data() + x.size());
}

}  // namespace projrig
