#ifndef PROJRIG_RIGIDITY_HPP
#define PROJRIG_RIGIDITY_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "projrig/linalg.hpp"
#include "projrig/realization.hpp"

namespace projrig {

// Velocity vector: (da, db) per line then (dx, dy) per point, matching the
// rigidity matrix column layout [lines block | points block].
template <class T>
using MotionVector = std::vector<T>;

// Jacobian of the incidence equations a_i x_j + b_i y_j + 1 = 0 on the
// affine chart. One row per incidence; the row for (p_j, l_i) carries
// (x_j, y_j) in l_i's column pair and (a_i, b_i) in p_j's.
template <class T>
struct RigidityMatrix {
    Matrix<T> m;
    std::shared_ptr<const IncidenceGeometry> geometry;

    std::size_t line_col(int line) const { return 2 * static_cast<std::size_t>(line); }
    std::size_t point_col(int point) const {
        return 2 * geometry->num_lines() + 2 * static_cast<std::size_t>(point);
    }
};

template <class T>
RigidityMatrix<T> build_rigidity_matrix(const Realization<T>& r) {
    const AffineChart<T> chart = affine_chart(r);
    const auto& g = *r.geometry;
    RigidityMatrix<T> rm;
    rm.geometry = r.geometry;
    rm.m = Matrix<T>(g.num_incidences(), 2 * g.num_lines() + 2 * g.num_points());
    const auto& inc = g.incidences();
    for (std::size_t row = 0; row < inc.size(); ++row) {
        const auto [p, l] = inc[row];
        rm.m(row, rm.line_col(l)) = chart.points[p].first;
        rm.m(row, rm.line_col(l) + 1) = chart.points[p].second;
        rm.m(row, rm.point_col(p)) = chart.lines[l].first;
        rm.m(row, rm.point_col(p) + 1) = chart.lines[l].second;
    }
    return rm;
}

template <class T>
struct RankKernelReport {
    int rank = 0;
    std::vector<MotionVector<T>> kernel_basis;
    // Float mode extras; empty in exact mode.
    std::vector<double> singular_values;
    double threshold = 0.0;
};

inline RankKernelReport<Rational> rank_and_kernel(const RigidityMatrix<Rational>& rm) {
    const ExactRankKernel rk = rank_and_kernel(rm.m);
    RankKernelReport<Rational> out;
    out.rank = rk.rank;
    for (std::size_t j = 0; j < rk.kernel.cols(); ++j) {
        MotionVector<Rational> v(rk.kernel.rows());
        for (std::size_t i = 0; i < rk.kernel.rows(); ++i) v[i] = rk.kernel(i, j);
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

inline RankKernelReport<double> rank_and_kernel(const RigidityMatrix<double>& rm,
                                                double tol_factor = 1e-9) {
    const FloatRankKernel rk = rank_and_kernel(rm.m, tol_factor);
    RankKernelReport<double> out;
    out.rank = rk.rank;
    out.singular_values = rk.singular_values;
    out.threshold = rk.threshold;
    for (std::size_t j = 0; j < rk.kernel.cols(); ++j) {
        MotionVector<double> v(rk.kernel.rows());
        for (std::size_t i = 0; i < rk.kernel.rows(); ++i) v[i] = rk.kernel(i, j);
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

// The eight-element basis of traceless 3x3 matrices used to generate the
// trivial (projective transformation) motions.
template <class T>
std::vector<Mat3<T>> sl3_basis() {
    auto unit = [](int i, int j) {
        Mat3<T> m{};
        for (auto& row : m) row = {T(0), T(0), T(0)};
        m[i][j] = T(1);
        return m;
    };
    auto sub = [](Mat3<T> a, const Mat3<T>& b) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a[i][j] -= b[i][j];
        return a;
    };
    return {sub(unit(0, 0), unit(2, 2)), sub(unit(1, 1), unit(2, 2)),
            unit(0, 1), unit(0, 2), unit(1, 0), unit(1, 2), unit(2, 0), unit(2, 1)};
}

// Motion induced by the infinitesimal projective transformation A: points
// follow d/dt chart(exp(tA) p), lines follow d/dt chart(exp(-tA^T) l).
template <class T>
MotionVector<T> trivial_motion(const Realization<T>& r, const Mat3<T>& a) {
    const auto& g = *r.geometry;
    MotionVector<T> v(2 * g.num_lines() + 2 * g.num_points(), T(0));
    const Mat3<T> at = mat3_transpose(a);
    for (std::size_t i = 0; i < g.num_lines(); ++i) {
        const Vec3<T>& l = r.line(static_cast<int>(i));
        const Vec3<T> lam = {l[0] / l[2], l[1] / l[2], T(1)};
        const Vec3<T> w = mat3_apply(at, lam);
        v[2 * i] = -w[0] + lam[0] * w[2];
        v[2 * i + 1] = -w[1] + lam[1] * w[2];
    }
    const std::size_t off = 2 * g.num_lines();
    for (std::size_t j = 0; j < g.num_points(); ++j) {
        const Vec3<T>& p = r.point(static_cast<int>(j));
        const Vec3<T> q = {p[0] / p[2], p[1] / p[2], T(1)};
        const Vec3<T> w = mat3_apply(a, q);
        v[off + 2 * j] = w[0] - q[0] * w[2];
        v[off + 2 * j + 1] = w[1] - q[1] * w[2];
    }
    return v;
}

template <class T>
struct TrivialMotions {
    std::vector<MotionVector<T>> vectors;  // always 8, one per sl3 basis element
    int span_dim = 0;                      // may drop below 8 for degenerate realizations
};

template <class T>
TrivialMotions<T> trivial_motion_basis(const Realization<T>& r) {
    affine_chart(r);  // propagate chart failure
    TrivialMotions<T> out;
    for (const Mat3<T>& a : sl3_basis<T>()) out.vectors.push_back(trivial_motion(r, a));
    std::vector<std::vector<T>> rows(out.vectors.begin(), out.vectors.end());
    out.span_dim = span_rank(rows);
    return out;
}

template <class T>
struct RigidityVerdict {
    std::size_t rows = 0, cols = 0;
    int rank = 0;
    int nullity = 0;
    int trivial_span = 0;
    int nontrivial_dim = 0;
    bool infinitesimally_rigid = false;
    // Static restatement: rank == 2|P| + 2|L| - 8 (meaningful when the
    // trivial span is the full 8).
    bool static_rigid = false;
    std::vector<double> singular_values;  // float mode only
};

template <class T>
RigidityVerdict<T> rigidity_verdict(const Realization<T>& r) {
    const RigidityMatrix<T> m = build_rigidity_matrix(r);
    const auto rk = rank_and_kernel(m);
    const auto triv = trivial_motion_basis(r);
    RigidityVerdict<T> v;
    v.rows = m.m.rows();
    v.cols = m.m.cols();
    v.rank = rk.rank;
    v.nullity = static_cast<int>(v.cols) - v.rank;
    v.trivial_span = triv.span_dim;
    v.nontrivial_dim = v.nullity - v.trivial_span;
    v.infinitesimally_rigid = (v.nontrivial_dim == 0);
    v.static_rigid = (v.rank == static_cast<int>(v.cols) - 8);
    v.singular_values = rk.singular_values;
    return v;
}

// Raised when the four pins contain a collinear triple.
struct PinError : std::invalid_argument {
    std::array<std::string, 3> collinear;
    explicit PinError(std::array<std::string, 3> ids)
        : std::invalid_argument("pinned points contain a collinear triple: " + ids[0] + ", " +
                                ids[1] + ", " + ids[2]),
          collinear(std::move(ids)) {}
};

template <class T>
struct PinnedMatrix {
    Matrix<T> m;
    std::vector<std::size_t> kept_cols;  // indices into the full matrix columns
    std::vector<int> pinned_points;
};

// Deletes the column pairs of four pinned points, after checking that no
// three of them are collinear (3x3 determinants of the representatives).
template <class T>
PinnedMatrix<T> pin(const RigidityMatrix<T>& rm, const Realization<T>& r,
                    const std::vector<std::string>& pin_ids) {
    if (pin_ids.size() != 4) throw std::invalid_argument("pinning requires exactly 4 points");
    std::vector<int> pins;
    for (const auto& id : pin_ids) {
        const int idx = r.geometry->point_index(id);
        if (idx < 0) throw std::invalid_argument("unknown pin point: " + id);
        pins.push_back(idx);
    }
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) {
                const Mat3<T> m = mat3_from_rows(r.point(pins[a]), r.point(pins[b]),
                                                 r.point(pins[c]));
                const T d = mat3_det(m);
                double scale = 1.0;
                if constexpr (!scalar_traits<T>::exact) {
                    scale = coord_scale(r.point(pins[a])) * coord_scale(r.point(pins[b])) *
                            coord_scale(r.point(pins[c]));
                }
                if (coord_is_zero(d, scale))
                    throw PinError({pin_ids[a], pin_ids[b], pin_ids[c]});
            }

    std::vector<bool> drop(rm.m.cols(), false);
    for (int p : pins) {
        drop[rm.point_col(p)] = true;
        drop[rm.point_col(p) + 1] = true;
    }
    PinnedMatrix<T> out;
    out.pinned_points = pins;
    for (std::size_t c = 0; c < rm.m.cols(); ++c)
        if (!drop[c]) out.kept_cols.push_back(c);
    out.m = Matrix<T>(rm.m.rows(), out.kept_cols.size());
    for (std::size_t i = 0; i < rm.m.rows(); ++i)
        for (std::size_t j = 0; j < out.kept_cols.size(); ++j)
            out.m(i, j) = rm.m(i, out.kept_cols[j]);
    return out;
}

}  // namespace projrig

#endif
