#ifndef PROJRIG_STRESS_HPP
#define PROJRIG_STRESS_HPP

#include <string>
#include <vector>

#include "projrig/rigidity.hpp"

namespace projrig {

// Stress coefficients indexed by incidence declaration order (implicitly
// zero on non-incident pairs).
template <class T>
using Stress = std::vector<T>;

namespace detail {
template <class T>
bool sum_is_zero(const Vec3<T>& s, double scale, double tol) {
    if constexpr (scalar_traits<T>::exact) {
        (void)scale;
        (void)tol;
        return sgn(s[0]) == 0 && sgn(s[1]) == 0 && sgn(s[2]) == 0;
    } else {
        const double bound = tol * (scale > 1.0 ? scale : 1.0);
        return std::abs(s[0]) <= bound && std::abs(s[1]) <= bound && std::abs(s[2]) <= bound;
    }
}
}  // namespace detail

// Basis of the left null space of the rigidity matrix (the row
// dependencies), each vector scaled so its first nonzero coefficient in
// incidence order is 1.
template <class T>
std::vector<Stress<T>> cokernel_stresses(const RigidityMatrix<T>& rm) {
    const auto rk = rank_and_kernel_of(rm.m.transposed());
    std::vector<Stress<T>> out;
    for (std::size_t j = 0; j < rk.kernel.cols(); ++j) {
        Stress<T> w(rk.kernel.rows());
        for (std::size_t i = 0; i < rk.kernel.rows(); ++i) w[i] = rk.kernel(i, j);
        // normalize first nonzero coefficient to 1
        for (std::size_t i = 0; i < w.size(); ++i) {
            if constexpr (scalar_traits<T>::exact) {
                if (sgn(w[i]) != 0) {
                    const T inv = 1 / w[i];
                    for (auto& x : w) x *= inv;
                    break;
                }
            } else {
                if (std::abs(w[i]) > 1e-12) {
                    const T inv = 1.0 / w[i];
                    for (auto& x : w) x *= inv;
                    break;
                }
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

// The homogeneous equilibrium equations: per point the weighted sum of its
// incident line representatives vanishes, per line the weighted sum of its
// incident point representatives vanishes. No chart needed; works with
// points at infinity and lines through the origin.
template <class T>
bool verify_equilibrium(const Realization<T>& r, const Stress<T>& w, double tol = 1e-8) {
    const auto& g = *r.geometry;
    if (w.size() != g.num_incidences())
        throw std::invalid_argument("stress length must equal incidence count");
    const auto& inc = g.incidences();
    // per point: sum over incident lines
    for (std::size_t p = 0; p < g.num_points(); ++p) {
        Vec3<T> s{T(0), T(0), T(0)};
        double scale = 0;
        for (std::size_t i = 0; i < inc.size(); ++i) {
            if (inc[i].first != static_cast<int>(p)) continue;
            const Vec3<T>& l = r.line(inc[i].second);
            for (int k = 0; k < 3; ++k) s[k] += w[i] * l[k];
            scale = std::max(scale,
                             std::abs(scalar_traits<T>::as_double(w[i])) * coord_scale(l));
        }
        if (!detail::sum_is_zero(s, scale, tol)) return false;
    }
    // per line: sum over incident points
    for (std::size_t l = 0; l < g.num_lines(); ++l) {
        Vec3<T> s{T(0), T(0), T(0)};
        double scale = 0;
        for (std::size_t i = 0; i < inc.size(); ++i) {
            if (inc[i].second != static_cast<int>(l)) continue;
            const Vec3<T>& p = r.point(inc[i].first);
            for (int k = 0; k < 3; ++k) s[k] += w[i] * p[k];
            scale = std::max(scale,
                             std::abs(scalar_traits<T>::as_double(w[i])) * coord_scale(p));
        }
        if (!detail::sum_is_zero(s, scale, tol)) return false;
    }
    return true;
}

// The three equivalent characterizations of a self-stress on a chart
// realization: row dependence of the rigidity matrix, the homogeneous
// equilibrium equations, and vanishing per-point/per-line coefficient sums.
struct StressEquivalence {
    bool row_dependence = false;
    bool equilibrium = false;
    bool combinatorial_sums = false;
    bool consistent() const { return row_dependence == (equilibrium && combinatorial_sums); }
    bool all_true() const { return row_dependence && equilibrium && combinatorial_sums; }
    bool all_false() const { return !row_dependence && !equilibrium && !combinatorial_sums; }
};

template <class T>
StressEquivalence chart_stress_equivalence(const RigidityMatrix<T>& rm, const Realization<T>& r,
                                           const Stress<T>& w, double tol = 1e-8) {
    affine_chart(r);  // propagate chart failure
    StressEquivalence eq;
    const std::vector<T> prod = vec_mat(w, rm.m);
    eq.row_dependence = true;
    double scale = 0;
    for (const T& x : w) scale = std::max(scale, std::abs(scalar_traits<T>::as_double(x)));
    for (const T& x : prod) {
        if constexpr (scalar_traits<T>::exact) {
            if (sgn(x) != 0) eq.row_dependence = false;
        } else {
            if (std::abs(x) > tol * std::max(1.0, scale)) eq.row_dependence = false;
        }
    }
    eq.equilibrium = verify_equilibrium(r, w, tol);

    const auto& g = *r.geometry;
    const auto& inc = g.incidences();
    eq.combinatorial_sums = true;
    auto check_sum = [&](bool by_point, std::size_t idx) {
        T s(0);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            const int key = by_point ? inc[i].first : inc[i].second;
            if (key == static_cast<int>(idx)) s += w[i];
        }
        if constexpr (scalar_traits<T>::exact)
            return sgn(s) == 0;
        else
            return std::abs(s) <= tol * std::max(1.0, scale);
    };
    for (std::size_t p = 0; eq.combinatorial_sums && p < g.num_points(); ++p)
        eq.combinatorial_sums = check_sum(true, p);
    for (std::size_t l = 0; eq.combinatorial_sums && l < g.num_lines(); ++l)
        eq.combinatorial_sums = check_sum(false, l);
    return eq;
}

// Transport of a stress along a projective transformation: the new
// coefficients are scaled by the normalization factors of the transformed
// representatives (w'_{i,j} = lambda_i * lambda_j * w_{i,j}).
template <class T>
Stress<T> transport_stress(const Realization<T>& r, const ProjectiveTransformation<T>& t,
                           const Stress<T>& w) {
    const auto& g = *r.geometry;
    std::vector<T> point_factor(g.num_points()), line_factor(g.num_lines());
    const Mat3<T> line_mat = mat3_transpose(mat3_inverse(t.matrix));
    for (std::size_t i = 0; i < g.num_points(); ++i)
        point_factor[i] = normalize_rep_factor(mat3_apply(t.matrix, r.point(static_cast<int>(i)))).second;
    for (std::size_t i = 0; i < g.num_lines(); ++i)
        line_factor[i] = normalize_rep_factor(mat3_apply(line_mat, r.line(static_cast<int>(i)))).second;
    Stress<T> out(w.size());
    const auto& inc = g.incidences();
    for (std::size_t i = 0; i < inc.size(); ++i)
        out[i] = point_factor[inc[i].first] * line_factor[inc[i].second] * w[i];
    return out;
}

// ---------------------------------------------------------------------------
// Weavings
// ---------------------------------------------------------------------------

// A directed graph on lines (none through the origin); each edge's crossing
// point must be finite. The stress unknown s_ij = -s_ji lives on edges.
template <class T>
struct Weaving {
    std::vector<Vec3<T>> lines;               // one per vertex, normalized
    std::vector<std::pair<int, int>> edges;   // directed pairs of vertex indices
};

struct WeavingError : std::runtime_error {
    std::pair<int, int> edge;
    explicit WeavingError(std::pair<int, int> e)
        : std::runtime_error("weaving edge (" + std::to_string(e.first) + ", " +
                             std::to_string(e.second) + ") joins parallel lines"),
          edge(e) {}
};

// Crossing of two lines; error when they meet at infinity.
template <class T>
Vec3<T> weaving_crossing(const Weaving<T>& w, std::size_t edge_idx) {
    const auto [i, j] = w.edges[edge_idx];
    const Vec3<T> c = cross(w.lines[i], w.lines[j]);
    if (coord_is_zero(c[2], coord_scale(c))) throw WeavingError({i, j});
    return {c[0] / c[2], c[1] / c[2], T(1)};
}

// Basis of edge scalars with s_ij = -s_ji and, at every vertex i,
// sum_j s_ij (x_ij, y_ij, 1) = 0 over all edges at i.
template <class T>
std::vector<std::vector<T>> weaving_stress_basis(const Weaving<T>& w) {
    const std::size_t ne = w.edges.size(), nv = w.lines.size();
    Matrix<T> sys(3 * nv, ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const Vec3<T> pt = weaving_crossing(w, e);
        const auto [i, j] = w.edges[e];
        for (int k = 0; k < 3; ++k) {
            sys(3 * i + k, e) += pt[k];
            sys(3 * j + k, e) -= pt[k];  // s_ji = -s_ij
        }
    }
    const auto rk = rank_and_kernel_of(sys);
    std::vector<std::vector<T>> out;
    for (std::size_t c = 0; c < rk.kernel.cols(); ++c) {
        std::vector<T> v(ne);
        for (std::size_t i = 0; i < ne; ++i) v[i] = rk.kernel(i, c);
        out.push_back(std::move(v));
    }
    return out;
}

// Restriction-of-stress check: for each line of a chart realization, the
// stress coefficients of its incidences balance the crossing points
// recomputed from line coordinates (falls back to the realized point when
// the point lies on no second line).
template <class T>
bool line_restricted_weaving_check(const Realization<T>& r, const Stress<T>& w,
                                   double tol = 1e-8) {
    const auto& g = *r.geometry;
    const auto& inc = g.incidences();
    for (std::size_t l = 0; l < g.num_lines(); ++l) {
        Vec3<T> s{T(0), T(0), T(0)};
        double scale = 0;
        for (std::size_t i = 0; i < inc.size(); ++i) {
            if (inc[i].second != static_cast<int>(l)) continue;
            const int p = inc[i].first;
            Vec3<T> pt = r.point(p);
            // recompute the crossing from any second line through p
            for (int other : g.lines_through(p)) {
                if (other == static_cast<int>(l)) continue;
                const Vec3<T> c = cross(r.line(static_cast<int>(l)), r.line(other));
                if (!coord_is_zero(c[2], coord_scale(c))) pt = {c[0] / c[2], c[1] / c[2], T(1)};
                break;
            }
            for (int k = 0; k < 3; ++k) s[k] += w[i] * pt[k];
            scale = std::max(scale,
                             std::abs(scalar_traits<T>::as_double(w[i])) * coord_scale(pt));
        }
        if (!detail::sum_is_zero(s, scale, tol)) return false;
    }
    return true;
}

}  // namespace projrig

#endif
