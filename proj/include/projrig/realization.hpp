#ifndef PROJRIG_REALIZATION_HPP
#define PROJRIG_REALIZATION_HPP

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "projrig/geometry.hpp"
#include "projrig/projective.hpp"

namespace projrig {

// Raised when an operation needs the affine chart (z = 1 for points,
// c = 1 for lines) and some element fails it.
struct ChartError : std::runtime_error {
    enum class Kind { PointAtInfinity, LineThroughOrigin };
    Kind kind;
    std::string element_id;
    ChartError(Kind k, std::string id)
        : std::runtime_error((k == Kind::PointAtInfinity ? "point at infinity: "
                                                         : "line through origin: ") +
                             id),
          kind(k),
          element_id(std::move(id)) {}
};

// Homogeneous coordinates for a geometry's points and lines, stored as
// normalized representatives (last nonzero coordinate 1). Immutable value.
template <class T>
struct Realization {
    std::shared_ptr<const IncidenceGeometry> geometry;
    std::vector<Vec3<T>> point_coords;  // indexed like geometry->point_ids()
    std::vector<Vec3<T>> line_coords;
    double tolerance = 1e-9;  // relative incidence tolerance (float mode only)

    static Realization create(std::shared_ptr<const IncidenceGeometry> g,
                              std::vector<Vec3<T>> points, std::vector<Vec3<T>> lines,
                              double tolerance = 1e-9) {
        if (points.size() != g->num_points() || lines.size() != g->num_lines())
            throw std::invalid_argument("realization coordinate count mismatch");
        Realization r;
        r.geometry = std::move(g);
        r.tolerance = tolerance;
        r.point_coords.reserve(points.size());
        r.line_coords.reserve(lines.size());
        for (auto& v : points) r.point_coords.push_back(normalize_rep(v));
        for (auto& v : lines) r.line_coords.push_back(normalize_rep(v));
        return r;
    }

    const Vec3<T>& point(int i) const { return point_coords[i]; }
    const Vec3<T>& line(int i) const { return line_coords[i]; }
};

// Violated incidences (indices into geometry->incidences()).
template <class T>
std::vector<int> verify(const Realization<T>& r) {
    std::vector<int> bad;
    const auto& inc = r.geometry->incidences();
    for (std::size_t i = 0; i < inc.size(); ++i) {
        const Vec3<T>& p = r.point(inc[i].first);
        const Vec3<T>& l = r.line(inc[i].second);
        const T prod = dot(l, p);
        if constexpr (scalar_traits<T>::exact) {
            if (sgn(prod) != 0) bad.push_back(static_cast<int>(i));
        } else {
            double np = 0, nl = 0;
            for (int k = 0; k < 3; ++k) {
                np = std::max(np, std::abs(p[k]));
                nl = std::max(nl, std::abs(l[k]));
            }
            if (std::abs(prod) > r.tolerance * std::max(1.0, nl * np))
                bad.push_back(static_cast<int>(i));
        }
    }
    return bad;
}

template <class T>
Realization<T> apply_transform(const Realization<T>& r, const ProjectiveTransformation<T>& t) {
    Realization<T> out;
    out.geometry = r.geometry;
    out.tolerance = r.tolerance;
    out.point_coords.reserve(r.point_coords.size());
    out.line_coords.reserve(r.line_coords.size());
    const Mat3<T> line_mat = mat3_transpose(mat3_inverse(t.matrix));
    for (const auto& p : r.point_coords)
        out.point_coords.push_back(normalize_rep(mat3_apply(t.matrix, p)));
    for (const auto& l : r.line_coords)
        out.line_coords.push_back(normalize_rep(mat3_apply(line_mat, l)));
    return out;
}

struct DegeneracyReport {
    std::vector<std::pair<std::string, std::string>> coincident_points;
    std::vector<std::pair<std::string, std::string>> coincident_lines;
    std::vector<std::string> points_at_infinity;   // z = 0
    std::vector<std::string> lines_through_origin;  // c = 0
    bool clean() const {
        return coincident_points.empty() && coincident_lines.empty() &&
               points_at_infinity.empty() && lines_through_origin.empty();
    }
};

template <class T>
DegeneracyReport degeneracy_report(const Realization<T>& r, double coincidence_tol = 1e-7) {
    DegeneracyReport rep;
    const auto& g = *r.geometry;
    for (std::size_t i = 0; i < g.num_points(); ++i)
        for (std::size_t j = i + 1; j < g.num_points(); ++j)
            if (projectively_equal(r.point(static_cast<int>(i)), r.point(static_cast<int>(j)),
                                   coincidence_tol))
                rep.coincident_points.emplace_back(g.point_ids()[i], g.point_ids()[j]);
    for (std::size_t i = 0; i < g.num_lines(); ++i)
        for (std::size_t j = i + 1; j < g.num_lines(); ++j)
            if (projectively_equal(r.line(static_cast<int>(i)), r.line(static_cast<int>(j)),
                                   coincidence_tol))
                rep.coincident_lines.emplace_back(g.line_ids()[i], g.line_ids()[j]);
    for (std::size_t i = 0; i < g.num_points(); ++i) {
        const auto& p = r.point(static_cast<int>(i));
        if (coord_is_zero(p[2], coord_scale(p))) rep.points_at_infinity.push_back(g.point_ids()[i]);
    }
    for (std::size_t i = 0; i < g.num_lines(); ++i) {
        const auto& l = r.line(static_cast<int>(i));
        if (coord_is_zero(l[2], coord_scale(l))) rep.lines_through_origin.push_back(g.line_ids()[i]);
    }
    return rep;
}

// Chart coordinates: (x, y) per point and (a, b) per line; defined only
// when every point is finite and no line passes through the origin.
template <class T>
struct AffineChart {
    std::vector<std::pair<T, T>> points;
    std::vector<std::pair<T, T>> lines;
};

template <class T>
AffineChart<T> affine_chart(const Realization<T>& r) {
    AffineChart<T> chart;
    const auto& g = *r.geometry;
    for (std::size_t i = 0; i < g.num_points(); ++i) {
        const auto& p = r.point(static_cast<int>(i));
        if (coord_is_zero(p[2], coord_scale(p)))
            throw ChartError(ChartError::Kind::PointAtInfinity, g.point_ids()[i]);
        chart.points.emplace_back(p[0] / p[2], p[1] / p[2]);
    }
    for (std::size_t i = 0; i < g.num_lines(); ++i) {
        const auto& l = r.line(static_cast<int>(i));
        if (coord_is_zero(l[2], coord_scale(l)))
            throw ChartError(ChartError::Kind::LineThroughOrigin, g.line_ids()[i]);
        chart.lines.emplace_back(l[0] / l[2], l[1] / l[2]);
    }
    return chart;
}

template <class T>
bool has_affine_chart(const Realization<T>& r) {
    try {
        affine_chart(r);
        return true;
    } catch (const ChartError&) {
        return false;
    }
}

inline Realization<double> to_float(const Realization<Rational>& r, double tolerance = 1e-9) {
    Realization<double> out;
    out.geometry = r.geometry;
    out.tolerance = tolerance;
    for (const auto& p : r.point_coords)
        out.point_coords.push_back({p[0].get_d(), p[1].get_d(), p[2].get_d()});
    for (const auto& l : r.line_coords)
        out.line_coords.push_back({l[0].get_d(), l[1].get_d(), l[2].get_d()});
    return out;
}

inline const Realization<double>& to_float(const Realization<double>& r) { return r; }

// Chart remedy: seeded random small-integer projective transformations,
// retried until the image has a chart and no coincidences beyond those
// already present. Returns the transform used alongside the image.
template <class T>
std::pair<Realization<T>, ProjectiveTransformation<T>> auto_chart_remedy(
    const Realization<T>& r, unsigned seed, int max_tries = 100) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    const std::size_t before = degeneracy_report(r).coincident_points.size() +
                               degeneracy_report(r).coincident_lines.size();
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Mat3<T> m{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = T(entry(rng));
        if (coord_is_zero(mat3_det(m), 27.0)) continue;
        auto t = ProjectiveTransformation<T>{m};
        Realization<T> img = apply_transform(r, t);
        if (!has_affine_chart(img)) continue;
        const auto rep = degeneracy_report(img);
        if (rep.coincident_points.size() + rep.coincident_lines.size() > before) continue;
        return {std::move(img), t};
    }
    throw std::runtime_error("auto-chart remedy failed after retries");
}

}  // namespace projrig

#endif
