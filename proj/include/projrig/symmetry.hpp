#ifndef PROJRIG_SYMMETRY_HPP
#define PROJRIG_SYMMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "projrig/rigidity.hpp"

namespace projrig {

// An orthogonal collineation or polarity. Orthogonality makes the point
// and line actions coincide: both classes transform by plain application
// of the matrix, the polarity flag only swaps which class the image lives
// in. Matrices are stored sign-canonicalized (first nonzero entry > 0)
// since they represent projective elements.
template <class T>
struct Correlation {
    Mat3<T> matrix;
    bool is_polarity = false;
};

namespace detail {

template <class T>
Mat3<T> canonical_sign(Mat3<T> m) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double a = scalar_traits<T>::as_double(m[i][j]);
            if (std::abs(a) > 1e-9) {
                if (a < 0)
                    for (auto& row : m)
                        for (auto& x : row) x = -x;
                return m;
            }
        }
    return m;
}

template <class T>
bool mat3_close(const Mat3<T>& a, const Mat3<T>& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if constexpr (scalar_traits<T>::exact) {
                if (a[i][j] != b[i][j]) return false;
            } else {
                if (std::abs(a[i][j] - b[i][j]) > 1e-9) return false;
            }
        }
    return true;
}

}  // namespace detail

// Finite group of correlations, closed under composition and inverse.
template <class T>
class CorrelationGroup {
public:
    // Builds the closure of the generators (identity always included).
    // Throws if a generator is not orthogonal or the closure exceeds cap.
    static CorrelationGroup closure(const std::vector<Correlation<T>>& generators,
                                    std::size_t cap = 120) {
        CorrelationGroup g;
        g.elems_.push_back({mat3_identity<T>(), false});
        for (const auto& gen : generators) {
            if (!mat3_is_orthogonal(gen.matrix))
                throw std::invalid_argument("correlation group matrices must be orthogonal");
            g.add({detail::canonical_sign(gen.matrix), gen.is_polarity});
        }
        // products until closed
        bool grew = true;
        while (grew) {
            grew = false;
            const std::size_t n = g.elems_.size();
            for (std::size_t i = 0; i < n && !grew; ++i)
                for (std::size_t j = 0; j < n && !grew; ++j) {
                    Correlation<T> c{detail::canonical_sign(
                                         mat3_mul(g.elems_[i].matrix, g.elems_[j].matrix)),
                                     g.elems_[i].is_polarity != g.elems_[j].is_polarity};
                    if (g.find(c) < 0) {
                        if (g.elems_.size() >= cap)
                            throw std::runtime_error("correlation group closure exceeds cap");
                        g.elems_.push_back(std::move(c));
                        grew = true;
                    }
                }
        }
        g.build_tables();
        return g;
    }

    std::size_t size() const { return elems_.size(); }
    const Correlation<T>& element(int i) const { return elems_[i]; }
    const std::vector<Correlation<T>>& elements() const { return elems_; }
    int compose(int i, int j) const { return table_[i][j]; }
    int inverse(int i) const { return inverse_[i]; }
    const std::vector<std::vector<int>>& composition_table() const { return table_; }

    int find(const Correlation<T>& c) const {
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i].is_polarity == c.is_polarity &&
                detail::mat3_close(elems_[i].matrix, detail::canonical_sign(c.matrix)))
                return static_cast<int>(i);
        return -1;
    }

private:
    void add(Correlation<T> c) {
        if (find(c) < 0) elems_.push_back(std::move(c));
    }

    void build_tables() {
        const std::size_t n = elems_.size();
        table_.assign(n, std::vector<int>(n, -1));
        inverse_.assign(n, -1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Correlation<T> c{detail::canonical_sign(
                                     mat3_mul(elems_[i].matrix, elems_[j].matrix)),
                                 elems_[i].is_polarity != elems_[j].is_polarity};
                const int k = find(c);
                if (k < 0) throw std::logic_error("correlation group not closed");
                table_[i][j] = k;
                if (k == 0) inverse_[i] = static_cast<int>(j);
            }
        for (std::size_t i = 0; i < n; ++i)
            if (inverse_[i] < 0) throw std::logic_error("correlation group missing inverse");
    }

    std::vector<Correlation<T>> elems_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
};

// Elements of the configuration are indexed 0..P-1 (points) then
// P..P+L-1 (lines).
struct ElementIndexing {
    std::size_t num_points = 0, num_lines = 0;
    std::size_t count() const { return num_points + num_lines; }
    bool is_point(int e) const { return e < static_cast<int>(num_points); }
    int line_of(int e) const { return e - static_cast<int>(num_points); }
    int element_of_line(int l) const { return static_cast<int>(num_points) + l; }
};

// How a correlation group acts on a realized configuration: the induced
// permutations of elements and incidences, when the action preserves both.
template <class T>
struct GroupAction {
    bool preserves = false;
    ElementIndexing idx;
    // element_perm[g][e] = image element, incidence_perm[g][i] = image incidence
    std::vector<std::vector<int>> element_perm;
    std::vector<std::vector<int>> incidence_perm;
};

template <class T>
const Vec3<T>& element_coords(const Realization<T>& r, const ElementIndexing& idx, int e) {
    return idx.is_point(e) ? r.point(e) : r.line(idx.line_of(e));
}

template <class T>
GroupAction<T> check_group_preserves(const Realization<T>& r, const CorrelationGroup<T>& grp,
                                     double tol = 1e-7) {
    GroupAction<T> act;
    act.idx = {r.geometry->num_points(), r.geometry->num_lines()};
    const std::size_t ne = act.idx.count();
    const auto& inc = r.geometry->incidences();

    for (std::size_t gi = 0; gi < grp.size(); ++gi) {
        const Correlation<T>& c = grp.element(static_cast<int>(gi));
        std::vector<int> perm(ne, -1);
        for (std::size_t e = 0; e < ne; ++e) {
            const Vec3<T> img = mat3_apply(c.matrix, element_coords(r, act.idx, static_cast<int>(e)));
            const bool target_is_point = act.idx.is_point(static_cast<int>(e)) != c.is_polarity;
            int found = -1;
            if (target_is_point) {
                for (std::size_t p = 0; p < r.geometry->num_points(); ++p)
                    if (projectively_equal(img, r.point(static_cast<int>(p)), tol)) {
                        found = static_cast<int>(p);
                        break;
                    }
            } else {
                for (std::size_t l = 0; l < r.geometry->num_lines(); ++l)
                    if (projectively_equal(img, r.line(static_cast<int>(l)), tol)) {
                        found = act.idx.element_of_line(static_cast<int>(l));
                        break;
                    }
            }
            if (found < 0) return act;  // preserves stays false
            perm[e] = found;
        }
        // incidence permutation; a polarity sends (p, l) to (gamma(l), gamma(p))
        std::vector<int> ip(inc.size(), -1);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            int pe = inc[i].first, le = act.idx.element_of_line(inc[i].second);
            int ppe = perm[pe], ple = perm[le];
            if (c.is_polarity) std::swap(ppe, ple);
            if (!act.idx.is_point(ppe) || act.idx.is_point(ple)) return act;
            int target = -1;
            for (std::size_t k = 0; k < inc.size(); ++k)
                if (inc[k].first == ppe && inc[k].second == act.idx.line_of(ple)) {
                    target = static_cast<int>(k);
                    break;
                }
            if (target < 0) return act;
            ip[i] = target;
        }
        act.element_perm.push_back(std::move(perm));
        act.incidence_perm.push_back(std::move(ip));
    }
    act.preserves = true;
    return act;
}

// ---------------------------------------------------------------------------
// Fixed subspaces and restricted velocity bases
// ---------------------------------------------------------------------------

// Real fixed locus of an orthogonal collineation: the +1 and -1
// eigenspaces of its matrix (orthogonal matrices have no other real
// eigenvalues). Throws for polarities, which fix no point or line.
template <class T>
struct FixedSubspace {
    Matrix<T> plus_basis;   // 3 x k, columns span ker(A - I)
    Matrix<T> minus_basis;  // 3 x k, columns span ker(A + I)
};

template <class T>
FixedSubspace<T> fixed_subspace(const Correlation<T>& c) {
    if (c.is_polarity)
        throw std::invalid_argument("a polarity fixes no point or line");
    FixedSubspace<T> out;
    for (int s = 0; s < 2; ++s) {
        Matrix<T> m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m(i, j) = c.matrix[i][j] - T(i == j ? (s == 0 ? 1 : -1) : 0);
        auto rk = rank_and_kernel_of(m);
        (s == 0 ? out.plus_basis : out.minus_basis) = rk.kernel;
    }
    return out;
}

// Chart-velocity restriction of an element constrained to stay in the
// intersection of the eigenspaces of its stabilizer: a 2 x d basis of the
// allowed (dx, dy) (or (da, db)) directions. Free elements get the 2 x 2
// identity. d = dim(U) - 1 since the representative itself spans the
// projectively-invisible direction of U.
template <class T>
Matrix<T> element_velocity_basis(const Realization<T>& r, const CorrelationGroup<T>& grp,
                                 const GroupAction<T>& act, int e) {
    std::vector<int> stab;
    for (std::size_t g = 1; g < grp.size(); ++g)
        if (act.element_perm[g][e] == e) stab.push_back(static_cast<int>(g));
    if (stab.empty()) {
        Matrix<T> id2(2, 2);
        id2(0, 0) = T(1);
        id2(1, 1) = T(1);
        return id2;
    }
    const Vec3<T>& n = element_coords(r, act.idx, e);
    // stack (A - lambda I) over the stabilizer; U = common kernel
    Matrix<T> cons(3 * stab.size(), 3);
    for (std::size_t s = 0; s < stab.size(); ++s) {
        const Mat3<T>& a = grp.element(stab[s]).matrix;
        const Vec3<T> an = mat3_apply(a, n);
        int k = 0;
        double best = -1;
        for (int i = 0; i < 3; ++i) {
            const double v = std::abs(scalar_traits<T>::as_double(n[i]));
            if (v > best) {
                best = v;
                k = i;
            }
        }
        const T lambda = an[k] / n[k];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                cons(3 * s + i, j) = a[i][j] - (i == j ? lambda : T(0));
    }
    auto u = rank_and_kernel_of(cons).kernel;  // 3 x dimU
    // chart image of U: v -> (v0 - x v2, v1 - y v2)
    const T x = n[0] / n[2], y = n[1] / n[2];
    std::vector<std::vector<T>> img;
    for (std::size_t c = 0; c < u.cols(); ++c)
        img.push_back({u(0, c) - x * u(2, c), u(1, c) - y * u(2, c)});
    // basis of the span of img
    if constexpr (scalar_traits<T>::exact) {
        Matrix<T> rows(img.size(), 2);
        for (std::size_t i = 0; i < img.size(); ++i) {
            rows(i, 0) = img[i][0];
            rows(i, 1) = img[i][1];
        }
        const auto pivots = rref(rows);
        Matrix<T> basis(2, pivots.size());
        for (std::size_t c = 0; c < pivots.size(); ++c) {
            basis(0, c) = rows(c, 0);
            basis(1, c) = rows(c, 1);
        }
        return basis;
    } else {
        Matrix<double> cols(2, img.size());
        for (std::size_t i = 0; i < img.size(); ++i) {
            cols(0, i) = img[i][0];
            cols(1, i) = img[i][1];
        }
        auto rk = rank_and_kernel_of(cols.transposed());
        // orthonormal row-space basis via kernel complement: easier to
        // re-run an RREF-style pass in doubles with pivot tolerance
        Matrix<double> rows = cols.transposed();
        std::vector<std::vector<double>> basis_rows;
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            std::vector<double> v = rows.row(i);
            for (const auto& b : basis_rows) {
                const double proj = v[0] * b[0] + v[1] * b[1];
                v[0] -= proj * b[0];
                v[1] -= proj * b[1];
            }
            const double nn = std::sqrt(v[0] * v[0] + v[1] * v[1]);
            if (nn > 1e-9) basis_rows.push_back({v[0] / nn, v[1] / nn});
        }
        (void)rk;
        Matrix<double> basis(2, basis_rows.size());
        for (std::size_t c = 0; c < basis_rows.size(); ++c) {
            basis(0, c) = basis_rows[c][0];
            basis(1, c) = basis_rows[c][1];
        }
        return basis;
    }
}

// ---------------------------------------------------------------------------
// Orbits
// ---------------------------------------------------------------------------

struct OrbitStructure {
    std::vector<std::vector<int>> element_orbits;  // rep = front (lowest index)
    std::vector<int> orbit_of_element;
    std::vector<std::vector<int>> incidence_orbits;  // rep = front (first declared)
    std::vector<int> orbit_of_incidence;
};

template <class T>
OrbitStructure orbit_structure(const GroupAction<T>& act) {
    OrbitStructure os;
    const std::size_t ne = act.idx.count();
    os.orbit_of_element.assign(ne, -1);
    for (std::size_t e = 0; e < ne; ++e) {
        if (os.orbit_of_element[e] >= 0) continue;
        std::vector<int> orb;
        for (std::size_t g = 0; g < act.element_perm.size(); ++g) {
            const int f = act.element_perm[g][e];
            if (os.orbit_of_element[f] < 0) {
                os.orbit_of_element[f] = static_cast<int>(os.element_orbits.size());
                orb.push_back(f);
            }
        }
        std::sort(orb.begin(), orb.end());
        os.element_orbits.push_back(std::move(orb));
    }
    const std::size_t ni = act.incidence_perm.empty() ? 0 : act.incidence_perm[0].size();
    os.orbit_of_incidence.assign(ni, -1);
    for (std::size_t i = 0; i < ni; ++i) {
        if (os.orbit_of_incidence[i] >= 0) continue;
        std::vector<int> orb{static_cast<int>(i)};
        os.orbit_of_incidence[i] = static_cast<int>(os.incidence_orbits.size());
        for (std::size_t g = 1; g < act.incidence_perm.size(); ++g) {
            const int f = act.incidence_perm[g][i];
            if (os.orbit_of_incidence[f] < 0) {
                os.orbit_of_incidence[f] = static_cast<int>(os.incidence_orbits.size());
                orb.push_back(f);
            }
        }
        os.incidence_orbits.push_back(std::move(orb));
    }
    return os;
}

// ---------------------------------------------------------------------------
// The orbit rigidity matrix
// ---------------------------------------------------------------------------

template <class T>
struct OrbitRigidityMatrix {
    Matrix<T> m;  // one row per incidence orbit
    OrbitStructure orbits;
    ElementIndexing idx;
    struct ColBlock {
        std::size_t start = 0, width = 0;
        int rep_element = -1;
    };
    std::vector<ColBlock> blocks;      // per element orbit, in orbit order
    std::vector<Matrix<T>> rep_basis;  // velocity basis M per orbit rep (2 x width)
    struct RowInfo {
        int q_elem = -1;   // orbit representative carrying the incidence
        int gamma = -1;    // group element with incidence = (q, gamma r)
        int r_elem = -1;   // orbit representative of the partner element
        bool self = false; // q and r in the same orbit (polarity self-incidence)
    };
    std::vector<RowInfo> rows;
};

// Linearized chart action of group element g at element e: the 2x2 map
// sending chart velocities at e to chart velocities at its image.
template <class T>
Mat3<T> action_matrix(const CorrelationGroup<T>& grp, int g) {
    return grp.element(g).matrix;
}

template <class T>
Matrix<T> linearized_action(const Realization<T>& r, const CorrelationGroup<T>& grp,
                            const GroupAction<T>& act, int g, int e) {
    const Mat3<T>& a = action_matrix(grp, g);
    const Vec3<T>& n = element_coords(r, act.idx, e);
    const Vec3<T> u = mat3_apply(a, n);
    const T lambda = u[2];
    if (coord_is_zero(lambda, coord_scale(u)))
        throw std::runtime_error("group action leaves the affine chart");
    Matrix<T> d(2, 2);
    for (int j = 0; j < 2; ++j) {
        Vec3<T> v{T(0), T(0), T(0)};
        v[j] = T(1);
        const Vec3<T> av = mat3_apply(a, v);
        d(0, j) = (av[0] - (u[0] / lambda) * av[2]) / lambda;
        d(1, j) = (av[1] - (u[1] / lambda) * av[2]) / lambda;
    }
    return d;
}

template <class T>
OrbitRigidityMatrix<T> build_orbit_matrix(const Realization<T>& r,
                                          const CorrelationGroup<T>& grp,
                                          const GroupAction<T>& act) {
    if (!act.preserves)
        throw std::invalid_argument("group does not preserve the configuration");
    affine_chart(r);  // rows use chart-normalized representatives

    OrbitRigidityMatrix<T> om;
    om.idx = act.idx;
    om.orbits = orbit_structure(act);

    // column blocks per element orbit
    std::size_t ncol = 0;
    for (const auto& orb : om.orbits.element_orbits) {
        const int rep = orb.front();
        Matrix<T> basis = element_velocity_basis(r, grp, act, rep);
        om.blocks.push_back({ncol, basis.cols(), rep});
        ncol += basis.cols();
        om.rep_basis.push_back(std::move(basis));
    }

    const auto& inc = r.geometry->incidences();
    om.m = Matrix<T>(om.orbits.incidence_orbits.size(), ncol);
    for (std::size_t row = 0; row < om.orbits.incidence_orbits.size(); ++row) {
        const int inc0 = om.orbits.incidence_orbits[row].front();
        const int point_elem = inc[inc0].first;
        const int line_elem = om.idx.element_of_line(inc[inc0].second);

        // move the incidence so its point is the orbit representative
        const int q = om.orbits.element_orbits[om.orbits.orbit_of_element[point_elem]].front();
        int beta = -1;
        for (std::size_t g = 0; g < grp.size(); ++g)
            if (act.element_perm[g][q] == point_elem) {
                beta = static_cast<int>(g);
                break;
            }
        const int partner = act.element_perm[grp.inverse(beta)][line_elem];
        const int rorb = om.orbits.orbit_of_element[partner];
        const int rrep = om.orbits.element_orbits[rorb].front();
        int gamma = -1;
        for (std::size_t g = 0; g < grp.size(); ++g)
            if (act.element_perm[g][rrep] == partner) {
                gamma = static_cast<int>(g);
                break;
            }
        const int qorb = om.orbits.orbit_of_element[q];

        const Vec3<T>& nq = element_coords(r, act.idx, q);
        const Vec3<T>& nr = element_coords(r, act.idx, rrep);
        const int ginv = grp.inverse(gamma);
        const Vec3<T> w1 = mat3_apply(action_matrix(grp, ginv), nq);  // gamma^{-1} q, raw
        const Vec3<T> w2 = mat3_apply(action_matrix(grp, gamma), nr);  // gamma r, raw
        // normalization factor of gamma^{-1} q against its realized image
        const int img1 = act.element_perm[ginv][q];
        const Vec3<T>& n1 = element_coords(r, act.idx, img1);
        int k = 0;
        double best = -1;
        for (int i = 0; i < 3; ++i) {
            const double v = std::abs(scalar_traits<T>::as_double(n1[i]));
            if (v > best) {
                best = v;
                k = i;
            }
        }
        const T lambda1 = w1[k] / n1[k];

        om.rows.push_back({q, gamma, rrep, qorb == rorb});
        if (qorb == rorb) {
            // polarity self-incidence: single block (gamma q + gamma^{-1} q)
            const Vec3<T> wa = mat3_apply(action_matrix(grp, gamma), nq);
            const auto& blk = om.blocks[qorb];
            const auto& basis = om.rep_basis[qorb];
            for (std::size_t c = 0; c < blk.width; ++c)
                om.m(row, blk.start + c) =
                    ((wa[0] + w1[0]) * basis(0, c) + (wa[1] + w1[1]) * basis(1, c)) / lambda1;
        } else {
            const auto& blk_r = om.blocks[rorb];
            const auto& basis_r = om.rep_basis[rorb];
            for (std::size_t c = 0; c < blk_r.width; ++c)
                om.m(row, blk_r.start + c) =
                    (w1[0] * basis_r(0, c) + w1[1] * basis_r(1, c)) / lambda1;
            const auto& blk_q = om.blocks[qorb];
            const auto& basis_q = om.rep_basis[qorb];
            for (std::size_t c = 0; c < blk_q.width; ++c)
                om.m(row, blk_q.start + c) =
                    (w2[0] * basis_q(0, c) + w2[1] * basis_q(1, c)) / lambda1;
        }
    }
    return om;
}

// Kernel of the orbit matrix: restrictions of symmetric motions.
template <class T>
std::vector<std::vector<T>> orbit_kernel(const OrbitRigidityMatrix<T>& om) {
    auto rk = rank_and_kernel_of(om.m);
    std::vector<std::vector<T>> out;
    for (std::size_t c = 0; c < rk.kernel.cols(); ++c) {
        std::vector<T> v(rk.kernel.rows());
        for (std::size_t i = 0; i < rk.kernel.rows(); ++i) v[i] = rk.kernel(i, c);
        out.push_back(std::move(v));
    }
    return out;
}

// Expands a restricted motion to the full configuration: m(beta rep) is
// the linearized action of beta applied to the representative velocity.
// Verifies stabilizer consistency and exactness of the expansion.
template <class T>
MotionVector<T> lift_motion(const Realization<T>& r, const CorrelationGroup<T>& grp,
                            const GroupAction<T>& act, const OrbitRigidityMatrix<T>& om,
                            const std::vector<T>& mhat) {
    if (mhat.size() != om.m.cols()) throw std::invalid_argument("restricted motion length mismatch");
    const std::size_t nl = r.geometry->num_lines();
    MotionVector<T> full(2 * nl + 2 * r.geometry->num_points(), T(0));
    for (std::size_t e = 0; e < act.idx.count(); ++e) {
        const int orb = om.orbits.orbit_of_element[e];
        const int rep = om.orbits.element_orbits[orb].front();
        const auto& blk = om.blocks[orb];
        const auto& basis = om.rep_basis[orb];
        // representative velocity in chart coordinates
        std::array<T, 2> vrep{T(0), T(0)};
        for (std::size_t c = 0; c < blk.width; ++c) {
            vrep[0] += basis(0, c) * mhat[blk.start + c];
            vrep[1] += basis(1, c) * mhat[blk.start + c];
        }
        std::optional<std::array<T, 2>> ve;
        for (std::size_t g = 0; g < grp.size(); ++g) {
            if (act.element_perm[g][rep] != static_cast<int>(e)) continue;
            const Matrix<T> d = linearized_action(r, grp, act, static_cast<int>(g), rep);
            std::array<T, 2> cand{d(0, 0) * vrep[0] + d(0, 1) * vrep[1],
                                  d(1, 0) * vrep[0] + d(1, 1) * vrep[1]};
            if (!ve) {
                ve = cand;
            } else {
                for (int i = 0; i < 2; ++i) {
                    bool same;
                    if constexpr (scalar_traits<T>::exact)
                        same = ((*ve)[i] == cand[i]);
                    else
                        same = std::abs((*ve)[i] - cand[i]) < 1e-7;
                    if (!same)
                        throw std::logic_error(
                            "inconsistent stabilizer data in lift (velocity basis bug)");
                }
            }
        }
        if (!ve) throw std::logic_error("element not reached by any group element");
        const std::size_t col = act.idx.is_point(static_cast<int>(e))
                                    ? 2 * nl + 2 * static_cast<std::size_t>(e)
                                    : 2 * static_cast<std::size_t>(act.idx.line_of(static_cast<int>(e)));
        full[col] = (*ve)[0];
        full[col + 1] = (*ve)[1];
    }
    return full;
}

// Dimension of the space of trivial motions that are Gamma-symmetric:
// intersection of the trivial-motion span with the lifted kernel span.
template <class T>
int symmetric_trivial_dimension(const Realization<T>& r, const CorrelationGroup<T>& grp,
                                const GroupAction<T>& act, const OrbitRigidityMatrix<T>& om) {
    const TrivialMotions<T> triv = trivial_motion_basis(r);
    std::vector<std::vector<T>> lifted;
    for (const auto& mhat : orbit_kernel(om))
        lifted.push_back(lift_motion(r, grp, act, om, mhat));
    std::vector<std::vector<T>> stacked = triv.vectors;
    for (const auto& v : lifted) stacked.push_back(v);
    const int rt = span_rank(triv.vectors);
    const int rk = span_rank(lifted);
    const int rs = span_rank(stacked);
    return rt + rk - rs;
}

}  // namespace projrig

#endif
