#include "projrig/geometry.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace projrig {

IncidenceGeometry IncidenceGeometry::create(
    std::vector<std::string> point_ids, std::vector<std::string> line_ids,
    std::vector<std::pair<std::string, std::string>> incidences) {
    IncidenceGeometry g;
    g.point_ids_ = std::move(point_ids);
    g.line_ids_ = std::move(line_ids);
    for (std::size_t i = 0; i < g.point_ids_.size(); ++i)
        if (!g.point_lookup_.emplace(g.point_ids_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate point id: " + g.point_ids_[i]);
    for (std::size_t i = 0; i < g.line_ids_.size(); ++i)
        if (!g.line_lookup_.emplace(g.line_ids_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate line id: " + g.line_ids_[i]);

    g.point_lines_.resize(g.point_ids_.size());
    g.line_points_.resize(g.line_ids_.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [pid, lid] : incidences) {
        const int p = g.point_index(pid);
        const int l = g.line_index(lid);
        if (p < 0) throw std::invalid_argument("incidence references unknown point: " + pid);
        if (l < 0) throw std::invalid_argument("incidence references unknown line: " + lid);
        if (!seen.insert({p, l}).second)
            throw std::invalid_argument("duplicate incidence: (" + pid + ", " + lid + ")");
        g.incidences_.emplace_back(p, l);
        g.point_lines_[p].push_back(l);
        g.line_points_[l].push_back(p);
    }
    return g;
}

int IncidenceGeometry::point_index(const std::string& id) const {
    auto it = point_lookup_.find(id);
    return it == point_lookup_.end() ? -1 : it->second;
}

int IncidenceGeometry::line_index(const std::string& id) const {
    auto it = line_lookup_.find(id);
    return it == line_lookup_.end() ? -1 : it->second;
}

bool IncidenceGeometry::incident(int point, int line) const {
    const auto& ls = point_lines_[point];
    return std::find(ls.begin(), ls.end(), line) != ls.end();
}

ConfigurationSignature signature(const IncidenceGeometry& g) {
    ConfigurationSignature s;
    s.p = g.num_points();
    s.l = g.num_lines();
    bool const_r = s.p > 0, const_k = s.l > 0;
    for (std::size_t i = 0; const_r && i < s.p; ++i)
        if (g.lines_through(static_cast<int>(i)).size() != g.lines_through(0).size())
            const_r = false;
    for (std::size_t i = 0; const_k && i < s.l; ++i)
        if (g.points_on(static_cast<int>(i)).size() != g.points_on(0).size())
            const_k = false;
    if (const_r) s.r = static_cast<int>(g.lines_through(0).size());
    if (const_k) s.k = static_cast<int>(g.points_on(0).size());
    s.balanced = s.r && s.k && *s.r == *s.k;
    return s;
}

bool is_linear_space_like(const IncidenceGeometry& g) {
    // pairs of points on >1 common line  <=>  pairs of lines sharing >1 point
    std::set<std::pair<int, int>> point_pairs, line_pairs;
    for (std::size_t l = 0; l < g.num_lines(); ++l) {
        const auto& pts = g.points_on(static_cast<int>(l));
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                auto key = std::minmax(pts[a], pts[b]);
                if (!point_pairs.insert({key.first, key.second}).second) return false;
            }
    }
    for (std::size_t p = 0; p < g.num_points(); ++p) {
        const auto& ls = g.lines_through(static_cast<int>(p));
        for (std::size_t a = 0; a < ls.size(); ++a)
            for (std::size_t b = a + 1; b < ls.size(); ++b) {
                auto key = std::minmax(ls[a], ls[b]);
                if (!line_pairs.insert({key.first, key.second}).second) return false;
            }
    }
    return true;
}

std::set<std::array<int, 3>> matroid_nonbases(const IncidenceGeometry& g) {
    std::set<std::array<int, 3>> out;
    for (std::size_t l = 0; l < g.num_lines(); ++l) {
        std::vector<int> pts = g.points_on(static_cast<int>(l));
        std::sort(pts.begin(), pts.end());
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b)
                for (std::size_t c = b + 1; c < pts.size(); ++c)
                    out.insert({pts[a], pts[b], pts[c]});
    }
    return out;
}

SparsityCounts sparsity_counts(const IncidenceGeometry& g, std::size_t subset_cap) {
    SparsityCounts sc;
    sc.excess = static_cast<long long>(g.num_incidences()) -
                (2LL * g.num_points() + 2LL * g.num_lines() - 8);
    sc.minimally_counted = (sc.excess == 0);

    const std::size_t n = g.num_incidences();
    if (n == 0 || n > subset_cap) return sc;

    const auto& inc = g.incidences();
    bool ok = true;
    for (unsigned long long mask = 1; ok && mask < (1ULL << n); ++mask) {
        std::set<int> pts, lns;
        int count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ULL << i)) {
                pts.insert(inc[i].first);
                lns.insert(inc[i].second);
                ++count;
            }
        if (count > 2 * static_cast<long long>(lns.size()) +
                        2 * static_cast<long long>(pts.size()) - 8)
            ok = false;
    }
    sc.subsets_satisfy_count = ok;
    return sc;
}

}  // namespace projrig
