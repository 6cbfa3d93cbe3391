#ifndef PROJRIG_GEOMETRY_HPP
#define PROJRIG_GEOMETRY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace projrig {

// Combinatorial incidence geometry (P, L, I). Identifiers are opaque
// strings; internally everything is indexed by dense position in
// declaration order, which also fixes matrix row/column layouts.
class IncidenceGeometry {
public:
    IncidenceGeometry() = default;

    // Validates: unique ids within each class, incidences reference known
    // ids, no duplicate incidences. Throws std::invalid_argument.
    static IncidenceGeometry create(std::vector<std::string> point_ids,
                                    std::vector<std::string> line_ids,
                                    std::vector<std::pair<std::string, std::string>> incidences);

    std::size_t num_points() const { return point_ids_.size(); }
    std::size_t num_lines() const { return line_ids_.size(); }
    std::size_t num_incidences() const { return incidences_.size(); }

    const std::vector<std::string>& point_ids() const { return point_ids_; }
    const std::vector<std::string>& line_ids() const { return line_ids_; }
    // (point index, line index) pairs in declaration order.
    const std::vector<std::pair<int, int>>& incidences() const { return incidences_; }

    int point_index(const std::string& id) const;  // -1 if unknown
    int line_index(const std::string& id) const;

    const std::vector<int>& lines_through(int point) const { return point_lines_[point]; }
    const std::vector<int>& points_on(int line) const { return line_points_[line]; }

    bool incident(int point, int line) const;

private:
    std::vector<std::string> point_ids_, line_ids_;
    std::vector<std::pair<int, int>> incidences_;
    std::unordered_map<std::string, int> point_lookup_, line_lookup_;
    std::vector<std::vector<int>> point_lines_, line_points_;
};

struct ConfigurationSignature {
    std::size_t p = 0;               // number of points
    std::size_t l = 0;               // number of lines
    std::optional<int> r;            // lines per point, when constant
    std::optional<int> k;            // points per line, when constant
    bool balanced = false;           // r == k, both present
};

ConfigurationSignature signature(const IncidenceGeometry& g);

// True iff every pair of lines shares at most one point and every pair of
// points lies on at most one common line.
bool is_linear_space_like(const IncidenceGeometry& g);

// Triples of distinct points incident to a common line: the non-bases of
// the derived rank-3 matroid. Triples are sorted ascending.
std::set<std::array<int, 3>> matroid_nonbases(const IncidenceGeometry& g);

struct SparsityCounts {
    long long excess = 0;            // |I| - (2|P| + 2|L| - 8)
    bool minimally_counted = false;  // excess == 0
    // Exhaustive check of |I'| <= 2|L(I')| + 2|P(I')| - 8 over non-empty
    // incidence subsets. Exponential, so it only runs when |I| <= cap;
    // absent otherwise. Note the count as stated fails on single-incidence
    // subsets (1 <= -4 is false), so it is false for any non-empty geometry;
    // it is exposed for exploration, the rigidity rank is the real check.
    std::optional<bool> subsets_satisfy_count;
};

SparsityCounts sparsity_counts(const IncidenceGeometry& g, std::size_t subset_cap = 20);

}  // namespace projrig

#endif
