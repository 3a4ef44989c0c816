#pragma once

// Digital (t, s)-sequence tooling over F_p: the stacked-rank qualification
// test, t-value computation, digital-method points and exact star discrepancy.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "binlab/exact_matrix.hpp"
#include "binlab/families.hpp"

namespace binlab {

using MatrixSource = std::variant<FamilyId, ExactMatrix>;

struct GeneratingSet {
    std::uint64_t p = 2;
    std::vector<MatrixSource> matrices;

    std::size_t dimension() const noexcept { return matrices.size(); }
    /// Top-left rows x cols block of matrix `dim`, entries reduced into [0, p), row-major.
    std::vector<std::uint64_t> reduced_window(std::size_t dim, std::size_t rows, std::size_t cols) const;
    void validate() const;
};

std::string describe(const MatrixSource& src);

/// All compositions (d_1..d_s), d_i >= 0, of total into s parts, in lexicographic order.
std::vector<std::vector<std::size_t>> compositions(std::size_t total, std::size_t parts);

/// Rank test for the (m - t) x m stack of the first d_i rows of each C_i.
bool stacked_rank_ok(const GeneratingSet& gs, std::size_t m, std::size_t t, const std::vector<std::size_t>& composition);

struct TValueResult {
    /// per_m[m - 1] is the least t for depth m.
    std::vector<std::size_t> per_m;
    std::size_t t = 0;
};

TValueResult t_value(const GeneratingSet& gs, std::size_t m_max);

struct PointSet {
    std::uint64_t p = 0;  // 0 when unknown, e.g. read from CSV
    std::size_t depth = 0;
    std::size_t dimension = 0;
    std::vector<std::vector<Rational>> points;
};

/// Points 0..count-1 of the digital sequence truncated to `depth` digits.
PointSet digital_points(const GeneratingSet& gs, std::uint64_t count, std::size_t depth);

/// Counts points in every elementary interval of volume p^(t-m) whose shape is a
/// composition of m - t; true iff each holds exactly p^t of the first p^m points.
bool net_property_holds(const PointSet& ps, std::size_t m, std::size_t t);

/// Exact star discrepancy for dimension 1 or 2.
Rational star_discrepancy(const PointSet& ps);

std::string points_to_csv(const PointSet& ps);
PointSet points_from_csv(const std::string& text);

enum class CandidateKind { random, m1_family, p1_family };
CandidateKind parse_candidate_kind(const std::string& name);

struct SearchCandidate {
    std::string description;
    ExactMatrix matrix;
    TValueResult t;
};

struct SearchReport {
    std::vector<SearchCandidate> candidates;
    /// best_per_m[m - 1]: least t seen at depth m over all candidates.
    std::vector<std::size_t> best_per_m;
};

/// Tries candidates C as a third generating matrix next to M1(0), M1(1) modulo p.
/// A heuristic exploration; the report makes no completeness claim.
SearchReport search_third_matrix(std::uint64_t p, std::size_t m_max, CandidateKind kind, std::size_t budget,
                                 std::uint64_t seed = 1);

}  // namespace binlab
