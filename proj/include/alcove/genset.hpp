#ifndef ALCOVE_GENSET_HPP
#define ALCOVE_GENSET_HPP

// Minimum generating sets as set cover: vertices cover root support hyperplanes.

#include "alcove/polytope.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace alcove {

struct CoverInstance {
    /// Root id of every universe element.
    std::vector<int> universe;
    /// Per candidate (vertex id), the universe positions it covers.
    std::vector<Bitset> covers;

    int universe_size() const { return static_cast<int>(universe.size()); }
    int candidate_count() const { return static_cast<int>(covers.size()); }
};

struct CoverSolution {
    /// Sorted candidate ids.
    std::vector<int> chosen;
    bool optimal = false;
    int lower_bound = 0;
    std::uint64_t nodes = 0;

    int size() const { return static_cast<int>(chosen.size()); }
};

/// Universe = every root (all supports are attained), candidates = vertices.
CoverInstance build_cover_instance(const IncidenceStructure& inc);
CoverInstance build_cover_instance(const HPolytope& P, const dd::Options& options = {});

/// Plain instance from element lists; element ids must lie in [0, universe_size).
CoverInstance make_cover_instance(int universe_size, const std::vector<std::vector<int>>& sets);

/// Throws std::invalid_argument when some element has no candidate.
void validate(const CoverInstance& inst);

bool covers_all(const CoverInstance& inst, const std::vector<int>& chosen);

/// Max-coverage greedy, ties to the lowest id.
CoverSolution greedy_cover(const CoverInstance& inst);

/// Max of the counting bound (fewest candidates whose coverages can add up to
/// the universe) and a family of elements no candidate covers twice.
int cover_lower_bound(const CoverInstance& inst);

inline constexpr int kUnbudgetedCandidateLimit = 512;

/**
 * Exact minimum cover by depth-first branch and bound. node_budget caps the
 * number of search nodes; when it runs out the incumbent is returned with
 * optimal = false. A budget is required above kUnbudgetedCandidateLimit
 * candidates.
 */
CoverSolution min_cover(const CoverInstance& inst, std::optional<std::uint64_t> node_budget = {});

struct SizedSearch {
    std::optional<std::vector<int>> cover;
    /// False when the node budget ran out before the search finished.
    bool exhausted = true;
};

/// Looks for a cover with at most k candidates.
SizedSearch find_cover_of_size(const CoverInstance& inst, int k,
                               std::optional<std::uint64_t> node_budget = {});

} // namespace alcove

#endif // ALCOVE_GENSET_HPP
