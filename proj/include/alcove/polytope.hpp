#ifndef ALCOVE_POLYTOPE_HPP
#define ALCOVE_POLYTOPE_HPP

#include "alcove/dd.hpp"
#include "alcove/exactq.hpp"
#include "alcove/rootsys.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace alcove {

using Bitset = boost::dynamic_bitset<>;

class InvalidPolytope : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnboundedPolytope : public InvalidPolytope {
public:
    using InvalidPolytope::InvalidPolytope;
};

class EmptyPolytope : public InvalidPolytope {
public:
    using InvalidPolytope::InvalidPolytope;
};

class PointOutside : public std::invalid_argument {
public:
    PointOutside(std::size_t index, const std::string& what)
        : std::invalid_argument(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// <root, x> <= rhs, with the root referenced by its index in the root system.
struct Constraint {
    int root = 0;
    Rational rhs;
};

/**
 * Bounded nonempty intersection of root halfspaces. Validated on construction;
 * constraints are kept sorted by root index.
 */
class HPolytope {
public:
    const RootSystem& root_system() const { return *rs_; }
    const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    std::optional<Rational> rhs_for(int root) const;

    /// Chart form: normals(i) . y <= rhs(i) with y = rs.to_chart(x).
    const RationalMatrix& chart_normals() const { return normals_; }
    const RationalVector& chart_rhs() const { return rhs_; }

    /// Dimension of the span of the roots.
    int span_dim() const { return rs_->rank(); }

    bool contains(const RationalVector& x) const;

private:
    friend HPolytope make_alcoved(std::shared_ptr<const RootSystem>, std::vector<Constraint>);

    HPolytope() = default;

    std::shared_ptr<const RootSystem> rs_;
    std::vector<Constraint> constraints_;
    RationalMatrix normals_;
    RationalVector rhs_;
};

/// Throws UnboundedPolytope, EmptyPolytope, or std::invalid_argument for
/// repeated or foreign roots.
HPolytope make_alcoved(std::shared_ptr<const RootSystem> rs, std::vector<Constraint> constraints);
HPolytope make_alcoved(std::shared_ptr<const RootSystem> rs,
                       const std::vector<std::pair<RationalVector, Rational>>& constraints);

/// Orthogonal projection of R^{n+1} onto the sum-zero hyperplane; the canonical
/// representative of a class modulo the all-ones line.
RationalVector normalize_sum_zero(const RationalVector& x);

/// Smallest alcoved polytope containing the points (constraints over every root).
HPolytope alcoved_hull(const std::vector<RationalVector>& points, std::shared_ptr<const RootSystem> rs);

struct LpMax {
    Rational value;
    RationalVector argmax;
};

LpMax lp_max(const HPolytope& P, const RationalVector& direction);

/// sup over P of <a, x> for every root a, in root order.
std::vector<Rational> support_values(const HPolytope& P);

struct VPolytope {
    std::vector<RationalVector> vertices;
    int ambient_dim = 0;
};

/// Exact vertices by double description, sorted lexicographically.
VPolytope vertices(const HPolytope& P, const dd::Options& options = {});

struct IncidenceStructure {
    /// Affine dimension of the polytope.
    int dimension = 0;
    std::vector<RationalVector> vertices;
    /// Support value of every root.
    std::vector<Rational> support;
    /// Per vertex, one bit per root: the vertex lies on that root's support hyperplane.
    std::vector<Bitset> vertex_support;
    /// Per vertex, one bit per facet.
    std::vector<Bitset> vertex_facet;
    /// Per facet, the roots whose support hyperplane is that facet.
    std::vector<std::vector<int>> facet_roots;
    /// Per facet, its vertex set.
    std::vector<Bitset> facet_vertices;
};

IncidenceStructure incidence(const HPolytope& P, const VPolytope& V);
IncidenceStructure incidence(const HPolytope& P, const dd::Options& options = {});

/// Face counts f_0, ..., f_{d-1}, followed by 1 for the polytope itself.
std::vector<std::uint64_t> f_vector(const IncidenceStructure& inc);
std::vector<std::uint64_t> f_vector(const HPolytope& P, const dd::Options& options = {});

bool is_simple(const IncidenceStructure& inc);
bool is_simple(const HPolytope& P, const dd::Options& options = {});

struct GenerationCheck {
    bool generating = false;
    /// A root whose support hyperplane misses every point, when not generating.
    std::optional<int> uncovered_root;
};

/// Pure LP check; throws PointOutside when some point is not in P.
GenerationCheck is_generating_set(const HPolytope& P, const std::vector<RationalVector>& points);

} // namespace alcove

#endif // ALCOVE_POLYTOPE_HPP
