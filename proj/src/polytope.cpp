#include "alcove/polytope.hpp"

#include "alcove/lp.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <set>
#include <unordered_set>

namespace alcove {

namespace {

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const
    {
        std::vector<Bitset::block_type> blocks;
        boost::to_block_range(b, std::back_inserter(blocks));
        return boost::hash_range(blocks.begin(), blocks.end());
    }
};

using BitsetSet = std::unordered_set<Bitset, BitsetHash>;

Eigen::Index affine_rank(const std::vector<RationalVector>& points, const Bitset& members)
{
    auto first = members.find_first();
    if (first == Bitset::npos)
        return -1;
    const RationalVector& base = points[first];
    const auto count = static_cast<Eigen::Index>(members.count());
    if (count == 1)
        return 0;
    RationalMatrix diffs(count - 1, base.size());
    Eigen::Index r = 0;
    for (auto i = members.find_next(first); i != Bitset::npos; i = members.find_next(i))
        diffs.row(r++) = (points[i] - base).transpose();
    return matrix_rank(diffs);
}

} // namespace

std::optional<Rational> HPolytope::rhs_for(int root) const
{
    auto it = std::lower_bound(constraints_.begin(), constraints_.end(), root,
                               [](const Constraint& c, int r) { return c.root < r; });
    if (it != constraints_.end() && it->root == root)
        return it->rhs;
    return std::nullopt;
}

bool HPolytope::contains(const RationalVector& x) const
{
    if (!rs_->in_span(x))
        return false;
    const RationalVector y = rs_->to_chart(x);
    for (Eigen::Index i = 0; i < normals_.rows(); ++i)
        if (inner_product(normals_.row(i).transpose().eval(), y) > rhs_(i))
            return false;
    return true;
}

HPolytope make_alcoved(std::shared_ptr<const RootSystem> rs, std::vector<Constraint> constraints)
{
    if (!rs)
        throw std::invalid_argument("make_alcoved: no root system");
    std::sort(constraints.begin(), constraints.end(),
              [](const Constraint& a, const Constraint& b) { return a.root < b.root; });
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const int r = constraints[i].root;
        if (r < 0 || r >= rs->size())
            throw std::invalid_argument("make_alcoved: root index out of range");
        if (i > 0 && constraints[i - 1].root == r)
            throw std::invalid_argument("make_alcoved: repeated root " + format_vector(rs->root(r)));
    }

    HPolytope P;
    const int n = rs->rank();
    const auto m = static_cast<Eigen::Index>(constraints.size());
    P.normals_.resize(m, n);
    P.rhs_.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        P.normals_.row(i) = rs->chart_normal(constraints[static_cast<std::size_t>(i)].root).transpose();
        P.rhs_(i) = constraints[static_cast<std::size_t>(i)].rhs;
    }
    P.rs_ = std::move(rs);
    P.constraints_ = std::move(constraints);

    if (!lp::feasible(P.normals_, P.rhs_))
        throw EmptyPolytope("alcoved polytope is empty: inconsistent right-hand sides");
    for (int k = 0; k < n; ++k) {
        for (int sign : {1, -1}) {
            RationalVector dir = RationalVector::Zero(n);
            dir(k) = sign;
            if (lp::maximize(P.normals_, P.rhs_, dir).status != lp::Status::Optimal)
                throw UnboundedPolytope("alcoved polytope is unbounded: root normals do not "
                                        "positively span the space");
        }
    }
    return P;
}

HPolytope make_alcoved(std::shared_ptr<const RootSystem> rs,
                       const std::vector<std::pair<RationalVector, Rational>>& constraints)
{
    if (!rs)
        throw std::invalid_argument("make_alcoved: no root system");
    std::vector<Constraint> out;
    out.reserve(constraints.size());
    for (const auto& [root, rhs] : constraints)
        out.push_back({rs->index_of(root), rhs});
    return make_alcoved(std::move(rs), std::move(out));
}

RationalVector normalize_sum_zero(const RationalVector& x)
{
    if (x.size() == 0)
        return x;
    const Rational mean = x.sum() / Rational(static_cast<long>(x.size()));
    RationalVector out = x;
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out(i) -= mean;
    return out;
}

HPolytope alcoved_hull(const std::vector<RationalVector>& points, std::shared_ptr<const RootSystem> rs)
{
    if (points.empty())
        throw std::invalid_argument("alcoved_hull: empty point set");
    if (!rs)
        throw std::invalid_argument("alcoved_hull: no root system");
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!rs->in_span(points[i]))
            throw PointOutside(i, "alcoved_hull: point " + format_vector(points[i]) +
                                      " is not in the span of the roots");
    std::vector<Constraint> cs;
    cs.reserve(static_cast<std::size_t>(rs->size()));
    for (int a = 0; a < rs->size(); ++a) {
        Rational best = inner_product(rs->root(a), points.front());
        for (std::size_t i = 1; i < points.size(); ++i)
            best = std::max(best, inner_product(rs->root(a), points[i]));
        cs.push_back({a, best});
    }
    return make_alcoved(std::move(rs), std::move(cs));
}

LpMax lp_max(const HPolytope& P, const RationalVector& direction)
{
    const RootSystem& rs = P.root_system();
    const auto res = lp::maximize(P.chart_normals(), P.chart_rhs(), rs.chart_functional(direction));
    if (res.status != lp::Status::Optimal)
        throw std::logic_error("lp_max: validated polytope reported as unbounded or empty");
    return {res.value, rs.from_chart(res.argmax)};
}

std::vector<Rational> support_values(const HPolytope& P)
{
    const RootSystem& rs = P.root_system();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(rs.size()));
    for (int a = 0; a < rs.size(); ++a) {
        const auto res = lp::maximize(P.chart_normals(), P.chart_rhs(), rs.chart_normal(a));
        if (res.status != lp::Status::Optimal)
            throw std::logic_error("support_values: validated polytope reported as unbounded");
        out.push_back(res.value);
    }
    return out;
}

VPolytope vertices(const HPolytope& P, const dd::Options& options)
{
    const RootSystem& rs = P.root_system();
    const int n = rs.rank();
    // Homogenized cone { (t, y) : t * rhs - normal . y >= 0, t >= 0 }.
    std::vector<IntegerVector> rows;
    rows.reserve(P.constraints().size() + 1);
    IntegerVector t_row = IntegerVector::Zero(n + 1);
    t_row(0) = 1;
    rows.push_back(t_row);
    for (Eigen::Index i = 0; i < P.chart_normals().rows(); ++i) {
        RationalVector row(n + 1);
        row(0) = P.chart_rhs()(i);
        row.tail(n) = -P.chart_normals().row(i).transpose();
        rows.push_back(primitive_integer(row));
    }
    const auto rays = dd::extreme_rays(rows, options);

    VPolytope V;
    V.ambient_dim = rs.ambient_dim();
    V.vertices.reserve(rays.size());
    for (const auto& r : rays) {
        if (r(0) <= 0)
            throw std::logic_error("vertices: validated polytope has a recession direction");
        RationalVector y(n);
        for (int k = 0; k < n; ++k)
            y(k) = Rational(r(k + 1), r(0));
        V.vertices.push_back(rs.from_chart(y));
    }
    std::sort(V.vertices.begin(), V.vertices.end(), LexLess{});
    return V;
}

IncidenceStructure incidence(const HPolytope& P, const VPolytope& V)
{
    const RootSystem& rs = P.root_system();
    IncidenceStructure inc;
    inc.vertices = V.vertices;
    const std::size_t nv = V.vertices.size();
    if (nv == 0)
        throw std::invalid_argument("incidence: no vertices");

    std::vector<RationalVector> chart;
    chart.reserve(nv);
    for (const auto& v : V.vertices)
        chart.push_back(rs.to_chart(v));

    Bitset all(nv);
    all.set();
    inc.dimension = static_cast<int>(affine_rank(chart, all));

    const auto nroots = static_cast<std::size_t>(rs.size());
    inc.vertex_support.assign(nv, Bitset(nroots));
    std::vector<Bitset> tight(nroots, Bitset(nv));
    std::vector<Rational> values(nv);
    for (int a = 0; a < rs.size(); ++a) {
        const RationalVector normal = rs.chart_normal(a);
        for (std::size_t v = 0; v < nv; ++v)
            values[v] = inner_product(normal, chart[v]);
        const Rational best = *std::max_element(values.begin(), values.end());
        inc.support.push_back(best);
        for (std::size_t v = 0; v < nv; ++v) {
            if (values[v] == best) {
                tight[static_cast<std::size_t>(a)].set(v);
                inc.vertex_support[v].set(static_cast<std::size_t>(a));
            }
        }
    }

    // A support hyperplane is a facet when its face has affine dimension d - 1.
    std::vector<int> facet_of(nroots, -1);
    for (int a = 0; a < rs.size() && inc.dimension > 0; ++a) {
        const Bitset& T = tight[static_cast<std::size_t>(a)];
        if (T.count() == nv || static_cast<int>(T.count()) < inc.dimension)
            continue;
        if (affine_rank(chart, T) != inc.dimension - 1)
            continue;
        auto same = std::find(inc.facet_vertices.begin(), inc.facet_vertices.end(), T);
        if (same != inc.facet_vertices.end()) {
            inc.facet_roots[static_cast<std::size_t>(same - inc.facet_vertices.begin())].push_back(a);
            continue;
        }
        inc.facet_vertices.push_back(T);
        inc.facet_roots.push_back({a});
    }

    const std::size_t nf = inc.facet_vertices.size();
    inc.vertex_facet.assign(nv, Bitset(nf));
    for (std::size_t f = 0; f < nf; ++f)
        for (auto v = inc.facet_vertices[f].find_first(); v != Bitset::npos;
             v = inc.facet_vertices[f].find_next(v))
            inc.vertex_facet[v].set(f);
    return inc;
}

IncidenceStructure incidence(const HPolytope& P, const dd::Options& options)
{
    return incidence(P, vertices(P, options));
}

std::vector<std::uint64_t> f_vector(const IncidenceStructure& inc)
{
    const int d = inc.dimension;
    std::vector<std::uint64_t> f(static_cast<std::size_t>(d + 1), 0);
    f[static_cast<std::size_t>(d)] = 1;
    if (d == 0)
        return f;
    f[0] = inc.vertices.size();
    f[static_cast<std::size_t>(d - 1)] = inc.facet_vertices.size();

    // Faces of dimension k-1 are the inclusion-maximal proper intersections of
    // k-faces with facets.
    std::vector<Bitset> level = inc.facet_vertices;
    for (int k = d - 1; k >= 2; --k) {
        BitsetSet next;
        std::vector<Bitset> candidates;
        for (const auto& face : level) {
            candidates.clear();
            for (const auto& facet : inc.facet_vertices) {
                Bitset meet = face & facet;
                if (meet.none() || meet == face)
                    continue;
                candidates.push_back(std::move(meet));
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                bool maximal = true;
                for (std::size_t j = 0; j < candidates.size() && maximal; ++j)
                    if (i != j && candidates[i].is_proper_subset_of(candidates[j]))
                        maximal = false;
                if (maximal)
                    next.insert(candidates[i]);
            }
        }
        f[static_cast<std::size_t>(k - 1)] = next.size();
        level.assign(next.begin(), next.end());
    }
    return f;
}

std::vector<std::uint64_t> f_vector(const HPolytope& P, const dd::Options& options)
{
    return f_vector(incidence(P, options));
}

bool is_simple(const IncidenceStructure& inc)
{
    return std::all_of(inc.vertex_facet.begin(), inc.vertex_facet.end(), [&](const Bitset& b) {
        return static_cast<int>(b.count()) == inc.dimension;
    });
}

bool is_simple(const HPolytope& P, const dd::Options& options) { return is_simple(incidence(P, options)); }

GenerationCheck is_generating_set(const HPolytope& P, const std::vector<RationalVector>& points)
{
    if (points.empty())
        throw std::invalid_argument("is_generating_set: empty point set");
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!P.contains(points[i]))
            throw PointOutside(i, "is_generating_set: point " + format_vector(points[i]) +
                                      " is not in the polytope");
    const RootSystem& rs = P.root_system();
    const auto support = support_values(P);
    for (int a = 0; a < rs.size(); ++a) {
        bool touched = false;
        for (const auto& s : points) {
            if (inner_product(rs.root(a), s) == support[static_cast<std::size_t>(a)]) {
                touched = true;
                break;
            }
        }
        if (!touched)
            return {false, a};
    }
    return {true, std::nullopt};
}

} // namespace alcove
