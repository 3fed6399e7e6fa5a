#ifndef ALCOVE_TESTS_ORACLES_HPP
#define ALCOVE_TESTS_ORACLES_HPP

// Independent brute-force references and random instance generators shared by
// the unit tests and the acceptance suite.

#include "alcove/polytope.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace alcove;

/// Every rank-sized subset of constraint hyperplanes, solved and filtered by
/// feasibility. Works in chart coordinates and maps back.
inline std::vector<RationalVector> brute_vertices(const HPolytope& P)
{
    const RootSystem& rs = P.root_system();
    const int n = rs.rank();
    const auto& cs = P.constraints();
    const int m = static_cast<int>(cs.size());
    std::set<RationalVector, LexLess> found;

    std::vector<int> pick(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            RationalMatrix A(n, n);
            RationalVector b(n);
            for (int r = 0; r < n; ++r) {
                const auto& c = cs[static_cast<std::size_t>(pick[static_cast<std::size_t>(r)])];
                A.row(r) = rs.chart_normal(c.root).transpose();
                b(r) = c.rhs;
            }
            if (matrix_rank(A) < n)
                return;
            const RationalVector x = rs.from_chart(solve_linear(A, b));
            if (P.contains(x))
                found.insert(x);
            return;
        }
        for (int i = start; i < m; ++i) {
            pick[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return {found.begin(), found.end()};
}

inline Rational vertex_max(const std::vector<RationalVector>& verts, const RationalVector& d)
{
    Rational best = inner_product(verts.front(), d);
    for (const auto& v : verts)
        best = std::max(best, inner_product(v, d));
    return best;
}

inline Rational random_rational(std::mt19937& rng, int lo, int hi, int max_den)
{
    std::uniform_int_distribution<int> den(1, max_den);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(lo * q, hi * q);
    return Rational(num(rng), q);
}

/// A random valid alcoved polytope of rank <= 3 with at most 12 constraints.
/// Right-hand sides are the supports of a random point cloud, then loosened at
/// random, so instances are nonempty and usually bounded.
inline HPolytope random_small_polytope(std::mt19937& rng)
{
    static const std::vector<CartanType> types = {
        {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3},
        {Family::C, 3}, {Family::G, 2}, {Family::A, 1}};
    for (;;) {
        const auto& t = types[rng() % types.size()];
        auto rs = shared_root_system(t);
        std::vector<int> ids(static_cast<std::size_t>(rs->size()));
        for (int i = 0; i < rs->size(); ++i)
            ids[static_cast<std::size_t>(i)] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        const int m = std::min<int>(rs->size(), 3 + static_cast<int>(rng() % 10));
        ids.resize(static_cast<std::size_t>(m));

        std::vector<RationalVector> cloud;
        for (int k = 0; k < 2; ++k) {
            RationalVector y(rs->rank());
            for (int i = 0; i < rs->rank(); ++i)
                y(i) = random_rational(rng, -3, 3, 3);
            cloud.push_back(rs->from_chart(y));
        }
        std::vector<Constraint> cs;
        for (int id : ids) {
            Rational c = oracle::vertex_max(cloud, rs->root(id));
            if (rng() % 2)
                c += random_rational(rng, 0, 2, 2);
            cs.push_back({id, c});
        }
        try {
            return make_alcoved(rs, cs);
        } catch (const UnboundedPolytope&) {
        }
    }
}

/// Smallest number of sets covering the universe, by enumerating every subset.
/// Returns nullopt when no cover exists.
inline std::optional<int> brute_min_cover(int universe, const std::vector<std::vector<int>>& sets)
{
    const int k = static_cast<int>(sets.size());
    std::vector<unsigned> mask(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int e : sets[static_cast<std::size_t>(i)])
            mask[static_cast<std::size_t>(i)] |= 1u << e;
    const unsigned full = (universe == 32) ? ~0u : ((1u << universe) - 1);
    std::optional<int> best;
    for (unsigned long long s = 0; s < (1ull << k); ++s) {
        const int size = std::popcount(s);
        if (best && size >= *best)
            continue;
        unsigned cov = 0;
        for (int i = 0; i < k; ++i)
            if (s >> i & 1)
                cov |= mask[static_cast<std::size_t>(i)];
        if (cov == full)
            best = size;
    }
    return best;
}

} // namespace oracle

#endif // ALCOVE_TESTS_ORACLES_HPP
