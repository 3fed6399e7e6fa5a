#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alcove/tropical.hpp"
#include "oracles.hpp"

#include <random>

using namespace alcove;

namespace {

TropPoint tp(std::initializer_list<Rational> xs) { return TropPoint(make_vector(xs)); }

/// Membership by search over integer scalars; for integer data the scalars
/// max_j (x_j - v_ij) are integers in [-4, 4], so [-6, 6] is ample.
bool brute_contains(const std::vector<TropPoint>& V, const TropPoint& x)
{
    std::vector<Rational> lambda(V.size(), Rational(-6));
    for (;;) {
        if (trop_linear_combination(V, lambda) == x)
            return true;
        std::size_t i = 0;
        while (i < lambda.size() && lambda[i] == 6)
            lambda[i++] = -6;
        if (i == lambda.size())
            return false;
        lambda[i] += 1;
    }
}

TropPoint random_grid_point(std::mt19937& rng, int dim)
{
    RationalVector v(dim);
    for (int j = 0; j < dim; ++j)
        v(j) = static_cast<int>(rng() % 5) - 2;
    return TropPoint(v);
}

} // namespace

TEST_CASE("normalization")
{
    const TropPoint p(make_vector({3, 4, 1}));
    CHECK(p.coords() == make_vector({0, 1, -2}));
    CHECK(TropPoint(make_vector({0, 1, -2})) == p);
    CHECK(p.sum_zero() == make_vector({Rational(1, 3), Rational(4, 3), Rational(-5, 3)}));
    CHECK_THROWS_AS(TropPoint(RationalVector(0)), DimensionMismatch);
}

TEST_CASE("trop_combine examples")
{
    CHECK(trop_combine(0, tp({0, 0, 1}), 0, tp({0, 1, 0})) == tp({0, 0, 0}));
    const auto x = tp({0, Rational(3, 2), -2});
    CHECK(trop_combine(5, x, 5, x) == x);
    CHECK(trop_combine(0, tp({0, 0, 1}), 1, tp({0, 1, 0})) == tp({0, 0, 1}));
    CHECK_THROWS_AS(trop_combine(0, tp({0, 1}), 0, tp({0, 1, 2})), DimensionMismatch);
}

TEST_CASE("hull membership examples")
{
    const std::vector<TropPoint> V = {tp({0, 0, 1}), tp({0, 1, 0})};
    for (const auto& v : V)
        CHECK(trop_hull_contains(V, v));
    CHECK_FALSE(trop_hull_contains(V, tp({0, 1, 1})));
    CHECK(trop_hull_contains(V, tp({0, 0, 0})));
    CHECK_THROWS_AS(trop_hull_contains({}, tp({0, 0})), std::invalid_argument);
}

TEST_CASE("membership criterion agrees with the integer search oracle")
{
    std::mt19937 rng(2024);
    int inside = 0;
    int outside = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t k = 1 + rng() % 3;
        std::vector<TropPoint> V;
        for (std::size_t i = 0; i < k; ++i)
            V.push_back(random_grid_point(rng, 3));
        const TropPoint x = random_grid_point(rng, 3);
        const bool fast = trop_hull_contains(V, x);
        CHECK(fast == brute_contains(V, x));
        (fast ? inside : outside)++;
    }
    CHECK(inside > 30);
    CHECK(outside > 30);
}

TEST_CASE("trop_hull_vs_alcoved examples")
{
    const auto square = trop_hull_vs_alcoved({tp({0, 0, 0}), tp({0, 0, 1}), tp({0, 1, 0}), tp({0, 1, 1})});
    CHECK(square.equal);
    CHECK(square.vertices.size() == 4);

    const auto two = trop_hull_vs_alcoved({tp({0, 0, 1}), tp({0, 1, 0})});
    CHECK_FALSE(two.equal);
    CHECK(std::find(two.outside.begin(), two.outside.end(), tp({0, 1, 1})) != two.outside.end());

    const auto single = trop_hull_vs_alcoved({tp({0, 2, -1})});
    CHECK(single.equal);
}

TEST_CASE("tropical properties")
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 3);
        std::vector<TropPoint> V;
        const std::size_t k = 1 + rng() % 4;
        for (std::size_t i = 0; i < k; ++i) {
            RationalVector v(dim);
            for (int j = 0; j < dim; ++j)
                v(j) = oracle::random_rational(rng, -3, 3, 2);
            V.push_back(TropPoint(v));
        }
        std::vector<Rational> lambda;
        for (std::size_t i = 0; i < k; ++i)
            lambda.push_back(oracle::random_rational(rng, -3, 3, 3));

        // Pairwise folding; the normalized partial result carries the scalar
        // min of the lambdas used so far, since every first coordinate is 0.
        TropPoint fwd = V[0];
        Rational carried = lambda[0];
        for (std::size_t i = 1; i < k; ++i) {
            fwd = trop_combine(carried, fwd, lambda[i], V[i]);
            carried = std::min(carried, lambda[i]);
        }
        const TropPoint direct = trop_linear_combination(V, lambda);
        CHECK(fwd == direct);
        std::vector<TropPoint> rv(V.rbegin(), V.rend());
        std::vector<Rational> rl(lambda.rbegin(), lambda.rend());
        CHECK(trop_linear_combination(rv, rl) == direct);

        CHECK(trop_hull_contains(V, direct));

        // Monotonicity.
        std::vector<TropPoint> bigger = V;
        RationalVector extra(dim);
        for (int j = 0; j < dim; ++j)
            extra(j) = oracle::random_rational(rng, -3, 3, 2);
        bigger.push_back(TropPoint(extra));
        CHECK(trop_hull_contains(bigger, direct));

        // Tropical hull inside the alcoved hull.
        std::vector<RationalVector> pts;
        for (const auto& v : V)
            pts.push_back(v.sum_zero());
        const auto H = alcoved_hull(pts, shared_root_system({Family::A, dim - 1}));
        CHECK(H.contains(direct.sum_zero()));
    }
}

TEST_CASE("the hull of two points is a path of segments")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 3 + static_cast<int>(rng() % 2);
        RationalVector u(dim), v(dim);
        for (int j = 0; j < dim; ++j) {
            u(j) = oracle::random_rational(rng, -3, 3, 1);
            v(j) = oracle::random_rational(rng, -3, 3, 1);
        }
        const std::vector<TropPoint> V = {TropPoint(u), TropPoint(v)};
        u = V[0].coords();
        v = V[1].coords();
        // Breakpoints of t -> min(u, t + v) are t = u_j - v_j.
        std::vector<Rational> breaks;
        for (int j = 0; j < dim; ++j)
            breaks.push_back(u(j) - v(j));
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
        breaks.insert(breaks.begin(), breaks.front() - 1);
        breaks.push_back(breaks.back() + 1);

        for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
            const Rational lo = breaks[s];
            const Rational hi = breaks[s + 1];
            std::vector<RationalVector> seg;
            for (int q = 0; q <= 4; ++q) {
                const Rational t = lo + (hi - lo) * Rational(q, 4);
                seg.push_back(trop_linear_combination(V, {0, t}).sum_zero());
            }
            RationalMatrix D(static_cast<Eigen::Index>(seg.size() - 1), dim);
            for (std::size_t r = 1; r < seg.size(); ++r)
                D.row(static_cast<Eigen::Index>(r - 1)) = (seg[r] - seg[0]).transpose();
            CHECK(matrix_rank(D) <= 1);
        }
        // Beyond the extreme breakpoints the combination is constant.
        CHECK(trop_linear_combination(V, {0, breaks.back()}) == trop_linear_combination(V, {0, breaks.back() + 5}));
        CHECK(trop_linear_combination(V, {0, breaks.front()}) == trop_linear_combination(V, {0, breaks.front() - 5}));
    }
}
