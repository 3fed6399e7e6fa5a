#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alcove/genset.hpp"
#include "alcove/io.hpp"
#include "oracles.hpp"

#include <random>

using namespace alcove;

namespace {

HPolytope two_class(Family f, int n, const Rational& lambda, const Rational& mu)
{
    auto rs = shared_root_system({f, n});
    std::vector<Constraint> cs;
    for (int a = 0; a < rs->size(); ++a)
        cs.push_back({a, rs->is_long(a) ? lambda : mu});
    return make_alcoved(rs, cs);
}

std::vector<RationalVector> pick(const IncidenceStructure& inc, const std::vector<int>& ids)
{
    std::vector<RationalVector> out;
    for (int i : ids)
        out.push_back(inc.vertices[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace

TEST_CASE("small instances")
{
    const auto single = make_cover_instance(3, {{0}, {0, 1, 2}, {2}});
    const auto g = greedy_cover(single);
    CHECK(g.chosen == std::vector<int>{1});
    CHECK(min_cover(single).size() == 1);
    CHECK_THROWS_AS(greedy_cover(make_cover_instance(3, {{0}, {1}})), std::invalid_argument);
    CHECK_THROWS_AS(make_cover_instance(2, {{2}}), std::invalid_argument);

    // Greedy takes the big set first and then needs two more; two suffice.
    const auto trap = make_cover_instance(6, {{0, 1, 2}, {3, 4, 5}, {0, 1, 3, 4}, {2}, {5}});
    CHECK(greedy_cover(trap).size() == 3);
    const auto m = min_cover(trap);
    CHECK(m.size() == 2);
    CHECK(m.optimal);
    CHECK(m.chosen == std::vector<int>{0, 1});
    CHECK_FALSE(find_cover_of_size(trap, 1).cover);
}

TEST_CASE("square instance")
{
    auto rs = shared_root_system({Family::A, 2});
    std::vector<RationalVector> pts = {normalize_sum_zero(make_vector({0, 0, 1})),
                                       normalize_sum_zero(make_vector({0, 1, 0}))};
    const auto P = alcoved_hull(pts, rs);
    const auto inc = incidence(P);
    const auto inst = build_cover_instance(inc);
    CHECK(inst.universe_size() == 6);
    CHECK(inst.candidate_count() == 4);
    const auto g = greedy_cover(inst);
    CHECK(g.size() == 2);
    CHECK(is_generating_set(P, pick(inc, g.chosen)).generating);
}

TEST_CASE("D4 example needs eight")
{
    const auto P = io::d4_example_polytope();
    const auto inc = incidence(P);
    const auto inst = build_cover_instance(inc);
    CHECK(inst.universe_size() == 24);
    CHECK(inst.candidate_count() == 96);
    CHECK(cover_lower_bound(inst) >= 6);
    const auto g = greedy_cover(inst);
    const auto m = min_cover(inst);
    CHECK(m.size() == 8);
    CHECK(m.optimal);
    CHECK(g.size() >= 8);
    CHECK(covers_all(inst, m.chosen));
    CHECK(is_generating_set(P, pick(inc, m.chosen)).generating);
    const auto seven = find_cover_of_size(inst, 7);
    CHECK(seven.exhausted);
    CHECK_FALSE(seven.cover);
}

TEST_CASE("F4 case bounds")
{
    const auto case1 = build_cover_instance(two_class(Family::F, 4, 7, 5));
    CHECK(case1.universe_size() == 48);
    CHECK(case1.candidate_count() == 288);
    CHECK(cover_lower_bound(case1) == 12);
    const auto m1 = min_cover(case1);
    CHECK(m1.size() == 12);
    CHECK(m1.optimal);

    const auto case2 = build_cover_instance(two_class(Family::F, 4, 7, 4));
    CHECK(cover_lower_bound(case2) == 24);
    const auto m2 = min_cover(case2);
    CHECK(m2.size() == 24);
    CHECK(m2.optimal);
}

TEST_CASE("min_cover matches exhaustive search on random instances")
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        const int nu = 1 + static_cast<int>(rng() % 12);
        const int nc = 1 + static_cast<int>(rng() % 20);
        std::vector<std::vector<int>> sets(static_cast<std::size_t>(nc));
        for (auto& s : sets)
            for (int e = 0; e < nu; ++e)
                if (rng() % 4 == 0)
                    s.push_back(e);
        for (int e = 0; e < nu; ++e)
            sets[rng() % sets.size()].push_back(e);
        const auto inst = make_cover_instance(nu, sets);
        const auto brute = oracle::brute_min_cover(nu, sets);
        REQUIRE(brute);
        const auto m = min_cover(inst);
        const auto g = greedy_cover(inst);
        const int lb = cover_lower_bound(inst);
        CHECK(m.optimal);
        CHECK(m.size() == *brute);
        CHECK(lb <= m.size());
        CHECK(m.size() <= g.size());
        CHECK(covers_all(inst, m.chosen));
        CHECK(covers_all(inst, g.chosen));
        // Certificate: nothing smaller exists.
        const auto smaller = find_cover_of_size(inst, m.size() - 1);
        CHECK(smaller.exhausted);
        CHECK_FALSE(smaller.cover);
    }
}

TEST_CASE("budget handling")
{
    const auto inst = build_cover_instance(io::d4_example_polytope());
    const auto m = min_cover(inst, 3);
    CHECK_FALSE(m.optimal);
    CHECK(covers_all(inst, m.chosen));
    CHECK_FALSE(find_cover_of_size(inst, 7, 3).exhausted);

    CoverInstance big;
    big.universe = {0};
    big.covers.assign(kUnbudgetedCandidateLimit + 1, Bitset(1, 1));
    CHECK_THROWS_AS(min_cover(big), std::invalid_argument);
    CHECK(min_cover(big, 1000).size() == 1);
}
