#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alcove/constructions.hpp"
#include "alcove/genset.hpp"
#include "oracles.hpp"

#include <random>

using namespace alcove;

namespace {

SymmetricSpec spec(Family f, int n, Rational l, std::optional<Rational> m = std::nullopt)
{
    return make_spec({f, n}, l, std::move(m));
}

std::vector<SymmetricSpec> representative_specs()
{
    std::vector<SymmetricSpec> out;
    for (int n = 1; n <= 7; ++n)
        out.push_back(spec(Family::A, n, Rational(3, 2)));
    for (int n = 2; n <= 4; ++n) {
        out.push_back(spec(Family::B, n, 3, 2));
        out.push_back(spec(Family::C, n, 3, 2));
    }
    out.push_back(spec(Family::D, 4, 1));
    out.push_back(spec(Family::D, 5, 2));
    out.push_back(spec(Family::G, 2, 7, 4));
    out.push_back(spec(Family::E, 6, 1));
    out.push_back(spec(Family::E, 7, 1));
    out.push_back(spec(Family::E, 8, 1));
    return out;
}

} // namespace

TEST_CASE("spec validation")
{
    CHECK_THROWS_AS(spec(Family::B, 2, 3, 1), InvalidSpec);
    CHECK_THROWS_AS(spec(Family::B, 2, 1, 2), InvalidSpec);
    CHECK_THROWS_AS(spec(Family::F, 4, 9, 4), InvalidSpec);
    CHECK_THROWS_AS(spec(Family::A, 2, 1, 1), InvalidSpec);
    CHECK_THROWS_AS(spec(Family::C, 3, 2), InvalidSpec);
    CHECK_THROWS_AS(spec(Family::A, 3, 0), InvalidSpec);
    CHECK_THROWS_AS(spec(Family::G, 2, 2, 2), InvalidSpec);
    CHECK_THROWS_AS(spec(Family::G, 2, 9, 4), InvalidSpec);
    CHECK_NOTHROW(spec(Family::G, 2, 6, 4));
    CHECK_NOTHROW(spec(Family::G, 2, 8, 4));
    CHECK_NOTHROW(spec(Family::B, 3, 2, 1));
}

TEST_CASE("symmetric_alcoved examples")
{
    CHECK(f_vector(symmetric_alcoved(spec(Family::A, 2, 1))) == std::vector<std::uint64_t>{6, 6, 1});
    const auto sq = symmetric_alcoved(spec(Family::B, 2, 2, 1));
    CHECK(f_vector(sq) == std::vector<std::uint64_t>{4, 4, 1});
    const auto inc = incidence(sq);
    for (const auto& roots : inc.facet_roots)
        for (int a : roots)
            CHECK_FALSE(sq.root_system().is_long(a));
    CHECK(f_vector(symmetric_alcoved(spec(Family::F, 4, 1, 1))) ==
          std::vector<std::uint64_t>{24, 96, 96, 24, 1});
}

TEST_CASE("seed vertices")
{
    CHECK(seed_vertex(spec(Family::B, 4, 3, 2)) == std::vector<RationalVector>{make_vector({1, 1, 1, 2})});

    const auto s1 = seed_vertex(spec(Family::F, 4, 7, 5));
    REQUIRE(s1.size() == 1);
    CHECK(s1[0] == make_vector({4, -3, -3, 0}));

    const auto s2 = seed_vertex(spec(Family::F, 4, 7, 4));
    REQUIRE(s2.size() == 2);
    CHECK(s2[0] == make_vector({4, -3, -1, 0}));
    CHECK(s2[1] == make_vector({4, -1, -3, 0}));

    const auto e8 = shared_root_system({Family::E, 8});
    const auto se = seed_vertex(spec(Family::E, 8, 1));
    REQUIRE(se.size() == 1);
    CHECK(se[0] == RationalVector((e8->basis()[1] + e8->basis()[2]) / Rational(2)));

    // Seeds lie on the theta hyperplanes with the matching right-hand side,
    // except in E8 where a different seed is used.
    for (const auto& sp : representative_specs()) {
        if (sp.rs->type() == CartanType{Family::E, 8})
            continue;
        CAPTURE(sp.rs->type().name());
        const auto seeds = seed_vertex(sp);
        REQUIRE(seeds.size() == 1);
        for (const auto& t : theta_roots(*sp.rs))
            CHECK(inner_product(t, seeds[0]) == sp.rhs(sp.rs->index_of(t)));
    }
    // F4 case one agrees with the same theta equations.
    const auto f = spec(Family::F, 4, 7, 5);
    for (const auto& t : theta_roots(*f.rs))
        CHECK(inner_product(t, s1[0]) == f.rhs(f.rs->index_of(t)));
}

TEST_CASE("coxeter orbits")
{
    const auto a1 = spec(Family::A, 1, 1);
    CHECK(coxeter_orbit(*a1.rs, seed_vertex(a1)).size() == 2);
    const auto b4 = spec(Family::B, 4, 3, 2);
    CHECK(coxeter_orbit(*b4.rs, seed_vertex(b4)).size() == 8);
    const auto f4 = spec(Family::F, 4, 7, 4);
    CHECK(coxeter_orbit(*f4.rs, seed_vertex(f4)).size() == 24);
    CHECK_THROWS_AS(coxeter_orbit(*shared_root_system({Family::A, 2}), {make_vector({1, 0, 0})}),
                    PointOutside);
}

TEST_CASE("symmetric generators have h elements and generate")
{
    for (const auto& sp : representative_specs()) {
        CAPTURE(sp.rs->type().name());
        const auto cert = symmetric_generator_certificate(sp);
        CHECK(cert.verified);
        CHECK(static_cast<int>(cert.orbit_points.size()) == coxeter_number(*sp.rs));
    }
    CHECK(symmetric_generators(spec(Family::D, 4, 1)).size() == 6);
    CHECK(symmetric_generators(spec(Family::E, 8, 1)).size() == 30);
    CHECK(symmetric_generators(spec(Family::F, 4, 7, 5)).size() == 12);
}

TEST_CASE("F4 parameter cases")
{
    CHECK(f4_case(7, 5) == F4Case::One);
    CHECK(f4_case(4, 3) == F4Case::One);
    CHECK(f4_case(3, 2) == F4Case::One);
    CHECK(f4_case(7, 4) == F4Case::Two);
    CHECK(f4_case(5, 4) == F4Case::Two);
    CHECK(f4_case(1, 1) == F4Case::Two);
    CHECK(f4_case(2, 1) == F4Case::Two);
    const std::vector<std::pair<int, int>> params = {{7, 5}, {4, 3}, {3, 2}, {7, 4}, {5, 4}, {1, 1}, {2, 1}, {9, 7}};
    for (auto [l, m] : params) {
        CAPTURE(l);
        CAPTURE(m);
        const auto cert = symmetric_generator_certificate(spec(Family::F, 4, l, m));
        CHECK(cert.verified);
        const std::size_t expect = f4_case(l, m) == F4Case::One ? 12 : 24;
        CHECK(cert.orbit_points.size() <= expect);
    }
}

TEST_CASE("scaling invariance")
{
    const Rational s(5, 3);
    for (const auto& sp : representative_specs()) {
        if (sp.rs->rank() > 6)
            continue;
        auto base = symmetric_generators(sp);
        for (auto& p : base)
            p *= s;
        std::sort(base.begin(), base.end(), LexLess{});
        CHECK(symmetric_generators(sp.scaled(s)) == base);
    }
}

TEST_CASE("E8 incidences")
{
    const auto rep = verify_e8_incidences();
    CHECK(rep.verified);
    CHECK(rep.inside);
    CHECK(rep.failing_pairs.empty());
    CHECK(rep.untouched_orbits.empty());
    CHECK(e8_printed_data().incidence_pairs.size() == 14);
    CHECK(e8_printed_data().incidence_pairs.front() == std::pair<int, int>{17, 1});

    const auto rs = shared_root_system({Family::E, 8});
    RationalVector x = (rs->basis()[1] + rs->basis()[2]) / Rational(2);
    x(0) += Rational(1, 10);
    const auto bad = verify_e8_incidences(x, 1);
    CHECK_FALSE(bad.verified);
    CHECK_FALSE(bad.failing_pairs.empty());
}

TEST_CASE("A_n generators")
{
    RationalMatrix c1(2, 2);
    c1 << 0, 2, 3, 0;
    const auto p1 = an_generators(c1);
    CHECK(p1[0] == make_vector({0, 3}));
    CHECK(p1[1] == make_vector({2, 0}));

    RationalMatrix ones = RationalMatrix::Constant(3, 3, Rational(1));
    ones.diagonal().setZero();
    const auto p2 = an_generators(ones);
    CHECK(p2[0] == make_vector({0, 1, 1}));
    CHECK(p2[1] == make_vector({1, 0, 1}));
    CHECK(p2[2] == make_vector({1, 1, 0}));

    const RationalMatrix zero = RationalMatrix::Zero(4, 4);
    const auto p3 = an_generators(zero);
    for (const auto& p : p3)
        CHECK(p == RationalVector::Zero(4));

    RationalMatrix loose = RationalMatrix::Constant(3, 3, Rational(5));
    loose.diagonal().setZero();
    loose(0, 1) = 1;
    loose(1, 2) = 1;
    CHECK_THROWS_AS(an_generators(loose), std::invalid_argument);
    CHECK_NOTHROW(an_generators(an_tighten(loose)));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 4;
        RationalMatrix c(n + 1, n + 1);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                c(i, j) = i == j ? Rational(0) : oracle::random_rational(rng, 0, 5, 3);
        const RationalMatrix t = an_tighten(c);
        const auto pts = an_generators(t);
        CHECK(static_cast<int>(pts.size()) == n + 1);
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l)
                if (l != k)
                    CHECK(pts[static_cast<std::size_t>(k)](l) - pts[static_cast<std::size_t>(k)](k) == t(l, k));
    }
}

TEST_CASE("rank two generators")
{
    CHECK(rank2_generators(symmetric_alcoved(spec(Family::A, 2, 1))).size() == 3);
    CHECK(rank2_generators(symmetric_alcoved(spec(Family::G, 2, 7, 4))).size() == 6);
    CHECK(rank2_generators(symmetric_alcoved(spec(Family::B, 2, 2, 1))).size() == 4);
    CHECK_THROWS_AS(rank2_generators(symmetric_alcoved(spec(Family::A, 3, 1))), std::invalid_argument);

    std::mt19937 rng(5);
    int tried = 0;
    while (tried < 30) {
        const auto P = oracle::random_small_polytope(rng);
        const RootSystem& rs = P.root_system();
        if (rs.rank() != 2)
            continue;
        ++tried;
        const auto S = alcoved_hull(oracle::brute_vertices(P), P.root_system_ptr());
        const auto pts = rank2_generators(S);
        CHECK(static_cast<int>(pts.size()) <= rs.size() / 2);
        CHECK(is_generating_set(S, pts).generating);
    }
}

TEST_CASE("F4 duality")
{
    const auto P11 = symmetric_alcoved(spec(Family::F, 4, 1, 1));
    const auto D11 = f4_duality(P11);
    const auto P21 = symmetric_alcoved(spec(Family::F, 4, 2, 1));
    CHECK(D11.chart_rhs() == P21.chart_rhs());

    const auto P74 = symmetric_alcoved(spec(Family::F, 4, 7, 4));
    const auto D74 = f4_duality(P74);
    const auto P87 = symmetric_alcoved(spec(Family::F, 4, 8, 7));
    for (std::size_t i = 0; i < D74.constraints().size(); ++i)
        CHECK(D74.constraints()[i].rhs == P87.constraints()[i].rhs);
    const auto inc74 = incidence(P74);
    const auto inc87 = incidence(D74);
    CHECK(f_vector(inc74) == f_vector(inc87));
    CHECK(min_cover(build_cover_instance(inc74)).size() == min_cover(build_cover_instance(inc87)).size());

    // The vertices map onto the vertices.
    std::vector<RationalVector> mapped;
    for (const auto& v : inc74.vertices)
        mapped.push_back(f4_duality_point(v));
    std::sort(mapped.begin(), mapped.end(), LexLess{});
    CHECK(mapped == inc87.vertices);

    const auto twice = f4_duality(D74);
    for (std::size_t i = 0; i < twice.constraints().size(); ++i)
        CHECK(twice.constraints()[i].rhs == 2 * P74.constraints()[i].rhs);

    CHECK_THROWS_AS(f4_duality(symmetric_alcoved(spec(Family::B, 4, 3, 2))), std::invalid_argument);
}
