#include "alcove/paperlab.hpp"

#include "alcove/constructions.hpp"
#include "alcove/genset.hpp"
#include "alcove/tropical.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace alcove::lab {

namespace {

using io::Json;

Outcome pass(Json details = Json::object())
{
    return {Status::Verified, {}, std::move(details)};
}

Outcome fail(std::string witness, Json details = Json::object())
{
    return {Status::Refuted, std::move(witness), std::move(details)};
}

std::vector<CartanType> all_types()
{
    std::vector<CartanType> out;
    for (int n = 1; n <= 7; ++n)
        out.push_back({Family::A, n});
    for (int n = 2; n <= 4; ++n)
        out.push_back({Family::B, n});
    for (int n = 2; n <= 4; ++n)
        out.push_back({Family::C, n});
    for (int n = 4; n <= 6; ++n)
        out.push_back({Family::D, n});
    for (int n = 6; n <= 8; ++n)
        out.push_back({Family::E, n});
    out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

std::vector<CartanType> types_for(const RunOptions& o)
{
    if (o.params.type)
        return {*o.params.type};
    return all_types();
}

std::string fvec_string(const std::vector<std::uint64_t>& f)
{
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < f.size(); ++i)
        s << (i ? ", " : "") << f[i];
    s << ')';
    return s.str();
}

Json fvec_json(const std::vector<std::uint64_t>& f)
{
    Json j = Json::array();
    for (auto x : f)
        j.push_back(x);
    return j;
}

std::vector<int> to_ints(const IntegerVector& v)
{
    std::vector<int> out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(v(i).convert_to<int>());
    return out;
}

Rational random_rational(std::mt19937& rng, int lo, int hi, int max_den)
{
    const int den = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_den));
    const int span = (hi - lo) * den;
    const int num = lo * den + static_cast<int>(rng() % static_cast<unsigned>(span + 1));
    return Rational(num, den);
}

HPolytope symmetric(Family f, int n, const Rational& l, std::optional<Rational> m = std::nullopt)
{
    return symmetric_alcoved(make_spec({f, n}, l, std::move(m)));
}

HPolytope f4(const RunOptions& o, const Rational& l, const Rational& m)
{
    return symmetric(Family::F, 4, o.params.lambda.value_or(l), o.params.mu.value_or(m));
}

// Structural claims

Outcome nh_equals_phi(const RunOptions& o)
{
    Json rows = Json::array();
    for (const auto& t : types_for(o)) {
        const auto rs = shared_root_system(t);
        const int h = matrix_order(coxeter_element(*rs).matrix, 64);
        int longs = 0;
        for (int i = 0; i < rs->size(); ++i)
            longs += rs->is_long(i);
        rows.push_back({{"type", t.name()}, {"rank", rs->rank()}, {"coxeter_number", h},
                        {"roots", rs->size()}, {"long", longs}, {"short", rs->size() - longs}});
        if (rs->rank() * h != rs->size())
            return fail(t.name() + ": n h = " + std::to_string(rs->rank() * h) + " but |Phi| = " +
                            std::to_string(rs->size()),
                        {{"types", rows}});
    }
    return pass({{"types", rows}});
}

Outcome coxeter_numbers(const RunOptions& o)
{
    auto expected = [](const CartanType& t) {
        switch (t.family) {
        case Family::A: return t.rank + 1;
        case Family::B:
        case Family::C: return 2 * t.rank;
        case Family::D: return 2 * t.rank - 2;
        case Family::E: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
        case Family::F: return 12;
        case Family::G: return 6;
        }
        return 0;
    };
    Json rows = Json::object();
    for (const auto& t : types_for(o)) {
        const int h = coxeter_number(*shared_root_system(t));
        rows[t.name()] = h;
        if (h != expected(t))
            return fail(t.name() + ": h = " + std::to_string(h) + ", expected " + std::to_string(expected(t)),
                        {{"coxeter_numbers", rows}});
    }
    return pass({{"coxeter_numbers", rows}});
}

Outcome orbit_partition(const RunOptions& o)
{
    Json rows = Json::object();
    for (const auto& t : types_for(o)) {
        const auto rs = shared_root_system(t);
        const int h = coxeter_number(*rs);
        const auto orbits = gamma_orbit_partition(*rs);
        std::vector<int> seen(static_cast<std::size_t>(rs->size()), 0);
        for (const auto& orb : orbits) {
            std::set<int> distinct(orb.begin(), orb.end());
            if (static_cast<int>(distinct.size()) != h)
                return fail(t.name() + ": an orbit has " + std::to_string(distinct.size()) + " roots, h = " +
                            std::to_string(h));
            for (int r : distinct)
                ++seen[static_cast<std::size_t>(r)];
        }
        for (int r = 0; r < rs->size(); ++r)
            if (seen[static_cast<std::size_t>(r)] != 1)
                return fail(t.name() + ": root " + format_vector(rs->root(r)) + " lies in " +
                            std::to_string(seen[static_cast<std::size_t>(r)]) + " orbits");
        if (static_cast<int>(orbits.size()) != rs->rank())
            return fail(t.name() + ": " + std::to_string(orbits.size()) + " orbits");
        rows[t.name()] = {{"orbits", orbits.size()}, {"size", h}};
    }
    return pass({{"types", rows}});
}

Outcome reflections_permute(const RunOptions& o)
{
    Json rows = Json::object();
    for (const auto& t : types_for(o)) {
        const auto rs = shared_root_system(t);
        for (int a = 0; a < rs->size(); ++a) {
            std::vector<bool> hit(static_cast<std::size_t>(rs->size()), false);
            for (int b = 0; b < rs->size(); ++b) {
                const auto img = rs->find(reflect(rs->root(a), rs->root(b)));
                if (!img)
                    return fail(t.name() + ": s_a(b) is not a root for a = " + format_vector(rs->root(a)) +
                                ", b = " + format_vector(rs->root(b)));
                hit[static_cast<std::size_t>(*img)] = true;
            }
            if (std::find(hit.begin(), hit.end(), false) != hit.end())
                return fail(t.name() + ": reflection in " + format_vector(rs->root(a)) + " is not onto");
        }
        rows[t.name()] = rs->size();
    }
    return pass({{"reflections_checked", rows}});
}

Outcome length_classes(const RunOptions& o)
{
    Json rows = Json::object();
    for (const auto& t : types_for(o)) {
        const auto rs = shared_root_system(t);
        for (int k = 0; k < rs->rank(); ++k) {
            const auto perm = root_permutation(*rs, simple_reflection(*rs, k));
            for (int i = 0; i < rs->size(); ++i)
                if (rs->is_long(i) != rs->is_long(perm[static_cast<std::size_t>(i)]))
                    return fail(t.name() + ": s_" + std::to_string(k + 1) + " changes the length of " +
                                format_vector(rs->root(i)));
        }
        rows[t.name()] = rs->simply_laced() ? "single class" : "preserved";
    }
    return pass({{"types", rows}});
}

// Shortest path between Dynkin nodes, edges where the Gram entry is nonzero.
std::vector<int> dynkin_path(const RootSystem& rs, int from, int to)
{
    std::vector<int> parent(static_cast<std::size_t>(rs.rank()), -2);
    std::deque<int> queue{from};
    parent[static_cast<std::size_t>(from)] = -1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < rs.rank(); ++v)
            if (v != u && rs.gram()(u, v) != 0 && parent[static_cast<std::size_t>(v)] == -2) {
                parent[static_cast<std::size_t>(v)] = u;
                queue.push_back(v);
            }
    }
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    return path;
}

Outcome theta_geodesic(const RunOptions& o)
{
    std::vector<CartanType> types;
    for (const auto& t : types_for(o))
        if (shared_root_system(t)->simply_laced())
            types.push_back(t);
    Json checked = Json::array();
    for (const auto& t : types) {
        const auto rs = shared_root_system(t);
        const auto thetas = theta_roots(*rs);
        const int n = rs->rank();
        if (n > 1 && rs->gram()(n - 1, n - 2) == 0)
            return fail(t.name() + ": b_n is not adjacent to b_{n-1}");
        for (int i = 0; i < n; ++i) {
            RationalVector sum = RationalVector::Zero(rs->ambient_dim());
            for (int node : dynkin_path(*rs, i, n - 1))
                sum += rs->basis()[static_cast<std::size_t>(node)];
            if (thetas[static_cast<std::size_t>(i)] != sum)
                return fail(t.name() + ": theta_" + std::to_string(i + 1) + " = " +
                            format_vector(thetas[static_cast<std::size_t>(i)]) + " differs from the geodesic sum " +
                            format_vector(sum));
        }
        checked.push_back(t.name());
    }
    return pass({{"types", checked}});
}

Outcome theta_b_f4(const RunOptions&)
{
    for (int n = 2; n <= 6; ++n) {
        const auto rs = shared_root_system({Family::B, n});
        const auto th = theta_roots(*rs);
        for (int i = 0; i < n; ++i) {
            RationalVector want = RationalVector::Zero(n);
            want(n - 1) = 1;
            if (i + 1 < n)
                want(i) = 1;
            if (th[static_cast<std::size_t>(i)] != want)
                return fail("B" + std::to_string(n) + ": theta_" + std::to_string(i + 1) + " = " +
                            format_vector(th[static_cast<std::size_t>(i)]));
        }
    }
    const auto rs = shared_root_system({Family::F, 4});
    const Rational h(1, 2);
    const std::vector<RationalVector> want = {make_vector({1, 0, -1, 0}), make_vector({1, -1, 0, 0}),
                                              make_vector({h, -h, -h, h}), make_vector({h, -h, -h, -h})};
    const auto th = theta_roots(*rs);
    Json got = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        got.push_back(io::to_json(th[i]));
        if (th[i] != want[i])
            return fail("F4: theta_" + std::to_string(i + 1) + " = " + format_vector(th[i]));
    }
    return pass({{"b_ranks", "2..6"}, {"f4_thetas", got}});
}

Outcome f4_roots(const RunOptions&)
{
    const auto rs = shared_root_system({Family::F, 4});
    int longs = 0;
    for (int i = 0; i < rs->size(); ++i) {
        const RationalVector& a = rs->root(i);
        int nonzero = 0;
        for (Eigen::Index k = 0; k < 4; ++k)
            nonzero += a(k) != 0;
        const bool pm_pair = nonzero == 2 && rs->squared_length(i) == 2;
        const bool unit = nonzero == 1 && rs->squared_length(i) == 1;
        const bool half = nonzero == 4 && rs->squared_length(i) == 1;
        if (!(pm_pair || unit || half))
            return fail("unexpected root " + format_vector(a));
        if (rs->is_long(i) != pm_pair)
            return fail("length class of " + format_vector(a));
        longs += pm_pair;
    }
    if (rs->size() != 48 || longs != 24)
        return fail(std::to_string(rs->size()) + " roots, " + std::to_string(longs) + " long");
    return pass({{"roots", 48}, {"long", 24}, {"short", 24}});
}

Outcome e8_matrices(const RunOptions&)
{
    const auto rs = shared_root_system({Family::E, 8});
    const auto& data = e8_printed_data();
    if (rs->basis_matrix() != data.basis)
        return fail("basis differs from the printed B");
    const RationalMatrix& B = rs->basis_matrix();
    const RationalMatrix omega = matrix_inverse(B) * coxeter_element(*rs).matrix * B;
    if (omega != data.omega)
        return fail("Coxeter element in basis coordinates differs from the printed matrix");
    const auto th = theta_roots(*rs);
    for (int i = 0; i < 8; ++i) {
        const RationalVector c = solve_linear(B, th[static_cast<std::size_t>(i)]);
        if (c != RationalVector(data.theta.col(i)))
            return fail("theta_" + std::to_string(i + 1) + " = " + format_vector(c) + " in basis coordinates");
    }
    return pass({{"basis", "match"}, {"omega", "match"}, {"theta", "match"}});
}

/// The highest-root coefficients printed in the simply laced argument.
std::vector<int> printed_highest_root(const CartanType& t)
{
    const int n = t.rank;
    switch (t.family) {
    case Family::A: return std::vector<int>(static_cast<std::size_t>(n), 1);
    case Family::D: {
        std::vector<int> c(static_cast<std::size_t>(n), 2);
        c[0] = c[1] = c[static_cast<std::size_t>(n - 1)] = 1;
        return c;
    }
    case Family::E:
        if (n == 6)
            return {1, 2, 3, 3, 2, 1};
        if (n == 7)
            return {2, 2, 3, 4, 3, 2, 1};
        break;
    default: break;
    }
    return {};
}

std::vector<CartanType> printed_line_types()
{
    std::vector<CartanType> out;
    for (int n = 1; n <= 7; ++n)
        out.push_back({Family::A, n});
    for (int n = 4; n <= 7; ++n)
        out.push_back({Family::D, n});
    out.push_back({Family::E, 6});
    out.push_back({Family::E, 7});
    return out;
}

Outcome highest_root_lines(const RunOptions&)
{
    Json rows = Json::array();
    std::string witness;
    for (const auto& t : printed_line_types()) {
        const auto rs = shared_root_system(t);
        const auto printed = printed_highest_root(t);
        const auto actual = to_ints(rs->coefficients(highest_root(*rs)));
        int height = 0;
        for (int c : printed)
            height += c;
        rows.push_back({{"type", t.name()}, {"printed", printed}, {"computed", actual},
                        {"match", printed == actual}});
        if (printed != actual && witness.empty()) {
            std::ostringstream s;
            s << t.name() << ": printed coefficients have height " << height
              << " but the highest root has height h - 1 = " << coxeter_number(*rs) - 1;
            witness = s.str();
        }
    }
    if (!witness.empty())
        return fail(witness, {{"lines", rows}});
    return pass({{"lines", rows}});
}

Outcome highest_root_bn(const RunOptions&)
{
    Json rows = Json::object();
    for (const auto& t : printed_line_types()) {
        const auto rs = shared_root_system(t);
        const auto c = to_ints(rs->coefficients(highest_root(*rs)));
        rows[t.name()] = c.back();
        if (c.back() != 1)
            return fail(t.name() + ": b_n coefficient of the highest root is " + std::to_string(c.back()));
    }
    return pass({{"bn_coefficient", rows}});
}

// Type A and rank two

std::vector<RationalVector> square_points()
{
    return {make_vector({0, 0, 0}), make_vector({0, 0, 1}), make_vector({0, 1, 0}), make_vector({0, 1, 1})};
}

Outcome square_generation(const RunOptions&)
{
    const auto rs = shared_root_system({Family::A, 2});
    std::vector<RationalVector> sq;
    for (const auto& p : square_points())
        sq.push_back(normalize_sum_zero(p));
    const HPolytope P = alcoved_hull(sq, rs);
    const std::vector<RationalVector> gens = {sq[1], sq[2]};
    const auto check = is_generating_set(P, gens);
    if (!check.generating)
        return fail("support hyperplane of " + format_vector(rs->root(*check.uncovered_root)) + " is missed");
    const HPolytope H = alcoved_hull(gens, rs);
    if (support_values(H) != support_values(P))
        return fail("alcoved hull of the two points differs from the square");
    return pass({{"generators", 2}, {"vertices", vertices(P).vertices.size()}});
}

Outcome square_tropical_gap(const RunOptions&)
{
    const std::vector<TropPoint> V = {TropPoint(make_vector({0, 0, 1})), TropPoint(make_vector({0, 1, 0}))};
    const TropPoint corner(make_vector({0, 1, 1}));
    if (trop_hull_contains(V, corner))
        return fail("(0,1,1) lies in the tropical hull");
    const auto cmp = trop_hull_vs_alcoved(V);
    if (cmp.equal)
        return fail("tropical and alcoved hulls agree");
    return pass({{"tropical_contains_011", false}, {"alcoved_vertices", cmp.vertices.size()},
                 {"outside_tropical", cmp.outside.size()}});
}

Outcome an_generators_claim(const RunOptions&)
{
    std::mt19937 rng(20240611);
    Json rows = Json::object();
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            RationalMatrix c(n + 1, n + 1);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j)
                    c(i, j) = i == j ? Rational(0) : random_rational(rng, 0, 5, 3);
            const RationalMatrix t = an_tighten(c);
            const HPolytope P = an_polytope(t);
            const auto pts = an_generators(t);
            if (static_cast<int>(pts.size()) != n + 1)
                return fail("A" + std::to_string(n) + " trial " + std::to_string(trial) + ": " +
                            std::to_string(pts.size()) + " points");
            std::vector<RationalVector> proj;
            for (const auto& p : pts) {
                proj.push_back(normalize_sum_zero(p));
                if (!P.contains(proj.back()))
                    return fail("A" + std::to_string(n) + " trial " + std::to_string(trial) + ": " +
                                format_vector(p) + " is outside P");
            }
            const auto check = is_generating_set(P, proj);
            if (!check.generating)
                return fail("A" + std::to_string(n) + " trial " + std::to_string(trial) + ": root " +
                            format_vector(P.root_system().root(*check.uncovered_root)) + " uncovered");
        }
        rows["A" + std::to_string(n)] = 100;
    }
    return pass({{"instances", rows}});
}

Outcome rank2_claim(const RunOptions&)
{
    std::mt19937 rng(77);
    const std::vector<CartanType> types = {{Family::A, 2}, {Family::B, 2}, {Family::G, 2}};
    Json rows = Json::object();
    for (const auto& t : types) {
        const auto rs = shared_root_system(t);
        std::size_t most = 0;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<RationalVector> cloud;
            for (int k = 0; k < 4; ++k) {
                RationalVector p(rs->ambient_dim());
                for (Eigen::Index i = 0; i < p.size(); ++i)
                    p(i) = random_rational(rng, -3, 3, 2);
                cloud.push_back(rs->project(p));
            }
            const HPolytope P = alcoved_hull(cloud, rs);
            const auto pts = rank2_generators(P);
            most = std::max(most, pts.size());
            if (static_cast<int>(pts.size()) > rs->size() / 2)
                return fail(t.name() + ": " + std::to_string(pts.size()) + " points exceed |Phi|/2");
            const auto check = is_generating_set(P, pts);
            if (!check.generating)
                return fail(t.name() + ": root " + format_vector(rs->root(*check.uncovered_root)) + " uncovered");
        }
        rows[t.name()] = {{"instances", 20}, {"max_points", most}, {"bound", rs->size() / 2}};
    }
    return pass({{"types", rows}});
}

// D4 example

Outcome d4_fvector(const RunOptions&)
{
    const auto inc = incidence(io::d4_example_polytope());
    const auto f = f_vector(inc);
    const std::vector<std::uint64_t> want = {96, 192, 120, 24, 1};
    if (f != want)
        return fail("f-vector " + fvec_string(f), {{"f_vector", fvec_json(f)}});
    return pass({{"vertices", inc.vertices.size()}, {"f_vector", fvec_json(f)}});
}

Outcome d4_simple(const RunOptions&)
{
    const auto inc = incidence(io::d4_example_polytope());
    if (!is_simple(inc))
        return fail("some vertex lies on more than 4 facets");
    return pass({{"simple", true}});
}

Outcome d4_needs_8(const RunOptions&)
{
    const HPolytope P = io::d4_example_polytope();
    const auto inst = build_cover_instance(incidence(P));
    const auto sol = min_cover(inst);
    const auto greedy = greedy_cover(inst);
    const int h = coxeter_number(P.root_system());
    Json d = {{"min_cover", sol.size()},
              {"optimal", sol.optimal},
              {"lower_bound", cover_lower_bound(inst)},
              {"greedy", greedy.size()},
              {"coxeter_number", h},
              {"chosen_vertex_indices", sol.chosen}};
    if (!sol.optimal)
        return fail("search did not finish", d);
    if (sol.size() != 8)
        return fail("minimum cover has " + std::to_string(sol.size()) + " vertices", d);
    const auto smaller = find_cover_of_size(inst, 7);
    if (smaller.cover)
        return fail("a 7-vertex generating set exists", d);
    d["no_cover_of_size_7"] = smaller.exhausted;
    return pass(d);
}

// Symmetric polytopes

std::vector<SymmetricSpec> representative_specs(const RunOptions& o)
{
    if (o.params.type) {
        const CartanType t = *o.params.type;
        const bool two = !shared_root_system(t)->simply_laced();
        const Rational l = o.params.lambda.value_or(two ? Rational(t.family == Family::G ? 7 : 3) : Rational(1));
        std::optional<Rational> m = o.params.mu;
        if (two && !m)
            m = Rational(t.family == Family::G ? 4 : 2);
        return {make_spec(t, l, m)};
    }
    std::vector<SymmetricSpec> out;
    for (int n = 1; n <= 7; ++n)
        out.push_back(make_spec({Family::A, n}, Rational(3, 2)));
    for (int n = 2; n <= 4; ++n) {
        out.push_back(make_spec({Family::B, n}, 3, Rational(2)));
        out.push_back(make_spec({Family::B, n}, Rational(5, 2), Rational(2)));
        out.push_back(make_spec({Family::C, n}, 3, Rational(2)));
        out.push_back(make_spec({Family::C, n}, 4, Rational(3)));
    }
    out.push_back(make_spec({Family::D, 4}, 1));
    out.push_back(make_spec({Family::D, 5}, 2));
    out.push_back(make_spec({Family::G, 2}, 7, Rational(4)));
    out.push_back(make_spec({Family::G, 2}, Rational(7, 4), Rational(1)));
    out.push_back(make_spec({Family::E, 6}, 1));
    out.push_back(make_spec({Family::E, 7}, 1));
    out.push_back(make_spec({Family::E, 8}, 1));
    return out;
}

Outcome symmetric_h_generators(const RunOptions& o)
{
    Json rows = Json::array();
    for (const auto& sp : representative_specs(o)) {
        const auto cert = symmetric_generator_certificate(sp);
        const int h = coxeter_number(*sp.rs);
        Json row = {{"type", sp.rs->type().name()}, {"lambda", io::to_json(sp.lambda)}};
        if (sp.mu)
            row["mu"] = io::to_json(*sp.mu);
        row["points"] = cert.orbit_points.size();
        row["h"] = h;
        rows.push_back(row);
        const bool f4 = sp.rs->type().family == Family::F;
        if (!cert.verified)
            return fail(sp.rs->type().name() + ": orbit does not generate", {{"specs", rows}});
        if (!f4 && static_cast<int>(cert.orbit_points.size()) != h)
            return fail(sp.rs->type().name() + ": " + std::to_string(cert.orbit_points.size()) +
                            " points, h = " + std::to_string(h),
                        {{"specs", rows}});
    }
    return pass({{"specs", rows}});
}

Outcome e8_orbit_covers(const RunOptions&)
{
    const auto report = verify_e8_incidences();
    Json d = {{"inside", report.inside},
              {"pairs_checked", e8_printed_data().incidence_pairs.size()},
              {"failing_pairs", report.failing_pairs},
              {"untouched_orbits", report.untouched_orbits}};
    if (!report.verified) {
        std::string w = report.inside ? "" : "x is outside P_1; ";
        if (!report.failing_pairs.empty())
            w += "pair (k=" + std::to_string(report.failing_pairs[0].first) +
                 ", i=" + std::to_string(report.failing_pairs[0].second) + ") fails";
        else if (!report.untouched_orbits.empty())
            w += "orbit of theta_" + std::to_string(report.untouched_orbits[0]) + " untouched";
        return fail(w, d);
    }
    const auto gens = symmetric_generators(make_spec({Family::E, 8}, 1));
    d["generators"] = gens.size();
    if (gens.size() != 30)
        return fail(std::to_string(gens.size()) + " generators", d);
    return pass(d);
}

Outcome expect_fvector(const HPolytope& P, const std::vector<std::uint64_t>& want)
{
    const auto f = f_vector(P);
    if (f != want)
        return fail("f-vector " + fvec_string(f), {{"f_vector", fvec_json(f)}});
    return pass({{"f_vector", fvec_json(f)}});
}

Outcome f4_24cell(const RunOptions&)
{
    const HPolytope P = symmetric(Family::F, 4, 1, Rational(1));
    const auto inc = incidence(P);
    const auto f = f_vector(inc);
    const std::vector<std::uint64_t> want = {24, 96, 96, 24, 1};
    std::set<bool> classes;
    for (const auto& roots : inc.facet_roots)
        for (int a : roots)
            classes.insert(P.root_system().is_long(a));
    Json d = {{"f_vector", fvec_json(f)}, {"facet_length_classes", classes.size()}};
    if (f != want)
        return fail("f-vector " + fvec_string(f), d);
    return pass(d);
}

Outcome f4_case1_fvector(const RunOptions& o)
{
    return expect_fvector(f4(o, 7, 5), {288, 576, 336, 48, 1});
}

Outcome f4_case1_simple(const RunOptions& o)
{
    if (!is_simple(f4(o, 7, 5)))
        return fail("not simple");
    return pass({{"simple", true}});
}

Outcome generators_claim(const RunOptions& o, const Rational& l, const Rational& m, std::size_t bound, bool exact)
{
    const auto sp = make_spec({Family::F, 4}, o.params.lambda.value_or(l), o.params.mu.value_or(m));
    const auto cert = symmetric_generator_certificate(sp);
    Json d = {{"case", f4_case(sp.lambda, *sp.mu) == F4Case::One ? 1 : 2},
              {"seeds", cert.seed_points.size()},
              {"points", cert.orbit_points.size()},
              {"verified", cert.verified}};
    if (!cert.verified)
        return fail("orbit does not generate", d);
    if (exact ? cert.orbit_points.size() != bound : cert.orbit_points.size() > bound)
        return fail(std::to_string(cert.orbit_points.size()) + " points", d);
    return pass(d);
}

Outcome min_cover_claim(const HPolytope& P, int want)
{
    const auto inst = build_cover_instance(incidence(P));
    const int lb = cover_lower_bound(inst);
    const auto sol = min_cover(inst);
    Json d = {{"lower_bound", lb}, {"min_cover", sol.size()}, {"optimal", sol.optimal}};
    if (lb < want)
        return fail("lower bound " + std::to_string(lb), d);
    if (!sol.optimal || sol.size() != want)
        return fail("minimum cover " + std::to_string(sol.size()), d);
    return pass(d);
}

Outcome f4_case2_long_facet(const RunOptions& o)
{
    const HPolytope P = f4(o, 7, 4);
    const auto inc = incidence(P);
    const RootSystem& rs = P.root_system();
    for (std::size_t v = 0; v < inc.vertices.size(); ++v) {
        int longs = 0;
        for (int a = 0; a < rs.size(); ++a)
            longs += inc.vertex_support[v][static_cast<std::size_t>(a)] && rs.is_long(a);
        if (longs != 1)
            return fail("vertex " + format_vector(inc.vertices[v]) + " lies on " + std::to_string(longs) +
                        " long support hyperplanes");
    }
    return pass({{"vertices", inc.vertices.size()}, {"long_hyperplanes_per_vertex", 1}});
}

Outcome f4_duality_claim(const RunOptions&)
{
    const HPolytope P = symmetric(Family::F, 4, 7, Rational(4));
    const HPolytope Q = f4_duality(P);
    const HPolytope R = symmetric(Family::F, 4, 8, Rational(7));
    if (support_values(Q) != support_values(R))
        return fail("image differs from P_{8,7}");
    const auto ip = incidence(P);
    const auto iq = incidence(Q);
    std::set<RationalVector, LexLess> image;
    for (const auto& v : ip.vertices)
        image.insert(f4_duality_point(v));
    std::set<RationalVector, LexLess> target(iq.vertices.begin(), iq.vertices.end());
    if (image != target)
        return fail("vertices do not map onto vertices");
    const auto fp = f_vector(ip);
    const auto fq = f_vector(iq);
    const auto cp = min_cover(build_cover_instance(ip));
    const auto cq = min_cover(build_cover_instance(iq));
    Json d = {{"f_vector", fvec_json(fp)}, {"image_f_vector", fvec_json(fq)},
              {"min_cover", cp.size()}, {"image_min_cover", cq.size()}};
    if (fp != fq)
        return fail("f-vectors differ", d);
    if (!cp.optimal || !cq.optimal || cp.size() != cq.size())
        return fail("minimum covers differ", d);
    return pass(d);
}

Outcome window_facets(const RunOptions&)
{
    struct Case {
        Family f;
        int n;
        Rational l, m;
        int facet_classes;
    };
    const std::vector<Case> cases = {
        {Family::B, 3, 3, 2, 2}, {Family::B, 3, 2, 2, 1}, {Family::B, 3, 4, 2, 1},
        {Family::F, 4, 7, 5, 2}, {Family::F, 4, 7, 4, 2}, {Family::F, 4, 1, 1, 1}, {Family::F, 4, 2, 1, 1}};
    Json rows = Json::array();
    for (const auto& c : cases) {
        const auto sp = make_spec({c.f, c.n}, c.l, c.m);
        const HPolytope P = symmetric_alcoved(sp);
        const auto inc = incidence(P);
        const RootSystem& rs = P.root_system();
        for (int a = 0; a < rs.size(); ++a)
            if (inc.support[static_cast<std::size_t>(a)] != sp.rhs(a))
                return fail(rs.type().name() + " (" + alcove::to_string(c.l) + ", " + alcove::to_string(c.m) + "): root " +
                            format_vector(rs.root(a)) + " is not supporting");
        std::set<bool> classes;
        std::size_t facet_roots = 0;
        for (const auto& roots : inc.facet_roots) {
            facet_roots += roots.size();
            for (int a : roots)
                classes.insert(rs.is_long(a));
        }
        const std::string label = rs.type().name() + " (" + alcove::to_string(c.l) + ", " + alcove::to_string(c.m) + ")";
        rows.push_back({{"case", label}, {"facets", inc.facet_roots.size()}, {"facet_classes", classes.size()}});
        if (static_cast<int>(classes.size()) != c.facet_classes)
            return fail(label + ": " + std::to_string(classes.size()) + " length classes define facets",
                        {{"cases", rows}});
        if (c.facet_classes == 2 && static_cast<int>(facet_roots) != rs.size())
            return fail(label + ": only " + std::to_string(facet_roots) + " roots define facets", {{"cases", rows}});
    }
    return pass({{"cases", rows}});
}

Outcome f4_minimum_samples(const RunOptions&)
{
    // Strict interiors: ratios in (4/3, 3/2) need 12, ratios in (1, 4/3) or (3/2, 2) need 24.
    const std::vector<std::pair<Rational, int>> samples = {
        {Rational(7, 5), 12}, {Rational(17, 12), 12}, {Rational(29, 20), 12},
        {Rational(6, 5), 24}, {Rational(13, 10), 24}, {Rational(8, 5), 24}, {Rational(19, 10), 24}};
    Json rows = Json::array();
    for (const auto& [ratio, want] : samples) {
        const HPolytope P = symmetric(Family::F, 4, ratio, Rational(1));
        const auto inst = build_cover_instance(incidence(P));
        const auto sol = min_cover(inst);
        rows.push_back({{"lambda_over_mu", alcove::to_string(ratio)}, {"min_cover", sol.size()},
                        {"lower_bound", cover_lower_bound(inst)}});
        if (!sol.optimal || sol.size() != want)
            return fail("lambda/mu = " + alcove::to_string(ratio) + ": minimum cover " + std::to_string(sol.size()),
                        {{"samples", rows}});
    }
    return pass({{"samples", rows}});
}

Outcome e8_fvector(const RunOptions& o)
{
    if (!o.max_effort)
        return {Status::Skipped, {}, {{"reason", "exceeds the default effort; rerun with --max-effort"}}};
    dd::Options opts;
    if (!std::getenv("ALCOVE_MAX_DD_RAYS"))
        opts.max_rays = std::max<std::size_t>(opts.max_rays, 2'000'000);
    const std::vector<std::uint64_t> want = {19440, 207360, 483840, 483840, 241920, 60480, 6720, 240, 1};
    const auto f = f_vector(symmetric(Family::E, 8, 1), opts);
    if (f != want)
        return fail("f-vector " + fvec_string(f), {{"f_vector", fvec_json(f)}});
    return pass({{"f_vector", fvec_json(f)}, {"max_rays", opts.max_rays}});
}

std::vector<Claim> build_registry()
{
    const Rational l1(7), m1(5), l2(7), m2(4);
    std::vector<Claim> r = {
        {"nh-equals-phi", "rank times Coxeter number equals the number of roots", "root system preliminaries",
         nh_equals_phi},
        {"coxeter-numbers", "Coxeter numbers of every implemented type", "root system preliminaries",
         coxeter_numbers},
        {"orbit-partition", "the Coxeter orbits of theta_1..theta_n partition the roots",
         "root system preliminaries", orbit_partition},
        {"reflections-permute", "every root reflection permutes the roots", "root system preliminaries",
         reflections_permute},
        {"length-classes", "Weyl group elements preserve long and short roots", "types B and C",
         length_classes},
        {"theta-geodesic", "theta_i is the sum of the basis roots on the Dynkin path from b_i to b_n",
         "simply laced case", theta_geodesic},
        {"theta-b-f4", "explicit theta roots for B_n and F4", "types B, C and F4", theta_b_f4},
        {"f4-roots", "F4 has 24 long roots of the form +-a_i +- a_j and 24 short roots", "type F4", f4_roots},
        {"e8-matrices", "computed E8 basis, Coxeter element and theta roots equal the printed matrices",
         "type E8", e8_matrices},
        {"highest-root-lines", "printed highest roots of A_n, D_n, E6 and E7", "simply laced case",
         highest_root_lines},
        {"highest-root-bn", "the highest root of A_n, D_n, E6 and E7 has b_n coefficient 1",
         "simply laced case", highest_root_bn},
        {"square-generation", "two opposite corners generate the square as an alcoved polytope",
         "type A example", square_generation},
        {"square-tropical-gap", "the same two corners do not tropically generate (0,1,1)", "type A example",
         square_tropical_gap},
        {"an-generators", "the n+1 points p^(k) generate a tight A_n alcoved polytope",
         "type A proposition", an_generators_claim},
        {"rank2-generators", "rank two alcoved polytopes need at most |Phi|/2 generators", "rank two lemma",
         rank2_claim},
        {"d4-fvector", "the D4 example has f-vector (96, 192, 120, 24, 1)", "D4 example", d4_fvector},
        {"d4-simple", "the D4 example is simple", "D4 example", d4_simple},
        {"d4-needs-8", "the D4 example needs eight generators", "D4 example", d4_needs_8},
        {"symmetric-h-generators", "symmetric alcoved polytopes are generated by h vertices (LP check)",
         "main theorem", symmetric_h_generators},
        {"e8-orbit-covers", "the E8 seed lies on the listed hyperplanes and its orbit has 30 generators",
         "type E8", e8_orbit_covers},
        {"f4-24cell", "P_{1,1} of F4 has the face numbers of the 24-cell", "type F4", f4_24cell},
        {"window-facets", "inside the window all root hyperplanes support; at its ends one class defines facets",
         "types B, C and F4", window_facets},
        {"f4-case1-fvector", "P_{7,5} has f-vector (288, 576, 336, 48, 1)", "F4 theorem, first case",
         f4_case1_fvector},
        {"f4-case1-simple", "P_{7,5} is simple", "F4 theorem, first case", f4_case1_simple},
        {"f4-case1-generators", "the Coxeter orbit of the seed is a 12-point generating set",
         "F4 theorem, first case",
         [=](const RunOptions& o) { return generators_claim(o, l1, m1, 12, true); }},
        {"f4-case1-min-12", "P_{7,5} needs exactly 12 generators", "F4 theorem, first case",
         [=](const RunOptions& o) { return min_cover_claim(f4(o, l1, m1), 12); }},
        {"f4-case2-fvector", "P_{7,4} has f-vector (192, 384, 240, 48, 1)", "F4 theorem, second case",
         [=](const RunOptions& o) { return expect_fvector(f4(o, l2, m2), {192, 384, 240, 48, 1}); }},
        {"f4-case2-generators", "the orbits of x_1 and x_2 generate with at most 24 points",
         "F4 theorem, second case",
         [=](const RunOptions& o) { return generators_claim(o, l2, m2, 24, false); }},
        {"f4-case2-long-facet", "every vertex of P_{7,4} lies on exactly one long support hyperplane",
         "F4 theorem, second case", f4_case2_long_facet},
        {"f4-case2-min-24", "P_{7,4} needs exactly 24 generators", "F4 theorem, second case",
         [=](const RunOptions& o) { return min_cover_claim(f4(o, l2, m2), 24); }},
        {"f4-minimum-samples", "12 or 24 generators are minimal at sampled strict parameters",
         "F4 theorem, minimality", f4_minimum_samples},
        {"f4-duality", "A^{-T} maps P_{7,4} onto P_{8,7} with the same combinatorics", "type F4 duality",
         f4_duality_claim},
        {"e8-fvector", "P_1 of E8 has f-vector (19440, 207360, 483840, 483840, 241920, 60480, 6720, 240, 1)",
         "type E8", e8_fvector},
    };
    std::set<std::string> ids;
    for (const auto& c : r)
        if (!ids.insert(c.id).second)
            throw std::logic_error("duplicate claim id " + c.id);
    return r;
}

} // namespace

std::string to_string(Status s)
{
    switch (s) {
    case Status::Verified: return "verified";
    case Status::Refuted: return "refuted";
    case Status::Skipped: return "skipped";
    case Status::ResourceCapped: return "resource-capped";
    }
    return "unknown";
}

const std::vector<Claim>& claim_registry()
{
    static const std::vector<Claim> registry = build_registry();
    return registry;
}

const Claim& find_claim(const std::string& id)
{
    for (const auto& c : claim_registry())
        if (c.id == id)
            return c;
    throw UnknownClaim("unknown claim id: " + id);
}

ClaimResult verify(const std::string& id, const RunOptions& options)
{
    const Claim& claim = find_claim(id);
    ClaimResult out;
    out.id = claim.id;
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = claim.verifier(options);
        out.status = o.status;
        out.witness = std::move(o.witness);
        out.details = std::move(o.details);
    } catch (const dd::ResourceCapExceeded& e) {
        out.status = Status::ResourceCapped;
        out.details = {{"reason", e.what()}};
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr)
            throw;
        out.status = Status::Refuted;
        out.witness = e.what();
    }
    if (options.timing)
        out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return out;
}

std::vector<ClaimResult> verify_all(const RunOptions& options)
{
    std::vector<ClaimResult> out;
    for (const auto& c : claim_registry())
        out.push_back(verify(c.id, options));
    return out;
}

bool all_passed(const std::vector<ClaimResult>& results)
{
    return std::none_of(results.begin(), results.end(),
                        [](const ClaimResult& r) { return r.status == Status::Refuted; });
}

io::Json to_json(const ClaimResult& r)
{
    io::Json j = {{"id", r.id}, {"status", to_string(r.status)}};
    if (!r.witness.empty())
        j["witness"] = r.witness;
    j["elapsed_ms"] = r.elapsed_ms;
    for (const auto& [k, v] : r.details.items())
        j[k] = v;
    return j;
}

io::Json report_json(const std::vector<ClaimResult>& results)
{
    io::Json claims = io::Json::array();
    for (const auto& r : results)
        claims.push_back(to_json(r));
    return {{"claims", claims}};
}

} // namespace alcove::lab
