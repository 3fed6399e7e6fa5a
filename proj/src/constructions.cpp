#include "alcove/constructions.hpp"

#include <algorithm>
#include <set>

namespace alcove {

namespace {

RationalMatrix rows_of(const RootSystem& rs, const std::vector<int>& roots)
{
    RationalMatrix M(static_cast<Eigen::Index>(roots.size()), rs.rank());
    for (std::size_t r = 0; r < roots.size(); ++r)
        M.row(static_cast<Eigen::Index>(r)) = rs.chart_normal(roots[r]).transpose();
    return M;
}

/// Feasible and tight on rank-many independent support hyperplanes of P.
void require_vertex(const HPolytope& P, const RationalVector& x, const char* what)
{
    const RootSystem& rs = P.root_system();
    if (!P.contains(x))
        throw VerificationFailure(std::string(what) + ": point " + format_vector(x) + " is outside P");
    std::vector<int> tight;
    for (const auto& c : P.constraints())
        if (inner_product(rs.root(c.root), x) == c.rhs)
            tight.push_back(c.root);
    if (tight.empty() || matrix_rank(rows_of(rs, tight)) != rs.rank())
        throw VerificationFailure(std::string(what) + ": point " + format_vector(x) + " is not a vertex");
}

std::vector<RationalVector> sorted_unique(std::vector<RationalVector> pts)
{
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const auto& a, const auto& b) { return lex_compare(a, b) == 0; }),
              pts.end());
    return pts;
}

/// The point with <theta_i, x> equal to the right-hand side of theta_i for all i.
RationalVector theta_seed(const SymmetricSpec& spec)
{
    const RootSystem& rs = *spec.rs;
    std::vector<int> ids;
    RationalVector rhs(rs.rank());
    for (const auto& t : theta_roots(rs)) {
        ids.push_back(rs.index_of(t));
        rhs(static_cast<Eigen::Index>(ids.size() - 1)) = spec.rhs(ids.back());
    }
    return rs.from_chart(solve_linear(rows_of(rs, ids), rhs));
}

std::vector<RationalVector> f4_seeds(const Rational& l, const Rational& m)
{
    if (f4_case(l, m) == F4Case::One)
        return {make_vector({2 * l - 2 * m, l - 2 * m, l - 2 * m, 0})};
    if (2 * l > 3 * m)
        return {make_vector({m, m - l, l - 2 * m, 0}), make_vector({m, l - 2 * m, m - l, 0})};
    // Below 4 mu / 3: pull back the seeds of P_{2 mu, lambda}.
    std::vector<RationalVector> out;
    const RationalMatrix At = f4_duality_matrix().transpose();
    for (const auto& x : f4_seeds(2 * m, l))
        out.push_back(At * x);
    return out;
}

} // namespace

Rational SymmetricSpec::rhs(int root) const
{
    if (rs->is_long(root))
        return lambda;
    if (!mu)
        throw InvalidSpec("symmetric spec: short root without mu");
    return *mu;
}

SymmetricSpec SymmetricSpec::scaled(const Rational& s) const
{
    SymmetricSpec out = *this;
    out.lambda *= s;
    if (out.mu)
        *out.mu *= s;
    return out;
}

SymmetricSpec make_spec(const CartanType& type, const Rational& lambda, std::optional<Rational> mu)
{
    SymmetricSpec spec{shared_root_system(type), lambda, std::move(mu)};
    validate(spec);
    return spec;
}

void validate(const SymmetricSpec& spec)
{
    if (!spec.rs)
        throw InvalidSpec("symmetric spec: no root system");
    const RootSystem& rs = *spec.rs;
    const std::string name = rs.type().name();
    if (spec.lambda <= 0)
        throw InvalidSpec(name + ": lambda must be positive");
    if (rs.simply_laced()) {
        if (spec.mu)
            throw InvalidSpec(name + " is simply laced and takes no mu");
        return;
    }
    if (!spec.mu)
        throw InvalidSpec(name + " needs mu for the short roots");
    const Rational& l = spec.lambda;
    const Rational& m = *spec.mu;
    if (m <= 0)
        throw InvalidSpec(name + ": mu must be positive");
    if (rs.type().family == Family::G) {
        std::vector<Constraint> cs;
        for (int a = 0; a < rs.size(); ++a)
            cs.push_back({a, spec.rhs(a)});
        const auto P = make_alcoved(spec.rs, cs);
        const auto support = support_values(P);
        for (int a = 0; a < rs.size(); ++a)
            if (support[static_cast<std::size_t>(a)] != spec.rhs(a))
                throw InvalidSpec(name + ": (lambda, mu) = (" + to_string(l) + ", " + to_string(m) +
                                  ") leaves the " + (rs.is_long(a) ? "long" : "short") +
                                  " roots unsupported");
        return;
    }
    if (m > l || l > 2 * m)
        throw InvalidSpec(name + ": need mu <= lambda <= 2 mu, got lambda = " + to_string(l) +
                          ", mu = " + to_string(m));
}

HPolytope symmetric_alcoved(const SymmetricSpec& spec)
{
    validate(spec);
    const RootSystem& rs = *spec.rs;
    std::vector<Constraint> cs;
    for (int a = 0; a < rs.size(); ++a)
        cs.push_back({a, spec.rhs(a)});
    HPolytope P = make_alcoved(spec.rs, cs);
    for (int k = 0; k < rs.rank(); ++k) {
        const auto perm = root_permutation(rs, simple_reflection(rs, k));
        for (int a = 0; a < rs.size(); ++a)
            if (*P.rhs_for(a) != *P.rhs_for(perm[static_cast<std::size_t>(a)]))
                throw VerificationFailure("symmetric_alcoved: right-hand sides not Weyl invariant");
    }
    return P;
}

F4Case f4_case(const Rational& lambda, const Rational& mu)
{
    return (3 * lambda >= 4 * mu && 2 * lambda <= 3 * mu) ? F4Case::One : F4Case::Two;
}

std::vector<RationalVector> seed_vertex(const SymmetricSpec& spec)
{
    const HPolytope P = symmetric_alcoved(spec);
    const RootSystem& rs = *spec.rs;
    const int n = rs.rank();
    const Rational& l = spec.lambda;
    std::vector<RationalVector> seeds;
    switch (rs.type().family) {
    case Family::A:
    case Family::D:
    case Family::E:
        if (rs.type() == CartanType{Family::E, 8}) {
            seeds.push_back(l / 2 * (rs.basis()[1] + rs.basis()[2]));
        } else {
            RationalVector y = RationalVector::Zero(n);
            y(n - 1) = l;
            seeds.push_back(rs.from_chart(y));
        }
        break;
    case Family::B: {
        RationalVector x(n);
        for (int i = 0; i < n; ++i)
            x(i) = (i + 1 < n) ? l - *spec.mu : *spec.mu;
        seeds.push_back(x);
        break;
    }
    case Family::F:
        seeds = f4_seeds(l, *spec.mu);
        break;
    case Family::C:
    case Family::G:
        seeds.push_back(theta_seed(spec));
        break;
    }
    for (const auto& x : seeds)
        require_vertex(P, x, "seed_vertex");
    return seeds;
}

std::vector<RationalVector> coxeter_orbit(const RootSystem& rs, const std::vector<RationalVector>& points)
{
    const RationalMatrix W = coxeter_element(rs).matrix;
    const int h = coxeter_number(rs);
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != rs.ambient_dim() || !rs.in_span(points[i]))
            throw PointOutside(i, "coxeter_orbit: point " + format_vector(points[i]) +
                                      " is not in the span of the roots");
        RationalVector p = points[i];
        for (int k = 0; k < h; ++k) {
            out.push_back(p);
            p = W * p;
        }
    }
    return sorted_unique(std::move(out));
}

GeneratorCertificate symmetric_generator_certificate(const SymmetricSpec& spec)
{
    GeneratorCertificate cert{spec, seed_vertex(spec), {}, false};
    cert.orbit_points = coxeter_orbit(*spec.rs, cert.seed_points);
    cert.verified = is_generating_set(symmetric_alcoved(spec), cert.orbit_points).generating;
    return cert;
}

std::vector<RationalVector> symmetric_generators(const SymmetricSpec& spec)
{
    auto cert = symmetric_generator_certificate(spec);
    if (!cert.verified)
        throw VerificationFailure("symmetric_generators: Coxeter orbit of the seed does not generate P for " +
                                  spec.rs->type().name());
    return std::move(cert.orbit_points);
}

namespace {

int an_rank(const RationalMatrix& c)
{
    if (c.rows() != c.cols() || c.rows() < 2)
        throw DimensionMismatch("A_n data must be a square matrix of size n + 1 >= 2");
    for (Eigen::Index i = 0; i < c.rows(); ++i)
        if (c(i, i) != 0)
            throw std::invalid_argument("A_n data must have a zero diagonal");
    return static_cast<int>(c.rows()) - 1;
}

RationalVector an_root(int dim, Eigen::Index i, Eigen::Index j)
{
    RationalVector a = RationalVector::Zero(dim);
    a(i) = 1;
    a(j) = -1;
    return a;
}

} // namespace

HPolytope an_polytope(const RationalMatrix& c)
{
    const int n = an_rank(c);
    auto rs = shared_root_system({Family::A, n});
    std::vector<std::pair<RationalVector, Rational>> cs;
    for (Eigen::Index i = 0; i <= n; ++i)
        for (Eigen::Index j = 0; j <= n; ++j)
            if (i != j)
                cs.emplace_back(an_root(n + 1, i, j), c(i, j));
    return make_alcoved(rs, cs);
}

RationalMatrix an_tighten(const RationalMatrix& c)
{
    const int n = an_rank(c);
    const HPolytope P = an_polytope(c);
    RationalMatrix out = RationalMatrix::Zero(n + 1, n + 1);
    for (Eigen::Index i = 0; i <= n; ++i)
        for (Eigen::Index j = 0; j <= n; ++j)
            if (i != j)
                out(i, j) = lp_max(P, an_root(n + 1, i, j)).value;
    return out;
}

std::vector<RationalVector> an_generators(const RationalMatrix& c)
{
    const int n = an_rank(c);
    for (Eigen::Index i = 0; i <= n; ++i)
        for (Eigen::Index j = 0; j <= n; ++j)
            for (Eigen::Index k = 0; k <= n; ++k)
                if (c(i, k) - c(j, k) > c(i, j))
                    throw std::invalid_argument(
                        "an_generators: inequalities are not tight (c(" + std::to_string(i) + "," +
                        std::to_string(k) + ") - c(" + std::to_string(j) + "," + std::to_string(k) +
                        ") > c(" + std::to_string(i) + "," + std::to_string(j) + "))");
    const HPolytope P = an_polytope(c);
    std::vector<RationalVector> points;
    std::vector<RationalVector> normalized;
    for (Eigen::Index k = 0; k <= n; ++k) {
        RationalVector p = c.col(k);
        const RationalVector q = normalize_sum_zero(p);
        if (!P.contains(q))
            throw VerificationFailure("an_generators: p^(" + std::to_string(k) + ") is outside P");
        points.push_back(std::move(p));
        normalized.push_back(q);
    }
    if (!is_generating_set(P, normalized).generating)
        throw VerificationFailure("an_generators: the points do not generate P");
    return points;
}

std::vector<RationalVector> rank2_generators(const HPolytope& P)
{
    const RootSystem& rs = P.root_system();
    if (rs.rank() != 2)
        throw std::invalid_argument("rank2_generators: root system " + rs.type().name() + " has rank " +
                                    std::to_string(rs.rank()));
    // Plane coordinates against an orthogonal (unnormalized) basis; positive
    // rescaling of the axes keeps the cyclic order of directions.
    const RationalVector& b1 = rs.basis()[0];
    const RationalVector u2 = rs.basis()[1] - (rs.gram()(0, 1) / rs.gram()(0, 0)) * b1;
    struct Dir {
        int root;
        Rational x, y;
    };
    std::vector<Dir> dirs;
    for (int a = 0; a < rs.size(); ++a)
        dirs.push_back({a, inner_product(rs.root(a), b1), inner_product(rs.root(a), u2)});
    auto half = [](const Dir& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    std::sort(dirs.begin(), dirs.end(), [&](const Dir& p, const Dir& q) {
        if (half(p) != half(q))
            return half(p) < half(q);
        return p.x * q.y - p.y * q.x > 0;
    });

    const auto support = support_values(P);
    std::vector<RationalVector> points;
    // Disjoint consecutive pairs cover every root once.
    for (std::size_t i = 0; i < dirs.size(); i += 2) {
        const int a = dirs[i].root;
        const int b = dirs[(i + 1) % dirs.size()].root;
        RationalVector rhs(2);
        rhs << support[static_cast<std::size_t>(a)], support[static_cast<std::size_t>(b)];
        const RationalVector x = rs.from_chart(solve_linear(rows_of(rs, {a, b}), rhs));
        if (!P.contains(x))
            throw VerificationFailure("rank2_generators: consecutive supports meet outside P");
        points.push_back(x);
    }
    points = sorted_unique(std::move(points));
    if (!is_generating_set(P, points).generating)
        throw VerificationFailure("rank2_generators: the points do not generate P");
    return points;
}

const RationalMatrix& f4_duality_matrix()
{
    static const RationalMatrix A = [] {
        RationalMatrix M(4, 4);
        M << 1, 1, 0, 0,
             1, -1, 0, 0,
             0, 0, 1, 1,
             0, 0, 1, -1;
        return RationalMatrix(M / Rational(2));
    }();
    return A;
}

RationalVector f4_duality_point(const RationalVector& x)
{
    static const RationalMatrix inv_t = matrix_inverse(f4_duality_matrix()).transpose();
    return inv_t * x;
}

HPolytope f4_duality(const HPolytope& P)
{
    const RootSystem& rs = P.root_system();
    if (rs.type() != CartanType{Family::F, 4})
        throw std::invalid_argument("f4_duality: expected an F4 polytope, got " + rs.type().name());
    if (static_cast<int>(P.constraints().size()) != rs.size())
        throw std::invalid_argument("f4_duality: polytope is not symmetric (missing roots)");
    std::optional<Rational> lambda, mu;
    for (const auto& c : P.constraints()) {
        auto& slot = rs.is_long(c.root) ? lambda : mu;
        if (slot && *slot != c.rhs)
            throw std::invalid_argument("f4_duality: polytope is not symmetric");
        slot = c.rhs;
    }

    // {<a, x> <= c} maps to {<A a, y> <= c}; A a is a root or half of one.
    const RationalMatrix& A = f4_duality_matrix();
    std::vector<Constraint> image;
    for (const auto& c : P.constraints()) {
        const RationalVector n = A * rs.root(c.root);
        if (auto idx = rs.find(n)) {
            image.push_back({*idx, c.rhs});
        } else if (auto idx2 = rs.find(RationalVector(2 * n))) {
            image.push_back({*idx2, 2 * c.rhs});
        } else {
            throw VerificationFailure("f4_duality: image of a root is not proportional to a root");
        }
    }
    HPolytope Q = make_alcoved(P.root_system_ptr(), image);
    for (const auto& c : Q.constraints())
        if (c.rhs != (rs.is_long(c.root) ? 2 * *mu : *lambda))
            throw VerificationFailure("f4_duality: image is not P_{2 mu, lambda}");
    return Q;
}

E8IncidenceReport verify_e8_incidences(const RationalVector& x, const Rational& lambda)
{
    const auto rs = shared_root_system({Family::E, 8});
    const auto orbits = gamma_orbit_partition(*rs);
    E8IncidenceReport report;
    auto on = [&](int root) { return inner_product(rs->root(root), x) == lambda; };

    report.inside = std::all_of(rs->roots().begin(), rs->roots().end(),
                                [&](const RationalVector& a) { return inner_product(a, x) <= lambda; });
    for (const auto& [k, i] : e8_printed_data().incidence_pairs)
        if (!on(orbits.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(k))))
            report.failing_pairs.emplace_back(k, i);
    for (std::size_t i = 0; i < orbits.size(); ++i)
        if (std::none_of(orbits[i].begin(), orbits[i].end(), on))
            report.untouched_orbits.push_back(static_cast<int>(i + 1));
    report.verified = report.inside && report.failing_pairs.empty() && report.untouched_orbits.empty();
    return report;
}

E8IncidenceReport verify_e8_incidences()
{
    const auto rs = shared_root_system({Family::E, 8});
    return verify_e8_incidences(RationalVector((rs->basis()[1] + rs->basis()[2]) / Rational(2)), 1);
}

} // namespace alcove
