#ifndef ALCOVE_CONSTRUCTIONS_HPP
#define ALCOVE_CONSTRUCTIONS_HPP

// Explicit generator constructions for alcoved polytopes.

#include "alcove/polytope.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace alcove {

class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction produced something that fails its own verification.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Weyl-invariant right-hand sides: lambda on long roots, mu on short roots.
struct SymmetricSpec {
    std::shared_ptr<const RootSystem> rs;
    Rational lambda;
    /// Required exactly for the non simply laced types.
    std::optional<Rational> mu;

    Rational rhs(int root) const;
    SymmetricSpec scaled(const Rational& s) const;
};

SymmetricSpec make_spec(const CartanType& type, const Rational& lambda,
                        std::optional<Rational> mu = std::nullopt);

/// Checks positivity, presence of mu, and the window mu <= lambda <= 2 mu for
/// B, C and F4. G2 is checked by LP: both length classes must be supporting.
void validate(const SymmetricSpec& spec);

HPolytope symmetric_alcoved(const SymmetricSpec& spec);

enum class F4Case { One, Two };

/// Case one on the closed interval 4 mu / 3 <= lambda <= 3 mu / 2.
F4Case f4_case(const Rational& lambda, const Rational& mu);

/// One seed vertex, or two for F4 case two. Each is checked to be a vertex.
std::vector<RationalVector> seed_vertex(const SymmetricSpec& spec);

/// Union of omega^k p over k < h, deduplicated and sorted.
std::vector<RationalVector> coxeter_orbit(const RootSystem& rs, const std::vector<RationalVector>& points);

struct GeneratorCertificate {
    SymmetricSpec spec;
    std::vector<RationalVector> seed_points;
    std::vector<RationalVector> orbit_points;
    bool verified = false;
};

/// Coxeter orbit of the seeds, verified to generate by LP only.
GeneratorCertificate symmetric_generator_certificate(const SymmetricSpec& spec);
std::vector<RationalVector> symmetric_generators(const SymmetricSpec& spec);

/// (n+1) x (n+1) right-hand sides c(i, j) of x_i - x_j <= c(i, j), zero diagonal.
HPolytope an_polytope(const RationalMatrix& c);

/// Replaces every c(i, j) by the support value of x_i - x_j.
RationalMatrix an_tighten(const RationalMatrix& c);

/// p^(k)_i = c(i, k), as representatives in R^{n+1}; requires the triangle
/// conditions c(i, k) - c(j, k) <= c(i, j). Each point is checked to lie in P.
std::vector<RationalVector> an_generators(const RationalMatrix& c);

/// Roots in angular order are split into consecutive pairs; each pair's two
/// support lines meet in a vertex. Deduplicated and sorted; P must have rank 2.
std::vector<RationalVector> rank2_generators(const HPolytope& P);

/// The 4 x 4 matrix A exchanging long roots and doubled short roots.
const RationalMatrix& f4_duality_matrix();

/// Image of P under A^{-T}; P must be an F4 symmetric polytope P_{lambda, mu}
/// and the result is checked to equal P_{2 mu, lambda}.
HPolytope f4_duality(const HPolytope& P);
RationalVector f4_duality_point(const RationalVector& x);

struct E8IncidenceReport {
    bool verified = false;
    bool inside = false;
    std::vector<std::pair<int, int>> failing_pairs;
    /// One based indices i whose orbit of theta_i the point misses.
    std::vector<int> untouched_orbits;
};

/// The listed (k, i) incidences for x against P_lambda of E8.
E8IncidenceReport verify_e8_incidences(const RationalVector& x, const Rational& lambda = 1);
/// With x = (b_2 + b_3) / 2 and lambda = 1.
E8IncidenceReport verify_e8_incidences();

} // namespace alcove

#endif // ALCOVE_CONSTRUCTIONS_HPP
