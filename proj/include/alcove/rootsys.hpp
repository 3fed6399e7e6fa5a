#ifndef ALCOVE_ROOTSYS_HPP
#define ALCOVE_ROOTSYS_HPP

#include "alcove/exactq.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alcove {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
    Family family = Family::A;
    int rank = 1;

    /// "A3", "E8", ...
    std::string name() const;
    std::string family_letter() const;

    /// Parses "F4" or a bare family letter combined with an explicit rank.
    static CartanType parse(std::string_view text);
    static CartanType parse(std::string_view family, int rank);

    bool operator==(const CartanType&) const = default;
};

class InvalidRootSystem : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Signals that a computed structure contradicts root system theory, which can
/// only happen through a broken realization or numbering.
class RealizationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * An irreducible reduced root system with a fixed rational realization and an
 * ordered basis b_1, ..., b_n.
 *
 * Roots are kept sorted lexicographically by coordinates. Points of the span
 * of the roots are also addressed in "chart" coordinates y_i = <b_i, x>, in
 * which every root acts through its integer coefficient vector in the basis.
 */
class RootSystem {
public:
    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }
    int ambient_dim() const { return ambient_dim_; }
    int size() const { return static_cast<int>(roots_.size()); }

    const std::vector<RationalVector>& roots() const { return roots_; }
    const RationalVector& root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }
    const std::vector<RationalVector>& basis() const { return basis_; }
    /// Root index of b_k (k is zero based).
    int basis_index(int k) const { return basis_index_.at(static_cast<std::size_t>(k)); }

    /// Columns are b_1, ..., b_n in ambient coordinates.
    const RationalMatrix& basis_matrix() const { return basis_matrix_; }
    const RationalMatrix& gram() const { return gram_; }

    /// Integer coefficients of root i with respect to the basis.
    const IntegerVector& coefficients(int i) const
    {
        return coefficients_.at(static_cast<std::size_t>(i));
    }
    /// Sum of the basis coefficients of root i.
    Integer height(int i) const;

    bool is_long(int i) const { return long_.at(static_cast<std::size_t>(i)); }
    bool simply_laced() const { return simply_laced_; }
    const Rational& squared_length(int i) const { return norms_.at(static_cast<std::size_t>(i)); }

    std::optional<int> find(const RationalVector& v) const;
    /// Like find but throws when v is not a root.
    int index_of(const RationalVector& v) const;

    RationalVector to_chart(const RationalVector& x) const;
    RationalVector from_chart(const RationalVector& y) const;
    /// Orthogonal projection onto the span of the roots.
    RationalVector project(const RationalVector& x) const;
    bool in_span(const RationalVector& x) const;

    /// Chart-coordinate normal of root i, i.e. its basis coefficients as rationals.
    RationalVector chart_normal(int i) const;
    /// The linear functional y -> <d, from_chart(y)> as a chart vector.
    RationalVector chart_functional(const RationalVector& d) const;

private:
    friend RootSystem build_root_system(const CartanType& type);

    RootSystem(CartanType type, std::vector<RationalVector> roots,
               std::vector<RationalVector> basis);

    CartanType type_;
    int ambient_dim_ = 0;
    std::vector<RationalVector> roots_;
    std::vector<RationalVector> basis_;
    std::vector<int> basis_index_;
    RationalMatrix basis_matrix_;
    RationalMatrix gram_;
    RationalMatrix chart_to_ambient_;
    std::vector<IntegerVector> coefficients_;
    std::vector<Rational> norms_;
    std::vector<bool> long_;
    bool simply_laced_ = true;
};

/// Builds the fixed realization of the given type; throws InvalidRootSystem for
/// unsupported (family, rank) pairs such as D3.
RootSystem build_root_system(const CartanType& type);
RootSystem build_root_system(Family family, int rank);

/// Shared immutable instance; cached per type.
std::shared_ptr<const RootSystem> shared_root_system(const CartanType& type);

struct WeylElement {
    RationalMatrix matrix;

    RationalVector apply(const RationalVector& x) const { return matrix * x; }
    WeylElement operator*(const WeylElement& other) const { return {matrix * other.matrix}; }
};

/// x - (2<a,x>/<a,a>) a
RationalVector reflect(const RationalVector& a, const RationalVector& x);
RationalMatrix reflection_matrix(const RationalVector& a);

WeylElement simple_reflection(const RootSystem& rs, int k);

/// s_1 * ... * s_n, so s_n acts first.
WeylElement coxeter_element(const RootSystem& rs);

/// Order of the Coxeter element, cross-checked against |roots| / rank.
int coxeter_number(const RootSystem& rs);

/// theta_i = s_n s_{n-1} ... s_{i+1} (b_i) for i = 1..n.
std::vector<RationalVector> theta_roots(const RootSystem& rs);

/// orbits[i][k] is the root index of omega^k theta_i; every orbit has h entries.
std::vector<std::vector<int>> gamma_orbit_partition(const RootSystem& rs);

/// Image index of every root under w; throws RealizationError if w does not
/// permute the roots.
std::vector<int> root_permutation(const RootSystem& rs, const WeylElement& w);

/// Root index of maximal height.
int highest_root(const RootSystem& rs);

/// The three 8x8 matrices printed for E8: the basis B (columns b_i), the Coxeter
/// element in basis coordinates, and theta_1..theta_8 in basis coordinates.
struct E8PrintedData {
    RationalMatrix basis;
    RationalMatrix omega;
    RationalMatrix theta;
    /// (k, i) pairs, i one based: the seed lies on the hyperplane of omega^k theta_i.
    std::vector<std::pair<int, int>> incidence_pairs;
};

const E8PrintedData& e8_printed_data();

/// Positions (one based) of the E8 basis columns used for the E6 and E7 sub-bases.
std::vector<int> e_series_subbasis(int rank);

} // namespace alcove

#endif // ALCOVE_ROOTSYS_HPP
