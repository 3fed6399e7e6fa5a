#ifndef ALCOVE_TROPICAL_HPP
#define ALCOVE_TROPICAL_HPP

// Min-plus tropical convexity for type A.

#include "alcove/polytope.hpp"

#include <vector>

namespace alcove {

/// A point of R^{n+1} modulo the all-ones line, stored with first coordinate 0.
class TropPoint {
public:
    TropPoint() = default;
    /// Shifts any representative so the first coordinate is 0.
    explicit TropPoint(const RationalVector& representative);

    const RationalVector& coords() const { return coords_; }
    int size() const { return static_cast<int>(coords_.size()); }

    /// Sum-zero representative, the convention of the A_n root system.
    RationalVector sum_zero() const { return normalize_sum_zero(coords_); }

    bool operator==(const TropPoint& other) const { return coords_ == other.coords_; }

private:
    RationalVector coords_;
};

/// (mu (.) x) (+) (nu (.) y) = componentwise min(mu + x_i, nu + y_i), renormalized.
TropPoint trop_combine(const Rational& mu, const TropPoint& x, const Rational& nu, const TropPoint& y);

/// (+)_i (lambda_i (.) v_i)
TropPoint trop_linear_combination(const std::vector<TropPoint>& V, const std::vector<Rational>& lambda);

/// x = (+)_i (lambda_i (.) v_i) with lambda_i = max_j (x_j - v_ij).
bool trop_hull_contains(const std::vector<TropPoint>& V, const TropPoint& x);

struct TropVsAlcoved {
    HPolytope alcoved;
    /// Vertices of the alcoved hull (sum-zero), and those outside the tropical hull.
    std::vector<TropPoint> vertices;
    std::vector<TropPoint> outside;
    bool equal = false;
};

TropVsAlcoved trop_hull_vs_alcoved(const std::vector<TropPoint>& V);

} // namespace alcove

#endif // ALCOVE_TROPICAL_HPP
