#ifndef ALCOVE_EXACTQ_HPP
#define ALCOVE_EXACTQ_HPP

// Exact rational scalars and dense linear algebra over them.
//
// Everything in the library is computed over GMP rationals wrapped by
// Boost.Multiprecision, stored in Eigen dense containers. Expression templates
// of the multiprecision layer are disabled so Eigen's own expression machinery
// sees plain value types.

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alcove {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vec<Rational>;
using RationalMatrix = Mat<Rational>;
using IntegerVector = Vec<Integer>;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NoFiniteOrder : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact Euclidean scalar product.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar inner_product(const Eigen::MatrixBase<DerivedX>& x,
                                        const Eigen::MatrixBase<DerivedY>& y)
{
    if (x.size() != y.size())
        throw DimensionMismatch("inner_product: dimensions " + std::to_string(x.size()) +
                                " and " + std::to_string(y.size()));
    typename DerivedX::Scalar acc(0);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x(i) != 0 && y(i) != 0)
            acc += x(i) * y(i);
    }
    return acc;
}

/// Unique solution of A x = b for square nonsingular A.
template <typename Scalar>
Vec<Scalar> solve_linear(const Mat<Scalar>& A, const Vec<Scalar>& b)
{
    if (A.rows() != A.cols())
        throw DimensionMismatch("solve_linear: matrix is not square");
    if (A.rows() != b.size())
        throw DimensionMismatch("solve_linear: right-hand side has wrong length");
    Eigen::FullPivLU<Mat<Scalar>> lu(A);
    if (!lu.isInvertible())
        throw SingularMatrix("solve_linear: matrix is singular");
    Vec<Scalar> x = lu.solve(b);
    return x;
}

template <typename Scalar>
Eigen::Index matrix_rank(const Mat<Scalar>& A)
{
    if (A.size() == 0)
        return 0;
    return Eigen::FullPivLU<Mat<Scalar>>(A).rank();
}

template <typename Scalar>
Mat<Scalar> matrix_inverse(const Mat<Scalar>& A)
{
    if (A.rows() != A.cols())
        throw DimensionMismatch("matrix_inverse: matrix is not square");
    Eigen::FullPivLU<Mat<Scalar>> lu(A);
    if (!lu.isInvertible())
        throw SingularMatrix("matrix_inverse: matrix is singular");
    return lu.inverse();
}

/// Smallest k >= 1 with M^k = I. Throws NoFiniteOrder when none exists up to cap.
template <typename Scalar>
int matrix_order(const Mat<Scalar>& M, int cap)
{
    if (M.rows() != M.cols())
        throw DimensionMismatch("matrix_order: matrix is not square");
    if (cap < 1)
        throw std::invalid_argument("matrix_order: cap must be positive");
    const Mat<Scalar> identity = Mat<Scalar>::Identity(M.rows(), M.cols());
    Mat<Scalar> power = M;
    for (int k = 1; k <= cap; ++k) {
        if (power == identity)
            return k;
        power = (power * M).eval();
    }
    throw NoFiniteOrder("matrix_order: no order <= " + std::to_string(cap));
}

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p/q", "p", and plain decimals such as "-1.25".
Rational parse_rational(std::string_view text);

/// Lexicographic comparison of equally sized vectors.
std::strong_ordering lex_compare(const RationalVector& a, const RationalVector& b);

struct LexLess {
    bool operator()(const RationalVector& a, const RationalVector& b) const
    {
        return lex_compare(a, b) < 0;
    }
};

RationalVector make_vector(std::initializer_list<Rational> entries);
RationalVector to_vector(const std::vector<Rational>& entries);
std::vector<Rational> to_std(const RationalVector& v);

/// Lowest common multiple of all denominators.
Integer common_denominator(const RationalVector& v);

/// Scales a rational vector to a primitive integer vector pointing the same way.
IntegerVector primitive_integer(const RationalVector& v);

Integer gcd_of(const IntegerVector& v);

std::string format_vector(const RationalVector& v);

} // namespace alcove

#endif // ALCOVE_EXACTQ_HPP
