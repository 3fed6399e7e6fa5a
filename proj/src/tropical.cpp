#include "alcove/tropical.hpp"

#include <algorithm>
#include <stdexcept>

namespace alcove {

TropPoint::TropPoint(const RationalVector& representative) : coords_(representative)
{
    if (coords_.size() == 0)
        throw DimensionMismatch("TropPoint: empty coordinate vector");
    const Rational shift = coords_(0);
    for (Eigen::Index i = 0; i < coords_.size(); ++i)
        coords_(i) -= shift;
}

TropPoint trop_combine(const Rational& mu, const TropPoint& x, const Rational& nu, const TropPoint& y)
{
    return trop_linear_combination({x, y}, {mu, nu});
}

TropPoint trop_linear_combination(const std::vector<TropPoint>& V, const std::vector<Rational>& lambda)
{
    if (V.empty() || V.size() != lambda.size())
        throw DimensionMismatch("trop_linear_combination: need one scalar per point");
    RationalVector out = V.front().coords();
    for (Eigen::Index j = 0; j < out.size(); ++j)
        out(j) += lambda.front();
    for (std::size_t i = 1; i < V.size(); ++i) {
        if (V[i].size() != V.front().size())
            throw DimensionMismatch("trop_linear_combination: points differ in dimension");
        for (Eigen::Index j = 0; j < out.size(); ++j)
            out(j) = std::min(out(j), lambda[i] + V[i].coords()(j));
    }
    return TropPoint(out);
}

bool trop_hull_contains(const std::vector<TropPoint>& V, const TropPoint& x)
{
    if (V.empty())
        throw std::invalid_argument("trop_hull_contains: empty generator list");
    std::vector<Rational> lambda;
    for (const auto& v : V) {
        if (v.size() != x.size())
            throw DimensionMismatch("trop_hull_contains: points differ in dimension");
        Rational best = x.coords()(0) - v.coords()(0);
        for (Eigen::Index j = 1; j < x.coords().size(); ++j)
            best = std::max(best, x.coords()(j) - v.coords()(j));
        lambda.push_back(best);
    }
    return trop_linear_combination(V, lambda) == x;
}

TropVsAlcoved trop_hull_vs_alcoved(const std::vector<TropPoint>& V)
{
    if (V.empty())
        throw std::invalid_argument("trop_hull_vs_alcoved: empty generator list");
    const int n = V.front().size() - 1;
    if (n < 1)
        throw DimensionMismatch("trop_hull_vs_alcoved: points need at least two coordinates");
    std::vector<RationalVector> pts;
    for (const auto& v : V) {
        if (v.size() != n + 1)
            throw DimensionMismatch("trop_hull_vs_alcoved: points differ in dimension");
        pts.push_back(v.sum_zero());
    }
    TropVsAlcoved report{alcoved_hull(pts, shared_root_system({Family::A, n})), {}, {}, false};
    for (const auto& v : alcove::vertices(report.alcoved).vertices) {
        TropPoint t(v);
        if (!trop_hull_contains(V, t))
            report.outside.push_back(t);
        report.vertices.push_back(std::move(t));
    }
    report.equal = report.outside.empty();
    return report;
}

} // namespace alcove
