#include "alcove/dd.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdlib>
#include <string>

namespace alcove::dd {

std::size_t default_max_rays()
{
    if (const char* env = std::getenv("ALCOVE_MAX_DD_RAYS")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return kDefaultMaxRays;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
    IntegerVector z;
    Bits zeros;
};

Integer dot(const IntegerVector& a, const IntegerVector& b)
{
    Integer s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != 0 && b(i) != 0)
            s += a(i) * b(i);
    return s;
}

void make_primitive(IntegerVector& v)
{
    const Integer g = gcd_of(v);
    if (g > 1)
        for (Eigen::Index i = 0; i < v.size(); ++i)
            v(i) /= g;
}

} // namespace

std::vector<IntegerVector> extreme_rays(const std::vector<IntegerVector>& rows, const Options& options)
{
    if (rows.empty())
        throw std::invalid_argument("extreme_rays: no constraints");
    const auto d = rows.front().size();
    const std::size_t m = rows.size();
    for (const auto& r : rows)
        if (r.size() != d)
            throw DimensionMismatch("extreme_rays: ragged constraint rows");

    // Greedy choice of d independent rows for the initial simplicial cone.
    std::vector<std::size_t> initial;
    RationalMatrix basis(0, d);
    for (std::size_t i = 0; i < m && static_cast<Eigen::Index>(initial.size()) < d; ++i) {
        RationalMatrix trial(basis.rows() + 1, d);
        trial.topRows(basis.rows()) = basis;
        for (Eigen::Index k = 0; k < d; ++k)
            trial(basis.rows(), k) = Rational(rows[i](k));
        if (matrix_rank(trial) == trial.rows()) {
            basis = std::move(trial);
            initial.push_back(i);
        }
    }
    if (static_cast<Eigen::Index>(initial.size()) < d)
        throw std::invalid_argument("extreme_rays: constraint matrix lacks full column rank");

    const RationalMatrix inv = matrix_inverse(basis);
    std::vector<Ray> rays;
    Bits processed(m);
    for (std::size_t i : initial)
        processed.set(i);
    for (Eigen::Index k = 0; k < d; ++k) {
        Ray ray{primitive_integer(inv.col(k)), Bits(m)};
        for (std::size_t j = 0; j < initial.size(); ++j)
            if (static_cast<Eigen::Index>(j) != k)
                ray.zeros.set(initial[j]);
        rays.push_back(std::move(ray));
    }

    std::vector<Integer> value;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t row = 0; row < m; ++row) {
        if (processed.test(row))
            continue;
        const IntegerVector& h = rows[row];
        value.assign(rays.size(), Integer(0));
        pos.clear();
        neg.clear();
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(h, rays[r].z);
            if (value[r] > 0)
                pos.push_back(r);
            else if (value[r] < 0)
                neg.push_back(r);
            else
                rays[r].zeros.set(row);
        }
        processed.set(row);
        if (neg.empty())
            continue;

        std::vector<Ray> next;
        next.reserve(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (value[r] >= 0)
                next.push_back(rays[r]);

        Bits common(m);
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                common = rays[p].zeros;
                common &= rays[q].zeros;
                if (static_cast<Eigen::Index>(common.count()) < d - 2)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.is_subset_of(rays[r].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                Ray fresh;
                fresh.z = rays[q].z * value[p] - rays[p].z * value[q];
                make_primitive(fresh.z);
                fresh.zeros = common;
                fresh.zeros.set(row);
                next.push_back(std::move(fresh));
                if (next.size() > options.max_rays)
                    throw ResourceCapExceeded("double description exceeded " +
                                              std::to_string(options.max_rays) + " rays");
            }
        }
        rays = std::move(next);
    }

    std::vector<IntegerVector> out;
    out.reserve(rays.size());
    for (auto& r : rays)
        out.push_back(std::move(r.z));
    return out;
}

} // namespace alcove::dd
