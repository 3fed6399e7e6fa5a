#include "alcove/rootsys.hpp"

#include "alcove/embedded_data.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace alcove {

std::string CartanType::family_letter() const
{
    switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    }
    return "?";
}

std::string CartanType::name() const { return family_letter() + std::to_string(rank); }

CartanType CartanType::parse(std::string_view family, int rank)
{
    if (family.size() != 1)
        throw InvalidRootSystem("unknown root system family '" + std::string(family) + "'");
    CartanType t;
    switch (std::toupper(static_cast<unsigned char>(family[0]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw InvalidRootSystem("unknown root system family '" + std::string(family) + "'");
    }
    t.rank = rank;
    return t;
}

CartanType CartanType::parse(std::string_view text)
{
    if (text.size() < 2)
        throw InvalidRootSystem("root system type needs a rank, got '" + std::string(text) + "'");
    const std::string_view digits = text.substr(1);
    int rank = 0;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw InvalidRootSystem("malformed root system type '" + std::string(text) + "'");
        rank = rank * 10 + (c - '0');
        if (rank > 100000)
            throw InvalidRootSystem("rank too large in '" + std::string(text) + "'");
    }
    return parse(text.substr(0, 1), rank);
}

namespace {

RationalVector unit(int dim, int i)
{
    RationalVector v = RationalVector::Zero(dim);
    v(i) = 1;
    return v;
}

RationalVector vec(int dim, std::initializer_list<std::pair<int, Rational>> entries)
{
    RationalVector v = RationalVector::Zero(dim);
    for (const auto& [i, value] : entries)
        v(i) += value;
    return v;
}

void add_plus_minus_pairs(std::vector<RationalVector>& out, int dim, int start = 0)
{
    for (int i = start; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1})
                    out.push_back(vec(dim, {{i, si}, {j, sj}}));
}

void check_rank(const CartanType& t)
{
    const int n = t.rank;
    bool ok = false;
    switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
    }
    if (!ok)
        throw InvalidRootSystem("invalid rank for type: " + t.name());
}

RationalMatrix matrix_from_json(const nlohmann::json& rows)
{
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = static_cast<Eigen::Index>(rows.at(0).size());
    RationalMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != c)
            throw ParseError("ragged matrix in embedded data");
        for (Eigen::Index j = 0; j < c; ++j)
            m(i, j) = parse_rational(rows[i][j].get<std::string>());
    }
    return m;
}

const nlohmann::json& e8_json()
{
    static const nlohmann::json data = nlohmann::json::parse(embedded::e8_printed_json);
    return data;
}

std::vector<RationalVector> e8_roots()
{
    std::vector<RationalVector> roots;
    add_plus_minus_pairs(roots, 8);
    for (int mask = 0; mask < 256; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0)
            continue;
        RationalVector v(8);
        for (int i = 0; i < 8; ++i)
            v(i) = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
        roots.push_back(v);
    }
    return roots;
}

} // namespace

std::vector<int> e_series_subbasis(int rank)
{
    const std::string key = "E" + std::to_string(rank);
    const auto& sub = e8_json().at("subbases");
    if (!sub.contains(key))
        throw InvalidRootSystem("no E-series sub-basis for " + key);
    return sub.at(key).get<std::vector<int>>();
}

const E8PrintedData& e8_printed_data()
{
    static const E8PrintedData data = [] {
        const auto& j = e8_json();
        E8PrintedData d{matrix_from_json(j.at("basis")), matrix_from_json(j.at("omega")),
                      matrix_from_json(j.at("theta")), {}};
        for (const auto& pair : j.at("incidence_pairs"))
            d.incidence_pairs.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        return d;
    }();
    return data;
}

RootSystem::RootSystem(CartanType type, std::vector<RationalVector> roots,
                       std::vector<RationalVector> basis)
    : type_(type), roots_(std::move(roots)), basis_(std::move(basis))
{
    if (basis_.size() != static_cast<std::size_t>(type_.rank))
        throw RealizationError("basis size does not match rank for " + type_.name());
    ambient_dim_ = static_cast<int>(basis_.front().size());
    std::sort(roots_.begin(), roots_.end(), LexLess{});
    if (std::adjacent_find(roots_.begin(), roots_.end(), [](const auto& a, const auto& b) {
            return lex_compare(a, b) == 0;
        }) != roots_.end())
        throw RealizationError("duplicate roots in realization of " + type_.name());

    const int n = type_.rank;
    basis_matrix_.resize(ambient_dim_, n);
    for (int k = 0; k < n; ++k)
        basis_matrix_.col(k) = basis_[static_cast<std::size_t>(k)];
    gram_ = basis_matrix_.transpose() * basis_matrix_;
    chart_to_ambient_ = basis_matrix_ * matrix_inverse(gram_);

    for (const auto& b : basis_)
        basis_index_.push_back(index_of(b));

    Rational max_norm = 0;
    Rational min_norm = -1;
    for (const auto& a : roots_) {
        const Rational nrm = inner_product(a, a);
        norms_.push_back(nrm);
        max_norm = std::max(max_norm, nrm);
        min_norm = min_norm < 0 ? nrm : std::min(min_norm, nrm);

        const RationalVector z = chart_to_ambient_.transpose() * a;
        if (basis_matrix_ * z != a)
            throw RealizationError("root outside the span of the basis in " + type_.name());
        IntegerVector coeff(n);
        int sign = 0;
        for (int k = 0; k < n; ++k) {
            if (mp::denominator(z(k)) != 1)
                throw RealizationError("non-integral root coefficient in " + type_.name());
            coeff(k) = mp::numerator(z(k));
            const int s = coeff(k) > 0 ? 1 : (coeff(k) < 0 ? -1 : 0);
            if (s != 0 && sign != 0 && s != sign)
                throw RealizationError("root with mixed-sign coefficients in " + type_.name());
            if (s != 0)
                sign = s;
        }
        coefficients_.push_back(std::move(coeff));
    }
    simply_laced_ = max_norm == min_norm;
    for (const auto& nrm : norms_)
        long_.push_back(nrm == max_norm);
}

Integer RootSystem::height(int i) const { return coefficients(i).sum(); }

std::optional<int> RootSystem::find(const RationalVector& v) const
{
    if (v.size() != ambient_dim_)
        return std::nullopt;
    auto it = std::lower_bound(roots_.begin(), roots_.end(), v, LexLess{});
    if (it != roots_.end() && lex_compare(*it, v) == 0)
        return static_cast<int>(it - roots_.begin());
    return std::nullopt;
}

int RootSystem::index_of(const RationalVector& v) const
{
    if (auto i = find(v))
        return *i;
    throw std::invalid_argument("not a root of " + type_.name() + ": " + format_vector(v));
}

RationalVector RootSystem::to_chart(const RationalVector& x) const
{
    if (x.size() != ambient_dim_)
        throw DimensionMismatch("to_chart: expected dimension " + std::to_string(ambient_dim_));
    return basis_matrix_.transpose() * x;
}

RationalVector RootSystem::from_chart(const RationalVector& y) const
{
    if (y.size() != type_.rank)
        throw DimensionMismatch("from_chart: expected dimension " + std::to_string(type_.rank));
    return chart_to_ambient_ * y;
}

RationalVector RootSystem::project(const RationalVector& x) const { return from_chart(to_chart(x)); }

bool RootSystem::in_span(const RationalVector& x) const
{
    return x.size() == ambient_dim_ && project(x) == x;
}

RationalVector RootSystem::chart_normal(int i) const
{
    const IntegerVector& c = coefficients(i);
    RationalVector out(c.size());
    for (Eigen::Index k = 0; k < c.size(); ++k)
        out(k) = Rational(c(k));
    return out;
}

RationalVector RootSystem::chart_functional(const RationalVector& d) const
{
    if (d.size() != ambient_dim_)
        throw DimensionMismatch("chart_functional: expected dimension " + std::to_string(ambient_dim_));
    return chart_to_ambient_.transpose() * d;
}

RootSystem build_root_system(const CartanType& t)
{
    check_rank(t);
    const int n = t.rank;
    std::vector<RationalVector> roots;
    std::vector<RationalVector> basis;

    switch (t.family) {
    case Family::A: {
        const int dim = n + 1;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (i != j)
                    roots.push_back(vec(dim, {{i, 1}, {j, -1}}));
        for (int k = 0; k < n; ++k)
            basis.push_back(vec(dim, {{k, 1}, {k + 1, -1}}));
        break;
    }
    case Family::B:
    case Family::C: {
        const Rational scale = t.family == Family::B ? 1 : 2;
        for (int i = 0; i < n; ++i) {
            roots.push_back(unit(n, i) * scale);
            roots.push_back(unit(n, i) * Rational(-scale));
        }
        add_plus_minus_pairs(roots, n);
        for (int k = 0; k + 1 < n; ++k)
            basis.push_back(vec(n, {{k, 1}, {k + 1, -1}}));
        basis.push_back(unit(n, n - 1) * scale);
        break;
    }
    case Family::D: {
        add_plus_minus_pairs(roots, n);
        // b_1, b_2 are the fork leaves next to b_3; b_3 ... b_n runs along the path.
        basis.push_back(vec(n, {{n - 2, 1}, {n - 1, -1}}));
        basis.push_back(vec(n, {{n - 2, 1}, {n - 1, 1}}));
        for (int k = 3; k <= n; ++k)
            basis.push_back(vec(n, {{n - k, 1}, {n - k + 1, -1}}));
        break;
    }
    case Family::E: {
        const RationalMatrix& B = e8_printed_data().basis;
        const std::vector<int> cols = e_series_subbasis(n);
        for (int c : cols)
            basis.push_back(B.col(c - 1));
        std::vector<bool> kept(8, false);
        for (int c : cols)
            kept[static_cast<std::size_t>(c - 1)] = true;
        const RationalMatrix Binv = matrix_inverse(B);
        for (auto& a : e8_roots()) {
            const RationalVector z = Binv * a;
            bool inside = true;
            for (int k = 0; k < 8; ++k)
                inside = inside && (kept[static_cast<std::size_t>(k)] || z(k) == 0);
            if (inside)
                roots.push_back(std::move(a));
        }
        break;
    }
    case Family::F: {
        for (int i = 0; i < 4; ++i) {
            roots.push_back(unit(4, i));
            roots.push_back(unit(4, i) * Rational(-1));
        }
        add_plus_minus_pairs(roots, 4);
        for (int mask = 0; mask < 16; ++mask) {
            RationalVector v(4);
            for (int i = 0; i < 4; ++i)
                v(i) = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
            roots.push_back(v);
        }
        const Rational h(1, 2);
        basis.push_back(vec(4, {{1, 1}, {2, -1}}));
        basis.push_back(vec(4, {{2, 1}, {3, -1}}));
        basis.push_back(unit(4, 3));
        basis.push_back(vec(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}}));
        break;
    }
    case Family::G: {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (i == j)
                    continue;
                roots.push_back(vec(3, {{i, 1}, {j, -1}}));
            }
            const int j = (i + 1) % 3;
            const int k = (i + 2) % 3;
            roots.push_back(vec(3, {{i, 2}, {j, -1}, {k, -1}}));
            roots.push_back(vec(3, {{i, -2}, {j, 1}, {k, 1}}));
        }
        basis.push_back(vec(3, {{0, 1}, {1, -1}}));
        basis.push_back(vec(3, {{0, -2}, {1, 1}, {2, 1}}));
        break;
    }
    }
    return RootSystem(t, std::move(roots), std::move(basis));
}

RootSystem build_root_system(Family family, int rank) { return build_root_system(CartanType{family, rank}); }

std::shared_ptr<const RootSystem> shared_root_system(const CartanType& type)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const RootSystem>> cache;
    const auto key = std::make_pair(static_cast<int>(type.family), type.rank);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto rs = std::make_shared<const RootSystem>(build_root_system(type));
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(rs)).first->second;
}

RationalVector reflect(const RationalVector& a, const RationalVector& x)
{
    const Rational aa = inner_product(a, a);
    if (aa == 0)
        throw std::invalid_argument("reflect: zero normal vector");
    const Rational factor = Rational(2) * inner_product(a, x) / aa;
    return x - a * factor;
}

RationalMatrix reflection_matrix(const RationalVector& a)
{
    const Rational aa = inner_product(a, a);
    if (aa == 0)
        throw std::invalid_argument("reflection_matrix: zero normal vector");
    const auto d = a.size();
    RationalMatrix m = RationalMatrix::Identity(d, d);
    const Rational factor = Rational(2) / aa;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            if (a(i) != 0 && a(j) != 0)
                m(i, j) -= factor * a(i) * a(j);
    return m;
}

WeylElement simple_reflection(const RootSystem& rs, int k)
{
    return {reflection_matrix(rs.basis().at(static_cast<std::size_t>(k)))};
}

WeylElement coxeter_element(const RootSystem& rs)
{
    WeylElement w{RationalMatrix::Identity(rs.ambient_dim(), rs.ambient_dim())};
    for (int k = 0; k < rs.rank(); ++k)
        w = w * simple_reflection(rs, k);
    return w;
}

int coxeter_number(const RootSystem& rs)
{
    const int order = matrix_order(coxeter_element(rs).matrix, rs.size());
    if (order * rs.rank() != rs.size())
        throw RealizationError("Coxeter element order " + std::to_string(order) +
                               " disagrees with |roots|/rank for " + rs.type().name());
    return order;
}

std::vector<RationalVector> theta_roots(const RootSystem& rs)
{
    const int n = rs.rank();
    std::vector<RationalVector> thetas;
    for (int i = 0; i < n; ++i) {
        RationalVector v = rs.basis()[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            v = reflect(rs.basis()[static_cast<std::size_t>(j)], v);
        if (!rs.find(v))
            throw RealizationError("theta_" + std::to_string(i + 1) + " is not a root");
        thetas.push_back(std::move(v));
    }
    return thetas;
}

std::vector<std::vector<int>> gamma_orbit_partition(const RootSystem& rs)
{
    const int h = coxeter_number(rs);
    const WeylElement omega = coxeter_element(rs);
    std::vector<std::vector<int>> orbits;
    std::vector<int> owner(static_cast<std::size_t>(rs.size()), -1);
    const auto thetas = theta_roots(rs);
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        std::vector<int> orbit;
        RationalVector v = thetas[i];
        do {
            const int idx = rs.index_of(v);
            if (owner[static_cast<std::size_t>(idx)] != -1)
                throw RealizationError("theta orbits are not disjoint");
            owner[static_cast<std::size_t>(idx)] = static_cast<int>(i);
            orbit.push_back(idx);
            v = omega.apply(v);
        } while (v != thetas[i] && static_cast<int>(orbit.size()) <= h);
        if (static_cast<int>(orbit.size()) != h)
            throw RealizationError("theta orbit of size " + std::to_string(orbit.size()) +
                                   " instead of " + std::to_string(h));
        orbits.push_back(std::move(orbit));
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end())
        throw RealizationError("theta orbits do not cover all roots");
    return orbits;
}

std::vector<int> root_permutation(const RootSystem& rs, const WeylElement& w)
{
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(rs.size()));
    std::vector<bool> hit(static_cast<std::size_t>(rs.size()), false);
    for (const auto& a : rs.roots()) {
        auto j = rs.find(w.apply(a));
        if (!j || hit[static_cast<std::size_t>(*j)])
            throw RealizationError("Weyl element does not permute the roots");
        hit[static_cast<std::size_t>(*j)] = true;
        perm.push_back(*j);
    }
    return perm;
}

int highest_root(const RootSystem& rs)
{
    int best = 0;
    for (int i = 1; i < rs.size(); ++i)
        if (rs.height(i) > rs.height(best))
            best = i;
    return best;
}

} // namespace alcove
