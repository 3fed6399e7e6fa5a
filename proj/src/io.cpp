#include "alcove/io.hpp"

#include "alcove/embedded_data.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace alcove::io {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const RationalVector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(to_string(v(i)));
    return out;
}

Json to_json(const std::vector<RationalVector>& points)
{
    Json out = Json::array();
    for (const auto& p : points)
        out.push_back(to_json(p));
    return out;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw ParseError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

RationalVector vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("expected an array of rationals, got " + j.dump());
    RationalVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
    return v;
}

std::vector<RationalVector> points_from_json(const Json& j)
{
    const Json& arr = (j.is_object() && j.contains("points")) ? j.at("points") : j;
    if (!arr.is_array())
        throw ParseError("expected an array of points");
    std::vector<RationalVector> out;
    for (const auto& p : arr) {
        out.push_back(vector_from_json(p));
        if (out.back().size() != out.front().size())
            throw ParseError("points have different dimensions");
    }
    return out;
}

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

CartanType type_from_json(const Json& j)
{
    const Json& t = field(j, "type");
    if (!t.is_string())
        throw ParseError("\"type\" must be a string");
    try {
        if (j.contains("rank")) {
            if (!j.at("rank").is_number_integer())
                throw ParseError("\"rank\" must be an integer");
            return CartanType::parse(t.get<std::string>(), j.at("rank").get<int>());
        }
        return CartanType::parse(t.get<std::string>());
    } catch (const InvalidRootSystem& e) {
        throw ParseError(e.what());
    }
}

} // namespace

Json to_json(const RootSystem& rs)
{
    Json out;
    out["type"] = rs.type().family_letter();
    out["rank"] = rs.rank();
    out["ambient_dim"] = rs.ambient_dim();
    out["basis"] = to_json(rs.basis());
    out["roots"] = to_json(rs.roots());
    return out;
}

std::shared_ptr<const RootSystem> root_system_from_json(const Json& j)
{
    auto rs = shared_root_system(type_from_json(j));
    if (j.contains("ambient_dim") && j.at("ambient_dim") != rs->ambient_dim())
        throw ParseError("ambient_dim does not match the realization of " + rs->type().name());
    if (j.contains("basis") && points_from_json(j.at("basis")) != rs->basis())
        throw ParseError("basis does not match the realization of " + rs->type().name());
    if (j.contains("roots") && points_from_json(j.at("roots")) != rs->roots())
        throw ParseError("roots do not match the realization of " + rs->type().name());
    return rs;
}

Json to_json(const HPolytope& P)
{
    const RootSystem& rs = P.root_system();
    Json out;
    out["type"] = rs.type().family_letter();
    out["rank"] = rs.rank();
    Json cs = Json::array();
    for (const auto& c : P.constraints()) {
        Json item;
        item["root"] = to_json(rs.root(c.root));
        item["rhs"] = to_string(c.rhs);
        cs.push_back(std::move(item));
    }
    out["constraints"] = std::move(cs);
    return out;
}

HPolytope hpolytope_from_json(const Json& j)
{
    auto rs = root_system_from_json(j);
    const Json& cs = field(j, "constraints");
    if (!cs.is_array())
        throw ParseError("\"constraints\" must be an array");
    std::vector<Constraint> constraints;
    for (const auto& item : cs) {
        const RationalVector a = vector_from_json(field(item, "root"));
        if (a.size() != rs->ambient_dim())
            throw ParseError("constraint root has the wrong dimension");
        const auto idx = rs->find(a);
        if (!idx)
            throw ParseError("constraint normal " + format_vector(a) + " is not a root of " +
                             rs->type().name());
        constraints.push_back({*idx, rational_from_json(field(item, "rhs"))});
    }
    return make_alcoved(rs, std::move(constraints));
}

Json to_json(const VPolytope& V)
{
    Json out;
    out["vertices"] = to_json(V.vertices);
    return out;
}

VPolytope vpolytope_from_json(const Json& j)
{
    VPolytope V;
    V.vertices = points_from_json(field(j, "vertices"));
    V.ambient_dim = V.vertices.empty() ? 0 : static_cast<int>(V.vertices.front().size());
    return V;
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

D4ExampleData parse_d4_example(std::string_view text)
{
    const Json j = parse_json(text);
    const Json& rows = field(j, "rows");
    if (!rows.is_array() || rows.size() != 5)
        throw ParseError("D4 data must have 5 rows");

    D4ExampleData data;
    std::string canonical;
    for (std::size_t r = 0; r < 5; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 24)
            throw ParseError("D4 data rows must have 24 entries");
        if (r > 0)
            canonical += ';';
        for (std::size_t c = 0; c < 24; ++c) {
            if (!rows[r][c].is_number_integer())
                throw ParseError("D4 data entries must be integers");
            const long v = rows[r][c].get<long>();
            data.columns(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
            if (c > 0)
                canonical += ',';
            canonical += std::to_string(v);
        }
    }

    char expected[40];
    std::snprintf(expected, sizeof expected, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical)));
    const Json& sum = field(j, "checksum");
    if (!sum.is_string() || sum.get<std::string>() != expected)
        throw ParseError(std::string("D4 data checksum mismatch, content hashes to ") + expected);

    for (Eigen::Index c = 0; c < 24; ++c) {
        const long constant = data.columns(0, c);
        if (constant < 95 || constant > 100)
            throw ParseError("D4 data constant out of [95, 100] in column " + std::to_string(c));
        int nonzero = 0;
        for (Eigen::Index r = 1; r < 5; ++r) {
            const long v = data.columns(r, c);
            if (v < -1 || v > 1)
                throw ParseError("D4 data coefficient outside {-1, 0, 1}");
            nonzero += v != 0;
        }
        if (nonzero != 2)
            throw ParseError("D4 data column " + std::to_string(c) + " needs exactly two nonzeros");
    }
    return data;
}

const D4ExampleData& d4_example_data()
{
    static const D4ExampleData data = parse_d4_example(embedded::d4_example_json);
    return data;
}

HPolytope d4_example_polytope(const D4ExampleData& data)
{
    auto rs = shared_root_system({Family::D, 4});
    std::vector<std::pair<RationalVector, Rational>> constraints;
    for (Eigen::Index c = 0; c < 24; ++c) {
        RationalVector normal(4);
        for (Eigen::Index r = 0; r < 4; ++r)
            normal(r) = -data.columns(r + 1, c);
        constraints.emplace_back(std::move(normal), Rational(data.columns(0, c)));
    }
    return make_alcoved(rs, constraints);
}

HPolytope d4_example_polytope() { return d4_example_polytope(d4_example_data()); }

Json to_json(const CoverSolution& s)
{
    return {{"size", s.size()},
            {"chosen_vertex_indices", s.chosen},
            {"optimal", s.optimal},
            {"lower_bound", s.lower_bound}};
}

Json to_json(const GeneratorCertificate& c)
{
    Json j = {{"type", c.spec.rs->type().family_letter()},
              {"rank", c.spec.rs->rank()},
              {"lambda", to_json(c.spec.lambda)}};
    j["mu"] = c.spec.mu ? to_json(*c.spec.mu) : Json(nullptr);
    j["seed_points"] = to_json(c.seed_points);
    j["orbit_points"] = to_json(c.orbit_points);
    j["verified"] = c.verified;
    return j;
}

} // namespace alcove::io
