#include "alcove/constructions.hpp"
#include "alcove/genset.hpp"
#include "alcove/io.hpp"
#include "alcove/paperlab.hpp"
#include "alcove/tropical.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace alcove;
using io::Json;

namespace {

constexpr int kRefuted = 1;
constexpr int kBadInput = 2;
constexpr int kInternal = 3;

CartanType resolve_type(const std::string& type, const std::optional<int>& rank)
{
    return rank ? CartanType::parse(type, *rank) : CartanType::parse(type);
}

std::optional<Rational> opt_rational(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    return parse_rational(s);
}

RationalVector parse_point(const std::string& text)
{
    std::vector<Rational> xs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        xs.push_back(parse_rational(item));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return to_vector(xs);
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_constraints(const HPolytope& P)
{
    const RootSystem& rs = P.root_system();
    for (const auto& c : P.constraints())
        std::cout << "  <" << format_vector(rs.root(c.root)) << ", x> <= " << to_string(c.rhs) << '\n';
}

void print_points(const std::vector<RationalVector>& pts)
{
    for (const auto& p : pts)
        std::cout << "  " << format_vector(p) << '\n';
}

struct Common {
    bool json = false;
};

int run_rootsys(const std::string& type, const std::optional<int>& rank, const Common& c)
{
    const auto rs = shared_root_system(resolve_type(type, rank));
    const int h = coxeter_number(*rs);
    std::vector<int> highest;
    const IntegerVector& hc = rs->coefficients(highest_root(*rs));
    for (Eigen::Index i = 0; i < hc.size(); ++i)
        highest.push_back(hc(i).convert_to<int>());
    int longs = 0;
    for (int i = 0; i < rs->size(); ++i)
        longs += rs->is_long(i);
    if (c.json) {
        Json j = io::to_json(*rs);
        j["coxeter_number"] = h;
        j["long_roots"] = longs;
        j["highest_root"] = highest;
        j["theta"] = io::to_json(theta_roots(*rs));
        print(j);
        return 0;
    }
    std::cout << rs->type().name() << ": " << rs->size() << " roots (" << longs << " long), h = " << h << '\n'
              << "basis:\n";
    print_points(rs->basis());
    std::cout << "theta:\n";
    print_points(theta_roots(*rs));
    std::cout << "highest root coefficients:";
    for (int x : highest)
        std::cout << ' ' << x;
    std::cout << '\n';
    return 0;
}

int run_symmetric(const std::string& type, const std::optional<int>& rank, const std::string& lambda,
                  const std::string& mu, bool generators, const Common& c)
{
    const auto spec = make_spec(resolve_type(type, rank), parse_rational(lambda), opt_rational(mu));
    const HPolytope P = symmetric_alcoved(spec);
    if (!generators) {
        if (c.json)
            print(io::to_json(P));
        else
            print_constraints(P);
        return 0;
    }
    const auto cert = symmetric_generator_certificate(spec);
    if (c.json) {
        print(io::to_json(cert));
    } else {
        std::cout << cert.orbit_points.size() << " points" << (cert.verified ? ", verified generating" : "")
                  << "\nseeds:\n";
        print_points(cert.seed_points);
        std::cout << "orbit:\n";
        print_points(cert.orbit_points);
    }
    return cert.verified ? 0 : kRefuted;
}

int run_hull(const std::string& type, const std::optional<int>& rank, const std::string& file, const Common& c)
{
    const auto rs = shared_root_system(resolve_type(type, rank));
    auto pts = io::points_from_json(io::read_json_file(file));
    // Type A points are taken modulo the all-ones line.
    if (rs->type().family == Family::A)
        for (auto& p : pts)
            if (p.size() == rs->ambient_dim())
                p = normalize_sum_zero(p);
    const HPolytope P = alcoved_hull(pts, rs);
    if (c.json)
        print(io::to_json(P));
    else
        print_constraints(P);
    return 0;
}

int run_mincover(const std::string& file, bool d4, const std::optional<std::uint64_t>& budget, const Common& c)
{
    if (file.empty() == !d4)
        throw std::invalid_argument("give exactly one of --polytope or --d4-example");
    const HPolytope P = d4 ? io::d4_example_polytope() : io::hpolytope_from_json(io::read_json_file(file));
    const auto inc = incidence(P);
    const auto inst = build_cover_instance(inc);
    const auto sol = min_cover(inst, budget);
    std::vector<RationalVector> chosen;
    for (int v : sol.chosen)
        chosen.push_back(inc.vertices[static_cast<std::size_t>(v)]);
    if (c.json) {
        Json j = io::to_json(sol);
        j["vertices"] = inc.vertices.size();
        j["chosen_points"] = io::to_json(chosen);
        print(j);
    } else {
        std::cout << "min_cover " << sol.size() << (sol.optimal ? " (optimal" : " (not proven optimal")
                  << ", lower bound " << sol.lower_bound << ", " << inc.vertices.size() << " vertices)\n";
        print_points(chosen);
    }
    return 0;
}

int run_tropical(const std::string& file, const std::string& query, bool compare, const Common& c)
{
    std::vector<TropPoint> V;
    for (const auto& p : io::points_from_json(io::read_json_file(file)))
        V.emplace_back(p);
    Json j = Json::object();
    if (!query.empty()) {
        const TropPoint x(parse_point(query));
        j["query"] = io::to_json(x.coords());
        j["contains"] = trop_hull_contains(V, x);
    }
    if (compare) {
        const auto cmp = trop_hull_vs_alcoved(V);
        std::vector<RationalVector> outside;
        for (const auto& t : cmp.outside)
            outside.push_back(t.coords());
        j["alcoved_vertices"] = cmp.vertices.size();
        j["outside_tropical"] = io::to_json(outside);
        j["equal"] = cmp.equal;
    }
    if (c.json) {
        print(j);
        return 0;
    }
    if (j.contains("contains"))
        std::cout << (j["contains"].get<bool>() ? "inside" : "outside") << '\n';
    if (compare)
        std::cout << "alcoved hull vertices outside the tropical hull: " << j["outside_tropical"].dump() << '\n';
    return 0;
}

int run_verify(bool all, const std::vector<std::string>& ids, bool list, const lab::RunOptions& opts,
               const Common& c)
{
    if (list) {
        for (const auto& claim : lab::claim_registry())
            std::cout << claim.id << "  " << claim.description << " [" << claim.location << "]\n";
        return 0;
    }
    if (all == !ids.empty())
        throw std::invalid_argument("give --all or at least one --claim");
    std::vector<lab::ClaimResult> results;
    if (all) {
        results = lab::verify_all(opts);
    } else {
        for (const auto& id : ids)
            results.push_back(lab::verify(id, opts));
    }
    if (c.json) {
        print(results.size() == 1 && !all ? lab::to_json(results.front()) : lab::report_json(results));
    } else {
        for (const auto& r : results) {
            std::cout << r.id << ": " << lab::to_string(r.status);
            if (!r.witness.empty())
                std::cout << " (" << r.witness << ')';
            if (r.details.contains("reason"))
                std::cout << " (" << r.details["reason"].get<std::string>() << ')';
            std::cout << " [" << r.elapsed_ms << " ms]\n";
        }
    }
    return lab::all_passed(results) ? 0 : kRefuted;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Alcoved polytopes of root systems: construction, generation and claim checks"};
    app.require_subcommand(1);
    Common common;

    std::string type, lambda, mu, points, polytope, query;
    std::optional<int> rank;
    bool generators = false, d4 = false, compare = false;
    std::optional<std::uint64_t> budget;

    auto* rootsys = app.add_subcommand("rootsys", "Inspect a root system");
    rootsys->add_option("--type", type, "Cartan type, e.g. F4, or a family letter with --rank")->required();
    rootsys->add_option("--rank", rank);

    auto* sym = app.add_subcommand("symmetric", "Build the symmetric polytope P_{lambda,mu}");
    sym->add_option("--type", type)->required();
    sym->add_option("--rank", rank);
    sym->add_option("--lambda", lambda, "Right-hand side on long roots")->required();
    sym->add_option("--mu", mu, "Right-hand side on short roots");
    sym->add_flag("--generators", generators, "Emit the seed, the Coxeter orbit and its certificate");

    auto* hull = app.add_subcommand("hull", "Alcoved hull of points from a JSON file");
    hull->add_option("--type", type)->required();
    hull->add_option("--rank", rank);
    hull->add_option("--points", points, "JSON array of points")->required();

    auto* cover = app.add_subcommand("mincover", "Exact minimum generating set");
    cover->add_option("--polytope", polytope, "JSON H-representation");
    cover->add_flag("--d4-example", d4, "Use the shipped D4 example");
    cover->add_option("--budget", budget, "Node budget for the search");

    auto* trop = app.add_subcommand("tropical", "Tropical hull membership (type A)");
    trop->add_option("--points", points, "JSON array of generators")->required();
    trop->add_option("--query", query, "Comma separated coordinates");
    trop->add_flag("--compare", compare, "Compare with the alcoved hull");

    bool all = false, list = false, max_effort = false, no_timing = false;
    std::vector<std::string> claims;
    auto* ver = app.add_subcommand("verify", "Re-verify registered claims");
    ver->add_flag("--all", all);
    ver->add_option("--claim", claims);
    ver->add_flag("--list", list);
    ver->add_flag("--max-effort", max_effort, "Run claims that are skipped by default, with higher caps");
    ver->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0");
    ver->add_option("--type", type, "Type parameter for claims that take one");
    ver->add_option("--lambda", lambda);
    ver->add_option("--mu", mu);
    for (auto* sub : {rootsys, sym, hull, cover, trop, ver})
        sub->add_flag("--json", common.json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*rootsys)
            return run_rootsys(type, rank, common);
        if (*sym)
            return run_symmetric(type, rank, lambda, mu, generators, common);
        if (*hull)
            return run_hull(type, rank, points, common);
        if (*cover)
            return run_mincover(polytope, d4, budget, common);
        if (*trop)
            return run_tropical(points, query, compare, common);
        lab::RunOptions opts;
        opts.max_effort = max_effort;
        opts.timing = !no_timing;
        if (!type.empty())
            opts.params.type = CartanType::parse(type);
        opts.params.lambda = opt_rational(lambda);
        opts.params.mu = opt_rational(mu);
        return run_verify(all, claims, list, opts, common);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
