#ifndef ALCOVE_IO_HPP
#define ALCOVE_IO_HPP

// JSON import/export and the shipped example data.

#include "alcove/constructions.hpp"
#include "alcove/genset.hpp"
#include "alcove/polytope.hpp"
#include "alcove/rootsys.hpp"

#include <json.hpp>

#include <cstdint>
#include <string_view>
#include <vector>

namespace alcove::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const RationalVector& v);
Json to_json(const std::vector<RationalVector>& points);

/// Accepts "p/q" strings and JSON integers; throws ParseError otherwise.
Rational rational_from_json(const Json& j);
RationalVector vector_from_json(const Json& j);
std::vector<RationalVector> points_from_json(const Json& j);

/// { type, rank, ambient_dim, basis, roots }
Json to_json(const RootSystem& rs);
/// Rebuilds from type and rank; any basis or roots present must match the
/// fixed realization.
std::shared_ptr<const RootSystem> root_system_from_json(const Json& j);

/// { type, rank, constraints: [{root, rhs}] }
Json to_json(const HPolytope& P);
HPolytope hpolytope_from_json(const Json& j);

/// { vertices }
Json to_json(const VPolytope& V);
VPolytope vpolytope_from_json(const Json& j);

/// Throws ParseError with the underlying parser message.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

std::uint64_t fnv1a64(std::string_view bytes);

/// The 5 x 24 homogeneous matrix of the D4 example: column (c, v) means c + <v, x> >= 0.
struct D4ExampleData {
    Eigen::Matrix<long, 5, 24> columns;
};

/// Parses the embedded data file, checks its checksum and shape invariants.
const D4ExampleData& d4_example_data();
D4ExampleData parse_d4_example(std::string_view text);

/// Converts every column to the constraint <-v, x> <= c over D4.
HPolytope d4_example_polytope();
HPolytope d4_example_polytope(const D4ExampleData& data);

/// { size, chosen_vertex_indices, optimal, lower_bound }
Json to_json(const CoverSolution& s);
/// { type, rank, lambda, mu, seed_points, orbit_points, verified }
Json to_json(const GeneratorCertificate& c);

} // namespace alcove::io

#endif // ALCOVE_IO_HPP
