#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nullkit/grid.hpp"
#include "nullkit/multipoly.hpp"
#include "nullkit/nullsatz.hpp"
#include "nullkit/numapps.hpp"
#include "nullkit/permanent.hpp"
#include "nullkit/ring.hpp"
#include "nullkit/solver.hpp"

namespace nullkit {

using Json = nlohmann::ordered_json;

/// Malformed input (wrong shape, missing key, unparsable text).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Member `key` of `j`; InputError when absent.
const Json& require_key(const Json& j, const std::string& key);

Ring ring_from_json(const Json& j);
Json ring_to_json(const Ring& ring);

/// Integer, residue (any integer, reduced) or ascending coefficient list.
/// Integers may also be given as decimal strings.
RingElement element_from_json(const Ring& ring, const Json& j);
Json element_to_json(const RingElement& e);
BigInt bigint_from_json(const Json& j);
Json bigint_to_json(const BigInt& v);

Point point_from_json(const Ring& ring, const Json& j);
Json point_to_json(const Point& x);

MultiIndex multiindex_from_json(const Json& j);
Json multiindex_to_json(const MultiIndex& m);

/// {"nvars":n,"ring":{...},"terms":[{"exp":[...],"coef":c},...]}; `ring`
/// may be omitted when a default is supplied.
MultiPoly poly_from_json(const Json& j, const Ring* default_ring = nullptr);
Json poly_to_json(const MultiPoly& p);

Grid grid_from_json(const Json& j, const ScanLimits& limits = {});
Json grid_to_json(const Grid& g);

/// Either a GridMap array of {"point","value"} or a plain value list in
/// enumeration order.
GridMap gridmap_from_json(const Grid& grid, const Json& j);
Json gridmap_to_json(const GridMap& m);

Json certificate_to_json(const Certificate& c);

RingMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RingMatrix& a);

OrientedMultigraph graph_from_json(const Json& j);

/// Vertex list and edges from the same shape as a directed graph; the
/// head/tail distinction is dropped.
UndirectedMultigraph undirected_from_json(const Json& j);

Problem problem_from_json(const Json& j);
std::map<std::string, Point> chi_from_json(const Ring& ring, const Json& j);

/// Univariate ASCII polynomial in X such as "X^3-2X^2-X+2" or "2*X + 1".
MultiPoly parse_univariate(const Ring& ring, const std::string& text);

}  // namespace nullkit
