#include "nullkit/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace nullkit {

const Json& require_key(const Json& j, const std::string& key) {
  if (!j.is_object()) throw InputError("expected a JSON object with key \"" + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InputError("missing key \"" + key + "\"");
  return *it;
}

namespace {

std::uint64_t uint_from_json(const Json& j, const std::string& what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw InputError(what + " must be a nonnegative integer");
}

const Json& require_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  return j;
}

}  // namespace

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InputError("not a decimal integer: " + j.get<std::string>());
    return v;
  }
  throw InputError("expected an integer, got " + j.dump());
}

Json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Ring ring_from_json(const Json& j) {
  const auto kind = require_key(j, "kind").get<std::string>();
  if (kind == "Z") return Ring::integers();
  if (kind == "Zm") return Ring::integers_mod(uint_from_json(require_key(j, "m"), "m"));
  if (kind == "GF") {
    const auto p = uint_from_json(require_key(j, "p"), "p");
    const auto k = static_cast<unsigned>(uint_from_json(require_key(j, "k"), "k"));
    if (j.contains("modulus")) {
      std::vector<std::uint64_t> mod;
      for (const auto& c : require_array(j["modulus"], "modulus")) mod.push_back(uint_from_json(c, "modulus coefficient"));
      return Ring::galois_field(p, k, mod);
    }
    return Ring::galois_field(p, k);
  }
  throw InputError("unknown ring kind \"" + kind + "\"");
}

Json ring_to_json(const Ring& ring) {
  Json j;
  switch (ring.kind()) {
    case RingKind::Integers: j["kind"] = "Z"; break;
    case RingKind::IntegersMod:
      j["kind"] = "Zm";
      j["m"] = ring.modulus();
      break;
    case RingKind::GaloisField:
      j["kind"] = "GF";
      j["p"] = ring.characteristic();
      j["k"] = ring.degree();
      j["modulus"] = ring.modulus_poly();
      break;
  }
  return j;
}

RingElement element_from_json(const Ring& ring, const Json& j) {
  if (ring.kind() == RingKind::GaloisField) {
    if (j.is_array()) {
      std::vector<std::uint64_t> c;
      for (const auto& v : j) {
        const BigInt b = bigint_from_json(v);
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), b.get_mpz_t(), ring.characteristic());
        c.push_back(r.get_ui());
      }
      if (c.size() > ring.degree()) throw InputError("GF element has more than k coefficients");
      return ring.from_coefficients(c);
    }
    return ring.from_integer(bigint_from_json(j));
  }
  return ring.from_integer(bigint_from_json(j));
}

Json element_to_json(const RingElement& e) {
  switch (e.ring().kind()) {
    case RingKind::Integers: return bigint_to_json(e.integer_value());
    case RingKind::IntegersMod: return Json(e.residue());
    case RingKind::GaloisField: return Json(e.coefficients());
  }
  return Json();
}

Point point_from_json(const Ring& ring, const Json& j) {
  Point x;
  for (const auto& v : require_array(j, "point")) x.push_back(element_from_json(ring, v));
  return x;
}

Json point_to_json(const Point& x) {
  Json j = Json::array();
  for (const auto& v : x) j.push_back(element_to_json(v));
  return j;
}

MultiIndex multiindex_from_json(const Json& j) {
  std::vector<unsigned> e;
  for (const auto& v : require_array(j, "multiindex")) e.push_back(static_cast<unsigned>(uint_from_json(v, "exponent")));
  return MultiIndex(std::move(e));
}

Json multiindex_to_json(const MultiIndex& m) { return Json(m.values()); }

MultiPoly poly_from_json(const Json& j, const Ring* default_ring) {
  const Ring ring = j.contains("ring") ? ring_from_json(j["ring"])
                    : default_ring    ? *default_ring
                                      : throw InputError("polynomial has no ring");
  const auto nvars = uint_from_json(require_key(j, "nvars"), "nvars");
  MultiPoly p(ring, nvars);
  for (const auto& t : require_array(require_key(j, "terms"), "terms")) {
    const MultiIndex e = multiindex_from_json(require_key(t, "exp"));
    if (e.size() != nvars) throw InputError("term exponent length differs from nvars");
    p.add_term(e, element_from_json(ring, require_key(t, "coef")));
  }
  return p;
}

Json poly_to_json(const MultiPoly& p) {
  Json j;
  j["nvars"] = p.nvars();
  j["ring"] = ring_to_json(p.ring());
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", multiindex_to_json(e)}, {"coef", element_to_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

Grid grid_from_json(const Json& j, const ScanLimits& limits) {
  const Ring ring = ring_from_json(require_key(j, "ring"));
  std::vector<std::vector<RingElement>> axes;
  for (const auto& a : require_array(require_key(j, "axes"), "axes")) axes.push_back(point_from_json(ring, a));
  return Grid(ring, std::move(axes), limits);
}

Json grid_to_json(const Grid& g) {
  Json axes = Json::array();
  for (std::size_t j = 0; j < g.dim(); ++j) axes.push_back(point_to_json(g.axis(j)));
  return Json{{"ring", ring_to_json(g.ring())}, {"axes", std::move(axes)}};
}

GridMap gridmap_from_json(const Grid& grid, const Json& j) {
  require_array(j, "grid map");
  GridMap m{grid, std::vector<RingElement>(grid.size(), grid.ring().zero())};
  if (j.size() != grid.size()) throw InputError("grid map must have one entry per grid point");
  if (!j.empty() && j[0].is_object()) {
    std::vector<bool> seen(grid.size(), false);
    for (const auto& entry : j) {
      const auto f = grid.locate(point_from_json(grid.ring(), require_key(entry, "point")));
      if (seen[f]) throw InputError("grid map lists a point twice");
      seen[f] = true;
      m.values[f] = element_from_json(grid.ring(), require_key(entry, "value"));
    }
  } else {
    for (std::size_t f = 0; f < j.size(); ++f) m.values[f] = element_from_json(grid.ring(), j[f]);
  }
  return m;
}

Json gridmap_to_json(const GridMap& m) {
  Json out = Json::array();
  for (std::uint64_t f = 0; f < m.grid.size(); ++f)
    out.push_back(Json{{"point", point_to_json(m.grid.point(f))}, {"value", element_to_json(m.values[f])}});
  return out;
}

Json certificate_to_json(const Certificate& c) {
  Json cof = Json::array(), ax = Json::array();
  for (const auto& h : c.cofactors) cof.push_back(poly_to_json(h));
  for (const auto& l : c.axis_polys) ax.push_back(poly_to_json(l));
  return Json{{"trimmed", poly_to_json(c.trimmed)}, {"cofactors", std::move(cof)}, {"axisPolys", std::move(ax)}};
}

RingMatrix matrix_from_json(const Json& j) {
  const Ring ring = ring_from_json(require_key(j, "ring"));
  std::vector<std::vector<RingElement>> rows;
  for (const auto& r : require_array(require_key(j, "rows"), "rows")) rows.push_back(point_from_json(ring, r));
  std::optional<std::size_t> cols;
  if (j.contains("cols")) cols = uint_from_json(j["cols"], "cols");
  return RingMatrix(ring, std::move(rows), cols);
}

Json matrix_to_json(const RingMatrix& a) {
  Json rows = Json::array();
  for (const auto& r : a.entries()) rows.push_back(point_to_json(r));
  return Json{{"ring", ring_to_json(a.ring())}, {"rows", std::move(rows)}};
}

namespace {

std::vector<std::string> vertex_names(const Json& j) {
  std::vector<std::string> v;
  for (const auto& name : require_array(require_key(j, "vertices"), "vertices")) v.push_back(name.get<std::string>());
  if (std::set<std::string>(v.begin(), v.end()).size() != v.size()) throw InputError("duplicate vertex name");
  return v;
}

std::size_t vertex_index(const std::vector<std::string>& v, const Json& name) {
  auto it = std::find(v.begin(), v.end(), name.get<std::string>());
  if (it == v.end()) throw InputError("unknown vertex " + name.dump());
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

OrientedMultigraph graph_from_json(const Json& j) {
  auto v = vertex_names(j);
  std::vector<OrientedMultigraph::Edge> edges;
  for (const auto& e : require_array(require_key(j, "edges"), "edges"))
    edges.push_back({vertex_index(v, require_key(e, "head")), vertex_index(v, require_key(e, "tail"))});
  return OrientedMultigraph(std::move(v), std::move(edges));
}

UndirectedMultigraph undirected_from_json(const Json& j) {
  UndirectedMultigraph g;
  g.vertices = vertex_names(j);
  for (const auto& e : require_array(require_key(j, "edges"), "edges"))
    g.edges.emplace_back(vertex_index(g.vertices, require_key(e, "head")), vertex_index(g.vertices, require_key(e, "tail")));
  return g;
}

Problem problem_from_json(const Json& j) {
  std::vector<std::string> s, st;
  for (const auto& t : require_array(require_key(j, "solutions"), "solutions")) s.push_back(t.get<std::string>());
  if (j.contains("trivial"))
    for (const auto& t : require_array(j["trivial"], "trivial")) st.push_back(t.get<std::string>());
  return Problem(std::move(s), std::move(st));
}

std::map<std::string, Point> chi_from_json(const Ring& ring, const Json& j) {
  if (!j.is_object()) throw InputError("chi must be an object");
  std::map<std::string, Point> chi;
  for (const auto& [k, v] : j.items()) chi.emplace(k, point_from_json(ring, v));
  return chi;
}

MultiPoly parse_univariate(const Ring& ring, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError("empty polynomial");
  MultiPoly p(ring, 1);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InputError("cannot parse polynomial \"" + text + "\": " + why);
  };
  auto digits = [&]() {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      fail("expected + or - at position " + std::to_string(i));
    }
    BigInt coef = 1;
    const std::string num = digits();
    if (!num.empty()) coef = BigInt(num);
    unsigned exp = 0;
    if (i < s.size() && s[i] == '*') {
      if (num.empty()) fail("dangling *");
      ++i;
      if (i >= s.size() || (s[i] != 'X' && s[i] != 'x')) fail("expected X after *");
    }
    if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const std::string e = digits();
        if (e.empty()) fail("missing exponent");
        exp = static_cast<unsigned>(std::stoul(e));
      }
    } else if (num.empty()) {
      fail("empty term");
    }
    p.add_term(MultiIndex{exp}, ring.from_integer(negative ? BigInt(-coef) : coef));
  }
  return p;
}

}  // namespace nullkit
