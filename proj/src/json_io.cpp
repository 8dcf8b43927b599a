#include "wm/json_io.hpp"

#include <charconv>

namespace wm {

namespace {

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::kParse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kParse, std::string("bad field '") + key + "': " + e.what());
  }
}

int get_int(const Json& j) {
  if (!j.is_number_integer()) fail(ErrorKind::kParse, "expected an integer, got " + j.dump());
  return j.get<int>();
}

mpq_class parse_rational(const Json& num, const Json& den) {
  auto text = [](const Json& v) {
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_string()) return v.get<std::string>();
    fail(ErrorKind::kParse, "rational part must be an integer or a decimal string");
  };
  try {
    mpq_class q(mpz_class(text(num)), mpz_class(text(den)));
    if (q.get_den() == 0) fail(ErrorKind::kParse, "zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::kParse, "malformed rational " + num.dump() + "/" + den.dump());
  }
}

// Integers beyond 64 bits are emitted as decimal strings.
Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

}  // namespace

Json partition_to_json(const Partition& p) {
  Json out = Json::array();
  for (VertexSet b : p.blocks()) out.push_back(to_vector(b));
  return out;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::kParse, "partition must be an array of blocks");
  std::vector<VertexSet> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) fail(ErrorKind::kParse, "block must be an array of vertices");
    std::vector<Vertex> vs;
    for (const auto& v : b) {
      const int x = get_int(v);
      if (x < 0 || x > kMaxLabel) fail(ErrorKind::kParse, "vertex label out of range");
      vs.push_back(x);
    }
    blocks.push_back(to_vertex_set(vs));
  }
  return Partition(std::move(blocks));
}

Json element_to_json(const BuildingElement& e) {
  return Json{{"block", to_vector(e.block)}, {"kind", e.kind == ElementKind::kType1 ? "TYPE1" : "TYPE2"}};
}

BuildingElement element_from_json(const Json& j) {
  const auto block = get_field<std::vector<Vertex>>(j, "block");
  for (Vertex v : block)
    if (v < 0 || v > kMaxLabel) fail(ErrorKind::kParse, "vertex label out of range");
  const auto kind = get_field<std::string>(j, "kind");
  BuildingElement e = BuildingElement::of(to_vertex_set(block));
  if (cardinality(e.block) < 2) fail(ErrorKind::kParse, "building element block needs two vertices");
  if (kind != (e.kind == ElementKind::kType1 ? "TYPE1" : "TYPE2"))
    fail(ErrorKind::kParse, "element kind does not match its block");
  return e;
}

Json qpoly_to_json(const QPolynomial& p) { return Json{{"q_coeffs", p.coeffs()}}; }

QPolynomial qpoly_from_json(const Json& j) {
  return QPolynomial(get_field<std::vector<std::int64_t>>(j, "q_coeffs"));
}

Json rational_qpoly_to_json(const RationalQPoly& p) {
  Json num = Json::array();
  Json den = Json::array();
  for (const auto& c : p.coeffs()) {
    num.push_back(integer_json(c.get_num()));
    den.push_back(integer_json(c.get_den()));
  }
  return Json{{"q_coeffs_num", num}, {"q_coeffs_den", den}};
}

RationalQPoly rational_qpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("q_coeffs_num") || !j.contains("q_coeffs_den"))
    fail(ErrorKind::kParse, "rational polynomial needs q_coeffs_num and q_coeffs_den");
  const Json& num = j.at("q_coeffs_num");
  const Json& den = j.at("q_coeffs_den");
  if (!num.is_array() || !den.is_array() || num.size() != den.size())
    fail(ErrorKind::kParse, "q_coeffs_num and q_coeffs_den must be arrays of equal length");
  std::vector<mpq_class> c;
  for (std::size_t i = 0; i < num.size(); ++i) c.push_back(parse_rational(num[i], den[i]));
  return RationalQPoly(std::move(c));
}

Json admissible_to_json(const AdmissibleFunction& f) {
  Json support = Json::array();
  for (const auto& e : f.support) support.push_back(element_to_json(e));
  return Json{{"support", support}, {"exponents", f.exponents}, {"degree", f.degree()}};
}

Json tree_to_json(const AdmissibleTree& t) {
  if (t.is_leaf()) return Json(t.leaf);
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back(tree_to_json(c));
  return Json{{"e", t.exponent}, {"children", children}};
}

AdmissibleTree tree_from_json(const Json& j) {
  if (j.is_number_integer()) return AdmissibleTree::make_leaf(j.get<int>());
  const int e = get_field<int>(j, "e");
  if (!j.contains("children")) fail(ErrorKind::kParse, "missing field 'children'");
  const Json& kids = j.at("children");
  if (!kids.is_array() || kids.empty()) fail(ErrorKind::kParse, "internal node needs a non-empty children array");
  std::vector<AdmissibleTree> children;
  for (const auto& c : kids) children.push_back(tree_from_json(c));
  return AdmissibleTree::make_node(e, std::move(children));
}

Json forest_to_json(const AdmissibleForest& f) {
  Json out = Json::array();
  for (const auto& t : f) out.push_back(tree_to_json(t));
  return out;
}

AdmissibleForest forest_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::kParse, "forest must be an array of trees");
  AdmissibleForest out;
  for (const auto& t : j) out.push_back(tree_from_json(t));
  return canonical_forest(std::move(out));
}

Json special_forest_to_json(const SpecialForest& s) {
  return Json{{"n", s.n}, {"m", s.m}, {"forest", forest_to_json(s.forest)}};
}

SpecialForest special_forest_from_json(const Json& j) {
  const int n = get_field<int>(j, "n");
  const int m = get_field<int>(j, "m");
  if (!j.contains("forest")) fail(ErrorKind::kParse, "missing field 'forest'");
  return {n, m, forest_from_json(j.at("forest"))};
}

Json triple_to_json(const ForestTriple& t) {
  return Json{{"f1", forest_to_json(t.f1)}, {"f2", forest_to_json(t.f2)}, {"sigma", t.sigma}};
}

ForestTriple triple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("f1") || !j.contains("f2"))
    fail(ErrorKind::kParse, "triple needs f1, f2 and sigma");
  return {forest_from_json(j.at("f1")), forest_from_json(j.at("f2")), get_field<NumberList>(j, "sigma")};
}

Json series_to_json(const Egf2& s) {
  Json cells = Json::object();
  for (int n = 0; n <= s.nx(); ++n)
    for (int m = 0; m <= s.ny(); ++m) {
      if (!s.tracked(n, m) || s.coeff(n, m).is_zero()) continue;
      cells[std::to_string(n) + "," + std::to_string(m)] = rational_qpoly_to_json(s.coeff(n, m));
    }
  return Json{{"orders", {s.nx(), s.ny()}}, {"max_total", s.max_total()}, {"cells", cells}};
}

Egf2 series_from_json(const Json& j) {
  const auto orders = get_field<std::vector<int>>(j, "orders");
  if (orders.size() != 2) fail(ErrorKind::kParse, "orders must be [Nx,Ny]");
  const int total = j.contains("max_total") ? get_field<int>(j, "max_total") : orders[0] + orders[1];
  Egf2 s(orders[0], orders[1], total);
  if (!j.contains("cells") || !j.at("cells").is_object()) fail(ErrorKind::kParse, "series needs a cells object");
  for (const auto& [key, value] : j.at("cells").items()) {
    const auto comma = key.find(',');
    int n = -1;
    int m = -1;
    if (comma == std::string::npos ||
        std::from_chars(key.data(), key.data() + comma, n).ptr != key.data() + comma ||
        std::from_chars(key.data() + comma + 1, key.data() + key.size(), m).ptr != key.data() + key.size())
      fail(ErrorKind::kParse, "cell key must look like \"n,m\"");
    if (!s.tracked(n, m)) fail(ErrorKind::kParse, "cell " + key + " lies outside the orders");
    s.set_coeff(n, m, rational_qpoly_from_json(value));
  }
  return s;
}

Json series_to_json(const Egf1& s) {
  Json coeffs = Json::array();
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(rational_qpoly_to_json(s.coeff(k)));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

}  // namespace wm
