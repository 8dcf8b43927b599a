#include <doctest.h>

#include "wm/json_io.hpp"

using namespace wm;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected wm::Error");
  return ErrorKind::kInternal;
}

}  // namespace

TEST_CASE("partition JSON") {
  const Partition p({to_vertex_set({1, 2}), to_vertex_set({3})});
  CHECK(partition_to_json(p).dump() == "[[1,2],[3]]");
  CHECK(partition_from_json(Json::parse("[[3],[2,1]]")) == p);
  CHECK(kind_of([] { partition_from_json(Json::parse("[1,2]")); }) == ErrorKind::kParse);
  CHECK(kind_of([] { partition_from_json(Json::parse("[[1,2],[2]]")); }) == ErrorKind::kValidation);
  CHECK(kind_of([] { partition_from_json(Json::parse("[[1,99]]")); }) == ErrorKind::kParse);
}

TEST_CASE("building element JSON") {
  const BuildingElement e = BuildingElement::of(to_vertex_set({0, 1, 2}));
  CHECK(element_to_json(e).dump() == R"({"block":[0,1,2],"kind":"TYPE2"})");
  CHECK(element_from_json(element_to_json(e)) == e);
  CHECK(kind_of([] { element_from_json(Json::parse(R"({"block":[0,1],"kind":"TYPE1"})")); }) == ErrorKind::kParse);
  CHECK(kind_of([] { element_from_json(Json::parse(R"({"block":[1],"kind":"TYPE1"})")); }) == ErrorKind::kParse);
  CHECK(kind_of([] { element_from_json(Json::parse(R"({"kind":"TYPE1"})")); }) == ErrorKind::kParse);
}

TEST_CASE("q-polynomial JSON") {
  const QPolynomial p{1, 5, 1};
  CHECK(qpoly_to_json(p).dump() == R"({"q_coeffs":[1,5,1]})");
  CHECK(qpoly_from_json(qpoly_to_json(p)) == p);
  CHECK(qpoly_to_json(QPolynomial{}).dump() == R"({"q_coeffs":[]})");
  CHECK(kind_of([] { qpoly_from_json(Json::parse(R"({"q_coeffs":"x"})")); }) == ErrorKind::kParse);

  const RationalQPoly r{mpq_class(1, 2), mpq_class(0), mpq_class(-3, 4)};
  CHECK(rational_qpoly_to_json(r).dump() == R"({"q_coeffs_num":[1,0,-3],"q_coeffs_den":[2,1,4]})");
  CHECK(rational_qpoly_from_json(rational_qpoly_to_json(r)) == r);
  RationalQPoly huge{mpq_class(mpz_class("123456789012345678901234567890"), mpz_class(11))};
  CHECK(rational_qpoly_from_json(rational_qpoly_to_json(huge)) == huge);
  CHECK(kind_of([] { rational_qpoly_from_json(Json::parse(R"({"q_coeffs_num":[1],"q_coeffs_den":[0]})")); }) ==
        ErrorKind::kParse);
  CHECK(kind_of([] { rational_qpoly_from_json(Json::parse(R"({"q_coeffs_num":[1],"q_coeffs_den":[]})")); }) ==
        ErrorKind::kParse);
  CHECK(kind_of([] { rational_qpoly_from_json(Json::parse(R"({"q_coeffs_num":["1x"],"q_coeffs_den":[1]})")); }) ==
        ErrorKind::kParse);
}

TEST_CASE("tree, forest, special forest and triple JSON round trips") {
  const auto tree_text = R"({"e":1,"children":[{"e":2,"children":[0,4,6,17]},3,5]})";
  const AdmissibleTree t = tree_from_json(Json::parse(tree_text));
  CHECK(t.degree() == 3);
  CHECK(tree_from_json(tree_to_json(t)) == t);
  CHECK(tree_to_json(t).dump() == R"({"e":1,"children":[{"e":2,"children":[0,4,6,17]},3,5]})");

  const AdmissibleForest f = forest_from_json(Json::parse(R"([4,{"e":1,"children":[1,2,3]}])"));
  CHECK(forest_to_json(f).dump() == R"([{"e":1,"children":[1,2,3]},4])");

  const SpecialForest s{1, 1, forest_from_json(Json::parse(R"([{"e":1,"children":[0,1,2]}])"))};
  CHECK(special_forest_from_json(special_forest_to_json(s)) == s);

  const ForestTriple triple{f, forest_from_json(Json::parse("[1,2]")), {3, 1, 2, 4}};
  CHECK(triple_from_json(triple_to_json(triple)) == triple);

  CHECK(kind_of([] { tree_from_json(Json::parse(R"({"e":1})")); }) == ErrorKind::kParse);
  CHECK(kind_of([] { tree_from_json(Json::parse(R"({"e":1,"children":[]})")); }) == ErrorKind::kParse);
  CHECK(kind_of([] { tree_from_json(Json::parse(R"("leaf")")); }) == ErrorKind::kParse);
  CHECK(kind_of([] { special_forest_from_json(Json::parse(R"({"n":1,"m":1})")); }) == ErrorKind::kParse);
  CHECK(kind_of([] { triple_from_json(Json::parse(R"({"f1":[1]})")); }) == ErrorKind::kParse);
}

TEST_CASE("series JSON round trips, zero cells omitted") {
  Egf2 s(2, 2, 3);
  s.set_coeff(1, 1, RationalQPoly{mpq_class(1), mpq_class(1)});
  s.set_coeff(2, 1, RationalQPoly{mpq_class(1, 3)});
  const Json j = series_to_json(s);
  CHECK(j.dump() ==
        R"({"orders":[2,2],"max_total":3,"cells":{"1,1":{"q_coeffs_num":[1,1],"q_coeffs_den":[1,1]},)"
        R"("2,1":{"q_coeffs_num":[1],"q_coeffs_den":[3]}}})");
  CHECK(series_from_json(j) == s);
  CHECK(kind_of([] { series_from_json(Json::parse(R"({"orders":[2,2],"cells":{"9,9":{}}})")); }) == ErrorKind::kParse);
  CHECK(kind_of([] { series_from_json(Json::parse(R"({"orders":[2,2],"cells":{"1;1":{}}})")); }) == ErrorKind::kParse);
  CHECK(kind_of([] { series_from_json(Json::parse(R"({"orders":[2],"cells":{}})")); }) == ErrorKind::kParse);

  Egf1 e(2);
  e.set_coeff(1, RationalQPoly{mpq_class(1)});
  CHECK(series_to_json(e).dump() ==
        R"({"order":2,"coeffs":[{"q_coeffs_num":[],"q_coeffs_den":[]},{"q_coeffs_num":[1],"q_coeffs_den":[1]},)"
        R"({"q_coeffs_num":[],"q_coeffs_den":[]}]})");
}
