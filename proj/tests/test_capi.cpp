// The C API through its public header only; results are parsed as JSON.
#include <doctest.h>
#include <wondermodels.h>

#include <json.hpp>
#include <memory>
#include <string>
#include <thread>
#include <vector>

namespace {

using Json = nlohmann::json;

struct GraphDeleter {
  void operator()(wm_graph* g) const { wm_graph_free(g); }
};
struct ContextDeleter {
  void operator()(wm_context* c) const { wm_context_free(c); }
};
using GraphPtr = std::unique_ptr<wm_graph, GraphDeleter>;
using ContextPtr = std::unique_ptr<wm_context, ContextDeleter>;

GraphPtr graph(const char* text) {
  wm_graph* g = nullptr;
  REQUIRE(wm_graph_parse(text, &g) == WM_OK);
  return GraphPtr(g);
}

ContextPtr context(bool unsafe = false, int jobs = 1) {
  wm_context* c = nullptr;
  REQUIRE(wm_context_new(&c) == WM_OK);
  REQUIRE(wm_context_set_unsafe(c, unsafe ? 1 : 0) == WM_OK);
  REQUIRE(wm_context_set_jobs(c, jobs) == WM_OK);
  return ContextPtr(c);
}

// Takes ownership of a library string.
Json take(char* s) {
  REQUIRE(s != nullptr);
  const std::string text(s);
  wm_string_free(s);
  return Json::parse(text);
}

std::vector<long long> coeffs(const Json& poly) { return poly.at("q_coeffs").get<std::vector<long long>>(); }

}  // namespace

TEST_CASE("version, status names, NULL handling") {
  CHECK(std::string(wm_version()) == "1.0.0");
  CHECK(std::string(wm_status_name(WM_ERR_LIMIT)) == "WM_ERR_LIMIT");
  CHECK(std::string(wm_status_name(WM_OK)) == "WM_OK");
  wm_graph_free(nullptr);
  wm_context_free(nullptr);
  wm_string_free(nullptr);
  CHECK(wm_graph_parse(nullptr, nullptr) == WM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(wm_last_error()).size() > 0);
  char* out = nullptr;
  CHECK(wm_poset(nullptr, nullptr, &out) == WM_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(wm_context_set_jobs(nullptr, 2) == WM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("graph parsing errors map to status codes") {
  wm_graph* g = nullptr;
  CHECK(wm_graph_parse("wheel:4", &g) == WM_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(wm_graph_parse(R"({"n":3,"edges":[[1,1]]})", &g) == WM_ERR_VALIDATION);
  CHECK(std::string(wm_last_error()).find("loop") != std::string::npos);
  CHECK(wm_graph_parse("{", &g) == WM_ERR_PARSE);
}

TEST_CASE("graph handles: order, cone, JSON") {
  auto g = graph("path:3");
  int n = 0;
  CHECK(wm_graph_order(g.get(), &n) == WM_OK);
  CHECK(n == 3);
  wm_graph* c = nullptr;
  REQUIRE(wm_graph_cone(g.get(), &c) == WM_OK);
  GraphPtr coned(c);
  CHECK(wm_graph_order(coned.get(), &n) == WM_OK);
  CHECK(n == 4);
  char* out = nullptr;
  REQUIRE(wm_graph_to_json(g.get(), &out) == WM_OK);
  CHECK(take(out) == Json::parse(R"({"n":3,"edges":[[1,2],[2,3]]})"));
  wm_graph* twice = nullptr;
  CHECK(wm_graph_cone(coned.get(), &twice) == WM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("poset, building, nested, admissible") {
  auto ctx = context();
  auto p3 = graph("path:3");
  char* out = nullptr;
  REQUIRE(wm_poset(ctx.get(), p3.get(), &out) == WM_OK);
  CHECK(take(out).at("size") == 4);
  REQUIRE(wm_building(ctx.get(), p3.get(), &out) == WM_OK);
  const Json b = take(out);
  CHECK(b.at("size") == 3);
  CHECK(b.at("ambient").at("kind") == "TORUS");
  REQUIRE(wm_nested(ctx.get(), graph("complete:3").get(), 1, &out) == WM_OK);
  const Json nested = take(out);
  CHECK(nested.at("count") == 8);
  CHECK(nested.at("nested_sets").size() == 8);
  REQUIRE(wm_admissible(ctx.get(), graph("cone:complete:2").get(), 1, &out) == WM_OK);
  const Json adm = take(out);
  CHECK(adm.at("count") == 2);
  CHECK(adm.at("ambient").at("kind") == "CONED_LINEAR");
  CHECK(coeffs(adm.at("degree_distribution")) == std::vector<long long>{1, 1});
}

TEST_CASE("Poincaré polynomials and the model isomorphism") {
  auto ctx = context();
  auto p3 = graph("path:3");
  char* out = nullptr;
  REQUIRE(wm_poincare(ctx.get(), p3.get(), WM_SIDE_BOTH, &out) == WM_OK);
  const Json both = take(out);
  CHECK(coeffs(both.at("toric")) == std::vector<long long>{1, 5, 1});
  CHECK(coeffs(both.at("hyper")) == std::vector<long long>{1, 5, 1});
  CHECK(both.at("equal") == true);

  int64_t buf[8];
  size_t len = 0;
  REQUIRE(wm_poincare_coeffs(ctx.get(), p3.get(), WM_SIDE_TORIC, buf, 8, &len) == WM_OK);
  CHECK(len == 3);
  CHECK(buf[1] == 5);
  CHECK(wm_poincare_coeffs(ctx.get(), p3.get(), WM_SIDE_HYPER, buf, 2, &len) == WM_ERR_INVALID_ARGUMENT);
  CHECK(len == 3);
  CHECK(wm_poincare_coeffs(ctx.get(), p3.get(), WM_SIDE_BOTH, buf, 8, &len) == WM_ERR_INVALID_ARGUMENT);

  auto cone_k3 = graph("cone:complete:3");
  REQUIRE(wm_poincare_coeffs(ctx.get(), cone_k3.get(), WM_SIDE_HYPER, buf, 8, &len) == WM_OK);
  CHECK(std::vector<int64_t>(buf, buf + len) == std::vector<int64_t>{1, 5, 1});
  CHECK(wm_poincare(ctx.get(), cone_k3.get(), WM_SIDE_TORIC, &out) == WM_ERR_INVALID_ARGUMENT);

  int equal = 0;
  REQUIRE(wm_verify_iso(ctx.get(), graph("cycle:5").get(), &out, &equal) == WM_OK);
  const Json iso = take(out);
  CHECK(equal == 1);
  CHECK(iso.at("graph").at("n") == 5);
  CHECK(iso.at("toric") == iso.at("hyper"));
}

TEST_CASE("safety limits and --unsafe") {
  auto safe = context(false);
  auto unsafe = context(true);
  auto k10 = graph("edgeless:10");
  char* out = nullptr;
  CHECK(wm_poset(safe.get(), k10.get(), &out) == WM_ERR_LIMIT);
  CHECK(std::string(wm_last_error()).find("unsafe") != std::string::npos);
  REQUIRE(wm_poset(unsafe.get(), k10.get(), &out) == WM_OK);
  CHECK(take(out).at("size") == 1);
  CHECK(wm_lec_distribution(safe.get(), 10, &out) == WM_ERR_LIMIT);
  CHECK(wm_eulerian(safe.get(), 21, &out) == WM_ERR_LIMIT);
  CHECK(wm_eulerian(unsafe.get(), 21, &out) == WM_ERR_LIMIT);  // 64-bit coefficients overflow past 20
}

TEST_CASE("permutation statistics") {
  char* out = nullptr;
  REQUIRE(wm_lec(nullptr, "1,5,6,7,3,8,2,4", &out) == WM_OK);
  const Json l = take(out);
  CHECK(l.at("lec") == 3);
  CHECK(l.at("prefix") == Json::parse("[1,5,6]"));
  CHECK(l.at("hooks") == Json::parse("[[7,3],[8,2,4]]"));
  CHECK(wm_lec(nullptr, "3,3,1", &out) == WM_ERR_VALIDATION);
  CHECK(wm_lec(nullptr, "3,a", &out) == WM_ERR_PARSE);

  REQUIRE(wm_hook(nullptr, "2,5,9", 2, &out) == WM_OK);
  CHECK(take(out).at("hook") == Json::parse("[9,2,5]"));
  CHECK(wm_hook(nullptr, "2,5,9", 3, &out) == WM_ERR_INVALID_ARGUMENT);

  REQUIRE(wm_eulerian(nullptr, 3, &out) == WM_OK);
  CHECK(coeffs(take(out).at("eulerian")) == std::vector<long long>{0, 1, 4, 1});
  REQUIRE(wm_lec_distribution(nullptr, 6, &out) == WM_OK);
  CHECK(take(out).at("equal") == true);
}

TEST_CASE("bijection through JSON") {
  auto ctx = context();
  char* out = nullptr;
  REQUIRE(wm_bijection(ctx.get(), R"({"f1":[1],"f2":[1],"sigma":[2,1]})", &out) == WM_OK);
  const Json forward = take(out);
  CHECK(forward.at("degree") == 1);
  CHECK(forward.at("special").at("forest") == Json::parse(R"([{"e":1,"children":[0,1,2]}])"));
  REQUIRE(wm_bijection_inverse(ctx.get(), forward.at("special").dump().c_str(), &out) == WM_OK);
  CHECK(take(out).at("triple") == Json::parse(R"({"f1":[1],"f2":[1],"sigma":[2,1]})"));
  CHECK(wm_bijection(ctx.get(), R"({"f1":[1],"f2":[1],"sigma":[1,2,3]})", &out) == WM_ERR_INVALID_ARGUMENT);
  CHECK(wm_bijection(ctx.get(), R"({"f1":[1]})", &out) == WM_ERR_PARSE);

  int ok = 0;
  REQUIRE(wm_bijection_check(ctx.get(), 2, 3, 1, 0, &out, &ok) == WM_OK);
  const Json exhaustive = take(out);
  CHECK(ok == 1);
  CHECK(exhaustive.at("mode") == "exhaustive");
  CHECK(exhaustive.at("triples") == exhaustive.at("special_forests"));
  REQUIRE(wm_bijection_check(ctx.get(), 5, 4, 7, 50, &out, &ok) == WM_OK);
  CHECK(ok == 1);
  CHECK(take(out).at("round_trips") == 50);

  REQUIRE(wm_special_forests(ctx.get(), 2, 1, 0, &out) == WM_OK);
  CHECK(coeffs(take(out).at("degree_series")) == std::vector<long long>{1, 4, 1});
  CHECK(wm_special_forests(ctx.get(), 4, 4, 0, &out) == WM_ERR_LIMIT);
}

TEST_CASE("series") {
  char* out = nullptr;
  REQUIRE(wm_lambda(nullptr, 4, &out) == WM_OK);
  const Json lambda = take(out);
  CHECK(coeffs(lambda.at("coeffs")[4]) == std::vector<long long>{0, 1, 1});
  int ok = 0;
  REQUIRE(wm_series(nullptr, 3, 3, 1, &out, &ok) == WM_OK);
  const Json s = take(out);
  CHECK(ok == 1);
  CHECK(s.at("equal") == true);
  CHECK(s.at("phi_toric") == s.at("phi_hyper"));
  CHECK(s.at("check").at("lec_identity_max_l") == 5);
  CHECK(wm_series(nullptr, 0, 3, 0, &out, &ok) == WM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("check-order") {
  auto ctx = context();
  auto c = graph("cone:complete:2");
  char* out = nullptr;
  int ok = -1;
  REQUIRE(wm_check_order(ctx.get(), c.get(), "[[1,2],[0,1],[0,2],[0,1,2]]", &out, &ok) == WM_OK);
  wm_string_free(out);
  CHECK(ok == 0);
  REQUIRE(wm_check_order(ctx.get(), c.get(), "toric", &out, &ok) == WM_OK);
  wm_string_free(out);
  CHECK(ok == 1);
  CHECK(wm_check_order(ctx.get(), c.get(), "[[1,3]]", &out, &ok) != WM_OK);
  CHECK(wm_check_order(ctx.get(), c.get(), "sideways", &out, &ok) == WM_ERR_PARSE);
}

TEST_CASE("output does not depend on the job count; calls are thread safe") {
  auto one = context(false, 1);
  auto many = context(false, 4);
  char* a = nullptr;
  char* b = nullptr;
  int ok_a = 0;
  int ok_b = 0;
  REQUIRE(wm_bijection_check(one.get(), 3, 3, 1, 0, &a, &ok_a) == WM_OK);
  REQUIRE(wm_bijection_check(many.get(), 3, 3, 1, 0, &b, &ok_b) == WM_OK);
  CHECK(std::string(a) == std::string(b));
  wm_string_free(a);
  wm_string_free(b);

  std::vector<std::thread> threads;
  std::vector<int> results(4, 0);
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&, i] {
      wm_graph* g = nullptr;
      if (wm_graph_parse("complete:4", &g) != WM_OK) return;
      char* out = nullptr;
      int equal = 0;
      if (wm_verify_iso(nullptr, g, &out, &equal) == WM_OK) results[i] = equal;
      wm_string_free(out);
      wm_graph_free(g);
    });
  for (auto& t : threads) t.join();
  CHECK(results == std::vector<int>{1, 1, 1, 1});
}
