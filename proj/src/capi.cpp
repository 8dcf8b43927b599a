// C ABI over the wm core. Every entry point funnels through `guarded`, which
// maps exceptions to status codes and records the message for wm_last_error.

#include "wondermodels.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "wm/building.hpp"
#include "wm/cohomology.hpp"
#include "wm/forests.hpp"
#include "wm/graph.hpp"
#include "wm/json_io.hpp"
#include "wm/linoracle.hpp"
#include "wm/parallel.hpp"
#include "wm/partition.hpp"
#include "wm/permstats.hpp"
#include "wm/series.hpp"

struct wm_context {
  bool unsafe = false;
  int jobs = 1;
};

struct wm_graph {
  wm::Graph graph;
};

namespace {

using wm::ErrorKind;
using wm::fail;
using wm::Json;

constexpr const char* kVersion = "1.0.0";

// Safety bounds (lifted by wm_context_set_unsafe).
constexpr int kMaxVertices = 9;        // exhaustive poset / nested enumeration
constexpr int kMaxPermutation = 9;     // permutation sweeps
constexpr int kMaxSpecialTotal = 7;    // n + m for special-forest enumeration
constexpr int kMaxLambdaOrder = 8;     // admissible-tree enumeration
constexpr int kMaxRandomSide = 6;      // forest sides in random bijection checks
// Hard bounds (64-bit coefficients).
constexpr int kMaxEulerian = 20;

thread_local std::string last_error;

wm_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return WM_ERR_INVALID_ARGUMENT;
    case ErrorKind::kParse:
      return WM_ERR_PARSE;
    case ErrorKind::kValidation:
      return WM_ERR_VALIDATION;
    case ErrorKind::kLimit:
      return WM_ERR_LIMIT;
    case ErrorKind::kInternal:
      break;
  }
  return WM_ERR_INTERNAL;
}

template <class Fn>
wm_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return WM_OK;
  } catch (const wm::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::parse_error& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return WM_ERR_PARSE;
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("unexpected JSON shape: ") + e.what();
    return WM_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return WM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return WM_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) fail(ErrorKind::kInvalidArgument, std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const Json& j) { *out = copy_string(j.dump()); }

wm_context settings(const wm_context* ctx) { return ctx != nullptr ? *ctx : wm_context{}; }

void limit(const wm_context& s, bool within, const std::string& what) {
  if (!within && !s.unsafe) fail(ErrorKind::kLimit, what + " exceeds the safety bound (use --unsafe to override)");
}

// Number of base vertices: the apex of a cone graph is not counted.
int base_order(const wm::Graph& g) { return g.has_apex() ? g.order() - 1 : g.order(); }

void limit_graph(const wm_context& s, const wm::Graph& g) {
  limit(s, base_order(g) <= kMaxVertices, "graph with " + std::to_string(base_order(g)) + " vertices");
}

Json graph_json(const wm::Graph& g) { return Json::parse(wm::serialize_graph(g)); }

Json ambient_json(wm::Ambient a) {
  return Json{{"kind", a.kind == wm::AmbientKind::kTorus ? "TORUS" : "CONED_LINEAR"}, {"n", a.n}, {"dim", a.dim()}};
}

Json elements_json(std::span<const wm::BuildingElement> elements) {
  Json out = Json::array();
  for (const auto& e : elements) out.push_back(wm::element_to_json(e));
  return out;
}

struct Models {
  std::optional<wm::QPolynomial> toric;
  std::optional<wm::QPolynomial> hyper;
};

Models compute_models(const wm_context& s, const wm::Graph& g, int side) {
  limit_graph(s, g);
  if (side < WM_SIDE_TORIC || side > WM_SIDE_BOTH) fail(ErrorKind::kInvalidArgument, "unknown side");
  Models m;
  if (g.has_apex()) {
    if (side != WM_SIDE_HYPER)
      fail(ErrorKind::kInvalidArgument, "the toric model needs a base graph; this graph already has the apex 0");
    m.hyper = wm::poincare_hyperplane(g, wm::building_set(g, wm::Ambient::for_graph(g)));
    return m;
  }
  if (side & WM_SIDE_TORIC) m.toric = wm::poincare_toric(g, wm::building_set(g, wm::Ambient::torus(g.order())));
  if (side & WM_SIDE_HYPER) {
    const wm::Graph coned = wm::cone(g);
    m.hyper = wm::poincare_hyperplane(coned, wm::building_set(coned, wm::Ambient::coned_linear(g.order())));
  }
  return m;
}

Json iso_json(const wm::Graph& g, const wm::ModelIsoReport& r) {
  return Json{{"graph", graph_json(g)},
              {"cone", graph_json(wm::cone(g))},
              {"toric", wm::qpoly_to_json(r.toric)},
              {"hyper", wm::qpoly_to_json(r.hyper)},
              {"equal", r.equal}};
}

std::vector<wm::BuildingElement> order_from_spec(const wm::Graph& g, const std::string& spec) {
  const auto building = wm::building_set(g, wm::Ambient::for_graph(g));
  if (spec == "inclusion") return wm::inclusion_refining_order(building);
  if (spec == "toric") return wm::toric_style_order(building);
  const Json j = Json::parse(spec);
  if (!j.is_array()) fail(ErrorKind::kParse, "order must be \"inclusion\", \"toric\" or a JSON array of blocks");
  std::vector<wm::BuildingElement> out;
  for (const auto& b : j) {
    if (b.is_object()) {
      out.push_back(wm::element_from_json(b));
      continue;
    }
    if (!b.is_array()) fail(ErrorKind::kParse, "order entries must be blocks or elements");
    std::vector<wm::Vertex> vs;
    for (const auto& v : b) vs.push_back(v.get<int>());
    const auto block = wm::to_vertex_set(vs);
    if (wm::cardinality(block) < 2) fail(ErrorKind::kValidation, "order blocks need at least two vertices");
    out.push_back(wm::BuildingElement::of(block));
  }
  return out;
}

Json order_check_json(const wm::Graph& g, const std::string& name, std::span<const wm::BuildingElement> order,
                      int* ok) {
  const auto lattice = wm::enumerate_connected_partitions(g);
  const std::size_t bad = wm::first_non_building_prefix(order, g.vertices(), lattice);
  *ok = bad == 0 ? 1 : 0;
  Json out{{"graph", graph_json(g)}, {"order_name", name}, {"order", elements_json(order)},
           {"is_building_order", bad == 0}};
  out["first_failing_prefix"] = bad == 0 ? Json(nullptr) : Json(bad);
  return out;
}

wm::QPolynomial triple_degree_series(const std::vector<wm::ForestTriple>& triples) {
  std::vector<std::int64_t> c;
  for (const auto& t : triples) {
    const auto d = static_cast<std::size_t>(t.degree());
    if (c.size() <= d) c.resize(d + 1, 0);
    ++c[d];
  }
  return wm::QPolynomial(std::move(c));
}

std::string forest_key(const wm::AdmissibleForest& f) { return wm::forest_to_json(f).dump(); }

// Round trip, special-forest membership and degree preservation for one triple.
std::string bijection_failure(const wm::ForestTriple& t) {
  const int n = static_cast<int>(wm::forest_leaves(t.f1).size());
  const int m = static_cast<int>(wm::forest_leaves(t.f2).size());
  const wm::SpecialForest s = wm::triple_to_special_forest(t);
  if (!wm::is_special_forest(s.forest, n, m)) return "image is not special: " + forest_key(s.forest);
  if (wm::forest_degree(s.forest) != t.degree()) return "degree changed for " + wm::triple_to_json(t).dump();
  if (!(wm::special_forest_to_triple(s) == t)) return "round trip failed for " + wm::triple_to_json(t).dump();
  return {};
}

Json bijection_exhaustive(int n, int m, bool* ok) {
  const auto f1s = wm::enumerate_admissible_forests(n);
  const auto f2s = wm::enumerate_admissible_forests(m);
  std::vector<wm::ForestTriple> triples;
  for (const auto& f1 : f1s)
    for (const auto& f2 : f2s)
      wm::for_each_permutation(static_cast<int>(f1.size() + f2.size()),
                               [&](const wm::NumberList& p) { triples.push_back({f1, f2, p}); });

  std::string failure;
  std::set<std::string> images;
  for (const auto& t : triples) {
    failure = bijection_failure(t);
    if (!failure.empty()) break;
    images.insert(forest_key(wm::triple_to_special_forest(t).forest));
  }
  const auto specials = wm::enumerate_special_forests(n, m);
  std::vector<wm::AdmissibleForest> special_forests;
  for (const auto& s : specials) special_forests.push_back(s.forest);
  const auto triple_series = triple_degree_series(triples);
  const auto special_series = wm::degree_series(special_forests);
  if (failure.empty() && images.size() != triples.size()) failure = "two triples share an image";
  if (failure.empty() && images.size() != specials.size()) failure = "image count differs from special forests";
  if (failure.empty() && !(triple_series == special_series)) failure = "degree series differ";
  *ok = failure.empty();
  Json out{{"n", n},
           {"m", m},
           {"mode", "exhaustive"},
           {"triples", triples.size()},
           {"special_forests", specials.size()},
           {"triple_degree_series", wm::qpoly_to_json(triple_series)},
           {"special_degree_series", wm::qpoly_to_json(special_series)},
           {"ok", *ok}};
  if (!*ok) out["failure"] = failure;
  return out;
}

Json bijection_random(int n, int m, std::uint64_t seed, int trials, bool* ok) {
  const auto f1s = wm::enumerate_admissible_forests(n);
  const auto f2s = wm::enumerate_admissible_forests(m);
  std::mt19937_64 rng(seed);
  std::string failure;
  int done = 0;
  for (; done < trials && failure.empty(); ++done) {
    const auto& f1 = f1s[std::uniform_int_distribution<std::size_t>(0, f1s.size() - 1)(rng)];
    const auto& f2 = f2s[std::uniform_int_distribution<std::size_t>(0, f2s.size() - 1)(rng)];
    wm::NumberList sigma(f1.size() + f2.size());
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    failure = bijection_failure({f1, f2, sigma});
  }
  *ok = failure.empty();
  Json out{{"n", n}, {"m", m}, {"mode", "random"}, {"seed", seed}, {"round_trips", done}, {"ok", *ok}};
  if (!*ok) out["failure"] = failure;
  return out;
}

Json series_check(const wm_context& s, int nx, int ny, const wm::Egf2& toric, const wm::Egf2& hyper, bool* ok) {
  std::vector<std::pair<int, int>> cells;
  for (int n = 1; n <= nx; ++n)
    for (int m = 1; m <= ny; ++m) cells.emplace_back(n, m);
  const auto models = wm::parallel_map(cells.size(), s.jobs, [&](std::size_t i) {
    const auto g = wm::make_family("disjoint-complete:" + std::to_string(cells[i].first) + "," +
                                   std::to_string(cells[i].second));
    return wm::verify_model_iso(g);
  });
  *ok = toric == hyper;
  Json poincare = Json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [n, m] = cells[i];
    const bool cell_ok = models[i].equal && toric.count(n, m) == models[i].toric && hyper.count(n, m) == models[i].hyper;
    *ok = *ok && cell_ok;
    poincare.push_back(Json{{"n", n},
                            {"m", m},
                            {"series", wm::qpoly_to_json(toric.count(n, m))},
                            {"toric_model", wm::qpoly_to_json(models[i].toric)},
                            {"hyper_model", wm::qpoly_to_json(models[i].hyper)},
                            {"ok", cell_ok}});
  }
  const int max_l = nx + ny - 1;
  Json identity = Json::array();
  if (max_l >= 2) {
    for (const auto& c : wm::extract_lec_identity(max_l)) {
      const bool cell_ok = c.from_toric == c.from_hyper;
      *ok = *ok && cell_ok;
      identity.push_back(Json{{"l1", c.l1},
                              {"l2", c.l2},
                              {"eulerian_over_q", wm::qpoly_to_json(c.from_toric)},
                              {"lec", wm::qpoly_to_json(c.from_hyper)},
                              {"ok", cell_ok}});
    }
  }
  return Json{{"phi_equal", toric == hyper}, {"poincare_cells", poincare}, {"lec_identity_max_l", max_l},
              {"lec_identity", identity}, {"ok", *ok}};
}

std::vector<wm::Graph> all_graphs(int max_n) {
  std::vector<wm::Graph> out;
  for (int n = 2; n <= max_n; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << wm::pair_count(n)); ++mask)
      out.push_back(wm::graph_from_edge_mask(n, mask));
  return out;
}

Json check_entry(const std::string& name, bool ok, Json detail) {
  return Json{{"name", name}, {"ok", ok}, {"detail", std::move(detail)}};
}

}  // namespace

extern "C" {

WM_API const char* wm_version(void) { return kVersion; }

WM_API const char* wm_last_error(void) { return last_error.c_str(); }

WM_API const char* wm_status_name(wm_status status) {
  switch (status) {
    case WM_OK:
      return "WM_OK";
    case WM_ERR_INVALID_ARGUMENT:
      return "WM_ERR_INVALID_ARGUMENT";
    case WM_ERR_PARSE:
      return "WM_ERR_PARSE";
    case WM_ERR_VALIDATION:
      return "WM_ERR_VALIDATION";
    case WM_ERR_LIMIT:
      return "WM_ERR_LIMIT";
    case WM_ERR_INTERNAL:
      return "WM_ERR_INTERNAL";
  }
  return "WM_ERR_UNKNOWN";
}

WM_API void wm_string_free(char* s) { std::free(s); }

WM_API wm_status wm_context_new(wm_context** out) {
  return guarded([&] {
    require(out, "out");
    *out = new wm_context();
  });
}

WM_API void wm_context_free(wm_context* ctx) { delete ctx; }

WM_API wm_status wm_context_set_unsafe(wm_context* ctx, int unsafe) {
  return guarded([&] {
    require(ctx, "ctx");
    ctx->unsafe = unsafe != 0;
  });
}

WM_API wm_status wm_context_set_jobs(wm_context* ctx, int jobs) {
  return guarded([&] {
    require(ctx, "ctx");
    if (jobs < 1) fail(ErrorKind::kInvalidArgument, "jobs must be >= 1");
    ctx->jobs = jobs;
  });
}

WM_API wm_status wm_graph_parse(const char* text, wm_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wm_graph{wm::parse_graph(text)};
  });
}

WM_API wm_status wm_graph_cone(const wm_graph* g, wm_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new wm_graph{wm::cone(g->graph)};
  });
}

WM_API void wm_graph_free(wm_graph* g) { delete g; }

WM_API wm_status wm_graph_to_json(const wm_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_string(wm::serialize_graph(g->graph));
  });
}

WM_API wm_status wm_graph_order(const wm_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = g->graph.order();
  });
}

WM_API wm_status wm_poset(const wm_context* ctx, const wm_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    limit_graph(settings(ctx), g->graph);
    auto parts = wm::enumerate_connected_partitions(g->graph);
    std::stable_sort(parts.begin(), parts.end(),
                     [](const wm::Partition& a, const wm::Partition& b) { return a.codim() < b.codim(); });
    Json elements = Json::array();
    for (const auto& p : parts) elements.push_back(Json{{"partition", wm::partition_to_json(p)}, {"codim", p.codim()}});
    emit(out, Json{{"graph", graph_json(g->graph)}, {"size", parts.size()}, {"elements", elements}});
  });
}

WM_API wm_status wm_building(const wm_context* ctx, const wm_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    limit_graph(settings(ctx), g->graph);
    const auto ambient = wm::Ambient::for_graph(g->graph);
    const auto building = wm::building_set(g->graph, ambient);
    emit(out, Json{{"graph", graph_json(g->graph)},
                   {"ambient", ambient_json(ambient)},
                   {"size", building.size()},
                   {"elements", elements_json(building)}});
  });
}

WM_API wm_status wm_nested(const wm_context* ctx, const wm_graph* g, int include_sets, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    limit_graph(settings(ctx), g->graph);
    const auto building = wm::building_set(g->graph, wm::Ambient::for_graph(g->graph));
    std::vector<std::int64_t> by_size;
    Json sets = Json::array();
    std::int64_t count = 0;
    wm::for_each_nested_set(building, [&](const wm::NestedSet& s) {
      ++count;
      if (by_size.size() <= s.size()) by_size.resize(s.size() + 1, 0);
      ++by_size[s.size()];
      if (include_sets) sets.push_back(elements_json(s));
    });
    Json result{{"graph", graph_json(g->graph)}, {"count", count}, {"count_by_size", by_size}};
    if (include_sets) result["nested_sets"] = sets;
    emit(out, result);
  });
}

WM_API wm_status wm_admissible(const wm_context* ctx, const wm_graph* g, int include_functions, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    limit_graph(settings(ctx), g->graph);
    const auto ambient = wm::Ambient::for_graph(g->graph);
    const auto building = wm::building_set(g->graph, ambient);
    std::vector<std::int64_t> by_degree;
    Json functions = Json::array();
    std::int64_t count = 0;
    wm::for_each_admissible(building, ambient, [&](const wm::AdmissibleFunction& f) {
      ++count;
      const auto d = static_cast<std::size_t>(f.degree());
      if (by_degree.size() <= d) by_degree.resize(d + 1, 0);
      ++by_degree[d];
      if (include_functions) {
        Json fj = wm::admissible_to_json(f);
        if (ambient.kind == wm::AmbientKind::kTorus) fj["k"] = wm::k_of_admissible(f, g->graph.order());
        functions.push_back(fj);
      }
    });
    Json result{{"graph", graph_json(g->graph)},
                {"ambient", ambient_json(ambient)},
                {"count", count},
                {"degree_distribution", wm::qpoly_to_json(wm::QPolynomial(std::move(by_degree)))}};
    if (include_functions) result["functions"] = functions;
    emit(out, result);
  });
}

WM_API wm_status wm_check_order(const wm_context* ctx, const wm_graph* g, const char* order_spec, char** out,
                                int* ok) {
  return guarded([&] {
    require(g, "graph");
    require(order_spec, "order_spec");
    require(out, "out");
    require(ok, "ok");
    limit_graph(settings(ctx), g->graph);
    const std::string spec = order_spec;
    const auto order = order_from_spec(g->graph, spec);
    const std::string name = spec == "inclusion" || spec == "toric" ? spec : "custom";
    emit(out, order_check_json(g->graph, name, order, ok));
  });
}

WM_API wm_status wm_verify_lattice(const wm_context* ctx, const wm_graph* g, char** out, int* ok) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    require(ok, "ok");
    limit_graph(settings(ctx), g->graph);
    const auto r = wm::lattice_iso_report(g->graph);
    *ok = r.ok ? 1 : 0;
    emit(out, Json{{"graph", graph_json(g->graph)},
                   {"poset_size", r.poset_size},
                   {"lattice_size", r.lattice_size},
                   {"ok", r.ok},
                   {"detail", r.detail}});
  });
}

WM_API wm_status wm_poincare(const wm_context* ctx, const wm_graph* g, wm_side side, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const Models m = compute_models(settings(ctx), g->graph, side);
    Json result{{"graph", graph_json(g->graph)}};
    if (m.toric) result["toric"] = wm::qpoly_to_json(*m.toric);
    if (m.hyper) result["hyper"] = wm::qpoly_to_json(*m.hyper);
    if (m.toric && m.hyper) result["equal"] = *m.toric == *m.hyper;
    emit(out, result);
  });
}

WM_API wm_status wm_poincare_coeffs(const wm_context* ctx, const wm_graph* g, wm_side side, int64_t* buf,
                                    size_t cap, size_t* len) {
  return guarded([&] {
    require(g, "graph");
    require(len, "len");
    if (side != WM_SIDE_TORIC && side != WM_SIDE_HYPER)
      fail(ErrorKind::kInvalidArgument, "wm_poincare_coeffs needs exactly one side");
    const Models m = compute_models(settings(ctx), g->graph, side);
    const auto& coeffs = (side == WM_SIDE_TORIC ? *m.toric : *m.hyper).coeffs();
    *len = coeffs.size();
    if (cap < coeffs.size()) fail(ErrorKind::kInvalidArgument, "buffer too small for the coefficients");
    if (!coeffs.empty()) {
      require(buf, "buf");
      std::copy(coeffs.begin(), coeffs.end(), buf);
    }
  });
}

WM_API wm_status wm_verify_iso(const wm_context* ctx, const wm_graph* g, char** out, int* equal) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    require(equal, "equal");
    if (g->graph.has_apex()) fail(ErrorKind::kInvalidArgument, "verify-iso expects a base graph without apex 0");
    limit_graph(settings(ctx), g->graph);
    const auto r = wm::verify_model_iso(g->graph);
    *equal = r.equal ? 1 : 0;
    emit(out, iso_json(g->graph, r));
  });
}

WM_API wm_status wm_eulerian(const wm_context* ctx, int l, char** out) {
  return guarded([&] {
    require(out, "out");
    if (l < 0) fail(ErrorKind::kInvalidArgument, "l must be non-negative");
    if (l > kMaxEulerian) fail(ErrorKind::kLimit, "l beyond 20 overflows 64-bit coefficients");
    const auto s = settings(ctx);
    const auto a = wm::eulerian_poly(l);
    Json result{{"l", l}, {"eulerian", wm::qpoly_to_json(a)}};
    if (l >= 1) result["eulerian_over_q"] = wm::qpoly_to_json(a.divided_by_q());
    if (l <= kMaxPermutation || (s.unsafe && l <= 12)) {
      const auto sweep = wm::eulerian_poly_by_descents(l);
      result["by_descents"] = wm::qpoly_to_json(sweep);
      result["equal"] = sweep == a;
    }
    emit(out, result);
  });
}

WM_API wm_status wm_lec(const wm_context* ctx, const char* list, char** out) {
  return guarded([&] {
    (void)ctx;
    require(list, "list");
    require(out, "out");
    const auto values = wm::parse_number_list(list);
    const auto hf = wm::hook_factorization(values);
    Json hooks = Json::array();
    Json hook_inv = Json::array();
    for (const auto& h : hf.hooks) {
      hooks.push_back(h);
      hook_inv.push_back(wm::inversion_count(h));
    }
    emit(out, Json{{"list", values},
                   {"prefix", hf.prefix},
                   {"hooks", hooks},
                   {"hook_inversions", hook_inv},
                   {"lec", wm::lec(values)},
                   {"inv", wm::inversion_count(values)},
                   {"des", wm::descent_count(values)}});
  });
}

WM_API wm_status wm_lec_distribution(const wm_context* ctx, int l, char** out) {
  return guarded([&] {
    require(out, "out");
    if (l < 1) fail(ErrorKind::kInvalidArgument, "l must be >= 1");
    limit(settings(ctx), l <= kMaxPermutation, "permutation sweep of size " + std::to_string(l));
    if (l > kMaxEulerian) fail(ErrorKind::kLimit, "l beyond 20 overflows 64-bit coefficients");
    const auto lec = wm::lec_distribution(l);
    const auto eulerian = wm::eulerian_poly(l).divided_by_q();
    emit(out, Json{{"l", l},
                   {"lec_distribution", wm::qpoly_to_json(lec)},
                   {"eulerian_over_q", wm::qpoly_to_json(eulerian)},
                   {"equal", lec == eulerian}});
  });
}

WM_API wm_status wm_hook(const wm_context* ctx, const char* values, int i, char** out) {
  return guarded([&] {
    (void)ctx;
    require(values, "values");
    require(out, "out");
    const auto v = wm::parse_number_list(values);
    const auto hook = wm::hook_with_inversions(v, i);
    emit(out, Json{{"values", v}, {"i", i}, {"hook", hook}, {"inversions", wm::inversion_count(hook)}});
  });
}

WM_API wm_status wm_bijection(const wm_context* ctx, const char* triple_json, char** out) {
  return guarded([&] {
    (void)ctx;
    require(triple_json, "triple_json");
    require(out, "out");
    const auto triple = wm::triple_from_json(Json::parse(triple_json));
    const auto special = wm::triple_to_special_forest(triple);
    emit(out, Json{{"triple", wm::triple_to_json(triple)},
                   {"special", wm::special_forest_to_json(special)},
                   {"degree", wm::forest_degree(special.forest)}});
  });
}

WM_API wm_status wm_bijection_inverse(const wm_context* ctx, const char* special_json, char** out) {
  return guarded([&] {
    (void)ctx;
    require(special_json, "special_json");
    require(out, "out");
    const auto special = wm::special_forest_from_json(Json::parse(special_json));
    const auto triple = wm::special_forest_to_triple(special);
    emit(out, Json{{"special", wm::special_forest_to_json(special)},
                   {"triple", wm::triple_to_json(triple)},
                   {"degree", triple.degree()}});
  });
}

WM_API wm_status wm_bijection_check(const wm_context* ctx, int n, int m, uint64_t seed, int trials, char** out,
                                    int* ok) {
  return guarded([&] {
    require(out, "out");
    require(ok, "ok");
    if (n < 1 || m < 1) fail(ErrorKind::kInvalidArgument, "n and m must be >= 1");
    const auto s = settings(ctx);
    bool good = false;
    Json result;
    if (n <= 3 && m <= 3) {
      result = bijection_exhaustive(n, m, &good);
    } else {
      if (trials < 1) fail(ErrorKind::kInvalidArgument, "trials must be >= 1");
      limit(s, n <= kMaxRandomSide && m <= kMaxRandomSide, "forest side of size " + std::to_string(std::max(n, m)));
      result = bijection_random(n, m, seed, trials, &good);
    }
    *ok = good ? 1 : 0;
    emit(out, result);
  });
}

WM_API wm_status wm_special_forests(const wm_context* ctx, int n, int m, int include_list, char** out) {
  return guarded([&] {
    require(out, "out");
    if (n < 1 || m < 1) fail(ErrorKind::kInvalidArgument, "n and m must be >= 1");
    limit(settings(ctx), n + m <= kMaxSpecialTotal, "special forests with n + m = " + std::to_string(n + m));
    const auto specials = wm::enumerate_special_forests(n, m);
    std::vector<wm::AdmissibleForest> forests;
    Json list = Json::array();
    for (const auto& s : specials) {
      forests.push_back(s.forest);
      if (include_list) list.push_back(wm::forest_to_json(s.forest));
    }
    Json result{{"n", n}, {"m", m}, {"count", specials.size()},
                {"degree_series", wm::qpoly_to_json(wm::degree_series(forests))}};
    if (include_list) result["forests"] = list;
    emit(out, result);
  });
}

WM_API wm_status wm_lambda(const wm_context* ctx, int order, char** out) {
  return guarded([&] {
    require(out, "out");
    if (order < 1) fail(ErrorKind::kInvalidArgument, "order must be >= 1");
    limit(settings(ctx), order <= kMaxLambdaOrder, "lambda order " + std::to_string(order));
    const auto lambda = wm::lambda_series(order);
    Json coeffs = Json::array();
    for (int k = 0; k <= order; ++k) coeffs.push_back(wm::qpoly_to_json(wm::to_integer(lambda.coeff(k))));
    emit(out, Json{{"order", order}, {"coeffs", coeffs}});
  });
}

WM_API wm_status wm_series(const wm_context* ctx, int nx, int ny, int check, char** out, int* ok) {
  return guarded([&] {
    require(out, "out");
    require(ok, "ok");
    if (nx < 1 || ny < 1) fail(ErrorKind::kInvalidArgument, "orders must be >= 1");
    const auto s = settings(ctx);
    limit(s, nx + ny <= kMaxPermutation, "series with nx + ny = " + std::to_string(nx + ny));
    const auto toric = wm::phi_toric(nx, ny);
    const auto hyper = wm::phi_hyper(nx, ny);
    Json result{{"orders", {nx, ny}},
                {"phi_toric", wm::series_to_json(toric)},
                {"phi_hyper", wm::series_to_json(hyper)},
                {"equal", toric == hyper}};
    bool good = toric == hyper;
    if (check) {
      result["check"] = series_check(s, nx, ny, toric, hyper, &good);
    }
    *ok = good ? 1 : 0;
    emit(out, result);
  });
}

WM_API wm_status wm_verify_all(const wm_context* ctx, char** out, int* ok) {
  return guarded([&] {
    require(out, "out");
    require(ok, "ok");
    const auto s = settings(ctx);
    const auto graphs = all_graphs(5);
    Json checks = Json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool good, Json detail) {
      all_ok = all_ok && good;
      checks.push_back(check_entry(name, good, std::move(detail)));
    };

    const auto iso = wm::parallel_map(graphs.size(), s.jobs,
                                      [&](std::size_t i) { return wm::verify_model_iso(graphs[i]).equal; });
    const auto iso_bad = std::count(iso.begin(), iso.end(), false);
    record("model_isomorphism_n_le_5", iso_bad == 0, Json{{"graphs", graphs.size()}, {"failures", iso_bad}});

    const auto lattice = wm::parallel_map(graphs.size(), s.jobs,
                                          [&](std::size_t i) { return wm::verify_lattice_iso(graphs[i]); });
    const auto lattice_bad = std::count(lattice.begin(), lattice.end(), false);
    record("lattice_isomorphism_n_le_5", lattice_bad == 0, Json{{"graphs", graphs.size()}, {"failures", lattice_bad}});

    const auto orders = wm::parallel_map(graphs.size(), s.jobs, [&](std::size_t i) {
      const wm::Graph coned = wm::cone(graphs[i]);
      const auto building = wm::building_set(coned, wm::Ambient::coned_linear(graphs[i].order()));
      if (!(wm::cone_building_set(graphs[i]) == building)) return false;
      const auto lat = wm::enumerate_connected_partitions(coned);
      return wm::is_building_order(wm::inclusion_refining_order(building), coned.vertices(), lat) &&
             wm::is_building_order(wm::toric_style_order(building), coned.vertices(), lat);
    });
    const auto orders_bad = std::count(orders.begin(), orders.end(), false);
    record("building_orders_n_le_5", orders_bad == 0, Json{{"graphs", graphs.size()}, {"failures", orders_bad}});

    bool lec_ok = true;
    for (int l = 1; l <= 8; ++l) lec_ok = lec_ok && wm::lec_distribution(l) == wm::eulerian_poly(l).divided_by_q();
    record("lec_eulerian_l_le_8", lec_ok, Json{{"max_l", 8}});

    bool series_ok = false;
    const auto toric = wm::phi_toric(6, 6, 7);
    const auto hyper = wm::phi_hyper(6, 6, 7);
    series_ok = toric == hyper;
    for (int n = 1; n <= 6 && series_ok; ++n)
      for (int m = 1; n + m <= 7 && series_ok; ++m) {
        const auto r = wm::verify_model_iso(wm::make_family("disjoint-complete:" + std::to_string(n) + "," +
                                                            std::to_string(m)));
        series_ok = r.equal && toric.count(n, m) == r.toric;
      }
    for (const auto& c : wm::extract_lec_identity(7)) series_ok = series_ok && c.from_toric == c.from_hyper;
    record("series_n_plus_m_le_7", series_ok, Json{{"max_total", 7}});

    bool bij_ok = true;
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= 3; ++m) {
        bool good = false;
        bijection_exhaustive(n, m, &good);
        bij_ok = bij_ok && good;
      }
    record("bijection_exhaustive_n_m_le_3", bij_ok, Json{{"max_side", 3}});

    *ok = all_ok ? 1 : 0;
    emit(out, Json{{"checks", checks}, {"ok", all_ok}});
  });
}

}  // extern "C"
