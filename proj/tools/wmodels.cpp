// wmodels — command-line front end. Talks to the engine only through the C
// API in wondermodels.h; results come back as JSON and are either printed
// verbatim (--json) or rendered as text.
//
// Exit status: 0 success, 1 a verification failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wondermodels.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

/// Carries a C API failure out to main().
struct ApiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(wm_status status) {
  if (status != WM_OK) throw ApiError(std::string(wm_status_name(status)) + ": " + wm_last_error());
}

using ContextPtr = std::unique_ptr<wm_context, decltype(&wm_context_free)>;
using GraphPtr = std::unique_ptr<wm_graph, decltype(&wm_graph_free)>;

/// Takes ownership of a C string result and parses it.
Json take_json(char* raw) {
  std::unique_ptr<char, decltype(&wm_string_free)> owned(raw, wm_string_free);
  return Json::parse(owned.get());
}

struct GlobalOptions {
  bool json = false;
  bool unsafe = false;
  bool cohomological = false;
  int jobs = 1;
};

struct GraphSource {
  std::string family;
  std::string graph;
  std::string file;
  bool cone = false;
};

ContextPtr make_context(const GlobalOptions& g) {
  wm_context* raw = nullptr;
  check(wm_context_new(&raw));
  ContextPtr ctx(raw, wm_context_free);
  check(wm_context_set_unsafe(ctx.get(), g.unsafe ? 1 : 0));
  check(wm_context_set_jobs(ctx.get(), g.jobs));
  return ctx;
}

GraphPtr parse_graph_text(const std::string& text) {
  wm_graph* raw = nullptr;
  check(wm_graph_parse(text.c_str(), &raw));
  return GraphPtr(raw, wm_graph_free);
}

GraphPtr load_graph(const GraphSource& src) {
  std::string text;
  if (!src.family.empty()) {
    text = src.family;
  } else if (!src.graph.empty()) {
    text = src.graph;
  } else if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw ApiError("cannot read graph file '" + src.file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    throw CLI::ValidationError("graph", "one of --family, --graph or --file is required");
  }
  GraphPtr g = parse_graph_text(text);
  if (!src.cone) return g;
  wm_graph* coned = nullptr;
  check(wm_graph_cone(g.get(), &coned));
  return GraphPtr(coned, wm_graph_free);
}

void add_graph_options(CLI::App* cmd, GraphSource& src, bool allow_cone) {
  auto* family = cmd->add_option("--family", src.family, "Graph family, e.g. complete:4, path:3, cone:cycle:4");
  auto* graph = cmd->add_option("--graph", src.graph, "Graph JSON {\"n\":N,\"edges\":[[i,j],...]}");
  auto* file = cmd->add_option("--file", src.file, "File holding graph JSON or a family string");
  family->excludes(graph)->excludes(file);
  graph->excludes(file);
  if (allow_cone) cmd->add_flag("--cone", src.cone, "Work with the cone of the graph (apex 0)");
}

std::string format_poly(const Json& poly, bool cohomological) {
  const auto& coeffs = poly.at("q_coeffs");
  const std::string var = cohomological ? "t" : "q";
  const int step = cohomological ? 2 : 1;
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto c = coeffs[i].get<std::int64_t>();
    if (c == 0) continue;
    const auto magnitude = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const auto power = static_cast<int>(i) * step;
    if (power == 0) {
      out += std::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += std::to_string(magnitude);
    out += var;
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out.empty() ? "0" : out;
}

std::string format_list(const Json& list) {
  std::string out = "[";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0) out += ",";
    out += list[i].is_array() ? format_list(list[i]) : list[i].dump();
  }
  return out + "]";
}

std::string format_block(const Json& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) out += ",";
    out += block[i].dump();
  }
  return out + "}";
}

std::string format_element(const Json& e) {
  return (e.at("kind") == "TYPE2" ? "M" : "H") + format_block(e.at("block"));
}

std::string format_partition(const Json& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += "|";
    for (const auto& v : p[i]) out += v.dump() + (p[i].size() > 1 && v != p[i].back() ? "," : "");
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Prints `result` as JSON or through `render`, returning `exit_code`.
template <class Render>
int finish(const GlobalOptions& g, const Json& result, Render&& render, int exit_code = kExitOk) {
  if (g.json) {
    std::cout << result.dump(2) << "\n";
  } else {
    render(result);
  }
  return exit_code;
}

// ---- graph sweeps for verify-iso -----------------------------------------

std::string graph_from_mask(int n, std::uint64_t mask) {
  Json edges = Json::array();
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++bit)
      if ((mask >> bit) & 1U) edges.push_back({i, j});
  return Json{{"n", n}, {"edges", edges}}.dump();
}

/// Runs fn(i) for i < count on `jobs` threads; results are kept in index order.
template <class Fn>
std::vector<Json> parallel_results(std::size_t count, int jobs, Fn&& fn) {
  std::vector<Json> results(count);
  std::vector<std::string> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (!e.empty()) throw ApiError(e);
  return results;
}

Json verify_one(const wm_context* ctx, const std::string& graph_text) {
  GraphPtr g = parse_graph_text(graph_text);
  char* out = nullptr;
  int equal = 0;
  check(wm_verify_iso(ctx, g.get(), &out, &equal));
  return take_json(out);
}

void print_replay(const Json& r) {
  Json replay = r;
  replay["replay"] = "wmodels verify-iso --graph '" + r.at("graph").dump() + "'";
  std::cout << replay.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wonderful models of graphic toric and hyperplane arrangements"};
  app.set_version_flag("--version", std::string(wm_version()));
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_flag("--json", global.json, "Emit JSON instead of text");
  app.add_flag("--unsafe", global.unsafe, "Lift the safety bounds on enumeration sizes");
  app.add_flag("--cohomological", global.cohomological, "Print polynomials in t = q^(1/2), i.e. cohomological degree");
  app.add_option("--jobs,-j", global.jobs, "Worker threads for sweeps (output does not depend on it)")
      ->check(CLI::Range(1, 256));

  // Options are bound through these, one set per subcommand.
  GraphSource src;
  std::string side = "both";
  bool list = false;
  int l = 0;
  std::string number_list;
  std::string values;
  int inversions = 0;
  std::string triple_json;
  std::string special_json;
  bool bij_check = false;
  int n = 0;
  int m = 0;
  std::uint64_t seed = 1;
  int trials = 1000;
  int nx = 4;
  int ny = 4;
  bool series_check = false;
  int lambda_order = 0;
  std::string order = "both";
  int all_up_to = 0;
  int random_count = 0;
  std::vector<int> random_sizes{6, 7};
  int distribution = 0;

  auto* poset = app.add_subcommand("poset", "Connected-partition poset of a graph");
  add_graph_options(poset, src, true);

  auto* building = app.add_subcommand("building", "Building set of a graph (use --cone for the coned set)");
  add_graph_options(building, src, true);

  auto* nested = app.add_subcommand("nested", "Nested sets of the building set");
  add_graph_options(nested, src, true);
  nested->add_flag("--list", list, "List every nested set");

  auto* admissible = app.add_subcommand("admissible", "Admissible functions of the building set");
  add_graph_options(admissible, src, true);
  admissible->add_flag("--list", list, "List every admissible function");

  auto* poincare = app.add_subcommand("poincare", "Poincaré polynomials of the toric and hyperplane models");
  add_graph_options(poincare, src, false);
  poincare->add_option("--side", side, "toric, hyper or both")
      ->check(CLI::IsMember({"toric", "hyper", "both"}));

  auto* verify_iso = app.add_subcommand("verify-iso", "Check poin(toric model of G) = poin(hyperplane model of cone G)");
  add_graph_options(verify_iso, src, false);
  verify_iso->add_option("--all-up-to", all_up_to, "Sweep every labelled graph on 2..N vertices")
      ->check(CLI::Range(2, 9));
  verify_iso->add_option("--random", random_count, "Additionally test this many random graphs")
      ->check(CLI::NonNegativeNumber);
  verify_iso->add_option("--sizes", random_sizes, "Vertex counts for random graphs")->delimiter(',');
  verify_iso->add_option("--seed", seed, "Seed for random graphs");

  auto* eulerian = app.add_subcommand("eulerian", "Eulerian polynomial A_l(q)");
  eulerian->add_option("l", l, "Permutation size")->required();

  auto* lec = app.add_subcommand("lec", "Hook factorization and lec statistic of a list");
  lec->add_option("list", number_list, "Comma-separated list, e.g. 3,1,2");
  lec->add_option("--distribution", distribution, "Instead: sum of q^lec over S_l");
  lec->require_option(1);

  auto* hooks = app.add_subcommand("hooks", "Hook factorization of a list, or the hook with i inversions");
  hooks->add_option("list", number_list, "Comma-separated list to factorize");
  auto* hook_values = hooks->add_option("--values", values, "Increasing values for the hook");
  hooks->add_option("--inversions,-i", inversions, "Inversion count of the hook")->needs(hook_values);

  auto* bijection = app.add_subcommand("bijection", "Triples (F1,F2,sigma) <-> special admissible forests");
  auto* opt_triple = bijection->add_option("--triple", triple_json, "Triple JSON {\"f1\":..,\"f2\":..,\"sigma\":..}");
  auto* opt_special = bijection->add_option("--special", special_json, "Special forest JSON {\"n\":..,\"m\":..,\"forest\":..}");
  auto* opt_check = bijection->add_flag("--check", bij_check, "Round-trip check for --n, --m");
  bijection->add_option("--n", n, "Size of the first side")->needs(opt_check);
  bijection->add_option("--m", m, "Size of the second side")->needs(opt_check);
  bijection->add_option("--trials", trials, "Random round trips when n or m exceeds 3");
  bijection->add_option("--seed", seed, "Seed for random round trips");
  opt_triple->excludes(opt_special)->excludes(opt_check);
  opt_special->excludes(opt_check);

  auto* special = app.add_subcommand("special-forests", "Special admissible forests of type (n,m)");
  special->add_option("--n", n, "First side")->required();
  special->add_option("--m", m, "Second side")->required();
  special->add_flag("--list", list, "List every forest");

  auto* series = app.add_subcommand("series", "Generating series Phi^T and Phi^H");
  series->add_option("--nx", nx, "Order in x")->check(CLI::PositiveNumber);
  series->add_option("--ny", ny, "Order in y")->check(CLI::PositiveNumber);
  series->add_flag("--check", series_check, "Compare with the model Poincaré polynomials and the lec identity");
  series->add_option("--lambda", lambda_order, "Instead: print lambda(q,t) to this order");

  auto* check_order = app.add_subcommand("check-order", "Check that every prefix of an order is building");
  add_graph_options(check_order, src, true);
  check_order->add_option("--order", order, "inclusion, toric, both, or a JSON array of blocks");

  auto* verify_all = app.add_subcommand("verify-all", "Run the whole verification battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ContextPtr ctx = make_context(global);
    const bool co = global.cohomological;
    char* out = nullptr;
    int ok = 0;

    if (*poset) {
      GraphPtr g = load_graph(src);
      check(wm_poset(ctx.get(), g.get(), &out));
      return finish(global, take_json(out), [](const Json& r) {
        std::cout << "graph: " << r.at("graph").dump() << "\n";
        std::cout << "elements: " << r.at("size") << "\n";
        for (const auto& e : r.at("elements"))
          std::cout << "  codim " << e.at("codim") << "  " << format_partition(e.at("partition")) << "\n";
      });
    }

    if (*building) {
      GraphPtr g = load_graph(src);
      check(wm_building(ctx.get(), g.get(), &out));
      return finish(global, take_json(out), [](const Json& r) {
        std::cout << "graph: " << r.at("graph").dump() << "\n";
        std::cout << "ambient: " << r.at("ambient").at("kind").get<std::string>() << "(" << r.at("ambient").at("n")
                  << "), dim " << r.at("ambient").at("dim") << "\n";
        std::cout << "elements (" << r.at("size") << "):";
        for (const auto& e : r.at("elements")) std::cout << " " << format_element(e);
        std::cout << "\n";
      });
    }

    if (*nested) {
      GraphPtr g = load_graph(src);
      check(wm_nested(ctx.get(), g.get(), list ? 1 : 0, &out));
      return finish(global, take_json(out), [](const Json& r) {
        std::cout << "graph: " << r.at("graph").dump() << "\n";
        std::cout << "nested sets: " << r.at("count") << "  by size " << format_list(r.at("count_by_size")) << "\n";
        if (r.contains("nested_sets"))
          for (const auto& s : r.at("nested_sets")) {
            std::cout << "  {";
            for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? ", " : "") << format_element(s[i]);
            std::cout << "}\n";
          }
      });
    }

    if (*admissible) {
      GraphPtr g = load_graph(src);
      check(wm_admissible(ctx.get(), g.get(), list ? 1 : 0, &out));
      return finish(global, take_json(out), [co](const Json& r) {
        std::cout << "graph: " << r.at("graph").dump() << "\n";
        std::cout << "admissible functions: " << r.at("count") << "\n";
        std::cout << "degree distribution: " << format_poly(r.at("degree_distribution"), co) << "\n";
        if (r.contains("functions"))
          for (const auto& f : r.at("functions")) {
            std::cout << "  deg " << f.at("degree") << ":";
            for (std::size_t i = 0; i < f.at("support").size(); ++i)
              std::cout << " " << format_element(f.at("support")[i]) << "^" << f.at("exponents")[i];
            if (f.contains("k")) std::cout << "  (k=" << f.at("k") << ")";
            std::cout << "\n";
          }
      });
    }

    if (*poincare) {
      GraphPtr g = load_graph(src);
      const wm_side s = side == "toric" ? WM_SIDE_TORIC : side == "hyper" ? WM_SIDE_HYPER : WM_SIDE_BOTH;
      check(wm_poincare(ctx.get(), g.get(), s, &out));
      return finish(global, take_json(out), [co](const Json& r) {
        std::cout << "graph: " << r.at("graph").dump() << "\n";
        if (r.contains("toric")) std::cout << "toric:            " << format_poly(r.at("toric"), co) << "\n";
        if (r.contains("hyper")) std::cout << "hyperplane(cone): " << format_poly(r.at("hyper"), co) << "\n";
        if (r.contains("equal")) std::cout << "equal: " << yes_no(r.at("equal").get<bool>()) << "\n";
      });
    }

    if (*verify_iso) {
      std::vector<std::string> graphs;
      const bool sweep = all_up_to > 0 || random_count > 0;
      if (!sweep || !src.family.empty() || !src.graph.empty() || !src.file.empty()) {
        GraphPtr g = load_graph(src);
        char* text = nullptr;
        check(wm_graph_to_json(g.get(), &text));
        graphs.push_back(take_json(text).dump());
      }
      for (int size = 2; size <= all_up_to; ++size)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (size * (size - 1) / 2)); ++mask)
          graphs.push_back(graph_from_mask(size, mask));
      std::mt19937_64 rng(seed);
      for (int i = 0; i < random_count; ++i) {
        if (random_sizes.empty()) throw CLI::ValidationError("--sizes", "needs at least one size");
        const int size = random_sizes[static_cast<std::size_t>(i) % random_sizes.size()];
        if (size < 2 || size > 12) throw CLI::ValidationError("--sizes", "sizes must lie in 2..12");
        graphs.push_back(graph_from_mask(size, rng() & ((std::uint64_t{1} << (size * (size - 1) / 2)) - 1)));
      }

      const auto reports = parallel_results(graphs.size(), global.jobs,
                                            [&](std::size_t i) { return verify_one(ctx.get(), graphs[i]); });
      std::size_t failures = 0;
      for (const auto& r : reports) failures += r.at("equal").get<bool>() ? 0 : 1;

      if (!sweep) {
        const Json& r = reports.front();
        if (!r.at("equal").get<bool>()) {
          print_replay(r);
          return kExitFailedCheck;
        }
        return finish(global, r, [co](const Json& x) {
          std::cout << "graph: " << x.at("graph").dump() << "\n";
          std::cout << "toric:            " << format_poly(x.at("toric"), co) << "\n";
          std::cout << "hyperplane(cone): " << format_poly(x.at("hyper"), co) << "\n";
          std::cout << "equal: yes\n";
        });
      }
      for (const auto& r : reports)
        if (!r.at("equal").get<bool>()) print_replay(r);
      Json summary{{"graphs", graphs.size()}, {"failures", failures}, {"ok", failures == 0}};
      return finish(
          global, summary,
          [](const Json& s) {
            std::cout << "graphs checked: " << s.at("graphs") << ", failures: " << s.at("failures") << "\n";
          },
          failures == 0 ? kExitOk : kExitFailedCheck);
    }

    if (*eulerian) {
      check(wm_eulerian(ctx.get(), l, &out));
      const Json r = take_json(out);
      const bool good = !r.contains("equal") || r.at("equal").get<bool>();
      return finish(
          global, r,
          [co](const Json& x) {
            std::cout << "A_" << x.at("l") << "(q) = " << format_poly(x.at("eulerian"), co) << "\n";
            if (x.contains("eulerian_over_q"))
              std::cout << "A_" << x.at("l") << "(q)/q = " << format_poly(x.at("eulerian_over_q"), co) << "\n";
            if (x.contains("by_descents"))
              std::cout << "descent sweep agrees: " << yes_no(x.at("equal").get<bool>()) << "\n";
          },
          good ? kExitOk : kExitFailedCheck);
    }

    if (*lec && distribution > 0) {
      check(wm_lec_distribution(ctx.get(), distribution, &out));
      const Json r = take_json(out);
      return finish(
          global, r,
          [co](const Json& x) {
            std::cout << "sum q^lec over S_" << x.at("l") << " = " << format_poly(x.at("lec_distribution"), co) << "\n";
            std::cout << "A_" << x.at("l") << "(q)/q         = " << format_poly(x.at("eulerian_over_q"), co) << "\n";
            std::cout << "equal: " << yes_no(x.at("equal").get<bool>()) << "\n";
          },
          r.at("equal").get<bool>() ? kExitOk : kExitFailedCheck);
    }

    if (*lec || (*hooks && values.empty())) {
      if (number_list.empty()) throw CLI::ValidationError("list", "a comma-separated list is required");
      check(wm_lec(ctx.get(), number_list.c_str(), &out));
      return finish(global, take_json(out), [](const Json& r) {
        std::cout << "prefix=" << format_list(r.at("prefix")) << " hooks=" << format_list(r.at("hooks"))
                  << " lec=" << r.at("lec") << "\n";
      });
    }

    if (*hooks) {
      check(wm_hook(ctx.get(), values.c_str(), inversions, &out));
      return finish(global, take_json(out), [](const Json& r) {
        std::cout << "hook=" << format_list(r.at("hook")) << " inv=" << r.at("inversions") << "\n";
      });
    }

    if (*bijection) {
      if (!triple_json.empty()) {
        check(wm_bijection(ctx.get(), triple_json.c_str(), &out));
        return finish(global, take_json(out), [](const Json& r) {
          std::cout << "special forest: " << r.at("special").dump() << "\n";
          std::cout << "degree: " << r.at("degree") << "\n";
        });
      }
      if (!special_json.empty()) {
        check(wm_bijection_inverse(ctx.get(), special_json.c_str(), &out));
        return finish(global, take_json(out), [](const Json& r) {
          std::cout << "triple: " << r.at("triple").dump() << "\n";
          std::cout << "degree: " << r.at("degree") << "\n";
        });
      }
      if (!bij_check) throw CLI::ValidationError("bijection", "give --triple, --special or --check");
      check(wm_bijection_check(ctx.get(), n, m, seed, trials, &out, &ok));
      return finish(
          global, take_json(out),
          [](const Json& r) {
            std::cout << "type (" << r.at("n") << "," << r.at("m") << "), " << r.at("mode").get<std::string>() << ": ";
            if (r.at("mode") == "exhaustive") {
              std::cout << r.at("triples") << " triples, " << r.at("special_forests") << " special forests";
            } else {
              std::cout << r.at("round_trips") << " round trips";
            }
            std::cout << ", ok: " << yes_no(r.at("ok").get<bool>()) << "\n";
            if (r.contains("failure")) std::cout << "failure: " << r.at("failure").get<std::string>() << "\n";
          },
          ok ? kExitOk : kExitFailedCheck);
    }

    if (*special) {
      check(wm_special_forests(ctx.get(), n, m, list ? 1 : 0, &out));
      return finish(global, take_json(out), [co](const Json& r) {
        std::cout << "special forests of type (" << r.at("n") << "," << r.at("m") << "): " << r.at("count") << "\n";
        std::cout << "degree series: " << format_poly(r.at("degree_series"), co) << "\n";
        if (r.contains("forests"))
          for (const auto& f : r.at("forests")) std::cout << "  " << f.dump() << "\n";
      });
    }

    if (*series && lambda_order > 0) {
      check(wm_lambda(ctx.get(), lambda_order, &out));
      return finish(global, take_json(out), [co](const Json& r) {
        const auto& c = r.at("coeffs");
        for (std::size_t k = 1; k < c.size(); ++k)
          std::cout << "c_" << k << " = " << format_poly(c[k], co) << "\n";
      });
    }

    if (*series) {
      check(wm_series(ctx.get(), nx, ny, series_check ? 1 : 0, &out, &ok));
      return finish(
          global, take_json(out),
          [co](const Json& r) {
            std::cout << "orders: " << format_list(r.at("orders")) << "\n";
            std::cout << "Phi^T = Phi^H: " << yes_no(r.at("equal").get<bool>()) << "\n";
            if (!r.contains("check")) return;
            const auto& c = r.at("check");
            for (const auto& cell : c.at("poincare_cells"))
              std::cout << "  K_" << cell.at("n") << " + K_" << cell.at("m") << ": " << format_poly(cell.at("series"), co)
                        << (cell.at("ok").get<bool>() ? "  [matches both models]" : "  [MISMATCH]") << "\n";
            bool identity_ok = true;
            for (const auto& cell : c.at("lec_identity")) identity_ok = identity_ok && cell.at("ok").get<bool>();
            std::cout << "lec identity up to l=" << c.at("lec_identity_max_l") << ": " << yes_no(identity_ok) << "\n";
            std::cout << "all checks passed: " << yes_no(c.at("ok").get<bool>()) << "\n";
          },
          ok ? kExitOk : kExitFailedCheck);
    }

    if (*check_order) {
      GraphPtr g = load_graph(src);
      std::vector<std::string> specs;
      if (order == "both") {
        specs = {"inclusion", "toric"};
      } else {
        specs = {order};
      }
      Json results = Json::array();
      bool all_ok = true;
      for (const auto& spec : specs) {
        check(wm_check_order(ctx.get(), g.get(), spec.c_str(), &out, &ok));
        results.push_back(take_json(out));
        all_ok = all_ok && ok;
      }
      return finish(
          global, Json{{"results", results}, {"ok", all_ok}},
          [](const Json& r) {
            for (const auto& x : r.at("results")) {
              std::cout << x.at("order_name").get<std::string>() << " order:";
              for (const auto& e : x.at("order")) std::cout << " " << format_element(e);
              std::cout << "\n  building order: " << yes_no(x.at("is_building_order").get<bool>());
              if (!x.at("first_failing_prefix").is_null())
                std::cout << " (first failing prefix length " << x.at("first_failing_prefix") << ")";
              std::cout << "\n";
            }
          },
          all_ok ? kExitOk : kExitFailedCheck);
    }

    if (*verify_all) {
      check(wm_verify_all(ctx.get(), &out, &ok));
      return finish(
          global, take_json(out),
          [](const Json& r) {
            for (const auto& c : r.at("checks"))
              std::cout << (c.at("ok").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>() << "  "
                        << c.at("detail").dump() << "\n";
          },
          ok ? kExitOk : kExitFailedCheck);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
