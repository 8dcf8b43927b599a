#include "wm/graph.hpp"

#include <algorithm>
#include <charconv>

#include <json.hpp>

namespace wm {

std::vector<Vertex> to_vector(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(cardinality(s));
  for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet to_vertex_set(const std::vector<Vertex>& vertices) {
  VertexSet s = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v > kMaxLabel) fail(ErrorKind::kValidation, "vertex label out of range: " + std::to_string(v));
    s |= bit(v);
  }
  return s;
}

bool lex_less(VertexSet a, VertexSet b) {
  while (a != 0 && b != 0) {
    const Vertex x = min_vertex(a);
    const Vertex y = min_vertex(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

Graph::Graph(std::vector<Vertex> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    fail(ErrorKind::kValidation, "duplicate vertex label");
  if (labels_.size() < 2) fail(ErrorKind::kValidation, "a graph needs at least two vertices");
  vertices_ = to_vertex_set(labels_);

  for (auto& [u, v] : edges_) {
    if (u == v) fail(ErrorKind::kValidation, "loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u > kMaxLabel || v > kMaxLabel || !has_vertex(vertices_, u) ||
        !has_vertex(vertices_, v))
      fail(ErrorKind::kValidation,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") uses an undeclared vertex");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    fail(ErrorKind::kValidation, "duplicate edge");
  for (const auto& [u, v] : edges_) {
    adjacency_[u] |= bit(v);
    adjacency_[v] |= bit(u);
  }
}

Graph Graph::on_range(int n, std::vector<Edge> edges) {
  if (n < 2) fail(ErrorKind::kValidation, "a graph needs at least two vertices");
  if (n > kMaxLabel) fail(ErrorKind::kLimit, "too many vertices");
  std::vector<Vertex> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return Graph(std::move(labels), std::move(edges));
}

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty())
    fail(ErrorKind::kParse, "expected an integer in '" + std::string(context) + "'");
  return value;
}

}  // namespace

Graph make_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) fail(ErrorKind::kParse, "family string must look like name:args");
  const std::string_view name = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);

  if (name == "cone") return cone(make_family(args));

  if (name == "disjoint-complete") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) fail(ErrorKind::kParse, "disjoint-complete needs N,M");
    const int n = parse_int(args.substr(0, comma), spec);
    const int m = parse_int(args.substr(comma + 1), spec);
    if (n < 1 || m < 1) fail(ErrorKind::kValidation, "disjoint-complete needs N,M >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    for (int i = n + 1; i <= n + m; ++i)
      for (int j = i + 1; j <= n + m; ++j) edges.emplace_back(i, j);
    return Graph::on_range(n + m, std::move(edges));
  }

  const int n = parse_int(args, spec);
  if (n < 2) fail(ErrorKind::kValidation, "a graph needs at least two vertices");
  std::vector<Edge> edges;
  if (name == "complete") {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  } else if (name == "path") {
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  } else if (name == "cycle") {
    if (n < 3) fail(ErrorKind::kValidation, "cycle needs at least three vertices");
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
  } else if (name != "edgeless") {
    fail(ErrorKind::kParse, "unknown graph family '" + std::string(name) + "'");
  }
  return Graph::on_range(n, std::move(edges));
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) fail(ErrorKind::kParse, "empty graph description");
  if (text[first] != '{') return make_family(text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1));

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kParse, std::string("graph JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    std::vector<Vertex> labels;
    if (doc.contains("labels")) {
      labels = doc.at("labels").get<std::vector<Vertex>>();
      if (static_cast<int>(labels.size()) != n) fail(ErrorKind::kValidation, "\"labels\" must have n entries");
    } else {
      if (n < 2) fail(ErrorKind::kValidation, "a graph needs at least two vertices");
      if (n > kMaxLabel) fail(ErrorKind::kLimit, "too many vertices");
      for (int i = 1; i <= n; ++i) labels.push_back(i);
    }
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::kParse, "each edge must be a pair");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return Graph(std::move(labels), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kParse, std::string("graph JSON: ") + e.what());
  }
}

std::string serialize_graph(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.order();
  bool standard = true;
  for (int i = 0; i < g.order(); ++i) standard = standard && g.labels()[i] == i + 1;
  if (!standard) doc["labels"] = g.labels();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

Graph cone(const Graph& g) {
  if (g.has_apex()) fail(ErrorKind::kInvalidArgument, "graph already contains the apex 0");
  std::vector<Vertex> labels = g.labels();
  labels.insert(labels.begin(), 0);
  std::vector<Edge> edges = g.edges();
  for (Vertex v : g.labels()) edges.emplace_back(0, v);
  return Graph(std::move(labels), std::move(edges));
}

bool is_connected_induced(const Graph& g, VertexSet s) {
  if (s == 0) fail(ErrorKind::kInvalidArgument, "empty vertex subset");
  if (!is_subset(s, g.vertices())) fail(ErrorKind::kInvalidArgument, "subset contains unknown vertices");
  VertexSet reached = bit(min_vertex(s));
  VertexSet frontier = reached;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    next &= s & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int index = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++index)
      if ((mask >> index) & 1U) edges.emplace_back(i, j);
  return Graph::on_range(n, std::move(edges));
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::on_range(n, std::move(edges));
}

}  // namespace wm
