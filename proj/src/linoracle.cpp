#include "wm/linoracle.hpp"

#include <algorithm>

namespace wm {

namespace {

using Row = std::vector<Rational>;

bool is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// In-place reduced row echelon form; drops zero rows.
void reduce(std::vector<Row>& rows, std::size_t width) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && sgn(rows[sel][col]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    const Rational inv = 1 / rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || sgn(rows[r][col]) == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
}

}  // namespace

RationalSubspace::RationalSubspace(VertexSet ground, std::vector<std::vector<Rational>> equations)
    : ground_(ground), columns_(to_vector(ground)), rows_(std::move(equations)) {
  for (const auto& r : rows_)
    if (r.size() != columns_.size()) fail(ErrorKind::kInvalidArgument, "equation width does not match the ground");
  reduce(rows_, columns_.size());
}

RationalSubspace RationalSubspace::whole(VertexSet ground) { return RationalSubspace(ground, {}); }

RationalSubspace RationalSubspace::hyperplane(VertexSet ground, Vertex i, Vertex j) {
  RationalSubspace h = whole(ground);
  Row row(h.columns_.size(), Rational(0));
  row[h.column(i)] = 1;
  row[h.column(j)] = -1;
  return RationalSubspace(ground, {row});
}

int RationalSubspace::column(Vertex v) const {
  auto it = std::lower_bound(columns_.begin(), columns_.end(), v);
  if (it == columns_.end() || *it != v) fail(ErrorKind::kInvalidArgument, "coordinate outside the ground");
  return static_cast<int>(it - columns_.begin());
}

RationalSubspace RationalSubspace::intersect(const RationalSubspace& other) const {
  if (ground_ != other.ground_) fail(ErrorKind::kInvalidArgument, "intersection of subspaces in different spaces");
  auto rows = rows_;
  rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
  return RationalSubspace(ground_, std::move(rows));
}

bool RationalSubspace::in_row_space(const Row& row) const {
  // Rows are in RREF: eliminate each pivot and check the remainder vanishes.
  Row rest = row;
  for (const auto& r : rows_) {
    const auto pivot = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [](const Rational& x) { return sgn(x) != 0; }) - r.begin());
    if (sgn(rest[pivot]) == 0) continue;
    const Rational factor = rest[pivot];
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= factor * r[c];
  }
  return is_zero(rest);
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
  if (ground_ != other.ground_) return false;
  return std::all_of(rows_.begin(), rows_.end(), [&](const Row& r) { return other.in_row_space(r); });
}

bool RationalSubspace::forces_equal(Vertex i, Vertex j) const {
  Row row(columns_.size(), Rational(0));
  row[column(i)] = 1;
  row[column(j)] = -1;
  return in_row_space(row);
}

RationalSubspace subspace_from_partition(const Partition& p) {
  const std::vector<Vertex> cols = to_vector(p.ground());
  std::vector<Row> rows;
  for (VertexSet b : p.blocks()) {
    const auto members = to_vector(b);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t c = a + 1; c < members.size(); ++c) {
        Row row(cols.size(), Rational(0));
        row[std::lower_bound(cols.begin(), cols.end(), members[a]) - cols.begin()] = 1;
        row[std::lower_bound(cols.begin(), cols.end(), members[c]) - cols.begin()] = -1;
        rows.push_back(std::move(row));
      }
  }
  return RationalSubspace(p.ground(), std::move(rows));
}

Partition partition_from_subspace(const RationalSubspace& h) {
  std::vector<VertexSet> blocks;
  VertexSet left = h.ground();
  while (left != 0) {
    const Vertex v = min_vertex(left);
    VertexSet block = bit(v);
    for_each_vertex(left & ~bit(v), [&](Vertex w) {
      if (h.forces_equal(v, w)) block |= bit(w);
    });
    blocks.push_back(block);
    left &= ~block;
  }
  return Partition(std::move(blocks));
}

std::vector<RationalSubspace> intersection_lattice(const Graph& g) {
  std::vector<RationalSubspace> hyperplanes;
  for (const auto& [u, v] : g.edges()) hyperplanes.push_back(RationalSubspace::hyperplane(g.vertices(), u, v));

  std::vector<RationalSubspace> lattice{RationalSubspace::whole(g.vertices())};
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (const auto& h : hyperplanes) {
      RationalSubspace next = lattice[i].intersect(h);
      if (std::find(lattice.begin(), lattice.end(), next) == lattice.end()) lattice.push_back(std::move(next));
    }
  }
  std::stable_sort(lattice.begin(), lattice.end(),
                   [](const RationalSubspace& a, const RationalSubspace& b) { return a.codim() < b.codim(); });
  return lattice;
}

LatticeIsoReport lattice_iso_report(const Graph& g) {
  LatticeIsoReport report;
  const auto poset = enumerate_connected_partitions(g);
  const auto lattice = intersection_lattice(g);
  report.poset_size = poset.size();
  report.lattice_size = lattice.size();
  if (poset.size() != lattice.size()) {
    report.detail = "poset and lattice sizes differ";
    return report;
  }

  std::vector<RationalSubspace> images;
  images.reserve(poset.size());
  std::vector<bool> hit(lattice.size(), false);
  for (const auto& p : poset) {
    RationalSubspace h = subspace_from_partition(p);
    if (h.codim() != p.codim()) {
      report.detail = "codimension mismatch at " + to_string(p);
      return report;
    }
    auto it = std::find(lattice.begin(), lattice.end(), h);
    if (it == lattice.end()) {
      report.detail = "H_pi not in the lattice for " + to_string(p);
      return report;
    }
    const auto idx = static_cast<std::size_t>(it - lattice.begin());
    if (hit[idx]) {
      report.detail = "two partitions map to the same subspace";
      return report;
    }
    hit[idx] = true;
    if (partition_from_subspace(h) != p) {
      report.detail = "pi_H does not invert H_pi at " + to_string(p);
      return report;
    }
    images.push_back(std::move(h));
  }
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b = 0; b < poset.size(); ++b)
      if (poset[a].refines(poset[b]) != images[a].contains(images[b])) {
        report.detail = "order mismatch between " + to_string(poset[a]) + " and " + to_string(poset[b]);
        return report;
      }
  report.ok = true;
  return report;
}

bool verify_lattice_iso(const Graph& g) { return lattice_iso_report(g).ok; }

}  // namespace wm
