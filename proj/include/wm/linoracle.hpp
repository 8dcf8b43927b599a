#ifndef WM_LINORACLE_HPP
#define WM_LINORACLE_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "wm/graph.hpp"
#include "wm/partition.hpp"

namespace wm {

using Rational = mpq_class;

/// Linear subspace of C^V (coordinates indexed by the ground labels) given
/// by the row space of its equations, kept in reduced row echelon form so
/// that equal subspaces have identical representations. Only difference
/// equations x_i - x_j occur, so the diagonal line lies in every subspace
/// and ranks equal codimensions in the quotient by it.
class RationalSubspace {
 public:
  RationalSubspace(VertexSet ground, std::vector<std::vector<Rational>> equations);

  static RationalSubspace whole(VertexSet ground);
  static RationalSubspace hyperplane(VertexSet ground, Vertex i, Vertex j);

  VertexSet ground() const { return ground_; }
  int ambient_dimension() const { return static_cast<int>(columns_.size()); }
  int codim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rational>>& rref() const { return rows_; }

  RationalSubspace intersect(const RationalSubspace& other) const;

  /// Subspace inclusion: *this ⊇ other.
  bool contains(const RationalSubspace& other) const;

  /// Whether x_i = x_j holds on the subspace.
  bool forces_equal(Vertex i, Vertex j) const;

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ground_ == b.ground_ && a.rows_ == b.rows_;
  }

 private:
  int column(Vertex v) const;
  bool in_row_space(const std::vector<Rational>& row) const;

  VertexSet ground_;
  std::vector<Vertex> columns_;
  std::vector<std::vector<Rational>> rows_;
};

/// H_π: x_i = x_j whenever i and j share a block.
RationalSubspace subspace_from_partition(const Partition& p);

/// π_H: the partition of the ground into classes of coordinates forced equal.
Partition partition_from_subspace(const RationalSubspace& h);

/// All distinct intersections of the edge hyperplanes of g, including the
/// whole space, by exact row reduction; sorted by codimension.
std::vector<RationalSubspace> intersection_lattice(const Graph& g);

struct LatticeIsoReport {
  bool ok = false;
  std::size_t poset_size = 0;
  std::size_t lattice_size = 0;
  std::string detail;
};

/// Checks that π ↦ H_π is a bijection from the connected-partition poset onto
/// the intersection lattice, reversing order, matching codimensions and
/// inverted by H ↦ π_H.
LatticeIsoReport lattice_iso_report(const Graph& g);
bool verify_lattice_iso(const Graph& g);

}  // namespace wm

#endif  // WM_LINORACLE_HPP
