#ifndef WM_COHOMOLOGY_HPP
#define WM_COHOMOLOGY_HPP

#include <functional>
#include <span>
#include <vector>

#include "wm/building.hpp"
#include "wm/graph.hpp"
#include "wm/qpoly.hpp"

namespace wm {

/// Exponent assignment on a nested support; exponents[i] belongs to
/// support[i] and is always >= 1.
struct AdmissibleFunction {
  NestedSet support;
  std::vector<int> exponents;
  Ambient ambient;

  int degree() const;
};

/// dim M_f(a) - dim a, where M_f(a) is cut out by the maximal support blocks
/// strictly inside block(a) (the ambient space when there are none).
int allowance(const BuildingElement& a, std::span<const BuildingElement> support, Ambient ambient);

/// Nested support admitting at least one exponent assignment, together with
/// the allowance of each member.
struct AdmissibleSupport {
  NestedSet elements;
  std::vector<int> allowances;
};

/// Visits every support carrying admissible functions (including the empty
/// one). Elements are added largest block first so that an allowance only
/// shrinks as the support grows; branches whose allowance drops below 2
/// are cut.
void for_each_admissible_support(std::span<const BuildingElement> building, Ambient ambient,
                                 const std::function<void(const AdmissibleSupport&)>& visit);

void for_each_admissible(std::span<const BuildingElement> building, Ambient ambient,
                         const std::function<void(const AdmissibleFunction&)>& visit);
std::vector<AdmissibleFunction> enumerate_admissible(std::span<const BuildingElement> building, Ambient ambient);

/// Number of blocks of the join of the support partitions:
/// n - sum over maximal support elements of (|block| - 1).
int k_of_support(std::span<const BuildingElement> support, int n);
int k_of_admissible(const AdmissibleFunction& f, int n);

/// Sum over admissible f of q^deg(f), for the building set of a cone graph.
QPolynomial poincare_hyperplane(const Graph& coned, std::span<const BuildingElement> building);

/// Sum over admissible f of q^deg(f) * A_{k(f)}(q)/q, for a base graph.
QPolynomial poincare_toric(const Graph& g, std::span<const BuildingElement> building);

struct ModelIsoReport {
  QPolynomial toric;
  QPolynomial hyper;
  bool equal = false;
};

/// Compares the toric model of g with the hyperplane model of its cone.
ModelIsoReport verify_model_iso(const Graph& g);

}  // namespace wm

#endif  // WM_COHOMOLOGY_HPP
