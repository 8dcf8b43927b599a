#include "wm/cohomology.hpp"

#include <algorithm>

#include "wm/permstats.hpp"

namespace wm {

int AdmissibleFunction::degree() const {
  int total = 0;
  for (int e : exponents) total += e;
  return total;
}

int allowance(const BuildingElement& a, std::span<const BuildingElement> support, Ambient ambient) {
  if (a.codim() > ambient.dim()) fail(ErrorKind::kInvalidArgument, "element does not fit in the ambient");
  Partition below = Partition::singletons(a.block);
  for (const auto& s : support)
    if (is_proper_subset(s.block, a.block)) below = join(below, Partition::one_block(a.block, s.block));
  const int dim_a = ambient.dim() - a.codim();
  const int dim_m = ambient.dim() - below.codim();
  return dim_m - dim_a;
}

namespace {

struct SupportSearch {
  std::vector<BuildingElement> candidates;
  AdmissibleSupport state;
  const std::function<void(const AdmissibleSupport&)>* visit = nullptr;

  void run(std::size_t start) {
    (*visit)(state);
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const VertexSet b = candidates[i].block;
      const int codim_b = cardinality(b) - 1;
      int par = -1;
      bool ok = true;
      for (std::size_t j = 0; j < state.elements.size() && ok; ++j) {
        const VertexSet c = state.elements[j].block;
        if ((b & c) == 0) continue;
        if (!is_subset(b, c)) {
          ok = false;
        } else if (par < 0 || cardinality(c) < cardinality(state.elements[par].block)) {
          par = static_cast<int>(j);
        }
      }
      if (!ok) continue;
      if (par >= 0 && state.allowances[par] - codim_b < 2) continue;

      if (par >= 0) state.allowances[par] -= codim_b;
      state.elements.push_back(candidates[i]);
      state.allowances.push_back(codim_b);
      run(i + 1);
      state.allowances.pop_back();
      state.elements.pop_back();
      if (par >= 0) state.allowances[par] += codim_b;
    }
  }
};

// q + q^2 + ... + q^(a-1)
QPolynomial exponent_range(int a) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(a), 1);
  c[0] = 0;
  return QPolynomial(std::move(c));
}

Ambient hyperplane_ambient(const Graph& coned) {
  if (!coned.has_apex()) fail(ErrorKind::kInvalidArgument, "hyperplane model expects a cone graph (apex 0)");
  return Ambient::coned_linear(coned.order() - 1);
}

}  // namespace

void for_each_admissible_support(std::span<const BuildingElement> building, Ambient ambient,
                                 const std::function<void(const AdmissibleSupport&)>& visit) {
  SupportSearch search;
  for (const auto& e : building) {
    if (e.codim() > ambient.dim()) fail(ErrorKind::kInvalidArgument, "building element does not fit in the ambient");
    // Two-element blocks have allowance 1 and never carry an exponent.
    if (cardinality(e.block) >= 3) search.candidates.push_back(e);
  }
  search.candidates = inclusion_refining_order(search.candidates);
  search.visit = &visit;
  search.run(0);
}

void for_each_admissible(std::span<const BuildingElement> building, Ambient ambient,
                         const std::function<void(const AdmissibleFunction&)>& visit) {
  for_each_admissible_support(building, ambient, [&](const AdmissibleSupport& s) {
    AdmissibleFunction f{s.elements, std::vector<int>(s.elements.size(), 1), ambient};
    while (true) {
      visit(f);
      std::size_t i = 0;
      while (i < f.exponents.size() && f.exponents[i] + 1 >= s.allowances[i]) f.exponents[i++] = 1;
      if (i == f.exponents.size()) break;
      ++f.exponents[i];
    }
  });
}

std::vector<AdmissibleFunction> enumerate_admissible(std::span<const BuildingElement> building, Ambient ambient) {
  std::vector<AdmissibleFunction> out;
  for_each_admissible(building, ambient, [&](const AdmissibleFunction& f) { out.push_back(f); });
  return out;
}

int k_of_support(std::span<const BuildingElement> support, int n) {
  int k = n;
  for (const auto& e : support) {
    const bool maximal = std::none_of(support.begin(), support.end(), [&](const BuildingElement& o) {
      return is_proper_subset(e.block, o.block);
    });
    if (maximal) k -= e.codim();
  }
  return k;
}

int k_of_admissible(const AdmissibleFunction& f, int n) { return k_of_support(f.support, n); }

QPolynomial poincare_hyperplane(const Graph& coned, std::span<const BuildingElement> building) {
  const Ambient ambient = hyperplane_ambient(coned);
  QPolynomial total;
  for_each_admissible_support(building, ambient, [&](const AdmissibleSupport& s) {
    QPolynomial term{1};
    for (int a : s.allowances) term *= exponent_range(a);
    total += term;
  });
  return total;
}

QPolynomial poincare_toric(const Graph& g, std::span<const BuildingElement> building) {
  if (g.has_apex()) fail(ErrorKind::kInvalidArgument, "toric model expects a base graph without apex");
  const int n = g.order();
  const Ambient ambient = Ambient::torus(n);
  std::vector<QPolynomial> toric_factor;
  for (int k = 0; k <= n; ++k) toric_factor.push_back(k == 0 ? QPolynomial{} : eulerian_poly(k).divided_by_q());
  QPolynomial total;
  for_each_admissible_support(building, ambient, [&](const AdmissibleSupport& s) {
    QPolynomial term = toric_factor[k_of_support(s.elements, n)];
    for (int a : s.allowances) term *= exponent_range(a);
    total += term;
  });
  return total;
}

ModelIsoReport verify_model_iso(const Graph& g) {
  ModelIsoReport report;
  report.toric = poincare_toric(g, building_set(g, Ambient::torus(g.order())));
  const Graph coned = cone(g);
  report.hyper = poincare_hyperplane(coned, building_set(coned, Ambient::coned_linear(g.order())));
  report.equal = report.toric == report.hyper;
  return report;
}

}  // namespace wm
