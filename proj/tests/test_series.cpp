#include <doctest.h>

#include "oracles.hpp"
#include "wm/cohomology.hpp"
#include "wm/forests.hpp"
#include "wm/permstats.hpp"
#include "wm/series.hpp"

using namespace wm;

namespace {

RationalQPoly rq(std::vector<long> coeffs) {
  std::vector<mpq_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return RationalQPoly(std::move(c));
}

Graph disjoint_complete(int n, int m) {
  return make_family("disjoint-complete:" + std::to_string(n) + "," + std::to_string(m));
}

Egf1 truncate(const Egf1& s, int order) {
  Egf1 out(order);
  for (int k = 0; k <= order; ++k) out.set_coeff(k, s.coeff(k));
  return out;
}

}  // namespace

TEST_CASE("lambda_series: the paper's coefficients through t^4") {
  // §5.2: lambda(q,t) = t + q t^3/3! + (q+q^2) t^4/4! + ...
  const Egf1 lambda = lambda_series(4);
  CHECK(lambda.coeff(0).is_zero());
  CHECK(lambda.coeff(1) == rq({1}));
  CHECK(lambda.coeff(2).is_zero());
  CHECK(lambda.coeff(3) == rq({0, 1}));
  CHECK(lambda.coeff(4) == rq({0, 1, 1}));
  CHECK(lambda_series(5).coeff(5) == rq({0, 1, 11, 1}));
  CHECK_THROWS_AS(lambda_series(0), Error);
}

TEST_CASE("lambda_series matches the tree-counting oracle through t^7") {
  const auto counts = oracle::tree_counts(7);
  const Egf1 lambda = lambda_series(7);
  for (int k = 1; k <= 7; ++k) REQUIRE(lambda.coeff(k) == to_rational(oracle::poly(counts[static_cast<std::size_t>(k)])));
}

TEST_CASE("compose: identities and errors") {
  const Egf1 lambda = lambda_series(6);
  const Egf1 t = Egf1::identity(6);
  CHECK(compose(lambda, t) == lambda);
  CHECK(compose(t, lambda) == lambda);
  Egf1 shifted = lambda;
  shifted.set_coeff(0, rq({1}));
  CHECK_THROWS_AS(compose(lambda, shifted), Error);
  CHECK_THROWS_AS(compose(lambda, Egf1::identity(5)), Error);

  const Egf2 l = lec_egf(3, 3);
  CHECK(compose(l, Egf1::identity(3), Egf1::identity(3)) == l);
  CHECK_THROWS_AS(compose(l, Egf1::identity(2), Egf1::identity(3)), Error);
}

TEST_CASE("compose: exp-type check against a hand computation") {
  // e^t - 1 composed with 2t has coefficients 2^k.
  Egf1 outer(5);
  Egf1 inner(5);
  for (int k = 1; k <= 5; ++k) outer.set_coeff(k, rq({1}));
  inner.set_coeff(1, rq({2}));
  const Egf1 c = compose(outer, inner);
  for (int k = 1; k <= 5; ++k) CHECK(c.coeff(k) == rq({1L << k}));
}

TEST_CASE("revert: spec examples and the defining property to order 7") {
  CHECK(revert(Egf1::identity(5)) == Egf1::identity(5));
  const Egf1 lambda = lambda_series(7);
  const Egf1 inverse = revert(lambda);
  CHECK(inverse.coeff(1) == rq({1}));
  CHECK(inverse.coeff(2).is_zero());
  CHECK(inverse.coeff(3) == rq({0, -1}));
  CHECK(inverse.coeff(5) == rq({0, -1, -1, -1}));
  CHECK(compose(inverse, lambda) == Egf1::identity(7));
  CHECK(compose(lambda, inverse) == Egf1::identity(7));
  for (int order = 1; order <= 7; ++order) {  // every precision-doubling boundary
    const Egf1 l = truncate(lambda, order);
    REQUIRE(compose(revert(l), l) == Egf1::identity(order));
  }
  Egf1 bad = lambda;
  bad.set_coeff(1, rq({2}));
  CHECK_THROWS_AS(revert(bad), Error);
  bad = lambda;
  bad.set_coeff(0, rq({1}));
  CHECK_THROWS_AS(revert(bad), Error);
}

TEST_CASE("lec_egf and eulerian_egf: spec examples") {
  const Egf2 l = lec_egf(4, 4);
  CHECK(l.count(1, 1) == QPolynomial{1, 1});
  CHECK(l.count(1, 2) == l.count(2, 1));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) REQUIRE(l.coeff(a, b) == eulerian_egf(4, 4).coeff(a, b));
  CHECK(l.coeff(0, 3).is_zero());
}

TEST_CASE("phi series: spec examples") {
  const Egf2 toric = phi_toric(3, 3);
  const Egf2 hyper = phi_hyper(3, 3);
  CHECK(toric.count(1, 1) == QPolynomial{1, 1});
  CHECK(toric.count(2, 1) == QPolynomial{1, 4, 1});
  CHECK(hyper.count(1, 1) == QPolynomial{1, 1});
  CHECK(phi_toric(4, 4) == phi_hyper(4, 4));
}

TEST_CASE("phi_hyper (2,2) counts special forests of type (2,2) and triples (F1,F2,sigma)") {
  const QPolynomial cell = phi_hyper(2, 2).count(2, 2);
  std::vector<AdmissibleForest> specials;
  for (const auto& s : enumerate_special_forests(2, 2)) specials.push_back(s.forest);
  CHECK(cell == degree_series(specials));
  QPolynomial triples;
  for (const auto& f1 : enumerate_admissible_forests(2))
    for (const auto& f2 : enumerate_admissible_forests(2))
      for_each_permutation(static_cast<int>(f1.size() + f2.size()), [&](const NumberList& sigma) {
        triples += QPolynomial::monomial(forest_degree(f1) + forest_degree(f2) + lec(sigma));
      });
  CHECK(cell == triples);
}

TEST_CASE("Phi^T = Phi^H = model Poincaré polynomials of K_{n,m} for n + m <= 7") {
  const Egf2 toric = phi_toric(6, 6, 7);
  const Egf2 hyper = phi_hyper(6, 6, 7);
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; n + m <= 7; ++m) {
      INFO("cell " << n << "," << m);
      const QPolynomial t = toric.count(n, m);
      REQUIRE(t == hyper.count(n, m));
      const auto report = verify_model_iso(disjoint_complete(n, m));
      REQUIRE(t == report.toric);
      REQUIRE(t == report.hyper);
    }
}

TEST_CASE("extract_lec_identity: spec examples and every pair up to l = 7") {
  const auto cells = extract_lec_identity(7);
  CHECK(cells.size() == 21);  // pairs (l1, l2) with l1, l2 >= 1 and l1 + l2 <= 7
  for (const auto& c : cells) {
    INFO(c.l1 << "," << c.l2);
    REQUIRE(c.from_toric == c.from_hyper);
    REQUIRE(c.from_toric == eulerian_poly(c.l1 + c.l2).divided_by_q());
    REQUIRE(c.from_hyper == lec_distribution(c.l1 + c.l2));
  }
  CHECK(cells.front().from_hyper == QPolynomial{1, 1});
  CHECK(cells[1].from_hyper == QPolynomial{1, 4, 1});
  CHECK_THROWS_AS(extract_lec_identity(1), Error);
}

TEST_CASE("truncation bookkeeping") {
  Egf2 s(3, 3, 4);
  CHECK(s.tracked(1, 3));
  CHECK_FALSE(s.tracked(2, 3));
  CHECK_THROWS_AS(s.coeff(2, 3), Error);
  CHECK_THROWS_AS(s.set_coeff(4, 0, rq({1})), Error);
  s.set_coeff(1, 1, RationalQPoly{mpq_class(1, 2)});
  CHECK_THROWS_AS(s.count(1, 1), Error);  // non-integral count
  CHECK_THROWS_AS(Egf1(3).coeff(4), Error);
}
