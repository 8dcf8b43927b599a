#include "wm/series.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wm/forests.hpp"
#include "wm/permstats.hpp"

namespace wm {

namespace {

// Ordinary (non-normalized) truncated power series: a[k] is the coefficient of t^k.
using Ordinary = std::vector<RationalQPoly>;

mpz_class factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

Ordinary to_ordinary(const Egf1& s) {
  Ordinary a(static_cast<std::size_t>(s.order()) + 1);
  for (int k = 0; k <= s.order(); ++k) a[k] = s.coeff(k) * mpq_class(1, factorial(k));
  return a;
}

Egf1 from_ordinary(const Ordinary& a, int order) {
  Egf1 s(order);
  for (int k = 0; k <= order && k < static_cast<int>(a.size()); ++k) s.set_coeff(k, a[k] * mpq_class(factorial(k)));
  return s;
}

Ordinary multiply(const Ordinary& a, const Ordinary& b, int order) {
  Ordinary c(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  return c;
}

// sum_k a_k b^k modulo t^{order+1}, by Horner's rule; b must have b_0 = 0.
Ordinary substitute(const Ordinary& a, const Ordinary& b, int order) {
  Ordinary r(static_cast<std::size_t>(order) + 1);
  const int top = std::min(order, static_cast<int>(a.size()) - 1);
  for (int k = top; k >= 0; --k) {
    r = multiply(r, b, order);
    r[0] += a[k];
  }
  return r;
}

// Powers b^0..b^order modulo t^{order+1}.
std::vector<Ordinary> powers(const Ordinary& b, int order) {
  std::vector<Ordinary> p;
  Ordinary one(static_cast<std::size_t>(order) + 1);
  one[0] = RationalQPoly{1};
  p.push_back(one);
  for (int k = 1; k <= order; ++k) p.push_back(multiply(p.back(), b, order));
  return p;
}

// 1/d modulo t^{order+1} for d_0 = 1.
Ordinary reciprocal(const Ordinary& d, int order) {
  if (d.empty() || !(d[0] == RationalQPoly{1})) fail(ErrorKind::kInternal, "reciprocal needs constant term 1");
  Ordinary h(static_cast<std::size_t>(order) + 1);
  h[0] = RationalQPoly{1};
  for (int k = 1; k <= order; ++k) {
    RationalQPoly acc;
    for (int j = 1; j <= k && j < static_cast<int>(d.size()); ++j) acc += d[j] * h[k - j];
    h[k] = RationalQPoly{} - acc;
  }
  return h;
}

Ordinary derivative(const Ordinary& a) {
  Ordinary d(a.size() > 1 ? a.size() - 1 : 1);
  for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = a[k] * mpq_class(static_cast<long>(k));
  return d;
}

void require_order(int order) {
  if (order < 1) fail(ErrorKind::kInvalidArgument, "series order must be >= 1");
}

Egf2 bivariate_from_totals(int nx, int ny, int max_total, const std::function<QPolynomial(int)>& by_total) {
  Egf2 s(nx, ny, max_total);
  std::map<int, RationalQPoly> cache;
  for (int n = 1; n <= nx; ++n)
    for (int m = 1; m <= ny; ++m) {
      if (!s.tracked(n, m)) continue;
      auto it = cache.find(n + m);
      if (it == cache.end()) it = cache.emplace(n + m, to_rational(by_total(n + m))).first;
      s.set_coeff(n, m, it->second);
    }
  return s;
}

Egf1 truncated(const Egf1& s, int order) {
  Egf1 out(order);
  for (int k = 0; k <= order; ++k) out.set_coeff(k, s.coeff(k));
  return out;
}

}  // namespace

RationalQPoly to_rational(const QPolynomial& p) {
  std::vector<mpq_class> c;
  for (auto v : p.coeffs()) c.emplace_back(static_cast<long>(v));
  return RationalQPoly(std::move(c));
}

QPolynomial to_integer(const RationalQPoly& p) {
  std::vector<std::int64_t> c;
  for (const auto& v : p.coeffs()) {
    if (v.get_den() != 1) fail(ErrorKind::kInternal, "series coefficient " + v.get_str() + " is not an integer");
    if (!v.get_num().fits_slong_p()) fail(ErrorKind::kLimit, "series coefficient overflows 64 bits");
    c.push_back(v.get_num().get_si());
  }
  return QPolynomial(std::move(c));
}

Egf1::Egf1(int order) : order_(order) {
  if (order < 0) fail(ErrorKind::kInvalidArgument, "series order must be non-negative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

Egf1 Egf1::identity(int order) {
  require_order(order);
  Egf1 s(order);
  s.set_coeff(1, RationalQPoly{1});
  return s;
}

const RationalQPoly& Egf1::coeff(int k) const {
  if (k < 0 || k > order_) fail(ErrorKind::kInvalidArgument, "coefficient index beyond the series order");
  return c_[k];
}

void Egf1::set_coeff(int k, RationalQPoly c) {
  if (k < 0 || k > order_) fail(ErrorKind::kInvalidArgument, "coefficient index beyond the series order");
  c_[k] = std::move(c);
}

Egf2::Egf2(int nx, int ny, int max_total) : nx_(nx), ny_(ny), max_total_(max_total < 0 ? nx + ny : max_total) {
  if (nx < 0 || ny < 0) fail(ErrorKind::kInvalidArgument, "series orders must be non-negative");
  c_.resize(static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(ny + 1));
}

const RationalQPoly& Egf2::coeff(int n, int m) const {
  if (!tracked(n, m)) fail(ErrorKind::kInvalidArgument, "cell outside the truncation region");
  return c_[static_cast<std::size_t>(n) * (ny_ + 1) + m];
}

void Egf2::set_coeff(int n, int m, RationalQPoly c) {
  if (!tracked(n, m)) fail(ErrorKind::kInvalidArgument, "cell outside the truncation region");
  c_[static_cast<std::size_t>(n) * (ny_ + 1) + m] = std::move(c);
}

Egf1 lambda_series(int order) {
  require_order(order);
  Egf1 s(order);
  std::vector<int> labels;
  for (int k = 1; k <= order; ++k) {
    labels.push_back(k);
    std::vector<std::int64_t> counts;
    for (const auto& tree : enumerate_admissible_trees(labels)) {
      const auto d = static_cast<std::size_t>(tree.degree());
      if (counts.size() <= d) counts.resize(d + 1, 0);
      ++counts[d];
    }
    s.set_coeff(k, to_rational(QPolynomial(std::move(counts))));
  }
  return s;
}

Egf1 compose(const Egf1& outer, const Egf1& inner) {
  if (outer.order() != inner.order()) fail(ErrorKind::kInvalidArgument, "compose: series orders differ");
  if (!inner.coeff(0).is_zero()) fail(ErrorKind::kInvalidArgument, "compose: inner series has a constant term");
  const int n = outer.order();
  return from_ordinary(substitute(to_ordinary(outer), to_ordinary(inner), n), n);
}

Egf2 compose(const Egf2& outer, const Egf1& inner_x, const Egf1& inner_y) {
  if (inner_x.order() != outer.nx() || inner_y.order() != outer.ny())
    fail(ErrorKind::kInvalidArgument, "compose: inner orders must match the outer orders");
  if (!inner_x.coeff(0).is_zero() || !inner_y.coeff(0).is_zero())
    fail(ErrorKind::kInvalidArgument, "compose: inner series has a constant term");
  const auto px = powers(to_ordinary(inner_x), outer.nx());
  const auto py = powers(to_ordinary(inner_y), outer.ny());

  Egf2 out(outer.nx(), outer.ny(), outer.max_total());
  for (int i = 0; i <= outer.nx(); ++i)
    for (int j = 0; j <= outer.ny(); ++j) {
      if (!out.tracked(i, j)) continue;
      RationalQPoly acc;
      // X^n starts at x^n, so only n <= i and m <= j contribute.
      for (int n = 0; n <= i; ++n)
        for (int m = 0; m <= j; ++m) {
          const auto& c = outer.coeff(n, m);
          if (c.is_zero() || px[n][i].is_zero() || py[m][j].is_zero()) continue;
          acc += c * (px[n][i] * py[m][j]) * mpq_class(1, factorial(n) * factorial(m));
        }
      out.set_coeff(i, j, acc * mpq_class(factorial(i) * factorial(j)));
    }
  return out;
}

Egf1 revert(const Egf1& s) {
  require_order(s.order());
  if (!s.coeff(0).is_zero()) fail(ErrorKind::kInvalidArgument, "revert: series has a constant term");
  if (!(s.coeff(1) == RationalQPoly{1})) fail(ErrorKind::kInvalidArgument, "revert: linear coefficient must be 1");
  const int n = s.order();
  const Ordinary a = to_ordinary(s);
  const Ordinary da = derivative(a);

  // g = t is exact modulo t^2; each Newton step g -= (s(g) - t) / s'(g)
  // doubles the number of correct coefficients.
  Ordinary g(static_cast<std::size_t>(n) + 1);
  g[1] = RationalQPoly{1};
  for (int precision = 2; precision <= n;) {
    const int next = std::min(2 * precision, n + 1);
    const int top = next - 1;
    Ordinary residual = substitute(a, g, top);
    residual[1] -= RationalQPoly{1};
    const Ordinary step = multiply(residual, reciprocal(substitute(da, g, top), top), top);
    for (int k = 0; k <= top; ++k) g[k] -= step[k];
    precision = next;
  }
  return from_ordinary(g, n);
}

Egf2 lec_egf(int nx, int ny, int max_total) {
  require_order(nx);
  require_order(ny);
  return bivariate_from_totals(nx, ny, max_total, lec_distribution);
}

Egf2 eulerian_egf(int nx, int ny, int max_total) {
  require_order(nx);
  require_order(ny);
  return bivariate_from_totals(nx, ny, max_total, [](int l) { return eulerian_poly(l).divided_by_q(); });
}

Egf2 phi_toric(int nx, int ny, int max_total) {
  const Egf1 lambda = lambda_series(std::max(nx, ny));
  return compose(eulerian_egf(nx, ny, max_total), truncated(lambda, nx), truncated(lambda, ny));
}

Egf2 phi_hyper(int nx, int ny, int max_total) {
  const Egf1 lambda = lambda_series(std::max(nx, ny));
  return compose(lec_egf(nx, ny, max_total), truncated(lambda, nx), truncated(lambda, ny));
}

std::vector<LecIdentityCell> extract_lec_identity(int max_l) {
  if (max_l < 2) fail(ErrorKind::kInvalidArgument, "extract_lec_identity needs max_l >= 2");
  const int order = max_l - 1;
  const Egf1 inverse = revert(lambda_series(order));
  const Egf2 toric = compose(phi_toric(order, order, max_l), inverse, inverse);
  const Egf2 hyper = compose(phi_hyper(order, order, max_l), inverse, inverse);
  std::vector<LecIdentityCell> out;
  for (int total = 2; total <= max_l; ++total)
    for (int l1 = 1; l1 < total; ++l1) {
      const int l2 = total - l1;
      out.push_back({l1, l2, toric.count(l1, l2), hyper.count(l1, l2)});
    }
  return out;
}

}  // namespace wm
