#ifndef WM_SERIES_HPP
#define WM_SERIES_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "wm/qpoly.hpp"

namespace wm {

/// q-polynomial with exact rational coefficients.
using RationalQPoly = BasicQPoly<mpq_class>;

RationalQPoly to_rational(const QPolynomial& p);

/// Converts back to integers; throws kInternal if a coefficient is not an
/// integer (the exactness assertion for counts).
QPolynomial to_integer(const RationalQPoly& p);

/// Truncated one-variable exponential series sum_{k<=order} c_k t^k / k!.
/// Coefficients are stored EGF-normalized (c_k, not c_k / k!).
class Egf1 {
 public:
  explicit Egf1(int order);

  /// The series t.
  static Egf1 identity(int order);

  int order() const { return order_; }
  const RationalQPoly& coeff(int k) const;
  void set_coeff(int k, RationalQPoly c);

  friend bool operator==(const Egf1&, const Egf1&) = default;

 private:
  int order_;
  std::vector<RationalQPoly> c_;
};

/// Truncated two-variable exponential series
/// sum c_{n,m} x^n y^m / (n! m!) over n <= nx, m <= ny and n + m <= max_total.
/// Cells past max_total are not tracked; every operation keeps the bound.
class Egf2 {
 public:
  Egf2(int nx, int ny, int max_total = -1);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int max_total() const { return max_total_; }
  bool tracked(int n, int m) const { return n >= 0 && m >= 0 && n <= nx_ && m <= ny_ && n + m <= max_total_; }

  const RationalQPoly& coeff(int n, int m) const;
  void set_coeff(int n, int m, RationalQPoly c);

  /// c_{n,m} as an integer polynomial; throws if it is not integral.
  QPolynomial count(int n, int m) const { return to_integer(coeff(n, m)); }

  friend bool operator==(const Egf2&, const Egf2&) = default;

 private:
  int nx_;
  int ny_;
  int max_total_;
  std::vector<RationalQPoly> c_;
};

/// c_k = sum over admissible trees on k leaves of q^degree.
Egf1 lambda_series(int order);

/// outer(inner(t)); orders must agree and inner must have c_0 = 0.
Egf1 compose(const Egf1& outer, const Egf1& inner);

/// outer(inner_x(x), inner_y(y)); inner orders must equal (nx, ny).
Egf2 compose(const Egf2& outer, const Egf1& inner_x, const Egf1& inner_y);

/// Compositional inverse by Newton iteration with precision doubling.
/// Requires c_0 = 0 and c_1 = 1.
Egf1 revert(const Egf1& s);

/// c_{k1,k2} = sum over S_{k1+k2} of q^lec, for k1, k2 >= 1.
Egf2 lec_egf(int nx, int ny, int max_total = -1);

/// c_{k1,k2} = A_{k1+k2}(q) / q, for k1, k2 >= 1.
Egf2 eulerian_egf(int nx, int ny, int max_total = -1);

/// Eulerian series composed with lambda in both variables.
Egf2 phi_toric(int nx, int ny, int max_total = -1);

/// lec series composed with lambda in both variables.
Egf2 phi_hyper(int nx, int ny, int max_total = -1);

struct LecIdentityCell {
  int l1 = 0;
  int l2 = 0;
  QPolynomial from_toric;  // extracted A_{l1+l2}/q
  QPolynomial from_hyper;  // extracted sum of q^lec
};

/// Undoes lambda in both phi series and reads off every cell with
/// l1, l2 >= 1 and l1 + l2 <= max_l (orders max_l - 1 in each variable).
std::vector<LecIdentityCell> extract_lec_identity(int max_l);

}  // namespace wm

#endif  // WM_SERIES_HPP
