#ifndef WM_QPOLY_HPP
#define WM_QPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "wm/common.hpp"

namespace wm {

/// Polynomial in q (cohomological degree 2) with exact coefficients.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients at all.
template <class T>
class BasicQPoly {
 public:
  BasicQPoly() = default;
  BasicQPoly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit BasicQPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static BasicQPoly monomial(int power, T coeff = T(1)) {
    std::vector<T> c(static_cast<std::size_t>(power) + 1, T(0));
    c.back() = coeff;
    return BasicQPoly(std::move(c));
  }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  T coeff(int power) const {
    return power >= 0 && power < static_cast<int>(coeffs_.size()) ? coeffs_[power] : T(0);
  }

  T sum_of_coeffs() const {
    T total(0);
    for (const T& c : coeffs_) total += c;
    return total;
  }

  BasicQPoly& operator+=(const BasicQPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  BasicQPoly& operator-=(const BasicQPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  BasicQPoly& operator*=(const T& s) {
    for (T& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend BasicQPoly operator+(BasicQPoly a, const BasicQPoly& b) { return a += b; }
  friend BasicQPoly operator-(BasicQPoly a, const BasicQPoly& b) { return a -= b; }
  friend BasicQPoly operator*(BasicQPoly a, const T& s) { return a *= s; }
  friend BasicQPoly operator*(const BasicQPoly& a, const BasicQPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return BasicQPoly(std::move(c));
  }
  BasicQPoly& operator*=(const BasicQPoly& o) { return *this = *this * o; }

  /// Multiplies by q^k.
  BasicQPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<T> c(static_cast<std::size_t>(k), T(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return BasicQPoly(std::move(c));
  }

  /// Exact division by q; the constant term must vanish.
  BasicQPoly divided_by_q() const {
    if (is_zero()) return {};
    if (coeffs_.front() != T(0)) fail(ErrorKind::kInvalidArgument, "polynomial is not divisible by q");
    return BasicQPoly(std::vector<T>(coeffs_.begin() + 1, coeffs_.end()));
  }

  /// Coefficient symmetry c_i = c_{d-i}.
  bool is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

  friend bool operator==(const BasicQPoly& a, const BasicQPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// "1 + 5q + q^2" style; `var` names the variable and `step` scales the
  /// exponents (step 2 with var "t" gives cohomological degrees).
  std::string to_string(const std::string& var = "q", int step = 1) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == T(0)) continue;
      const bool negative = coeffs_[i] < T(0);
      const T magnitude = negative ? T(-coeffs_[i]) : coeffs_[i];
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      const int power = static_cast<int>(i) * step;
      if (power == 0) {
        out << magnitude;
        continue;
      }
      if (magnitude != T(1)) out << magnitude;
      out << var;
      if (power > 1) out << '^' << power;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Integer-coefficient polynomial: Poincaré and Eulerian polynomials.
using QPolynomial = BasicQPoly<std::int64_t>;

}  // namespace wm

#endif  // WM_QPOLY_HPP
