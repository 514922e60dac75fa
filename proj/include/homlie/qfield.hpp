#pragma once

// Exact arithmetic over Q and the rational-function field Q(q).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace homlie {

using Rational = mpq_class;
using Exponent = std::int64_t;

/// Finite Laurent polynomial sum_e c_e q^e with rational coefficients.
///
/// Stored densely from the valuation up; both end coefficients are nonzero
/// and the zero polynomial has no coefficients at all.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// sum_i coeffs[i] q^(low + i); zero ends are trimmed.
  LaurentPoly(Exponent low, std::vector<Rational> coeffs);
  static LaurentPoly monomial(const Rational& c, Exponent e);
  static LaurentPoly q() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  /// Lowest exponent with nonzero coefficient. Undefined for zero.
  Exponent valuation() const noexcept { return low_; }
  /// Highest exponent with nonzero coefficient. Undefined for zero.
  Exponent top() const noexcept { return low_ + static_cast<Exponent>(coeffs_.size()) - 1; }
  std::size_t term_count() const;

  Rational coeff(Exponent e) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& dense() const noexcept { return coeffs_; }

  /// Nonzero terms (exponent, coefficient) in ascending exponent order.
  std::vector<std::pair<Exponent, Rational>> terms() const;

  /// Multiplication by q^k.
  LaurentPoly shifted(Exponent k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

 private:
  friend class QScalar;
  void trim();

  Exponent low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Element of Q(q) in canonical form num/den.
///
/// den is an ordinary polynomial with nonzero constant term and leading
/// coefficient 1, and gcd(num * q^-val(num), den) = 1. Equal values therefore
/// have equal representations.
class QScalar {
 public:
  QScalar() : den_(1) {}
  QScalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QScalar(long c) : QScalar(Rational(c)) {}         // NOLINT(google-explicit-constructor)
  QScalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// num / den; throws ArithmeticError when den is zero.
  QScalar(LaurentPoly num, LaurentPoly den);

  static QScalar q() { return QScalar(LaurentPoly::q()); }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_rational() const noexcept { return num_.is_constant() && den_.is_constant(); }

  QScalar inverse() const;
  QScalar pow(std::int64_t e) const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  QScalar(Canonical, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Balanced q-integer [n]_q = (q^n - q^-n) / (q - q^-1).
LaurentPoly qnumber(std::int64_t n);
/// <m>_q = q^m + q^-m.
LaurentPoly angle(std::int64_t m);

/// Exact value at q = q0. Rejects q0 in {0, 1, -1} and poles.
Rational eval_at(const LaurentPoly& x, const Rational& q0);
Rational eval_at(const QScalar& x, const Rational& q0);

/// Polynomial gcd in Q[q, q^-1], normalized to valuation 0 and monic.
/// gcd(0, 0) is 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b in Q[q, q^-1]; throws ArithmeticError if b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Plain-text rendering, descending exponents, e.g. "q^2 + 1 + q^-2".
std::string to_string(const LaurentPoly& p);
/// "num" or "(num)/(den)"; parenthesization chosen so the text reparses.
std::string to_string(const QScalar& x);
std::string to_string(const Rational& r);

}  // namespace homlie
