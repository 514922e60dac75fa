#pragma once

// One boson (localized at a+) tensor one fermion, normal ordered as
// (a+)^ap a^an (b+)^bp b^bn.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "homlie/basis.hpp"
#include "homlie/report.hpp"

namespace homlie {

struct OscMonomial {
  std::int64_t ap = 0;  // may be negative
  std::int64_t an = 0;  // >= 0
  int bp = 0;           // 0 or 1
  int bn = 0;           // 0 or 1

  friend auto operator<=>(const OscMonomial&, const OscMonomial&) = default;
};

/// "1", "a+", "(a+)^-1 a b+", "(a+)^3 a^2 b+ b".
std::string to_string(const OscMonomial& m);

class OscElement {
 public:
  using Terms = std::map<OscMonomial, QScalar>;

  OscElement() = default;
  OscElement(const OscMonomial& m, QScalar c = QScalar(1));  // NOLINT(google-explicit-constructor)
  /// Throws DomainError unless an >= 0 and bp, bn in {0, 1}.
  static OscElement monomial(std::int64_t ap, std::int64_t an, int bp, int bn, QScalar c = QScalar(1));
  static OscElement one() { return OscElement(OscMonomial{}); }
  static OscElement a() { return monomial(0, 1, 0, 0); }
  static OscElement a_plus() { return monomial(1, 0, 0, 0); }
  static OscElement b() { return monomial(0, 0, 0, 1); }
  static OscElement b_plus() { return monomial(0, 0, 1, 0); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  QScalar coeff(const OscMonomial& m) const;
  void add_term(const OscMonomial& m, const QScalar& c);

  OscElement operator-() const;
  OscElement& operator+=(const OscElement& o);
  OscElement& operator-=(const OscElement& o);
  OscElement& operator*=(const QScalar& c);
  friend OscElement operator+(OscElement x, const OscElement& y) { return x += y; }
  friend OscElement operator-(OscElement x, const OscElement& y) { return x -= y; }
  friend OscElement operator*(const QScalar& c, OscElement x) { return x *= c; }
  friend OscElement operator*(OscElement x, const QScalar& c) { return x *= c; }
  friend OscElement operator*(const OscElement& x, const OscElement& y);
  friend bool operator==(const OscElement& x, const OscElement& y) { return x.terms_ == y.terms_; }

 private:
  Terms terms_;
};

std::string to_string(const OscElement& x);

OscElement normal_order_product(const OscElement& x, const OscElement& y);

/// L_n -> (a+)^(n+1) a, M_n -> (a+)^(n+1) b+ a. C has no realization.
OscElement realize(const BasisSym& sym);
OscElement realize(const Element& x);

OscElement commutator(const OscElement& x, const OscElement& y);
/// q^i x y - q^j y x.
OscElement q_bracket(const OscElement& x, const OscElement& y, std::int64_t i, std::int64_t j);

using Realization = std::function<OscElement(const BasisSym&)>;

/// Commutators of realized generators against the classical W(2,2) brackets.
Report verify_realization(const Window& w);
Report verify_realization(const Window& w, const Realization& rho);

/// q-bracket residuals of the realized generators; INFO only.
Report q_realization_report(const Window& w);

}  // namespace homlie
