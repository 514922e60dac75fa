#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlie/qfield.hpp"

namespace homlie {

enum class Family : std::uint8_t { L, M, C };

/// Graded basis symbol L_n, M_n or the central C (degree 0).
struct BasisSym {
  Family family = Family::L;
  std::int64_t degree = 0;

  static BasisSym L(std::int64_t n) { return {Family::L, n}; }
  static BasisSym M(std::int64_t n) { return {Family::M, n}; }
  static BasisSym C() { return {Family::C, 0}; }

  friend auto operator<=>(const BasisSym&, const BasisSym&) = default;
};

/// "L[3]", "M[-2]", "C".
std::string to_string(const BasisSym& s);
char family_letter(Family f);

/// Finite QScalar-linear combination of basis symbols; no stored zeros.
class Element {
 public:
  using Terms = std::map<BasisSym, QScalar>;

  Element() = default;
  Element(const BasisSym& s, QScalar c = QScalar(1));  // NOLINT(google-explicit-constructor)

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  QScalar coeff(const BasisSym& s) const;
  void add_term(const BasisSym& s, const QScalar& c);

  /// Degree shared by every symbol, or nullopt (zero counts as homogeneous of any degree).
  std::optional<std::int64_t> homogeneous_degree() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const QScalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const QScalar& c, Element x) { return x *= c; }
  friend Element operator*(Element x, const QScalar& c) { return x *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Render so that the element expression parser reads it back.
std::string to_string(const Element& x);

/// Truncation window: basis degrees in [-N, N].
struct Window {
  std::int64_t N;

  explicit Window(std::int64_t n);
  bool contains(std::int64_t degree) const noexcept { return degree >= -N && degree <= N; }
};

}  // namespace homlie
