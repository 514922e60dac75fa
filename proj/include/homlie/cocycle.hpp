#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "homlie/basis.hpp"

namespace homlie {

/// Skew bilinear scalar form supported on one degree sector.
///
/// Values are defined on canonically ordered pairs x < y; the opposite order
/// is the negation and the diagonal is zero, so skewness holds by
/// construction. Pairs whose degrees do not sum to the sector evaluate to 0.
class Cocycle {
 public:
  using PairFn = std::function<QScalar(const BasisSym&, const BasisSym&)>;
  using Entry = std::tuple<BasisSym, BasisSym, QScalar>;

  /// Zero form in the given sector.
  explicit Cocycle(std::int64_t sector = 0);
  /// Lazily evaluated form; `canonical` is only called with x < y in the sector.
  Cocycle(std::string name, std::int64_t sector, PairFn canonical);

  /// Finite form from (x, y, value) entries with skew closure implied.
  /// Throws DomainError if the entries are not skew (nonzero diagonal or
  /// contradicting swapped entries) or leave the sector.
  static Cocycle from_entries(std::string name, std::int64_t sector, const std::vector<Entry>& entries);
  /// Finite form from canonical-pair values; the same validation applies.
  static Cocycle from_map(std::string name, std::int64_t sector,
                          const std::map<std::pair<BasisSym, BasisSym>, QScalar>& values);

  const std::string& name() const noexcept { return name_; }
  std::int64_t sector() const noexcept { return sector_; }

  QScalar operator()(const BasisSym& x, const BasisSym& y) const;
  QScalar operator()(const Element& x, const Element& y) const;

  /// Nonzero values on canonical pairs with both degrees in the window.
  std::map<std::pair<BasisSym, BasisSym>, QScalar> values(const std::vector<BasisSym>& symbols) const;

 private:
  std::string name_;
  std::int64_t sector_ = 0;
  PairFn canonical_;
};

}  // namespace homlie
