#include "homlie/cocycle.hpp"

#include "homlie/errors.hpp"

namespace homlie {

Cocycle::Cocycle(std::int64_t sector)
    : name_("zero"), sector_(sector), canonical_([](const BasisSym&, const BasisSym&) { return QScalar(); }) {}

Cocycle::Cocycle(std::string name, std::int64_t sector, PairFn canonical)
    : name_(std::move(name)), sector_(sector), canonical_(std::move(canonical)) {}

Cocycle Cocycle::from_map(std::string name, std::int64_t sector,
                          const std::map<std::pair<BasisSym, BasisSym>, QScalar>& values) {
  std::vector<Entry> entries;
  entries.reserve(values.size());
  for (const auto& [p, v] : values) entries.emplace_back(p.first, p.second, v);
  return from_entries(std::move(name), sector, entries);
}

Cocycle Cocycle::from_entries(std::string name, std::int64_t sector, const std::vector<Entry>& entries) {
  std::map<std::pair<BasisSym, BasisSym>, QScalar> table;
  for (const auto& [x, y, v] : entries) {
    if (v.is_zero()) continue;
    if (x == y) throw DomainError("cocycle is not skew: nonzero value on (" + to_string(x) + ", " + to_string(x) + ")");
    if (x.degree + y.degree != sector)
      throw DomainError("cocycle entry (" + to_string(x) + ", " + to_string(y) + ") lies outside sector " +
                        std::to_string(sector));
    const bool ordered = x < y;
    const auto key = ordered ? std::make_pair(x, y) : std::make_pair(y, x);
    const QScalar val = ordered ? v : -v;
    auto [it, inserted] = table.emplace(key, val);
    if (!inserted && !(it->second == val))
      throw DomainError("cocycle is not skew on (" + to_string(key.first) + ", " + to_string(key.second) + ")");
  }
  return Cocycle(std::move(name), sector, [table = std::move(table)](const BasisSym& x, const BasisSym& y) {
    auto it = table.find({x, y});
    return it == table.end() ? QScalar() : it->second;
  });
}

QScalar Cocycle::operator()(const BasisSym& x, const BasisSym& y) const {
  if (x == y || x.degree + y.degree != sector_) return QScalar();
  return x < y ? canonical_(x, y) : -canonical_(y, x);
}

QScalar Cocycle::operator()(const Element& x, const Element& y) const {
  QScalar acc;
  for (const auto& [s, a] : x.terms())
    for (const auto& [t, b] : y.terms()) {
      QScalar v = (*this)(s, t);
      if (!v.is_zero()) acc += a * b * v;
    }
  return acc;
}

std::map<std::pair<BasisSym, BasisSym>, QScalar> Cocycle::values(const std::vector<BasisSym>& symbols) const {
  std::map<std::pair<BasisSym, BasisSym>, QScalar> out;
  for (std::size_t i = 0; i < symbols.size(); ++i)
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      QScalar v = (*this)(symbols[i], symbols[j]);
      if (v.is_zero()) continue;
      if (symbols[i] < symbols[j]) out.emplace(std::make_pair(symbols[i], symbols[j]), std::move(v));
      else out.emplace(std::make_pair(symbols[j], symbols[i]), -v);
    }
  return out;
}

}  // namespace homlie
