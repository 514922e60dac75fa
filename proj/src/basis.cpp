#include "homlie/basis.hpp"

#include "homlie/errors.hpp"

namespace homlie {

char family_letter(Family f) {
  switch (f) {
    case Family::L:
      return 'L';
    case Family::M:
      return 'M';
    case Family::C:
      return 'C';
  }
  return '?';
}

std::string to_string(const BasisSym& s) {
  if (s.family == Family::C) return "C";
  return std::string(1, family_letter(s.family)) + "[" + std::to_string(s.degree) + "]";
}

Element::Element(const BasisSym& s, QScalar c) {
  if (!c.is_zero()) terms_.emplace(s, std::move(c));
}

QScalar Element::coeff(const BasisSym& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? QScalar() : it->second;
}

void Element::add_term(const BasisSym& s, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<std::int64_t> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const std::int64_t d = terms_.begin()->first.degree;
  for (const auto& [s, c] : terms_)
    if (s.degree != d) return std::nullopt;
  return d;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [s, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

Element& Element::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : x.terms()) {
    const bool simple = c.is_polynomial() && c.num().term_count() == 1;
    const bool neg = simple && c.num().leading() < 0;
    const QScalar mag = neg ? -c : c;
    std::string body;
    if (mag == QScalar(1)) body = to_string(s);
    else if (simple) body = to_string(mag) + "*" + to_string(s);
    else body = "(" + to_string(mag) + ")*" + to_string(s);
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

Window::Window(std::int64_t n) : N(n) {
  if (n < 1) throw DomainError("window must be at least 1");
}

}  // namespace homlie
