#include "homlie/oscillator.hpp"

#include <chrono>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/errors.hpp"

namespace homlie {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string power(const std::string& base, std::int64_t e) {
  if (e == 1) return base;
  return (base.size() > 1 ? "(" + base + ")" : base) + "^" + std::to_string(e);
}

// Boson word (a+)^ap a^an as (ap, an) -> coefficient.
using BosonPoly = std::map<std::pair<std::int64_t, std::int64_t>, Rational>;

// a^k (a+)^i in normal order, pushing one a at a time through
// a (a+)^p = (a+)^p a + p (a+)^(p-1).
BosonPoly reorder(std::int64_t k, std::int64_t i) {
  BosonPoly cur{{{i, 0}, Rational(1)}};
  for (std::int64_t step = 0; step < k; ++step) {
    BosonPoly next;
    for (const auto& [key, c] : cur) {
      const auto [p, r] = key;
      next[{p, r + 1}] += c;
      if (p != 0) next[{p - 1, r}] += c * Rational(p);
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    cur = std::move(next);
  }
  return cur;
}

struct FermionTerm {
  int sign;
  int bp;
  int bn;
};

// (b+)^p1 b^n1 (b+)^p2 b^n2 with b^2 = (b+)^2 = 0 and b b+ = 1 - b+ b.
std::vector<FermionTerm> fermion_product(int p1, int n1, int p2, int n2) {
  std::vector<FermionTerm> out;
  if (n1 == 1 && p2 == 1) {
    out.push_back({1, p1, n2});
    if (p1 == 0 && n2 == 0) out.push_back({-1, 1, 1});
  } else if (n1 == 1) {
    if (n2 == 0) out.push_back({1, p1, 1});
  } else if (p1 + p2 <= 1) {
    out.push_back({1, p1 + p2, n2});
  }
  return out;
}

}  // namespace

std::string to_string(const OscMonomial& m) {
  std::string out;
  auto put = [&](const std::string& f) { out += (out.empty() ? "" : " ") + f; };
  if (m.ap != 0) put(power("a+", m.ap));
  if (m.an != 0) put(power("a", m.an));
  if (m.bp != 0) put("b+");
  if (m.bn != 0) put("b");
  return out.empty() ? "1" : out;
}

OscElement::OscElement(const OscMonomial& m, QScalar c) { add_term(m, c); }

OscElement OscElement::monomial(std::int64_t ap, std::int64_t an, int bp, int bn, QScalar c) {
  if (an < 0) throw DomainError("a-exponent must be nonnegative");
  if ((bp != 0 && bp != 1) || (bn != 0 && bn != 1)) throw DomainError("fermion exponents must be 0 or 1");
  return OscElement(OscMonomial{ap, an, bp, bn}, std::move(c));
}

QScalar OscElement::coeff(const OscMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QScalar() : it->second;
}

void OscElement::add_term(const OscMonomial& m, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

OscElement OscElement::operator-() const {
  OscElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

OscElement& OscElement::operator+=(const OscElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

OscElement& OscElement::operator-=(const OscElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

OscElement& OscElement::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

OscElement operator*(const OscElement& x, const OscElement& y) {
  OscElement out;
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms()) {
      const auto fermions = fermion_product(m1.bp, m1.bn, m2.bp, m2.bn);
      if (fermions.empty()) continue;
      const QScalar c = c1 * c2;
      for (const auto& [key, r] : reorder(m1.an, m2.ap)) {
        const std::int64_t ap = m1.ap + key.first;
        const std::int64_t an = key.second + m2.an;
        for (const auto& f : fermions) out.add_term({ap, an, f.bp, f.bn}, c * QScalar(Rational(r * f.sign)));
      }
    }
  return out;
}

std::string to_string(const OscElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool simple = c.is_polynomial() && c.num().term_count() == 1;
    const bool neg = simple && c.num().leading() < 0;
    const QScalar mag = neg ? -c : c;
    const std::string mono = to_string(m);
    std::string body;
    if (mag == QScalar(1)) body = mono;
    else if (mono == "1") body = simple ? to_string(mag) : "(" + to_string(mag) + ")";
    else if (simple) body = to_string(mag) + "*" + mono;
    else body = "(" + to_string(mag) + ")*" + mono;
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

OscElement normal_order_product(const OscElement& x, const OscElement& y) { return x * y; }

OscElement realize(const BasisSym& sym) {
  switch (sym.family) {
    case Family::L: return OscElement::monomial(sym.degree + 1, 1, 0, 0);
    case Family::M: return OscElement::monomial(sym.degree + 1, 1, 1, 0);
    case Family::C: break;
  }
  throw DomainError("the central element has no oscillator realization");
}

OscElement realize(const Element& x) {
  OscElement out;
  for (const auto& [s, c] : x.terms()) out += c * realize(s);
  return out;
}

OscElement commutator(const OscElement& x, const OscElement& y) { return x * y - y * x; }

OscElement q_bracket(const OscElement& x, const OscElement& y, std::int64_t i, std::int64_t j) {
  const QScalar qi(LaurentPoly::monomial(1, i));
  const QScalar qj(LaurentPoly::monomial(1, j));
  return qi * (x * y) - qj * (y * x);
}

namespace {

const char* family_pair(const BasisSym& x, const BasisSym& y) {
  if (x.family == Family::L && y.family == Family::L) return "LL";
  if (x.family == Family::M && y.family == Family::M) return "MM";
  return "LM";
}

std::vector<BasisSym> generators(const Window& w) {
  std::vector<BasisSym> out;
  for (std::int64_t n = -w.N; n <= w.N; ++n) out.push_back(BasisSym::L(n));
  for (std::int64_t n = -w.N; n <= w.N; ++n) out.push_back(BasisSym::M(n));
  return out;
}

}  // namespace

Report verify_realization(const Window& w) { return verify_realization(w, [](const BasisSym& s) { return realize(s); }); }

Report verify_realization(const Window& w, const Realization& rho) {
  const auto start = std::chrono::steady_clock::now();
  const HomAlgebra W = make_w22_classical();
  Report rep;
  rep.claim_id = "oscillator.realization";
  rep.parameters = {{"window", std::to_string(w.N)}};
  std::map<std::string, std::int64_t> checked, bad;
  const auto gens = generators(w);
  auto realize_with = [&](const Element& e) {
    OscElement out;
    for (const auto& [s, c] : e.terms()) out += c * rho(s);
    return out;
  };
  for (const auto& x : gens)
    for (const auto& y : gens) {
      if (x.family == Family::M && y.family == Family::L) continue;
      const std::string fam = family_pair(x, y);
      ++checked[fam];
      const OscElement r = commutator(rho(x), rho(y)) - realize_with(W.bracket(x, y));
      if (!r.is_zero()) {
        ++bad[fam];
        rep.add_violation({"pair", {to_string(x), to_string(y)}, to_string(r)});
      }
    }
  for (const char* fam : {"LL", "LM", "MM"}) {
    rep.dims[std::string("pairs.") + fam] = checked[fam];
    rep.dims[std::string("violations.") + fam] = bad[fam];
  }
  rep.status = rep.violations == 0 ? Status::Pass : Status::Fail;
  rep.time_ms = elapsed_ms(start);
  return rep;
}

Report q_realization_report(const Window& w) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.claim_id = "oscillator.q_brackets";
  rep.parameters = {{"window", std::to_string(w.N)}};
  std::map<std::string, std::int64_t> checked, zero;
  const auto gens = generators(w);
  for (const auto& x : gens)
    for (const auto& y : gens) {
      if (x.family == Family::M && y.family == Family::L) continue;
      const std::int64_t n = x.degree, m = y.degree;
      const std::string fam = family_pair(x, y);
      ++checked[fam];
      OscElement r = q_bracket(realize(x), realize(y), n - m, m - n);
      if (fam != "MM") {
        const BasisSym target{fam == "LL" ? Family::L : Family::M, n + m};
        r -= QScalar(qnumber(m - n)) * realize(target);
      }
      if (r.is_zero()) ++zero[fam];
      else rep.add_violation({"pair", {to_string(x), to_string(y)}, to_string(r)});
    }
  for (const char* fam : {"LL", "LM", "MM"}) {
    rep.dims[std::string("pairs.") + fam] = checked[fam];
    rep.dims[std::string("vanishing.") + fam] = zero[fam];
  }
  rep.status = Status::Info;
  rep.notes.push_back("residual of [X_n, Y_m]_(q^(n-m), q^(m-n)) minus the q-deformed bracket under the plain operator product");
  rep.time_ms = elapsed_ms(start);
  return rep;
}

}  // namespace homlie
