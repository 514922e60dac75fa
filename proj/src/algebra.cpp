#include "homlie/algebra.hpp"

#include <algorithm>
#include <chrono>

#include "homlie/errors.hpp"
#include "homlie/testing.hpp"

namespace homlie {

HomAlgebra::HomAlgebra(std::string name, std::vector<Family> families, BracketFn canonical_bracket, AlphaFn alpha,
                       std::optional<Cocycle> cocycle)
    : name_(std::move(name)),
      families_(std::move(families)),
      canonical_(std::move(canonical_bracket)),
      alpha_(std::move(alpha)),
      cocycle_(std::move(cocycle)) {
  std::sort(families_.begin(), families_.end());
}

bool HomAlgebra::has_center() const noexcept {
  return std::find(families_.begin(), families_.end(), Family::C) != families_.end();
}

bool HomAlgebra::contains(const BasisSym& s) const noexcept {
  if (s.family == Family::C && s.degree != 0) return false;
  return std::find(families_.begin(), families_.end(), s.family) != families_.end();
}

void HomAlgebra::require(const BasisSym& s) const {
  if (!contains(s)) throw UnknownSymbolError("symbol " + to_string(s) + " is not in algebra " + name_);
}

std::vector<BasisSym> HomAlgebra::symbols(const Window& w) const {
  std::vector<BasisSym> out;
  for (Family f : families_) {
    if (f == Family::C) {
      out.push_back(BasisSym::C());
      continue;
    }
    for (std::int64_t n = -w.N; n <= w.N; ++n) out.push_back({f, n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element HomAlgebra::bracket(const BasisSym& x, const BasisSym& y) const {
  require(x);
  require(y);
  if (x == y) return {};
  return x < y ? canonical_(x, y) : -canonical_(y, x);
}

Element HomAlgebra::alpha(const BasisSym& x) const {
  require(x);
  return alpha_(x);
}

Element bracket(const HomAlgebra& A, const Element& x, const Element& y) {
  Element out;
  for (const auto& [s, a] : x.terms())
    for (const auto& [t, b] : y.terms()) {
      if (s == t) {
        A.bracket(s, t);  // symbol check only
        continue;
      }
      Element st = A.bracket(s, t);
      if (!st.is_zero()) out += (a * b) * st;
    }
  return out;
}

Element alpha(const HomAlgebra& A, const Element& x) {
  Element out;
  for (const auto& [s, a] : x.terms()) out += a * A.alpha(s);
  return out;
}

Element alpha_power(const HomAlgebra& A, const Element& x, int k) {
  Element out = x;
  for (int i = 0; i < k; ++i) out = alpha(A, out);
  return out;
}

HomAlgebra make_wq() {
  auto table = [](const BasisSym& x, const BasisSym& y) -> Element {
    // x < y, so an L/M pair always arrives as (L_n, M_m).
    if (x.family == Family::M) return {};
    const QScalar c(qnumber(y.degree - x.degree));
    return Element({y.family, x.degree + y.degree}, c);
  };
  auto twist = [](const BasisSym& x) { return Element(x, QScalar(angle(x.degree))); };
  return HomAlgebra("wq", {Family::L, Family::M}, table, twist);
}

HomAlgebra make_w22_classical() {
  auto table = [](const BasisSym& x, const BasisSym& y) -> Element {
    if (x.family == Family::M) return {};
    return Element({y.family, x.degree + y.degree}, QScalar(Rational(y.degree - x.degree)));
  };
  auto twist = [](const BasisSym& x) { return Element(x); };
  return HomAlgebra("w22", {Family::L, Family::M}, table, twist);
}

HomAlgebra central_extend(const HomAlgebra& A, const Cocycle& psi) {
  if (A.has_center()) throw DomainError("algebra " + A.name() + " already has a central symbol");
  std::vector<Family> fams = A.families();
  fams.push_back(Family::C);
  auto table = [A, psi](const BasisSym& x, const BasisSym& y) -> Element {
    if (x.family == Family::C || y.family == Family::C) return {};
    Element r = A.bracket(x, y);
    r.add_term(BasisSym::C(), psi(x, y));
    return r;
  };
  auto twist = [A](const BasisSym& x) { return x.family == Family::C ? Element(x) : A.alpha(x); };
  return HomAlgebra(A.name() + "+" + psi.name(), std::move(fams), table, twist, psi);
}

HomAlgebra quotient_by_center(const HomAlgebra& ext) {
  std::vector<Family> fams;
  for (Family f : ext.families())
    if (f != Family::C) fams.push_back(f);
  auto drop = [](Element e) {
    Element r;
    for (const auto& [s, c] : e.terms())
      if (s.family != Family::C) r.add_term(s, c);
    return r;
  };
  auto table = [ext, drop](const BasisSym& x, const BasisSym& y) { return drop(ext.bracket(x, y)); };
  auto twist = [ext, drop](const BasisSym& x) { return drop(ext.alpha(x)); };
  std::string name = ext.name();
  if (auto pos = name.find('+'); pos != std::string::npos) name.resize(pos);
  return HomAlgebra(name, std::move(fams), table, twist);
}

Element hom_jacobi_residual(const HomAlgebra& A, const BasisSym& x, const BasisSym& y, const BasisSym& z) {
  Element r = bracket(A, A.bracket(x, y), A.alpha(z));
  r += bracket(A, A.bracket(y, z), A.alpha(x));
  r += bracket(A, A.bracket(z, x), A.alpha(y));
  return r;
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Report hom_jacobi_check(const HomAlgebra& A, const Window& w) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.claim_id = "hom_jacobi";
  rep.parameters = {{"algebra", A.name()}, {"window", std::to_string(w.N)}};
  const auto syms = A.symbols(w);
  std::int64_t triples = 0;
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      for (std::size_t k = j + 1; k < syms.size(); ++k) {
        ++triples;
        Element r = hom_jacobi_residual(A, syms[i], syms[j], syms[k]);
        if (!r.is_zero())
          rep.add_violation({"triple", {to_string(syms[i]), to_string(syms[j]), to_string(syms[k])}, to_string(r)});
      }
  rep.dims["triples"] = triples;
  rep.status = rep.violations == 0 ? Status::Pass : Status::Fail;
  rep.time_ms = elapsed_ms(start);
  return rep;
}

Report multiplicativity_check(const HomAlgebra& A, const Window& w) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.claim_id = "multiplicative";
  rep.parameters = {{"algebra", A.name()}, {"window", std::to_string(w.N)}};
  const auto syms = A.symbols(w);
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j) {
      ++pairs;
      Element lhs = alpha(A, A.bracket(syms[i], syms[j]));
      Element rhs = bracket(A, A.alpha(syms[i]), A.alpha(syms[j]));
      if (!(lhs == rhs))
        rep.add_violation({"pair", {to_string(syms[i]), to_string(syms[j])}, to_string(lhs - rhs)});
    }
  rep.dims["pairs"] = pairs;
  rep.status = rep.violations == 0 ? Status::Pass : Status::Fail;
  rep.time_ms = elapsed_ms(start);
  return rep;
}

namespace testing {

HomAlgebra make_corrupted_wq() {
  const HomAlgebra wq = make_wq();
  auto table = [wq](const BasisSym& x, const BasisSym& y) -> Element {
    if (x.family == Family::L && y.family == Family::L) return Element(BasisSym::L(x.degree + y.degree));
    return wq.bracket(x, y);
  };
  auto twist = [wq](const BasisSym& x) { return wq.alpha(x); };
  return HomAlgebra("wq-corrupted", {Family::L, Family::M}, table, twist);
}

}  // namespace testing

}  // namespace homlie
