#include "homlie/cohomology.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <tuple>

namespace homlie {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string pair_label(const BasisSym& x, const BasisSym& y) { return "(" + to_string(x) + ", " + to_string(y) + ")"; }

}  // namespace

QScalar virasoro_type_value(std::int64_t m) {
  const QScalar num(qnumber(m - 1) * qnumber(m) * qnumber(m + 1));
  const QScalar den(qnumber(2) * qnumber(3) * angle(m));
  return num / den;
}

Cocycle builtin_beta() {
  return Cocycle("beta", 0, [](const BasisSym& x, const BasisSym& y) {
    if (x.family == Family::L && y.family == Family::L) return virasoro_type_value(x.degree);
    return QScalar();
  });
}

Cocycle builtin_gamma() {
  return Cocycle("gamma", 0, [](const BasisSym& x, const BasisSym& y) {
    if (x.family == Family::L && y.family == Family::M) return virasoro_type_value(x.degree);
    return QScalar();
  });
}

QScalar cocycle_residual(const HomAlgebra& A, const Cocycle& psi, const BasisSym& x, const BasisSym& y,
                         const BasisSym& z) {
  return psi(A.alpha(x), A.bracket(y, z)) + psi(A.alpha(y), A.bracket(z, x)) + psi(A.alpha(z), A.bracket(x, y));
}

Report verify_cocycle(const HomAlgebra& A, const Cocycle& psi, const Window& w) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.claim_id = "cocycle";
  rep.parameters = {{"algebra", A.name()}, {"cocycle", psi.name()}, {"sector", std::to_string(psi.sector())},
                    {"window", std::to_string(w.N)}};
  const auto syms = A.symbols(w);
  std::int64_t triples = 0;
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      for (std::size_t k = j + 1; k < syms.size(); ++k) {
        if (syms[i].degree + syms[j].degree + syms[k].degree != psi.sector()) continue;
        ++triples;
        QScalar r = cocycle_residual(A, psi, syms[i], syms[j], syms[k]);
        if (!r.is_zero())
          rep.add_violation({"triple", {to_string(syms[i]), to_string(syms[j]), to_string(syms[k])}, to_string(r)});
      }
  rep.dims["triples"] = triples;
  rep.status = rep.violations == 0 ? Status::Pass : Status::Fail;
  rep.time_ms = elapsed_ms(start);
  return rep;
}

Report alpha_invariance_check(const Cocycle& psi, const HomAlgebra& A, const Window& w) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.claim_id = "alpha_invariance";
  rep.parameters = {{"algebra", A.name()}, {"cocycle", psi.name()}, {"window", std::to_string(w.N)}};
  const auto syms = A.symbols(w);
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j) {
      ++pairs;
      const QScalar lhs = psi(A.alpha(syms[i]), A.alpha(syms[j]));
      const QScalar rhs = psi(syms[i], syms[j]);
      if (!(lhs == rhs)) rep.add_violation({"pair", {to_string(syms[i]), to_string(syms[j])}, to_string(lhs - rhs)});
    }
  rep.dims["pairs"] = pairs;
  rep.status = rep.violations == 0 ? Status::Pass : Status::Fail;
  rep.time_ms = elapsed_ms(start);
  return rep;
}

std::vector<SymPair> sector_pairs(const HomAlgebra& A, std::int64_t sector, const Window& w) {
  const auto syms = A.symbols(w);
  std::vector<SymPair> out;
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      if (syms[i].degree + syms[j].degree == sector) out.emplace_back(syms[i], syms[j]);
  auto key = [](const SymPair& p) {
    return std::make_tuple(p.first.family, p.second.family, std::abs(p.first.degree) + std::abs(p.second.degree),
                           p.first.degree, p.second.degree);
  };
  std::sort(out.begin(), out.end(), [&](const SymPair& a, const SymPair& b) { return key(a) < key(b); });
  return out;
}

Cocycle coboundary(const std::map<BasisSym, QScalar>& f, const HomAlgebra& A, std::int64_t sector) {
  return Cocycle("coboundary", sector, [f, A](const BasisSym& x, const BasisSym& y) {
    QScalar v;
    for (const Element xy = A.bracket(x, y); const auto& [s, c] : xy.terms()) {
      auto it = f.find(s);
      if (it != f.end()) v += c * it->second;
    }
    return v;
  });
}

ConstraintSystem assemble_cocycle_constraints(const HomAlgebra& A, std::int64_t sector, const Window& w) {
  const auto unknowns = sector_pairs(A, sector, w);
  std::map<SymPair, std::size_t> col;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    col.emplace(unknowns[i], i);
    names.push_back(pair_label(unknowns[i].first, unknowns[i].second));
  }
  ConstraintSystem sys(std::move(names));
  const auto syms = A.symbols(w);

  // Adds coefficient * psi(a, [b, c]) to the row; false if a pair leaves the window.
  auto add_term = [&](std::map<std::size_t, QScalar>& row, const BasisSym& a, const BasisSym& b,
                      const BasisSym& c) {
    const Element lhs = A.alpha(a);
    const Element rhs = A.bracket(b, c);
    for (const auto& [s, u] : lhs.terms())
      for (const auto& [t, v] : rhs.terms()) {
        if (s == t) continue;
        const bool ordered = s < t;
        auto it = col.find(ordered ? SymPair{s, t} : SymPair{t, s});
        if (it == col.end()) return false;
        QScalar coef = u * v;
        if (!ordered) coef = -coef;
        row[it->second] += coef;
      }
    return true;
  };

  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      for (std::size_t k = j + 1; k < syms.size(); ++k) {
        const auto &x = syms[i], &y = syms[j], &z = syms[k];
        if (x.degree + y.degree + z.degree != sector) continue;
        std::map<std::size_t, QScalar> row;
        if (!add_term(row, x, y, z) || !add_term(row, y, z, x) || !add_term(row, z, x, y)) continue;
        sys.add_row(row, "(" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) + ")");
      }
  return sys;
}

DenseVec to_vector(const Cocycle& psi, const std::vector<SymPair>& unknowns) {
  DenseVec v;
  v.reserve(unknowns.size());
  for (const auto& [x, y] : unknowns) v.push_back(psi(x, y));
  return v;
}

Cocycle from_vector(std::string name, std::int64_t sector, const std::vector<SymPair>& unknowns, const DenseVec& v) {
  std::map<SymPair, QScalar> values;
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    if (!v[i].is_zero()) values.emplace(unknowns[i], v[i]);
  return Cocycle::from_map(std::move(name), sector, values);
}

SolveResult solve_h2(const HomAlgebra& A, std::int64_t sector, const Window& w) {
  SolveResult out;
  out.sector = sector;
  out.unknowns = sector_pairs(A, sector, w);
  const ConstraintSystem sys = assemble_cocycle_constraints(A, sector, w);
  out.constraints = sys.rows().size();
  const Nullspace ns = solve_nullspace(sys);
  out.rank = ns.rank;
  out.nullspace_basis = ns.basis;

  std::vector<DenseVec> cob;
  if (w.contains(sector)) {
    for (const auto& t : A.symbols(w)) {
      if (t.degree != sector) continue;
      std::map<BasisSym, QScalar> f;
      f.emplace(t, QScalar(1));
      DenseVec v = to_vector(coboundary(f, A, sector), out.unknowns);
      if (std::any_of(v.begin(), v.end(), [](const QScalar& x) { return !x.is_zero(); })) cob.push_back(std::move(v));
    }
  }
  out.coboundary_basis = reduced_row_echelon(std::move(cob));

  std::vector<DenseVec> reduced;
  for (DenseVec z : out.nullspace_basis) {
    for (const auto& b : out.coboundary_basis) {
      std::size_t p = 0;
      while (b[p].is_zero()) ++p;
      if (z[p].is_zero()) continue;
      const QScalar f = z[p];
      for (std::size_t c = 0; c < z.size(); ++c)
        if (!b[c].is_zero()) z[c] -= f * b[c];
    }
    reduced.push_back(std::move(z));
  }
  out.representatives = reduced_row_echelon(std::move(reduced));

  out.dims.z2 = static_cast<std::int64_t>(out.nullspace_basis.size());
  out.dims.b2 = static_cast<std::int64_t>(out.coboundary_basis.size());
  out.dims.h2 = out.dims.z2 - out.dims.b2;
  return out;
}

std::size_t rank_modulo_coboundaries(const SolveResult& r, const std::vector<DenseVec>& vecs) {
  std::vector<DenseVec> all = r.coboundary_basis;
  all.insert(all.end(), vecs.begin(), vecs.end());
  return rank_of(all) - rank_of(r.coboundary_basis);
}

}  // namespace homlie
