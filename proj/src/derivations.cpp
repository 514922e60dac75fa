#include "homlie/derivations.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <tuple>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// 0, 1, -1, 2, -2, ...
std::int64_t degree_rank(std::int64_t n) { return n > 0 ? 2 * n - 1 : -2 * n; }

// Result symbol -> linear form over unknown columns.
using LinearElement = std::map<BasisSym, std::map<std::size_t, QScalar>>;

void add_rows(ConstraintSystem& sys, const LinearElement& lin, const std::string& label) {
  for (const auto& [r, form] : lin) sys.add_row(form, label + " @ " + to_string(r));
}

struct ColumnIndex {
  std::vector<DerivationColumn> columns;
  std::map<DerivationColumn, std::size_t> index;
  std::set<BasisSym> domain;
  std::set<std::int64_t> degrees;
};

ColumnIndex index_columns(const DerivationProblem& p) {
  ColumnIndex ci;
  for (const auto& x : p.domain) {
    ci.domain.insert(x);
    ci.degrees.insert(x.degree);
    for (const auto& t : p.targets(x)) ci.columns.emplace_back(x, t);
  }
  auto key = [](const DerivationColumn& c) {
    return std::make_tuple(c.first.family, c.second.family, degree_rank(c.first.degree), c.second.degree);
  };
  std::sort(ci.columns.begin(), ci.columns.end(),
            [&](const DerivationColumn& a, const DerivationColumn& b) { return key(a) < key(b); });
  for (std::size_t i = 0; i < ci.columns.size(); ++i) ci.index.emplace(ci.columns[i], i);
  return ci;
}

std::vector<std::string> column_names(const std::vector<DerivationColumn>& cols) {
  std::vector<std::string> names;
  names.reserve(cols.size());
  for (const auto& [x, t] : cols) names.push_back("D(" + to_string(x) + ")[" + to_string(t) + "]");
  return names;
}

// D(z) for z in the domain, as a linear element scaled by c.
void add_image(LinearElement& lin, const ColumnIndex& ci, const DerivationProblem& p, const BasisSym& z,
               const QScalar& c) {
  for (const auto& t : p.targets(z)) lin[t][ci.index.at({z, t})] += c;
}

// c * (x . D(y)) as a linear element.
void add_action_on_image(LinearElement& lin, const ColumnIndex& ci, const DerivationProblem& p, const Element& x,
                         const BasisSym& y, const QScalar& c) {
  for (const auto& [s, a] : x.terms())
    for (const auto& t : p.targets(y)) {
      const Element st = p.module->action(s, t);
      const std::size_t col = ci.index.at({y, t});
      for (const auto& [r, v] : st.terms()) lin[r][col] += c * a * v;
    }
}

bool inside(const std::set<BasisSym>& domain, const Element& e) {
  return std::all_of(e.terms().begin(), e.terms().end(), [&](const auto& t) { return domain.count(t.first) != 0; });
}

// Pairs (x, y), x < y, whose bracket stays inside the domain and whose degree
// sum is a domain degree.
template <typename Fn>
void for_each_closed_pair(const HomAlgebra& A, const std::vector<BasisSym>& dom, const std::set<BasisSym>& domain,
                          const std::set<std::int64_t>& degrees, Fn&& fn) {
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      const BasisSym &x = dom[i], &y = dom[j];
      if (degrees.count(x.degree + y.degree) == 0) continue;
      const Element xy = A.bracket(x, y);
      if (!inside(domain, xy)) continue;
      fn(x, y, xy);
    }
}

}  // namespace

// ------------------------------------------------------------------- modules

bool HomModule::contains(const BasisSym& v) const {
  if (v.family == Family::C && v.degree != 0) return false;
  return std::find(families.begin(), families.end(), v.family) != families.end();
}

HomModule adjoint_module(const HomAlgebra& A) {
  return {A.name() + ".adjoint", A.families(),
          [A](const BasisSym& x, const BasisSym& v) { return A.bracket(x, v); },
          [A](const BasisSym& v) { return A.alpha(v); }};
}

HomModule ideal_m_module(const HomAlgebra& A) {
  return {A.name() + ".M", {Family::M},
          [A](const BasisSym& x, const BasisSym& v) {
            if (v.family != Family::M) throw UnknownSymbolError(to_string(v) + " is not in the ideal M");
            return A.bracket(x, v);
          },
          [A](const BasisSym& v) { return A.alpha(v); }};
}

Element act(const HomModule& V, const Element& x, const Element& v) {
  Element out;
  for (const auto& [s, a] : x.terms())
    for (const auto& [t, b] : v.terms()) {
      if (!V.contains(t)) throw UnknownSymbolError(to_string(t) + " is not in module " + V.name);
      out += (a * b) * V.action(s, t);
    }
  return out;
}

Report verify_representation(const HomAlgebra& A, const HomModule& V, const Window& w) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.claim_id = "representation";
  rep.parameters = {{"algebra", A.name()}, {"module", V.name}, {"window", std::to_string(w.N)}};
  const auto syms = A.symbols(w);
  std::vector<BasisSym> vs;
  for (const auto& s : syms)
    if (V.contains(s)) vs.push_back(s);
  std::int64_t checked = 0;
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      for (const auto& v : vs) {
        ++checked;
        const BasisSym &x = syms[i], &y = syms[j];
        const Element vv(v);
        Element lhs = act(V, A.bracket(x, y), V.twist(v));
        Element rhs = act(V, A.alpha(x), act(V, Element(y), vv)) - act(V, A.alpha(y), act(V, Element(x), vv));
        if (!(lhs == rhs))
          rep.add_violation({"triple", {to_string(x), to_string(y), to_string(v)}, to_string(lhs - rhs)});
      }
  rep.dims["checked"] = checked;
  rep.status = rep.violations == 0 ? Status::Pass : Status::Fail;
  rep.time_ms = elapsed_ms(start);
  return rep;
}

// ---------------------------------------------------------- DerivationTable

void DerivationTable::set(const BasisSym& x, Element image) { images_[x] = std::move(image); }

const Element& DerivationTable::operator()(const BasisSym& x) const {
  auto it = images_.find(x);
  if (it == images_.end()) throw UnknownSymbolError("derivation is not defined on " + to_string(x));
  return it->second;
}

Element DerivationTable::apply(const Element& x) const {
  Element out;
  for (const auto& [s, c] : x.terms()) out += c * (*this)(s);
  return out;
}

bool DerivationTable::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

namespace {

QScalar entry(const DerivationTable& D, Family from, Family to, std::int64_t n) {
  auto it = D.images().find({from, n});
  if (it == D.images().end()) return QScalar();
  return it->second.coeff({to, n + D.degree()});
}

}  // namespace

QScalar DerivationTable::a(std::int64_t n) const { return entry(*this, Family::L, Family::L, n); }
QScalar DerivationTable::b(std::int64_t n) const { return entry(*this, Family::L, Family::M, n); }
QScalar DerivationTable::c(std::int64_t n) const { return entry(*this, Family::M, Family::L, n); }
QScalar DerivationTable::d(std::int64_t n) const { return entry(*this, Family::M, Family::M, n); }

// ---------------------------------------------------------------- assembly

DerivationProblem graded_adjoint_problem(const HomAlgebra& A, const HomModule& V, int k, std::int64_t s,
                                         const Window& w) {
  if (k < 0) throw DomainError("twist power k must be nonnegative");
  DerivationProblem p;
  p.algebra = &A;
  p.module = &V;
  p.k = k;
  for (const auto& x : A.symbols(w))
    if (x.family != Family::C && w.contains(x.degree + s)) p.domain.push_back(x);
  std::vector<Family> fams;
  for (Family f : V.families)
    if (f != Family::C) fams.push_back(f);
  p.targets = [fams, s](const BasisSym& x) {
    std::vector<BasisSym> out;
    for (Family f : fams) out.push_back({f, x.degree + s});
    return out;
  };
  return p;
}

DerivationSystem assemble_leibniz(const DerivationProblem& p) {
  const ColumnIndex ci = index_columns(p);
  DerivationSystem out{ConstraintSystem(column_names(ci.columns)), ci.columns};
  const HomAlgebra& A = *p.algebra;
  for_each_closed_pair(A, p.domain, ci.domain, ci.degrees, [&](const BasisSym& x, const BasisSym& y, const Element& xy) {
    LinearElement lin;
    for (const auto& [z, cz] : xy.terms()) add_image(lin, ci, p, z, cz);
    add_action_on_image(lin, ci, p, alpha_power(A, Element(x), p.k), y, QScalar(-1));
    add_action_on_image(lin, ci, p, alpha_power(A, Element(y), p.k), x, QScalar(1));
    add_rows(out.system, lin, "leibniz(" + to_string(x) + ", " + to_string(y) + ")");
  });
  return out;
}

DerivationSystem assemble_equivariance(const DerivationProblem& p) {
  const ColumnIndex ci = index_columns(p);
  DerivationSystem out{ConstraintSystem(column_names(ci.columns)), ci.columns};
  for (const auto& x : p.domain) {
    const Element ax = p.algebra->alpha(x);
    if (!inside(ci.domain, ax)) continue;
    LinearElement lin;
    for (const auto& [z, cz] : ax.terms()) add_image(lin, ci, p, z, cz);
    for (const auto& t : p.targets(x)) {
      const std::size_t col = ci.index.at({x, t});
      for (const Element e = p.module->twist(t); const auto& [r, v] : e.terms()) lin[r][col] -= v;
    }
    add_rows(out.system, lin, "equivariance(" + to_string(x) + ")");
  }
  return out;
}

DerivationSystem assemble_leibniz(const HomAlgebra& A, int k, std::int64_t s, const Window& w) {
  const HomModule V = adjoint_module(A);
  return assemble_leibniz(graded_adjoint_problem(A, V, k, s, w));
}

DerivationSystem assemble_equivariance(const HomAlgebra& A, int k, std::int64_t s, const Window& w) {
  const HomModule V = adjoint_module(A);
  return assemble_equivariance(graded_adjoint_problem(A, V, k, s, w));
}

DerivationTable table_from_vector(int k, std::int64_t s, const std::vector<DerivationColumn>& cols,
                                  const DenseVec& v) {
  DerivationTable D(k, s);
  std::map<BasisSym, Element> images;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    Element& img = images[cols[i].first];
    img.add_term(cols[i].second, v[i]);
  }
  for (auto& [x, img] : images) D.set(x, std::move(img));
  return D;
}

DenseVec table_to_vector(const DerivationTable& D, const std::vector<DerivationColumn>& cols) {
  DenseVec v;
  v.reserve(cols.size());
  for (const auto& [x, t] : cols) v.push_back(D.defined_on(x) ? D(x).coeff(t) : QScalar());
  return v;
}

DerivationSpace solve_derivations(const DerivationProblem& p, bool enforce_equivariance) {
  DerivationSystem ds = assemble_leibniz(p);
  if (enforce_equivariance) ds.system.append(assemble_equivariance(p).system);
  DerivationSpace out;
  out.k = p.k;
  out.equivariance_enforced = enforce_equivariance;
  out.constraints = ds.system.rows().size();
  out.columns = ds.columns;
  std::int64_t s = 0;
  if (!ds.columns.empty()) s = ds.columns.front().second.degree - ds.columns.front().first.degree;
  out.s = s;
  for (const auto& v : solve_nullspace(ds.system).basis) out.basis.push_back(table_from_vector(p.k, s, ds.columns, v));
  return out;
}

DerivationSpace solve_derivations(const HomAlgebra& A, int k, std::int64_t s, const Window& w,
                                  bool enforce_equivariance) {
  const HomModule V = adjoint_module(A);
  DerivationSpace out = solve_derivations(graded_adjoint_problem(A, V, k, s, w), enforce_equivariance);
  out.s = s;
  out.window = w.N;
  return out;
}

// ------------------------------------------------------------- verification

Report verify_derivation(const HomAlgebra& A, const HomModule& V, int k, const DerivationTable& D,
                         const Window& w) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.claim_id = "derivation";
  rep.parameters = {{"algebra", A.name()}, {"module", V.name}, {"k", std::to_string(k)},
                    {"degree", std::to_string(D.degree())}, {"window", std::to_string(w.N)}};
  std::vector<BasisSym> dom;
  std::set<BasisSym> domain;
  std::set<std::int64_t> degrees;
  for (const auto& [x, img] : D.images()) {
    if (!w.contains(x.degree)) continue;
    dom.push_back(x);
    domain.insert(x);
    degrees.insert(x.degree);
  }
  std::int64_t pairs = 0;
  for_each_closed_pair(A, dom, domain, degrees, [&](const BasisSym& x, const BasisSym& y, const Element& xy) {
    ++pairs;
    Element r = D.apply(xy);
    r -= act(V, alpha_power(A, Element(x), k), D(y));
    r += act(V, alpha_power(A, Element(y), k), D(x));
    if (!r.is_zero()) rep.add_violation({"pair", {to_string(x), to_string(y)}, to_string(r)});
  });
  rep.dims["pairs"] = pairs;
  rep.status = rep.violations == 0 ? Status::Pass : Status::Fail;
  rep.time_ms = elapsed_ms(start);
  return rep;
}

Report verify_derivation(const HomAlgebra& A, int k, const DerivationTable& D, const Window& w) {
  return verify_derivation(A, adjoint_module(A), k, D, w);
}

DerivationTable inner_map(const HomAlgebra& A, int k, const Element& v, const Window& w) {
  const auto deg = v.homogeneous_degree();
  if (!v.is_zero() && !deg) throw DomainError("inner map needs a homogeneous element");
  DerivationTable D(k, deg.value_or(0));
  for (const auto& x : A.symbols(w)) {
    if (x.family == Family::C) continue;
    D.set(x, bracket(A, alpha_power(A, Element(x), k), v));
  }
  return D;
}

DerivationTable commutator(const DerivationTable& D1, const DerivationTable& D2) {
  DerivationTable out(D1.k(), D1.degree() + D2.degree());
  auto covered = [](const DerivationTable& D, const Element& e) {
    return std::all_of(e.terms().begin(), e.terms().end(), [&](const auto& t) { return D.defined_on(t.first); });
  };
  for (const auto& [x, img2] : D2.images()) {
    if (!D1.defined_on(x)) continue;
    const Element& img1 = D1(x);
    if (!covered(D1, img2) || !covered(D2, img1)) continue;
    out.set(x, D1.apply(img2) - D2.apply(img1));
  }
  return out;
}

std::map<std::int64_t, DerivationTable> decompose_by_degree(const std::map<BasisSym, Element>& D, int k) {
  std::map<std::int64_t, std::map<BasisSym, Element>> parts;
  for (const auto& [u, img] : D)
    for (const auto& [t, c] : img.terms()) parts[t.degree - u.degree][u].add_term(t, c);
  std::map<std::int64_t, DerivationTable> out;
  for (auto& [g, images] : parts) {
    DerivationTable Dg(k, g);
    for (const auto& [u, img] : D) Dg.set(u, images.count(u) ? images[u] : Element());
    out.emplace(g, std::move(Dg));
  }
  return out;
}

// ------------------------------------------------------------ lemma checks

namespace {

std::string render_map(const DerivationTable& D) {
  std::string out;
  for (const auto& [x, img] : D.images()) {
    if (!out.empty()) out += ", ";
    out += to_string(x) + " -> " + to_string(img);
  }
  return out;
}

std::vector<DenseVec> vectors_of(const DerivationSpace& sp) {
  std::vector<DenseVec> out;
  for (const auto& D : sp.basis) out.push_back(table_to_vector(D, sp.columns));
  return out;
}

}  // namespace

Report lemma_h1_w0_check(std::int64_t n) {
  if (n == 0) throw DomainError("lemma_h1_w0_check needs n != 0");
  const auto start = std::chrono::steady_clock::now();
  const HomAlgebra A = make_wq();
  const HomModule V = adjoint_module(A);
  DerivationProblem p;
  p.algebra = &A;
  p.module = &V;
  p.k = 0;
  p.domain = {BasisSym::L(0), BasisSym::M(0)};
  p.targets = [n](const BasisSym&) { return std::vector<BasisSym>{BasisSym::L(n), BasisSym::M(n)}; };
  const DerivationSpace der = solve_derivations(p, false);

  std::vector<DenseVec> inner;
  for (const BasisSym v : {BasisSym::L(n), BasisSym::M(n)}) {
    DerivationTable I(0, n);
    for (const auto& x : p.domain) I.set(x, A.bracket(x, v));
    inner.push_back(table_to_vector(I, der.columns));
  }
  const std::vector<DenseVec> der_vecs = vectors_of(der);
  std::vector<DenseVec> both = der_vecs;
  both.insert(both.end(), inner.begin(), inner.end());
  const auto d_der = static_cast<std::int64_t>(der.dim());
  const auto d_inn = static_cast<std::int64_t>(rank_of(inner));
  const auto d_int = d_der + d_inn - static_cast<std::int64_t>(rank_of(both));

  Report rep;
  rep.claim_id = "lemma.h1_w0";
  rep.parameters = {{"n", std::to_string(n)}};
  rep.dims = {{"derivations", d_der}, {"inner", d_inn}, {"inner_derivations", d_int}, {"quotient", d_der - d_int}};
  // The proof's witness: D(X) = [X, v] with v = D(L_0) / [n]_q.
  const QScalar qn(qnumber(n));
  for (const auto& D : der.basis) {
    const Element v = D(BasisSym::L(0)) * qn.inverse();
    for (const auto& x : p.domain) {
      const Element r = D(x) - bracket(A, Element(x), v);
      if (!r.is_zero()) rep.add_violation({"map", {render_map(D), "v = " + to_string(v)}, to_string(r)});
    }
  }
  rep.status = (d_der - d_int == 0 && rep.violations == 0) ? Status::Pass : Status::Fail;
  rep.time_ms = elapsed_ms(start);
  return rep;
}

Report lemma_hom_vanish_check(std::int64_t m, std::int64_t n) {
  if (m == n) throw DomainError("lemma_hom_vanish_check needs m != n");
  const auto start = std::chrono::steady_clock::now();
  const HomAlgebra A = make_wq();
  const std::vector<BasisSym> src{BasisSym::L(m), BasisSym::M(m)};
  const std::vector<BasisSym> dst{BasisSym::L(n), BasisSym::M(n)};
  std::vector<DerivationColumn> cols;
  for (const auto& x : src)
    for (const auto& t : dst) cols.emplace_back(x, t);
  auto col = [&](const BasisSym& x, const BasisSym& t) {
    return static_cast<std::size_t>(std::find(cols.begin(), cols.end(), DerivationColumn{x, t}) - cols.begin());
  };
  const std::vector<std::string> names = column_names(cols);

  ConstraintSystem equiv(names), module(names);
  for (const auto& v : src) {
    // f(alpha v) - alpha f(v)
    LinearElement lin;
    for (const Element e = A.alpha(v); const auto& [z, cz] : e.terms())
      for (const auto& t : dst) lin[t][col(z, t)] += cz;
    for (const auto& t : dst)
      for (const Element e = A.alpha(t); const auto& [r, c] : e.terms()) lin[r][col(v, t)] -= c;
    add_rows(equiv, lin, "equivariance(" + to_string(v) + ")");
  }
  for (const BasisSym X : {BasisSym::L(0), BasisSym::M(0)})
    for (const auto& v : src) {
      // f(X . v) - X . f(v)
      LinearElement lin;
      for (const Element e = A.bracket(X, v); const auto& [z, cz] : e.terms())
        for (const auto& t : dst) lin[t][col(z, t)] += cz;
      for (const auto& t : dst)
        for (const Element e = A.bracket(X, t); const auto& [r, c] : e.terms()) lin[r][col(v, t)] -= c;
      add_rows(module, lin, "module(" + to_string(X) + ", " + to_string(v) + ")");
    }
  ConstraintSystem full = equiv;
  full.append(module);

  const Nullspace ns_full = solve_nullspace(full);
  const Nullspace ns_equiv = solve_nullspace(equiv);
  const Nullspace ns_module = solve_nullspace(module);

  Report rep;
  rep.claim_id = "lemma.hom_vanish";
  rep.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
  rep.dims = {{"morphisms", static_cast<std::int64_t>(ns_full.basis.size())},
              {"equivariance_only", static_cast<std::int64_t>(ns_equiv.basis.size())},
              {"module_only", static_cast<std::int64_t>(ns_module.basis.size())}};
  if (!ns_full.basis.empty()) {
    rep.status = Status::Fail;
    for (const auto& v : ns_full.basis) rep.add_violation({"map", {render_map(table_from_vector(0, n - m, cols, v))}, "nonzero morphism"});
  } else if (!ns_equiv.basis.empty()) {
    // The statement holds, but twist-equivariance alone does not force f = 0.
    rep.status = Status::Discrepant;
    const DenseVec& v = ns_equiv.basis.front();
    const DerivationTable f = table_from_vector(0, n - m, cols, v);
    const std::size_t bad = module.first_violated(v);
    std::string residual = "equivariance residual 0";
    if (bad < module.rows().size()) {
      QScalar acc;
      for (const auto& [c, e] : module.rows()[bad]) acc += e * v[c];
      residual += "; " + module.labels()[bad] + " residual " + to_string(acc);
    }
    rep.add_violation({"map", {render_map(f)}, residual});
    rep.notes.push_back("<m>_q == <n>_q, so f o alpha = alpha o f leaves " +
                        std::to_string(ns_equiv.basis.size()) +
                        " free parameters; the W_q^0-action is what forces f = 0");
  } else {
    rep.status = Status::Pass;
  }
  rep.time_ms = elapsed_ms(start);
  return rep;
}

Report inner_map_leibniz_check(const Window& w) {
  const auto start = std::chrono::steady_clock::now();
  const HomAlgebra A = make_wq();
  Report rep;
  rep.claim_id = "derivations.inner_maps_are_derivations";
  rep.parameters = {{"window", std::to_string(w.N)}};
  for (const BasisSym v : {BasisSym::L(0), BasisSym::M(0)}) {
    const Report r = verify_derivation(A, 0, inner_map(A, 0, Element(v), w), w);
    rep.dims["violations." + to_string(v)] = static_cast<std::int64_t>(r.violations);
    if (!r.counterexamples.empty()) {
      Counterexample c = r.counterexamples.front();
      c.args.insert(c.args.begin(), "v = " + to_string(v));
      rep.add_violation(std::move(c));
    }
  }
  rep.status = rep.violations == 0 ? Status::Pass : Status::Discrepant;
  if (rep.status == Status::Discrepant)
    rep.notes.push_back("x -> [x, v] is not a derivation of W_q for v in {L[0], M[0]}: q-numbers are not additive");
  rep.time_ms = elapsed_ms(start);
  return rep;
}

Report h1_report(const Window& w) {
  const auto start = std::chrono::steady_clock::now();
  const HomAlgebra A = make_wq();
  const DerivationSpace der0 = solve_derivations(A, 0, 0, w, false);
  const std::vector<DenseVec> der_vecs = vectors_of(der0);

  std::vector<DenseVec> inner;
  std::int64_t inner_passing = 0;
  for (const BasisSym v : {BasisSym::L(0), BasisSym::M(0)}) {
    const DerivationTable I = inner_map(A, 0, Element(v), w);
    if (verify_derivation(A, 0, I, w).passed()) ++inner_passing;
    inner.push_back(table_to_vector(I, der0.columns));
  }
  std::vector<DenseVec> both = der_vecs;
  both.insert(both.end(), inner.begin(), inner.end());
  const auto d_der = static_cast<std::int64_t>(der0.dim());
  const auto d_inn = static_cast<std::int64_t>(rank_of(inner));
  const auto d_sum = static_cast<std::int64_t>(rank_of(both));
  const auto d_int = d_der + d_inn - d_sum;

  Report rep;
  rep.claim_id = "derivations.h1_one_dimensional";
  rep.parameters = {{"window", std::to_string(w.N)}};
  rep.dims = {{"der0", d_der},
              {"inner_span", d_inn},
              {"inner_maps_passing_leibniz", inner_passing},
              {"der0_cap_inner", d_int},
              {"h1_inner_as_derivations", d_der - d_int},
              {"h1_inner_as_defined", d_sum - d_inn},
              {"der0_minus_inner_formal", d_der - d_inn}};
  for (std::size_t i = 0; i < der0.basis.size(); ++i) {
    std::vector<DenseVec> with = inner;
    with.push_back(der_vecs[i]);
    const bool in_inner = rank_of(with) == static_cast<std::size_t>(d_inn);
    rep.notes.push_back("Der_0 basis " + std::to_string(i) + (in_inner ? " is" : " is not") + " a combination of inner maps");
  }
  const bool confirmed = d_der - d_int == 1 && d_sum - d_inn == 1;
  rep.status = confirmed ? Status::Pass : Status::Discrepant;
  if (!confirmed)
    rep.add_violation({"dims",
                       {"Der_0 = " + std::to_string(d_der), "Inn_0 span = " + std::to_string(d_inn)},
                       "H^1 = " + std::to_string(d_der - d_int) + " (inner maps as derivations), " +
                           std::to_string(d_sum - d_inn) + " (inner maps as defined)"});
  rep.time_ms = elapsed_ms(start);
  return rep;
}

}  // namespace homlie
