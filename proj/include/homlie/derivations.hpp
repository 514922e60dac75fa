#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/linsolve.hpp"
#include "homlie/report.hpp"

namespace homlie {

/// Graded Hom-module (V, rho, beta) over a Hom-Lie algebra.
struct HomModule {
  std::string name;
  std::vector<Family> families;
  std::function<Element(const BasisSym& x, const BasisSym& v)> action;
  std::function<Element(const BasisSym& v)> twist;

  bool contains(const BasisSym& v) const;
};

/// (A, ad, alpha).
HomModule adjoint_module(const HomAlgebra& A);
/// span{M_n} with the adjoint action; an ideal of W_q and of W(2,2).
HomModule ideal_m_module(const HomAlgebra& A);

Element act(const HomModule& V, const Element& x, const Element& v);

/// rho([x,y]) beta(v) == rho(a(x)) rho(y) v - rho(a(y)) rho(x) v over window symbols.
Report verify_representation(const HomAlgebra& A, const HomModule& V, const Window& w);

/// Linear map D given on a finite domain of basis symbols, shifting degree by s.
///
/// For W_q the entries a, b, c, d follow D(L_n) = a L_{n+s} + b M_{n+s},
/// D(M_n) = c L_{n+s} + d M_{n+s}.
class DerivationTable {
 public:
  DerivationTable(int k, std::int64_t s) : k_(k), s_(s) {}

  int k() const noexcept { return k_; }
  std::int64_t degree() const noexcept { return s_; }

  void set(const BasisSym& x, Element image);
  bool defined_on(const BasisSym& x) const { return images_.count(x) != 0; }
  /// Image of a domain symbol; throws UnknownSymbolError outside the domain.
  const Element& operator()(const BasisSym& x) const;
  Element apply(const Element& x) const;
  const std::map<BasisSym, Element>& images() const noexcept { return images_; }
  bool is_zero() const;

  QScalar a(std::int64_t n) const;
  QScalar b(std::int64_t n) const;
  QScalar c(std::int64_t n) const;
  QScalar d(std::int64_t n) const;

 private:
  int k_;
  std::int64_t s_;
  std::map<BasisSym, Element> images_;
};

/// Unknowns of a derivation system: coefficient of `target` in D(`source`).
using DerivationColumn = std::pair<BasisSym, BasisSym>;

struct DerivationSystem {
  ConstraintSystem system;
  std::vector<DerivationColumn> columns;
};

/// Which sources and targets a derivation problem ranges over.
struct DerivationProblem {
  const HomAlgebra* algebra = nullptr;
  const HomModule* module = nullptr;
  int k = 0;
  std::vector<BasisSym> domain;
  std::function<std::vector<BasisSym>(const BasisSym&)> targets;
};

/// Problem for degree-s maps A -> A on the window: sources with n and n + s in [-N, N].
DerivationProblem graded_adjoint_problem(const HomAlgebra& A, const HomModule& V, int k, std::int64_t s,
                                         const Window& w);

/// D([x,y]) = a^k(x).D(y) - a^k(y).D(x) for domain pairs x < y with [x,y] inside the domain.
DerivationSystem assemble_leibniz(const DerivationProblem& p);
/// D(a(x)) = beta(D(x)) for every domain symbol.
DerivationSystem assemble_equivariance(const DerivationProblem& p);

DerivationSystem assemble_leibniz(const HomAlgebra& A, int k, std::int64_t s, const Window& w);
DerivationSystem assemble_equivariance(const HomAlgebra& A, int k, std::int64_t s, const Window& w);

DerivationTable table_from_vector(int k, std::int64_t s, const std::vector<DerivationColumn>& cols,
                                  const DenseVec& v);
DenseVec table_to_vector(const DerivationTable& D, const std::vector<DerivationColumn>& cols);

struct DerivationSpace {
  int k = 0;
  std::int64_t s = 0;
  std::int64_t window = 0;
  bool equivariance_enforced = false;
  std::size_t constraints = 0;
  std::vector<DerivationColumn> columns;
  std::vector<DerivationTable> basis;
  std::size_t dim() const noexcept { return basis.size(); }
};

/// Exact solution space; basis in reduced echelon form over the ordering
/// (a, b, c, d) then source degree 0, 1, -1, 2, -2, ...
DerivationSpace solve_derivations(const HomAlgebra& A, int k, std::int64_t s, const Window& w,
                                  bool enforce_equivariance);
DerivationSpace solve_derivations(const DerivationProblem& p, bool enforce_equivariance);

/// Leibniz residuals of D over window pairs inside D's domain.
Report verify_derivation(const HomAlgebra& A, int k, const DerivationTable& D, const Window& w);
Report verify_derivation(const HomAlgebra& A, const HomModule& V, int k, const DerivationTable& D,
                         const Window& w);

/// x -> [a^k(x), v] on the window symbols of A.
DerivationTable inner_map(const HomAlgebra& A, int k, const Element& v, const Window& w);

/// D1 o D2 - D2 o D1 on the common domain where both compositions are defined.
DerivationTable commutator(const DerivationTable& D1, const DerivationTable& D2);

/// Homogeneous components D_g(u) = degree (deg u + g) part of D(u).
std::map<std::int64_t, DerivationTable> decompose_by_degree(const std::map<BasisSym, Element>& D, int k);

/// H^1(W_q^0, W_q^n) for n != 0.
Report lemma_h1_w0_check(std::int64_t n);
/// Hom_{W_q^0}(W_q^m, W_q^n) for m != n, separating the statement from the
/// twist-equivariance argument.
Report lemma_hom_vanish_check(std::int64_t m, std::int64_t n);
/// Inner maps x -> [x, v], v in {L_0, M_0}, tested against Leibniz.
Report inner_map_leibniz_check(const Window& w);
/// Der_0 and candidate H^1 dimensions of W_q.
Report h1_report(const Window& w);

}  // namespace homlie
