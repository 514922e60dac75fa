#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homlie/basis.hpp"
#include "homlie/cocycle.hpp"
#include "homlie/report.hpp"

namespace homlie {

/// Hom-Lie algebra given by lazy structure constants on graded symbols.
///
/// The bracket table is consulted only for x < y; swapped arguments are the
/// negation and the diagonal is zero. The twist must preserve degree and the
/// table must be degree-additive; verification sweeps are what test the
/// Hom-Jacobi identity.
class HomAlgebra {
 public:
  using BracketFn = std::function<Element(const BasisSym&, const BasisSym&)>;
  using AlphaFn = std::function<Element(const BasisSym&)>;

  HomAlgebra(std::string name, std::vector<Family> families, BracketFn canonical_bracket, AlphaFn alpha,
             std::optional<Cocycle> cocycle = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Family>& families() const noexcept { return families_; }
  bool has_center() const noexcept;
  const std::optional<Cocycle>& cocycle() const noexcept { return cocycle_; }

  bool contains(const BasisSym& s) const noexcept;
  /// Symbols with degree in [-N, N], in BasisSym order.
  std::vector<BasisSym> symbols(const Window& w) const;

  /// Throws UnknownSymbolError for symbols outside the algebra.
  Element bracket(const BasisSym& x, const BasisSym& y) const;
  Element alpha(const BasisSym& x) const;

 private:
  void require(const BasisSym& s) const;

  std::string name_;
  std::vector<Family> families_;
  BracketFn canonical_;
  AlphaFn alpha_;
  std::optional<Cocycle> cocycle_;
};

Element bracket(const HomAlgebra& A, const Element& x, const Element& y);
Element alpha(const HomAlgebra& A, const Element& x);
Element alpha_power(const HomAlgebra& A, const Element& x, int k);

/// q-deformed W(2,2): [L_n, L_m] = [m-n]_q L_{m+n}, [L_n, M_m] = [m-n]_q M_{m+n},
/// [M_n, M_m] = 0, alpha = <n>_q on degree n.
HomAlgebra make_wq();
/// Centerless W(2,2): [L_m, L_n] = (n-m) L_{m+n}, [L_m, M_n] = (n-m) M_{m+n}, alpha = id.
HomAlgebra make_w22_classical();

/// A plus a central C with [x, y] = [x, y]_A + psi(x, y) C, alpha(C) = C.
HomAlgebra central_extend(const HomAlgebra& A, const Cocycle& psi);
/// Drops C and the cocycle from a central extension.
HomAlgebra quotient_by_center(const HomAlgebra& ext);

/// [[x,y],a(z)] + [[y,z],a(x)] + [[z,x],a(y)].
Element hom_jacobi_residual(const HomAlgebra& A, const BasisSym& x, const BasisSym& y, const BasisSym& z);

/// Hom-Jacobi over all window triples (distinct symbols; repeated symbols vanish by skewness).
Report hom_jacobi_check(const HomAlgebra& A, const Window& w);
/// alpha([x,y]) == [alpha(x), alpha(y)] over all window pairs.
Report multiplicativity_check(const HomAlgebra& A, const Window& w);

}  // namespace homlie
