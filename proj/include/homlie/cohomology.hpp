#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/cocycle.hpp"
#include "homlie/linsolve.hpp"
#include "homlie/report.hpp"

namespace homlie {

using SymPair = std::pair<BasisSym, BasisSym>;

/// [m-1]_q [m]_q [m+1]_q / ([2]_q [3]_q <m>_q).
QScalar virasoro_type_value(std::int64_t m);

/// beta(L_m, L_{-m}) = virasoro_type_value(m), zero elsewhere.
Cocycle builtin_beta();
/// gamma(L_m, M_{-m}) = virasoro_type_value(m), zero elsewhere.
Cocycle builtin_gamma();

/// psi(a(x),[y,z]) + psi(a(y),[z,x]) + psi(a(z),[x,y]).
QScalar cocycle_residual(const HomAlgebra& A, const Cocycle& psi, const BasisSym& x, const BasisSym& y,
                         const BasisSym& z);

/// Cocycle identity over window triples whose degrees sum to psi.sector().
Report verify_cocycle(const HomAlgebra& A, const Cocycle& psi, const Window& w);

/// psi(a(x), a(y)) == psi(x, y) over window pairs.
Report alpha_invariance_check(const Cocycle& psi, const HomAlgebra& A, const Window& w);

/// psi_f(x, y) = f([x, y]), evaluated lazily. Only values of f on
/// degree-`sector` symbols can contribute.
Cocycle coboundary(const std::map<BasisSym, QScalar>& f, const HomAlgebra& A, std::int64_t sector);

/// Canonical window pairs of a sector, in solver column order
/// (family pair, |deg x| + |deg y|, deg x, deg y).
std::vector<SymPair> sector_pairs(const HomAlgebra& A, std::int64_t sector, const Window& w);

/// Window-closed cocycle identities on the sector-d unknowns.
ConstraintSystem assemble_cocycle_constraints(const HomAlgebra& A, std::int64_t sector, const Window& w);

struct CohomologyDims {
  std::int64_t z2 = 0;
  std::int64_t b2 = 0;
  std::int64_t h2 = 0;
};

struct SolveResult {
  std::int64_t sector = 0;
  std::vector<SymPair> unknowns;
  std::size_t constraints = 0;
  std::size_t rank = 0;
  std::vector<DenseVec> nullspace_basis;   // Z^2 in the window
  std::vector<DenseVec> coboundary_basis;  // B^2 in the window, reduced echelon
  std::vector<DenseVec> representatives;   // Z^2 reduced modulo B^2, reduced echelon
  CohomologyDims dims;
};

SolveResult solve_h2(const HomAlgebra& A, std::int64_t sector, const Window& w);

DenseVec to_vector(const Cocycle& psi, const std::vector<SymPair>& unknowns);
Cocycle from_vector(std::string name, std::int64_t sector, const std::vector<SymPair>& unknowns, const DenseVec& v);

/// dim of span(vecs) + B^2 minus dim B^2.
std::size_t rank_modulo_coboundaries(const SolveResult& r, const std::vector<DenseVec>& vecs);

}  // namespace homlie
