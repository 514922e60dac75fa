#pragma once

// Reports backing the `check` and `solve` commands, and the full claim sweep.

#include <cstdint>
#include <string>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/cohomology.hpp"
#include "homlie/derivations.hpp"
#include "homlie/report.hpp"

namespace homlie {

/// q-number identities for all |m|, |n| <= bound.
Report qnumber_identity_check(std::int64_t bound);

/// solve_h2 as an INFO report with dims and rendered representatives.
Report h2_report(const HomAlgebra& A, std::int64_t sector, const Window& w);
/// h2 == 2 in sector 0 of W_q at every window from 4 (or N if smaller) to N.
Report h2_dimension_check(const Window& w);
/// {beta, gamma} span the sector-0 representatives modulo coboundaries.
Report h2_span_check(const Window& w);

/// Hom-Jacobi of central_extend(W_q, psi).
Report central_extension_check(const Cocycle& psi, const Window& w);
/// Extension by psi(L_-m, L_m) = 1 must fail Hom-Jacobi.
Report non_cocycle_extension_check(const Window& w);

/// solve_derivations as an INFO report with the rendered basis.
Report derivation_report(const HomAlgebra& A, int k, std::int64_t s, const Window& w, bool equivariance);
/// k = 0, s = 0 basis is (n, 0, 0, n), (0, n, 0, 0), (0, 0, 0, 1).
Report der0_basis_check(const Window& w);
/// dim 0 for every k in ks and |s| <= smax.
Report alpha_k_vanishing_check(const Window& w, const std::vector<int>& ks, std::int64_t smax);
/// k = 0, s != 0 with equivariance: dim 0.
Report shifted_equivariant_vanishing_check(const Window& w, std::int64_t smax);

/// Every claim check, in a fixed order.
std::vector<Report> claim_sweep(const Window& w);

std::vector<std::string> render_derivation(const DerivationTable& D);
std::vector<std::string> render_pairs(const std::vector<SymPair>& unknowns, const DenseVec& v);

}  // namespace homlie
