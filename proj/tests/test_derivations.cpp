#include <doctest.h>

#include <array>
#include <set>

#include "homlie/derivations.hpp"
#include "homlie/errors.hpp"
#include "oracle.hpp"

using namespace homlie;

namespace {

BasisSym L(std::int64_t n) { return BasisSym::L(n); }
BasisSym M(std::int64_t n) { return BasisSym::M(n); }
QScalar qn(std::int64_t n) { return QScalar(qnumber(n)); }

// D(L_n) = a(n) L_{n+s} + b(n) M_{n+s}, D(M_n) = c(n) L_{n+s} + d(n) M_{n+s}.
template <class F>
DerivationTable table(int k, std::int64_t s, std::int64_t N, F abcd) {
  DerivationTable D(k, s);
  for (std::int64_t n = -N; n <= N; ++n) {
    if (n + s < -N || n + s > N) continue;
    const auto [a, b, c, d] = abcd(n);
    D.set(L(n), a * Element(L(n + s)) + b * Element(M(n + s)));
    D.set(M(n), c * Element(L(n + s)) + d * Element(M(n + s)));
  }
  return D;
}

using Coeffs = std::array<QScalar, 4>;

}  // namespace

TEST_SUITE("derivations") {

TEST_CASE("solution dimensions match a dense oracle") {
  const HomAlgebra A = make_wq();
  for (int k : {0, 1, 2})
    for (std::int64_t s : {-2, 0, 1, 3})
      for (bool eq : {false, true}) {
        const std::int64_t N = 4;
        CAPTURE(k);
        CAPTURE(s);
        CAPTURE(eq);
        const auto space = solve_derivations(A, k, s, Window(N), eq);
        CHECK(static_cast<std::int64_t>(space.dim()) == oracle::der_dim(k, s, N, Rational(5, 2), eq));
      }
  for (std::int64_t s : {0, 2}) {
    const auto space = solve_derivations(make_w22_classical(), 0, s, Window(4), false);
    CHECK(static_cast<std::int64_t>(space.dim()) == oracle::der_dim(0, s, 4, Rational(2), false, true));
  }
}

TEST_CASE("degree-zero derivations") {
  const HomAlgebra A = make_wq();
  for (std::int64_t N = 3; N <= 6; ++N) CHECK(solve_derivations(A, 0, 0, Window(N), false).dim() == 3);
  CHECK(solve_derivations(A, 0, 0, Window(4), true).dim() == 3);

  const std::int64_t N = 5;
  const auto space = solve_derivations(A, 0, 0, Window(N), false);
  const std::vector<DerivationTable> expected{
      table(0, 0, N, [](std::int64_t n) { return Coeffs{QScalar(n), QScalar(), QScalar(), QScalar(n)}; }),
      table(0, 0, N, [](std::int64_t n) { return Coeffs{QScalar(), QScalar(n), QScalar(), QScalar()}; }),
      table(0, 0, N, [](std::int64_t) { return Coeffs{QScalar(), QScalar(), QScalar(), QScalar(1)}; }),
  };
  for (const auto& D : expected) CHECK(verify_derivation(A, 0, D, Window(N)).passed());
  std::vector<DenseVec> vs;
  for (const auto& D : space.basis) vs.push_back(table_to_vector(D, space.columns));
  for (const auto& D : expected) vs.push_back(table_to_vector(D, space.columns));
  CHECK(rank_of(vs) == 3);

  const auto qdeg = table(0, 0, N, [](std::int64_t n) { return Coeffs{qn(n), QScalar(), QScalar(), qn(n)}; });
  CHECK_FALSE(verify_derivation(A, 0, qdeg, Window(N)).passed());
}

TEST_CASE("twisted and shifted derivations vanish") {
  const HomAlgebra A = make_wq();
  for (int k : {1, 2})
    for (std::int64_t s = -4; s <= 4; ++s) CHECK(solve_derivations(A, k, s, Window(5), false).dim() == 0);
  for (std::int64_t s : {-3, -1, 1, 2}) {
    CHECK(solve_derivations(A, 0, s, Window(5), false).dim() == 0);
    CHECK(solve_derivations(A, 0, s, Window(5), true).dim() == 0);
  }
}

TEST_CASE("equivariance rows") {
  const HomAlgebra A = make_wq();
  const auto sys = assemble_equivariance(A, 0, 2, Window(4));
  // <n> = <n + 2> only at n = -1
  std::set<std::size_t> constrained;
  for (const auto& row : sys.system.rows())
    for (const auto& [c, v] : row) constrained.insert(c);
  for (std::size_t i = 0; i < sys.columns.size(); ++i) {
    const auto& [src, tgt] = sys.columns[i];
    CHECK((src.degree == -1) == (constrained.count(i) == 0));
  }
  CHECK(assemble_equivariance(A, 0, 0, Window(4)).system.rows().empty());
}

TEST_CASE("solver output satisfies the verifier") {
  const HomAlgebra A = make_wq();
  for (int k : {0, 1})
    for (std::int64_t s : {0, 1}) {
      const auto space = solve_derivations(A, k, s, Window(4), false);
      for (const auto& D : space.basis) CHECK(verify_derivation(A, k, D, Window(4)).passed());
    }
}

TEST_CASE("Leibniz residuals are found") {
  const HomAlgebra A = make_wq();
  auto D = table(0, 0, 4, [](std::int64_t n) { return Coeffs{QScalar(n), QScalar(), QScalar(), QScalar(n)}; });
  D.set(L(1), Element(L(1)) * QScalar(2));
  const Report r = verify_derivation(A, 0, D, Window(4));
  CHECK(r.status == Status::Fail);
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples.front().kind == "pair");
}

TEST_CASE("window growth does not add solutions") {
  const HomAlgebra A = make_wq();
  std::size_t prev = 1000;
  for (std::int64_t N = 2; N <= 6; ++N) {
    const std::size_t d = solve_derivations(A, 0, 0, Window(N), false).dim();
    CHECK(d <= prev);
    prev = d;
  }
}

TEST_CASE("table round trip and lookup") {
  const HomAlgebra A = make_wq();
  const auto space = solve_derivations(A, 0, 0, Window(3), false);
  for (const auto& D : space.basis) {
    const DenseVec v = table_to_vector(D, space.columns);
    const DerivationTable back = table_from_vector(0, 0, space.columns, v);
    CHECK(table_to_vector(back, space.columns) == v);
  }
  const DerivationTable& D = space.basis.front();
  CHECK_THROWS_AS(D(L(10)), UnknownSymbolError);
  CHECK(D.apply(Element(L(1)) + Element(L(2))) == D(L(1)) + D(L(2)));
}

TEST_CASE("commutators of derivations are derivations") {
  const HomAlgebra A = make_wq();
  const auto space = solve_derivations(A, 0, 0, Window(4), false);
  for (const auto& D1 : space.basis)
    for (const auto& D2 : space.basis) {
      const DerivationTable C = commutator(D1, D2);
      CHECK(verify_derivation(A, 0, C, Window(4)).passed());
    }
  const auto& D = space.basis.front();
  CHECK(commutator(D, D).is_zero());
}

TEST_CASE("degree decomposition") {
  std::map<BasisSym, Element> D;
  D[L(1)] = Element(L(1)) + Element(M(3)) * QScalar(2);
  D[L(2)] = Element(L(4)) * QScalar::q();
  const auto parts = decompose_by_degree(D, 0);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(0)(L(1)) == Element(L(1)));
  CHECK(parts.at(2)(L(1)) == Element(M(3)) * QScalar(2));
  CHECK(parts.at(2)(L(2)) == Element(L(4)) * QScalar::q());
  CHECK(parts.at(0)(L(2)).is_zero());
}

TEST_CASE("inner maps") {
  const HomAlgebra A = make_wq();
  const DerivationTable D = inner_map(A, 0, Element(L(0)), Window(4));
  for (std::int64_t n = -4; n <= 4; ++n) {
    CHECK(D(L(n)) == -qn(n) * Element(L(n)));
    CHECK(D(M(n)) == -qn(n) * Element(M(n)));
  }
  CHECK(inner_map(A, 0, Element(), Window(3)).is_zero());
  // <n>[n] is not additive in n
  CHECK_FALSE(verify_derivation(A, 0, D, Window(4)).passed());
  CHECK(verify_derivation(make_w22_classical(), 0, inner_map(make_w22_classical(), 0, Element(L(0)), Window(4)), Window(4)).passed());
}

TEST_CASE("inner-map and H^1 reports") {
  const Report r = inner_map_leibniz_check(Window(4));
  CHECK(r.status == Status::Discrepant);
  CHECK(r.violations > 0);
  const Report h = h1_report(Window(5));
  CHECK(h.dims.at("der0") == 3);
  CHECK(h.dims.at("inner_span") == 2);
  CHECK(h.dims.at("inner_maps_passing_leibniz") == 0);
  CHECK(h.dims.at("der0_minus_inner_formal") == 1);
  CHECK(h.dims.at("h1_inner_as_derivations") == 3);
  CHECK(h.status == Status::Discrepant);
}

TEST_CASE("lemma checks") {
  for (std::int64_t n : {1, 2, -1, -3}) {
    CAPTURE(n);
    const Report r = lemma_h1_w0_check(n);
    CHECK(r.passed());
    CHECK(r.dims.at("quotient") == 0);
  }
  CHECK_THROWS(lemma_h1_w0_check(0));
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {0, 5}, {2, -1}}) {
    CAPTURE(m);
    CAPTURE(n);
    CHECK(lemma_hom_vanish_check(m, n).passed());
  }
  const Report r = lemma_hom_vanish_check(3, -3);
  CHECK(r.status == Status::Discrepant);
  CHECK(r.dims.at("morphisms") == 0);
  CHECK(r.dims.at("equivariance_only") == 4);
}

TEST_CASE("representations") {
  const HomAlgebra A = make_wq();
  CHECK(verify_representation(A, adjoint_module(A), Window(3)).passed());
  CHECK(verify_representation(A, ideal_m_module(A), Window(3)).passed());
  CHECK(verify_representation(make_w22_classical(), adjoint_module(make_w22_classical()), Window(3)).passed());
  const HomModule V = ideal_m_module(A);
  CHECK(act(V, Element(L(1)), Element(M(2))) == qn(1) * Element(M(3)));
  CHECK_THROWS_AS(act(V, Element(L(1)), Element(L(2))), UnknownSymbolError);
}

TEST_CASE("argument validation") {
  const HomAlgebra A = make_wq();
  CHECK_THROWS_AS(solve_derivations(A, -1, 0, Window(3), false), DomainError);
}

}  // TEST_SUITE
