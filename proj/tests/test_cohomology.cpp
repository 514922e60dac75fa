#include <doctest.h>

#include "homlie/cohomology.hpp"
#include "homlie/errors.hpp"
#include "oracle.hpp"

using namespace homlie;

namespace {

const BasisSym L(std::int64_t n) { return BasisSym::L(n); }
const BasisSym M(std::int64_t n) { return BasisSym::M(n); }
QScalar qn(std::int64_t n) { return QScalar(qnumber(n)); }
QScalar ang(std::int64_t n) { return QScalar(angle(n)); }

Cocycle delta_form() {
  return Cocycle("delta", 0, [](const BasisSym& x, const BasisSym& y) {
    return x.family == Family::L && y.family == Family::L ? QScalar(1) : QScalar();
  });
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("beta and gamma values") {
  const Cocycle b = builtin_beta(), g = builtin_gamma();
  CHECK(b(L(1), L(-1)).is_zero());
  CHECK(b(L(2), L(-2)) == QScalar(1) / ang(2));
  CHECK(b(L(-2), L(2)) == -(QScalar(1) / ang(2)));
  CHECK(b(L(2), L(-3)).is_zero());
  for (std::int64_t m = -4; m <= 4; ++m)
    for (std::int64_t n = -4; n <= 4; ++n) {
      CHECK(g(M(m), M(n)).is_zero());
      CHECK(g(L(m), L(n)).is_zero());
      CHECK(b(M(m), M(n)).is_zero());
    }
  CHECK(g(L(3), M(-3)) == virasoro_type_value(3));
  CHECK(g(M(-3), L(3)) == -virasoro_type_value(3));
  // [m-1][m][m+1] / ([2][3]<m>) is odd in m
  for (std::int64_t m = 0; m <= 6; ++m) CHECK(virasoro_type_value(-m) == -virasoro_type_value(m));
}

TEST_CASE("cocycle identity") {
  const HomAlgebra A = make_wq();
  for (std::int64_t N = 1; N <= 8; ++N) {
    CHECK(verify_cocycle(A, builtin_beta(), Window(N)).passed());
    CHECK(verify_cocycle(A, builtin_gamma(), Window(N)).passed());
  }
  CHECK(verify_cocycle(A, Cocycle(0), Window(4)).passed());
  const Report bad = verify_cocycle(A, delta_form(), Window(4));
  CHECK(bad.status == Status::Fail);
  CHECK(cocycle_residual(A, delta_form(), L(1), L(2), L(-3)) == QScalar(2) * ang(3));
}

TEST_CASE("alpha invariance") {
  const HomAlgebra A = make_wq();
  CHECK(alpha_invariance_check(Cocycle(0), A, Window(3)).passed());
  const Report r = alpha_invariance_check(builtin_beta(), A, Window(3));
  CHECK(r.status == Status::Fail);
  // <2>^2 beta(L2, L-2) != beta(L2, L-2)
  const Cocycle b = builtin_beta();
  CHECK(b(A.alpha(L(2)), A.alpha(L(-2))) == ang(2) * ang(2) * b(L(2), L(-2)));
  CHECK(alpha_invariance_check(builtin_beta(), make_w22_classical(), Window(4)).passed());
}

TEST_CASE("coboundaries") {
  const HomAlgebra A = make_wq();
  const Window w(4);
  std::map<BasisSym, QScalar> fL{{L(0), QScalar(1)}}, fM{{M(0), QScalar(1)}};
  const Cocycle cL = coboundary(fL, A, 0), cM = coboundary(fM, A, 0);
  for (std::int64_t m = 1; m <= 4; ++m) {
    CHECK(cL(L(m), L(-m)) == qn(-2 * m));
    CHECK(cL(L(m), M(-m)).is_zero());
    CHECK(cM(L(m), M(-m)) == qn(-2 * m));
    CHECK(cM(L(m), L(-m)).is_zero());
  }
  CHECK(coboundary({}, A, 0)(L(1), L(-1)).is_zero());
  // B^2 inside Z^2
  for (std::int64_t d = -2; d <= 2; ++d)
    for (const auto& t : A.symbols(w)) {
      if (t.degree != d) continue;
      std::map<BasisSym, QScalar> f{{t, QScalar::q() + QScalar(3)}};
      CHECK(verify_cocycle(A, coboundary(f, A, d), w).passed());
    }
}

TEST_CASE("H^2 dimensions match a brute-force oracle") {
  const HomAlgebra A = make_wq();
  for (std::int64_t N = 2; N <= 5; ++N)
    for (std::int64_t d : {0, 1, -2}) {
      const SolveResult r = solve_h2(A, d, Window(N));
      const auto o = oracle::h2_dims(N, Rational(3, 2), false, d);
      CAPTURE(N);
      CAPTURE(d);
      CHECK(r.dims.z2 == o.z2);
      CHECK(r.dims.b2 == o.b2);
      CHECK(r.dims.h2 == o.h2);
      CHECK(r.dims.z2 == r.dims.b2 + r.dims.h2);
    }
}

TEST_CASE("sector 0 of W_q") {
  const HomAlgebra A = make_wq();
  for (std::int64_t N = 4; N <= 6; ++N) CHECK(solve_h2(A, 0, Window(N)).dims.h2 == 2);
  const SolveResult r = solve_h2(A, 0, Window(4));
  REQUIRE(r.representatives.size() == 2);
  for (const auto& rep : r.representatives) {
    std::size_t first = 0;
    while (rep[first].is_zero()) ++first;
    CHECK(rep[first] == QScalar(1));
  }
  const std::vector<DenseVec> bg{to_vector(builtin_beta(), r.unknowns), to_vector(builtin_gamma(), r.unknowns)};
  std::vector<DenseVec> all = r.representatives;
  all.insert(all.end(), bg.begin(), bg.end());
  CHECK(rank_modulo_coboundaries(r, bg) == 2);
  CHECK(rank_modulo_coboundaries(r, all) == 2);
  // every representative is a cocycle
  for (std::size_t i = 0; i < r.representatives.size(); ++i)
    CHECK(verify_cocycle(A, from_vector("rep", 0, r.unknowns, r.representatives[i]), Window(4)).passed());
}

TEST_CASE("nonzero sectors of W_q are coboundaries") {
  const HomAlgebra A = make_wq();
  for (std::int64_t d : {1, -1, 2, 3}) CHECK(solve_h2(A, d, Window(5)).dims.h2 == 0);
}

TEST_CASE("classical W(2,2) sector 0") {
  const HomAlgebra W = make_w22_classical();
  for (std::int64_t N = 4; N <= 6; ++N) {
    const SolveResult r = solve_h2(W, 0, Window(N));
    CHECK(r.dims.h2 == 2);
    const auto o = oracle::h2_dims(N, Rational(2), true);
    CHECK(r.dims.z2 == o.z2);
    CHECK(r.dims.b2 == o.b2);
  }
}

TEST_CASE("no constraints means every unknown is free") {
  const HomAlgebra abelian("abelian", {Family::L}, [](const BasisSym&, const BasisSym&) { return Element(); },
                           [](const BasisSym& x) { return Element(x); });
  const SolveResult r = solve_h2(abelian, 0, Window(3));
  CHECK(r.constraints == 0);
  CHECK(r.dims.z2 == static_cast<std::int64_t>(r.unknowns.size()));
  CHECK(r.dims.b2 == 0);
}

TEST_CASE("cocycle construction validation") {
  using E = Cocycle::Entry;
  CHECK_THROWS_AS(Cocycle::from_entries("x", 0, {E{L(1), L(1), QScalar(1)}}), DomainError);
  CHECK_THROWS_AS(Cocycle::from_entries("x", 0, {E{L(1), L(-1), QScalar(1)}, E{L(-1), L(1), QScalar(1)}}), DomainError);
  CHECK_THROWS_AS(Cocycle::from_entries("x", 0, {E{L(1), L(2), QScalar(1)}}), DomainError);
  const Cocycle c = Cocycle::from_entries("x", 0, {E{L(1), L(-1), QScalar(2)}, E{L(-1), L(1), QScalar(-2)}});
  CHECK(c(L(-1), L(1)) == QScalar(-2));
  CHECK(c(Element(L(1)) * QScalar(3), Element(L(-1)) + Element(M(-1))) == QScalar(6));
}

}  // TEST_SUITE
