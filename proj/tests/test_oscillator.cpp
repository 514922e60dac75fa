#include <doctest.h>

#include <random>

#include "homlie/errors.hpp"
#include "homlie/oscillator.hpp"
#include "oracle.hpp"

using namespace homlie;

namespace {

using O = OscElement;

O mono(std::int64_t ap, std::int64_t an, int bp = 0, int bn = 0, long c = 1) {
  return O::monomial(ap, an, bp, bn, QScalar(c));
}

// Acts with an element whose coefficients are rational constants.
oracle::State act_on(const O& x, const oracle::State& v) {
  oracle::State out;
  for (const auto& [m, c] : x.terms()) {
    REQUIRE(c.is_polynomial());
    const Rational r = c.num().coeff(0);
    for (const auto& [key, val] : oracle::apply_monomial(m.ap, m.an, m.bp, m.bn, v)) out[key] += r * val;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<oracle::State> probes() {
  std::vector<oracle::State> out;
  for (std::int64_t k = -4; k <= 4; ++k)
    for (int f : {0, 1}) {
      oracle::State v;
      v[{k, f}] = 1;
      out.push_back(v);
    }
  return out;
}

O random_element(std::mt19937& rng) {
  O out;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < terms; ++i)
    out += mono(static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 3),
                static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), static_cast<long>(rng() % 5) - 2);
  return out;
}

}  // namespace

TEST_SUITE("oscillator") {

TEST_CASE("basic relations") {
  const O a = O::a(), ap = O::a_plus(), b = O::b(), bp = O::b_plus(), one = O::one();
  CHECK(commutator(a, ap) == one);
  CHECK(b * bp + bp * b == one);
  CHECK((b * b).is_zero());
  CHECK((bp * bp).is_zero());
  CHECK(commutator(a, b).is_zero());
  CHECK(commutator(ap, bp).is_zero());
  CHECK(a * ap == ap * a + one);
  CHECK(b * bp == one - bp * b);
}

TEST_CASE("rendering") {
  CHECK(to_string(O::one()) == "1");
  CHECK(to_string(O::a_plus()) == "a+");
  CHECK(to_string(mono(-1, 1, 1, 0)) == "(a+)^-1 a b+");
  CHECK(to_string(mono(3, 2, 1, 1)) == "(a+)^3 a^2 b+ b");
  CHECK(to_string(O()) == "0");
  CHECK(to_string(mono(2, 1) - mono(0, 0, 0, 0, 3)) == "-3 + (a+)^2 a");
}

TEST_CASE("a through powers of a+") {
  for (std::int64_t i = -8; i <= 8; ++i) {
    CAPTURE(i);
    const O expected = i == 0 ? O() : mono(i - 1, 0, 0, 0, static_cast<long>(i));
    CHECK(commutator(O::a(), mono(i, 0)) == expected);
  }
  CHECK(mono(0, 2) * mono(2, 0) == mono(2, 2) + mono(1, 1, 0, 0, 4) + mono(0, 0, 0, 0, 2));
}

TEST_CASE("products agree with the operator model") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const O x = random_element(rng), y = random_element(rng);
    const O xy = x * y;
    for (const auto& v : probes()) CHECK((act_on(xy, v) == act_on(x, act_on(y, v))));
  }
}

TEST_CASE("associativity") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const O x = random_element(rng), y = random_element(rng), z = random_element(rng);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("commutator is bilinear, skew and satisfies Jacobi") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const O x = random_element(rng), y = random_element(rng), z = random_element(rng);
    const QScalar c = QScalar::q() + QScalar(2);
    CHECK(commutator(x + c * y, z) == commutator(x, z) + c * commutator(y, z));
    CHECK(commutator(x, y) == -commutator(y, x));
    CHECK((commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))).is_zero());
  }
}

TEST_CASE("realization of W(2,2)") {
  CHECK(realize(BasisSym::L(2)) == mono(3, 1));
  CHECK(realize(BasisSym::M(-1)) == mono(0, 1, 1, 0));
  CHECK_THROWS_AS(realize(BasisSym::C()), DomainError);
  const Report r = verify_realization(Window(5));
  CHECK(r.passed());
  CHECK(r.dims.at("pairs.LL") == 121);
  CHECK(r.dims.at("pairs.MM") == 121);
  for (std::int64_t n = -3; n <= 3; ++n)
    for (std::int64_t m = -3; m <= 3; ++m) CHECK(commutator(realize(BasisSym::M(n)), realize(BasisSym::M(m))).is_zero());
}

TEST_CASE("a corrupted realization is rejected") {
  const Realization bad = [](const BasisSym& s) {
    if (s == BasisSym::L(0)) return O::a();
    return realize(s);
  };
  const Report r = verify_realization(Window(2), bad);
  CHECK(r.status == Status::Fail);
  CHECK(r.violations > 0);
  // with L0 -> a: [a, (a+)^2 a] - [1] (a+)^2 a
  const O r01 = commutator(bad(BasisSym::L(0)), bad(BasisSym::L(1))) - realize(BasisSym::L(1));
  CHECK(r01 == mono(1, 1, 0, 0, 2) - mono(2, 1));
}

TEST_CASE("q-brackets of the realization") {
  const O x = realize(BasisSym::L(1)), y = realize(BasisSym::L(2));
  const QScalar q = QScalar::q(), qi = q.inverse();
  const O residual = q_bracket(x, y, -1, 1) - QScalar(qnumber(1)) * realize(BasisSym::L(3));
  CHECK(residual == (qi - q) * mono(5, 2) + (QScalar(3) * qi - QScalar(2) * q - QScalar(1)) * mono(4, 1));
  CHECK(q_bracket(x, y, 0, 0) == commutator(x, y));
  const Report r = q_realization_report(Window(3));
  CHECK(r.status == Status::Info);
  CHECK(r.dims.at("vanishing.MM") == r.dims.at("pairs.MM"));
  CHECK(r.dims.at("vanishing.LL") < r.dims.at("pairs.LL"));
}

TEST_CASE("monomial validation") {
  CHECK_THROWS_AS(O::monomial(0, -1, 0, 0), DomainError);
  CHECK_THROWS_AS(O::monomial(0, 0, 2, 0), DomainError);
  CHECK(mono(1, 0) * QScalar() == O());
}

}  // TEST_SUITE
