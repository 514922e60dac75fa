#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "homlie/errors.hpp"
#include "homlie/parser.hpp"

using namespace homlie;

namespace {

const QScalar q = QScalar::q();

template <class F>
void expect_parse_error(F f, int line, int column) {
  try {
    f();
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_SUITE("parser") {

TEST_CASE("elements") {
  CHECK(parse_element("L[1] + q*M[-2]") == Element(BasisSym::L(1)) + q * Element(BasisSym::M(-2)));
  CHECK(parse_element("[3]*L[0] - <2>/2*C") ==
        QScalar(qnumber(3)) * Element(BasisSym::L(0)) - QScalar(angle(2)) / QScalar(2) * Element(BasisSym::C()));
  CHECK(parse_element("2*(L[1]+M[1])") == QScalar(2) * (Element(BasisSym::L(1)) + Element(BasisSym::M(1))));
  CHECK(parse_element(" L[ 3 ] ") == Element(BasisSym::L(3)));
  CHECK(parse_element("0").is_zero());
  CHECK(parse_element("L[1] - L[1]").is_zero());
  CHECK(parse_element("-L[-4]") == -Element(BasisSym::L(-4)));
}

TEST_CASE("scalars") {
  CHECK(parse_scalar("(q+1)^2") == q * q + QScalar(2) * q + QScalar(1));
  CHECK(parse_scalar("q^-2") == q.pow(-2));
  CHECK(parse_scalar("[2]/[4]") == q.pow(2) / (q.pow(4) + QScalar(1)));
  CHECK(parse_scalar("1/2 - 3/4") == QScalar(Rational(-1, 4)));
  CHECK(parse_scalar("<0>") == QScalar(2));
  CHECK(parse_scalar("[-3]") == -QScalar(qnumber(3)));
}

TEST_CASE("errors carry positions") {
  expect_parse_error([] { parse_element("L[1"); }, 1, 3);
  expect_parse_error([] { parse_element(""); }, 1, 1);
  expect_parse_error([] { parse_element("L[1]*M[2]"); }, 1, 5);
  expect_parse_error([] { parse_element("1 + L[1]"); }, 1, 3);
  expect_parse_error([] { parse_element("L[1] )"); }, 1, 6);
  expect_parse_error([] { parse_element("2"); }, 1, 1);
  expect_parse_error([] { parse_scalar("L[1]"); }, 1, 1);
  CHECK_THROWS_AS(parse_element("X[1]"), UnknownSymbolError);
  CHECK_THROWS_WITH_AS(parse_element("L[1] + Y"), "line 1, column 8: unknown symbol 'Y'", UnknownSymbolError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ArithmeticError);
  CHECK_THROWS_AS(parse_scalar("1/([2] - q - q^-1)"), ArithmeticError);
}

TEST_CASE("rendered elements parse back") {
  const std::vector<QScalar> coeffs{QScalar(1),
                                    QScalar(-1),
                                    QScalar(Rational(3, 7)),
                                    q,
                                    -q.pow(-3),
                                    q + QScalar(Rational(-1, 2)),
                                    QScalar(qnumber(4)),
                                    QScalar(1) / QScalar(angle(2)),
                                    (q - QScalar(3)) / (q.pow(2) + QScalar(1)),
                                    -QScalar(qnumber(2)) * QScalar(qnumber(3)) / QScalar(angle(5))};
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    Element e;
    const int terms = static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
      const int fam = static_cast<int>(rng() % 3);
      const auto n = static_cast<std::int64_t>(rng() % 11) - 5;
      const BasisSym s = fam == 0 ? BasisSym::L(n) : fam == 1 ? BasisSym::M(n) : BasisSym::C();
      e += coeffs[rng() % coeffs.size()] * Element(s);
    }
    const std::string text = to_string(e);
    CAPTURE(text);
    CHECK(parse_element(text) == e);
  }
  for (const auto& c : coeffs) CHECK(parse_scalar(to_string(c)) == c);
}

TEST_CASE("cocycle files") {
  const Cocycle psi = parse_cocycle(
      "# a form on sector 0\n"
      "L 2 L -2 1/<2>\n"
      "\n"
      "L 1 M -1  [3] # trailing comment\n",
      "test");
  CHECK(psi.sector() == 0);
  CHECK(psi(BasisSym::L(2), BasisSym::L(-2)) == QScalar(1) / QScalar(angle(2)));
  CHECK(psi(BasisSym::L(-2), BasisSym::L(2)) == -QScalar(1) / QScalar(angle(2)));
  CHECK(psi(BasisSym::M(-1), BasisSym::L(1)) == -QScalar(qnumber(3)));
  CHECK(psi(BasisSym::L(3), BasisSym::L(-3)).is_zero());
  CHECK(parse_cocycle("", "empty")(BasisSym::L(1), BasisSym::L(-1)).is_zero());

  expect_parse_error([] { parse_cocycle("L 1 L -1 1\nL 1 L 2 1\n", "x"); }, 2, 1);
  expect_parse_error([] { parse_cocycle("L 1 L\n", "x"); }, 1, 6);
  CHECK_THROWS_AS(parse_cocycle("Q 1 L -1 1\n", "x"), UnknownSymbolError);
  expect_parse_error([] { parse_cocycle("L 1 L -1 (1\n", "x"); }, 1, 11);

  const std::string path = "homlie_parser_test.cocycle";
  std::ofstream(path) << "L 3 M -3 q\n";
  const Cocycle f = load_cocycle_file(path);
  CHECK(f.name() == "file:" + path);
  CHECK(f(BasisSym::L(3), BasisSym::M(-3)) == q);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_cocycle_file("/nonexistent/file"), DomainError);
}

}  // TEST_SUITE
