#include "homlie/parser.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int line, int column) : s_(text), line_(line), col_(column), last_line_(line), last_col_(column) {}

  Expr parse() {
    Expr e = expr();
    if (peek() != '\0') fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  char advance() {
    last_line_ = line_;
    last_col_ = col_;
    ++col_;
    return s_[pos_++];
  }

  // Position of the next token, or of the last character at the end of input.
  std::pair<int, int> here() {
    skip_ws();
    if (pos_ < s_.size()) return {line_, col_};
    return {last_line_, last_col_};
  }

  [[noreturn]] void fail(const std::string& what) {
    const auto [l, c] = here();
    throw ParseError(what, l, c);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  Expr node(Expr::Kind k) {
    Expr e;
    e.kind = k;
    std::tie(e.line, e.column) = here();
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek() == '+' || peek() == '-') {
      Expr op = node(peek() == '+' ? Expr::Kind::Add : Expr::Kind::Sub);
      advance();
      op.args.push_back(std::move(lhs));
      op.args.push_back(term());
      lhs = std::move(op);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek() == '*' || peek() == '/') {
      Expr op = node(peek() == '*' ? Expr::Kind::Mul : Expr::Kind::Div);
      advance();
      op.args.push_back(std::move(lhs));
      op.args.push_back(factor());
      lhs = std::move(op);
    }
    return lhs;
  }

  Expr factor() {
    if (peek() == '-') {
      Expr neg = node(Expr::Kind::Neg);
      advance();
      neg.args.push_back(factor());
      return neg;
    }
    Expr base = atom();
    if (peek() != '^') return base;
    Expr pw = node(Expr::Kind::Pow);
    advance();
    pw.index = integer();
    pw.args.push_back(std::move(base));
    return pw;
  }

  std::string digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += advance();
    return out;
  }

  std::int64_t integer() {
    const auto [l, c] = here();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      advance();
    }
    mpz_class v(digits());
    if (neg) v = -v;
    if (!v.fits_slong_p()) throw ParseError("integer out of range", l, c);
    return v.get_si();
  }

  Expr atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::Integer);
      e.integer = Rational(mpz_class(digits()));
      return e;
    }
    if (c == '(') {
      advance();
      Expr e = expr();
      expect(')');
      return e;
    }
    if (c == '[' || c == '<') {
      Expr e = node(c == '[' ? Expr::Kind::QNumber : Expr::Kind::Angle);
      advance();
      e.index = integer();
      expect(c == '[' ? ']' : '>');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const auto [l, col] = here();
      std::string name;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name += advance();
      Expr e;
      e.line = l;
      e.column = col;
      if (name == "q") {
        e.kind = Expr::Kind::Q;
      } else if (name == "C") {
        e.kind = Expr::Kind::Symbol;
        e.symbol = BasisSym::C();
      } else if (name == "L" || name == "M") {
        e.kind = Expr::Kind::Symbol;
        expect('[');
        const std::int64_t n = integer();
        expect(']');
        e.symbol = name == "L" ? BasisSym::L(n) : BasisSym::M(n);
      } else {
        throw UnknownSymbolError("line " + std::to_string(l) + ", column " + std::to_string(col) +
                                 ": unknown symbol '" + name + "'");
      }
      return e;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_, col_;
  int last_line_, last_col_;
};

[[noreturn]] void type_error(const Expr& e, const std::string& what) { throw ParseError(what, e.line, e.column); }

ExprValue scalar(QScalar s) { return {true, std::move(s), {}}; }
ExprValue element(Element x) { return {false, {}, std::move(x)}; }

}  // namespace

Expr parse_expr(std::string_view text, int line, int column) { return Parser(text, line, column).parse(); }

ExprValue evaluate(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Integer: return scalar(QScalar(e.integer));
    case K::Q: return scalar(QScalar::q());
    case K::QNumber: return scalar(QScalar(qnumber(e.index)));
    case K::Angle: return scalar(QScalar(angle(e.index)));
    case K::Symbol: return element(Element(e.symbol));
    default: break;
  }
  const ExprValue a = evaluate(e.args[0]);
  if (e.kind == K::Neg) return a.is_scalar ? scalar(-a.scalar) : element(-a.element);
  if (e.kind == K::Pow) {
    if (!a.is_scalar) type_error(e, "cannot raise an element to a power");
    if (a.scalar.is_zero() && e.index < 0) throw ArithmeticError("division by zero");
    return scalar(a.scalar.pow(e.index));
  }
  const ExprValue b = evaluate(e.args[1]);
  switch (e.kind) {
    case K::Add:
    case K::Sub:
      if (a.is_scalar != b.is_scalar) type_error(e, "cannot add a scalar and an element");
      if (a.is_scalar) return scalar(e.kind == K::Add ? a.scalar + b.scalar : a.scalar - b.scalar);
      return element(e.kind == K::Add ? a.element + b.element : a.element - b.element);
    case K::Mul:
      if (a.is_scalar && b.is_scalar) return scalar(a.scalar * b.scalar);
      if (a.is_scalar) return element(a.scalar * b.element);
      if (b.is_scalar) return element(a.element * b.scalar);
      type_error(e, "cannot multiply two elements");
    case K::Div:
      if (!b.is_scalar) type_error(e, "cannot divide by an element");
      if (b.scalar.is_zero()) throw ArithmeticError("division by zero");
      if (a.is_scalar) return scalar(a.scalar / b.scalar);
      return element(a.element * b.scalar.inverse());
    default: break;
  }
  type_error(e, "malformed expression");
}

Element parse_element(std::string_view text) {
  const Expr e = parse_expr(text);
  ExprValue v = evaluate(e);
  if (v.is_scalar) {
    if (v.scalar.is_zero()) return {};
    throw ParseError("expected an element, got a scalar", e.line, e.column);
  }
  return v.element;
}

QScalar parse_scalar(std::string_view text) {
  const Expr e = parse_expr(text);
  ExprValue v = evaluate(e);
  if (!v.is_scalar) throw ParseError("expected a scalar, got an element", e.line, e.column);
  return v.scalar;
}

Cocycle parse_cocycle(std::string_view text, std::string name) {
  std::vector<Cocycle::Entry> entries;
  std::optional<std::int64_t> sector;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    // Four whitespace-separated fields, then the scalar.
    std::size_t pos = 0;
    auto field = [&](int& column) -> std::string {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      column = static_cast<int>(pos) + 1;
      std::string out;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) out += line[pos++];
      return out;
    };
    int col = 1;
    const std::string f1 = field(col);
    if (f1.empty()) continue;
    BasisSym syms[2];
    for (int i = 0; i < 2; ++i) {
      const std::string fam = i == 0 ? f1 : field(col);
      int fcol = col;
      if (fam != "L" && fam != "M") {
        if (fam.empty()) throw ParseError("expected a family letter", line_no, fcol);
        throw UnknownSymbolError("line " + std::to_string(line_no) + ", column " + std::to_string(fcol) +
                                 ": unknown family '" + fam + "'");
      }
      const std::string deg = field(col);
      std::int64_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoll(deg, &used);
        if (used != deg.size()) throw std::invalid_argument(deg);
      } catch (const std::logic_error&) {
        throw ParseError("expected an integer degree", line_no, col);
      }
      syms[i] = {fam == "L" ? Family::L : Family::M, n};
    }
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == line.size()) throw ParseError("expected a value", line_no, static_cast<int>(pos) + 1);
    const Expr e = parse_expr(line.substr(pos), line_no, static_cast<int>(pos) + 1);
    ExprValue v = evaluate(e);
    if (!v.is_scalar) throw ParseError("expected a scalar value", e.line, e.column);
    const std::int64_t d = syms[0].degree + syms[1].degree;
    if (sector && *sector != d)
      throw ParseError("entry has degree sum " + std::to_string(d) + ", earlier entries " + std::to_string(*sector),
                       line_no, 1);
    sector = d;
    entries.emplace_back(syms[0], syms[1], std::move(v.scalar));
  }
  return Cocycle::from_entries(std::move(name), sector.value_or(0), entries);
}

Cocycle load_cocycle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read cocycle file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cocycle(buf.str(), "file:" + path);
}

}  // namespace homlie
