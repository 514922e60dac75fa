#include "homlie/qfield.hpp"

#include <algorithm>
#include <limits>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("exponent overflow");
  return r;
}

// Dense ordinary polynomials, index = degree, no trailing zeros.
using Dense = std::vector<Rational>;

void trim_dense(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = quot * b + rem with deg rem < deg b.
void divmod(Dense a, const Dense& b, Dense& quot, Dense& rem) {
  const std::size_t db = b.size() - 1;
  quot.assign(a.size() >= b.size() ? a.size() - db : 0, Rational(0));
  const Rational& lb = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / lb;
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim_dense(a);
  }
  rem = std::move(a);
}

void make_monic(Dense& p) {
  if (p.empty()) return;
  Rational lc = p.back();
  if (lc == 1) return;
  for (auto& c : p) c /= lc;
}

Dense dense_gcd(Dense a, Dense b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return Dense{Rational(1)};
    Dense q, r;
    divmod(std::move(a), b, q, r);
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

Rational rational_pow(const Rational& base, Exponent e) {
  if (e == 0) return Rational(1);
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), k);
  Rational r = e > 0 ? Rational(n, d) : Rational(d, n);
  r.canonicalize();
  return r;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(Exponent low, std::vector<Rational> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent e) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = e;
    p.coeffs_.push_back(c);
  }
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ = checked_add(low_, static_cast<Exponent>(lead));
  }
  if (coeffs_.empty()) low_ = 0;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

Rational LaurentPoly::coeff(Exponent e) const {
  if (is_zero() || e < low_ || e > top()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<Exponent, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<Exponent, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<Exponent>(i), coeffs_[i]);
  return out;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) {
    r.low_ = checked_add(low_, k);
    checked_add(r.low_, static_cast<Exponent>(coeffs_.size()));
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const Exponent lo = std::min(low_, o.low_);
  const Exponent hi = std::max(top(), o.top());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
  } else {
    for (auto& x : coeffs_) x *= c;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  LaurentPoly r(checked_add(a.low_, b.low_), std::move(out));
  checked_add(r.low_, static_cast<Exponent>(r.coeffs_.size()));
  return r;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Dense g;
  if (a.is_zero()) {
    g = b.dense();
    make_monic(g);
  } else if (b.is_zero()) {
    g = a.dense();
    make_monic(g);
  } else {
    g = dense_gcd(a.dense(), b.dense());
  }
  return LaurentPoly(0, std::move(g));
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (a.is_zero()) return {};
  Dense q, r;
  divmod(a.dense(), b.dense(), q, r);
  if (!r.empty()) throw ArithmeticError("polynomial division is not exact");
  return LaurentPoly(checked_add(a.valuation(), -b.valuation()), std::move(q));
}

// -------------------------------------------------------------------- QScalar

QScalar::QScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("division by zero");
  canonicalize();
}

void QScalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const Exponent v = den_.valuation();
  if (v != 0) {
    num_ = num_.shifted(-v);
    den_ = den_.shifted(-v);
  }
  if (den_.coeffs_.size() > 1 && num_.coeffs_.size() > 1) {
    LaurentPoly g = gcd(num_, den_);
    if (g.coeffs_.size() > 1) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  const Rational lc = den_.leading();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  return QScalar(den_, num_);
}

QScalar QScalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  QScalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

QScalar QScalar::operator-() const { return QScalar(Canonical{}, -num_, den_); }

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) canonicalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QScalar();
  const bool simple = den_.is_constant() && o.den_.is_constant();
  num_ = num_ * o.num_;
  if (simple) return *this;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= o.inverse(); }

// ------------------------------------------------------------ q-numbers, eval

LaurentPoly qnumber(std::int64_t n) {
  if (n == 0) return {};
  const std::int64_t k = n < 0 ? -n : n;
  // q^{k-1} + q^{k-3} + ... + q^{1-k}: every other slot of a dense range.
  std::vector<Rational> c(static_cast<std::size_t>(2 * k - 1), Rational(0));
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = n > 0 ? 1 : -1;
  return LaurentPoly(1 - k, std::move(c));
}

LaurentPoly angle(std::int64_t m) {
  if (m == 0) return LaurentPoly(2);
  return LaurentPoly::monomial(1, m) + LaurentPoly::monomial(1, -m);
}

Rational eval_at(const LaurentPoly& x, const Rational& q0) {
  if (q0 == 0 || q0 == 1 || q0 == -1) throw DomainError("q0 must not be 0, 1 or -1");
  if (x.is_zero()) return Rational(0);
  Rational acc(0);
  const auto& c = x.dense();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q0 + *it;
  return acc * rational_pow(q0, x.valuation());
}

Rational eval_at(const QScalar& x, const Rational& q0) {
  const Rational d = eval_at(x.den(), q0);
  if (d == 0) throw ArithmeticError("pole at q = " + q0.get_str());
  return eval_at(x.num(), q0) / d;
}

// ------------------------------------------------------------------ rendering

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto terms = p.terms();
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    std::string body;
    if (e == 0) {
      body = to_string(mag);
    } else {
      const std::string qpart = e == 1 ? "q" : "q^" + std::to_string(e);
      body = mag == 1 ? qpart : to_string(mag) + "*" + qpart;
    }
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string to_string(const QScalar& x) {
  if (x.is_polynomial()) return to_string(x.num());
  std::string n = to_string(x.num());
  if (x.num().term_count() > 1) n = "(" + n + ")";
  return n + "/(" + to_string(x.den()) + ")";
}

}  // namespace homlie
