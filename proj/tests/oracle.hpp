#pragma once

// Independent reference computations for the tests. Everything here works
// with plain rationals at a fixed numeric q0 and never calls the library's
// algebra, solver or normal-ordering code.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using Q = mpq_class;

inline Q qpow(const Q& q, std::int64_t e) {
  Q out = 1, base = e < 0 ? Q(1) / q : q;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

inline Q qnum(std::int64_t n, const Q& q) { return (qpow(q, n) - qpow(q, -n)) / (q - 1 / q); }
inline Q angle(std::int64_t n, const Q& q) { return qpow(q, n) + qpow(q, -n); }

// fam 0 = L, 1 = M.
struct Sym {
  int fam;
  std::int64_t deg;
  auto operator<=>(const Sym&) const = default;
};

struct Term {
  Sym sym;
  Q coeff;
};

// [x, y] in W_q at q (classical W(2,2) when classical is set).
inline std::optional<Term> bracket(const Sym& x, const Sym& y, const Q& q, bool classical = false) {
  auto c = [&](std::int64_t k) { return classical ? Q(k) : qnum(k, q); };
  if (x.fam == 1 && y.fam == 1) return std::nullopt;
  const std::int64_t n = x.deg, m = y.deg;
  Q v = c(m - n);
  if (v == 0) return std::nullopt;
  return Term{{x.fam + y.fam, n + m}, v};
}

inline Q alpha(const Sym& x, const Q& q, bool classical = false) { return classical ? Q(1) : angle(x.deg, q); }

inline std::vector<Sym> window(std::int64_t N) {
  std::vector<Sym> out;
  for (int f = 0; f < 2; ++f)
    for (std::int64_t n = -N; n <= N; ++n) out.push_back({f, n});
  return out;
}

inline std::size_t rank(std::vector<std::vector<Q>> m) {
  std::size_t r = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

struct H2Dims {
  std::int64_t z2, b2, h2;
};

// Brute-force sector-0 cohomology of the window at q.
inline H2Dims h2_dims(std::int64_t N, const Q& q, bool classical = false, std::int64_t sector = 0) {
  const auto syms = window(N);
  std::map<std::pair<Sym, Sym>, std::size_t> col;
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      if (syms[i].deg + syms[j].deg == sector) col.emplace(std::make_pair(syms[i], syms[j]), col.size());
  const std::size_t n = col.size();
  // psi(u, v) as a coefficient vector, skew.
  auto add = [&](std::vector<Q>& row, const Sym& u, const Sym& v, const Q& c) {
    if (u == v) return true;
    auto it = col.find(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    if (it == col.end()) return false;
    row[it->second] += u < v ? c : Q(-c);
    return true;
  };
  std::vector<std::vector<Q>> rows;
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      for (std::size_t k = j + 1; k < syms.size(); ++k) {
        const Sym t[3] = {syms[i], syms[j], syms[k]};
        if (t[0].deg + t[1].deg + t[2].deg != sector) continue;
        std::vector<Q> row(n);
        bool ok = true;
        for (int r = 0; r < 3 && ok; ++r) {
          const Sym &x = t[r], &y = t[(r + 1) % 3], &z = t[(r + 2) % 3];
          if (auto b = bracket(y, z, q, classical)) ok = add(row, x, b->sym, alpha(x, q, classical) * b->coeff);
        }
        if (ok) rows.push_back(row);
      }
  std::vector<std::vector<Q>> cob;
  for (const auto& f : syms) {
    if (f.deg != sector) continue;
    std::vector<Q> v(n);
    for (const auto& [pair, c] : col)
      if (auto b = bracket(pair.first, pair.second, q, classical); b && b->sym == f) v[c] = b->coeff;
    cob.push_back(v);
  }
  const auto z2 = static_cast<std::int64_t>(n - rank(rows));
  const auto b2 = static_cast<std::int64_t>(rank(cob));
  return {z2, b2, z2 - b2};
}

// Dimension of degree-s alpha^k-derivations of W_q on the window at q.
inline std::int64_t der_dim(int k, std::int64_t s, std::int64_t N, const Q& q, bool equivariance,
                            bool classical = false) {
  auto in = [&](std::int64_t d) { return d >= -N && d <= N; };
  std::vector<Sym> dom;
  for (const auto& x : window(N))
    if (in(x.deg + s)) dom.push_back(x);
  // column of D(x)[t], t = (tf, deg x + s)
  std::map<std::pair<Sym, int>, std::size_t> col;
  for (const auto& x : dom)
    for (int tf = 0; tf < 2; ++tf) col.emplace(std::make_pair(x, tf), col.size());
  const std::size_t n = col.size();
  std::vector<std::vector<Q>> rows;
  // Result symbol -> row.
  using Lin = std::map<Sym, std::vector<Q>>;
  auto row_of = [&](Lin& lin, const Sym& r) -> std::vector<Q>& {
    auto it = lin.find(r);
    if (it == lin.end()) it = lin.emplace(r, std::vector<Q>(n)).first;
    return it->second;
  };
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      const Sym &x = dom[i], &y = dom[j];
      const std::int64_t d = x.deg + y.deg;
      if (!in(d) || !in(d + s)) continue;
      Lin lin;
      if (auto b = bracket(x, y, q, classical))
        for (int tf = 0; tf < 2; ++tf) row_of(lin, {tf, d + s})[col.at({b->sym, tf})] += b->coeff;
      // - alpha^k(x) . D(y) + alpha^k(y) . D(x)
      const Q ax = alpha(x, q, classical), ay = alpha(y, q, classical);
      Q axk = 1, ayk = 1;
      for (int p = 0; p < k; ++p) { axk *= ax; ayk *= ay; }
      for (int tf = 0; tf < 2; ++tf) {
        if (auto b = bracket(x, {tf, y.deg + s}, q, classical)) row_of(lin, b->sym)[col.at({y, tf})] -= axk * b->coeff;
        if (auto b = bracket(y, {tf, x.deg + s}, q, classical)) row_of(lin, b->sym)[col.at({x, tf})] += ayk * b->coeff;
      }
      for (auto& [r, row] : lin) rows.push_back(row);
    }
  if (equivariance)
    for (const auto& [key, c] : col) {
      std::vector<Q> row(n);
      row[c] = alpha(key.first, q, classical) - alpha({key.second, key.first.deg + s}, q, classical);
      rows.push_back(row);
    }
  return static_cast<std::int64_t>(n - rank(rows));
}

// Oscillator model: a = d/dx, a+ = x on Laurent polynomials, fermion on C^2
// with b e1 = e0, b+ e0 = e1. States map (power of x, fermion index) -> coefficient.
using State = std::map<std::pair<std::int64_t, int>, Q>;

inline State apply_monomial(std::int64_t ap, std::int64_t an, int bp, int bn, const State& v) {
  State out;
  for (auto [key, c] : v) {
    auto [k, f] = key;
    if (bn) {
      if (f == 0) continue;
      f = 0;
    }
    if (bp) {
      if (f == 1) continue;
      f = 1;
    }
    for (std::int64_t i = 0; i < an && c != 0; ++i) c *= Q(k--);
    if (c == 0) continue;
    k += ap;
    out[{k, f}] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace oracle
