#include "homlie/linsolve.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace homlie {

ConstraintSystem::ConstraintSystem(std::vector<std::string> unknowns) : unknowns_(std::move(unknowns)) {
  for (std::size_t i = 0; i < unknowns_.size(); ++i) index_.emplace(unknowns_[i], i);
}

std::size_t ConstraintSystem::column(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown " + id);
  return it->second;
}

bool ConstraintSystem::add_row(const std::map<std::size_t, QScalar>& entries, std::string label) {
  SparseRow row;
  for (const auto& [c, v] : entries) {
    if (c >= unknowns_.size()) throw std::out_of_range("row references column " + std::to_string(c));
    if (!v.is_zero()) row.emplace_back(c, v);
  }
  if (row.empty()) return false;
  rows_.push_back(std::move(row));
  labels_.push_back(std::move(label));
  return true;
}

void ConstraintSystem::append(const ConstraintSystem& other) {
  if (other.unknowns_ != unknowns_) throw std::invalid_argument("systems have different unknowns");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
  labels_.insert(labels_.end(), other.labels_.begin(), other.labels_.end());
}

std::size_t ConstraintSystem::first_violated(const DenseVec& x) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    QScalar acc;
    for (const auto& [c, v] : rows_[r]) acc += v * x.at(c);
    if (!acc.is_zero()) return r;
  }
  return rows_.size();
}

namespace {

// Scales a row to polynomial entries with trivial polynomial content and
// valuation 0, first entry's leading coefficient 1.
void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  LaurentPoly lcm(1);
  for (const auto& [c, v] : row) {
    if (v.den().is_constant()) continue;
    LaurentPoly g = gcd(lcm, v.den());
    lcm = exact_divide(lcm, g) * v.den();
  }
  std::vector<LaurentPoly> nums;
  nums.reserve(row.size());
  for (const auto& [c, v] : row) nums.push_back(v.den().is_constant() ? lcm * v.num() : exact_divide(lcm, v.den()) * v.num());
  LaurentPoly content = nums.front();
  Exponent low = nums.front().valuation();
  for (std::size_t i = 1; i < nums.size(); ++i) {
    low = std::min(low, nums[i].valuation());
    if (!content.is_constant()) content = gcd(content, nums[i]);
  }
  content = gcd(content, LaurentPoly());  // valuation 0, monic
  for (auto& n : nums) n = exact_divide(n, content).shifted(-low);
  const Rational lead = nums.front().leading();
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (lead != 1) nums[i] *= Rational(1 / lead);
    row[i].second = QScalar(std::move(nums[i]));
  }
}

const QScalar* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// a * r - b * p, merged by column.
SparseRow combine(const QScalar& a, const SparseRow& r, const QScalar& b, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -(b * p[j].second));
      ++j;
    } else {
      QScalar v = a * r[i].second - b * p[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

struct Echelon {
  std::vector<std::pair<std::size_t, SparseRow>> pivots;  // (pivot column, row) in elimination order
};

Echelon eliminate(std::vector<SparseRow> active, std::size_t ncols) {
  Echelon ech;
  for (auto& r : active) make_primitive(r);
  std::erase_if(active, [](const SparseRow& r) { return r.empty(); });
  std::vector<std::size_t> col_count(ncols);
  while (!active.empty()) {
    std::fill(col_count.begin(), col_count.end(), 0);
    for (const auto& r : active)
      for (const auto& e : r) ++col_count[e.first];
    std::tuple<std::size_t, std::size_t, std::size_t> best{std::numeric_limits<std::size_t>::max(), 0, 0};
    for (std::size_t ri = 0; ri < active.size(); ++ri)
      for (const auto& e : active[ri]) {
        const std::size_t cost = (active[ri].size() - 1) * (col_count[e.first] - 1);
        best = std::min(best, std::make_tuple(cost, e.first, ri));
      }
    const auto [cost, pcol, prow] = best;
    SparseRow pivot = std::move(active[prow]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(prow));
    const QScalar pv = *find_entry(pivot, pcol);
    for (auto& r : active) {
      const QScalar* rv = find_entry(r, pcol);
      if (!rv) continue;
      const LaurentPoly g = gcd(pv.num(), rv->num());
      const QScalar a(exact_divide(pv.num(), g));
      const QScalar b(exact_divide(rv->num(), g));
      r = combine(a, r, b, pivot);
      make_primitive(r);
    }
    std::erase_if(active, [](const SparseRow& r) { return r.empty(); });
    ech.pivots.emplace_back(pcol, std::move(pivot));
  }
  return ech;
}

}  // namespace

std::vector<DenseVec> reduced_row_echelon(std::vector<DenseVec> vecs) {
  if (vecs.empty()) return vecs;
  const std::size_t n = vecs.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < vecs.size(); ++col) {
    std::size_t piv = rank;
    while (piv < vecs.size() && vecs[piv][col].is_zero()) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[rank], vecs[piv]);
    const QScalar inv = vecs[rank][col].inverse();
    for (auto& x : vecs[rank]) x *= inv;
    for (std::size_t r = 0; r < vecs.size(); ++r) {
      if (r == rank || vecs[r][col].is_zero()) continue;
      const QScalar f = vecs[r][col];
      for (std::size_t c = col; c < n; ++c)
        if (!vecs[rank][c].is_zero()) vecs[r][c] -= f * vecs[rank][c];
    }
    ++rank;
  }
  vecs.resize(rank);
  return vecs;
}

Nullspace solve_nullspace(const ConstraintSystem& sys) {
  const std::size_t n = sys.columns();
  Echelon ech = eliminate(sys.rows(), n);
  Nullspace out;
  out.rank = ech.pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (const auto& [c, r] : ech.pivots) is_pivot[c] = true;
  std::vector<DenseVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    DenseVec x(n);
    x[f] = QScalar(1);
    // Each pivot row only involves its own pivot, free columns and later pivots.
    for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
      const auto& [pc, row] = *it;
      QScalar acc, pv;
      for (const auto& [c, v] : row) {
        if (c == pc) pv = v;
        else if (!x[c].is_zero()) acc += v * x[c];
      }
      x[pc] = -(acc / pv);
    }
    basis.push_back(std::move(x));
  }
  out.basis = reduced_row_echelon(std::move(basis));
  return out;
}

std::size_t rank_of(const std::vector<DenseVec>& vecs) {
  if (vecs.empty()) return 0;
  std::vector<SparseRow> rows;
  for (const auto& v : vecs) {
    SparseRow r;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) r.emplace_back(c, v[c]);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return eliminate(std::move(rows), vecs.front().size()).pivots.size();
}

}  // namespace homlie
