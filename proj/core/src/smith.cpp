#include "df/smith.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <utility>

namespace df {

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_entry(const IntegerMatrix& d, std::size_t t) {
  std::optional<Pivot> best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& x = d(i, j);
      if (x == 0) continue;
      if (!best || mpz_cmpabs(x.get_mpz_t(), d(best->row, best->col).get_mpz_t()) < 0) {
        best = Pivot{i, j};
        if (is_unit(x)) return best;
      }
    }
  return best;
}

// Generic driver; Track selects whether U and V are maintained.
template <bool Track>
void reduce(IntegerMatrix& d, IntegerMatrix* u, IntegerMatrix* v) {
  const std::size_t limit = std::min(d.rows(), d.cols());
  Int q;
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      auto p = smallest_entry(d, t);
      if (!p) return;
      d.swap_rows(t, p->row);
      d.swap_cols(t, p->col);
      if constexpr (Track) {
        u->swap_rows(t, p->row);
        v->swap_cols(t, p->col);
      }
      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        const Int neg = -q;
        d.add_row_multiple(i, t, neg);
        if constexpr (Track) u->add_row_multiple(i, t, neg);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        const Int neg = -q;
        d.add_col_multiple(j, t, neg);
        if constexpr (Track) v->add_col_multiple(j, t, neg);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Row and column are clear; enforce d_t | every remaining entry.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (offender) {
        d.add_row_multiple(t, *offender, Int(1));
        if constexpr (Track) u->add_row_multiple(t, *offender, Int(1));
        continue;
      }
      if (d(t, t) < 0) {
        d.negate_row(t);
        if constexpr (Track) u->negate_row(t);
      }
      break;
    }
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition out{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  reduce<true>(out.d, &out.u, &out.v);
  return out;
}

std::vector<Int> smith_diagonal(IntegerMatrix m) {
  reduce<false>(m, nullptr, nullptr);
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (m(i, i) != 0) out.push_back(m(i, i));
  return out;
}

InvariantFactors invariant_factors(const SparseMatrix& m) {
  using Row = SparseMatrix::Row;
  std::vector<Row> rows(m.rows());
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i] = m.row(i);
    for (const auto& [j, x] : rows[i]) col_rows[j].insert(i);
  }
  std::vector<bool> row_done(m.rows(), false);
  InvariantFactors out;

  Row merged;
  for (;;) {
    // Markowitz choice among unit entries.
    std::optional<Pivot> best;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < rows.size() && best_cost > 0; ++i) {
      if (row_done[i] || rows[i].empty()) continue;
      for (const auto& [j, x] : rows[i]) {
        if (!is_unit(x)) continue;
        const std::size_t cost = (rows[i].size() - 1) * (col_rows[j].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best = Pivot{i, j};
          if (cost == 0) break;
        }
      }
    }
    if (!best) break;

    const std::size_t pr = best->row;
    const std::size_t pc = best->col;
    const Row pivot_row = rows[pr];
    Int pivot_value;
    for (const auto& [j, x] : pivot_row)
      if (j == pc) pivot_value = x;

    const std::vector<std::size_t> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (std::size_t r : targets) {
      if (r == pr) continue;
      Int factor;
      for (const auto& [j, x] : rows[r])
        if (j == pc) factor = -x * pivot_value;  // pivot is a unit, so 1/p == p
      Row& target = rows[r];
      merged.clear();
      merged.reserve(target.size() + pivot_row.size());
      auto a = target.begin();
      auto b = pivot_row.begin();
      while (a != target.end() || b != pivot_row.end()) {
        if (b == pivot_row.end() || (a != target.end() && a->first < b->first)) {
          merged.push_back(std::move(*a++));
        } else if (a == target.end() || b->first < a->first) {
          col_rows[b->first].insert(r);
          merged.emplace_back(b->first, factor * b->second);
          ++b;
        } else {
          Int sum = a->second + factor * b->second;
          if (sum != 0) {
            merged.emplace_back(a->first, std::move(sum));
          } else {
            col_rows[a->first].erase(r);
          }
          ++a;
          ++b;
        }
      }
      target.swap(merged);
    }
    for (const auto& [j, x] : rows[pr]) col_rows[j].erase(pr);
    rows[pr].clear();
    row_done[pr] = true;
    ++out.rank;
  }

  // Residual block: rows and columns that still carry entries.
  std::vector<std::size_t> live_rows, live_cols;
  std::vector<std::size_t> col_pos(m.cols(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) live_rows.push_back(i);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!col_rows[j].empty()) {
      col_pos[j] = live_cols.size();
      live_cols.push_back(j);
    }
  if (!live_rows.empty()) {
    IntegerMatrix residual(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [j, x] : rows[live_rows[i]]) residual(i, col_pos[j]) = x;
    for (auto& x : smith_diagonal(std::move(residual))) {
      ++out.rank;
      if (x != 1) out.torsion.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace df
