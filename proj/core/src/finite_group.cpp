#include "df/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>

#include "df/errors.hpp"

namespace df {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::uint32_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidArgument("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidArgument("group table is not square");
    for (auto x : row)
      if (x >= n) throw InvalidArgument("group table entry out of range");
  }
  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidArgument("group table has no identity");
  inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    auto it = std::find(table_[a].begin(), table_[a].end(), identity_);
    if (it == table_[a].end()) throw InvalidArgument("group table: element without inverse");
    const auto b = static_cast<std::uint32_t>(it - table_[a].begin());
    if (table_[b][a] != identity_) throw InvalidArgument("group table: one-sided inverse");
    inverse_[a] = b;
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InvalidArgument("group table is not associative");
}

namespace {

FiniteGroup permutation_group(int n, bool even_only) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    if (!even_only || inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::uint32_t>> table(perms.size(), std::vector<std::uint32_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      // (a*b)(i) = a(b(i))
      std::vector<int> c(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      table[a][b] = static_cast<std::uint32_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(table));
}

}  // namespace

FiniteGroup FiniteGroup::alternating(int n) { return permutation_group(n, true); }
FiniteGroup FiniteGroup::symmetric(int n) { return permutation_group(n, false); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  const auto un = static_cast<std::uint32_t>(n);
  std::vector<std::vector<std::uint32_t>> table(un, std::vector<std::uint32_t>(un));
  for (std::uint32_t a = 0; a < un; ++a)
    for (std::uint32_t b = 0; b < un; ++b) table[a][b] = (a + b) % un;
  return FiniteGroup(std::move(table));
}

std::uint32_t FiniteGroup::generated_order(const std::vector<std::uint32_t>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::uint32_t> stack{identity_};
  in[identity_] = true;
  std::uint32_t count = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto g : gens) {
      const auto y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count;
}

std::uint32_t evaluate(const GroupWord& w, const std::vector<std::uint32_t>& images, const FiniteGroup& g) {
  std::uint32_t acc = g.identity();
  for (int x : w) {
    const auto img = images[static_cast<std::size_t>(std::abs(x)) - 1];
    acc = g.mul(acc, x > 0 ? img : g.inv(img));
  }
  return acc;
}

namespace {

struct Search {
  const GroupPresentation& p;
  const FiniteGroup& g;
  std::vector<std::size_t> order;                    // generator assigned at each depth
  std::vector<std::vector<std::size_t>> ready;       // relators completed at each depth
  std::vector<std::uint32_t> images;
  std::optional<std::vector<std::uint32_t>> found;

  bool run(std::size_t depth) {
    if (depth == order.size()) {
      if (g.generated_order(images) != g.order()) return false;
      found = images;
      return true;
    }
    const auto gen = order[depth];
    for (std::uint32_t v = 0; v < g.order(); ++v) {
      images[gen] = v;
      bool ok = true;
      for (auto r : ready[depth])
        if (evaluate(p.relators[r], images, g) != g.identity()) {
          ok = false;
          break;
        }
      if (ok && run(depth + 1)) return true;
    }
    images[gen] = g.identity();
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::uint32_t>> find_epimorphism(const GroupPresentation& p,
                                                           const FiniteGroup& target) {
  const std::size_t n = p.generators;
  std::vector<std::size_t> min_support(n, std::numeric_limits<std::size_t>::max());
  std::vector<std::vector<std::size_t>> support(p.relators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (int x : p.relators[r]) support[r].push_back(static_cast<std::size_t>(std::abs(x)) - 1);
    std::sort(support[r].begin(), support[r].end());
    support[r].erase(std::unique(support[r].begin(), support[r].end()), support[r].end());
    for (auto gen : support[r]) min_support[gen] = std::min(min_support[gen], support[r].size());
  }
  Search s{p, target, {}, {}, std::vector<std::uint32_t>(n, target.identity()), std::nullopt};
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), std::size_t{0});
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](std::size_t a, std::size_t b) { return min_support[a] < min_support[b]; });
  std::vector<std::size_t> depth_of(n);
  for (std::size_t d = 0; d < n; ++d) depth_of[s.order[d]] = d;
  s.ready.assign(std::max<std::size_t>(n, 1), {});
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    std::size_t last = 0;
    for (auto gen : support[r]) last = std::max(last, depth_of[gen]);
    s.ready[last].push_back(r);
  }
  if (n == 0) {
    // Only the trivial group is a quotient of the trivial presentation.
    if (target.order() == 1) return std::vector<std::uint32_t>{};
    return std::nullopt;
  }
  s.run(0);
  return s.found;
}

}  // namespace df
