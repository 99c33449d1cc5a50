#include "df/group_presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "df/errors.hpp"

namespace df {

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

GroupWord cyclically_reduce(const GroupWord& w) {
  GroupWord r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return GroupWord(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::string GroupPresentation::str() const {
  std::string out = "<";
  for (std::size_t g = 0; g < generators; ++g) out += (g ? ", x" : "x") + std::to_string(g);
  out += " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) out += ", ";
    for (std::size_t i = 0; i < relators[r].size(); ++i) {
      const int x = relators[r][i];
      if (i) out += " ";
      out += "x" + std::to_string(std::abs(x) - 1);
      if (x < 0) out += "^-1";
    }
  }
  return out + ">";
}

std::size_t GroupPresentation::total_relator_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

GroupPresentation pi1_presentation(const SimplicialComplex& k, const std::string& basepoint) {
  const auto base = k.vertex_index(basepoint);
  const auto& edges = k.simplices_of_dim(1);
  const std::size_t n = k.vertex_count();

  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e][0]].emplace_back(edges[e][1], e);
    adj[edges[e][1]].emplace_back(edges[e][0], e);
  }
  std::vector<bool> seen(n, false);
  std::vector<bool> tree(edges.size(), false);
  std::deque<std::uint32_t> queue{base};
  seen[base] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto& [u, e] : adj[v]) {
      if (seen[u]) continue;
      seen[u] = true;
      tree[e] = true;
      ++reached;
      queue.push_back(u);
    }
  }
  if (reached != n) throw InvalidArgument("pi1_presentation: complex is disconnected");

  std::vector<int> gen_of_edge(edges.size(), 0);
  GroupPresentation p;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!tree[e]) gen_of_edge[e] = static_cast<int>(++p.generators);

  auto letter = [&](std::uint32_t a, std::uint32_t b) {
    // Edge a->b; stored orientation is low->high.
    const Simplex s = a < b ? Simplex{a, b} : Simplex{b, a};
    const int g = gen_of_edge[*k.index_in_dim(s)];
    return a < b ? g : -g;
  };
  for (const auto& t : k.simplices_of_dim(2)) {
    GroupWord w;
    for (int x : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
      if (x != 0) w.push_back(x);
    w = cyclically_reduce(w);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

namespace {

// Canonical rotation so duplicates (including inverse duplicates) compare equal.
GroupWord canonical_cyclic(const GroupWord& w) {
  GroupWord best;
  for (const GroupWord& base : {w, inverse(w)}) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      GroupWord rot(base.begin() + static_cast<std::ptrdiff_t>(i), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

void tidy(GroupPresentation& p) {
  std::set<GroupWord> seen;
  std::vector<GroupWord> out;
  for (auto& r : p.relators) {
    auto c = cyclically_reduce(r);
    if (c.empty()) continue;
    auto key = canonical_cyclic(c);
    if (seen.insert(key).second) out.push_back(std::move(c));
  }
  p.relators = std::move(out);
}

}  // namespace

GroupPresentation simplify(const GroupPresentation& input) {
  constexpr std::size_t kMaxTotalLength = 4'000'000;
  GroupPresentation p = input;
  tidy(p);
  for (;;) {
    std::size_t best_rel = std::numeric_limits<std::size_t>::max();
    int best_gen = 0;
    std::size_t best_pos = 0;
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      const auto& w = p.relators[r];
      if (best_rel != std::numeric_limits<std::size_t>::max() && w.size() >= p.relators[best_rel].size())
        continue;
      std::map<int, std::pair<int, std::size_t>> count;  // generator -> (occurrences, position)
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto& c = count[std::abs(w[i])];
        ++c.first;
        c.second = i;
      }
      for (const auto& [g, c] : count)
        if (c.first == 1) {
          best_rel = r;
          best_gen = g;
          best_pos = c.second;
          break;
        }
    }
    if (best_rel == std::numeric_limits<std::size_t>::max()) break;

    // Rotate so the generator leads: g^e w = 1.
    const auto& rel = p.relators[best_rel];
    GroupWord rest(rel.begin() + static_cast<std::ptrdiff_t>(best_pos) + 1, rel.end());
    rest.insert(rest.end(), rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(best_pos));
    const bool positive = rel[best_pos] > 0;
    const GroupWord value = positive ? inverse(rest) : rest;  // g = value
    const GroupWord value_inv = inverse(value);

    auto renumber = [best_gen](int x) {
      const int g = std::abs(x);
      const int ng = g > best_gen ? g - 1 : g;
      return x > 0 ? ng : -ng;
    };
    std::vector<GroupWord> next;
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      if (r == best_rel) continue;
      GroupWord w;
      for (int x : p.relators[r]) {
        if (x == best_gen) {
          w.insert(w.end(), value.begin(), value.end());
        } else if (x == -best_gen) {
          w.insert(w.end(), value_inv.begin(), value_inv.end());
        } else {
          w.push_back(x);
        }
      }
      for (int& x : w) x = renumber(x);
      next.push_back(std::move(w));
    }
    p.relators = std::move(next);
    --p.generators;
    tidy(p);
    if (p.total_relator_length() > kMaxTotalLength) break;
  }
  return p;
}

AbelianGroupDescriptor abelianization(const GroupPresentation& p) {
  SparseMatrix m(p.generators, p.relators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int x : p.relators[r]) m.add(static_cast<std::size_t>(std::abs(x)) - 1, r, Int(x > 0 ? 1 : -1));
  return cokernel(m);
}

}  // namespace df
