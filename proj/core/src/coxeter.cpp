#include "df/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "df/errors.hpp"

namespace df {

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators,
                             const std::vector<std::pair<std::uint32_t, std::uint32_t>>& commuting_pairs)
    : labels_(std::move(generators)), adj_(labels_.size(), std::vector<bool>(labels_.size(), false)) {
  for (auto [s, t] : commuting_pairs) {
    if (s >= labels_.size() || t >= labels_.size())
      throw InvalidArgument("commuting pair references an unknown generator");
    if (s == t) throw InvalidArgument("a generator cannot be listed as commuting with itself");
    adj_[s][t] = adj_[t][s] = true;
  }
}

CoxeterSystem CoxeterSystem::from_complex(const SimplicialComplex& k) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& e : k.simplices_of_dim(1)) pairs.emplace_back(e[0], e[1]);
  return CoxeterSystem(k.labels(), pairs);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> CoxeterSystem::commuting_pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t s = 0; s < rank(); ++s)
    for (std::uint32_t t = s + 1; t < rank(); ++t)
      if (adj_[s][t]) out.emplace_back(s, t);
  return out;
}

CoxWord CoxeterSystem::parse_word(const std::string& text) const {
  std::map<std::string, std::uint32_t> index;
  bool single_chars = true;
  for (std::uint32_t i = 0; i < labels_.size(); ++i) {
    index.emplace(labels_[i], i);
    single_chars = single_chars && labels_[i].size() == 1;
  }
  CoxWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e" && !index.count("e")) continue;  // explicit identity
    auto it = index.find(tok);
    if (it != index.end()) {
      w.push_back(it->second);
      continue;
    }
    if (!single_chars) throw ParseError("unknown generator '" + tok + "'");
    for (char c : tok) {
      auto jt = index.find(std::string(1, c));
      if (jt == index.end()) throw ParseError("unknown generator '" + std::string(1, c) + "'");
      w.push_back(jt->second);
    }
  }
  return w;
}

std::string CoxeterSystem::format_word(const CoxWord& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += labels_.at(w[i]);
  }
  return out;
}

namespace {

CoxWord reduce(const CoxeterSystem& sys, const CoxWord& w) {
  CoxWord r;
  r.reserve(w.size());
  for (auto s : w) {
    bool cancelled = false;
    for (std::size_t j = r.size(); j-- > 0;) {
      if (r[j] == s) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
        cancelled = true;
        break;
      }
      if (!sys.commute(r[j], s)) break;
    }
    if (!cancelled) r.push_back(s);
  }
  return r;
}

// Lexicographically least linear extension of the heap of a reduced word.
CoxWord shortlex_sort(const CoxeterSystem& sys, const CoxWord& r) {
  const std::size_t k = r.size();
  std::vector<std::size_t> blockers(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!sys.commute(r[j], r[i])) ++blockers[i];
  std::vector<bool> used(k, false);
  CoxWord out;
  out.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!used[i] && blockers[i] == 0 && (pick == k || r[i] < r[pick])) pick = i;
    used[pick] = true;
    out.push_back(r[pick]);
    for (std::size_t j = pick + 1; j < k; ++j)
      if (!used[j] && !sys.commute(r[pick], r[j])) --blockers[j];
  }
  return out;
}

}  // namespace

CoxWord normal_form(const CoxeterSystem& sys, const CoxWord& w) {
  for (auto s : w)
    if (s >= sys.rank()) throw InvalidArgument("generator index out of range");
  return shortlex_sort(sys, reduce(sys, w));
}

IntegerMatrix tits_matrix(const CoxeterSystem& sys, const CoxWord& w) {
  const std::size_t n = sys.rank();
  IntegerMatrix m = IntegerMatrix::identity(n);
  for (auto s : w) {
    if (s >= n) throw InvalidArgument("generator index out of range");
    // Right-multiplying by the reflection: column s negates, every column j
    // not commuting with s picks up 2 * (old column s).
    for (std::uint32_t j = 0; j < n; ++j)
      if (j != s && !sys.commute(s, j)) m.add_col_multiple(j, s, Int(2));
    for (std::size_t i = 0; i < n; ++i) m(i, s) = -m(i, s);
  }
  return m;
}

CoxWord cyclic_reduction(const CoxeterSystem& sys, const CoxWord& input) {
  CoxWord w = normal_form(sys, input);
  for (;;) {
    bool changed = false;
    const std::size_t k = w.size();
    for (std::size_t i = 0; i < k && !changed; ++i) {
      bool left = true;
      for (std::size_t a = 0; a < i && left; ++a) left = sys.commute(w[a], w[i]);
      if (!left) continue;
      for (std::size_t j = k; j-- > i + 1 && !changed;) {
        if (w[j] != w[i]) continue;
        bool right = true;
        for (std::size_t b = j + 1; b < k && right; ++b) right = sys.commute(w[b], w[j]);
        if (!right) continue;
        CoxWord next;
        for (std::size_t x = 0; x < k; ++x)
          if (x != i && x != j) next.push_back(w[x]);
        w = normal_form(sys, next);
        changed = true;
      }
    }
    if (!changed) return w;
  }
}

bool is_torsion(const CoxeterSystem& sys, const CoxWord& w) {
  const CoxWord c = cyclic_reduction(sys, w);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!sys.commute(c[i], c[j])) return false;
  return true;
}

SignVector phi(const CoxeterSystem& sys, const CoxWord& w) {
  SignVector v(sys.rank());
  for (auto s : w) v.flip(s);
  return v;
}

bool in_commutator_subgroup(const CoxeterSystem& sys, const CoxWord& w) { return phi(sys, w).is_identity(); }

CoxWord multiply(const CoxeterSystem& sys, const CoxWord& a, const CoxWord& b) {
  CoxWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normal_form(sys, w);
}

CoxWord inverse(const CoxeterSystem& sys, const CoxWord& w) {
  return normal_form(sys, CoxWord(w.rbegin(), w.rend()));
}

std::vector<CoxWord> ball(const CoxeterSystem& sys, std::size_t radius, std::size_t max_radius,
                          std::size_t max_elements) {
  if (radius > max_radius)
    throw CapExceeded("ball radius " + std::to_string(radius) + " exceeds cap " + std::to_string(max_radius));
  std::vector<CoxWord> out{CoxWord{}};
  std::vector<CoxWord> level{CoxWord{}};
  for (std::size_t len = 0; len < radius && !level.empty(); ++len) {
    std::set<CoxWord> next;
    for (const auto& w : level)
      for (std::uint32_t s = 0; s < sys.rank(); ++s) {
        CoxWord x = w;
        x.push_back(s);
        x = normal_form(sys, x);
        if (x.size() == len + 1) next.insert(std::move(x));
      }
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
    if (out.size() > max_elements)
      throw CapExceeded("ball exceeds " + std::to_string(max_elements) + " elements at radius " +
                        std::to_string(len + 1));
  }
  return out;
}

}  // namespace df
