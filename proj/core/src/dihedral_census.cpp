#include "df/dihedral_census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include "df/errors.hpp"

namespace df {

namespace {

using Element = GroupModel::Element;

CoxWord to_word(const Element& e) { return CoxWord(e.begin(), e.end()); }
Element to_element(const CoxWord& w) { return Element(w.begin(), w.end()); }

class RacgModel final : public GroupModel {
 public:
  RacgModel(CoxeterSystem sys, std::vector<CoxWord> words, bool saturated)
      : sys_(std::move(sys)), saturated_(saturated) {
    std::set<CoxWord> normal;
    for (const auto& w : words) normal.insert(normal_form(sys_, w));
    normal.insert(CoxWord{});
    std::vector<CoxWord> sorted(normal.begin(), normal.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CoxWord& a, const CoxWord& b) { return a.size() < b.size(); });
    for (const auto& w : sorted) ball_.push_back(to_element(w));
    radius_ = sorted.back().size();
  }

  std::string kind() const override { return "racg"; }
  Element identity() const override { return {}; }
  Element multiply(const Element& a, const Element& b) const override {
    return to_element(df::multiply(sys_, to_word(a), to_word(b)));
  }
  Element inverse(const Element& a) const override { return to_element(df::inverse(sys_, to_word(a))); }
  bool has_infinite_order(const Element& a) const override { return !is_torsion(sys_, to_word(a)); }
  std::string format(const Element& a) const override { return sys_.format_word(to_word(a)); }
  std::vector<Element> ball() const override { return ball_; }
  std::vector<Element> generators() const override {
    std::vector<Element> out;
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(sys_.rank()); ++s) out.push_back({s});
    return out;
  }
  bool saturated() const override { return saturated_; }
  // Combinatorial translation lengths in the Davis complex are positive
  // integers, so |t^k| >= |k|.
  std::size_t power_bound() const override { return radius_ + 1; }

 private:
  CoxeterSystem sys_;
  std::vector<Element> ball_;
  std::size_t radius_ = 0;
  bool saturated_;
};

class CrystalModel final : public GroupModel {
 public:
  CrystalModel(int n, int radius) : n_(n), radius_(radius) {
    if (n < 1) throw InvalidArgument("crystal model needs n >= 1");
    if (radius < 0) throw InvalidArgument("crystal radius must be non-negative");
    const auto side = static_cast<std::int64_t>(2 * radius + 1);
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) {
      total *= side;
      if (total > 5'000'000) throw CapExceeded("crystal ball too large");
    }
    for (int s : {1, -1})
      for (std::int64_t code = 0; code < total; ++code) {
        Element e(static_cast<std::size_t>(n) + 1);
        std::int64_t c = code;
        for (int i = 0; i < n; ++i) {
          e[static_cast<std::size_t>(i)] = c % side - radius;
          c /= side;
        }
        e[static_cast<std::size_t>(n)] = s;
        ball_.push_back(std::move(e));
      }
    // Identity first, then a stable order.
    std::stable_sort(ball_.begin(), ball_.end(), [this](const Element& a, const Element& b) {
      return weight(a) < weight(b);
    });
  }

  std::string kind() const override { return "crystal"; }
  Element identity() const override {
    Element e(static_cast<std::size_t>(n_) + 1, 0);
    e.back() = 1;
    return e;
  }
  Element multiply(const Element& a, const Element& b) const override {
    Element c(a.size());
    const std::int64_t s = a.back();
    for (std::size_t i = 0; i + 1 < a.size(); ++i) c[i] = a[i] + s * b[i];
    c.back() = a.back() * b.back();
    return c;
  }
  Element inverse(const Element& a) const override {
    if (a.back() == -1) return a;
    Element c(a.size());
    for (std::size_t i = 0; i + 1 < a.size(); ++i) c[i] = -a[i];
    c.back() = 1;
    return c;
  }
  bool has_infinite_order(const Element& a) const override {
    if (a.back() == -1) return false;
    return std::any_of(a.begin(), a.end() - 1, [](std::int64_t x) { return x != 0; });
  }
  std::string format(const Element& a) const override {
    std::string out = "(";
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(a[i]);
    }
    return out + (a.back() == 1 ? ";+)" : ";-)");
  }
  std::vector<Element> ball() const override { return ball_; }
  std::vector<Element> generators() const override {
    std::vector<Element> out;
    Element flip(static_cast<std::size_t>(n_) + 1, 0);
    flip.back() = -1;
    out.push_back(flip);
    for (int i = 0; i < n_; ++i) {
      Element t = identity();
      t[static_cast<std::size_t>(i)] = 1;
      out.push_back(t);
    }
    return out;
  }
  bool saturated() const override { return false; }
  std::size_t power_bound() const override { return static_cast<std::size_t>(radius_) + 1; }

 private:
  std::int64_t weight(const Element& a) const {
    std::int64_t w = a.back() == 1 ? 0 : 1;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) w += 2 * std::abs(a[i]);
    return w;
  }

  int n_;
  int radius_;
  std::vector<Element> ball_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : e) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // smallest index is the root, keeping representatives deterministic
  }
};

// Ball with index lookup and the products we keep reusing.
class IndexedBall {
 public:
  explicit IndexedBall(const GroupModel& g) : g_(g), elems_(g.ball()) {
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
    for (std::size_t i = 0; i < elems_.size(); ++i) inverse_.push_back(find(g.inverse(elems_[i])));
  }

  std::size_t size() const { return elems_.size(); }
  const Element& operator[](std::size_t i) const { return elems_[i]; }
  std::optional<std::size_t> find(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> mul(std::size_t a, std::size_t b) const {
    return find(g_.multiply(elems_[a], elems_[b]));
  }
  std::optional<std::size_t> conjugate(std::size_t by, std::size_t x) const {
    const Element y = g_.multiply(g_.multiply(elems_[by], elems_[x]), g_.inverse(elems_[by]));
    return find(y);
  }
  std::optional<std::size_t> inverse(std::size_t a) const { return inverse_[a]; }

 private:
  const GroupModel& g_;
  std::vector<Element> elems_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  std::vector<std::optional<std::size_t>> inverse_;
};

std::vector<std::size_t> involution_indices(const GroupModel& g, const IndexedBall& b) {
  std::vector<std::size_t> out;
  const Element id = g.identity();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != id && g.multiply(b[i], b[i]) == id) out.push_back(i);
  return out;
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// conj[c * m + i]: ball index of b_c inv_i b_c^-1, or npos outside the ball.
std::vector<std::size_t> conjugation_table(const IndexedBall& b, const std::vector<std::size_t>& inv) {
  const std::size_t m = inv.size();
  std::vector<std::size_t> conj(b.size() * m, npos);
  for (std::size_t c = 0; c < b.size(); ++c)
    for (std::size_t i = 0; i < m; ++i)
      if (auto y = b.conjugate(c, inv[i])) conj[c * m + i] = *y;
  return conj;
}

std::vector<InvolutionClass> classify_involutions(const IndexedBall& b, const std::vector<std::size_t>& inv,
                                                  const std::vector<std::size_t>& conj) {
  std::unordered_map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < inv.size(); ++i) pos.emplace(inv[i], i);
  UnionFind uf(inv.size());
  for (std::size_t c = 0; c < b.size(); ++c)
    for (std::size_t i = 0; i < inv.size(); ++i) {
      const auto y = conj[c * inv.size() + i];
      if (y == npos) continue;
      auto it = pos.find(y);
      if (it != pos.end()) uf.unite(i, it->second);
    }
  std::map<std::size_t, InvolutionClass> classes;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    auto& cls = classes[uf.find(i)];
    if (cls.members.empty()) cls.representative = b[inv[i]];
    cls.members.push_back(b[inv[i]]);
  }
  std::vector<InvolutionClass> out;
  for (auto& [root, cls] : classes) out.push_back(std::move(cls));
  return out;
}

// <x,y> = {t^k, t^k x} with t = xy of infinite order.
std::vector<std::size_t> dihedral_in_ball(const GroupModel& g, const IndexedBall& b, std::size_t x, std::size_t y) {
  const Element t = g.multiply(b[x], b[y]);
  const Element t_inv = g.inverse(t);
  std::vector<std::size_t> out;
  auto add = [&](const Element& e) {
    if (auto i = b.find(e)) out.push_back(*i);
  };
  Element up = g.identity(), down = g.identity();
  add(up);
  add(b[x]);
  for (std::size_t k = 1; k <= g.power_bound(); ++k) {
    up = g.multiply(up, t);
    down = g.multiply(down, t_inv);
    add(up);
    add(down);
    add(g.multiply(up, b[x]));
    add(g.multiply(down, b[x]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Work {
  IndexedBall ball;
  std::vector<std::size_t> inv;
  std::vector<InvolutionClass> involution_classes;
  std::vector<DihedralRecord> records;
  std::vector<std::vector<std::size_t>> record_members;
  std::size_t classes = 0;
  MidCount mid;
  PropertyReport props;
};

std::unique_ptr<Work> analyse(const GroupModel& g, const CensusOptions& opts, bool want_properties) {
  auto w = std::make_unique<Work>(Work{IndexedBall(g), {}, {}, {}, {}, 0, {}, {}});
  auto& b = w->ball;
  if (b.size() == 0 || b[0] != g.identity()) throw InvalidArgument("census: ball must start with the identity");
  w->inv = involution_indices(g, b);
  const auto conj = conjugation_table(b, w->inv);
  w->involution_classes = classify_involutions(b, w->inv, conj);

  const std::size_t m = w->inv.size();
  if (m * (m > 0 ? m - 1 : 0) / 2 > opts.max_pairs)
    throw CapExceeded("census: " + std::to_string(m) + " involutions give more than " +
                      std::to_string(opts.max_pairs) + " pairs");

  std::map<std::vector<std::size_t>, std::size_t> by_members;
  // Keyed by positions (i, j), i < j, in the involution list.
  std::unordered_map<std::size_t, std::size_t> pair_record;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Element t = g.multiply(b[w->inv[i]], b[w->inv[j]]);
      if (!g.has_infinite_order(t)) continue;
      auto members = dihedral_in_ball(g, b, w->inv[i], w->inv[j]);
      auto [it, inserted] = by_members.try_emplace(members, w->records.size());
      if (inserted) {
        DihedralRecord r;
        r.x = b[w->inv[i]];
        r.y = b[w->inv[j]];
        r.translation = t;
        for (auto idx : members) r.members.push_back(b[idx]);
        w->records.push_back(std::move(r));
        w->record_members.push_back(std::move(members));
      }
      pair_record[i * m + j] = it->second;
    }

  const std::size_t nrec = w->records.size();
  // Records containing a given ball element; a record containing r contains r.x.
  std::vector<std::vector<std::size_t>> containing(b.size());
  for (std::size_t r = 0; r < nrec; ++r)
    for (auto e : w->record_members[r]) containing[e].push_back(r);
  auto supersets = [&](std::size_t r) {
    std::vector<std::size_t> out;
    const auto& small = w->record_members[r];
    for (auto s : containing[*b.find(w->records[r].x)]) {
      const auto& big = w->record_members[s];
      if (s != r && big.size() > small.size() && std::includes(big.begin(), big.end(), small.begin(), small.end()))
        out.push_back(s);
    }
    return out;
  };
  std::vector<std::vector<std::size_t>> above(nrec);
  for (std::size_t r = 0; r < nrec; ++r) {
    above[r] = supersets(r);
    w->records[r].maximal_in_ball = above[r].empty();
  }

  // Conjugate generator pairs; a pair already seen names its record directly.
  UnionFind uf(nrec);
  std::unordered_map<std::size_t, std::size_t> inv_pos;
  for (std::size_t i = 0; i < m; ++i) inv_pos.emplace(w->inv[i], i);
  for (std::size_t r = 0; r < nrec; ++r) {
    const auto xi = inv_pos.at(*b.find(w->records[r].x));
    const auto yi = inv_pos.at(*b.find(w->records[r].y));
    for (std::size_t c = 0; c < b.size(); ++c) {
      const auto cx = conj[c * m + xi], cy = conj[c * m + yi];
      if (cx == npos || cy == npos) continue;
      auto px = inv_pos.at(cx), py = inv_pos.at(cy);
      if (px > py) std::swap(px, py);
      auto it = pair_record.find(px * m + py);
      if (it != pair_record.end()) uf.unite(r, it->second);
    }
  }
  std::map<std::size_t, std::size_t> class_ids;
  for (std::size_t r = 0; r < nrec; ++r) {
    auto [it, inserted] = class_ids.try_emplace(uf.find(r), class_ids.size());
    w->records[r].conjugacy_class = it->second;
  }
  w->classes = class_ids.size();

  // (mid) census.
  std::set<std::size_t> maximal_classes;
  for (std::size_t r = 0; r < nrec; ++r)
    if (w->records[r].maximal_in_ball && maximal_classes.insert(w->records[r].conjugacy_class).second)
      w->mid.representatives.push_back(r);
  w->mid.count = maximal_classes.size();
  w->mid.confidence = Confidence::ball_lower_bound;
  if (nrec == 0 && g.saturated()) {
    w->mid.confidence = Confidence::exact;
  } else if (maximal_classes.size() == 1) {
    // A record containing every group generator is the whole group, hence the
    // unique maximal infinite dihedral subgroup.
    const auto& top = w->record_members[w->mid.representatives.front()];
    bool whole = true;
    for (const auto& gen : g.generators()) {
      auto idx = b.find(gen);
      if (!idx || !std::binary_search(top.begin(), top.end(), *idx)) whole = false;
    }
    if (whole) w->mid.confidence = Confidence::exact;
  }

  if (want_properties) {
    auto& p = w->props;
    // C: centralizers of involutions contain no infinite-order element.
    bool c_fail = false;
    for (auto h : w->inv) {
      for (std::size_t x = 0; x < b.size() && !c_fail; ++x) {
        auto xh = b.mul(x, h);
        auto hx = b.mul(h, x);
        if (!xh || !hx || *xh != *hx) continue;
        if (g.has_infinite_order(b[x])) {
          c_fail = true;
          p.witnesses.push_back("C: " + g.format(b[x]) + " has infinite order and commutes with involution " +
                                g.format(b[h]));
        }
      }
      if (c_fail) break;
    }
    p.centralizers = c_fail ? Verdict::fail : (g.saturated() ? Verdict::pass : Verdict::inconclusive);

    bool m_fail = false;
    for (std::size_t r = 0; r < nrec && !m_fail; ++r) {
      std::vector<std::size_t> tops;
      if (w->records[r].maximal_in_ball) continue;
      for (auto s : above[r])
        if (w->records[s].maximal_in_ball) tops.push_back(s);
      if (tops.size() >= 2) {
        m_fail = true;
        const auto& rr = w->records[r];
        const auto& t0 = w->records[tops[0]];
        const auto& t1 = w->records[tops[1]];
        p.witnesses.push_back("M: <" + g.format(rr.x) + ", " + g.format(rr.y) + "> lies in maximal <" +
                              g.format(t0.x) + ", " + g.format(t0.y) + "> and <" + g.format(t1.x) + ", " +
                              g.format(t1.y) + ">");
      }
    }
    const bool certified = g.saturated() || w->mid.confidence == Confidence::exact;
    p.unique_maximal = m_fail ? Verdict::fail : (certified ? Verdict::pass : Verdict::inconclusive);
  }
  return w;
}

}  // namespace

std::unique_ptr<GroupModel> make_racg_model(const CoxeterSystem& sys, std::size_t radius) {
  auto words = df::ball(sys, radius);
  // Finite group iff no element reaches the boundary length.
  bool saturated = std::none_of(words.begin(), words.end(), [&](const CoxWord& w) { return w.size() == radius; });
  if (radius == 0) saturated = sys.rank() == 0;
  return std::make_unique<RacgModel>(sys, std::move(words), saturated);
}

std::unique_ptr<GroupModel> make_racg_model_from_words(const CoxeterSystem& sys, const std::vector<CoxWord>& words,
                                                       bool saturated) {
  return std::make_unique<RacgModel>(sys, words, saturated);
}

std::unique_ptr<GroupModel> make_crystal_model(int n, int radius) {
  return std::make_unique<CrystalModel>(n, radius);
}

std::string to_string(Confidence c) { return c == Confidence::exact ? "exact" : "ball-lower-bound"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::vector<InvolutionClass> involutions(const GroupModel& g) {
  IndexedBall b(g);
  const auto inv = involution_indices(g, b);
  return classify_involutions(b, inv, conjugation_table(b, inv));
}

std::vector<DihedralRecord> dihedral_subgroups(const GroupModel& g, const CensusOptions& opts) {
  return analyse(g, opts, false)->records;
}

MidCount mid_count(const GroupModel& g, const CensusOptions& opts) { return analyse(g, opts, false)->mid; }

PropertyReport property_checks(const GroupModel& g, const CensusOptions& opts) {
  return analyse(g, opts, true)->props;
}

Census run_census(const GroupModel& g, const CensusOptions& opts) {
  auto w = analyse(g, opts, true);
  Census c;
  c.model = g.kind();
  c.ball_size = w->ball.size();
  c.involution_classes = std::move(w->involution_classes);
  c.dihedrals = std::move(w->records);
  c.dihedral_classes = w->classes;
  c.mid = std::move(w->mid);
  c.properties = std::move(w->props);
  return c;
}

}  // namespace df
