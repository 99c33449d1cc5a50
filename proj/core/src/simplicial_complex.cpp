#include "df/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "df/errors.hpp"

namespace df {

namespace {

constexpr std::size_t kMaxFacetSize = 24;

void insert_faces(const Simplex& facet, std::set<Simplex>& out) {
  const std::size_t k = facet.size();
  if (k > kMaxFacetSize)
    throw CapExceeded("facet with " + std::to_string(k) + " vertices exceeds the closure cap of " +
                      std::to_string(kMaxFacetSize));
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint32_t{1} << i)) face.push_back(facet[i]);
    out.insert(std::move(face));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels,
                                                 const std::vector<Simplex>& facets) {
  SimplicialComplex k;
  std::set<Simplex> all;
  for (std::uint32_t v = 0; v < labels.size(); ++v) all.insert(Simplex{v});
  for (Simplex f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) continue;
    if (f.back() >= labels.size())
      throw InvalidArgument("facet references vertex index " + std::to_string(f.back()) +
                            " but only " + std::to_string(labels.size()) + " labels exist");
    insert_faces(f, all);
  }
  k.labels_ = std::move(labels);
  for (const auto& s : all) {
    const std::size_t d = s.size() - 1;
    if (k.by_dim_.size() <= d) k.by_dim_.resize(d + 1);
    k.by_dim_[d].push_back(s);
  }
  // std::set iterates lexicographically, which within a fixed size is the order we want.
  return k;
}

SimplicialComplex SimplicialComplex::from_label_facets(
    const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  std::map<std::string, std::uint32_t> index;
  std::vector<Simplex> idx_facets;
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& l : f) {
      auto [it, inserted] = index.try_emplace(l, static_cast<std::uint32_t>(labels.size()));
      if (inserted) labels.push_back(l);
      s.push_back(it->second);
    }
    idx_facets.push_back(std::move(s));
  }
  return from_facets(std::move(labels), idx_facets);
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
  std::vector<std::string> labels;
  Simplex f;
  for (int i = 0; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    f.push_back(static_cast<std::uint32_t>(i));
  }
  return from_facets(std::move(labels), {f});
}

SimplicialComplex SimplicialComplex::simplex_boundary(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n; ++skip) {
    Simplex f;
    for (int i = 0; i <= n; ++i)
      if (i != skip) f.push_back(static_cast<std::uint32_t>(i));
    facets.push_back(std::move(f));
  }
  return from_facets(std::move(labels), facets);
}

SimplicialComplex SimplicialComplex::cycle(int k) {
  if (k < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<std::string> labels;
  std::vector<Simplex> facets;
  for (int i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    facets.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + 1) % k)});
  }
  return from_facets(std::move(labels), facets);
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& v : by_dim_) n += v.size();
  return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices_of_dim(int d) const {
  static const std::vector<Simplex> kEmpty;
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[static_cast<std::size_t>(d)];
}

std::vector<Simplex> SimplicialComplex::simplices() const {
  std::vector<Simplex> out;
  out.reserve(simplex_count());
  for (const auto& v : by_dim_) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const auto& s : by_dim_[static_cast<std::size_t>(d)]) {
      bool maximal = true;
      if (d + 1 <= dimension()) {
        for (std::uint32_t v = 0; v < labels_.size() && maximal; ++v) {
          if (std::binary_search(s.begin(), s.end(), v)) continue;
          Simplex t = s;
          t.insert(std::upper_bound(t.begin(), t.end(), v), v);
          if (contains(t)) maximal = false;
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_in_dim(s).has_value(); }

std::optional<std::size_t> SimplicialComplex::index_in_dim(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& v = simplices_of_dim(static_cast<int>(s.size()) - 1);
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

std::optional<std::uint32_t> SimplicialComplex::find_vertex(const std::string& label) const {
  for (std::uint32_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::uint32_t SimplicialComplex::vertex_index(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) throw InvalidArgument("unknown vertex '" + label + "'");
  return *v;
}

SimplicialComplex SimplicialComplex::subcomplex(const std::vector<Simplex>& generators) const {
  std::vector<bool> used(labels_.size(), false);
  for (const auto& g : generators)
    for (auto v : g) used.at(v) = true;
  std::vector<std::uint32_t> renumber(labels_.size(), 0);
  std::vector<std::string> labels;
  for (std::uint32_t v = 0; v < labels_.size(); ++v) {
    if (!used[v]) continue;
    renumber[v] = static_cast<std::uint32_t>(labels.size());
    labels.push_back(labels_[v]);
  }
  std::vector<Simplex> facets;
  facets.reserve(generators.size());
  for (const auto& g : generators) {
    Simplex s;
    for (auto v : g) s.push_back(renumber[v]);
    facets.push_back(std::move(s));
  }
  return from_facets(std::move(labels), facets);
}

std::string SimplicialComplex::simplex_label(const Simplex& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += labels_.at(s[i]);
  }
  return out + "}";
}

bool is_flag(const SimplicialComplex& k) {
  // A minimal non-face of size >= 3 is some tau + {v} with tau a face, all of whose
  // codimension-one faces are present. Scanning tau of size >= 2 finds them all.
  const auto n = static_cast<std::uint32_t>(k.vertex_count());
  for (int d = 1; d <= k.dimension(); ++d) {
    for (const auto& tau : k.simplices_of_dim(d)) {
      for (std::uint32_t v = tau.back() + 1; v < n; ++v) {
        Simplex sigma = tau;
        sigma.push_back(v);
        if (k.contains(sigma)) continue;
        bool all_faces = true;
        for (std::size_t drop = 0; drop + 1 < sigma.size() && all_faces; ++drop) {
          Simplex face;
          for (std::size_t i = 0; i < sigma.size(); ++i)
            if (i != drop) face.push_back(sigma[i]);
          all_faces = k.contains(face);
        }
        if (all_faces) return false;
      }
    }
  }
  return true;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  const auto simplices = k.simplices();
  std::vector<std::string> labels;
  labels.reserve(simplices.size());
  for (const auto& s : simplices) labels.push_back(k.simplex_label(s));

  // Maximal chains are enough since from_facets closes downward. A chain is
  // maximal iff it starts at a vertex, grows one vertex at a time and ends at a facet.
  std::map<Simplex, std::uint32_t> index;
  for (std::uint32_t i = 0; i < simplices.size(); ++i) index.emplace(simplices[i], i);
  const auto facets = k.facets();

  std::vector<Simplex> chains;
  for (const auto& f : facets) {
    Simplex order(f.begin(), f.end());
    // Each permutation of the facet's vertices is one maximal chain.
    do {
      Simplex chain;
      Simplex prefix;
      for (auto v : order) {
        prefix.push_back(v);
        Simplex sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(index.at(sorted));
      }
      chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex::from_facets(std::move(labels), chains);
}

LinkAndStar link_and_star(const SimplicialComplex& k, const std::string& vertex) {
  const auto v = k.vertex_index(vertex);
  std::vector<Simplex> link_gen, star_gen, complement_gen;
  for (const auto& s : k.simplices()) {
    const bool has_v = std::binary_search(s.begin(), s.end(), v);
    if (has_v) {
      star_gen.push_back(s);
      Simplex rest;
      for (auto u : s)
        if (u != v) rest.push_back(u);
      if (!rest.empty()) link_gen.push_back(std::move(rest));
    } else {
      complement_gen.push_back(s);
    }
  }
  return {k.subcomplex(link_gen), k.subcomplex(star_gen), k.subcomplex(complement_gen)};
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  for (int d = 0; d <= k.dimension(); ++d) {
    const auto n = static_cast<std::int64_t>(k.simplices_of_dim(d).size());
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex) {
  if (k.find_vertex(apex)) throw InvalidArgument("cone apex '" + apex + "' already a vertex");
  auto labels = k.labels();
  const auto a = static_cast<std::uint32_t>(labels.size());
  labels.push_back(apex);
  std::vector<Simplex> facets;
  for (auto f : k.facets()) {
    f.push_back(a);
    facets.push_back(std::move(f));
  }
  facets.push_back({a});
  return SimplicialComplex::from_facets(std::move(labels), facets);
}

}  // namespace df
