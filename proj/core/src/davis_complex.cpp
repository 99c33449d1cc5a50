#include "df/davis_complex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "df/errors.hpp"

namespace df {

namespace {

// Packs the bits of `value` selected by `mask` into the low bits.
std::uint64_t extract_bits(std::uint32_t value, std::uint32_t mask) {
  std::uint64_t out = 0;
  int k = 0;
  for (std::uint32_t m = mask; m; m &= m - 1) {
    const std::uint32_t low = m & (~m + 1);
    if (value & low) out |= std::uint64_t{1} << k;
    ++k;
  }
  return out;
}

std::uint32_t deposit_bits(std::uint64_t packed, std::uint32_t mask) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t m = mask; m; m &= m - 1) {
    const std::uint32_t low = m & (~m + 1);
    if ((packed >> k) & 1U) out |= low;
    ++k;
  }
  return out;
}

}  // namespace

int CubicalCell::dimension() const { return std::popcount(free); }

DavisComplex::DavisComplex(SimplicialComplex k, std::size_t max_generators)
    : k_(std::move(k)), n_(k_.vertex_count()) {
  const std::size_t cap = std::min(max_generators, kHardMaxGenerators);
  if (n_ > cap)
    throw CapExceeded("Davis complex needs |S| = " + std::to_string(n_) + " generators but the cap is " +
                      std::to_string(cap) + " (raise it to at least " + std::to_string(n_) + ")");
  faces_.push_back(0);
  for (const auto& s : k_.simplices()) {
    std::uint32_t m = 0;
    for (auto v : s) m |= 1U << v;
    faces_.push_back(m);
  }
  std::sort(faces_.begin(), faces_.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  const int top = std::popcount(faces_.back());
  faces_by_dim_.resize(static_cast<std::size_t>(top) + 1);
  offsets_.resize(static_cast<std::size_t>(top) + 1);
  dim_counts_.assign(static_cast<std::size_t>(top) + 1, 0);
  for (auto f : faces_) {
    const auto d = static_cast<std::size_t>(std::popcount(f));
    faces_by_dim_[d].push_back(f);
    offsets_[d].push_back(dim_counts_[d]);
    dim_counts_[d] += std::uint64_t{1} << (n_ - d);
  }
  for (auto c : dim_counts_) total_ += c;
}

bool DavisComplex::has_face(std::uint32_t mask) const {
  const auto d = static_cast<std::size_t>(std::popcount(mask));
  if (d >= faces_by_dim_.size()) return false;
  return std::binary_search(faces_by_dim_[d].begin(), faces_by_dim_[d].end(), mask);
}

int DavisComplex::dimension() const { return static_cast<int>(faces_by_dim_.size()) - 1; }

std::uint64_t DavisComplex::cell_count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return dim_counts_[static_cast<std::size_t>(dim)];
}

std::int64_t DavisComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (int d = 0; d <= dimension(); ++d) {
    const auto c = static_cast<std::int64_t>(cell_count(d));
    chi += d % 2 == 0 ? c : -c;
  }
  return chi;
}

bool DavisComplex::contains(const CubicalCell& c) const {
  return (c.free & c.signs) == 0 && (c.signs & ~full_mask()) == 0 && has_face(c.free);
}

std::uint64_t DavisComplex::index_in_dim(const CubicalCell& c) const {
  if (!contains(c)) throw InvalidArgument("cell is not in the Davis complex");
  const auto d = static_cast<std::size_t>(c.dimension());
  const auto& fs = faces_by_dim_[d];
  const auto pos = static_cast<std::size_t>(std::lower_bound(fs.begin(), fs.end(), c.free) - fs.begin());
  return offsets_[d][pos] + extract_bits(c.signs, full_mask() & ~c.free);
}

CubicalCell DavisComplex::cell_in_dim(int dim, std::uint64_t index) const {
  if (index >= cell_count(dim)) throw InvalidArgument("cell index out of range");
  const auto d = static_cast<std::size_t>(dim);
  const auto& offs = offsets_[d];
  const auto pos = static_cast<std::size_t>(std::upper_bound(offs.begin(), offs.end(), index) - offs.begin()) - 1;
  const std::uint32_t free = faces_by_dim_[d][pos];
  return {free, deposit_bits(index - offs[pos], full_mask() & ~free)};
}

std::vector<CubicalCell> DavisComplex::cells_of_dim(int dim) const {
  std::vector<CubicalCell> out;
  const auto n = cell_count(dim);
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(cell_in_dim(dim, i));
  return out;
}

std::vector<std::pair<CubicalCell, int>> DavisComplex::boundary(const CubicalCell& c) const {
  std::vector<std::pair<CubicalCell, int>> out;
  int rank = 0;
  for (std::uint32_t m = c.free; m; m &= m - 1, ++rank) {
    const std::uint32_t bit = m & (~m + 1);
    const int sign = rank % 2 == 0 ? 1 : -1;
    const std::uint32_t free = c.free & ~bit;
    out.push_back({CubicalCell{free, c.signs}, sign});
    out.push_back({CubicalCell{free, c.signs | bit}, -sign});
  }
  return out;
}

std::vector<CubicalCell> DavisComplex::cofaces(const CubicalCell& c) const {
  std::vector<CubicalCell> out;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t bit = 1U << i;
    if (c.free & bit) continue;
    if (!has_face(c.free | bit)) continue;
    out.push_back({c.free | bit, c.signs & ~bit});
  }
  return out;
}

std::uint32_t DavisComplex::mask_of(const SignVector& e) const {
  if (e.size() != n_)
    throw InvalidArgument("sign vector has length " + std::to_string(e.size()) + ", expected " + std::to_string(n_));
  return static_cast<std::uint32_t>(e.mask());
}

CubicalCell DavisComplex::vertex(const SignVector& v) const { return {0, mask_of(v)}; }

ChainComplex davis_chain_complex(const DavisComplex& p, std::uint64_t max_cells) {
  if (p.cell_count() > max_cells)
    throw CapExceeded("Davis complex has " + std::to_string(p.cell_count()) + " cells; chain budget is " +
                      std::to_string(max_cells));
  const int top = std::max(p.dimension(), 0);
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= top; ++d) ranks.push_back(static_cast<std::size_t>(p.cell_count(d)));
  std::vector<SparseMatrix> bd;
  for (int d = 1; d <= top; ++d) {
    SparseMatrix t(ranks[static_cast<std::size_t>(d)], ranks[static_cast<std::size_t>(d - 1)]);
    for (std::uint64_t j = 0; j < p.cell_count(d); ++j) {
      for (const auto& [face, sign] : p.boundary(p.cell_in_dim(d, j)))
        t.add(static_cast<std::size_t>(j), static_cast<std::size_t>(p.index_in_dim(face)), Int(sign));
    }
    bd.push_back(t.transposed());
  }
  return ChainComplex(std::move(ranks), std::move(bd));
}

VertexLink vertex_link(const DavisComplex& p, const CubicalCell& vertex) {
  if (vertex.free != 0) throw InvalidArgument("vertex_link: cell of dimension " + std::to_string(vertex.dimension()));
  if (!p.contains(vertex)) throw InvalidArgument("vertex_link: not a vertex of the complex");
  // Every cell containing the vertex is reached by climbing cofaces; its free
  // coordinates form a simplex of the link.
  std::set<CubicalCell> seen{vertex};
  std::deque<CubicalCell> queue{vertex};
  std::vector<Simplex> simplices;
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    if (c.free) {
      Simplex s;
      for (std::uint32_t i = 0; i < p.generator_count(); ++i)
        if (c.free & (1U << i)) s.push_back(i);
      simplices.push_back(std::move(s));
    }
    for (const auto& up : p.cofaces(c))
      if (seen.insert(up).second) queue.push_back(up);
  }
  VertexLink out{SimplicialComplex::from_facets(p.base().labels(), simplices), false};
  out.matches_base = out.link == p.base();
  return out;
}

VertexLink vertex_link(const DavisComplex& p, const SignVector& vertex) { return vertex_link(p, p.vertex(vertex)); }

CubicalCell act_mask(std::uint32_t e, const CubicalCell& c) { return {c.free, c.signs ^ (e & ~c.free)}; }

CubicalCell act(const DavisComplex& p, const SignVector& e, const CubicalCell& c) {
  return act_mask(p.mask_of(e), c);
}

FixedSetReport fixed_set_mask(const DavisComplex& p, std::uint32_t e) {
  FixedSetReport r;
  const int support = std::popcount(e);
  for (auto f : p.faces()) {
    if ((e & ~f) != 0) continue;
    const int dim = std::popcount(f);
    FixedFace ff{f, dim - support, std::uint64_t{1} << (p.generator_count() - static_cast<std::size_t>(dim))};
    r.fixed_cells += ff.cell_count;
    if (ff.locus_dimension > 0) r.is_discrete = false;
    r.faces.push_back(ff);
  }
  return r;
}

FixedSetReport fixed_set(const DavisComplex& p, const SignVector& e) { return fixed_set_mask(p, p.mask_of(e)); }

std::string format_cell(const DavisComplex& p, const CubicalCell& c) {
  std::string out;
  const auto& labels = p.base().labels();
  for (std::uint32_t i = 0; i < p.generator_count(); ++i) {
    const std::uint32_t bit = 1U << i;
    if (!out.empty()) out += ' ';
    out += labels[i] + (c.free & bit ? ":*" : (c.signs & bit ? ":-" : ":+"));
  }
  return "[" + out + "]";
}

}  // namespace df
