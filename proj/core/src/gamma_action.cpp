#include "df/gamma_action.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "df/errors.hpp"

namespace df {

ThetaMap::ThetaMap(const SimplicialComplex& k) : k_(k), n_(std::max(k.dimension(), 0)) {
  for (const auto& s : k_.simplices()) dims_.push_back(static_cast<int>(s.size()) - 1);
}

std::vector<std::size_t> ThetaMap::class_sizes() const {
  std::vector<std::size_t> sizes(codomain_size(), 0);
  for (int d : dims_) ++sizes[static_cast<std::size_t>(d)];
  return sizes;
}

bool ThetaMap::surjective() const {
  const auto sizes = class_sizes();
  return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s > 0; });
}

SignVector ThetaMap::apply(const SignVector& f) const {
  if (f.size() != dims_.size())
    throw InvalidArgument("theta: sign vector has length " + std::to_string(f.size()) + ", expected " +
                          std::to_string(dims_.size()));
  SignVector out(codomain_size());
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (f.flipped(i)) out.flip(static_cast<std::size_t>(dims_[i]));
  return out;
}

std::uint32_t ThetaMap::apply_mask(std::uint64_t f) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < dims_.size() && i < 64; ++i)
    if ((f >> i) & 1U) out ^= 1U << dims_[i];
  return out;
}

bool gamma_contains(const ThetaMap& t, const SignVector& f) {
  const auto image = t.apply(f);
  return image.is_identity() || image.is_all_minus();
}

bool gamma_member(const ThetaMap& t, const CoxeterSystem& sys, const CoxWord& w) {
  if (sys.rank() != t.domain_size())
    throw InvalidArgument("gamma_member: system has " + std::to_string(sys.rank()) +
                          " generators but K has " + std::to_string(t.domain_size()) + " simplices");
  return gamma_contains(t, phi(sys, w));
}

std::vector<SignVector> gamma_image_subgroup(const ThetaMap& t, std::size_t max_simplices) {
  const std::size_t m = t.domain_size();
  if (m > max_simplices || m > 62)
    throw CapExceeded("phi(Gamma) enumeration over " + std::to_string(m) + " simplices exceeds cap " +
                      std::to_string(max_simplices));
  // Within each dimension class pick any subset with the required parity; the
  // classes are independent, so enumerate class by class.
  std::vector<std::vector<std::size_t>> classes(t.codomain_size());
  for (std::size_t i = 0; i < m; ++i) classes[static_cast<std::size_t>(t.dimension_of(i))].push_back(i);

  std::vector<std::uint64_t> masks;
  for (int target : {0, 1}) {
    std::vector<std::uint64_t> partial{0};
    bool feasible = true;
    for (const auto& cls : classes) {
      std::vector<std::uint64_t> next;
      const std::size_t c = cls.size();
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << c); ++sub) {
        if (std::popcount(sub) % 2 != target) continue;
        std::uint64_t bits = 0;
        for (std::size_t j = 0; j < c; ++j)
          if ((sub >> j) & 1U) bits |= std::uint64_t{1} << cls[j];
        for (auto p : partial) next.push_back(p | bits);
      }
      partial = std::move(next);
      if (partial.empty()) {
        feasible = false;
        break;
      }
    }
    if (feasible) masks.insert(masks.end(), partial.begin(), partial.end());
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<SignVector> out;
  out.reserve(masks.size());
  for (auto mk : masks) out.push_back(SignVector::from_mask(mk, m));
  return out;
}

ComparisonMap::ComparisonMap(const ThetaMap& theta) : theta_(theta) {}

CubicalCell ComparisonMap::map_cell(const CubicalCell& c) const {
  CubicalCell out;
  for (std::size_t s = 0; s < theta_.domain_size(); ++s) {
    const std::uint32_t bit = 1U << s;
    const std::uint32_t t = 1U << theta_.dimension_of(s);
    if (c.free & bit) {
      if (out.free & t) throw InvalidArgument("comparison map: cube is not a chain of simplices");
      out.free |= t;
    }
  }
  for (std::size_t s = 0; s < theta_.domain_size(); ++s) {
    const std::uint32_t bit = 1U << s;
    const std::uint32_t t = 1U << theta_.dimension_of(s);
    if (!(out.free & t) && (c.signs & bit)) out.signs ^= t;
  }
  return out;
}

std::vector<int> ComparisonMap::map_point(const std::vector<int>& x) const {
  std::vector<int> y(theta_.codomain_size(), 1);
  for (std::size_t s = 0; s < x.size(); ++s) y[static_cast<std::size_t>(theta_.dimension_of(s))] *= x[s];
  return y;
}

namespace {

std::vector<int> point_of(const CubicalCell& c, std::size_t n, std::uint32_t corner_signs, bool centre) {
  std::vector<int> x(n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::uint32_t bit = 1U << s;
    if (c.free & bit) {
      x[s] = centre ? 0 : ((corner_signs & bit) ? -1 : 1);
    } else {
      x[s] = (c.signs & bit) ? -1 : 1;
    }
  }
  return x;
}

std::vector<int> act_point(std::uint64_t e, std::vector<int> x) {
  for (std::size_t s = 0; s < x.size(); ++s)
    if ((e >> s) & 1U) x[s] = -x[s];
  return x;
}

// Every subset of `mask`, including 0 and `mask`.
std::vector<std::uint32_t> submasks(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  std::uint32_t s = mask;
  for (;;) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
  return out;
}

std::string face_label(const ThetaMap& t, std::uint32_t face) {
  const auto simplices = t.complex().simplices();
  std::string out = "{";
  bool first = true;
  for (std::size_t s = 0; s < simplices.size(); ++s)
    if (face & (1U << s)) {
      if (!first) out += ",";
      out += t.complex().simplex_label(simplices[s]);
      first = false;
    }
  return out + "}";
}

}  // namespace

PseudoFreeReport pseudo_free_verdict(const SimplicialComplex& k, const PseudoFreeOptions& opts) {
  const ThetaMap theta(k);
  const auto bk = barycentric_subdivision(k);
  const DavisComplex p(bk, opts.max_generators);
  const DavisComplex target(SimplicialComplex::full_simplex(theta.top_dimension()), opts.max_generators);
  const ComparisonMap cmp(theta);
  const auto image = gamma_image_subgroup(theta, opts.max_simplices);

  PseudoFreeReport r;
  r.direct_ok = true;
  r.comparison_ok = true;
  r.routes_agree = true;
  r.cell_exhaustive = static_cast<std::uint64_t>(image.size()) * p.cell_count() <= opts.cell_budget;

  for (const auto& e : image) {
    if (e.is_identity()) continue;
    ++r.elements_checked;
    const std::uint32_t em = p.mask_of(e);

    // Route 1: fixed sets directly on P_bK.
    const auto direct = fixed_set_mask(p, em);
    std::map<std::uint32_t, int> direct_dims;
    for (const auto& f : direct.faces) {
      direct_dims[f.free] = f.locus_dimension;
      if (f.locus_dimension > 0)
        r.witnesses.push_back({e, f.free, face_label(theta, f.free), f.locus_dimension});
    }
    if (!direct.is_discrete) r.direct_ok = false;

    // Route 2: a cell is setwise fixed iff the action leaves its label alone;
    // the comparison map is injective on that cube, so its fixed locus is the
    // pullback of the fixed locus of theta(e) on the image cube of P_{Delta^n}.
    const std::uint32_t te = theta.apply_mask(em);
    std::map<std::uint32_t, int> target_dims;
    for (const auto& f : fixed_set_mask(target, te).faces) target_dims[f.free] = f.locus_dimension;

    for (auto face : p.faces()) {
      std::vector<std::uint32_t> sign_choices;
      const std::uint32_t rest = p.full_mask() & ~face;
      if (r.cell_exhaustive) {
        sign_choices = submasks(rest);
      } else {
        sign_choices = {0U, rest};
      }
      for (auto signs : sign_choices) {
        const CubicalCell c{face, signs};
        ++r.cells_compared;
        const bool setwise = act_mask(em, c) == c;
        const auto it = direct_dims.find(face);
        if (!setwise) {
          if (it != direct_dims.end()) r.routes_agree = false;
          continue;
        }
        const CubicalCell image_cell = cmp.map_cell(c);
        const auto jt = target_dims.find(image_cell.free);
        if (jt == target_dims.end() || act_mask(te, image_cell) != image_cell) {
          // Equivariance would force theta(e) to fix the image cube.
          r.comparison_ok = false;
          r.routes_agree = false;
          continue;
        }
        if (jt->second > 0) r.comparison_ok = false;
        if (it == direct_dims.end() || it->second != jt->second) r.routes_agree = false;
      }
    }
  }
  r.ok = r.direct_ok && r.comparison_ok && r.routes_agree;
  return r;
}

ComparisonReport comparison_map_check(const SimplicialComplex& k, const PseudoFreeOptions& opts,
                                      std::uint64_t pair_budget) {
  const ThetaMap theta(k);
  const auto bk = barycentric_subdivision(k);
  const DavisComplex p(bk, opts.max_generators);
  const DavisComplex target(SimplicialComplex::full_simplex(theta.top_dimension()), opts.max_generators);
  const ComparisonMap cmp(theta);
  const auto image = gamma_image_subgroup(theta, opts.max_simplices);
  const std::size_t n = theta.domain_size();

  ComparisonReport r;
  r.equivariant = true;
  r.injective_on_cubes = true;
  const std::uint64_t total_pairs = static_cast<std::uint64_t>(image.size()) * p.cell_count();
  r.exhaustive = total_pairs <= pair_budget;
  const std::uint64_t stride = r.exhaustive ? 1 : (total_pairs + pair_budget - 1) / pair_budget;

  for (int d = 0; d <= p.dimension(); ++d) {
    for (std::uint64_t idx = 0; idx < p.cell_count(d); idx += stride) {
      const CubicalCell c = p.cell_in_dim(d, idx);
      ++r.cells_checked;
      const CubicalCell mc = cmp.map_cell(c);
      if (!target.contains(mc) || mc.dimension() != c.dimension()) r.injective_on_cubes = false;

      // Injectivity: distinct corners go to distinct corners.
      std::set<std::vector<int>> images;
      const auto corners = submasks(c.free);
      for (auto corner : corners) images.insert(cmp.map_point(point_of(c, n, corner, false)));
      if (images.size() != corners.size()) r.injective_on_cubes = false;

      for (const auto& e : image) {
        ++r.pairs_checked;
        const std::uint64_t em = e.mask();
        const std::uint32_t te = theta.apply_mask(em);
        if (cmp.map_cell(act_mask(static_cast<std::uint32_t>(em), c)) != act_mask(te, mc)) r.equivariant = false;
        for (bool centre : {true, false}) {
          const auto x = point_of(c, n, 0, centre);
          if (cmp.map_point(act_point(em, x)) != act_point(te, cmp.map_point(x))) r.equivariant = false;
        }
      }
    }
  }
  return r;
}

}  // namespace df
