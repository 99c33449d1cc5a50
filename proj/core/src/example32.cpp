#include "df/example32.hpp"

#include "df/errors.hpp"
#include "df/finite_group.hpp"

namespace df {

namespace {

std::string homology_str(const std::vector<AbelianGroupDescriptor>& h) {
  std::string out;
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (h[d].is_trivial()) continue;
    if (!out.empty()) out += ", ";
    out += "H" + std::to_string(d) + "=" + h[d].str();
  }
  return out.empty() ? "all zero" : out;
}

bool all_trivial(const std::vector<AbelianGroupDescriptor>& h) {
  for (const auto& g : h)
    if (!g.is_trivial()) return false;
  return true;
}

}  // namespace

bool PipelineReport::ok() const {
  for (const auto& s : steps)
    if (!s.ok) return false;
  return !steps.empty();
}

PipelineReport run_pipeline(const SimplicialComplex& mk, int m, int n, const std::string& vertex, bool search_a5) {
  if (m < 1) throw InvalidArgument("pipeline needs m >= 1");
  if (n - m < 2) throw InvalidArgument("pipeline needs n - m >= 2");
  if (mk.vertex_count() == 0) throw InvalidArgument("pipeline needs a non-empty complex");
  PipelineReport rep;
  rep.m = m;
  rep.n = n;
  rep.removed_vertex = vertex.empty() ? mk.labels().front() : vertex;

  const auto mc = simplicial_chain_complex(mk);
  const auto mh = homology(mc);
  rep.steps.push_back({"M is a homology " + std::to_string(m) + "-sphere",
                       mk.dimension() == m && is_homology_sphere(mc, m), homology_str(mh)});

  const auto ls = link_and_star(mk, rep.removed_vertex);
  const auto& c = ls.star_complement;
  const auto& dc = ls.link;
  const auto cc = simplicial_chain_complex(c);
  const auto dcc = simplicial_chain_complex(dc);
  rep.steps.push_back({"C acyclic", all_trivial(reduced_homology(cc)), homology_str(reduced_homology(cc))});
  rep.steps.push_back({"dC is a homology " + std::to_string(m - 1) + "-sphere", is_homology_sphere(dcc, m - 1),
                       homology_str(homology(dcc))});

  const int k = n - m - 1;
  const auto disk = disk_chain_complex(k);
  const auto sphere = sphere_chain_complex(k - 1);
  const auto s_in_d = sphere_into_disk(k);
  const auto incl = inclusion_map(dc, c);
  const auto id_c = identity_map(cc);
  const auto id_dc = identity_map(dcc);
  const auto id_s = identity_map(sphere);
  const auto id_d = identity_map(disk);

  const auto a = tensor_product(cc, disk);
  const auto z = tensor_product(dcc, sphere);
  const auto x = tensor_product(cc, sphere);
  const auto y = tensor_product(dcc, disk);
  const auto f = tensor_product(incl, dcc, cc, id_s, sphere, sphere);
  const auto g = tensor_product(id_dc, dcc, dcc, s_in_d, sphere, disk);
  const auto da = double_mapping_cone(f, g, z, x, y);

  // (x, y) -> (id x incl) x + (incl x id) y, so that phi on (f z, -g z) vanishes.
  const auto x_to_a = tensor_product(id_c, cc, cc, s_in_d, sphere, disk);
  const auto y_to_a = tensor_product(incl, dcc, cc, id_d, disk, disk);
  const auto phi = copair_map(x_to_a, y_to_a, x, y, a);
  const auto xy = direct_sum(x, y);
  const auto h = pair_map(f, negate(g), z, x, y);
  const auto da_to_a = map_from_cone(h, phi, z, xy, a);

  rep.steps.push_back({"A acyclic", all_trivial(reduced_homology(a)), homology_str(reduced_homology(a))});
  rep.boundary_homology = homology(da);
  rep.steps.push_back({"dA is a homology " + std::to_string(n - 2) + "-sphere", is_homology_sphere(da, n - 2),
                       homology_str(rep.boundary_homology)});

  const auto l = mapping_cone(da_to_a, da, a);
  rep.cone_reduced_homology = reduced_homology(l);
  bool l_sphere = true;
  for (std::size_t d = 0; d < rep.cone_reduced_homology.size(); ++d) {
    const bool want_z = static_cast<int>(d) == n - 1;
    const auto& hd = rep.cone_reduced_homology[d];
    if (want_z ? !hd.is_infinite_cyclic() : !hd.is_trivial()) l_sphere = false;
  }
  if (static_cast<int>(rep.cone_reduced_homology.size()) <= n - 1) l_sphere = false;
  rep.steps.push_back({"L is a homology " + std::to_string(n - 1) + "-sphere", l_sphere,
                       "reduced " + homology_str(rep.cone_reduced_homology)});

  rep.pi1 = simplify(pi1_presentation(mk, mk.labels().front()));
  if (search_a5) {
    const auto a5 = FiniteGroup::alternating(5);
    rep.a5_images = find_epimorphism(rep.pi1, a5);
    std::string detail = std::to_string(rep.pi1.generators) + " generators, " +
                         std::to_string(rep.pi1.relators.size()) + " relators";
    if (rep.a5_images) {
      detail += "; images";
      for (auto v : *rep.a5_images) detail += " " + std::to_string(v);
    }
    rep.steps.push_back({"pi1(M) maps onto A5", rep.a5_images.has_value(), detail});
  }
  return rep;
}

}  // namespace df
