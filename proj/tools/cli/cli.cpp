#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "df/chain_complex.hpp"
#include "df/davis_complex.hpp"
#include "df/dihedral_census.hpp"
#include "df/errors.hpp"
#include "df/example32.hpp"
#include "df/gamma_action.hpp"
#include "df/group_presentation.hpp"
#include "df/heisenberg.hpp"
#include "df/io.hpp"
#include "df/smith.hpp"
#include "df/unil.hpp"

namespace dfcli {

namespace {

using json = nlohmann::ordered_json;

struct Check {
  std::string name;
  std::string status;  // pass, fail, inconclusive, info
  std::string detail;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<Check> verdicts;
  std::vector<std::string> witnesses;
  std::int64_t timing_ms = 0;

  void verdict(std::string name, bool ok, std::string detail = {}) {
    verdicts.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
  }
  void info(std::string name, std::string detail) {
    verdicts.push_back({std::move(name), "info", std::move(detail)});
  }
  bool failed() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Check& c) { return c.status == "fail"; });
  }
};

bool wants(const RunConfig& c, const std::string& action) {
  return c.actions.empty() || std::find(c.actions.begin(), c.actions.end(), action) != c.actions.end();
}

const std::string& single_input(const RunConfig& c) {
  if (c.inputs.size() != 1) throw UsageError(c.subcommand + ": expected exactly one input file");
  return c.inputs.front();
}

json homology_json(const std::vector<df::AbelianGroupDescriptor>& h) {
  json out = json::array();
  for (const auto& g : h) out.push_back(g.str());
  return out;
}

std::string homology_line(const std::vector<df::AbelianGroupDescriptor>& h) {
  std::string out;
  for (std::size_t d = 0; d < h.size(); ++d) out += (d ? ", " : "") + ("H" + std::to_string(d) + "=" + h[d].str());
  return out;
}

json f_vector(const df::SimplicialComplex& k) {
  json out = json::array();
  for (int d = 0; d <= k.dimension(); ++d) out.push_back(k.simplices_of_dim(d).size());
  return out;
}

// --- complex ---------------------------------------------------------------

void cmd_complex(const RunConfig& c, Report& r) {
  const auto& path = single_input(c);
  r.inputs["complex"] = path;
  const auto k = df::read_complex(path);
  r.results["vertices"] = k.vertex_count();
  r.results["dimension"] = k.dimension();
  r.results["f_vector"] = f_vector(k);
  if (wants(c, "flag")) {
    const bool flag = df::is_flag(k);
    r.results["flag"] = flag;
    r.info("flag", flag ? "true" : "false");
  }
  if (wants(c, "euler")) r.results["euler_characteristic"] = df::euler_characteristic(k);
  if (wants(c, "homology")) {
    const auto cc = df::simplicial_chain_complex(k);
    const auto h = df::homology(cc);
    r.results["homology"] = homology_json(h);
    r.results["reduced_homology"] = homology_json(df::reduced_homology(cc));
    std::int64_t chi = 0;
    for (std::size_t d = 0; d < h.size(); ++d)
      chi += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(h[d].free_rank);
    r.verdict("euler characteristic matches Betti numbers", chi == df::euler_characteristic(k),
              homology_line(h));
  }
  if (wants(c, "subdivide")) {
    const auto bk = df::barycentric_subdivision(k);
    r.results["subdivision"] = {{"vertices", bk.vertex_count()}, {"f_vector", f_vector(bk)},
                                {"flag", df::is_flag(bk)}};
    r.verdict("subdivision is flag", df::is_flag(bk));
  }
  if (wants(c, "pi1")) {
    if (k.vertex_count() == 0) throw df::InvalidArgument("pi1 of an empty complex");
    const auto p = df::simplify(df::pi1_presentation(k, k.labels().front()));
    r.results["pi1"] = {{"presentation", p.str()}, {"abelianization", df::abelianization(p).str()}};
    r.info("pi1", p.str());
  }
}

// --- davis -----------------------------------------------------------------

void cmd_davis(const RunConfig& c, Report& r) {
  const auto& path = single_input(c);
  r.inputs["complex"] = path;
  r.inputs["max_generators"] = c.caps.max_generators;
  const df::DavisComplex p(df::read_complex(path), c.caps.max_generators);
  const auto n = p.generator_count();
  json counts = json::array();
  for (int d = 0; d <= p.dimension(); ++d) counts.push_back(p.cell_count(d));
  r.results["generators"] = n;
  r.results["dimension"] = p.dimension();
  r.results["cells"] = counts;
  r.results["euler_characteristic"] = p.euler_characteristic();

  if (wants(c, "links")) {
    // Every vertex link is the same up to the group action; check all of them
    // when cheap, otherwise a seeded sample.
    const std::uint64_t vertices = std::uint64_t{1} << n;
    std::vector<std::uint32_t> picks;
    if (vertices <= 4096) {
      for (std::uint64_t v = 0; v < vertices; ++v) picks.push_back(static_cast<std::uint32_t>(v));
    } else {
      std::mt19937_64 rng(c.seed);
      for (int i = 0; i < 256; ++i) picks.push_back(static_cast<std::uint32_t>(rng() & p.full_mask()));
    }
    std::size_t bad = 0;
    for (auto v : picks) {
      const auto link = df::vertex_link(p, df::CubicalCell{0, v});
      if (!link.matches_base) {
        ++bad;
        if (r.witnesses.size() < 8) r.witnesses.push_back("link at " + df::format_cell(p, {0, v}) + " differs from K");
      }
    }
    r.results["links_checked"] = picks.size();
    r.verdict("every vertex link equals K", bad == 0, std::to_string(picks.size()) + " vertices checked");
  }
  if (wants(c, "homology")) {
    const auto h = df::homology(df::davis_chain_complex(p));
    r.results["homology"] = homology_json(h);
    std::int64_t chi = 0;
    for (std::size_t d = 0; d < h.size(); ++d)
      chi += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(h[d].free_rank);
    r.verdict("euler characteristic matches Betti numbers", chi == p.euler_characteristic(), homology_line(h));
  }
  if (wants(c, "fixed-sets")) {
    if (n > 16) throw df::CapExceeded("fixed-sets enumerates 2^|S| elements; |S| = " + std::to_string(n));
    std::size_t discrete = 0, empty = 0;
    json per_element = json::array();
    for (std::uint32_t e = 1; e <= p.full_mask(); ++e) {
      const auto fs = df::fixed_set_mask(p, e);
      if (fs.is_discrete) ++discrete;
      if (fs.fixed_cells == 0) ++empty;
      if (per_element.size() < 64) {
        int top = fs.faces.empty() ? -1 : 0;
        for (const auto& f : fs.faces) top = std::max(top, f.locus_dimension);
        per_element.push_back({{"element", df::SignVector::from_mask(e, n).str()},
                               {"fixed_cells", fs.fixed_cells},
                               {"locus_dimension", top}});
      }
    }
    r.results["fixed_sets"] = {{"elements", p.full_mask()},
                               {"discrete", discrete},
                               {"empty", empty},
                               {"sample", per_element}};
    r.info("fixed sets", std::to_string(discrete) + " of " + std::to_string(p.full_mask()) +
                             " nontrivial elements have discrete fixed sets");
  }
}

// --- gamma -----------------------------------------------------------------

void cmd_gamma(const RunConfig& c, Report& r) {
  const auto& path = single_input(c);
  r.inputs["complex"] = path;
  const auto k = df::read_complex(path);
  df::PseudoFreeOptions opts;
  opts.max_generators = c.caps.max_generators;
  const df::ThetaMap t(k);
  if (wants(c, "theta")) {
    json sizes = json::array();
    for (auto s : t.class_sizes()) sizes.push_back(s);
    r.results["theta"] = {{"domain", t.domain_size()},
                          {"codomain", t.codomain_size()},
                          {"class_sizes", sizes},
                          {"surjective", t.surjective()}};
    if (t.domain_size() <= opts.max_simplices)
      r.results["theta"]["image_subgroup_order"] = df::gamma_image_subgroup(t, opts.max_simplices).size();
    r.info("theta surjective", t.surjective() ? "true" : "false");
  }
  if (!c.word.empty()) {
    const auto sys = df::CoxeterSystem::from_complex(df::barycentric_subdivision(k));
    const auto w = sys.parse_word(c.word);
    const bool member = df::gamma_member(t, sys, w);
    r.inputs["word"] = c.word;
    r.results["member"] = member;
    r.info("gamma membership", member ? "true" : "false");
  }
  if (wants(c, "pseudofree")) {
    const auto rep = df::pseudo_free_verdict(k, opts);
    r.results["pseudofree"] = {{"ok", rep.ok},
                               {"direct", rep.direct_ok},
                               {"comparison", rep.comparison_ok},
                               {"routes_agree", rep.routes_agree},
                               {"elements_checked", rep.elements_checked},
                               {"cells_compared", rep.cells_compared},
                               {"cell_exhaustive", rep.cell_exhaustive}};
    r.verdict("pseudo-free (direct fixed sets)", rep.direct_ok);
    r.verdict("pseudo-free (comparison map)", rep.comparison_ok);
    r.verdict("routes agree", rep.routes_agree, std::to_string(rep.cells_compared) + " cells");
    for (const auto& w : rep.witnesses)
      r.witnesses.push_back(w.element.str() + " fixes " + w.face_label + " with locus dimension " +
                            std::to_string(w.locus_dimension));
  }
  if (wants(c, "comparison")) {
    const auto rep = df::comparison_map_check(k, opts);
    r.results["comparison"] = {{"equivariant", rep.equivariant},
                               {"injective_on_cubes", rep.injective_on_cubes},
                               {"pairs_checked", rep.pairs_checked},
                               {"cells_checked", rep.cells_checked},
                               {"exhaustive", rep.exhaustive}};
    r.verdict("comparison map equivariant", rep.equivariant);
    r.verdict("comparison map injective on cubes", rep.injective_on_cubes);
  }
}

// --- census ----------------------------------------------------------------

void cmd_census(const RunConfig& c, Report& r) {
  std::unique_ptr<df::GroupModel> g;
  if (c.crystal) {
    if (!c.inputs.empty()) throw UsageError("census: give either --crystal or a complex file");
    r.inputs["model"] = "crystal";
    r.inputs["n"] = *c.crystal;
    r.inputs["radius"] = c.caps.ball_radius;
    g = df::make_crystal_model(*c.crystal, c.caps.ball_radius);
  } else {
    const auto& path = single_input(c);
    r.inputs["model"] = "racg";
    r.inputs["complex"] = path;
    r.inputs["radius"] = c.caps.ball_length;
    g = df::make_racg_model(df::CoxeterSystem::from_complex(df::read_complex(path)), c.caps.ball_length);
  }
  df::CensusOptions opts;
  opts.max_pairs = c.caps.max_pairs;
  const auto census = df::run_census(*g, opts);
  r.results["ball_size"] = census.ball_size;
  if (wants(c, "involutions")) {
    json classes = json::array();
    for (const auto& cls : census.involution_classes)
      classes.push_back({{"representative", g->format(cls.representative)}, {"size", cls.members.size()}});
    r.results["involution_classes"] = classes;
  }
  if (wants(c, "dihedrals")) {
    json recs = json::array();
    for (const auto& d : census.dihedrals) {
      if (recs.size() >= 200) break;
      recs.push_back({{"x", g->format(d.x)},
                      {"y", g->format(d.y)},
                      {"translation", g->format(d.translation)},
                      {"class", d.conjugacy_class},
                      {"maximal_in_ball", d.maximal_in_ball},
                      {"ball_members", d.members.size()}});
    }
    r.results["dihedral_records"] = census.dihedrals.size();
    r.results["dihedral_classes"] = census.dihedral_classes;
    r.results["dihedrals"] = recs;
  }
  if (wants(c, "mid")) {
    json reps = json::array();
    for (auto i : census.mid.representatives) {
      const auto& d = census.dihedrals[i];
      reps.push_back("<" + g->format(d.x) + ", " + g->format(d.y) + ">");
    }
    r.results["mid"] = {{"count", census.mid.count},
                        {"confidence", df::to_string(census.mid.confidence)},
                        {"representatives", reps}};
    r.info("mid count", std::to_string(census.mid.count) + " (" + df::to_string(census.mid.confidence) + ")");
  }
  if (wants(c, "properties")) {
    const auto& p = census.properties;
    r.results["properties"] = {{"C_1_fin", df::to_string(p.centralizers)},
                               {"M_fbc_vc", df::to_string(p.unique_maximal)}};
    r.verdicts.push_back({"C_{1 < fin}", df::to_string(p.centralizers), "within the ball"});
    r.verdicts.push_back({"M_{fbc < vc}", df::to_string(p.unique_maximal), "within the ball"});
    for (const auto& w : p.witnesses) r.witnesses.push_back(w);
  }
}

// --- structset -------------------------------------------------------------

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  return i < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                     [](char ch) { return ch >= '0' && ch <= '9'; });
}

df::Verdict verdict_from(const std::string& s) {
  if (s == "pass") return df::Verdict::pass;
  if (s == "fail") return df::Verdict::fail;
  return df::Verdict::inconclusive;
}

void cmd_structset(const RunConfig& c, Report& r) {
  if (c.mid.empty()) throw UsageError("structset: --mid is required");
  r.inputs["n"] = c.n;
  long long count = 0;
  df::Confidence conf = df::Confidence::exact;
  std::optional<df::PropertyReport> bounded;
  if (is_integer(c.mid)) {
    count = std::stoll(c.mid);
    r.inputs["mid"] = count;
  } else {
    r.inputs["mid"] = c.mid;
    std::ifstream in(c.mid);
    if (!in) throw df::ParseError("cannot read " + c.mid);
    json census;
    try {
      census = json::parse(in);
      const auto& mid = census.at("results").at("mid");
      count = mid.at("count").get<long long>();
      conf = mid.at("confidence").get<std::string>() == "exact" ? df::Confidence::exact
                                                                : df::Confidence::ball_lower_bound;
      if (census["results"].contains("properties")) {
        const auto& pr = census["results"]["properties"];
        bounded = df::PropertyReport{verdict_from(pr.at("C_1_fin").get<std::string>()),
                                     verdict_from(pr.at("M_fbc_vc").get<std::string>()),
                                     {}};
      }
    } catch (const nlohmann::json::exception& e) {
      throw df::ParseError(c.mid + ": not a census report (" + e.what() + ")");
    }
  }
  const auto s = df::structure_set(c.n, count, conf);
  r.results["epsilon"] = df::epsilon(c.n);
  r.results["unil"] = df::to_string(s.summand);
  r.results["index_count"] = s.index_count;
  r.results["confidence"] = df::to_string(s.confidence);
  r.results["singleton"] = s.singleton;
  if (s.outside_hypotheses) r.results["flag"] = "outside-theorem-hypotheses";
  json items = json::array();
  for (const auto& item : df::hypothesis_checklist(bounded ? &*bounded : nullptr))
    items.push_back({{"item", item.number}, {"statement", item.statement}, {"status", df::to_string(item.status)}});
  r.results["hypotheses"] = items;
  r.info("structure set", s.str());
}

// --- example32 -------------------------------------------------------------

void cmd_example32(const RunConfig& c, Report& r) {
  const auto& path = single_input(c);
  r.inputs["sphere"] = path;
  r.inputs["m"] = c.m;
  r.inputs["n"] = c.n;
  const auto mk = df::read_complex(path);
  const auto rep = df::run_pipeline(mk, c.m, static_cast<int>(c.n), c.vertex);
  r.results["removed_vertex"] = rep.removed_vertex;
  r.results["boundary_homology"] = homology_json(rep.boundary_homology);
  r.results["cone_reduced_homology"] = homology_json(rep.cone_reduced_homology);
  r.results["pi1"] = rep.pi1.str();
  if (rep.a5_images) {
    json imgs = json::array();
    for (auto v : *rep.a5_images) imgs.push_back(v);
    r.results["a5_images"] = imgs;
  }
  for (const auto& s : rep.steps) r.verdict(s.name, s.ok, s.detail);
}

// --- heisenberg ------------------------------------------------------------

void cmd_heisenberg(const RunConfig& c, Report& r) {
  r.inputs["samples"] = c.caps.samples;
  r.inputs["seed"] = c.seed;
  const auto [a, b] = df::nonabelian_witness();
  const auto comm = df::hei_commutator(a.h, b.h);
  const bool central = comm.x.is_zero() && comm.y.is_zero() && !comm.is_identity();
  r.results["witness"] = {{"a", a.str()}, {"b", b.str()}, {"commutator", comm.str()}};
  r.verdict("nonabelian witness has central nontrivial commutator", central, comm.str());
  if (!c.selftest) return;
  const auto rep = df::heisenberg_selftest(c.caps.samples, c.seed);
  json checks = json::array();
  for (const auto& ch : rep.checks) {
    checks.push_back({{"name", ch.name}, {"trials", ch.trials}, {"failures", ch.failures}});
    r.verdict(ch.name, ch.failures == 0, std::to_string(ch.trials - ch.failures) + "/" + std::to_string(ch.trials));
    if (ch.failures) r.witnesses.push_back(ch.name + ": " + ch.first_failure);
  }
  r.results["selftest"] = checks;
}

// --- snf -------------------------------------------------------------------

void cmd_snf(const RunConfig& c, Report& r) {
  const auto& path = single_input(c);
  r.inputs["matrix"] = path;
  const auto m = df::read_matrix(path);
  const auto s = df::smith_normal_form(m);
  json diag = json::array();
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.d(i, i) != 0) diag.push_back(df::to_string(s.d(i, i)));
  r.results["rows"] = m.rows();
  r.results["cols"] = m.cols();
  r.results["diagonal"] = diag;
  r.verdict("U M V = D", s.u * m * s.v == s.d);
  r.verdict("U, V unimodular", df::is_unit(df::determinant(s.u)) && df::is_unit(df::determinant(s.v)));
}

// --- output ----------------------------------------------------------------

json to_json(const Report& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back({{"name", v.name}, {"status", v.status}, {"detail", v.detail}});
  return {{"command", r.command}, {"inputs", r.inputs},   {"verdicts", verdicts},
          {"witnesses", r.witnesses}, {"results", r.results}, {"timing_ms", r.timing_ms}};
}

void write_human_value(std::ostream& os, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) write_human_value(os, k, sub, indent + 2);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    os << pad << key << ":\n";
    for (const auto& sub : v) {
      os << pad << "  -";
      for (const auto& [k, x] : sub.items()) os << ' ' << k << '=' << (x.is_string() ? x.get<std::string>() : x.dump());
      os << '\n';
    }
  } else {
    os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

void write_human(std::ostream& os, const Report& r) {
  os << "command: " << r.command << '\n';
  for (const auto& [k, v] : r.inputs.items()) write_human_value(os, "input." + k, v, 0);
  for (const auto& [k, v] : r.results.items()) write_human_value(os, k, v, 0);
  for (const auto& v : r.verdicts) {
    os << '[' << v.status << "] " << v.name;
    if (!v.detail.empty()) os << ": " << v.detail;
    os << '\n';
  }
  for (const auto& w : r.witnesses) os << "witness: " << w << '\n';
  os << "timing_ms: " << r.timing_ms << '\n';
}

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  const std::string s(v);
  if (!std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) || std::stoull(s) == 0)
    throw UsageError(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(std::stoull(s));
}

}  // namespace

Caps caps_from_environment() {
  Caps c;
  c.max_generators = env_size("DF_MAX_S", c.max_generators);
  c.ball_length = env_size("DF_BALL_L", c.ball_length);
  c.ball_radius = static_cast<int>(env_size("DF_BALL_R", static_cast<std::size_t>(c.ball_radius)));
  return c;
}

std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  cfg.caps = caps_from_environment();
  CLI::App app{"Exact computations for cubical reflection groups and their structure sets", "dfcomp"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--output", cfg.output, "Write the report to a file");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");

  auto flags = [&](CLI::App* sub, const std::vector<std::string>& names) {
    for (const auto& n : names)
      sub->add_flag_callback("--" + n, [&cfg, n] { cfg.actions.push_back(n); }, "Run the " + n + " step");
  };
  std::size_t max_s = 0, radius = 0, max_pairs = 0, samples = 0;

  auto* complex = app.add_subcommand("complex", "Simplicial complex checks");
  complex->add_option("file", cfg.inputs, "Complex file")->required();
  flags(complex, {"flag", "subdivide", "homology", "pi1", "euler"});

  auto* davis = app.add_subcommand("davis", "Davis complex P_K");
  davis->add_option("file", cfg.inputs, "Complex file")->required();
  davis->add_option("--max-s", max_s, "Generator cap");
  flags(davis, {"build", "links", "homology", "fixed-sets"});

  auto* gamma = app.add_subcommand("gamma", "Reflection action of Gamma on P_bK");
  gamma->add_option("file", cfg.inputs, "Complex file")->required();
  gamma->add_option("--max-s", max_s, "Generator cap");
  gamma->add_option("--member", cfg.word, "Word in W_bK to test for membership");
  flags(gamma, {"theta", "pseudofree", "comparison"});

  auto* census = app.add_subcommand("census", "Involutions and infinite dihedral subgroups in a ball");
  census->add_option("file", cfg.inputs, "Complex file for W_K");
  census->add_option("--crystal", cfg.crystal, "Use Z^n x| C_2")->check(CLI::PositiveNumber);
  census->add_option("--radius", radius, "Ball radius")->check(CLI::PositiveNumber);
  census->add_option("--max-pairs", max_pairs, "Involution pair budget")->check(CLI::PositiveNumber);
  flags(census, {"involutions", "dihedrals", "mid", "properties"});

  auto* structset = app.add_subcommand("structset", "Structure set descriptor");
  structset->add_option("--n", cfg.n, "Dimension n")->required();
  structset->add_option("--mid", cfg.mid, "(mid) count or census JSON report")->required();

  auto* ex = app.add_subcommand("example32", "Chain-level check of the contractible-manifold construction");
  ex->add_option("--sphere", cfg.inputs, "Homology sphere complex file")->required();
  ex->add_option("--m", cfg.m, "Dimension of the homology sphere");
  ex->add_option("--n", cfg.n, "Ambient dimension")->required();
  ex->add_option("--vertex", cfg.vertex, "Vertex whose open star is removed");

  auto* hei = app.add_subcommand("heisenberg", "Heisenberg group over the Eisenstein integers");
  hei->add_flag("--selftest", cfg.selftest, "Run the randomized property suite");
  hei->add_option("--samples", samples, "Samples per property")->check(CLI::PositiveNumber);

  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf->add_option("file", cfg.inputs, "Matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : Format::human;
  if (max_s) cfg.caps.max_generators = max_s;
  if (max_pairs) cfg.caps.max_pairs = max_pairs;
  if (samples) cfg.caps.samples = samples;
  if (radius) {
    cfg.caps.ball_length = radius;
    cfg.caps.ball_radius = static_cast<int>(radius);
  }
  if (cfg.caps.max_generators > df::DavisComplex::kHardMaxGenerators)
    throw UsageError("generator cap above the hard limit of " +
                     std::to_string(df::DavisComplex::kHardMaxGenerators));
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report r;
  r.command = config.subcommand;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (config.subcommand == "complex") cmd_complex(config, r);
    else if (config.subcommand == "davis") cmd_davis(config, r);
    else if (config.subcommand == "gamma") cmd_gamma(config, r);
    else if (config.subcommand == "census") cmd_census(config, r);
    else if (config.subcommand == "structset") cmd_structset(config, r);
    else if (config.subcommand == "example32") cmd_example32(config, r);
    else if (config.subcommand == "heisenberg") cmd_heisenberg(config, r);
    else if (config.subcommand == "snf") cmd_snf(config, r);
    else throw UsageError("unknown subcommand '" + config.subcommand + "'");
  } catch (const df::CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const df::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  }
  r.timing_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  std::ofstream file;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) {
      err << "error: cannot write " << config.output << '\n';
      return 2;
    }
  }
  std::ostream& os = config.output.empty() ? out : file;
  if (config.format == Format::json) os << to_json(r).dump(2) << '\n';
  else write_human(os, r);
  return r.failed() ? 1 : 0;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    auto cfg = parse_arguments(argc, argv, out);
    if (!cfg) return 0;
    return run(*cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dfcli
