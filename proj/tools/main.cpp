// Batch experiment driver: every library operation behind a subcommand with
// reproducible seeding and machine-readable CSV/JSON reports.
//
// Exit codes: 0 all checks pass, 1 a property violation was found (location
// in the report), 2 input error.

#include <cstdint>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vexp/classify.hpp"
#include "vexp/duality.hpp"
#include "vexp/fenchel.hpp"
#include "vexp/json_io.hpp"
#include "vexp/modular.hpp"
#include "vexp/props.hpp"
#include "vexp/report.hpp"
#include "vexp/rng.hpp"
#include "vexp/sequences.hpp"

using namespace vexp;

namespace {

struct CommonOpts {
  std::string input;
  std::string grid_spec = "log:1e-8:1:512";
  double tol = 1e-10;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts* o, bool needs_input) {
  auto* in = cmd->add_option("--input", o->input, "input JSON file");
  if (needs_input) in->required();
  cmd->add_option("--grid", o->grid_spec, "grid spec, e.g. log:1e-8:1:512");
  cmd->add_option("--tol", o->tol, "tolerance carried into report rows");
  cmd->add_option("--seed", o->seed, "root seed for randomized suites");
  cmd->add_option("--out", o->out, "output path (default stdout)");
  cmd->add_option("--format", o->format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const Report& rep, const CommonOpts& o) {
  if (o.out.empty()) {
    if (o.format == "json")
      rep.write_json(std::cout);
    else
      rep.write_csv(std::cout);
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + o.out);
  if (o.format == "json")
    rep.write_json(f);
  else
    rep.write_csv(f);
}

json load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file " + path);
  return json::parse(f);  // parse_error carries byte position
}

std::string grid_tag(const CommonOpts& o) { return o.grid_spec; }

// --- norm ------------------------------------------------------------------

int run_norm(const CommonOpts& o) {
  const json in = load_input(o.input);
  json_detail::expect_keys(in, "norm input", {"exponent", "vectors", "kind"});
  json_detail::require(in, "norm input", "exponent");
  json_detail::require(in, "norm input", "vectors");
  const VarExponent P = var_exponent_from_json(in["exponent"]);
  ModularKind kind = ModularKind::phi;
  if (in.contains("kind")) {
    const std::string k = in["kind"].get<std::string>();
    if (k == "psi")
      kind = ModularKind::psi;
    else if (k != "phi")
      throw std::invalid_argument("norm input: kind must be phi or psi");
  }
  Report rep({"case", "kind", "norm", "modular_at_norm", "tol", "grid"});
  std::size_t idx = 0;
  for (const auto& vj : in["vectors"]) {
    const WeightedVector f = weighted_vector_from_json(vj);
    const double norm = luxemburg(P, f, kind, 0.0);
    const double at = norm > 0.0
                          ? modular(P, f.scaled(1.0 / norm), kind).value.as_double()
                          : 0.0;
    rep.add_row({std::to_string(idx++), kind == ModularKind::phi ? "phi" : "psi",
                 fmt12(norm), fmt12(at), fmt12(o.tol), grid_tag(o)});
  }
  emit(rep, o);
  return 0;
}

// --- conjugate ---------------------------------------------------------------

int run_conjugate(const CommonOpts& o) {
  const json in = load_input(o.input);
  json_detail::expect_keys(in, "conjugate input", {"F", "target"});
  json_detail::require(in, "conjugate input", "F");
  const OrliczFn F = orlicz_from_json(in["F"]);
  std::optional<OrliczFn> target;
  if (in.contains("target")) target = orlicz_from_json(in["target"]);
  const Grid grid = Grid::parse(o.grid_spec);
  const OrliczFn Fs = conjugate(F, grid);
  Report rep({"v", "fstar", "target", "abs_err", "tol", "grid"});
  double worst = 0.0;
  for (double v : grid.pts) {
    const ExtReal fs = Fs.eval(v);
    std::string tgt = "", err = "";
    if (target) {
      const ExtReal tv = target->eval(v);
      tgt = fmt12(tv.as_double());
      if (tv.is_finite() && fs.is_finite()) {
        const double e = std::abs(tv.value() - fs.value());
        worst = std::max(worst, e);
        err = fmt12(e);
      } else {
        err = tv.is_infinite() == fs.is_infinite() ? "0" : "inf";
        if (tv.is_infinite() != fs.is_infinite())
          worst = std::numeric_limits<double>::infinity();
      }
    }
    rep.add_row({fmt12(v), fmt12(fs.as_double()), tgt, err, fmt12(o.tol),
                 grid_tag(o)});
  }
  emit(rep, o);
  return (target && worst > o.tol) ? 1 : 0;
}

// --- embed -------------------------------------------------------------------

int run_embed(const CommonOpts& o) {
  const json in = load_input(o.input);
  json_detail::expect_keys(in, "embed input", {"F", "G", "search"});
  json_detail::require(in, "embed input", "F");
  json_detail::require(in, "embed input", "G");
  const Grid grid = Grid::parse(o.grid_spec);
  auto sample = [&](const json& arr) {
    std::vector<std::vector<double>> out;
    for (const auto& d : arr) {
      const OrliczFn fn = orlicz_from_json(d);
      std::vector<double> y;
      for (double t : grid.pts) y.push_back(fn.eval(t).as_double());
      out.push_back(std::move(y));
    }
    return out;
  };
  EmbedSearch search;
  if (in.contains("search")) {
    const json& s = in["search"];
    json_detail::expect_keys(s, "embed search",
                             {"delta", "b", "C", "a_budget"});
    if (s.contains("delta")) search.delta_grid = s["delta"].get<std::vector<double>>();
    if (s.contains("b")) search.b_grid = s["b"].get<std::vector<double>>();
    if (s.contains("C")) search.C_grid = s["C"].get<std::vector<double>>();
    if (s.contains("a_budget")) search.a_budget = s["a_budget"].get<double>();
  }
  const EmbedVerdict v =
      musielak_embed_check(grid, sample(in["F"]), sample(in["G"]), search);
  Report rep({"verdict", "delta", "b", "C", "viol_n", "viol_t", "note", "tol",
              "grid"});
  rep.add_row({to_string(v.kind), fmt12(v.delta), fmt12(v.b), fmt12(v.C),
               std::to_string(v.viol_n), fmt12(v.viol_t), v.note,
               fmt12(o.tol), grid_tag(o)});
  emit(rep, o);
  return 0;  // a verdict is a result, not a failure
}

// --- block-basis --------------------------------------------------------------

int run_block_basis(const CommonOpts& o, const std::string& induced_out,
                    const std::string& family_out) {
  const json in = load_input(o.input);
  json_detail::expect_keys(in, "block-basis input",
                           {"q", "a", "K", "auto_scale"});
  json_detail::require(in, "block-basis input", "q");
  json_detail::require(in, "block-basis input", "a");
  json_detail::require(in, "block-basis input", "K");
  const BlockBasis bb = block_basis(
      in["q"].get<std::vector<double>>(), in["a"].get<std::vector<double>>(),
      in["K"].get<std::size_t>(),
      in.contains("auto_scale") && in["auto_scale"].get<bool>());
  const Grid grid = Grid::parse(o.grid_spec);

  double worst_cross = 0.0, worst_poly = 0.0;
  for (double t : grid.pts) {
    if (t > 1.0) break;
    const double m0 =
        modular_phi(bb.family.exponent, bb.family.blocks[0].scaled(t))
            .value.value();
    for (std::size_t k = 1; k < bb.family.blocks.size(); ++k)
      worst_cross = std::max(
          worst_cross, std::abs(modular_phi(bb.family.exponent,
                                            bb.family.blocks[k].scaled(t))
                                    .value.value() -
                                m0));
    worst_poly = std::max(worst_poly, std::abs(m0 - bb.F(t)));
  }
  Report rep({"blocks", "terms", "cross_block_dev", "poly_dev", "F_at_1",
              "tol", "grid"});
  rep.add_row({std::to_string(bb.family.blocks.size()),
               std::to_string(bb.q.size()), fmt12(worst_cross),
               fmt12(worst_poly), fmt12(bb.F(1.0)), fmt12(o.tol),
               grid_tag(o)});
  emit(rep, o);

  if (!induced_out.empty()) {
    const InducedOrlicz ind = induced_orlicz(bb.family, grid);
    std::ofstream f(induced_out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + induced_out);
    f << "t";
    for (std::size_t n = 0; n < ind.F_psi.size(); ++n) f << ",F_" << n + 1;
    f << "\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      f << fmt12(grid[i]);
      for (const auto& fn : ind.F_psi) f << "," << fmt12(fn[i]);
      f << "\n";
    }
  }
  if (!family_out.empty()) {
    json fam{{"exponent", var_exponent_to_json(bb.family.exponent)},
             {"blocks", json::array()}};
    for (const auto& x : bb.family.blocks)
      fam["blocks"].push_back(weighted_vector_to_json(x));
    std::ofstream f(family_out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + family_out);
    f << fam.dump(1) << "\n";
  }
  return (worst_cross == 0.0 && worst_poly == 0.0) ? 0 : 1;
}

// --- duality -------------------------------------------------------------------

int run_duality(const CommonOpts& o, const std::string& pairs_out,
                const std::string& gram_out) {
  std::size_t n_pairs = 8, holder_cases = 10000;
  if (!o.input.empty()) {
    const json in = load_input(o.input);
    json_detail::expect_keys(in, "duality input", {"pairs", "holder_cases"});
    if (in.contains("pairs")) n_pairs = in["pairs"].get<std::size_t>();
    if (in.contains("holder_cases"))
      holder_cases = in["holder_cases"].get<std::size_t>();
  }

  Report rep({"check", "cases", "violations", "worst", "tol", "grid"});
  const PropResult young = prop_young_pointwise(derive_seed(o.seed, 1), 20000);
  rep.add_row({young.name, std::to_string(young.cases),
               std::to_string(young.violations), fmt12(young.worst),
               fmt12(young.tol), grid_tag(o)});
  const PropResult holder =
      prop_holder_bound(derive_seed(o.seed, 2), holder_cases);
  rep.add_row({holder.name, std::to_string(holder.cases),
               std::to_string(holder.violations), fmt12(holder.worst),
               fmt12(holder.tol), grid_tag(o)});

  // Norming pairs and the projection residual.
  SplitMix64 rng(derive_seed(o.seed, 3));
  std::vector<ExponentAtom> atoms;
  const std::size_t per = 3;
  for (std::size_t i = 0; i < n_pairs * per; ++i)
    atoms.push_back(
        {Exponent(rng.log_uniform(1.5, 4.0)), rng.uniform(0.3, 1.5)});
  const VarExponent Q(std::move(atoms));
  std::vector<NormingPair> pairs;
  double worst_pair = 0.0;
  for (std::size_t b = 0; b < n_pairs; ++b) {
    std::vector<WeightedVector::Entry> ge;
    for (std::size_t j = 0; j < per; ++j)
      ge.push_back({b * per + j, rng.uniform(0.2, 1.5)});
    WeightedVector g{std::move(ge)};
    g = g.scaled(1.0 / luxemburg(Q, g, ModularKind::phi));
    pairs.push_back(norming_pair(Q, g));
    worst_pair = std::max({worst_pair, std::abs(pairs.back().pairing - 1.0),
                           std::abs(pairs.back().rho_p - 1.0),
                           std::abs(pairs.back().rho_q - 1.0)});
  }
  rep.add_row({"norming_pairs", std::to_string(n_pairs),
               worst_pair <= 1e-9 ? "0" : "1", fmt12(worst_pair), fmt12(1e-9),
               grid_tag(o)});
  const Projection proj = build_projection(Q.conjugate(), pairs);
  rep.add_row({"projection_residual", std::to_string(n_pairs),
               proj.residual <= 1e-10 ? "0" : "1", fmt12(proj.residual),
               fmt12(1e-10), grid_tag(o)});
  emit(rep, o);

  if (!pairs_out.empty()) {
    json arr = json::array();
    for (const auto& p : pairs) arr.push_back(norming_pair_to_json(p));
    std::ofstream f(pairs_out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + pairs_out);
    f << arr.dump(1) << "\n";
  }
  if (!gram_out.empty()) {
    std::ofstream f(gram_out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + gram_out);
    for (const auto& row : proj.gram) {
      for (std::size_t j = 0; j < row.size(); ++j)
        f << fmt12(row[j]) << (j + 1 < row.size() ? "," : "\n");
    }
  }
  const bool ok = young.violations == 0 && holder.violations == 0 &&
                  worst_pair <= 1e-9 && proj.residual <= 1e-10;
  return ok ? 0 : 1;
}

// --- classify -------------------------------------------------------------------

int run_classify(const CommonOpts& o) {
  const json in = load_input(o.input);
  json_detail::expect_keys(in, "classify input",
                           {"sandwich", "krs", "equivalence", "log_identity"});
  const Grid grid = Grid::parse(o.grid_spec);
  Report rep({"check", "result", "detail", "tol", "grid"});
  bool violation = false;

  if (in.contains("sandwich")) {
    const json& s = in["sandwich"];
    json_detail::expect_keys(s, "sandwich", {"mu", "s"});
    json_detail::require(s, "sandwich", "mu");
    json_detail::require(s, "sandwich", "s");
    const ExponentMeasure mu(atoms_from_json(s["mu"], "sandwich mu"));
    const SandwichResult r =
        minsupp_sandwich(mu, exponent_from_json(s["s"]), grid);
    const bool ok = r.max_violation <= o.tol;
    violation = violation || !ok;
    rep.add_row({"sandwich", ok ? "holds" : "violated",
                 "lambda=" + fmt12(r.lambda) +
                     " max_excess=" + fmt12(r.max_violation),
                 fmt12(o.tol), grid_tag(o)});
  }
  if (in.contains("krs")) {
    const json& s = in["krs"];
    json_detail::expect_keys(s, "krs", {"phi", "r", "s"});
    json_detail::require(s, "krs", "phi");
    json_detail::require(s, "krs", "r");
    json_detail::require(s, "krs", "s");
    Grid unit = grid;
    while (!unit.pts.empty() && unit.pts.back() > 1.0) unit.pts.pop_back();
    const KrsReport r =
        krs_membership(orlicz_from_json(s["phi"]), exponent_from_json(s["r"]),
                       exponent_from_json(s["s"]), unit);
    std::string where;
    if (!r.passed) {
      const auto& v = r.violations.front();
      where = " first at condition " +
              std::to_string(static_cast<int>(v.condition)) + " (u=" +
              fmt12(v.u) + ", t=" + fmt12(v.t) + ", margin=" + fmt12(v.margin) +
              ")";
    }
    rep.add_row({"krs_membership", r.passed ? "passed" : "violations",
                 std::to_string(r.violations.size()) + " violations" + where,
                 fmt12(o.tol), grid_tag(o)});
  }
  if (in.contains("equivalence")) {
    const json& s = in["equivalence"];
    json_detail::expect_keys(s, "equivalence",
                             {"F", "G", "b_grid", "C_max", "c_grid"});
    json_detail::require(s, "equivalence", "F");
    json_detail::require(s, "equivalence", "G");
    EquivalenceSearch search;
    if (s.contains("b_grid")) search.b_grid = s["b_grid"].get<std::vector<double>>();
    if (s.contains("C_max")) search.C_max = s["C_max"].get<double>();
    if (s.contains("c_grid")) search.c_grid = s["c_grid"].get<std::vector<double>>();
    const EquivalenceVerdict v = equivalence_near_zero(
        orlicz_from_json(s["F"]), orlicz_from_json(s["G"]), search, grid);
    std::ostringstream box;
    box << "searched b in {";
    for (std::size_t i = 0; i < search.b_grid.size(); ++i)
      box << (i ? "," : "") << fmt12(search.b_grid[i]);
    box << "}, C <= " << fmt12(search.C_max) << ", c in {";
    for (std::size_t i = 0; i < search.c_grid.size(); ++i)
      box << (i ? "," : "") << fmt12(search.c_grid[i]);
    box << "}";
    rep.add_row({"equivalence_near_zero", to_string(v.kind),
                 (v.kind == VerdictKind::WitnessFound
                      ? "b=" + fmt12(v.b) + " C=" + fmt12(v.C) +
                            " c=" + fmt12(v.c) + "; "
                      : v.note + "; ") +
                     box.str(),
                 fmt12(o.tol), grid_tag(o)});
  }
  if (in.contains("log_identity")) {
    const json& s = in["log_identity"];
    json_detail::expect_keys(s, "log_identity", {"r", "a", "s", "t"});
    json_detail::require(s, "log_identity", "r");
    json_detail::require(s, "log_identity", "a");
    json_detail::require(s, "log_identity", "s");
    json_detail::require(s, "log_identity", "t");
    const LogPerturbedIdentity id = log_perturbed_identity(
        s["r"].get<double>(), s["a"].get<double>(), s["s"].get<double>(),
        s["t"].get<std::vector<double>>());
    double worst = 0.0;
    for (const auto& p : id.points)
      worst = std::max(worst, std::abs(p.c_direct - p.c_ratio));
    const bool ok = worst <= 1e-8;
    violation = violation || !ok;
    rep.add_row({"log_identity", ok ? "agrees" : "disagrees",
                 "max_route_gap=" + fmt12(worst) + " C_range=[" +
                     fmt12(id.min_c) + "," + fmt12(id.max_c) + "]",
                 fmt12(1e-8), grid_tag(o)});
  }
  emit(rep, o);
  return violation ? 1 : 0;
}

// --- props -------------------------------------------------------------------

int run_props(const CommonOpts& o) {
  Report rep({"property", "cases", "violations", "worst_excess", "tol",
              "seed", "grid", "note"});
  bool violation = false;
  for (const PropResult& r : run_all_properties(o.seed)) {
    violation = violation || r.violations > 0;
    rep.add_row({r.name, std::to_string(r.cases),
                 std::to_string(r.violations), fmt12(r.worst), fmt12(r.tol),
                 std::to_string(o.seed), grid_tag(o), r.note});
  }
  emit(rep, o);
  return violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variable-exponent sequence space laboratory"};
  app.require_subcommand(1);

  CommonOpts norm_o, conj_o, embed_o, block_o, dual_o, cls_o, props_o;
  std::string induced_out, family_out, pairs_out, gram_out;

  add_common(app.add_subcommand("norm", "Luxemburg gauges of vectors"),
             &norm_o, true);
  add_common(app.add_subcommand("conjugate",
                                "tabulate F* against an analytic target"),
             &conj_o, true);
  add_common(app.add_subcommand("embed", "Musielak embedding check"),
             &embed_o, true);
  auto* block =
      app.add_subcommand("block-basis", "construct and verify a block basis");
  add_common(block, &block_o, true);
  block->add_option("--induced-out", induced_out,
                    "CSV of induced functions (t, F_1..F_N)");
  block->add_option("--family-out", family_out, "JSON of the block family");
  auto* dual = app.add_subcommand(
      "duality", "norming pairs, Hoelder suite, projection residuals");
  add_common(dual, &dual_o, false);
  dual->add_option("--pairs-out", pairs_out, "JSON of the norming pairs");
  dual->add_option("--gram-out", gram_out, "CSV of the S' o T matrix");
  add_common(app.add_subcommand(
                 "classify", "sandwich, K_{r,s} report, near-zero equivalence"),
             &cls_o, true);
  add_common(app.add_subcommand("props", "run the full invariant suite"),
             &props_o, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("norm")) return run_norm(norm_o);
    if (app.got_subcommand("conjugate")) return run_conjugate(conj_o);
    if (app.got_subcommand("embed")) return run_embed(embed_o);
    if (app.got_subcommand("block-basis"))
      return run_block_basis(block_o, induced_out, family_out);
    if (app.got_subcommand("duality"))
      return run_duality(dual_o, pairs_out, gram_out);
    if (app.got_subcommand("classify")) return run_classify(cls_o);
    if (app.got_subcommand("props")) return run_props(props_o);
  } catch (const json::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
