// Command-line surface: Rips construction, skeleton/tail transforms, the
// extension, codensity matrices, certified simplification, cores, persistence,
// bottleneck distances, the exact distance searches, and a verifier for the
// stability sandwich. Exit codes: 0 success, 1 failed verification, 2 input
// error, 3 a search exceeded its cap.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fsc/codensity.hpp"
#include "fsc/core.hpp"
#include "fsc/interleaving.hpp"
#include "fsc/io.hpp"
#include "fsc/metric.hpp"
#include "fsc/persistence.hpp"
#include "fsc/random.hpp"
#include "fsc/simplify.hpp"
#include "fsc/transforms.hpp"

namespace {

using nlohmann::json;

json number_or_inf(double v) {
  if (std::isinf(v)) return json("inf");
  return json(v);
}

json log_to_json(const fsc::simplification_log& log) {
  json steps = json::array();
  for (const auto& s : log.steps)
    steps.push_back({{"removed", s.removed}, {"surrogate", s.surrogate}, {"cost", s.cost}});
  json relabel = json::object();
  for (std::size_t i = 0; i < log.kept.size(); ++i)
    relabel[std::to_string(log.kept[i])] = static_cast<int>(i);
  return json{{"steps", steps},
              {"error_bound", log.error_bound},
              {"recompute", log.recompute},
              {"kept", log.kept},
              {"relabel", relabel}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw fsc::input_error("cannot open '" + path + "' for writing");
  out << text;
}

fsc::filtered_complex load_and_check(const std::string& path) {
  fsc::filtered_complex c = fsc::load_filtration_file(path);
  const fsc::validation_report report = c.validate();
  if (!report.ok()) {
    const auto& bad = report.monotonicity;
    std::string detail = !bad.empty()
                             ? "face " + fsc::simplex_to_string(bad.front().face) + " born " +
                                   fsc::format_double(bad.front().face_birth) + " after coface " +
                                   fsc::simplex_to_string(bad.front().coface)
                             : "clique order does not match stored births at " +
                                   fsc::simplex_to_string(report.clique_mismatches.front());
    throw fsc::input_error("'" + path + "' is not a filtered complex: " + detail);
  }
  return c;
}

fsc::filtered_complex apply_transforms(fsc::filtered_complex c, int clique_k, int tail_k) {
  if (clique_k > 0) c = fsc::clique_completion(c, clique_k);
  if (tail_k > 0) c = fsc::tail_transform(c, tail_k);
  return c;
}

struct sandwich_report {
  json body;
  bool holds = true;
};

sandwich_report check_sandwich(const fsc::filtered_complex& a, const fsc::filtered_complex& b,
                               int maxdim, double tolerance,
                               const fsc::interleaving_options& opts) {
  fsc::interleaving_oracle oracle(opts);
  const fsc::gh_result gh = oracle.dgh_exact(a, b);
  const fsc::interleaving_result iv = oracle.dif_exact(a, b);
  const auto bars_a = fsc::barcodes(a, maxdim);
  const auto bars_b = fsc::barcodes(b, maxdim);

  sandwich_report out;
  json bottlenecks = json::array();
  for (int d = 0; d <= maxdim; ++d) {
    const double bd = fsc::bottleneck_distance(bars_a[static_cast<std::size_t>(d)],
                                               bars_b[static_cast<std::size_t>(d)]);
    bottlenecks.push_back(number_or_inf(bd));
    if (!(bd <= iv.value + tolerance)) out.holds = false;
  }
  if (!(iv.value <= 2 * gh.value + tolerance)) out.holds = false;
  out.body = json{{"dgh", number_or_inf(gh.value)},
                  {"dif", number_or_inf(iv.value)},
                  {"bottleneck", bottlenecks},
                  {"tolerance", tolerance},
                  {"sandwich_holds", out.holds}};
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"size-function toolkit for filtered simplicial complexes"};
  app.require_subcommand(1);

  // rips
  auto* rips = app.add_subcommand("rips", "Vietoris-Rips filtration from a distance CSV");
  std::string rips_in, rips_out;
  int rips_maxdim = 2;
  rips->add_option("distances", rips_in, "distance matrix CSV")->required();
  rips->add_option("-o,--output", rips_out, "output filtration file")->required();
  rips->add_option("--maxdim", rips_maxdim, "largest simplex dimension to store");

  // transform
  auto* transform = app.add_subcommand("transform", "skeleton completion and tail transform");
  std::string tr_in, tr_out;
  int tr_clique = 0, tr_tail = 0;
  transform->add_option("filtration", tr_in)->required();
  transform->add_option("-o,--output", tr_out)->required();
  transform->add_option("--clique", tr_clique, "complete along the k-skeleton");
  transform->add_option("--tail", tr_tail, "lower small simplices to their cheapest coface");

  // extend
  auto* extend = app.add_subcommand("extend", "single vertex extension");
  std::string ex_in, ex_out;
  int ex_vertex = 0;
  double ex_r = 0.0;
  extend->add_option("filtration", ex_in)->required();
  extend->add_option("-o,--output", ex_out)->required();
  extend->add_option("--vertex", ex_vertex, "vertex whose star is mirrored")->required();
  extend->add_option("--r", ex_r, "birth shift of the new vertex")->required();

  // codensity
  auto* codensity = app.add_subcommand("codensity", "codensity matrix as CSV");
  std::string cd_in, cd_out;
  int cd_kclique = 0, cd_cap_brute = 20;
  bool cd_brute = false;
  codensity->add_option("filtration", cd_in)->required();
  codensity->add_option("-o,--output", cd_out)->required();
  codensity->add_option("--kclique", cd_kclique, "evaluate over subsets of at most k vertices");
  codensity->add_flag("--brute", cd_brute, "force exhaustive enumeration");
  codensity->add_option("--cap-brute", cd_cap_brute, "vertex cap for exhaustive enumeration");

  // simplify
  auto* simplify = app.add_subcommand("simplify", "greedy removal with an error certificate");
  std::string sp_in, sp_out, sp_log;
  int sp_remove = 0, sp_clique = 0, sp_tail = 0, sp_cap_brute = 20;
  bool sp_recompute = false;
  simplify->add_option("filtration", sp_in)->required();
  simplify->add_option("-o,--output", sp_out)->required();
  simplify->add_option("--log", sp_log, "write the step log as JSON");
  simplify->add_option("--remove", sp_remove, "number of vertices to remove")->required();
  simplify->add_flag("--recompute", sp_recompute, "recompute the matrix after every removal");
  simplify->add_option("--clique", sp_clique, "complete along the k-skeleton first");
  simplify->add_option("--tail", sp_tail, "apply the tail transform first");
  simplify->add_option("--cap-brute", sp_cap_brute, "vertex cap for exhaustive enumeration");

  // core
  auto* core_cmd = app.add_subcommand("core", "remove zero-codensity vertices to exhaustion");
  std::string co_in, co_out, co_log;
  int co_clique = 0, co_tail = 0, co_cap_brute = 20;
  core_cmd->add_option("filtration", co_in)->required();
  core_cmd->add_option("-o,--output", co_out)->required();
  core_cmd->add_option("--log", co_log, "write the step log as JSON");
  core_cmd->add_option("--clique", co_clique, "complete along the k-skeleton first");
  core_cmd->add_option("--tail", co_tail, "apply the tail transform first");
  core_cmd->add_option("--cap-brute", co_cap_brute, "vertex cap for exhaustive enumeration");

  // ph
  auto* ph = app.add_subcommand("ph", "persistence diagrams via boundary reduction");
  std::string ph_in, ph_out;
  int ph_maxdim = 1;
  ph->add_option("filtration", ph_in)->required();
  ph->add_option("-o,--output", ph_out, "output file (stdout when omitted)");
  ph->add_option("--maxdim", ph_maxdim, "largest homology dimension");

  // bottleneck
  auto* bottleneck = app.add_subcommand("bottleneck", "bottleneck distance between diagram files");
  std::string bn_a, bn_b;
  int bn_dim = 0;
  bottleneck->add_option("diagramA", bn_a)->required();
  bottleneck->add_option("diagramB", bn_b)->required();
  bottleneck->add_option("--dim", bn_dim, "homology dimension to compare");

  // dist
  auto* dist = app.add_subcommand("dist", "exact distances between two filtrations");
  std::string ds_kind, ds_a, ds_b;
  long long ds_cap_morphisms = 4096;
  dist->add_option("--kind", ds_kind, "gh | if | if-strong")->required();
  dist->add_option("fileA", ds_a)->required();
  dist->add_option("fileB", ds_b)->required();
  dist->add_option("--cap-morphisms", ds_cap_morphisms, "cap on enumerated morphisms and pairs");

  // verify
  auto* verify = app.add_subcommand("verify", "check the stability sandwich");
  std::string vf_a, vf_b;
  int vf_maxdim = 1, vf_random = 0, vf_vertices = 4;
  long long vf_cap_morphisms = 4096;
  double vf_tolerance = 1e-9;
  unsigned long long vf_seed = 1;
  verify->add_option("fileA", vf_a);
  verify->add_option("fileB", vf_b);
  verify->add_option("--maxdim", vf_maxdim, "largest homology dimension to compare");
  verify->add_option("--cap-morphisms", vf_cap_morphisms, "cap on enumerated morphisms and pairs");
  verify->add_option("--tolerance", vf_tolerance, "arithmetic tolerance");
  verify->add_option("--random", vf_random, "generate this many random pairs instead of files");
  verify->add_option("--vertices", vf_vertices, "largest vertex count in random mode (2..5)");
  verify->add_option("--seed", vf_seed, "seed for random fixture generation");

  app.parse(argc, argv);

  if (rips->parsed()) {
    const fsc::distance_matrix d = fsc::load_distance_csv_file(rips_in);
    fsc::save_filtration_file(rips_out, fsc::vietoris_rips(d, rips_maxdim));
    return 0;
  }

  if (transform->parsed()) {
    if (tr_clique == 0 && tr_tail == 0)
      throw fsc::input_error("transform: pass --clique k and/or --tail k");
    fsc::save_filtration_file(tr_out, apply_transforms(load_and_check(tr_in), tr_clique, tr_tail));
    return 0;
  }

  if (extend->parsed()) {
    fsc::save_filtration_file(ex_out,
                              fsc::single_vertex_extension(load_and_check(ex_in), ex_vertex, ex_r));
    return 0;
  }

  if (codensity->parsed()) {
    const fsc::filtered_complex c = load_and_check(cd_in);
    fsc::codensity_options opts;
    opts.brute_cap = cd_cap_brute;
    fsc::codensity_mode mode = fsc::codensity_mode::brute;
    int k = 0;
    if (cd_brute && cd_kclique > 0)
      throw fsc::input_error("codensity: --brute and --kclique are mutually exclusive");
    if (cd_kclique > 0) {
      mode = fsc::codensity_mode::kclique;
      k = cd_kclique;
    } else if (!cd_brute && c.clique_order()) {
      mode = fsc::codensity_mode::kclique;
      k = *c.clique_order();
    }
    const fsc::codensity_matrix m = fsc::compute_codensity_matrix(c, mode, k, opts);
    std::ofstream out(cd_out);
    if (!out) throw fsc::input_error("cannot open '" + cd_out + "' for writing");
    fsc::save_codensity_csv(out, m);
    return 0;
  }

  if (simplify->parsed()) {
    const fsc::filtered_complex c =
        apply_transforms(load_and_check(sp_in), sp_clique, sp_tail);
    fsc::simplify_options opts;
    opts.recompute = sp_recompute;
    opts.codensity.brute_cap = sp_cap_brute;
    const fsc::simplify_result r = fsc::greedy_simplify(c, sp_remove, opts);
    fsc::save_filtration_file(sp_out, r.complex);
    if (!sp_log.empty()) write_text(sp_log, log_to_json(r.log).dump(2) + "\n");
    return 0;
  }

  if (core_cmd->parsed()) {
    const fsc::filtered_complex c =
        apply_transforms(load_and_check(co_in), co_clique, co_tail);
    fsc::simplify_options opts;
    opts.codensity.brute_cap = co_cap_brute;
    const fsc::simplify_result r = fsc::extract_core(c, opts);
    fsc::save_filtration_file(co_out, r.complex);
    if (!co_log.empty()) write_text(co_log, log_to_json(r.log).dump(2) + "\n");
    return 0;
  }

  if (ph->parsed()) {
    const auto diagrams = fsc::barcodes(load_and_check(ph_in), ph_maxdim);
    if (ph_out.empty()) {
      fsc::save_diagrams(std::cout, diagrams);
    } else {
      std::ofstream out(ph_out);
      if (!out) throw fsc::input_error("cannot open '" + ph_out + "' for writing");
      fsc::save_diagrams(out, diagrams);
    }
    return 0;
  }

  if (bottleneck->parsed()) {
    auto pick = [&](const std::string& path) {
      auto diagrams = fsc::load_diagrams_file(path);
      if (static_cast<std::size_t>(bn_dim) < diagrams.size())
        return diagrams[static_cast<std::size_t>(bn_dim)];
      return fsc::persistence_diagram{bn_dim, {}};
    };
    std::cout << fsc::format_double(fsc::bottleneck_distance(pick(bn_a), pick(bn_b))) << "\n";
    return 0;
  }

  if (dist->parsed()) {
    const fsc::filtered_complex a = load_and_check(ds_a);
    const fsc::filtered_complex b = load_and_check(ds_b);
    fsc::interleaving_options opts;
    opts.morphism_cap = ds_cap_morphisms;
    opts.pair_cap = ds_cap_morphisms;
    json out;
    if (ds_kind == "gh") {
      const fsc::gh_result r = fsc::dgh_exact(a, b, opts);
      json pairs = json::array();
      for (const auto& [x, y] : r.witness) pairs.push_back({x, y});
      out = json{{"kind", "gh"},
                 {"value", number_or_inf(r.value)},
                 {"witness", {{"correspondence", pairs}}},
                 {"stats", {{"candidates", r.stats.candidates}}}};
    } else if (ds_kind == "if" || ds_kind == "if-strong") {
      const fsc::interleaving_result r = ds_kind == "if" ? fsc::dif_exact(a, b, opts)
                                                         : fsc::dif_strong(a, b, opts);
      out = json{{"kind", ds_kind},
                 {"value", number_or_inf(r.value)},
                 {"witness", {{"forward", r.forward.map}, {"backward", r.backward.map}}},
                 {"stats", {{"candidates", r.stats.candidates}}}};
    } else {
      throw fsc::input_error("dist: unknown kind '" + ds_kind + "' (use gh, if, if-strong)");
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (verify->parsed()) {
    fsc::interleaving_options opts;
    opts.morphism_cap = vf_cap_morphisms;
    opts.pair_cap = vf_cap_morphisms;
    if (vf_random > 0) {
      if (vf_vertices < 2 || vf_vertices > 5)
        throw fsc::input_error("verify --random supports --vertices 2..5");
      opts.morphism_cap = std::max<long long>(opts.morphism_cap, 3200);
      opts.pair_cap = std::max<long long>(opts.pair_cap, 1 << 24);
      std::mt19937_64 rng(vf_seed);
      bool all_hold = true;
      for (int trial = 0; trial < vf_random; ++trial) {
        const int na = 2 + static_cast<int>(rng() % (vf_vertices - 1));
        const int nb = 2 + static_cast<int>(rng() % (vf_vertices - 1));
        const fsc::filtered_complex a = fsc::random_monotone_complex(rng, na);
        const fsc::filtered_complex b = fsc::random_monotone_complex(rng, nb);
        sandwich_report report = check_sandwich(a, b, vf_maxdim, vf_tolerance, opts);
        report.body["trial"] = trial;
        std::cout << report.body.dump() << "\n";
        all_hold = all_hold && report.holds;
      }
      return all_hold ? 0 : 1;
    }
    if (vf_a.empty() || vf_b.empty())
      throw fsc::input_error("verify needs two filtration files or --random N");
    const fsc::filtered_complex a = load_and_check(vf_a);
    const fsc::filtered_complex b = load_and_check(vf_b);
    const sandwich_report report = check_sandwich(a, b, vf_maxdim, vf_tolerance, opts);
    std::cout << report.body.dump(2) << "\n";
    return report.holds ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const fsc::feasibility_error& e) {
    std::cerr << "feasibility error: " << e.what() << "\n";
    return 3;
  } catch (const fsc::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
