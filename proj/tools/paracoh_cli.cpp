// Command-line front end: analyze (g, K, stage) triples, scan deformation
// families, decide D-Kahler existence, run randomized theorem checks, and
// list or dump the built-in catalog.
//
// Exit codes are part of the interface: 0 ok, 2 input/validation error,
// 3 internal invariant breach, 4 theorem counterexample.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paracoh/batch.hpp"
#include "paracoh/catalog.hpp"
#include "paracoh/randomcheck.hpp"
#include "paracoh/report.hpp"

namespace {

using namespace paracoh;

struct CliConfig {
  std::string algebra_text;
  std::string catalog_name;
  std::string structure;
  std::string k_text;
  std::string k_family_text;
  std::string stages_text = "2";
  std::string t_text;
  std::string format;
  std::string output;
  int trials = 0;
  std::uint64_t seed = 0;
  int max_attempts = 20000;
  std::string dump_name;
};

std::vector<int> parse_stage_list(const std::string& text, int dim) {
  std::vector<int> stages;
  for (const std::string& part : [&] {
         std::vector<std::string> parts;
         std::string cur;
         for (char c : text) {
           if (c == ',') {
             parts.push_back(cur);
             cur.clear();
           } else {
             cur += c;
           }
         }
         parts.push_back(cur);
         return parts;
       }()) {
    int s = std::stoi(part);
    if (s < 0 || s > dim) throw Error("stage " + part + " outside [0, " + std::to_string(dim) + "]");
    stages.push_back(s);
  }
  return stages;
}

std::vector<Rational> parse_t_list(const std::string& text) {
  std::vector<Rational> ts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      ts.push_back(Rational::parse(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) ts.push_back(Rational::parse(cur));
  return ts;
}

void emit(const CliConfig& cfg, const std::string& payload) {
  if (cfg.output.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw Error("cannot open output file '" + cfg.output + "'");
  out << payload;
}

struct ResolvedInput {
  LieAlgebra g;
  Matrix<Rational> k;
  std::string algebra_str;
  std::string k_str;
};

ResolvedInput resolve_point_input(const CliConfig& cfg) {
  if (!cfg.catalog_name.empty()) {
    const CatalogEntry& entry = catalog_get(cfg.catalog_name);
    LieAlgebra g = entry.algebra();
    std::string sname = cfg.structure.empty() ? entry.default_structure() : cfg.structure;
    if (!cfg.k_text.empty()) {
      return {g, parse_k(cfg.k_text, g.dim()), entry.algebra_str, cfg.k_text};
    }
    return {g, entry.k_matrix(sname), entry.algebra_str, sname};
  }
  if (cfg.k_text.empty()) throw Error("--k is required with --algebra");
  LieAlgebra g = parse_algebra(cfg.algebra_text);
  return {g, parse_k(cfg.k_text, g.dim()), cfg.algebra_text, cfg.k_text};
}

DeformationFamily resolve_family(const CliConfig& cfg) {
  if (!cfg.catalog_name.empty()) {
    const CatalogEntry& entry = catalog_get(cfg.catalog_name);
    std::string sname = cfg.structure;
    if (sname.empty()) {
      for (const auto& [name, spec] : entry.structures) {
        if (spec.kind == KSpec::Kind::family) {
          sname = name;
          break;
        }
      }
      if (sname.empty()) throw Error("catalog entry '" + entry.name + "' has no deformation family");
    }
    return entry.family(sname);
  }
  if (cfg.k_family_text.empty()) throw Error("--k-family is required with --algebra");
  LieAlgebra g = parse_algebra(cfg.algebra_text);
  return DeformationFamily{g, parse_k_family(cfg.k_family_text, g.dim()), ""};
}

int cmd_analyze(const CliConfig& cfg) {
  ResolvedInput in = resolve_point_input(cfg);
  ParaStructure<Rational> ps = validate_para(in.k, in.g);
  Applicability app = applicability_of(in.g);
  std::vector<int> stages = parse_stage_list(cfg.stages_text, in.g.dim());
  std::string format = cfg.format.empty() ? "text" : cfg.format;
  nlohmann::json records = nlohmann::json::array();
  std::string text;
  for (int stage : stages) {
    SubgroupReport<Rational> coh = subgroup_dims(in.g, ps, stage);
    SubgroupReport<Rational> hom = homology_subgroups(in.g, ps, stage);
    if (format == "json") {
      records.push_back(subgroup_report_json(in.algebra_str, in.k_str, coh, app));
      records.push_back(subgroup_report_json(in.algebra_str, in.k_str, hom, app));
    } else {
      text += text_report(coh) + text_report(hom);
    }
  }
  if (format == "json") {
    emit(cfg, records.dump(2));
  } else {
    IntegrabilityReport integ = integrability(ps, in.g);
    text += "integrable: " + std::string(integ.integrable() ? "yes" : "no");
    if (!integ.integrable()) text += "  (witness " + integ.witness + ")";
    text += "\nabelian: " + std::string(is_abelian_structure(ps, in.g) ? "yes" : "no");
    text += "\nflag: " + to_string(app.flag) + (app.transfers() ? "" : "  [Lie-algebra level only]");
    text += "\n";
    emit(cfg, text);
  }
  return 0;
}

int cmd_deform(const CliConfig& cfg) {
  DeformationFamily fam = resolve_family(cfg);
  validate_family(fam);
  std::vector<int> stages = parse_stage_list(cfg.stages_text, fam.g.dim());
  if (stages.size() != 1) throw Error("deform expects exactly one --stage");
  int stage = stages[0];
  std::vector<Rational> ts = cfg.t_text.empty() ? std::vector<Rational>{} : parse_t_list(cfg.t_text);
  int threads = batch::thread_cap();
  std::vector<ScanRow> rows;
  rows.push_back(generic_dims(fam, stage));
  std::vector<ScanRow> sampled = sample_scan(fam, ts, stage, threads);
  bool any_ok = false;
  for (const ScanRow& r : sampled) {
    if (r.error) {
      std::cerr << "t = " << r.t_label() << ": " << *r.error << "\n";
    } else {
      any_ok = true;
    }
    rows.push_back(r);
  }
  std::vector<JumpEntry> jumps = jump_report(fam, ts, stage, threads);
  std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format == "json") {
    emit(cfg, scan_json(rows, jumps).dump(2));
  } else {
    std::string payload = scan_csv(rows);
    if (format == "text" && !jumps.empty()) {
      payload += "jumps:";
      for (const JumpEntry& j : jumps) payload += " " + j.t.str();
      payload += "\n";
    }
    emit(cfg, payload);
  }
  return ts.empty() || any_ok ? 0 : 2;
}

int cmd_dkahler(const CliConfig& cfg) {
  ResolvedInput in = resolve_point_input(cfg);
  ParaStructure<Rational> ps = validate_para(in.k, in.g);
  DKahlerVerdict verdict = dkahler_decide(in.g, ps);
  std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format == "json") {
    nlohmann::json j;
    j["algebra"] = in.algebra_str;
    j["k"] = in.k_str;
    j["dkahler"] = dkahler_json(verdict);
    j["applicability"] = applicability_json(applicability_of(in.g));
    emit(cfg, j.dump(2));
  } else {
    std::string text = "dkahler: " + to_string(verdict.status) + "\n";
    if (verdict.witness) text += "witness: " + verdict.witness->str() + "\n";
    text += "candidate space dim: " + std::to_string(verdict.candidate_space_dim) + "\n";
    if (!verdict.obstruction_note.empty()) text += "note: " + verdict.obstruction_note + "\n";
    emit(cfg, text);
  }
  return 0;
}

int cmd_random_check(const CliConfig& cfg) {
  if (cfg.trials < 1) throw Error("--trials must be at least 1");
  LieAlgebra g = cfg.catalog_name.empty() ? parse_algebra(cfg.algebra_text)
                                          : catalog_get(cfg.catalog_name).algebra();
  RandomCheckOutcome outcome =
      random_check_4dim(g, cfg.trials, cfg.seed, cfg.max_attempts, batch::thread_cap());
  if (outcome.sampling_failures > 0) {
    throw InternalCheckError(std::to_string(outcome.sampling_failures) +
                             " trials found no integrable structure within the attempt budget");
  }
  std::string text = "trials: " + std::to_string(outcome.trials) +
                     "\nabelian: " + std::to_string(outcome.abelian_count) +
                     "\ncounterexamples: " + std::to_string(outcome.counterexamples.size()) + "\n";
  for (const std::string& c : outcome.counterexamples) text += "  " + c + "\n";
  emit(cfg, text);
  return outcome.ok() ? 0 : 4;
}

int cmd_catalog(const CliConfig& cfg) {
  std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (!cfg.dump_name.empty()) {
    emit(cfg, catalog_get(cfg.dump_name).to_json().dump(2));
    return 0;
  }
  if (format == "json") {
    nlohmann::json all = nlohmann::json::array();
    for (const std::string& name : catalog_names()) all.push_back(catalog_get(name).to_json());
    emit(cfg, all.dump(2));
    return 0;
  }
  std::string text;
  for (const std::string& name : catalog_names()) {
    const CatalogEntry& e = catalog_get(name);
    text += name + "  " + e.algebra_str;
    if (!e.structures.empty()) {
      text += "  [";
      bool first = true;
      for (const auto& [sname, spec] : e.structures) {
        if (!first) text += ", ";
        text += sname + ":" + to_string(spec.kind);
        first = false;
      }
      text += "]";
    }
    text += "\n";
  }
  emit(cfg, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant cohomology of Lie algebras under almost D-complex structures"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_source = [&cfg](CLI::App* sub, bool with_k) {
    CLI::Option* alg = sub->add_option("--algebra", cfg.algebra_text, "structure equations, e.g. \"(0^4,12,13)\"");
    CLI::Option* cat = sub->add_option("--catalog", cfg.catalog_name, "built-in catalog entry name");
    alg->excludes(cat);
    cat->excludes(alg);
    sub->add_option("--structure", cfg.structure, "structure name within the catalog entry");
    if (with_k) sub->add_option("--k", cfg.k_text, "K as sign string or matrix rows (';'-separated)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "subgroup dimensions and verdicts for (g, K, stage)");
  add_source(analyze, true);
  analyze->add_option("--stage", cfg.stages_text, "stage or comma list (default 2)");
  analyze->add_option("--format", cfg.format, "text|json");
  analyze->add_option("--output", cfg.output, "output path (default stdout)");

  CLI::App* deform = app.add_subcommand("deform", "scan a one-parameter family K_t");
  add_source(deform, false);
  deform->add_option("--k-family", cfg.k_family_text, "matrix of rational functions in t");
  deform->add_option("--t", cfg.t_text, "comma list of rational sample points");
  deform->add_option("--stage", cfg.stages_text, "stage (default 2)");
  deform->add_option("--format", cfg.format, "csv|json|text");
  deform->add_option("--output", cfg.output, "output path (default stdout)");

  CLI::App* dk = app.add_subcommand("dkahler", "decide invariant D-Kahler existence");
  add_source(dk, true);
  dk->add_option("--format", cfg.format, "text|json");
  dk->add_option("--output", cfg.output, "output path (default stdout)");

  CLI::App* rc = app.add_subcommand("random-check", "randomized theorem check on 4-dim nilpotent algebras");
  add_source(rc, false);
  rc->add_option("--trials", cfg.trials, "number of sampled integrable structures")->required();
  rc->add_option("--seed", cfg.seed, "PRNG seed")->required();
  rc->add_option("--max-attempts", cfg.max_attempts, "rejection budget per trial");
  rc->add_option("--output", cfg.output, "output path (default stdout)");

  CLI::App* cat = app.add_subcommand("catalog", "list entries or dump one as JSON");
  cat->add_option("--name", cfg.dump_name, "entry to dump");
  cat->add_option("--format", cfg.format, "text|json");
  cat->add_option("--output", cfg.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(cfg);
    if (app.got_subcommand(deform)) return cmd_deform(cfg);
    if (app.got_subcommand(dk)) return cmd_dkahler(cfg);
    if (app.got_subcommand(rc)) return cmd_random_check(cfg);
    if (app.got_subcommand(cat)) return cmd_catalog(cfg);
  } catch (const paracoh::InternalCheckError& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const paracoh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
