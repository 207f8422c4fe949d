// wacm: verify curvature and structure-tensor identities of weak almost
// contact metric structures on the built-in model manifolds.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wacm/identities.hpp"
#include "wacm/models.hpp"
#include "wacm/report.hpp"
#include "wacm/sampling.hpp"
#include "wacm/spectral.hpp"

namespace {

using namespace wacm;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int write_output(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  f << payload;
  return 0;
}

int cmd_list(const std::string& format) {
  if (format == "json") {
    std::ostringstream os;
    os << "{\n  \"models\": [\n";
    const auto& reg = model_registry();
    for (size_t i = 0; i < reg.size(); ++i) {
      const ModelEntry& e = reg[i];
      os << "    {\"name\": \"" << e.name << "\", \"dim\": " << e.dim
         << ", \"declared\": \"" << hyp_name(e.declared) << "\""
         << ", \"h_zero\": " << (e.profile.h_zero ? "true" : "false")
         << ", \"sasakian\": " << (e.profile.sasakian ? "true" : "false")
         << ", \"weak_contact\": " << (e.profile.weak_contact ? "true" : "false") << "}"
         << (i + 1 < reg.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"identities\": [\n";
    const auto& cat = identity_catalog();
    for (size_t i = 0; i < cat.size(); ++i) {
      const IdentityRecord& r = cat[i];
      os << "    {\"id\": \"" << r.id << "\", \"alias\": \"" << r.alias
         << "\", \"hypothesis\": \"" << hyp_name(r.hypothesis)
         << "\", \"arity\": " << r.arity << ", \"anchor\": \"" << r.anchor << "\"}"
         << (i + 1 < cat.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    std::cout << os.str();
    return 0;
  }
  std::printf("models:\n");
  for (const ModelEntry& e : model_registry())
    std::printf("  %-14s dim %d  declared %-4s  profile: h %s, %s, %s\n", e.name.c_str(),
                e.dim, hyp_name(e.declared), e.profile.h_zero ? "= 0" : "!= 0",
                e.profile.sasakian ? "Sasakian" : "non-Sasakian",
                e.profile.weak_contact ? "weak contact" : "not weak contact");
  std::printf("identities:\n");
  for (const IdentityRecord& r : identity_catalog()) {
    std::printf("  %-8s %-10s %-4s arity %d  %s\n", r.id.c_str(),
                r.alias.empty() ? "-" : r.alias.c_str(), hyp_name(r.hypothesis), r.arity,
                r.anchor.c_str());
    if (!r.note.empty()) std::printf("           note: %s\n", r.note.c_str());
  }
  return 0;
}

int cmd_check(const RunConfig& cfg_in, const std::string& models_arg,
              const std::string& identities_arg, const std::string& format,
              const std::string& out_path) {
  RunConfig cfg = cfg_in;
  if (cfg.points < 1 || cfg.tuples < 1 || !(cfg.tol > 0.0)) {
    std::cerr << "invalid config: need points >= 1, tuples >= 1, tol > 0\n";
    return 2;
  }
  try {
    if (models_arg == "all")
      cfg.models = model_names();
    else
      cfg.models = split_csv(models_arg);
    if (identities_arg == "all")
      cfg.identities = identity_ids();
    else
      cfg.identities = split_csv(identities_arg);
    for (const auto& m : cfg.models) find_model(m);
    for (const auto& i : cfg.identities) find_identity(i);

    CheckReport rep = run_suite(cfg);
    std::string payload;
    if (format == "json")
      payload = to_json(rep);
    else if (format == "csv")
      payload = to_csv(rep);
    else
      payload = to_text(rep);
    if (int rc = write_output(payload, out_path); rc != 0) return rc;
    if (!out_path.empty()) {
      int failed = 0;
      for (const auto& r : rep.rows)
        if (!r.pass) ++failed;
      std::printf("%zu rows, %d failing; report written to %s\n", rep.rows.size(), failed,
                  out_path.c_str());
    }
    return rep.all_pass() ? 0 : 1;
  } catch (const UnknownNameError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int cmd_spectrum(const std::string& model, int points, std::uint64_t seed,
                 const std::string& format) {
  try {
    const ModelEntry& entry = find_model(model);
    HypStatus st = verify_hypotheses(entry.structure, std::min(points, 10), 4, seed, 1e-8);
    ConstancyResult c = spectrum_constancy(entry.structure, points, seed);
    std::string note;
    if (!st.h1) note = "not nearly Sasakian: spectral theorems inapplicable";

    if (format == "json") {
      std::ostringstream os;
      os << "{\"model\": \"" << model << "\", \"clusters\": [";
      SampleSet s = draw_samples(entry.structure.chart, 1, 1, seed);
      SpectrumResult sp = h2_spectrum(structure_data(entry.structure, s.points[0]));
      for (size_t i = 0; i < sp.cluster_values.size(); ++i)
        os << (i ? ", " : "") << "{\"value\": " << format_double(sp.cluster_values[i])
           << ", \"multiplicity\": " << sp.cluster_mult[i] << "}";
      os << "], \"constancy_deviation\": " << format_double(c.deviation)
         << ", \"multiplicities_constant\": " << (c.multiplicities_constant ? "true" : "false")
         << ", \"note\": \"" << note << "\"}\n";
      std::cout << os.str();
      return 0;
    }
    std::printf("model %s (%d points, seed %llu)\n", model.c_str(), points,
                static_cast<unsigned long long>(seed));
    SampleSet s = draw_samples(entry.structure.chart, 1, 1, seed);
    SpectrumResult sp = h2_spectrum(structure_data(entry.structure, s.points[0]));
    std::printf("h^2 spectrum clusters:\n");
    for (size_t i = 0; i < sp.cluster_values.size(); ++i)
      std::printf("  %+.12f  (multiplicity %d)\n", sp.cluster_values[i],
                  sp.cluster_mult[i]);
    std::printf("constancy deviation over points: %.3e\n", c.deviation);
    std::printf("multiplicities constant: %s\n", c.multiplicities_constant ? "yes" : "no");
    if (!note.empty()) std::printf("note: %s\n", note.c_str());
    return 0;
  } catch (const UnknownNameError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of weak almost contact metric structures"};
  app.require_subcommand(1);

  std::string format = "text";

  auto* list = app.add_subcommand("list", "dump the model and identity registries");
  std::string list_format = "text";
  list->add_option("--format", list_format, "text|json");

  auto* check = app.add_subcommand("check", "run the identity suite");
  std::string models_arg = "all", identities_arg = "all", out_path;
  wacm::RunConfig cfg;
  check->add_option("--models", models_arg, "comma-separated model names or 'all'");
  check->add_option("--identities", identities_arg, "comma-separated identity ids or 'all'");
  check->add_option("--points", cfg.points, "sample points per model");
  check->add_option("--tuples", cfg.tuples, "vector tuples per point");
  check->add_option("--seed", cfg.seed, "sampling seed");
  check->add_option("--tol", cfg.tol, "pass tolerance");
  check->add_option("--format", format, "json|csv|text");
  check->add_option("--out", out_path, "output path (default stdout)");
  check->add_option("--threads", cfg.threads, "worker threads (0 = auto)");

  auto* spectrum = app.add_subcommand("spectrum", "h^2 eigenstructure of a model");
  std::string spec_model;
  int spec_points = 30;
  std::uint64_t spec_seed = 42;
  std::string spec_format = "text";
  spectrum->add_option("model", spec_model, "model name")->required();
  spectrum->add_option("--points", spec_points, "sample points");
  spectrum->add_option("--seed", spec_seed, "sampling seed");
  spectrum->add_option("--format", spec_format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) return cmd_list(list_format);
    if (check->parsed()) return cmd_check(cfg, models_arg, identities_arg, format, out_path);
    if (spectrum->parsed()) return cmd_spectrum(spec_model, spec_points, spec_seed, spec_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
