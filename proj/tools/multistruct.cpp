// Command-line workbench: analyze problem files, generate corpora, run
// batches, and self-test the engine invariants.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "multistruct/multistruct.hpp"

namespace fs = std::filesystem;
using namespace multistruct;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::uint64_t seed_or_env(const CLI::Option* opt, std::uint64_t value) {
  if (opt->count() > 0) return value;
  if (const char* env = std::getenv("MULTISTRUCT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw Error("MULTISTRUCT_SEED is not a number");
    }
  }
  return value;
}

FieldSpec parse_field_flag(const std::string& text) {
  if (text == "Q" || text == "q") return FieldSpec::rationals();
  try {
    return FieldSpec::prime(std::stoull(text));
  } catch (const InvalidField&) {
    throw;
  } catch (...) {
    throw InvalidField("bad field '" + text + "'");
  }
}

CorpusKind parse_kind(const std::string& text) {
  if (text == "ci") return CorpusKind::CompleteIntersection;
  if (text == "monomial") return CorpusKind::Monomial;
  if (text == "binomial" || text == "random") return CorpusKind::RandomBinomial;
  throw Error("unknown corpus kind '" + text + "' (expected ci|monomial|binomial)");
}

int cmd_analyze(const fs::path& file, bool as_json, bool with_properties) {
  ProblemFile pf = parse_problem(read_file(file));
  StructureReport report = run_analysis(pf);
  if (as_json)
    std::cout << to_json(report).dump(2) << "\n";
  else
    std::cout << to_text(report, with_properties);
  if (!report.falsifications.empty()) return 4;
  return 0;
}

int cmd_gen(const CorpusSpec& spec, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  auto corpus = generate_corpus(spec);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof(name), "%s-%04zu.ms", corpus_kind_name(spec.kind), i);
    std::ofstream out(out_dir / name);
    out << print_problem(corpus[i]);
  }
  std::cout << "wrote " << corpus.size() << " problem file(s) to " << out_dir.string() << "\n";
  return 0;
}

/// genspec grammar: kind:count[:vars][:seed], e.g. "ci:200" or "monomial:50:2:99".
CorpusSpec parse_genspec(const std::string& text, std::uint64_t default_seed) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t colon = text.find(':', pos);
    if (colon == std::string::npos) colon = text.size();
    parts.push_back(text.substr(pos, colon - pos));
    pos = colon + 1;
    if (pos > text.size()) break;
  }
  if (parts.size() < 2 || parts.size() > 4)
    throw Error("genspec must be kind:count[:vars][:seed]");
  auto number = [](const std::string& s, std::uint64_t dflt) {
    return s.empty() ? dflt : std::stoull(s);
  };
  CorpusSpec spec;
  spec.kind = parse_kind(parts[0]);
  spec.count = number(parts[1], 1);
  spec.n_vars = parts.size() > 2 ? number(parts[2], 0) : 0;
  spec.seed = parts.size() > 3 ? number(parts[3], default_seed) : default_seed;
  return spec;
}

int cmd_batch(const std::string& target, std::size_t jobs, const fs::path& out_dir,
              bool write_reports, std::uint64_t seed) {
  std::vector<std::pair<std::string, std::string>> inputs;
  if (fs::is_directory(target)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(target))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      std::cerr << "usage: batch directory contains no input files\n";
      return 1;
    }
    for (const auto& f : files) inputs.emplace_back(f.stem().string(), read_file(f));
  } else {
    CorpusSpec spec = parse_genspec(target, seed);
    auto corpus = generate_corpus(spec);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      char name[64];
      std::snprintf(name, sizeof(name), "%s-%04zu", corpus_kind_name(spec.kind), i);
      inputs.emplace_back(name, print_problem(corpus[i]));
    }
  }

  fs::path repro_dir = write_reports ? out_dir : fs::path(".");
  if (write_reports) fs::create_directories(out_dir);
  BatchResult result = run_batch(inputs, jobs, repro_dir);
  if (write_reports) {
    for (const auto& e : result.entries) {
      if (!e.report) continue;
      std::ofstream out(out_dir / (e.name + ".json"));
      out << to_json(*e.report).dump(2) << "\n";
    }
  }
  std::cout << batch_summary_text(result);
  return result.exit_code;
}

int cmd_selftest();

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical filtrations of zero-dimensional multiple structures"};
  app.require_subcommand(1);

  std::string analyze_file;
  bool analyze_json = false, analyze_props = false;
  auto* analyze = app.add_subcommand("analyze", "analyze one problem file");
  analyze->add_option("file", analyze_file, "problem file")->required();
  analyze->add_flag("--json", analyze_json, "emit the JSON report");
  analyze->add_flag("--properties", analyze_props, "include the property battery in text output");

  std::string gen_kind;
  std::size_t gen_vars = 0, gen_count = 10, gen_maxdim = 150;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "corpus", gen_field = "32003";
  auto* gen = app.add_subcommand("gen", "generate a problem corpus");
  gen->add_option("kind", gen_kind, "ci|monomial|binomial")->required();
  gen->add_option("--vars", gen_vars, "fixed variable count (default: mixed 1..3)");
  gen->add_option("--count", gen_count, "number of instances");
  auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "RNG seed (or MULTISTRUCT_SEED)");
  gen->add_option("--out", gen_out, "output directory");
  gen->add_option("--field", gen_field, "coefficient field: a prime or Q");
  gen->add_option("--max-dim", gen_maxdim, "reject instances with dim_k B above this");

  std::string batch_target;
  std::size_t batch_jobs = 1;
  std::string batch_out = "reports";
  std::uint64_t batch_seed = 1;
  auto* batch = app.add_subcommand("batch", "analyze a directory or a genspec (kind:count[:vars][:seed])");
  batch->add_option("target", batch_target, "directory of problem files, or genspec")->required();
  batch->add_option("--jobs", batch_jobs, "worker threads");
  auto* batch_out_opt = batch->add_option("--out", batch_out, "write per-problem JSON reports here");
  auto* batch_seed_opt = batch->add_option("--seed", batch_seed, "genspec seed fallback");

  auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_file, analyze_json, analyze_props);
    if (*gen) {
      CorpusSpec spec;
      spec.kind = parse_kind(gen_kind);
      spec.count = gen_count;
      spec.n_vars = gen_vars;
      spec.seed = seed_or_env(gen_seed_opt, gen_seed);
      spec.max_dim = gen_maxdim;
      spec.field = parse_field_flag(gen_field);
      return cmd_gen(spec, gen_out);
    }
    if (*batch)
      return cmd_batch(batch_target, batch_jobs, batch_out, batch_out_opt->count() > 0,
                       seed_or_env(batch_seed_opt, batch_seed));
    if (*selftest) return cmd_selftest();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidField& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotLocal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotZeroDimensional& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ZeroRing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

namespace {

int cmd_selftest() {
  std::size_t failures = 0;
  auto check = [&](bool ok, const std::string& name) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  {  // prime field arithmetic round trip
    FieldSpec f = FieldSpec::prime(32003);
    Fp a(12345, 32003), b(31999, 32003);
    check((a * b) / b == a && (a + b) - b == a && a * a.inverse() == FieldOps<Fp>::one(f),
          "prime field arithmetic");
  }
  {  // rational arithmetic
    Rat a(1, 3), b(1, 6);
    check((a + b) == Rat(1, 2) && (a / b) == Rat(2), "rational arithmetic");
  }
  {  // the worked structure: k[x,y]/(x^3, xy, y^4)
    ProblemFile pf = parse_problem("field 32003\nvars x, y\nideal x^3; x*y; y^4\n");
    StructureReport r = run_analysis(pf);
    bool ok = r.dim_B == 6 && r.m == 3 && r.type.dims_B == std::vector<std::size_t>{1, 2, 2, 1} &&
              r.type.dims_A == std::vector<std::size_t>{1, 2, 1, 2} &&
              r.type.dims_M == std::vector<std::size_t>{1, 1, 2, 2} &&
              !r.theorem.criterion_gorenstein && r.theorem.socle_dim == 2 && r.theorem.agrees;
    check(ok, "worked example k[x,y]/(x^3,xy,y^4)");
  }
  {  // a complete intersection is Gorenstein
    ProblemFile pf = parse_problem("field 32003\nvars x, y\nideal x^2; y^2\n");
    StructureReport r = run_analysis(pf);
    check(r.theorem.criterion_gorenstein && r.theorem.oracle_gorenstein && r.theorem.agrees,
          "complete intersection k[x,y]/(x^2,y^2)");
  }
  {  // theorem equivalence over a quick corpus
    CorpusSpec spec;
    spec.kind = CorpusKind::CompleteIntersection;
    spec.count = 10;
    spec.seed = 7;
    bool all = true;
    for (const auto& pf : generate_corpus(spec)) {
      StructureReport r = run_analysis(pf);
      all = all && r.theorem.agrees && r.falsifications.empty();
    }
    check(all, "criterion agrees with the socle oracle on 10 seeded instances");
  }

  std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? 0 : 3;
}

}  // namespace
