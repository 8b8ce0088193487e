#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "multistruct/corpus.hpp"
#include "multistruct/report.hpp"
#include "multistruct/structure.hpp"

namespace multistruct {

namespace detail {

template <Field K>
StructureReport analyze_as(const ProblemFile& pf) {
  auto start = std::chrono::steady_clock::now();
  StructureReport r;
  r.field = pf.field().to_string();
  r.vars = pf.vars()->names();
  for (const auto& g : pf.generators()) r.ideal.push_back(print_poly(g, *pf.vars()));
  r.mode = pf.mode() == ProblemMode::Embedded ? "embedded" : "intrinsic";
  r.power_filtration_note =
      "I^(l) = I^l: in an Artinian local ring the maximal ideal is the unique "
      "associated prime, so the powers have no embedded components to remove";

  auto gens = instantiate_generators<K>(pf);
  auto gb = buchberger(gens);
  auto pres = present_algebra(std::move(gb), pf.field());
  if (pres->zero_ring) throw ZeroRing();
  StructureAnalysis<K> s = analyze_structure(pres);

  r.dim_B = pres->dim();
  r.m = s.m;
  r.trivial_multiplicity_one = s.m == 0;
  for (const auto& a : s.filtrations.powers) r.powers_dims.push_back(a.dim());
  for (const auto& a : s.filtrations.ann) r.ann_dims.push_back(a.dim());
  for (const auto& a : s.filtrations.dann) r.dann_dims.push_back(a.dim());
  r.type = s.graded.type;
  r.morphisms = s.morphisms;
  r.pairings = s.pairings;
  r.theorem = s.verdict;
  r.properties = s.battery;
  r.quasiprimitive = s.quasiprimitive;
  r.falsifications = s.falsifications;

  if (pf.mode() == ProblemMode::Embedded) {
    EmbeddedLifts lifts;
    auto lift_chain = [&](const std::vector<IdealSubspace<K>>& chain,
                          std::vector<std::vector<std::string>>& out) {
      for (const auto& a : chain) {
        std::vector<std::string> strs;
        for (const auto& p : lift_generators(a)) strs.push_back(p.to_string());
        out.push_back(std::move(strs));
      }
    };
    lift_chain(s.filtrations.powers, lifts.powers);
    lift_chain(s.filtrations.ann, lifts.annihilator);
    lift_chain(s.filtrations.dann, lifts.double_annihilator);
    r.embedded = std::move(lifts);
  }

  auto stop = std::chrono::steady_clock::now();
  r.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

}  // namespace detail

/// The full pipeline for one problem, dispatched on the declared field.
inline StructureReport run_analysis(const ProblemFile& pf) {
  if (pf.field().kind() == FieldSpec::Kind::Prime) return detail::analyze_as<Fp>(pf);
  return detail::analyze_as<Rat>(pf);
}

/// One batch entry: a named problem with its outcome.
struct BatchEntry {
  std::string name;
  std::string problem_text;
  std::optional<StructureReport> report;
  std::string error;       // non-empty when the analysis threw
  int error_class = 0;     // 0 ok, 2 parse, 3 math-domain
};

struct BatchResult {
  std::vector<BatchEntry> entries;
  std::size_t gorenstein = 0;
  std::size_t non_gorenstein = 0;
  std::size_t errors = 0;
  std::size_t falsifications = 0;
  int exit_code = 0;
  std::string falsification_file;  // reproducer path when a falsification aborted the run
};

namespace detail {

inline void classify(BatchEntry& e, const std::exception& ex, int cls) {
  e.error = ex.what();
  e.error_class = cls;
}

inline BatchEntry analyze_entry(const std::string& name, const std::string& text) {
  BatchEntry e;
  e.name = name;
  e.problem_text = text;
  try {
    ProblemFile pf = parse_problem(text);
    e.report = run_analysis(pf);
  } catch (const ParseError& ex) {
    classify(e, ex, 2);
  } catch (const InvalidField& ex) {
    classify(e, ex, 2);
  } catch (const Error& ex) {
    classify(e, ex, 3);
  }
  return e;
}

}  // namespace detail

/// Aggregates finished entries into the summary and decides the exit code:
/// 4 on a falsification event (with a reproducer file), 3 on math-domain
/// errors, 2 on parse errors, 0 otherwise.
inline BatchResult summarize_batch(std::vector<BatchEntry> entries,
                                   const std::filesystem::path& reproducer_dir = ".") {
  BatchResult result;
  result.entries = std::move(entries);
  int worst_error = 0;
  for (auto& e : result.entries) {
    if (e.report) {
      if (e.report->theorem.oracle_gorenstein)
        ++result.gorenstein;
      else
        ++result.non_gorenstein;
      if (!e.report->falsifications.empty()) {
        ++result.falsifications;
        if (result.falsification_file.empty()) {
          // A verified theorem should never fail; dump a reproducer and abort.
          Json repro;
          repro["problem"] = e.problem_text;
          repro["report"] = to_json(*e.report);
          std::filesystem::path p = reproducer_dir / ("falsification-" + e.name + ".json");
          std::ofstream out(p);
          out << repro.dump(2) << "\n";
          result.falsification_file = p.string();
        }
      }
    } else {
      ++result.errors;
      worst_error = std::max(worst_error, e.error_class);
    }
  }
  if (result.falsifications > 0)
    result.exit_code = 4;
  else if (worst_error != 0)
    result.exit_code = worst_error;
  else
    result.exit_code = 0;
  return result;
}

/// Runs every named problem, optionally across threads, then summarizes.
inline BatchResult run_batch(const std::vector<std::pair<std::string, std::string>>& inputs,
                             std::size_t jobs = 1,
                             const std::filesystem::path& reproducer_dir = ".") {
  std::vector<BatchEntry> entries(inputs.size());
  if (jobs < 1) jobs = 1;
  if (jobs == 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i)
      entries[i] = detail::analyze_entry(inputs[i].first, inputs[i].second);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= inputs.size()) break;
        entries[i] = detail::analyze_entry(inputs[i].first, inputs[i].second);
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return summarize_batch(std::move(entries), reproducer_dir);
}

inline std::string batch_summary_text(const BatchResult& r) {
  std::ostringstream os;
  os << "analyzed " << r.entries.size() << " problem(s): " << r.gorenstein << " Gorenstein, "
     << r.non_gorenstein << " non-Gorenstein, " << r.errors << " error(s), "
     << r.falsifications << " falsification(s)\n";
  for (const auto& e : r.entries) {
    os << "  " << e.name << ": ";
    if (e.report) {
      os << (e.report->theorem.oracle_gorenstein ? "Gorenstein" : "not Gorenstein")
         << (e.report->theorem.agrees ? "" : " [criterion DISAGREES]");
      if (!e.report->falsifications.empty()) os << " [FALSIFICATION]";
    } else {
      os << "error: " << e.error;
    }
    os << "\n";
  }
  if (!r.falsification_file.empty())
    os << "reproducer written to " << r.falsification_file << "\n";
  return os.str();
}

}  // namespace multistruct
