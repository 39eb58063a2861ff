// cdlat: Chermak-Delgado lattice and density analysis from the command line.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violation.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cdlat/cdlat.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInvariantViolation = 2;

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chermak-Delgado lattices and dense CD-subgroups of finite groups"};
  app.require_subcommand(1);

  cdlat::Limits limits = cdlat::Limits::from_environment();
  std::string spec;
  std::string out_path;
  std::size_t witness_cap = cdlat::kDefaultWitnessCap;
  bool as_json = false;
  bool no_timing = false;
  std::uint64_t survey_max = 0;
  unsigned jobs = 1;

  auto* analyze = app.add_subcommand("analyze", "full pipeline report for one group");
  analyze->add_option("spec", spec, "group expression, e.g. \"D(8)\" or \"C(3) X S(3)\"")->required();
  analyze->add_flag("--json", as_json, "emit the JSON report");
  analyze->add_option("--max-order", limits.max_order, "group order cap");
  analyze->add_option("--witness-cap", witness_cap, "maximum density witnesses to list");
  analyze->add_flag("--no-timing", no_timing, "omit stage timings (reproducible output)");

  auto* survey = app.add_subcommand("survey", "run the family corpus and the theorem checks");
  survey->add_option("--max-order", survey_max, "largest group order in the corpus")->required();
  survey->add_option("--out", out_path, "output file (JSON Lines); stdout when omitted");
  survey->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the subgroup lattice in DOT");
  hasse->add_option("spec", spec, "group expression")->required();
  hasse->add_option("--out", out_path, "output file; stdout when omitted");

  auto* density = app.add_subcommand("density", "density verdict and witnesses only");
  density->add_option("spec", spec, "group expression")->required();
  density->add_option("--witness-cap", witness_cap, "maximum density witnesses to list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*survey) {
      if (survey_max > limits.max_order) limits.max_order = survey_max;
      const auto result = cdlat::run_survey(survey_max, jobs, limits);
      if (!write_output(out_path, cdlat::render_survey(result))) return kInputError;
      if (!out_path.empty()) {
        std::cout << result.rows.size() << " groups; pq check "
                  << (result.pq_classification.all_passed() ? "holds" : "FAILS") << " over "
                  << result.pq_rows.size() << "; p-group profile " << (result.profiles_passed() ? "holds" : "FAILS")
                  << " over " << result.profile_rows.size() << "; properties "
                  << (result.properties_passed() ? "ok" : "FAILED") << "\n";
      }
      return result.all_passed() ? kOk : kInvariantViolation;
    }

    const cdlat::AnalyzeOptions opts{limits, witness_cap};
    const cdlat::Analysis a = cdlat::analyze(spec, opts);
    const bool consistent = cdlat::report_consistent(a.report);

    if (*analyze) {
      const std::string text = as_json ? cdlat::to_json(a.report, !no_timing).dump(2) + "\n"
                                       : cdlat::render_text(a.report, !no_timing);
      std::cout << text;
    } else if (*hasse) {
      if (!write_output(out_path, cdlat::hasse_dot(a.lattice, a.cd))) return kInputError;
    } else if (*density) {
      std::cout << cdlat::render_density(a.report);
    }
    if (!consistent) {
      std::cerr << "internal invariant violation: a theorem-backed check failed for " << a.report.spec << "\n";
      return kInvariantViolation;
    }
    return kOk;
  } catch (const cdlat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
