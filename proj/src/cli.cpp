// Copyright 2026 The QDT Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdt/cli.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "qdt/errors.hpp"
#include "qdt/problem.hpp"
#include "qdt/report.hpp"

namespace qdt::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string output;
  bool json = false;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  bool raw = false;
};

ProblemDocument load(const std::string& path, std::istream& in) {
  if (path == "-") return parse_problem(in);
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open problem file '" + path + "'");
  return parse_problem(file);
}

void emit(std::ostream& out, const std::string& command, nlohmann::json body) {
  body["command"] = command;
  out << body.dump(2) << '\n';
}

void execute(const std::string& command, const Options& opt, std::istream& in, std::ostream& out) {
  const auto doc = load(opt.input, in);

  if (command == "validate") {
    if (opt.json) {
      emit(out, command, report::problem_summary_json(doc));
    } else {
      report::write_problem_summary(out, doc);
    }
  } else if (command == "enumerate") {
    if (opt.json) {
      emit(out, command, report::basis_json(doc.ring));
    } else {
      report::write_basis(out, doc.ring);
    }
  } else if (command == "solve" || command == "decompose") {
    const auto record = decompose(doc.strategic, doc.lattice);
    if (opt.json) {
      emit(out, command, report::decision_json(record));
    } else if (command == "solve") {
      report::write_solution(out, record, opt.raw || doc.machine.report_raw);
    } else {
      report::write_decomposition(out, record);
    }
  } else if (command == "sample") {
    auto cfg = doc.machine;
    if (opt.shots) cfg.shots = *opt.shots;
    if (opt.seed) cfg.seed = *opt.seed;
    cfg.report_raw = cfg.report_raw || opt.raw;
    const auto run = run_pipeline(doc.strategic, doc.lattice, cfg);
    if (opt.json) {
      emit(out, command, report::run_json(run, cfg));
    } else {
      report::write_run(out, run, cfg, doc.ring);
    }
  } else if (command == "explain") {
    if (opt.json) {
      emit(out, command, report::explain_json(doc));
    } else {
      report::write_explain(out, doc);
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Quantum decision theory engine: prospect probabilities, utility and "
               "attraction factors, optimal prospect."};
  app.name("qdt");
  app.require_subcommand(1);

  Options opt;
  std::string output_path;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"validate", "Parse and validate a problem file"},
      {"enumerate", "List basic states with their flat indices"},
      {"solve", "Rank the prospects and report the optimal one"},
      {"decompose", "Raw and normalized p = p0 + q table"},
      {"sample", "Run the measurement pipeline with finite shots"},
      {"explain", "Per-prospect breakdown of utility and interference terms"},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("problem", opt.input, "Problem file (JSON), or - for stdin")->required();
    sub->add_flag("--json", opt.json, "Machine-readable output at full precision");
    sub->add_option("-o,--output", output_path, "Write the report to this file");
    if (std::string(c.name) == "solve" || std::string(c.name) == "sample")
      sub->add_flag("--raw", opt.raw, "Include unnormalized columns");
    if (std::string(c.name) == "sample") {
      sub->add_option("--shots", opt.shots, "Number of measurement shots (0 = exact)");
      sub->add_option("--seed", opt.seed, "Sampler seed (overrides the problem file)");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    if (output_path.empty()) {
      execute(command, opt, in, out);
    } else {
      std::ofstream file(output_path);
      if (!file) throw ValidationError("cannot open output file '" + output_path + "'");
      execute(command, opt, in, file);
    }
    return kOk;
  } catch (const DegenerateLatticeError& e) {
    err << "error: degenerate lattice: " << e.what() << '\n';
    return kDegenerateLattice;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace qdt::cli
