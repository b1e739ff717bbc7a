// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "omcert/cli.h"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "omcert/biquadratic.h"
#include "omcert/certificate.h"
#include "omcert/chirotope.h"
#include "omcert/configuration.h"
#include "omcert/error.h"
#include "omcert/io.h"
#include "omcert/omp.h"
#include "omcert/rational_lp.h"

namespace omcert {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string out;
  std::string certificate;
  std::string lp_out;
  std::string config_out;
  std::string format = "text";
  std::string kind = "moment";
  std::uint64_t seed = 1;
  int f = 0;
  int g = 0;
  int max_n = 0;
  int n = 6;
  int r = 3;
  int range = 3;
};

// Text and JSON renderings of one command's result.
struct Report {
  std::ostringstream text;
  Json json = Json::object();
};

Chirotope LoadInput(const Options& opt) {
  if (opt.input.empty()) throw ParseError(0, 0, "--input is required");
  Chirotope chi = ParseChirotopeOrConfiguration(ReadFile(opt.input));
  if (opt.max_n > 0 && chi.n() > opt.max_n) {
    throw ParseError(1, 1, "n=" + std::to_string(chi.n()) +
                               " exceeds --max-n " + std::to_string(opt.max_n));
  }
  return chi;
}

// For commands whose operations assume a valid chirotope.
Chirotope LoadValidInput(const Options& opt) {
  Chirotope chi = LoadInput(opt);
  const AxiomReport axioms = CheckAxioms(chi);
  if (!axioms.ok()) {
    const AxiomViolation& v = axioms.violations.front();
    throw ParseError(2, 1, "input violates the chirotope axioms (" +
                               std::string(AxiomName(v.axiom)) + " at " +
                               JoinElements(v.witness) + ")");
  }
  return chi;
}

std::optional<Element> Restriction(int value) {
  if (value <= 0) return std::nullopt;
  return value;
}

Json WitnessJson(const EuclideanWitness& w) {
  Json pivots = Json::array();
  for (const Pivot& p : w.cycle.pivots) {
    pivots.push_back({{"L", p.edge},
                      {"a", p.a},
                      {"b", p.b},
                      {"kind", std::string(1, PivotKindCode(p.kind))}});
  }
  return {{"f", w.f}, {"g", w.g}, {"pivots", pivots}};
}

int RunAxioms(const Options& opt, Report& report) {
  const Chirotope chi = LoadInput(opt);
  const AxiomReport axioms = CheckAxioms(chi);
  report.text << "alternating " << (axioms.alternating_ok ? "ok" : "FAIL") << '\n'
              << "nonzero " << (axioms.nonzero_ok ? "ok" : "FAIL") << '\n'
              << "basis-exchange " << (axioms.exchange_ok ? "ok" : "FAIL") << '\n'
              << "grassmann-plucker " << (axioms.gp_ok ? "ok" : "FAIL") << '\n';
  Json violations = Json::array();
  for (const AxiomViolation& v : axioms.violations) {
    report.text << "violation " << AxiomName(v.axiom) << " (" << JoinElements(v.witness)
                << ")\n";
    violations.push_back({{"axiom", std::string(AxiomName(v.axiom))},
                          {"witness", v.witness}});
  }
  report.json = {{"alternating_ok", axioms.alternating_ok},
                 {"nonzero_ok", axioms.nonzero_ok},
                 {"exchange_ok", axioms.exchange_ok},
                 {"gp_ok", axioms.gp_ok},
                 {"violations", violations}};
  return axioms.ok() ? kExitOk : kExitVerdictNo;
}

int RunUniform(const Options& opt, Report& report) {
  const Chirotope chi = LoadInput(opt);
  const bool uniform = chi.IsUniform();
  report.text << (uniform ? "uniform" : "not uniform") << '\n';
  report.json = {{"uniform", uniform}};
  return uniform ? kExitOk : kExitVerdictNo;
}

int RunSystem(const Options& opt, Report& report) {
  const Chirotope chi = LoadValidInput(opt);
  const BiquadraticSystem system = EnumerateSystem(chi);
  WriteSystem(report.text, system);
  report.text << "inequalities " << system.inequalities.size() << '\n'
              << "equations " << system.equations.size() << '\n';
  Json lines = Json::array();
  for (const auto& c : system.inequalities) lines.push_back(FormatConstraint(c));
  for (const auto& c : system.equations) lines.push_back(FormatConstraint(c));
  report.json = {{"inequalities", system.inequalities.size()},
                 {"equations", system.equations.size()},
                 {"constraints", lines}};
  return kExitOk;
}

int RunEuclidean(const Options& opt, Report& report) {
  const Chirotope chi = LoadValidInput(opt);
  const EuclideanResult result =
      IsEuclidean(chi, Restriction(opt.f), Restriction(opt.g));
  if (result.euclidean) {
    report.text << "Euclidean\n";
    report.json = {{"euclidean", true}};
    return kExitOk;
  }
  report.text << "non-Euclidean\n";
  WriteWitness(report.text, *result.witness);
  report.json = {{"euclidean", false}, {"witness", WitnessJson(*result.witness)}};
  return kExitVerdictNo;
}

void WriteCertificate(const Options& opt, const BfpCertificate& cert,
                      CommandOutcome& outcome) {
  if (opt.out.empty()) return;
  WriteFile(opt.out, FormatCertificate(cert));
  outcome.artifact_path = opt.out;
}

int RunCertify(const Options& opt, Report& report, CommandOutcome& outcome) {
  const Chirotope chi = LoadValidInput(opt);
  int cycles_seen = 0;
  Json rejected = Json::array();
  for (Element f = 1; f <= chi.n(); ++f) {
    if (opt.f > 0 && opt.f != f) continue;
    for (Element g = 1; g <= chi.n(); ++g) {
      if (g == f || (opt.g > 0 && opt.g != g)) continue;
      const OMProgram prog(chi, f, g);
      const PivotGraph graph = BuildPivotGraph(prog);
      std::vector<NonDegenerateCycle> candidates = CandidateCycles(graph);
      if (candidates.empty()) continue;
      std::vector<NonDegenerateCycle> restricted =
          CandidateCycles(RestrictToNonzeroObjective(prog, graph));
      candidates.insert(candidates.end(), restricted.begin(), restricted.end());
      for (const NonDegenerateCycle& cycle : candidates) {
        ++cycles_seen;
        try {
          const CycleCertificate result = CycleToBfp(prog, cycle);
          report.text << "non-realizable: biquadratic final polynomial found\n";
          WriteWitness(report.text, {f, g, cycle});
          report.text << "types";
          Json types = Json::array();
          for (const GpType& t : result.types) {
            report.text << ' ' << t.Name();
            types.push_back(t.Name());
          }
          report.text << '\n'
                      << "inequalities " << result.certificate.inequalities.size()
                      << " equations " << result.certificate.equations.size() << '\n';
          WriteCertificate(opt, result.certificate, outcome);
          if (outcome.artifact_path) {
            report.text << "certificate written to " << *outcome.artifact_path << '\n';
          }
          report.json = {{"certified", true},
                         {"witness", WitnessJson({f, g, cycle})},
                         {"types", types},
                         {"certificate", Json::parse(FormatCertificate(result.certificate))}};
          return kExitVerdictNo;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kTypeClassificationFailed &&
              e.code() != ErrorCode::kCancellationFailed) {
            throw;
          }
          rejected.push_back({{"f", f}, {"g", g}, {"reason", e.what()}});
        }
      }
    }
  }
  if (cycles_seen == 0) {
    report.text << "Euclidean: no non-degenerate cycle, nothing to certify\n";
    report.json = {{"certified", false}, {"euclidean", true}};
    return kExitOk;
  }
  report.text << "found " << cycles_seen
              << " non-degenerate cycle(s) but none converted to a certificate;"
                 " try lp-certify\n";
  for (const Json& r : rejected) report.text << "  " << r["reason"].get<std::string>() << '\n';
  report.json = {{"certified", false}, {"euclidean", false}, {"rejected", rejected}};
  return kExitInternal;
}

int RunLpCertify(const Options& opt, Report& report, CommandOutcome& outcome) {
  const Chirotope chi = LoadValidInput(opt);
  const BiquadraticSystem system = EnumerateSystem(chi);
  const LinearSystem ls = EncodeSystem(chi, system);
  if (!opt.lp_out.empty()) {
    std::ostringstream lp;
    WriteLpFormat(lp, ls);
    WriteFile(opt.lp_out, lp.str());
  }
  const FeasibilityResult result = SolveFeasibility(ls);
  if (std::holds_alternative<Feasible>(result)) {
    report.text << "feasible: no biquadratic obstruction\n";
    report.json = {{"feasible", true}};
    return kExitOk;
  }
  const BfpCertificate cert =
      BfpFromFarkas(chi, system, ls, std::get<Infeasible>(result).certificate);
  report.text << "infeasible: non-realizable, biquadratic final polynomial found\n"
              << "inequalities " << cert.inequalities.size() << " equations "
              << cert.equations.size() << '\n';
  WriteCertificate(opt, cert, outcome);
  if (outcome.artifact_path) {
    report.text << "certificate written to " << *outcome.artifact_path << '\n';
  }
  report.json = {{"feasible", false},
                 {"certificate", Json::parse(FormatCertificate(cert))}};
  return kExitVerdictNo;
}

int RunVerify(const Options& opt, Report& report) {
  const Chirotope chi = LoadInput(opt);
  if (opt.certificate.empty()) throw ParseError(0, 0, "--certificate is required");
  const BfpCertificate cert = ParseCertificate(ReadFile(opt.certificate));
  const VerificationReport v = VerifyCertificate(chi, cert);
  report.text << (v.valid ? "valid: the chirotope is not realizable\n" : "invalid\n");
  Json failures = Json::array();
  for (const VerificationFailure& f : v.failures) {
    report.text << f.reason << ": " << f.detail << '\n';
    failures.push_back({{"reason", f.reason}, {"detail", f.detail}});
  }
  report.json = {{"valid", v.valid}, {"failures", failures}};
  return v.valid ? kExitOk : kExitVerdictNo;
}

int RunGen(const Options& opt, Report& report, CommandOutcome& outcome) {
  if (opt.r < 2 || opt.n < opt.r) throw ParseError(0, 0, "need 2 <= r <= n");
  VectorConfiguration config;
  if (opt.kind == "moment") {
    config = MomentCurve(opt.n, opt.r);
  } else if (opt.kind == "random") {
    config = RandomConfiguration(opt.n, opt.r, opt.seed, opt.range);
  } else {
    throw ParseError(0, 0, "--kind must be moment or random");
  }
  const Chirotope chi = ChirotopeFromConfiguration(config);
  const std::string text = FormatChirotope(chi);
  if (!opt.config_out.empty()) WriteFile(opt.config_out, FormatConfiguration(config));
  if (!opt.out.empty()) {
    WriteFile(opt.out, text);
    outcome.artifact_path = opt.out;
  }
  report.text << text;
  report.json = {{"n", chi.n()}, {"r", chi.rank()}, {"signs", chi.SignString()}};
  return kExitOk;
}

}  // namespace

CommandOutcome RunCommand(const std::vector<std::string>& args,
                          std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Non-realizability certificates for oriented matroids"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "chirotope or configuration file");
    sub->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-n", opt.max_n, "reject inputs with more elements");
  };
  auto add_scan = [&](CLI::App* sub) {
    sub->add_option("--f", opt.f, "restrict the objective element");
    sub->add_option("--g", opt.g, "restrict the element at infinity");
  };

  CLI::App* axioms = app.add_subcommand("axioms", "check the chirotope axioms");
  CLI::App* uniform = app.add_subcommand("uniform", "report uniformity");
  CLI::App* system = app.add_subcommand("system", "dump the biquadratic system");
  CLI::App* euclidean = app.add_subcommand("euclidean", "search non-degenerate cycles");
  CLI::App* certify = app.add_subcommand("certify", "certificate from a pivot cycle");
  CLI::App* lp = app.add_subcommand("lp-certify", "certificate from exact LP");
  CLI::App* verify = app.add_subcommand("verify", "verify a certificate");
  CLI::App* gen = app.add_subcommand("gen", "write a realizable test chirotope");
  for (CLI::App* sub : {axioms, uniform, system, euclidean, certify, lp, verify}) {
    add_common(sub);
  }
  add_scan(euclidean);
  add_scan(certify);
  certify->add_option("--out", opt.out, "certificate output path");
  lp->add_option("--out", opt.out, "certificate output path");
  lp->add_option("--lp-out", opt.lp_out, "write the linear system in LP format");
  verify->add_option("--certificate", opt.certificate, "certificate file");
  gen->add_option("--kind", opt.kind, "moment or random");
  gen->add_option("--n", opt.n, "number of elements");
  gen->add_option("--r", opt.r, "rank");
  gen->add_option("--seed", opt.seed, "random seed");
  gen->add_option("--range", opt.range, "numerator bound for random coordinates");
  gen->add_option("--out", opt.out, "chirotope output path");
  gen->add_option("--config-out", opt.config_out, "configuration output path");
  gen->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  CommandOutcome outcome;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream parse_out;
    std::ostringstream parse_err;
    const int code = app.exit(e, parse_out, parse_err);
    out << parse_out.str();
    err << parse_err.str();
    outcome.exit_code = code == 0 ? kExitOk : kExitInputError;
    outcome.report = parse_out.str() + parse_err.str();
    return outcome;
  }

  Report report;
  try {
    if (axioms->parsed()) outcome.exit_code = RunAxioms(opt, report);
    if (uniform->parsed()) outcome.exit_code = RunUniform(opt, report);
    if (system->parsed()) outcome.exit_code = RunSystem(opt, report);
    if (euclidean->parsed()) outcome.exit_code = RunEuclidean(opt, report);
    if (certify->parsed()) outcome.exit_code = RunCertify(opt, report, outcome);
    if (lp->parsed()) outcome.exit_code = RunLpCertify(opt, report, outcome);
    if (verify->parsed()) outcome.exit_code = RunVerify(opt, report);
    if (gen->parsed()) outcome.exit_code = RunGen(opt, report, outcome);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    outcome.exit_code = kExitInputError;
    outcome.report = e.what();
    return outcome;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    outcome.exit_code = kExitInternal;
    outcome.report = e.what();
    return outcome;
  }
  outcome.report = opt.format == "json" ? report.json.dump(2) + "\n" : report.text.str();
  out << outcome.report;
  return outcome;
}

}  // namespace omcert
