#include "abvar/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "abvar/expr.hpp"
#include "abvar/fourier.hpp"
#include "abvar/ledger.hpp"
#include "abvar/verify.hpp"

namespace abvar::cli {

namespace {

struct VerifyOptions {
  int dim = 1;
  std::string identity = "all";
  int trials = 100;
  std::uint64_t seed = 0;
  std::string format = "table";
};

struct FmOptions {
  int dim = 1;
  std::string expr;
  std::string side = "coh";
  std::optional<int> component;
};

struct LedgerOptions {
  int dim = 1;
  int j = 0;
  std::string assume = "none";
  std::string format = "table";
};

int runVerify(const VerifyOptions& o, std::ostream& out) {
  std::vector<std::string> names;
  if (o.identity == "all") {
    names = identityNames();
  } else {
    names = {o.identity};
  }
  bool passed = true;
  nlohmann::ordered_json docs = nlohmann::ordered_json::array();
  for (const auto& name : names) {
    const IdentityReport report = verifyIdentity(name, o.dim, o.trials, o.seed);
    passed = passed && report.passed;
    if (o.format == "json") {
      docs.push_back(toJson(report));
    } else {
      out << formatText(report);
    }
  }
  if (o.format == "json") out << docs.dump(2) << "\n";
  return passed ? kExitOk : kExitFailed;
}

int runFm(const FmOptions& o, std::ostream& out) {
  const Variety x = Variety::base("X", o.dim);
  const bool homology = o.side == "hom";
  const GeneratorContext source = homology ? GeneratorContext::homology(x) : GeneratorContext::cohomology(x);
  const GeneratorContext target =
      homology ? GeneratorContext::homology(x.dual()) : GeneratorContext::cohomology(x.dual());
  const ExteriorElement input = parse(o.expr, source);

  CohClass a = homology ? toCohomology(HomClass(x, input)) : CohClass(x, input);
  CohClass image = o.component ? fourierComponent(*o.component, a) : fourier(a);
  const ExteriorElement result = homology ? toHomology(image).element : image.element;
  out << print(result, target) << "\n";
  return kExitOk;
}

int runLedger(const LedgerOptions& o, std::ostream& out) {
  const auto result = ledger::resolve(o.dim, ledger::Assumptions::parse(o.assume));
  if (o.format == "json") {
    out << ledger::jsonReport(result).dump(2) << "\n";
  } else {
    out << ledger::tableReport(result);
  }
  return kExitOk;
}

int runKsst(const LedgerOptions& o, std::ostream& out) {
  const auto result = ledger::resolve(o.dim, ledger::Assumptions::parse(o.assume));
  const auto k = ledger::ksst(result, o.j);
  if (o.format == "json") {
    out << ledger::jsonReport(k).dump(2) << "\n";
  } else {
    out << ledger::tableReport(k);
  }
  return kExitOk;
}

std::vector<std::string> identityChoices() {
  std::vector<std::string> out = identityNames();
  out.emplace_back("all");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fourier-Mukai and Lawson ledger computations for abelian varieties", "abvar"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Check an identity exactly on basis or random classes");
  verify->add_option("--dim", vo.dim, "Dimension n of the abelian variety")->check(CLI::Range(1, 4));
  verify->add_option("--identity", vo.identity, "Identity name or 'all'")->check(CLI::IsMember(identityChoices()));
  verify->add_option("--trials", vo.trials, "Random instances per identity")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vo.seed, "Seed for random instances");
  verify->add_option("--format", vo.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  FmOptions fo;
  auto* fm = app.add_subcommand("fm", "Apply the Fourier transform to one element");
  fm->add_option("--dim", fo.dim, "Dimension n of the abelian variety")->check(CLI::Range(1, 4));
  fm->add_option("--expr", fo.expr, "Element, e.g. \"e1^e2 - 1/2*e3\"")->required();
  fm->add_option("--side", fo.side, "coh (generators e, f) or hom (generators x, y)")
      ->check(CLI::IsMember({"coh", "hom"}));
  fm->add_option("--component", fo.component, "Only the summand of weight i")->check(CLI::NonNegativeNumber);

  LedgerOptions lo;
  auto* ledgerCmd = app.add_subcommand("ledger", "Resolve the Lawson slot ledger");
  ledgerCmd->add_option("--dim", lo.dim, "Dimension n of the abelian variety")->check(CLI::Range(1, 4));
  ledgerCmd->add_option("--assume", lo.assume, "Conjecture assumptions")
      ->check(CLI::IsMember({"none", "weak-suslin", "strong-suslin"}));
  ledgerCmd->add_option("--format", lo.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  LedgerOptions ko;
  auto* ksstCmd = app.add_subcommand("ksst", "Report K_j^sst as a sum of morphic groups");
  ksstCmd->add_option("--dim", ko.dim, "Dimension n of the abelian variety")->check(CLI::Range(1, 4));
  ksstCmd->add_option("--j", ko.j, "K-theory degree j")->check(CLI::NonNegativeNumber);
  ksstCmd->add_option("--assume", ko.assume, "Conjecture assumptions")
      ->check(CLI::IsMember({"none", "weak-suslin", "strong-suslin"}));
  ksstCmd->add_option("--format", ko.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (verify->parsed()) {
      code = runVerify(vo, buffer);
    } else if (fm->parsed()) {
      code = runFm(fo, buffer);
    } else if (ledgerCmd->parsed()) {
      code = runLedger(lo, buffer);
    } else {
      code = runKsst(ko, buffer);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ledger::LedgerConflict& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << buffer.str();
  return code;
}

}  // namespace abvar::cli
