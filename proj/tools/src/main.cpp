#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "render.hpp"
#include "spinform/isotropy.hpp"
#include "spinform/json_io.hpp"
#include "suites.hpp"

namespace {

using spinform::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

long elapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int runVerify(int n, const std::string& suite, bool json) {
  namespace cli = spinform::cli;
  auto start = std::chrono::steady_clock::now();

  std::vector<std::string> wanted;
  if (suite == "all") {
    for (const auto& s : cli::suiteNames())
      if (n >= cli::suiteMinN(s) && n <= cli::suiteMaxN(s)) wanted.push_back(s);
  } else {
    if (n < cli::suiteMinN(suite) || n > cli::suiteMaxN(suite)) {
      std::cerr << "suite " << suite << " supports n in " << cli::suiteMinN(suite)
                << ".." << cli::suiteMaxN(suite) << ", got " << n << "\n";
      return kExitUsage;
    }
    wanted.push_back(suite);
  }

  std::vector<cli::CheckResult> checks;
  for (const auto& s : wanted) {
    cli::SuiteRun run = cli::runSuite(s, n);
    checks.insert(checks.end(), run.checks.begin(), run.checks.end());
  }
  bool allPass = true;
  for (const auto& c : checks) allPass = allPass && c.pass;

  if (json) {
    Json out;
    out["command"] = "verify";
    out["n"] = n;
    out["suite"] = suite;
    out["checks"] = Json::array();
    for (const auto& c : checks)
      out["checks"].push_back(Json{{"name", c.name},
                                   {"status", c.pass ? "pass" : "fail"},
                                   {"detail", c.detail}});
    out["allPass"] = allPass;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verify suite=" << suite << " n=" << n << "\n";
    std::size_t passed = 0;
    for (const auto& c : checks) {
      if (c.pass) ++passed;
      std::printf("  [%s] %-38s %s\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.detail.c_str());
    }
    std::cout << "summary: " << passed << "/" << checks.size()
              << " checks passed\n";
  }
  std::cerr << "elapsed: " << elapsedMs(start) << " ms\n";
  return allPass ? kExitPass : kExitFail;
}

int runTable1(int dim, bool json) {
  const int n = (dim + 1) / 4;
  spinform::SpinParams p(n);
  spinform::SasakiFrame f = spinform::buildFrame(n);

  struct Row {
    std::string label;
    int structure;
    int slot;
    std::string rendered;
    bool inKernel;
    spinform::Spinor value;
  };
  std::vector<Row> rows;
  bool allPass = true;
  for (int slot = 0; slot <= 1; ++slot)
    for (int i = 1; i <= 3; ++i) {
      spinform::Spinor psi = spinform::eMinusClosedForm(p, i, slot);
      spinform::KernelBasis kb = spinform::eMinusKernel(f, i);
      bool member = spinform::spinorInSpan(kb.spinors, psi);
      allPass = allPass && member;
      rows.push_back({"Psi_{E" + std::to_string(i) + "," +
                          std::to_string(slot) + "}",
                      i, slot, spinform::renderOmega(p, psi), member, psi});
    }

  if (json) {
    Json out;
    out["command"] = "table1";
    out["dim"] = dim;
    out["n"] = n;
    out["rows"] = Json::array();
    for (const auto& r : rows)
      out["rows"].push_back(Json{{"label", r.label},
                                 {"structure", r.structure},
                                 {"slot", r.slot},
                                 {"rendered", r.rendered},
                                 {"inKernel", r.inKernel},
                                 {"spinor", spinform::toJson(r.value)}});
    out["allPass"] = allPass;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "kernel spinor table, ambient dimension " << dim
              << " (n = " << n << ")\n";
    for (const auto& r : rows) {
      std::printf("  %-12s = %-42s %s\n", r.label.c_str(), r.rendered.c_str(),
                  r.inKernel ? "" : "[NOT IN KERNEL]");
    }
    std::cout << (allPass ? "all rows lie in their kernels\n"
                          : "kernel membership FAILED\n");
  }
  return allPass ? kExitPass : kExitFail;
}

int runDims(int n, bool json) {
  spinform::SpinParams p(n);
  spinform::KillingConfig cfg = spinform::makeKillingConfig(n);

  const long spinorDim = static_cast<long>(p.spinorDim());
  const int invariantRank =
      static_cast<int>(spinform::invariantSpinors(p).size());
  const int killingRank = spinform::killingKernel(cfg).rank;
  int eMinusRank = -1;
  bool eMinusConsistent = true;
  for (int i = 1; i <= 3; ++i) {
    int r = spinform::eMinusKernel(cfg.frame, i).rank;
    if (eMinusRank < 0)
      eMinusRank = r;
    else
      eMinusConsistent = eMinusConsistent && r == eMinusRank;
  }

  std::vector<std::string> notes;
  bool haveTwoForms = n <= 4;
  int twoFormRank = 0;
  if (haveTwoForms) {
    twoFormRank =
        static_cast<int>(spinform::invariantForms(p, 2, true).size());
  } else {
    notes.push_back("degree-2 horizontal invariants skipped: enumeration is "
                    "capped at n = 4");
  }
  if (!eMinusConsistent) notes.push_back("E_i kernel ranks disagree across i");

  bool allPass = invariantRank == 2 * n && killingRank == n + 1 &&
                 eMinusRank == 2 && eMinusConsistent &&
                 (!haveTwoForms || twoFormRank == 3);

  if (json) {
    Json out;
    out["command"] = "dims";
    out["n"] = n;
    out["spinorDim"] = spinorDim;
    out["invariantRank"] = invariantRank;
    out["killingRank"] = killingRank;
    out["eMinusRank"] = eMinusRank;
    if (haveTwoForms)
      out["invariantTwoFormRank"] = twoFormRank;
    else
      out["invariantTwoFormRank"] = nullptr;
    out["notes"] = notes;
    out["allPass"] = allPass;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n = " << n << " (ambient dim " << 4 * n - 1
              << ", spinor dim " << spinorDim << ")\n";
    std::printf("  invariant spinors     : %-4d (expected %d)\n", invariantRank,
                2 * n);
    std::printf("  Killing kernel        : %-4d (expected %d)\n", killingRank,
                n + 1);
    std::printf("  rank E_i^-            : %-4d (expected 2)\n", eMinusRank);
    if (haveTwoForms)
      std::printf("  invariant 2-forms (H) : %-4d (expected 3)\n", twoFormRank);
    for (const auto& note : notes) std::cout << "  note: " << note << "\n";
    std::cout << (allPass ? "all ranks match\n" : "rank MISMATCH\n");
  }
  return allPass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker for the spin-module structures of the "
               "3-Sasakian model frame"};
  app.require_subcommand(1);

  int verifyN = 2;
  std::string suite = "all";
  bool verifyJson = false;
  CLI::App* verify =
      app.add_subcommand("verify", "run exact verification suites");
  verify->add_option("--n", verifyN, "size parameter")
      ->required()
      ->check(CLI::Range(1, 6));
  std::vector<std::string> suiteChoices = spinform::cli::suiteNames();
  suiteChoices.push_back("all");
  verify->add_option("--suite", suite, "suite name or 'all'")
      ->check(CLI::IsMember(suiteChoices));
  verify->add_flag("--json", verifyJson, "machine-readable output");

  int dim = 7;
  bool tableJson = false;
  CLI::App* table =
      app.add_subcommand("table1", "closed-form kernel spinors at low dimension");
  table->add_option("--dim", dim, "ambient dimension")
      ->required()
      ->check(CLI::IsMember({7, 11, 15}));
  table->add_flag("--json", tableJson, "machine-readable output");

  int dimsN = 2;
  bool dimsJson = false;
  CLI::App* dims =
      app.add_subcommand("dims", "rank summary of the invariant spaces");
  dims->add_option("--n", dimsN, "size parameter")
      ->required()
      ->check(CLI::Range(2, 5));
  dims->add_flag("--json", dimsJson, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return runVerify(verifyN, suite, verifyJson);
    if (table->parsed()) return runTable1(dim, tableJson);
    if (dims->parsed()) return runDims(dimsN, dimsJson);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
