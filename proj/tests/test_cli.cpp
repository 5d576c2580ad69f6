#include "doctest.h"
#include "render.hpp"
#include "spinform/json_io.hpp"
#include "spinform/killing.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace spinform;

namespace {

struct CmdResult {
  int exitCode = -1;
  std::string out;
};

CmdResult run(const std::string& args) {
  std::string cmd = std::string(SPINVERIFY_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("renderer emits the frozen notation") {
  SpinParams p(2);
  CHECK(renderOmega(p, Spinor::zero()) == "0");
  CHECK(renderOmega(p, Spinor::unit()) == "1");
  CHECK(renderOmega(p, omegaSpinor(p)) == "ω");
  CHECK(renderOmega(p, psiK(p, 0)) == "ω - i y_1");
  CHECK(renderOmega(p, eMinusClosedForm(p, 2, 1)) == "1 + i y_1∧ω");

  SpinParams p3(3);
  CHECK(renderOmega(p3, omegaPower(p3, 2)) == "ω^2");
  CHECK(renderOmega(p3, eMinusClosedForm(p3, 2, 0)) ==
        "ω - i y_1 + 1/2 i y_1∧ω^2");
  CHECK(renderOmega(p3, Scalar::ofInt(-3) * wedge(p3, 1, omegaPower(p3, 2))) ==
        "-3 y_1∧ω^2");
  Scalar mixed = Scalar::one() + Scalar::sqrt2();
  CHECK(renderOmega(p3, mixed * omegaSpinor(p3)) == "(1 + sqrt2) ω");
}

TEST_CASE("renderer falls back outside the invariant span") {
  SpinParams p(2);
  Spinor stray = Spinor::basis(0b10u);
  CHECK(decomposeOmega(p, stray) == std::nullopt);
  CHECK(renderOmega(p, stray) == toString(stray));
  REQUIRE(decomposeOmega(p, psiK(p, 0)).has_value());
}

TEST_CASE("verify subcommand") {
  CmdResult r = run("verify --n 2 --suite frame --json");
  CHECK(r.exitCode == 0);
  Json j = Json::parse(r.out);
  CHECK(j["command"] == "verify");
  CHECK(j["n"] == 2);
  CHECK(j["suite"] == "frame");
  CHECK(j["allPass"] == true);
  CHECK_FALSE(j.contains("elapsed"));
  for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("verify rejects out-of-range requests") {
  CHECK(run("verify --n 7 --suite frame").exitCode == 2);
  CHECK(run("verify --n 5 --suite bilinear").exitCode == 2);
  CHECK(run("verify --n 1 --suite isotropy").exitCode == 2);
  CHECK(run("verify --n 2 --suite nonsense").exitCode == 2);
  CHECK(run("bogus").exitCode == 2);
}

TEST_CASE("table1 subcommand") {
  CmdResult r = run("table1 --dim 7 --json");
  CHECK(r.exitCode == 0);
  Json j = Json::parse(r.out);
  CHECK(j["dim"] == 7);
  CHECK(j["n"] == 2);
  REQUIRE(j["rows"].size() == 6);
  CHECK(j["rows"][0]["rendered"] == "1");
  CHECK(j["rows"][1]["rendered"] == "ω - i y_1");
  CHECK(j["rows"][3]["rendered"] == "y_1∧ω");
  for (const auto& row : j["rows"]) CHECK(row["inKernel"] == true);
  // embedded spinors parse back
  Spinor first = spinorFromJson(j["rows"][0]["spinor"]);
  CHECK(first == Spinor::unit());

  CHECK(run("table1 --dim 9").exitCode == 2);
}

TEST_CASE("dims subcommand") {
  CmdResult r = run("dims --n 2 --json");
  CHECK(r.exitCode == 0);
  Json j = Json::parse(r.out);
  CHECK(j["spinorDim"] == 8);
  CHECK(j["invariantRank"] == 4);
  CHECK(j["killingRank"] == 3);
  CHECK(j["eMinusRank"] == 2);
  CHECK(j["invariantTwoFormRank"] == 3);
  CHECK(j["allPass"] == true);

  CHECK(run("dims --n 1").exitCode == 2);
  CHECK(run("dims --n 6").exitCode == 2);
}

TEST_CASE("json output is byte-stable") {
  CmdResult a = run("verify --n 2 --suite killing --json");
  CmdResult b = run("verify --n 2 --suite killing --json");
  CHECK(a.exitCode == 0);
  CHECK(a.out == b.out);
}
