// Copyright 2026 The qreorder Authors
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


#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"
#include "qreorder/qreorder.hpp"
#include "support/fixtures.hpp"

namespace qreorder {
namespace {

namespace fs = std::filesystem;
using testing::fixture_path;
using testing::read_fixture;

struct CliRun {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qreorder_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string tmp(const std::string &name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  CliRun run(const std::string &args) const {
    const std::string out = tmp("stdout.txt");
    const std::string cmd = std::string("\"") + QREORDER_CLI_PATH + "\" " + args + " > \"" + out + "\" 2> \"" +
                            tmp("stderr.txt") + "\"";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
  }

  static nlohmann::json json(const CliRun &r) { return nlohmann::json::parse(r.out); }

  static std::string fx(const std::string &name) { return "\"" + fixture_path(name) + "\""; }

  fs::path dir_;
};

TEST_F(Cli, MetricsChainHandValue) {
  const CliRun r = run("metrics --qasm " + fx("chain3.qasm") + " --calibration " + fx("chain3.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json(r);
  EXPECT_EQ(j["command"], "metrics");
  EXPECT_NEAR(j["metrics"]["wesp"].get<double>(), 0.936582, 1e-6);
  EXPECT_EQ(j["metrics"]["erroneous_gates"], 2);
  EXPECT_EQ(j["metrics"]["measured_qubits"], 3);
  EXPECT_EQ(j["metrics"]["per_gate"].size(), 2u);
  EXPECT_EQ(j["input_digest"].get<std::string>().size(), 16u);
}

TEST_F(Cli, MetricsNoiselessAndUniform) {
  auto j = json(run("metrics --qasm " + fx("bv5_m1.qasm") + " --calibration " + fx("line5_noiseless.json")));
  EXPECT_EQ(j["metrics"]["esp"].get<double>(), 1.0);
  EXPECT_EQ(j["metrics"]["wesp"].get<double>(), 1.0);
  j = json(run("metrics --qasm " + fx("bv5_m1.qasm") + " --calibration " + fx("line5_uniform.json")));
  EXPECT_TRUE(j["metrics"]["lambda_zero"].get<bool>());
  EXPECT_NEAR(j["metrics"]["wesp"].get<double>(), j["metrics"]["esp"].get<double>(), 1e-12);
}

TEST_F(Cli, RescheduleImprovesWesp) {
  const CliRun r = run("reschedule --qasm " + fx("star3.qasm") + " --calibration " + fx("star3.json") + " -o " +
                    tmp("out.qasm"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json(r);
  EXPECT_GE(j["R"].get<int>(), 1);
  EXPECT_GT(j["wesp_after"].get<double>(), j["wesp_before"].get<double>());
  EXPECT_EQ(j["before"]["depth"], j["after"]["depth"]);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_TRUE(j.contains("elapsed_ms"));
  const Circuit out = parse_qasm(slurp(tmp("out.qasm")));
  EXPECT_TRUE(unitary_equivalent(strip_measurements(out), strip_measurements(testing::fixture_circuit("star3.qasm"))));
}

TEST_F(Cli, ExhaustiveCountsBvSchedules) {
  const CliRun r = run("reschedule --qasm " + fx("bv5_m1.qasm") + " --calibration " + fx("line5_noisy12.json") +
                    " --exhaustive 100");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json(r)["schedules_enumerated"], 14);
  EXPECT_EQ(json(r)["level"], "exhaustive");
  const CliRun limited = run("reschedule --qasm " + fx("bv5_m1.qasm") + " --calibration " +
                          fx("line5_noisy12.json") + " --exhaustive 5");
  EXPECT_EQ(limited.code, 2);
}

TEST_F(Cli, CommuteFreeIsUnchanged) {
  const CliRun r = run("reschedule --qasm " + fx("commute_free.qasm") + " --calibration " + fx("chain3.json") +
                    " --no-timing -o " + tmp("out.qasm"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json(r)["R"], 0);
  EXPECT_FALSE(json(r).contains("elapsed_ms"));
  EXPECT_EQ(slurp(tmp("out.qasm")), emit_qasm(testing::fixture_circuit("commute_free.qasm")));
}

TEST_F(Cli, RescheduleIsDeterministic) {
  const std::string args = "reschedule --qasm " + fx("bv5_m1.qasm") + " --calibration " +
                           fx("line5_noisy12.json") + " --sweeps 2 --no-timing";
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(Cli, SimulateDeterministicAndPerfectWhenNoiseless) {
  const std::string args = "simulate --qasm " + fx("bv5_m1.qasm") + " --calibration " + fx("line5_noisy12.json") +
                           " --shots 2000 --seed 7 --expected 0010";
  const CliRun a = run(args);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, run(args).out);
  EXPECT_EQ(a.out, run(args + " --threads 3").out);
  const auto clean = json(run("simulate --qasm " + fx("bv5_m1.qasm") + " --calibration " +
                              fx("line5_noiseless.json") + " --expected 0010"));
  EXPECT_EQ(clean["pst"].get<double>(), 1.0);
  EXPECT_EQ(clean["histogram"]["0010"], 8192);
}

TEST_F(Cli, SimulateCompare) {
  const auto j = json(run("simulate --qasm " + fx("bv5_m2.qasm") + " --calibration " + fx("line5_noisy12.json") +
                          " --seed 3 --expected 0010 --compare " + fx("bv5_m1.qasm")));
  ASSERT_TRUE(j.contains("compare"));
  EXPECT_NEAR(j["compare"]["delta"].get<double>(), j["pst"].get<double>() - j["compare"]["pst"].get<double>(),
              1e-15);
}

TEST_F(Cli, QaoaPipeline) {
  const CliRun gen = run("qaoa --graph " + fx("triangle.json") + " --gamma 0.4 --beta 0.3 -o " + tmp("tri.qasm"));
  ASSERT_EQ(gen.code, 0) << gen.out;
  EXPECT_EQ(json(gen)["blocks"], 3);
  ASSERT_TRUE(fs::exists(tmp("tri.qasm.blocks.json")));
  const Circuit c = parse_qasm(slurp(tmp("tri.qasm")));
  double norm = 0.0;
  for (const auto &a : statevector(c)) norm += std::norm(a);
  EXPECT_NEAR(norm, 1.0, 1e-12);

  const CliRun zz = run("reschedule --qasm " + tmp("tri.qasm") + " --calibration " + fx("triangle_cal.json") +
                     " --level both -o " + tmp("tri_out.qasm"));
  ASSERT_EQ(zz.code, 0) << zz.out;
  EXPECT_EQ(json(zz)["stages"].size(), 2u);
  EXPECT_TRUE(fs::exists(tmp("tri_out.qasm.blocks.json")));

  const CliRun sim = run("simulate --qasm " + tmp("tri.qasm") + " --calibration " + fx("triangle_noiseless.json") +
                      " --graph " + fx("triangle.json") + " --seed 1");
  ASSERT_EQ(sim.code, 0) << sim.out;
  const auto s = json(sim);
  const double sigma = 0.5 / std::sqrt(8192.0);
  EXPECT_NEAR(s["ar"].get<double>(), s["ar_ideal"].get<double>(), 4 * sigma);
}

TEST_F(Cli, QaoaPathBlocksOnlyOnEdges) {
  ASSERT_EQ(run("qaoa --graph " + fx("path3.json") + " --gamma 0.4 --beta 0.3 --p 2 -o " + tmp("p.qasm")).code, 0);
  const auto sidecar = nlohmann::json::parse(slurp(tmp("p.qasm.blocks.json")));
  const Circuit c = parse_qasm(slurp(tmp("p.qasm")));
  EXPECT_EQ(sidecar["blocks"].size(), 12u);
  for (const auto &g : c.gates()) {
    if (g.kind == GateKind::CX) {
      EXPECT_EQ(std::abs(g.qubits[0] - g.qubits[1]), 1);
    }
  }
}

TEST_F(Cli, ZzWithoutTagsIsInputError) {
  const CliRun r = run("reschedule --qasm " + fx("bv5_m1.qasm") + " --calibration " + fx("line5_noisy12.json") +
                    " --level zz");
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("metrics --qasm " + tmp("missing.qasm") + " --calibration " + fx("chain3.json")).code, 2);
  EXPECT_EQ(run("metrics --qasm " + fx("bv5_m1.qasm") + " --calibration " + fx("chain3.json")).code, 2);
  EXPECT_EQ(run("simulate --qasm " + fx("chain3.qasm") + " --calibration " + fx("chain3.json")).code, 2);
  EXPECT_EQ(run("simulate --qasm " + fx("chain3.qasm") + " --calibration " + fx("chain3.json") +
                " --expected 01")
                .code,
            2);
  EXPECT_EQ(run("reschedule --qasm " + fx("chain3.qasm")).code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  std::ofstream(tmp("bad.qasm")) << "OPENQASM 2.0;\nqreg q[1];\nu3(0,0,0) q[0];\n";
  EXPECT_EQ(run("metrics --qasm " + tmp("bad.qasm") + " --calibration " + fx("chain3.json")).code, 2);
}

}  // namespace
}  // namespace qreorder
