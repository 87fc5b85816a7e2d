/*
 * Copyright 2026 The BWAR Simulator Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs the bwar_sim executable as a separate process and checks its output.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bwar/engine.hpp"

namespace bwar {
namespace {

namespace fs = std::filesystem;

class SimProcess : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bwar_it_" + std::string(::testing::UnitTest::GetInstance()
                                         ->current_test_info()
                                         ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(BWAR_SIM_PATH) + " " + args + " 2>" +
                            (dir_ / "stderr.txt").string() + " >" +
                            (dir_ / "stdout.txt").string();
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
};

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream ls(s);
    for (std::string f; std::getline(ls, f, ',');) out.push_back(f);
    return out;
  };
  if (!std::getline(in, line)) return t;
  t.header = split(line);
  while (std::getline(in, line)) {
    auto f = split(line);
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < f.size() && i < t.header.size(); ++i) {
      row[t.header[i]] = f[i];
    }
    t.rows.push_back(row);
  }
  return t;
}

TEST_F(SimProcess, ExitCodes) {
  EXPECT_EQ(run("--variant RB --lambda 1.5"), 2);
  EXPECT_EQ(run("--variant NOPE"), 2);
  EXPECT_EQ(run("--preset nope"), 2);
  EXPECT_EQ(run("--variant RB --slots 100 --out /nonexistent-dir/a/b.csv"), 1);
  EXPECT_EQ(run("--variant RB --slots 100"), 0);
  EXPECT_EQ(parse_csv(read("stdout.txt")).rows.size(), 1u);
}

TEST_F(SimProcess, SameSeedSameBytes) {
  const std::string args = "--preset fig3 --slots 3000 --seed 4 --seeds 2 --out ";
  ASSERT_EQ(run(args + path("a.csv")), 0) << read("stderr.txt");
  ASSERT_EQ(run(args + path("b.csv")), 0);
  const std::string a = read("a.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, read("b.csv"));
}

TEST_F(SimProcess, LowLoadDeliversAlmostEverything) {
  // Half the stability threshold or less: nearly every packet delivered.
  for (const char* v : {"RB", "RB-DA", "BWAR-IM", "BWAR-ID", "BWAR-TD", "SNW"}) {
    ASSERT_EQ(run(std::string("--variant ") + v +
                  " --lambda 0.03 --slots 100000 --out " + path("low.csv")),
              0);
    Table t = parse_csv(read("low.csv"));
    ASSERT_EQ(t.rows.size(), 1u);
    const auto& r = t.rows[0];
    const double admitted = std::stod(r.at("admitted"));
    const double delivered = std::stod(r.at("delivered"));
    EXPECT_GE(delivered / admitted, 0.95) << v;
    EXPECT_EQ(r.at("stable"), "true") << v;
    EXPECT_EQ(r.at("variant"), v);
  }
}

TEST_F(SimProcess, Fig5TimeoutStudyShape) {
  ASSERT_EQ(run("--preset fig5 --slots 4000 --out " + path("fig5.csv")), 0);
  Table t = parse_csv(read("fig5.csv"));
  ASSERT_EQ(t.rows.size(), 4u * 5u);
  std::map<std::string, int> per_variant;
  for (const auto& r : t.rows) {
    EXPECT_EQ(r.at("experiment"), "fig5");
    ++per_variant[r.at("variant")];
  }
  EXPECT_EQ(per_variant["BWAR-ID"], 4);
  EXPECT_EQ(per_variant["BWAR-TD"], 16);
}

TEST_F(SimProcess, WarmupExcludesEarlySlotsFromAverages) {
  ASSERT_EQ(run("--variant RB --lambda 0.05 --slots 20000 --warmup 10000 --out " +
                path("w.csv")),
            0);
  Table t = parse_csv(read("w.csv"));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0].at("warmup"), "10000");
  EXPECT_NE(t.rows[0].at("mean_delay"), "NA");
}

TEST(InProcess, RedundancyCutsLowLoadDelay) {
  // Destination advantage and redundancy each shorten low-load delay.
  auto delay = [](Variant v) {
    SimConfig cfg;
    cfg.cells = 16;
    cfg.nodes = 28;
    cfg.lambda = 0.001;
    cfg.variant = v;
    cfg.slots = 100000;
    return *run(cfg).mean_delay;
  };
  const double rb = delay(Variant::kRb);
  const double rbda = delay(Variant::kRbDa);
  const double id = delay(Variant::kBwarId);
  EXPECT_GT(rb, rbda);
  EXPECT_GT(rbda, id);
}

TEST(InProcess, TimeoutVariantKeepsDurableCopies) {
  // With a one-slot timeout every plain duplicate dies almost immediately,
  // yet nothing is lost: all admitted packets still arrive.
  SimConfig cfg;
  cfg.cells = 9;
  cfg.nodes = 16;
  cfg.lambda = 0.005;
  cfg.variant = Variant::kBwarTd;
  cfg.timeout = 1;
  cfg.slots = 50000;
  cfg.audit = true;
  Simulator sim(cfg);
  sim.run_to_end();
  EXPECT_EQ(sim.violation_count(), 0);
  const auto& reg = sim.network().registry();
  EXPECT_GE(static_cast<double>(reg.delivered_count()) / reg.admitted(), 0.99);
}

}  // namespace
}  // namespace bwar
