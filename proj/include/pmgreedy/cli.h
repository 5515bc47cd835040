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

#ifndef PMGREEDY_CLI_H_
#define PMGREEDY_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pmgreedy/curvature.h"
#include "pmgreedy/io.h"

namespace pmgreedy {

// Parsed command line. Exactly one instance source is set: a file path or a
// generator name.
struct RunConfig {
  std::string subcommand;

  std::string graph_path;
  std::string panel_path;
  std::string auction_path;
  std::string matrix_path;
  std::string generate;  // bad-example | random-psd | random-digraph |
                         // random-auction | random-panel | delta-matrix
  bool undirected = false;
  std::string objective;  // cut | logdet | entropy | welfare; empty = default
  std::optional<double> regularize;

  // Generator parameters.
  int n = 5;
  double p = 0.4;
  double sigma = 1.0;
  double delta = 2.0;
  int players = 2;
  int items = 3;
  int stations = 12;
  int countries = 2;
  int months = 36;
  std::uint64_t seed = 0;

  std::optional<int> uniform;
  std::string partition_path;
  std::optional<double> country_fraction;

  bool exact = false;
  std::string curvature;  // empty = none
  std::string family;     // submodular | subadditive; empty = by instance

  std::string output_path;
  std::string csv_path;

  // bound
  double alpha = 0.0;
  int d = 1;
  int d_bar = 1;
};

ResultRecord CmdGreedy(const RunConfig& config);
ResultRecord CmdExact(const RunConfig& config);
CurvatureReport CmdCurvature(const RunConfig& config);
double CmdBound(const RunConfig& config);
// One record per greedy prefix t = 1..T.
std::vector<ResultRecord> CmdSweep(const RunConfig& config);
// Writes the generated instance to config.output_path.
void CmdGenerate(const RunConfig& config);

// Entry point behind the executable. Returns the process exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace pmgreedy

#endif  // PMGREEDY_CLI_H_
