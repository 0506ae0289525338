// Copyright 2026 The shardstab Authors
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

// shardstab: shards, bricks and semistability from the command line.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage error,
// 3 computation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "shardstab/harness.hpp"

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kComputation = 3;

struct Args {
  std::string type;
  std::vector<int> primes = shardstab::kDefaultPrimes;
  std::uint64_t seed = 1;
  double budget = 0;
  std::string out;
  std::string format;  // json, or svg for render
  bool timings = false;
  std::string check = "all";
};

void write(const Args& args, const std::string& text) {
  if (args.out.empty() || args.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(args.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + args.out + " for writing");
  f << text;
}

std::string dump(const shardstab::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  using namespace shardstab;
  CLI::App app{"Shards of reflection arrangements, preprojective bricks and King semistability"};
  app.require_subcommand(1);
  Args args;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", args.type, "A1..A8, D4..D8, E6..E8, octagon, A2path, or rank2:a,b;c,d;...")->required();
    sub->add_option("--primes", args.primes, "primes for submodule enumeration")->delimiter(',')->check(CLI::PositiveNumber);
    sub->add_option("--seed", args.seed, "seed for randomised searches");
    sub->add_option("--budget-seconds", args.budget, "wall-clock budget; 0 means none")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", args.out, "output file (default stdout)");
    sub->add_option("--format", args.format, "output format")->check(CLI::IsMember({"json", "svg"}));
  };

  auto* build = app.add_subcommand("build", "Cartan data, roots, Weyl group and algebra basis");
  auto* shards = app.add_subcommand("shards", "chambers, covers, flats and shards");
  auto* bricks = app.add_subcommand("bricks", "bricks of the join-irreducibles");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  auto* render = app.add_subcommand("render", "SVG picture of a rank-2 type");
  for (auto* sub : {build, shards, bricks, verify, render}) common(sub);
  verify->add_option("--check", args.check, "suite to run")->check(CLI::IsMember({"lattice", "bijection", "main", "all"}));
  verify->add_flag("--timings", args.timings, "include per-check timings in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  const bool is_render = render->parsed();
  if (args.format.empty()) args.format = is_render ? "svg" : "json";
  if (is_render != (args.format == "svg")) {
    std::cerr << "error: --format " << args.format << " is not available for this subcommand\n";
    return kUsage;
  }

  TypeSpec spec;
  try {
    spec = parse_type_spec(args.type);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  RunOptions options;
  options.primes = args.primes;
  options.seed = args.seed;
  options.budget_seconds = args.budget;

  try {
    if (build->parsed()) {
      write(args, dump(describe_build(spec)));
    } else if (shards->parsed()) {
      write(args, dump(describe_shards(spec)));
    } else if (bricks->parsed()) {
      write(args, dump(describe_bricks(spec, options)));
    } else if (is_render) {
      write(args, render_rank2(spec, options));
    } else {
      VerificationReport report = run_verification(spec, args.check, options);
      write(args, dump(report.to_json(args.timings)));
      return report.passed() ? 0 : kCheckFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
  return 0;
}
