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

// Verification suites, JSON reports and rank-2 SVG pictures.

#ifndef SHARDSTAB_HARNESS_HPP
#define SHARDSTAB_HARNESS_HPP

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shardstab/arrangement.hpp"
#include "shardstab/coxeter.hpp"
#include "shardstab/quiver.hpp"
#include "shardstab/stability.hpp"

namespace shardstab {

using json = nlohmann::json;

/// What --type names: a Dynkin type ("A3"), the eight-chamber plane
/// arrangement ("octagon"), a custom plane arrangement ("rank2:2,-1;1,-2;..."),
/// or the hereditary path algebra of A2 ("A2path").
struct TypeSpec {
  enum class Kind { dynkin, rank2, path_a2 };
  Kind kind = Kind::dynkin;
  std::string label;
  std::optional<CartanData> cartan;
  Arrangement arrangement;
};

/// Throws std::invalid_argument with a diagnostic on bad input.
TypeSpec parse_type_spec(std::string_view text);

enum class Scope { exhaustive, sampled };

struct CheckResult {
  std::string name;
  Scope scope = Scope::exhaustive;
  bool passed = true;
  std::uint64_t count = 0;
  json counterexample;  // null when passed
  double seconds = 0;
};

struct VerificationReport {
  std::string type_label;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
  /// Checks sorted by name; timings only on request so that reruns are
  /// byte-identical.
  json to_json(bool include_timings = false) const;
};

struct RunOptions {
  std::vector<int> primes = kDefaultPrimes;
  std::uint64_t seed = 1;
  double budget_seconds = 0;  // 0: no limit
};

/// Wall-clock budget shared by the checks of one run.
class Deadline {
 public:
  explicit Deadline(double seconds);
  bool expired() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

/// Lattice axioms and semidistributivity over all triples.
VerificationReport verify_lattice(const TypeSpec& spec, const RunOptions& options = {});
/// Join-irreducible / shard bijection and label commutation over all covers.
VerificationReport verify_shard_bijection(const TypeSpec& spec, const RunOptions& options = {});
/// Brick semistability regions against shard closures, plus the algebraic
/// suites (ideals, tensor twists, brick labels, codimension-two sequences).  Types
/// beyond A3 need a positive budget.  For A2path, the hereditary picture.
VerificationReport verify_semistability(const TypeSpec& spec, const RunOptions& options = {});

/// `which` is one of lattice, bijection, main, all.
VerificationReport run_verification(const TypeSpec& spec, std::string_view which, const RunOptions& options = {});

/// Around a flat met by three hyperplanes H_1, H_2, H_3, a point of H_2
/// just off the flat, the brick B of its shard, and the bricks E, F of the
/// shards of H_1 and H_3 through a generic point of the flat, E being the
/// one of negative value at the point.  Indices refer to table entries.
struct SesConfiguration {
  std::size_t flat = 0;
  int side = 1;
  std::size_t sub = 0;
  std::size_t middle = 0;
  std::size_t quotient = 0;
  RationalVector point;
};

std::vector<SesConfiguration> codim2_configurations(const BrickTable& table);

/// A point of the flat off every hyperplane not containing it.
RationalVector generic_point(const Arrangement& arr, const Codim2Flat& flat);

/// Modules of the hereditary algebra of 2 -> 1: S_1, S_2 and P_2.
struct PathA2Modules {
  QuiverRep s1, s2, p2;
};
PathA2Modules path_a2_modules();

/// Exact values serialise as fraction strings.
json rational_json(const Rational& q);
json vector_json(const RationalVector& v);
json matrix_json(const RationalMatrix& m);
json module_json(const QuiverRep& m);

/// Summaries for the build, shards and bricks subcommands.
json describe_build(const TypeSpec& spec);
json describe_shards(const TypeSpec& spec);
json describe_bricks(const TypeSpec& spec, const RunOptions& options = {});

/// SVG picture of a rank-2 type; throws std::invalid_argument otherwise
/// (A1 draws its single line).
std::string render_rank2(const TypeSpec& spec, const RunOptions& options = {});

/// Short display name of a brick: S_i, P_i, or its dimension vector.
std::string brick_name(const QuiverRep& brick, const std::vector<QuiverRep>& projectives);

}  // namespace shardstab

#endif  // SHARDSTAB_HARNESS_HPP
