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

// King semistability.  Submodules are enumerated over small prime fields
// from an integral form of the module; the resulting dimension-vector sets
// must agree across all primes used.

#ifndef SHARDSTAB_STABILITY_HPP
#define SHARDSTAB_STABILITY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "shardstab/arrangement.hpp"
#include "shardstab/functional.hpp"
#include "shardstab/preproj.hpp"
#include "shardstab/quiver.hpp"

namespace shardstab {

class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational evaluate(const StabilityFunctional& phi, std::span<const int> class_vector);

/// Arrow matrices with integer entries in a basis of an arrow-stable lattice.
struct IntegralForm {
  IntVector dims;
  std::vector<Arrow> arrows;
  std::vector<Matrix<Integer>> maps;
  std::vector<RationalMatrix> lattice_basis;  // per vertex, rows
};

/// Throws EnumerationError if no finitely generated stable lattice is found.
IntegralForm integral_form(const QuiverRep& m);

/// Integer Hermite normal form of the row lattice, zero rows dropped.
Matrix<Integer> hermite_normal_form(Matrix<Integer> rows);

struct DimVectorSet {
  IntVector module_dims;
  std::set<IntVector> achievable;
  std::vector<int> primes_used;

  bool contains(const IntVector& d) const { return achievable.count(d) > 0; }
};

inline const std::vector<int> kDefaultPrimes = {2, 3, 5};

/// Dimension vectors of submodules of the reduction mod p for each prime.
/// Throws EnumerationError on cross-prime disagreement or when more than
/// `max_submodules` submodules turn up.
DimVectorSet submodule_dim_vectors(const QuiverRep& m, const std::vector<int>& primes = kDefaultPrimes,
                                   std::size_t max_submodules = 200000);

/// Dimension vectors of all submodules of one reduction.
std::set<IntVector> submodule_dim_vectors_mod_p(const IntegralForm& form, int p, std::size_t max_submodules);

bool is_semistable(const DimVectorSet& subs, const StabilityFunctional& phi);
bool is_semistable(const QuiverRep& m, const StabilityFunctional& phi,
                   const std::vector<int>& primes = kDefaultPrimes);

/// Bricks whose extensions build M.  Throws std::invalid_argument if M is
/// not semistable at phi, std::runtime_error if some endomorphism ring of
/// dimension > 1 yields no zero divisor.
std::vector<QuiverRep> brick_filtration(const QuiverRep& m, const StabilityFunctional& phi,
                                        const std::vector<int>& primes = kDefaultPrimes);

/// One join-irreducible with its brick and shard.
struct BrickEntry {
  std::size_t element = 0;  // join-irreducible, also its chamber index
  std::size_t lower = 0;
  std::size_t cover = 0;  // index into poset covers
  std::size_t shard = 0;
  std::size_t hyperplane = 0;
  QuiverRep brick;
  std::optional<DimVectorSet> submodules;
};

struct BrickTable {
  CartanData cartan;
  WeylGroup group;
  AlgebraTable algebra;
  ShardModel model;
  std::vector<Ideal> ideals;  // per Weyl element
  std::vector<BrickEntry> entries;  // parallel to model.join_irreducibles
};

/// Throws std::logic_error if a brick's class is not the positive root of
/// its shard's hyperplane.
BrickTable build_brick_table(const CartanData& cartan, const std::vector<int>& primes = kDefaultPrimes,
                             bool enumerate_submodules = true);

struct SemistableSets {
  std::vector<std::size_t> direct;     // entries semistable at phi
  std::vector<std::size_t> predicted;  // entries whose shard closure holds phi
  bool agree() const { return direct == predicted; }
};

SemistableSets semistable_bricks_at(const StabilityFunctional& phi, const BrickTable& table);

}  // namespace shardstab

#endif  // SHARDSTAB_STABILITY_HPP
