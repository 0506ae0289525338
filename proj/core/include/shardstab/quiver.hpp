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

// Finite-dimensional quiver representations over the rationals.
//
// An arrow a: s -> t acts by a dims[t] x dims[s] matrix on column vectors.
// Subspaces of a vertex space are passed as matrices whose rows span them.

#ifndef SHARDSTAB_QUIVER_HPP
#define SHARDSTAB_QUIVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shardstab/coxeter.hpp"
#include "shardstab/linalg.hpp"

namespace shardstab {

struct Quiver {
  int vertices = 0;
  std::vector<Arrow> arrows;

  static Quiver doubled(const CartanData& cartan);
  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// Per-vertex linear maps; block v is (dim of target at v) x (dim of source at v).
using ModuleMap = std::vector<RationalMatrix>;
/// Per-vertex subspaces, rows spanning.
using VertexSubspaces = std::vector<RationalMatrix>;

struct QuiverRep {
  Quiver quiver;
  IntVector dims;
  std::vector<RationalMatrix> maps;

  static QuiverRep zero(const Quiver& q);
  static QuiverRep simple(const Quiver& q, int vertex);

  int total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }
  /// Throws std::invalid_argument on shape errors.
  void validate() const;
  /// Composite action of a path given as arrow indices, leftmost applied last.
  RationalMatrix path_action(const std::vector<int>& arrows) const;
};

/// Sum over arrows of the quiver of (a a* - a* a) vanishes; the quiver must
/// be the doubled quiver of `cartan`.
bool satisfies_preprojective_relation(const QuiverRep& m, const CartanData& cartan);

struct HomSpace {
  std::vector<ModuleMap> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Homomorphisms from m to n.
HomSpace hom_space(const QuiverRep& m, const QuiverRep& n);

bool is_module_map(const ModuleMap& f, const QuiverRep& source, const QuiverRep& target);
ModuleMap identity_map(const QuiverRep& m);
ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const std::vector<Rational>& coeffs);
/// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
std::size_t map_rank(const ModuleMap& f);
bool is_injective(const ModuleMap& f, const QuiverRep& source);
bool is_invertible(const ModuleMap& f);

enum class BrickVerdict { brick, not_brick, indeterminate };

struct BrickCheck {
  BrickVerdict verdict = BrickVerdict::not_brick;
  std::size_t endomorphism_dimension = 0;
  std::string diagnostic;
};

BrickCheck brick_check(const QuiverRep& m);
bool is_brick(const QuiverRep& m);

/// A nonzero endomorphism that is not invertible, preferring basis elements
/// of smallest rank, then alpha - lambda id for a rational eigenvalue lambda.
std::optional<ModuleMap> nonzero_noninvertible_endomorphism(const QuiverRep& m, const HomSpace& end);

/// Rational roots of a polynomial given by coefficients c[0] + c[1] x + ...
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);
/// Characteristic polynomial det(x I - a), coefficients low to high.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& a);

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

/// Restriction to arrow-stable subspaces.  Throws std::domain_error if the
/// subspaces are not stable.
QuiverRep subrepresentation(const QuiverRep& m, const VertexSubspaces& sub);
QuiverRep quotient_representation(const QuiverRep& m, const VertexSubspaces& sub);
/// Inclusion of a subrepresentation built by subrepresentation(m, sub).
ModuleMap inclusion_map(const QuiverRep& m, const VertexSubspaces& sub);

VertexSubspaces kernel_spaces(const ModuleMap& f, const QuiverRep& source);
VertexSubspaces image_spaces(const ModuleMap& f, const QuiverRep& target);
/// Vectors killed by every arrow.
VertexSubspaces socle_spaces(const QuiverRep& m);
/// Sum of the images of all arrows.
VertexSubspaces radical_spaces(const QuiverRep& m);
IntVector subspace_dims(const VertexSubspaces& s);

/// Searches Hom(m, n) for an isomorphism: basis elements first, then
/// seeded random integer combinations with coefficients in [-3, 3].
std::optional<ModuleMap> find_isomorphism(const QuiverRep& m, const QuiverRep& n,
                                          std::uint64_t seed = 1, int random_trials = 64);
bool is_isomorphic(const QuiverRep& m, const QuiverRep& n, std::uint64_t seed = 1);

}  // namespace shardstab

#endif  // SHARDSTAB_QUIVER_HPP
