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

// The preprojective algebra of a Dynkin quiver as a table of structure
// constants, its two-sided ideals I_w, and the modules built from them.
//
// Paths compose right to left: p q means "q, then p".  Modules are left
// modules, so the vertex-v part of a left ideal J is e_v J, spanned by the
// basis paths ending at v.

#ifndef SHARDSTAB_PREPROJ_HPP
#define SHARDSTAB_PREPROJ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shardstab/coxeter.hpp"
#include "shardstab/linalg.hpp"
#include "shardstab/quiver.hpp"

namespace shardstab {

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

struct BasisPath {
  int source = 0;
  int target = 0;
  int degree = 0;
  /// Doubled-arrow indices, leftmost applied last; empty for e_source.
  std::vector<int> arrows;
};

class AlgebraTable {
 public:
  const CartanData& cartan() const { return cartan_; }
  const Quiver& quiver() const { return quiver_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BasisPath>& basis() const { return basis_; }
  std::size_t idempotent(int v) const { return static_cast<std::size_t>(v); }
  int max_degree() const { return basis_.empty() ? 0 : basis_.back().degree; }

  /// Product of two basis elements.
  const SparseVector& product(std::size_t x, std::size_t y) const { return mult_[x * basis_.size() + y]; }
  RationalVector multiply(const RationalVector& x, const RationalVector& y) const;
  /// Left multiplication by a doubled arrow.
  RationalVector left_arrow(int arrow, const RationalVector& y) const;
  RationalVector unit(std::size_t b) const;
  /// Coordinates of a doubled arrow.
  RationalVector arrow_element(int arrow) const { return unit(basis_index_of_arrow(arrow)); }
  std::size_t basis_index_of_arrow(int arrow) const { return static_cast<std::size_t>(cartan_.rank() + arrow); }

  /// Arrow names: a1, a2, ... for the quiver, a1*, ... for reversals;
  /// e1, ... for idempotents.  Vertices print 1-based.
  std::string path_string(std::size_t b) const;
  std::string arrow_name(int arrow) const;

  bool is_associative() const;

 private:
  friend AlgebraTable build_algebra(const CartanData& cartan, bool check_associativity);

  CartanData cartan_;
  Quiver quiver_;
  std::vector<BasisPath> basis_;
  std::vector<std::vector<SparseVector>> left_;  // [arrow][basis element]
  std::vector<SparseVector> mult_;
};

/// Builds the algebra degree by degree.  Throws std::logic_error if the
/// construction does not terminate or multiplication is not associative.
AlgebraTable build_algebra(const CartanData& cartan, bool check_associativity = true);

struct Ideal {
  RationalMatrix basis;  // RREF rows in algebra coordinates
  std::optional<std::vector<int>> word;

  std::size_t dimension() const { return basis.rows(); }
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.basis == b.basis; }
};

Ideal ideal_from_span(const AlgebraTable& alg, const RationalMatrix& rows);
Ideal whole_algebra(const AlgebraTable& alg);
Ideal zero_ideal(const AlgebraTable& alg);
bool contains(const Ideal& big, const Ideal& small);
bool is_two_sided(const AlgebraTable& alg, const Ideal& ideal);

/// I_i = Pi (1 - e_i) Pi.
Ideal ideal_of_vertex(const AlgebraTable& alg, int i);
Ideal ideal_product(const AlgebraTable& alg, const Ideal& a, const Ideal& b);

/// I_{i_1} ... I_{i_r} along a word.  Throws std::invalid_argument if the
/// word is not reduced.
Ideal ideal_of_word(const AlgebraTable& alg, const WeylGroup& group, const std::vector<int>& word);

/// I_w from the stored reduced word.  With verify_all_words every reduced
/// word is used and disagreement throws std::logic_error.
Ideal ideal_of_element(const AlgebraTable& alg, const WeylGroup& group, std::size_t w,
                       bool verify_all_words = false);

/// I_w for every element, each obtained from its BFS parent.
std::vector<Ideal> element_ideals(const AlgebraTable& alg, const WeylGroup& group);

/// The left module U / L for left ideals L contained in U whose basis rows
/// each end at a single vertex.  Throws std::invalid_argument otherwise.
QuiverRep module_from_quotient(const AlgebraTable& alg, const RationalMatrix& upper,
                               const RationalMatrix& lower);

struct StandardModules {
  std::vector<QuiverRep> simples;
  std::vector<QuiverRep> projectives;
};

StandardModules standard_modules(const AlgebraTable& alg);
QuiverRep projective_module(const AlgebraTable& alg, int i);

/// Pi as a left module over itself.
QuiverRep regular_module(const AlgebraTable& alg);

/// I_u / I_w for a weak-order cover u < w = u s_i.  Throws
/// std::invalid_argument if (u, w) is not a cover, std::logic_error if the
/// ideals are not nested or the quotient is not a brick.
QuiverRep brick_label(const AlgebraTable& alg, const WeylGroup& group,
                      const std::vector<Ideal>& ideals, std::size_t u, std::size_t w);
QuiverRep brick_label(const AlgebraTable& alg, const WeylGroup& group, std::size_t u, std::size_t w);

/// I (x)_Pi M for a two-sided ideal I, with enough bookkeeping to push module
/// maps through.
class IdealTensor {
 public:
  IdealTensor(const AlgebraTable& alg, const Ideal& ideal, const QuiverRep& m);

  const QuiverRep& module() const { return result_; }

  /// id (x) f : I (x) N -> I (x) M, where *this is built from N and `target` from M.
  ModuleMap induced_map(const IdealTensor& target, const ModuleMap& f) const;

 private:
  // Generators of I (x)_k M at target vertex v are pairs (row r, basis
  // vector j of M at the source of r), numbered row_offset_[r] + j.
  std::vector<int> row_source_;
  std::vector<int> row_target_;
  std::vector<std::size_t> row_offset_;
  std::vector<std::size_t> generator_count_;  // per target vertex
  std::vector<QuotientSpace> quotients_;
  QuiverRep result_;
};

QuiverRep tensor_with_ideal(const AlgebraTable& alg, int i, const QuiverRep& m);

/// Whether 0 -> E -> B -> F -> 0 exists.  Returns false when E does not fit
/// inside B at some vertex; throws std::invalid_argument when [E] + [F] != [B].
bool ses_exists(const QuiverRep& e, const QuiverRep& b, const QuiverRep& f,
                std::uint64_t seed = 1, int random_trials = 64);

}  // namespace shardstab

#endif  // SHARDSTAB_PREPROJ_HPP
