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

// Simply-laced Cartan data, root systems and Weyl groups.
//
// Vertices are 0-based internally.  Classes in K0 are integer vectors in the
// basis of simple classes [S_i]; functionals are stored by their values on
// the simples.  The Weyl group acts on K0 on the left,
//     s_i(x) = x - <x, [S_i]> [S_i],
// and on functionals on the right, (phi . w)(x) = phi(w x).
//
// Quiver orientation conventions (the preprojective algebra does not depend
// on them up to isomorphism):
//   A_n  1 -> 2 -> ... -> n
//   D_n  chain 1 -> 2 -> ... -> n-2, plus n-1 -> n-2 and n -> n-2
//   E_n  Bourbaki labels, every arrow pointing toward the branch node 4

#ifndef SHARDSTAB_COXETER_HPP
#define SHARDSTAB_COXETER_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "shardstab/functional.hpp"
#include "shardstab/matrix.hpp"

namespace shardstab {

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;

  std::string label() const;
  /// "A3", "D4", "E6", ...; throws std::invalid_argument when not a valid
  /// simply-laced Dynkin type.
  static DynkinType parse(std::string_view text);
  static DynkinType make(char family, int rank);

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

struct Arrow {
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct CartanData {
  DynkinType type;
  Matrix<int> cartan;
  std::vector<Arrow> quiver_arrows;
  /// quiver_arrows followed by their reversals: arrow k and arrow k + m are
  /// a and a* for m = quiver_arrows.size().
  std::vector<Arrow> doubled_arrows;

  int rank() const { return static_cast<int>(cartan.rows()); }
  int pairing(std::span<const int> x, std::span<const int> y) const;
};

CartanData build_cartan(DynkinType type);
CartanData build_cartan(char family, int rank);

struct RootVector {
  IntVector coords;

  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

/// All positive roots ordered by height, then by coordinates in descending
/// lexicographic order (so the simple roots come first, in vertex order).
std::vector<RootVector> positive_roots(const CartanData& cartan);

struct WeylElement {
  Matrix<int> matrix;  // action on K0 in the simple basis
  int length = 0;
  std::vector<int> reduced_word;  // s_{w[0]} s_{w[1]} ... , 0-based indices
};

Matrix<int> simple_reflection_matrix(const CartanData& cartan, int i);

RootVector act_on_class(const WeylElement& w, const RootVector& x);
IntVector act_on_class(const Matrix<int>& w, std::span<const int> x);

/// Right action on functionals: coords . matrix.
StabilityFunctional act_on_functional(const WeylElement& w, const StabilityFunctional& phi);
StabilityFunctional act_on_functional(const Matrix<int>& w, const StabilityFunctional& phi);
/// Right action of a single simple reflection: c - c_i * (row i of cartan).
StabilityFunctional reflect_functional(const CartanData& cartan, int i,
                                       const StabilityFunctional& phi);

/// The finite Weyl group of a Cartan datum, enumerated breadth-first under
/// right multiplication by simple reflections.  Element 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(const CartanData& cartan);

  const CartanData& cartan() const { return cartan_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& operator[](std::size_t w) const { return elements_[w]; }
  const std::vector<RootVector>& roots() const { return roots_; }

  std::size_t identity() const { return 0; }
  std::size_t longest() const { return longest_; }
  std::size_t rank() const { return static_cast<std::size_t>(cartan_.rank()); }

  std::size_t index_of(const Matrix<int>& m) const;
  std::size_t right_multiply(std::size_t w, int i) const { return right_[w][i]; }
  std::size_t left_multiply(int i, std::size_t w) const { return left_[w][i]; }
  std::size_t inverse(std::size_t w) const { return inverse_[w]; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t from_word(std::span<const int> word) const;

  /// Number of positive roots sent to negative roots.
  int inversion_count(std::size_t w) const;
  /// Positive roots beta with w^{-1} beta negative, as indices into roots().
  std::vector<std::size_t> left_inversions(std::size_t w) const;

 private:
  CartanData cartan_;
  std::vector<RootVector> roots_;
  std::vector<WeylElement> elements_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<std::size_t> inverse_;
  std::size_t longest_ = 0;
};

std::vector<WeylElement> weyl_group(const CartanData& cartan);

/// All reduced words of w, lexicographically ordered.
std::vector<std::vector<int>> reduced_words(const WeylGroup& group, std::size_t w);

}  // namespace shardstab

#endif  // SHARDSTAB_COXETER_HPP
