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

// Exact linear algebra over the rationals.  Subspaces are carried as
// matrices whose rows span them; canonical forms are reduced row echelon.

#ifndef SHARDSTAB_LINALG_HPP
#define SHARDSTAB_LINALG_HPP

#include <optional>
#include <vector>

#include "shardstab/matrix.hpp"
#include "shardstab/rational.hpp"

namespace shardstab {

using RationalMatrix = Matrix<Rational>;

/// Reduces in place to RREF, drops zero rows, returns pivot columns.
std::vector<std::size_t> rref_in_place(RationalMatrix& m);

/// RREF of the row space, without zero rows.
RationalMatrix row_space(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Rows form a basis of { x : m x = 0 }.
RationalMatrix nullspace(const RationalMatrix& m);

/// Some x with m x = b, if any.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

Rational determinant(RationalMatrix m);

bool is_zero(const RationalVector& v);
bool is_zero(const RationalMatrix& m);

/// True when v lies in the row space of `rows`.
bool in_row_space(const RationalMatrix& rows, const RationalVector& v);

/// Row space of a stacked on b.
RationalMatrix stack(const RationalMatrix& a, const RationalMatrix& b);

/// Coordinates with respect to a linearly independent family of rows.
class RowCoordinates {
 public:
  RowCoordinates() = default;
  /// `basis` must have linearly independent rows.
  explicit RowCoordinates(const RationalMatrix& basis);

  std::size_t size() const { return size_; }
  /// Coefficients c with v = sum c_j basis_j, or nullopt when v is outside the span.
  std::optional<RationalVector> try_coords(const RationalVector& v) const;
  /// Throws std::domain_error when v is outside the span.
  RationalVector coords(const RationalVector& v) const;

 private:
  std::size_t size_ = 0;
  std::size_t ambient_ = 0;
  RationalMatrix reduced_;  // RREF of the basis
  RationalMatrix transform_;  // reduced_ = transform_ * basis
  std::vector<std::size_t> pivots_;
};

/// A quotient U/W of row spaces, W contained in U, with a chosen basis of
/// representatives for U/W.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(const RationalMatrix& upper, const RationalMatrix& lower);

  std::size_t dimension() const { return representatives_.rows(); }
  const RationalMatrix& representatives() const { return representatives_; }
  std::size_t ambient_dimension() const { return ambient_; }

  /// Coordinates of the class of v (v in U).  Throws std::domain_error otherwise.
  RationalVector coords(const RationalVector& v) const;

 private:
  std::size_t ambient_ = 0;
  std::size_t lower_dim_ = 0;
  RationalMatrix representatives_;
  RowCoordinates solver_;  // rows: lower basis then representatives
};

}  // namespace shardstab

#endif  // SHARDSTAB_LINALG_HPP
