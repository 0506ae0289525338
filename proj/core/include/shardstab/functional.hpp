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

#ifndef SHARDSTAB_FUNCTIONAL_HPP
#define SHARDSTAB_FUNCTIONAL_HPP

#include <span>
#include <vector>

#include "shardstab/rational.hpp"

namespace shardstab {

/// A linear functional on the Grothendieck group, stored by its values on
/// the simple classes: coords[i] = phi([S_i]).
struct StabilityFunctional {
  RationalVector coords;

  StabilityFunctional() = default;
  explicit StabilityFunctional(RationalVector c) : coords(std::move(c)) {}
  static StabilityFunctional from_ints(std::span<const int> c) {
    return StabilityFunctional(to_rational(c));
  }

  std::size_t dimension() const { return coords.size(); }

  /// Exact value on a class given in the simple basis.
  Rational operator()(std::span<const int> class_vector) const {
    return dot(std::span<const Rational>(coords), class_vector);
  }

  /// Positive on every simple.
  bool in_base_chamber() const {
    for (const auto& c : coords)
      if (c <= 0) return false;
    return true;
  }

  friend bool operator==(const StabilityFunctional&, const StabilityFunctional&) = default;
};

}  // namespace shardstab

#endif  // SHARDSTAB_FUNCTIONAL_HPP
