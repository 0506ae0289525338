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

#ifndef SHARDSTAB_RATIONAL_HPP
#define SHARDSTAB_RATIONAL_HPP

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shardstab {

using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;
using IntVector = std::vector<int>;

/// Canonical "p/q" or "p" form.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q".  Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const int> b);

RationalVector to_rational(std::span<const int> v);

}  // namespace shardstab

#endif  // SHARDSTAB_RATIONAL_HPP
