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

// Central hyperplane arrangements in the space of stability functionals,
// their poset of regions, codimension-two flats and shards.
//
// A point of the ambient space is a functional phi (coordinates phi([S_i]));
// hyperplane k is { phi : phi . normal_k = 0 }.  Normals are oriented so
// that the base point is strictly positive on all of them.

#ifndef SHARDSTAB_ARRANGEMENT_HPP
#define SHARDSTAB_ARRANGEMENT_HPP

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

#include "shardstab/coxeter.hpp"
#include "shardstab/functional.hpp"
#include "shardstab/rational.hpp"

namespace shardstab {

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrangement {
  std::vector<IntVector> normals;
  RationalVector base_point;

  std::size_t dimension() const { return base_point.size(); }
  std::size_t size() const { return normals.size(); }
  /// Sign of normal_k . x.
  int side(std::size_t k, const RationalVector& x) const;
};

/// Normals are the positive roots; base point is all-ones.
Arrangement reflection_arrangement(const CartanData& cartan);

/// Lines in the plane.  Normals are made primitive, oriented toward the base
/// point and numbered H_1..H_r by angle, H_1 the most counterclockwise seen
/// from the base point, so that the base chamber lies between H_1 and H_r.
/// Without an explicit base point the first of (0,-1), (1,-2), (-1,-2),
/// (1,-3), ... that avoids every line is used (base chamber at the bottom).
Arrangement rank2_arrangement(std::vector<IntVector> normals,
                              std::optional<RationalVector> base_point = std::nullopt);

/// Four lines cutting the plane into eight chambers, realised
/// by the integer normals (2,-1), (1,-2), (-1,-2), (-2,-1).
Arrangement octagon_arrangement();

struct Chamber {
  std::vector<int> signs;  // +1 / -1 per hyperplane
  RationalVector rep_point;
  std::optional<std::size_t> weyl_element;

  int negatives() const;
};

/// Reflection arrangements: pass the Weyl group; chamber k is the chamber of
/// element k, with representative base_point . w^{-1}, so that right weak
/// order covers v < v s_i are chamber adjacencies.  Rank-2 arrangements:
/// sector midpoints; a line gives its two half-lines.  Other inputs throw
/// std::invalid_argument.
std::vector<Chamber> chambers(const Arrangement& arr, const WeylGroup* group = nullptr);

struct Cover {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t hyperplane = 0;
  friend bool operator==(const Cover&, const Cover&) = default;
};

class RegionPoset {
 public:
  RegionPoset() = default;
  /// Covers are single-sign flips, oriented away from the base chamber.
  /// Chambers must be listed in non-decreasing order of negatives().
  /// Throws LatticeError if some pair lacks a join or a meet.
  RegionPoset(const Arrangement& arr, const std::vector<Chamber>& chambers);

  std::size_t size() const { return n_; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_[x]; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_[x]; }
  std::optional<std::size_t> cover_index(std::size_t lower, std::size_t upper) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }

 private:
  std::size_t n_ = 0;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> lower_;  // cover indices
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<boost::dynamic_bitset<>> down_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
};

RegionPoset region_poset(const Arrangement& arr, const std::vector<Chamber>& chambers);

struct JoinIrreducible {
  std::size_t element = 0;
  std::size_t lower = 0;  // the unique element it covers
  std::size_t cover = 0;  // index of (lower, element) in covers()
};

std::vector<JoinIrreducible> join_irreducibles(const RegionPoset& poset);

/// Minimum G with G v lower = upper for the given cover.  Throws LatticeError
/// if the minimum does not exist.
std::size_t j_label(const RegionPoset& poset, std::size_t cover);

struct Codim2Flat {
  std::vector<std::size_t> hyperplanes;  // sorted, size >= 2
  std::vector<IntVector> basis;          // integer basis of the flat
};

std::vector<Codim2Flat> codim2_flats(const Arrangement& arr);

struct SplitData {
  std::vector<std::size_t> ordered;  // H_1, ..., H_r around the flat
  std::vector<std::size_t> split;    // H_2, ..., H_{r-1}, sorted by index
};

SplitData split_set(const Arrangement& arr, const Codim2Flat& flat);

/// A cut of a shard: the flat, the hyperplane whose normal (restricted to the
/// shard's hyperplane) serves as the canonical functional, and the side.
struct ShardCut {
  std::size_t flat = 0;
  std::size_t functional = 0;
  int side = 1;
  friend bool operator==(const ShardCut&, const ShardCut&) = default;
};

struct Shard {
  std::size_t hyperplane = 0;
  std::vector<ShardCut> cuts;
  RationalVector witness;
};

bool shard_closure_contains(const Arrangement& arr, const Shard& shard,
                            const StabilityFunctional& phi);
/// Interior membership: on the hyperplane and strictly on the side of every cut.
bool shard_interior_contains(const Arrangement& arr, const Shard& shard,
                             const RationalVector& point);

/// Point where the segment between the cover's chamber representatives meets
/// the separating hyperplane.
RationalVector facet_point(const Arrangement& arr, const std::vector<Chamber>& chambers,
                           const Cover& cover);

/// Number of regions of a central arrangement given by functionals on a
/// d-dimensional space (deletion-restriction).
std::size_t count_regions(std::vector<RationalVector> functionals, std::size_t dimension);

/// Everything derived from an arrangement and its base chamber.
struct ShardModel {
  Arrangement arrangement;
  std::vector<Chamber> chambers;
  RegionPoset poset;
  std::vector<JoinIrreducible> join_irreducibles;
  std::vector<Codim2Flat> flats;
  std::vector<SplitData> splits;  // parallel to flats
  std::vector<std::vector<std::size_t>> cutting_flats;  // per hyperplane
  std::vector<Shard> shards;
  std::vector<std::size_t> cover_shard;  // per cover

  /// Shard of `hyperplane` whose interior contains `point`, if any.
  std::optional<std::size_t> shard_containing(std::size_t hyperplane,
                                              const RationalVector& point) const;
  std::size_t shard_of_cover(std::size_t cover) const { return cover_shard.at(cover); }
  /// Shard of the canonical cover of each join-irreducible (parallel to join_irreducibles).
  std::vector<std::size_t> join_irreducible_shards() const;
};

/// Builds flats, Split sets and shards.  Throws std::logic_error if the
/// shards found from cover facets do not account for every component.
ShardModel build_shard_model(Arrangement arr, const WeylGroup* group = nullptr);

/// The shards of a model (convenience wrapper).
std::vector<Shard> shards(const Arrangement& arr, const WeylGroup* group = nullptr);

std::size_t shard_of_cover(const ShardModel& model, const Cover& cover);

}  // namespace shardstab

#endif  // SHARDSTAB_ARRANGEMENT_HPP
