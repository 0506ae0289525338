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

#include "shardstab/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "shardstab/linalg.hpp"

namespace shardstab {

namespace {

IntVector primitive(IntVector v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, std::abs(x));
  if (g == 0) throw std::invalid_argument("zero normal vector");
  for (int& x : v) x /= g;
  return v;
}

IntVector primitive_integer(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  IntVector out;
  Integer g = 0;
  std::vector<Integer> scaled;
  for (const auto& x : v) {
    Integer s = Integer(x.get_num()) * (l / Integer(x.get_den()));
    scaled.push_back(s);
    g = gcd(g, s);
  }
  if (g == 0) throw std::invalid_argument("zero vector");
  for (auto& s : scaled) {
    s /= g;
    if (!s.fits_sint_p()) throw std::overflow_error("basis entry does not fit in int");
    out.push_back(static_cast<int>(s.get_si()));
  }
  return out;
}

Rational pair(const IntVector& normal, const RationalVector& x) {
  return dot(std::span<const Rational>(x), std::span<const int>(normal));
}

int cross2(const RationalVector& a, const RationalVector& b) {
  return sgn(Rational(a[0] * b[1] - a[1] * b[0]));
}

// Angular order on nonzero plane vectors, starting at angle 0.
bool angle_less(const RationalVector& a, const RationalVector& b) {
  auto half = [](const RationalVector& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

// Normalises a list of functionals so that proportional ones coincide.
std::vector<RationalVector> distinct_hyperplanes(std::vector<RationalVector> fs) {
  std::vector<RationalVector> out;
  for (auto& f : fs) {
    auto lead = std::find_if(f.begin(), f.end(), [](const Rational& x) { return x != 0; });
    if (lead == f.end()) continue;
    Rational inv = 1 / *lead;
    for (auto& x : f) x *= inv;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

}  // namespace

int Arrangement::side(std::size_t k, const RationalVector& x) const {
  return sgn(pair(normals.at(k), x));
}

int Chamber::negatives() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
}

Arrangement reflection_arrangement(const CartanData& cartan) {
  Arrangement arr;
  for (const auto& r : positive_roots(cartan)) arr.normals.push_back(r.coords);
  arr.base_point.assign(cartan.rank(), Rational(1));
  return arr;
}

Arrangement rank2_arrangement(std::vector<IntVector> normals, std::optional<RationalVector> base_point) {
  if (normals.empty()) throw std::invalid_argument("rank2_arrangement: no normals");
  for (auto& n : normals) {
    if (n.size() != 2) throw std::invalid_argument("rank2_arrangement: normals must be 2-dimensional");
    n = primitive(n);
  }
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = i + 1; j < normals.size(); ++j)
      if (normals[i][0] * normals[j][1] - normals[i][1] * normals[j][0] == 0)
        throw std::invalid_argument("rank2_arrangement: proportional normals");

  RationalVector base;
  auto avoids_all = [&](const RationalVector& p) {
    for (const auto& n : normals)
      if (pair(n, p) == 0) return false;
    return true;
  };
  if (base_point) {
    base = *base_point;
    if (base.size() != 2 || !avoids_all(base))
      throw std::invalid_argument("rank2_arrangement: base point must be a plane point off every line");
  } else {
    std::vector<RationalVector> candidates{{0, -1}};
    for (int k = 2; candidates.size() < 2 * normals.size() + 3; ++k) {
      candidates.push_back({1, -k});
      candidates.push_back({-1, -k});
    }
    for (const auto& c : candidates)
      if (avoids_all(c)) {
        base = c;
        break;
      }
  }
  for (auto& n : normals)
    if (pair(n, base) < 0)
      for (int& x : n) x = -x;
  auto as_rat = [](const IntVector& v) { return to_rational(v); };
  std::stable_sort(normals.begin(), normals.end(), [&](const IntVector& a, const IntVector& b) {
    return cross2(as_rat(b), as_rat(a)) > 0;
  });
  return Arrangement{normals, base};
}

Arrangement octagon_arrangement() {
  return rank2_arrangement({{2, -1}, {1, -2}, {-1, -2}, {-2, -1}}, RationalVector{0, -1});
}

std::vector<Chamber> chambers(const Arrangement& arr, const WeylGroup* group) {
  std::vector<Chamber> out;
  auto signs_of = [&](const RationalVector& p) {
    std::vector<int> s(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) {
      s[k] = arr.side(k, p);
      if (s[k] == 0) throw std::logic_error("chamber representative lies on a hyperplane");
    }
    return s;
  };
  if (group != nullptr) {
    if (group->rank() != arr.dimension())
      throw std::invalid_argument("chambers: group rank does not match arrangement dimension");
    StabilityFunctional base(arr.base_point);
    for (std::size_t w = 0; w < group->size(); ++w) {
      auto rep = act_on_functional((*group)[group->inverse(w)], base).coords;
      out.push_back(Chamber{signs_of(rep), rep, w});
    }
    return out;
  }
  if (arr.dimension() == 1) {
    const Rational b = arr.base_point[0];
    for (const Rational& x : {b, Rational(-b)}) out.push_back(Chamber{signs_of({x}), {x}, std::nullopt});
    return out;
  }
  if (arr.dimension() != 2)
    throw std::invalid_argument("chambers: arrangements of dimension above 2 need a Weyl group");
  std::vector<RationalVector> rays;
  for (const auto& n : arr.normals) {
    rays.push_back({Rational(-n[1]), Rational(n[0])});
    rays.push_back({Rational(n[1]), Rational(-n[0])});
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  for (std::size_t k = 0; k < rays.size(); ++k) {
    const auto& u = rays[k];
    const auto& v = rays[(k + 1) % rays.size()];
    RationalVector mid;
    if (cross2(u, v) > 0) {
      mid = {u[0] + v[0], u[1] + v[1]};
    } else {
      mid = {-u[1], u[0]};
    }
    out.push_back(Chamber{signs_of(mid), mid, std::nullopt});
  }
  std::sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) {
    if (a.negatives() != b.negatives()) return a.negatives() < b.negatives();
    return a.signs > b.signs;
  });
  return out;
}

RegionPoset::RegionPoset(const Arrangement& arr, const std::vector<Chamber>& chambers)
    : n_(chambers.size()) {
  if (n_ == 0) throw std::invalid_argument("region poset of an empty chamber list");
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t c = 0; c < n_; ++c) {
    if (c > 0 && chambers[c].negatives() < chambers[c - 1].negatives())
      throw std::invalid_argument("chambers must be ordered by number of negative signs");
    if (!index.emplace(chambers[c].signs, c).second)
      throw std::invalid_argument("duplicate chamber sign vector");
  }
  lower_.assign(n_, {});
  upper_.assign(n_, {});
  for (std::size_t c = 0; c < n_; ++c) {
    for (std::size_t k = 0; k < arr.size(); ++k) {
      if (chambers[c].signs[k] != 1) continue;
      auto flipped = chambers[c].signs;
      flipped[k] = -1;
      auto it = index.find(flipped);
      if (it == index.end()) continue;
      upper_[c].push_back(covers_.size());
      lower_[it->second].push_back(covers_.size());
      covers_.push_back(Cover{c, it->second, k});
    }
  }
  std::vector<std::size_t> minimal, maximal;
  for (std::size_t c = 0; c < n_; ++c) {
    if (lower_[c].empty()) minimal.push_back(c);
    if (upper_[c].empty()) maximal.push_back(c);
  }
  if (minimal.size() != 1 || maximal.size() != 1)
    throw LatticeError("poset of regions lacks a unique minimum or maximum");
  bottom_ = minimal[0];
  top_ = maximal[0];

  up_.assign(n_, boost::dynamic_bitset<>(n_));
  down_.assign(n_, boost::dynamic_bitset<>(n_));
  for (std::size_t c = n_; c-- > 0;) {
    up_[c].set(c);
    for (auto cv : upper_[c]) up_[c] |= up_[covers_[cv].upper];
  }
  for (std::size_t c = 0; c < n_; ++c) {
    down_[c].set(c);
    for (auto cv : lower_[c]) down_[c] |= down_[covers_[cv].lower];
  }

  join_.assign(n_ * n_, 0);
  meet_.assign(n_ * n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a; b < n_; ++b) {
      auto common_up = up_[a] & up_[b];
      std::size_t j = common_up.find_first();
      if (j == boost::dynamic_bitset<>::npos || !common_up.is_subset_of(up_[j]))
        throw LatticeError("no join for chambers " + std::to_string(a) + " and " + std::to_string(b));
      auto common_down = down_[a] & down_[b];
      std::size_t m = boost::dynamic_bitset<>::npos;
      for (auto i = common_down.find_first(); i != boost::dynamic_bitset<>::npos; i = common_down.find_next(i)) m = i;
      if (m == boost::dynamic_bitset<>::npos || !common_down.is_subset_of(down_[m]))
        throw LatticeError("no meet for chambers " + std::to_string(a) + " and " + std::to_string(b));
      join_[a * n_ + b] = join_[b * n_ + a] = j;
      meet_[a * n_ + b] = meet_[b * n_ + a] = m;
    }
  }
}

std::optional<std::size_t> RegionPoset::cover_index(std::size_t lower, std::size_t upper) const {
  for (auto cv : upper_.at(lower))
    if (covers_[cv].upper == upper) return cv;
  return std::nullopt;
}

RegionPoset region_poset(const Arrangement& arr, const std::vector<Chamber>& chambers) {
  return RegionPoset(arr, chambers);
}

std::vector<JoinIrreducible> join_irreducibles(const RegionPoset& poset) {
  std::vector<JoinIrreducible> out;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    const auto& lc = poset.lower_covers(x);
    if (lc.size() != 1) continue;
    out.push_back(JoinIrreducible{x, poset.covers()[lc[0]].lower, lc[0]});
  }
  return out;
}

std::size_t j_label(const RegionPoset& poset, std::size_t cover) {
  const Cover& c = poset.covers().at(cover);
  std::vector<std::size_t> candidates;
  for (std::size_t g = 0; g < poset.size(); ++g)
    if (poset.join(g, c.lower) == c.upper) candidates.push_back(g);
  for (auto g : candidates) {
    bool minimum = std::all_of(candidates.begin(), candidates.end(),
                               [&](std::size_t h) { return poset.leq(g, h); });
    if (minimum) return g;
  }
  throw LatticeError("cover (" + std::to_string(c.lower) + ", " + std::to_string(c.upper) +
                     ") has no minimum join-complement");
}

std::vector<Codim2Flat> codim2_flats(const Arrangement& arr) {
  std::vector<Codim2Flat> flats;
  const std::size_t h = arr.size();
  std::vector<RationalVector> rat;
  for (const auto& n : arr.normals) rat.push_back(to_rational(n));
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t b = a + 1; b < h; ++b) {
      bool known = std::any_of(flats.begin(), flats.end(), [&](const Codim2Flat& f) {
        return std::binary_search(f.hyperplanes.begin(), f.hyperplanes.end(), a) &&
               std::binary_search(f.hyperplanes.begin(), f.hyperplanes.end(), b);
      });
      if (known) continue;
      RationalMatrix pairm(0, arr.dimension());
      pairm.append_row(rat[a]);
      pairm.append_row(rat[b]);
      Codim2Flat flat;
      for (std::size_t l = 0; l < h; ++l) {
        RationalMatrix trial = pairm;
        trial.append_row(rat[l]);
        if (rank(trial) == 2) flat.hyperplanes.push_back(l);
      }
      RationalMatrix ns = nullspace(pairm);
      for (std::size_t r = 0; r < ns.rows(); ++r) flat.basis.push_back(primitive_integer(ns.row_vector(r)));
      flats.push_back(std::move(flat));
    }
  }
  return flats;
}

SplitData split_set(const Arrangement& arr, const Codim2Flat& flat) {
  if (flat.hyperplanes.size() < 2) throw std::invalid_argument("split_set: flat needs two hyperplanes");
  const auto ia = flat.hyperplanes[0], ib = flat.hyperplanes[1];
  RationalMatrix basis(arr.dimension(), 2);
  for (std::size_t i = 0; i < arr.dimension(); ++i) {
    basis(i, 0) = arr.normals[ia][i];
    basis(i, 1) = arr.normals[ib][i];
  }
  std::vector<std::pair<RationalVector, std::size_t>> local;
  for (auto l : flat.hyperplanes) {
    auto c = solve(basis, to_rational(arr.normals[l]));
    if (!c) throw std::logic_error("split_set: hyperplane does not contain the flat");
    local.emplace_back(*c, l);
  }
  for (const auto& [c, l] : local)
    if (arr.side(l, arr.base_point) <= 0) throw std::logic_error("split_set: base point not strictly positive");
  // All local normals lie in an open half-plane, so the cross product orders them.
  std::sort(local.begin(), local.end(),
            [](const auto& x, const auto& y) { return cross2(x.first, y.first) > 0; });
  SplitData out;
  for (const auto& [c, l] : local) out.ordered.push_back(l);
  for (std::size_t k = 1; k + 1 < out.ordered.size(); ++k) out.split.push_back(out.ordered[k]);
  std::sort(out.split.begin(), out.split.end());
  return out;
}

bool shard_closure_contains(const Arrangement& arr, const Shard& shard, const StabilityFunctional& phi) {
  if (phi.dimension() != arr.dimension()) throw std::invalid_argument("shard_closure_contains: dimension mismatch");
  if (arr.side(shard.hyperplane, phi.coords) != 0) return false;
  for (const auto& cut : shard.cuts) {
    int s = arr.side(cut.functional, phi.coords);
    if (s != 0 && s != cut.side) return false;
  }
  return true;
}

bool shard_interior_contains(const Arrangement& arr, const Shard& shard, const RationalVector& point) {
  if (arr.side(shard.hyperplane, point) != 0) return false;
  for (const auto& cut : shard.cuts)
    if (arr.side(cut.functional, point) != cut.side) return false;
  return true;
}

RationalVector facet_point(const Arrangement& arr, const std::vector<Chamber>& chambers, const Cover& cover) {
  const auto& p = chambers.at(cover.lower).rep_point;
  const auto& r = chambers.at(cover.upper).rep_point;
  const auto& n = arr.normals.at(cover.hyperplane);
  Rational np = pair(n, p), nr = pair(n, r);
  if (np <= 0 || nr >= 0) throw std::logic_error("facet_point: cover does not cross its hyperplane");
  Rational t = np / (np - nr);
  RationalVector q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] + t * (r[i] - p[i]);
  return q;
}

std::size_t count_regions(std::vector<RationalVector> functionals, std::size_t dimension) {
  auto hs = distinct_hyperplanes(std::move(functionals));
  if (hs.empty() || dimension == 0) return 1;
  RationalVector last = hs.back();
  hs.pop_back();
  std::size_t deleted = count_regions(hs, dimension);
  RationalMatrix h(0, dimension);
  h.append_row(last);
  RationalMatrix kernel = nullspace(h);
  std::vector<RationalVector> restricted;
  for (const auto& g : hs) {
    RationalVector r(kernel.rows());
    for (std::size_t j = 0; j < kernel.rows(); ++j) r[j] = dot(std::span<const Rational>(g), kernel.row(j));
    restricted.push_back(std::move(r));
  }
  return deleted + count_regions(std::move(restricted), dimension - 1);
}

std::optional<std::size_t> ShardModel::shard_containing(std::size_t hyperplane, const RationalVector& point) const {
  for (std::size_t s = 0; s < shards.size(); ++s)
    if (shards[s].hyperplane == hyperplane && shard_interior_contains(arrangement, shards[s], point)) return s;
  return std::nullopt;
}

std::vector<std::size_t> ShardModel::join_irreducible_shards() const {
  std::vector<std::size_t> out;
  for (const auto& j : join_irreducibles) out.push_back(cover_shard[j.cover]);
  return out;
}

ShardModel build_shard_model(Arrangement arr, const WeylGroup* group) {
  ShardModel m;
  m.arrangement = std::move(arr);
  const Arrangement& a = m.arrangement;
  m.chambers = chambers(a, group);
  m.poset = RegionPoset(a, m.chambers);
  m.join_irreducibles = join_irreducibles(m.poset);
  m.flats = codim2_flats(a);
  for (const auto& f : m.flats) m.splits.push_back(split_set(a, f));

  m.cutting_flats.assign(a.size(), {});
  for (std::size_t f = 0; f < m.flats.size(); ++f)
    for (auto h : m.splits[f].split) m.cutting_flats[h].push_back(f);

  // Canonical functional of a cut: the smallest-index hyperplane of the flat other than h.
  auto cut_functional = [&](std::size_t h, std::size_t f) {
    for (auto k : m.flats[f].hyperplanes)
      if (k != h) return k;
    throw std::logic_error("flat with a single hyperplane");
  };

  m.cover_shard.assign(m.poset.covers().size(), 0);
  for (std::size_t h = 0; h < a.size(); ++h) {
    std::vector<std::size_t> found;
    for (std::size_t cv = 0; cv < m.poset.covers().size(); ++cv) {
      const Cover& c = m.poset.covers()[cv];
      if (c.hyperplane != h) continue;
      RationalVector q = facet_point(a, m.chambers, c);
      std::vector<ShardCut> cuts;
      for (auto f : m.cutting_flats[h]) {
        std::size_t k = cut_functional(h, f);
        int s = a.side(k, q);
        if (s == 0) throw std::logic_error("cover facet point lies on a cutting flat");
        cuts.push_back(ShardCut{f, k, s});
      }
      auto same = std::find_if(found.begin(), found.end(), [&](std::size_t s) { return m.shards[s].cuts == cuts; });
      if (same != found.end()) {
        m.cover_shard[cv] = *same;
      } else {
        m.cover_shard[cv] = m.shards.size();
        found.push_back(m.shards.size());
        m.shards.push_back(Shard{h, std::move(cuts), q});
      }
    }
    // Components of h minus its cutting flats, counted independently.
    RationalMatrix hm(0, a.dimension());
    hm.append_row(to_rational(a.normals[h]));
    RationalMatrix hbasis = nullspace(hm);
    std::vector<RationalVector> restricted;
    for (auto f : m.cutting_flats[h]) {
      auto k = to_rational(a.normals[cut_functional(h, f)]);
      RationalVector r(hbasis.rows());
      for (std::size_t j = 0; j < hbasis.rows(); ++j) r[j] = dot(std::span<const Rational>(k), hbasis.row(j));
      restricted.push_back(std::move(r));
    }
    std::size_t components = count_regions(restricted, hbasis.rows());
    if (components != found.size())
      throw std::logic_error("hyperplane " + std::to_string(h) + " has " + std::to_string(components) +
                             " shard components but only " + std::to_string(found.size()) + " carry a cover facet");
  }
  return m;
}

std::vector<Shard> shards(const Arrangement& arr, const WeylGroup* group) {
  return build_shard_model(arr, group).shards;
}

std::size_t shard_of_cover(const ShardModel& model, const Cover& cover) {
  auto idx = model.poset.cover_index(cover.lower, cover.upper);
  if (!idx) throw std::invalid_argument("shard_of_cover: not a cover");
  return model.cover_shard[*idx];
}

}  // namespace shardstab
