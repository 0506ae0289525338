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

#include "shardstab/quiver.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace shardstab {

Quiver Quiver::doubled(const CartanData& cartan) {
  return Quiver{cartan.rank(), cartan.doubled_arrows};
}

QuiverRep QuiverRep::zero(const Quiver& q) {
  QuiverRep m;
  m.quiver = q;
  m.dims.assign(q.vertices, 0);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) m.maps.emplace_back(0, 0);
  return m;
}

QuiverRep QuiverRep::simple(const Quiver& q, int vertex) {
  if (vertex < 0 || vertex >= q.vertices) throw std::out_of_range("simple: vertex out of range");
  QuiverRep m;
  m.quiver = q;
  m.dims.assign(q.vertices, 0);
  m.dims[vertex] = 1;
  for (const auto& a : q.arrows) m.maps.emplace_back(m.dims[a.target], m.dims[a.source], Rational(0));
  return m;
}

int QuiverRep::total_dimension() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

void QuiverRep::validate() const {
  if (static_cast<int>(dims.size()) != quiver.vertices) throw std::invalid_argument("representation: wrong number of vertex spaces");
  if (maps.size() != quiver.arrows.size()) throw std::invalid_argument("representation: wrong number of arrow maps");
  for (int d : dims)
    if (d < 0) throw std::invalid_argument("representation: negative dimension");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& arrow = quiver.arrows[a];
    if (maps[a].rows() != static_cast<std::size_t>(dims[arrow.target]) ||
        maps[a].cols() != static_cast<std::size_t>(dims[arrow.source]))
      throw std::invalid_argument("representation: arrow map " + std::to_string(a) + " has the wrong shape");
  }
}

RationalMatrix QuiverRep::path_action(const std::vector<int>& arrows) const {
  if (arrows.empty()) throw std::invalid_argument("path_action: empty path");
  RationalMatrix acc = maps.at(arrows.back());
  for (std::size_t k = arrows.size() - 1; k-- > 0;) {
    if (quiver.arrows[arrows[k]].source != quiver.arrows[arrows[k + 1]].target)
      throw std::invalid_argument("path_action: arrows do not compose");
    acc = maps[arrows[k]] * acc;
  }
  return acc;
}

bool satisfies_preprojective_relation(const QuiverRep& m, const CartanData& cartan) {
  if (!(m.quiver == Quiver::doubled(cartan))) throw std::invalid_argument("representation is not over the doubled quiver");
  const std::size_t k = cartan.quiver_arrows.size();
  for (int v = 0; v < cartan.rank(); ++v) {
    RationalMatrix total(m.dims[v], m.dims[v], Rational(0));
    for (std::size_t a = 0; a < k; ++a) {
      const auto& arrow = cartan.quiver_arrows[a];
      if (arrow.target == v) {
        auto p = m.maps[a] * m.maps[a + k];
        for (std::size_t i = 0; i < p.rows(); ++i)
          for (std::size_t j = 0; j < p.cols(); ++j) total(i, j) += p(i, j);
      }
      if (arrow.source == v) {
        auto p = m.maps[a + k] * m.maps[a];
        for (std::size_t i = 0; i < p.rows(); ++i)
          for (std::size_t j = 0; j < p.cols(); ++j) total(i, j) -= p(i, j);
      }
    }
    if (!is_zero(total)) return false;
  }
  return true;
}

HomSpace hom_space(const QuiverRep& m, const QuiverRep& n) {
  if (!(m.quiver == n.quiver)) throw std::invalid_argument("hom_space: representations over different quivers");
  const int nv = m.quiver.vertices;
  std::vector<std::size_t> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dims[v] * m.dims[v]);
  const std::size_t unknowns = offset[nv];
  auto var = [&](int v, int r, int c) { return offset[v] + static_cast<std::size_t>(r * m.dims[v] + c); };

  RationalMatrix eqs(0, unknowns);
  for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    const int s = m.quiver.arrows[a].source, t = m.quiver.arrows[a].target;
    const auto& ma = m.maps[a];
    const auto& na = n.maps[a];
    for (int i = 0; i < n.dims[t]; ++i) {
      for (int j = 0; j < m.dims[s]; ++j) {
        RationalVector row(unknowns, Rational(0));
        for (int k = 0; k < m.dims[t]; ++k) row[var(t, i, k)] += ma(k, j);
        for (int k = 0; k < n.dims[s]; ++k) row[var(s, k, j)] -= na(i, k);
        if (!is_zero(row)) eqs.append_row(row);
      }
    }
  }
  HomSpace out;
  RationalMatrix ns = nullspace(eqs);
  for (std::size_t b = 0; b < ns.rows(); ++b) {
    ModuleMap f;
    for (int v = 0; v < nv; ++v) {
      RationalMatrix block(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c) block(r, c) = ns(b, var(v, r, c));
      f.push_back(std::move(block));
    }
    out.basis.push_back(std::move(f));
  }
  return out;
}

bool is_module_map(const ModuleMap& f, const QuiverRep& source, const QuiverRep& target) {
  if (f.size() != static_cast<std::size_t>(source.quiver.vertices)) return false;
  for (int v = 0; v < source.quiver.vertices; ++v)
    if (f[v].rows() != static_cast<std::size_t>(target.dims[v]) || f[v].cols() != static_cast<std::size_t>(source.dims[v]))
      return false;
  for (std::size_t a = 0; a < source.quiver.arrows.size(); ++a) {
    const int s = source.quiver.arrows[a].source, t = source.quiver.arrows[a].target;
    if (!(f[t] * source.maps[a] == target.maps[a] * f[s])) return false;
  }
  return true;
}

ModuleMap identity_map(const QuiverRep& m) {
  ModuleMap f;
  for (int d : m.dims) f.push_back(RationalMatrix::identity(d));
  return f;
}

ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const std::vector<Rational>& coeffs) {
  if (maps.empty() || maps.size() != coeffs.size()) throw std::invalid_argument("linear_combination: size mismatch");
  ModuleMap out = maps[0];
  for (auto& block : out)
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) block(i, j) = 0;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t v = 0; v < out.size(); ++v)
      for (std::size_t i = 0; i < out[v].rows(); ++i)
        for (std::size_t j = 0; j < out[v].cols(); ++j) out[v](i, j) += coeffs[k] * maps[k][v](i, j);
  }
  return out;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (g.size() != f.size()) throw std::invalid_argument("compose: vertex count mismatch");
  ModuleMap out;
  for (std::size_t v = 0; v < f.size(); ++v) out.push_back(g[v] * f[v]);
  return out;
}

std::size_t map_rank(const ModuleMap& f) {
  std::size_t r = 0;
  for (const auto& block : f) r += rank(block);
  return r;
}

bool is_injective(const ModuleMap& f, const QuiverRep& source) {
  for (std::size_t v = 0; v < f.size(); ++v)
    if (rank(f[v]) != static_cast<std::size_t>(source.dims[v])) return false;
  return true;
}

bool is_invertible(const ModuleMap& f) {
  for (const auto& block : f) {
    if (block.rows() != block.cols()) return false;
    if (block.rows() > 0 && determinant(block) == 0) return false;
  }
  return true;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("characteristic_polynomial: non-square matrix");
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    RationalMatrix am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

namespace {

std::vector<Integer> divisors(Integer x) {
  if (x < 0) x = -x;
  std::vector<Integer> out;
  if (x == 0 || x > Integer("1000000000000")) return out;
  for (Integer d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      if (d * d != x) out.push_back(x / d);
    }
  }
  return out;
}

Rational evaluate_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (c.size() > 1) {
    Integer l = 1;
    for (const auto& x : c) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> ints;
    for (const auto& x : c) ints.push_back(Integer(x.get_num()) * (l / Integer(x.get_den())));
    for (const auto& p : divisors(ints.front()))
      for (const auto& q : divisors(ints.back()))
        for (int s : {1, -1}) {
          Rational cand(Integer(s) * p, q);
          cand.canonicalize();
          if (evaluate_poly(c, cand) == 0) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<ModuleMap> nonzero_noninvertible_endomorphism(const QuiverRep& m, const HomSpace& end) {
  std::optional<ModuleMap> best;
  std::size_t best_rank = 0;
  for (const auto& f : end.basis) {
    std::size_t r = map_rank(f);
    if (r == 0 || is_invertible(f)) continue;
    if (!best || r < best_rank) {
      best = f;
      best_rank = r;
    }
  }
  if (best) return best;
  for (const auto& f : end.basis) {
    int v0 = -1;
    for (int v = 0; v < m.quiver.vertices; ++v)
      if (m.dims[v] > 0) {
        v0 = v;
        break;
      }
    if (v0 < 0) return std::nullopt;
    Rational lambda0 = f[v0](0, 0);
    ModuleMap scalar = identity_map(m);
    for (auto& block : scalar)
      for (std::size_t i = 0; i < block.rows(); ++i) block(i, i) = lambda0;
    if (scalar == f) continue;
    for (int v = 0; v < m.quiver.vertices; ++v) {
      if (m.dims[v] == 0) continue;
      for (const auto& lambda : rational_roots(characteristic_polynomial(f[v]))) {
        ModuleMap shifted = f;
        for (auto& block : shifted)
          for (std::size_t i = 0; i < block.rows(); ++i) block(i, i) -= lambda;
        return shifted;
      }
    }
  }
  return std::nullopt;
}

BrickCheck brick_check(const QuiverRep& m) {
  BrickCheck out;
  if (m.is_zero()) {
    out.verdict = BrickVerdict::not_brick;
    out.diagnostic = "zero module";
    return out;
  }
  HomSpace end = hom_space(m, m);
  out.endomorphism_dimension = end.dimension();
  if (end.dimension() == 1) {
    out.verdict = BrickVerdict::brick;
    return out;
  }
  if (nonzero_noninvertible_endomorphism(m, end)) {
    out.verdict = BrickVerdict::not_brick;
    out.diagnostic = "endomorphism ring has a zero divisor";
  } else {
    out.verdict = BrickVerdict::indeterminate;
    out.diagnostic = "endomorphism ring of dimension " + std::to_string(end.dimension()) +
                     " without a rational zero divisor";
  }
  return out;
}

bool is_brick(const QuiverRep& m) { return brick_check(m).verdict == BrickVerdict::brick; }

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (!(a.quiver == b.quiver)) throw std::invalid_argument("direct_sum: different quivers");
  QuiverRep out;
  out.quiver = a.quiver;
  for (int v = 0; v < a.quiver.vertices; ++v) out.dims.push_back(a.dims[v] + b.dims[v]);
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const int s = a.quiver.arrows[k].source, t = a.quiver.arrows[k].target;
    RationalMatrix block(out.dims[t], out.dims[s], Rational(0));
    for (int i = 0; i < a.dims[t]; ++i)
      for (int j = 0; j < a.dims[s]; ++j) block(i, j) = a.maps[k](i, j);
    for (int i = 0; i < b.dims[t]; ++i)
      for (int j = 0; j < b.dims[s]; ++j) block(a.dims[t] + i, a.dims[s] + j) = b.maps[k](i, j);
    out.maps.push_back(std::move(block));
  }
  return out;
}

namespace {

VertexSubspaces normalised(const QuiverRep& m, const VertexSubspaces& sub) {
  if (sub.size() != static_cast<std::size_t>(m.quiver.vertices)) throw std::invalid_argument("subspace list has the wrong length");
  VertexSubspaces out;
  for (int v = 0; v < m.quiver.vertices; ++v) {
    if (sub[v].cols() != static_cast<std::size_t>(m.dims[v]) && sub[v].rows() > 0)
      throw std::invalid_argument("subspace has the wrong ambient dimension");
    out.push_back(sub[v].rows() == 0 ? RationalMatrix(0, m.dims[v]) : row_space(sub[v]));
  }
  return out;
}

}  // namespace

QuiverRep subrepresentation(const QuiverRep& m, const VertexSubspaces& sub) {
  VertexSubspaces b = normalised(m, sub);
  QuiverRep out;
  out.quiver = m.quiver;
  for (const auto& bv : b) out.dims.push_back(static_cast<int>(bv.rows()));
  for (std::size_t k = 0; k < m.maps.size(); ++k) {
    const int s = m.quiver.arrows[k].source, t = m.quiver.arrows[k].target;
    RationalMatrix block(out.dims[t], out.dims[s], Rational(0));
    if (out.dims[t] == 0) {
      for (int j = 0; j < out.dims[s]; ++j)
        if (!is_zero(m.maps[k] * b[s].row_vector(j))) throw std::domain_error("subspaces are not arrow-stable");
    } else {
      RowCoordinates coords(b[t]);
      for (int j = 0; j < out.dims[s]; ++j) {
        auto c = coords.try_coords(m.maps[k] * b[s].row_vector(j));
        if (!c) throw std::domain_error("subspaces are not arrow-stable");
        for (int i = 0; i < out.dims[t]; ++i) block(i, j) = (*c)[i];
      }
    }
    out.maps.push_back(std::move(block));
  }
  return out;
}

ModuleMap inclusion_map(const QuiverRep& m, const VertexSubspaces& sub) {
  VertexSubspaces b = normalised(m, sub);
  ModuleMap f;
  for (const auto& bv : b) f.push_back(bv.transpose());
  for (std::size_t v = 0; v < f.size(); ++v)
    if (b[v].rows() == 0) f[v] = RationalMatrix(m.dims[v], 0);
  return f;
}

QuiverRep quotient_representation(const QuiverRep& m, const VertexSubspaces& sub) {
  VertexSubspaces b = normalised(m, sub);
  std::vector<QuotientSpace> q;
  for (int v = 0; v < m.quiver.vertices; ++v)
    q.emplace_back(RationalMatrix::identity(m.dims[v]), b[v]);
  QuiverRep out;
  out.quiver = m.quiver;
  for (const auto& qv : q) out.dims.push_back(static_cast<int>(qv.dimension()));
  for (std::size_t k = 0; k < m.maps.size(); ++k) {
    const int s = m.quiver.arrows[k].source, t = m.quiver.arrows[k].target;
    RationalMatrix block(out.dims[t], out.dims[s], Rational(0));
    for (int j = 0; j < out.dims[s]; ++j) {
      auto c = q[t].coords(m.maps[k] * q[s].representatives().row_vector(j));
      for (int i = 0; i < out.dims[t]; ++i) block(i, j) = c[i];
    }
    out.maps.push_back(std::move(block));
  }
  // Stability of the subspaces makes the induced maps well defined.
  for (std::size_t k = 0; k < m.maps.size(); ++k) {
    const int s = m.quiver.arrows[k].source, t = m.quiver.arrows[k].target;
    for (std::size_t j = 0; j < b[s].rows(); ++j) {
      auto c = q[t].coords(m.maps[k] * b[s].row_vector(j));
      if (!is_zero(c)) throw std::domain_error("subspaces are not arrow-stable");
    }
  }
  return out;
}

VertexSubspaces kernel_spaces(const ModuleMap& f, const QuiverRep& source) {
  VertexSubspaces out;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v].rows() == 0) {
      out.push_back(RationalMatrix::identity(source.dims[v]));
    } else {
      out.push_back(nullspace(f[v]));
    }
  }
  return out;
}

VertexSubspaces image_spaces(const ModuleMap& f, const QuiverRep& target) {
  VertexSubspaces out;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v].cols() == 0) {
      out.emplace_back(0, target.dims[v]);
    } else {
      out.push_back(row_space(f[v].transpose()));
    }
  }
  return out;
}

VertexSubspaces socle_spaces(const QuiverRep& m) {
  VertexSubspaces out;
  for (int v = 0; v < m.quiver.vertices; ++v) {
    RationalMatrix stacked(0, m.dims[v]);
    for (std::size_t k = 0; k < m.maps.size(); ++k)
      if (m.quiver.arrows[k].source == v)
        for (std::size_t r = 0; r < m.maps[k].rows(); ++r) stacked.append_row(m.maps[k].row(r));
    out.push_back(stacked.rows() == 0 ? RationalMatrix::identity(m.dims[v]) : nullspace(stacked));
  }
  return out;
}

VertexSubspaces radical_spaces(const QuiverRep& m) {
  VertexSubspaces out;
  for (int v = 0; v < m.quiver.vertices; ++v) {
    RationalMatrix stacked(0, m.dims[v]);
    for (std::size_t k = 0; k < m.maps.size(); ++k)
      if (m.quiver.arrows[k].target == v) {
        auto t = m.maps[k].transpose();
        for (std::size_t r = 0; r < t.rows(); ++r) stacked.append_row(t.row(r));
      }
    out.push_back(row_space(stacked));
  }
  return out;
}

IntVector subspace_dims(const VertexSubspaces& s) {
  IntVector d;
  for (const auto& m : s) d.push_back(static_cast<int>(rank(m)));
  return d;
}

std::optional<ModuleMap> find_isomorphism(const QuiverRep& m, const QuiverRep& n, std::uint64_t seed, int random_trials) {
  if (!(m.quiver == n.quiver) || m.dims != n.dims) return std::nullopt;
  if (m.is_zero()) return identity_map(m);
  HomSpace h = hom_space(m, n);
  for (const auto& f : h.basis)
    if (is_invertible(f)) return f;
  if (h.dimension() < 2) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < random_trials; ++trial) {
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < h.dimension(); ++k) coeffs.emplace_back(static_cast<long>(rng() % 7) - 3);
    auto f = linear_combination(h.basis, coeffs);
    if (is_invertible(f)) return f;
  }
  return std::nullopt;
}

bool is_isomorphic(const QuiverRep& m, const QuiverRep& n, std::uint64_t seed) {
  return find_isomorphism(m, n, seed).has_value();
}

}  // namespace shardstab
