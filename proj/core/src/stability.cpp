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

#include "shardstab/stability.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace shardstab {

Rational evaluate(const StabilityFunctional& phi, std::span<const int> class_vector) {
  if (phi.dimension() != class_vector.size()) throw std::invalid_argument("evaluate: dimension mismatch");
  return phi(class_vector);
}

Matrix<Integer> hermite_normal_form(Matrix<Integer> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      // Smallest nonzero entry in column c at or below row r moves to row r.
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m(i, c) != 0 && (best == rows || abs(m(i, c)) < abs(m(best, c)))) best = i;
      if (best == rows) break;
      m.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= rows || m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (std::size_t j = c; j < cols; ++j) m(r, j) = -m(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
    }
    ++r;
  }
  m.truncate_rows(r);
  return m;
}

namespace {

// Canonical basis (rows) of the lattice spanned by rational rows.
RationalMatrix lattice_basis(const RationalMatrix& rows) {
  Integer den = 1;
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) den = lcm(den, Integer(rows(i, j).get_den()));
  Matrix<Integer> ints(rows.rows(), rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) {
      Rational scaled = rows(i, j) * den;
      ints(i, j) = scaled.get_num();
    }
  Matrix<Integer> h = hermite_normal_form(std::move(ints));
  RationalMatrix out(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) {
      out(i, j) = Rational(h(i, j), den);
      out(i, j).canonicalize();
    }
  return out;
}

long reduce_mod(const Integer& x, int p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

long inverse_mod(long a, int p) {
  long result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

using FpVector = std::vector<long>;

// Row-reduced basis of a subspace of F_p^d.
struct FpSpace {
  std::size_t dim = 0;
  std::vector<FpVector> rows;  // RREF

  // Adds v; returns true if the span grew.
  bool add(FpVector v, int p) {
    for (const auto& r : rows) {
      std::size_t piv = 0;
      while (r[piv] == 0) ++piv;
      if (v[piv] != 0) {
        long c = v[piv];
        for (std::size_t j = 0; j < dim; ++j) v[j] = ((v[j] - c * r[j]) % p + p) % p;
      }
    }
    std::size_t piv = 0;
    while (piv < dim && v[piv] == 0) ++piv;
    if (piv == dim) return false;
    long inv = inverse_mod(v[piv], p);
    for (auto& x : v) x = x * inv % p;
    for (auto& r : rows) {
      if (r[piv] == 0) continue;
      long c = r[piv];
      for (std::size_t j = 0; j < dim; ++j) r[j] = ((r[j] - c * v[j]) % p + p) % p;
    }
    rows.push_back(std::move(v));
    std::sort(rows.begin(), rows.end(), [](const FpVector& a, const FpVector& b) { return a > b; });
    return true;
  }
};

using Submodule = std::vector<FpSpace>;

std::vector<long> key_of(const Submodule& s) {
  std::vector<long> key;
  for (const auto& sp : s) {
    key.push_back(-1 - static_cast<long>(sp.rows.size()));
    for (const auto& r : sp.rows) key.insert(key.end(), r.begin(), r.end());
  }
  return key;
}

struct FpModule {
  int p = 2;
  IntVector dims;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::vector<long>>> maps;  // [arrow][row][col]

  FpVector apply(std::size_t a, const FpVector& x) const {
    const auto& m = maps[a];
    FpVector y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      long s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s = (s + m[i][j] * x[j]) % p;
      y[i] = s;
    }
    return y;
  }

  Submodule empty() const {
    Submodule s(dims.size());
    for (std::size_t v = 0; v < dims.size(); ++v) s[v].dim = static_cast<std::size_t>(dims[v]);
    return s;
  }

  // Closes s under the arrows, starting from the queued vectors.
  void close(Submodule& s, std::deque<std::pair<int, FpVector>> queue) const {
    while (!queue.empty()) {
      auto [v, x] = queue.front();
      queue.pop_front();
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        if (arrows[a].source != v) continue;
        const int t = arrows[a].target;
        if (dims[t] == 0) continue;
        FpVector y = apply(a, x);
        if (s[t].add(y, p)) queue.emplace_back(t, std::move(y));
      }
    }
  }

  Submodule cyclic(int v, const FpVector& x) const {
    Submodule s = empty();
    s[v].add(x, p);
    close(s, {{v, x}});
    return s;
  }

  Submodule sum(const Submodule& a, const Submodule& b) const {
    Submodule s = a;
    for (std::size_t v = 0; v < b.size(); ++v)
      for (const auto& r : b[v].rows) s[v].add(r, p);
    return s;
  }
};

}  // namespace

IntegralForm integral_form(const QuiverRep& m) {
  m.validate();
  const int n = m.quiver.vertices;
  IntegralForm form;
  form.dims = m.dims;
  form.arrows = m.quiver.arrows;
  for (int v = 0; v < n; ++v) form.lattice_basis.push_back(RationalMatrix::identity(m.dims[v]));
  const int max_rounds = 4 * (m.total_dimension() + 2) + 64;
  bool changed = true;
  for (int round = 0; changed; ++round) {
    if (round > max_rounds) throw EnumerationError("no arrow-stable lattice found");
    changed = false;
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
      const int s = m.quiver.arrows[a].source, t = m.quiver.arrows[a].target;
      if (m.dims[t] == 0 || m.dims[s] == 0) continue;
      RationalMatrix gens = form.lattice_basis[t];
      for (std::size_t r = 0; r < form.lattice_basis[s].rows(); ++r)
        gens.append_row(m.maps[a] * form.lattice_basis[s].row_vector(r));
      RationalMatrix next = lattice_basis(gens);
      if (!(next == form.lattice_basis[t])) {
        form.lattice_basis[t] = std::move(next);
        changed = true;
      }
    }
  }
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const int s = m.quiver.arrows[a].source, t = m.quiver.arrows[a].target;
    Matrix<Integer> block(m.dims[t], m.dims[s], Integer(0));
    if (m.dims[t] > 0 && m.dims[s] > 0) {
      RowCoordinates coords(form.lattice_basis[t]);
      for (int j = 0; j < m.dims[s]; ++j) {
        RationalVector c = coords.coords(m.maps[a] * form.lattice_basis[s].row_vector(j));
        for (int i = 0; i < m.dims[t]; ++i) {
          if (c[i].get_den() != 1) throw EnumerationError("lattice is not arrow-stable");
          block(i, j) = c[i].get_num();
        }
      }
    }
    form.maps.push_back(std::move(block));
  }
  return form;
}

namespace {

}  // namespace

std::set<IntVector> submodule_dim_vectors_mod_p(const IntegralForm& form, int p, std::size_t max_submodules) {
  if (p < 2 || p > 1000) throw std::invalid_argument("prime out of supported range");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  FpModule mod;
  mod.p = p;
  mod.dims = form.dims;
  mod.arrows = form.arrows;
  for (const auto& block : form.maps) {
    std::vector<std::vector<long>> rows(block.rows(), std::vector<long>(block.cols()));
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) rows[i][j] = reduce_mod(block(i, j), p);
    mod.maps.push_back(std::move(rows));
  }
  const int n = static_cast<int>(form.dims.size());

  // Cyclic submodules generated by one point of one vertex space.
  std::map<std::vector<long>, Submodule> cyclics;
  std::size_t points = 0;
  for (int v = 0; v < n; ++v) {
    const int d = form.dims[v];
    if (d == 0) continue;
    for (int lead = 0; lead < d; ++lead) {
      const int free = d - lead - 1;
      long count = 1;
      for (int k = 0; k < free; ++k) {
        count *= p;
        if (count > static_cast<long>(max_submodules)) throw EnumerationError("too many points to enumerate");
      }
      for (long code = 0; code < count; ++code) {
        if (++points > max_submodules) throw EnumerationError("too many points to enumerate");
        FpVector x(d, 0);
        x[lead] = 1;
        long c = code;
        for (int k = lead + 1; k < d; ++k) {
          x[k] = c % p;
          c /= p;
        }
        Submodule s = mod.cyclic(v, x);
        cyclics.emplace(key_of(s), std::move(s));
      }
    }
  }

  std::map<std::vector<long>, Submodule> all;
  std::deque<const Submodule*> queue;
  {
    Submodule zero = mod.empty();
    auto [it, fresh] = all.emplace(key_of(zero), std::move(zero));
    queue.push_back(&it->second);
  }
  while (!queue.empty()) {
    const Submodule* s = queue.front();
    queue.pop_front();
    for (const auto& [ck, c] : cyclics) {
      Submodule t = mod.sum(*s, c);
      auto key = key_of(t);
      if (all.count(key)) continue;
      if (all.size() >= max_submodules) throw EnumerationError("submodule count exceeds the enumeration cap");
      auto [it, fresh] = all.emplace(std::move(key), std::move(t));
      queue.push_back(&it->second);
    }
  }
  std::set<IntVector> dims;
  for (const auto& [k, s] : all) {
    IntVector d;
    for (const auto& sp : s) d.push_back(static_cast<int>(sp.rows.size()));
    dims.insert(std::move(d));
  }
  return dims;
}

namespace {

std::string format_dims(const std::set<IntVector>& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& d : s) {
    if (!first) out << ' ';
    first = false;
    out << '(';
    for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
    out << ')';
  }
  out << '}';
  return out.str();
}

}  // namespace

DimVectorSet submodule_dim_vectors(const QuiverRep& m, const std::vector<int>& primes, std::size_t max_submodules) {
  if (primes.empty()) throw std::invalid_argument("at least one prime is required");
  IntegralForm form = integral_form(m);
  DimVectorSet out;
  out.module_dims = m.dims;
  out.primes_used = primes;
  bool first = true;
  for (int p : primes) {
    auto dims = submodule_dim_vectors_mod_p(form, p, max_submodules);
    if (first) {
      out.achievable = std::move(dims);
      first = false;
    } else if (dims != out.achievable) {
      throw EnumerationError("submodule dimension vectors differ between primes " + std::to_string(primes.front()) +
                             " and " + std::to_string(p) + ": " + format_dims(out.achievable) + " vs " +
                             format_dims(dims));
    }
  }
  return out;
}

bool is_semistable(const DimVectorSet& subs, const StabilityFunctional& phi) {
  if (evaluate(phi, subs.module_dims) != 0) return false;
  for (const auto& d : subs.achievable)
    if (evaluate(phi, d) > 0) return false;
  return true;
}

bool is_semistable(const QuiverRep& m, const StabilityFunctional& phi, const std::vector<int>& primes) {
  if (phi.dimension() != m.dims.size()) throw std::invalid_argument("is_semistable: dimension mismatch");
  if (evaluate(phi, m.dims) != 0) return false;
  return is_semistable(submodule_dim_vectors(m, primes), phi);
}

namespace {

void filtration(const QuiverRep& m, std::vector<QuiverRep>& out) {
  if (m.is_zero()) return;
  HomSpace end = hom_space(m, m);
  if (end.dimension() == 1) {
    out.push_back(m);
    return;
  }
  auto alpha = nonzero_noninvertible_endomorphism(m, end);
  if (!alpha)
    throw std::runtime_error("endomorphism ring of dimension " + std::to_string(end.dimension()) +
                             " has no rational zero divisor");
  filtration(subrepresentation(m, kernel_spaces(*alpha, m)), out);
  filtration(subrepresentation(m, image_spaces(*alpha, m)), out);
}

}  // namespace

std::vector<QuiverRep> brick_filtration(const QuiverRep& m, const StabilityFunctional& phi,
                                        const std::vector<int>& primes) {
  if (!is_semistable(m, phi, primes)) throw std::invalid_argument("brick_filtration: module is not semistable");
  std::vector<QuiverRep> out;
  filtration(m, out);
  return out;
}

BrickTable build_brick_table(const CartanData& cartan, const std::vector<int>& primes, bool enumerate_submodules) {
  WeylGroup group(cartan);
  AlgebraTable algebra = build_algebra(cartan);
  ShardModel model = build_shard_model(reflection_arrangement(cartan), &group);
  std::vector<Ideal> ideals = element_ideals(algebra, group);
  BrickTable table{cartan, std::move(group), std::move(algebra), std::move(model), std::move(ideals), {}};
  const auto shards = table.model.join_irreducible_shards();
  for (std::size_t k = 0; k < table.model.join_irreducibles.size(); ++k) {
    const auto& j = table.model.join_irreducibles[k];
    BrickEntry e;
    e.element = j.element;
    e.lower = j.lower;
    e.cover = j.cover;
    e.shard = shards[k];
    e.hyperplane = table.model.shards[e.shard].hyperplane;
    e.brick = brick_label(table.algebra, table.group, table.ideals, j.lower, j.element);
    if (e.brick.dims != table.model.arrangement.normals[e.hyperplane])
      throw std::logic_error("brick class differs from the root of its shard's hyperplane");
    if (enumerate_submodules) e.submodules = submodule_dim_vectors(e.brick, primes);
    table.entries.push_back(std::move(e));
  }
  return table;
}

SemistableSets semistable_bricks_at(const StabilityFunctional& phi, const BrickTable& table) {
  SemistableSets out;
  for (std::size_t k = 0; k < table.entries.size(); ++k) {
    const auto& e = table.entries[k];
    bool direct = e.submodules ? is_semistable(*e.submodules, phi) : is_semistable(e.brick, phi);
    if (direct) out.direct.push_back(k);
    if (shard_closure_contains(table.model.arrangement, table.model.shards[e.shard], phi)) out.predicted.push_back(k);
  }
  return out;
}

}  // namespace shardstab
