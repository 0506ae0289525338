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

#include "shardstab/preproj.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace shardstab {

namespace {

constexpr std::size_t kMaxDimension = 20000;
constexpr std::size_t kAssociativityCheckLimit = 100;

void accumulate(std::map<std::size_t, Rational>& acc, const SparseVector& v, const Rational& c) {
  for (const auto& [idx, coef] : v) {
    auto& slot = acc[idx];
    slot += c * coef;
  }
}

SparseVector to_sparse(const std::map<std::size_t, Rational>& acc) {
  SparseVector out;
  for (const auto& [idx, coef] : acc)
    if (coef != 0) out.emplace_back(idx, coef);
  return out;
}

SparseVector apply_left(const std::vector<std::vector<SparseVector>>& left, int arrow, const SparseVector& v) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [idx, coef] : v) accumulate(acc, left[arrow][idx], coef);
  return to_sparse(acc);
}

// Target vertex shared by the support of a row, or -1 for a zero row.
int row_vertex(const AlgebraTable& alg, std::span<const Rational> row, bool target) {
  int v = -1;
  for (std::size_t b = 0; b < row.size(); ++b) {
    if (row[b] == 0) continue;
    int here = target ? alg.basis()[b].target : alg.basis()[b].source;
    if (v >= 0 && v != here)
      throw std::invalid_argument("row is not homogeneous with respect to vertices");
    v = here;
  }
  return v;
}

}  // namespace

RationalVector AlgebraTable::unit(std::size_t b) const {
  RationalVector v(dimension(), Rational(0));
  v.at(b) = 1;
  return v;
}

RationalVector AlgebraTable::multiply(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dimension() || y.size() != dimension()) throw std::invalid_argument("multiply: dimension mismatch");
  RationalVector out(dimension(), Rational(0));
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y[b] == 0) continue;
      if (basis_[a].source != basis_[b].target) continue;
      Rational c = x[a] * y[b];
      for (const auto& [idx, coef] : product(a, b)) out[idx] += c * coef;
    }
  }
  return out;
}

RationalVector AlgebraTable::left_arrow(int arrow, const RationalVector& y) const {
  if (y.size() != dimension()) throw std::invalid_argument("left_arrow: dimension mismatch");
  RationalVector out(dimension(), Rational(0));
  for (std::size_t b = 0; b < y.size(); ++b) {
    if (y[b] == 0) continue;
    for (const auto& [idx, coef] : left_[arrow][b]) out[idx] += y[b] * coef;
  }
  return out;
}

std::string AlgebraTable::arrow_name(int arrow) const {
  const int m = static_cast<int>(cartan_.quiver_arrows.size());
  return arrow < m ? "a" + std::to_string(arrow + 1) : "a" + std::to_string(arrow - m + 1) + "*";
}

std::string AlgebraTable::path_string(std::size_t b) const {
  const auto& p = basis_.at(b);
  if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k > 0) s += ' ';
    s += arrow_name(p.arrows[k]);
  }
  return s;
}

bool AlgebraTable::is_associative() const {
  const std::size_t n = dimension();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& xy = product(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        std::map<std::size_t, Rational> lhs, rhs;
        for (const auto& [j, c] : xy) accumulate(lhs, product(j, z), c);
        for (const auto& [j, c] : product(y, z)) accumulate(rhs, product(x, j), c);
        if (to_sparse(lhs) != to_sparse(rhs)) return false;
      }
    }
  return true;
}

AlgebraTable build_algebra(const CartanData& cartan, bool check_associativity) {
  AlgebraTable alg;
  alg.cartan_ = cartan;
  alg.quiver_ = Quiver::doubled(cartan);
  const int n = cartan.rank();
  const auto& arrows = cartan.doubled_arrows;
  const int m2 = static_cast<int>(arrows.size());
  const int mq = static_cast<int>(cartan.quiver_arrows.size());

  auto& basis = alg.basis_;
  // left[k][b]: a_k times basis element b; grown as basis elements appear.
  std::vector<std::vector<SparseVector>> left(m2);
  auto grow = [&] {
    for (auto& l : left) l.resize(basis.size());
  };

  std::vector<std::pair<std::size_t, std::size_t>> degree_range;
  for (int v = 0; v < n; ++v) basis.push_back({v, v, 0, {}});
  degree_range.emplace_back(0, basis.size());
  if (m2 > 0) {
    for (int k = 0; k < m2; ++k) basis.push_back({arrows[k].source, arrows[k].target, 1, {k}});
    grow();
    for (int k = 0; k < m2; ++k) left[k][arrows[k].source] = {{static_cast<std::size_t>(n + k), Rational(1)}};
    degree_range.emplace_back(static_cast<std::size_t>(n), basis.size());
  }

  for (int d = 2; degree_range.size() == static_cast<std::size_t>(d); ++d) {
    const auto [prev_begin, prev_end] = degree_range[d - 1];
    const auto [pp_begin, pp_end] = degree_range[d - 2];
    std::vector<std::pair<int, std::size_t>> pairs;
    std::map<std::pair<int, std::size_t>, std::size_t> column;
    for (int k = 0; k < m2; ++k)
      for (std::size_t b = prev_begin; b < prev_end; ++b)
        if (basis[b].target == arrows[k].source) {
          column[{k, b}] = pairs.size();
          pairs.emplace_back(k, b);
        }
    if (pairs.empty()) break;

    RationalMatrix relations(0, pairs.size());
    for (std::size_t c = pp_begin; c < pp_end; ++c) {
      const int v = basis[c].target;
      RationalVector row(pairs.size(), Rational(0));
      for (int q = 0; q < mq; ++q) {
        const int star = q + mq;
        if (cartan.quiver_arrows[q].target == v)
          for (const auto& [j, coef] : left[star][c]) row[column.at({q, j})] += coef;
        if (cartan.quiver_arrows[q].source == v)
          for (const auto& [j, coef] : left[q][c]) row[column.at({star, j})] -= coef;
      }
      if (!is_zero(row)) relations.append_row(row);
    }
    auto pivots = rref_in_place(relations);
    std::vector<int> pivot_row(pairs.size(), -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);

    const std::size_t begin = basis.size();
    std::vector<std::size_t> new_index(pairs.size(), 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (pivot_row[p] >= 0) continue;
      const auto [k, b] = pairs[p];
      BasisPath path{basis[b].source, arrows[k].target, d, {k}};
      path.arrows.insert(path.arrows.end(), basis[b].arrows.begin(), basis[b].arrows.end());
      new_index[p] = basis.size();
      basis.push_back(std::move(path));
      if (basis.size() > kMaxDimension) throw std::logic_error("preprojective algebra is not finite-dimensional");
    }
    grow();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [k, b] = pairs[p];
      if (pivot_row[p] < 0) {
        left[k][b] = {{new_index[p], Rational(1)}};
      } else {
        SparseVector v;
        for (std::size_t j = 0; j < pairs.size(); ++j)
          if (pivot_row[j] < 0 && relations(pivot_row[p], j) != 0)
            v.emplace_back(new_index[j], -relations(pivot_row[p], j));
        left[k][b] = std::move(v);
      }
    }
    if (basis.size() > begin) degree_range.emplace_back(begin, basis.size());
  }

  const std::size_t dim = basis.size();
  alg.mult_.assign(dim * dim, {});
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      if (basis[x].source != basis[y].target) continue;
      SparseVector v{{y, Rational(1)}};
      for (auto it = basis[x].arrows.rbegin(); it != basis[x].arrows.rend() && !v.empty(); ++it)
        v = apply_left(left, *it, v);
      alg.mult_[x * dim + y] = std::move(v);
    }
  }
  alg.left_ = std::move(left);
  if (check_associativity && dim <= kAssociativityCheckLimit && !alg.is_associative())
    throw std::logic_error("preprojective algebra multiplication is not associative");
  return alg;
}

Ideal ideal_from_span(const AlgebraTable& alg, const RationalMatrix& rows) {
  if (rows.rows() == 0) return Ideal{RationalMatrix(0, alg.dimension()), std::nullopt};
  if (rows.cols() != alg.dimension()) throw std::invalid_argument("ideal rows have the wrong width");
  return Ideal{row_space(rows), std::nullopt};
}

Ideal whole_algebra(const AlgebraTable& alg) {
  return Ideal{RationalMatrix::identity(alg.dimension()), std::vector<int>{}};
}

Ideal zero_ideal(const AlgebraTable& alg) { return Ideal{RationalMatrix(0, alg.dimension()), std::nullopt}; }

bool contains(const Ideal& big, const Ideal& small) {
  if (small.dimension() > big.dimension()) return false;
  for (std::size_t r = 0; r < small.basis.rows(); ++r)
    if (!in_row_space(big.basis, small.basis.row_vector(r))) return false;
  return true;
}

bool is_two_sided(const AlgebraTable& alg, const Ideal& ideal) {
  if (ideal.dimension() == 0) return true;
  RowCoordinates coords(ideal.basis);
  for (std::size_t r = 0; r < ideal.basis.rows(); ++r) {
    RationalVector row = ideal.basis.row_vector(r);
    for (std::size_t b = 0; b < alg.dimension(); ++b) {
      RationalVector e = alg.unit(b);
      if (!coords.try_coords(alg.multiply(e, row))) return false;
      if (!coords.try_coords(alg.multiply(row, e))) return false;
    }
  }
  return true;
}

Ideal ideal_of_vertex(const AlgebraTable& alg, int i) {
  const int n = alg.cartan().rank();
  if (i < 0 || i >= n) throw std::out_of_range("ideal_of_vertex: vertex out of range");
  const std::size_t dim = alg.dimension();
  RationalMatrix rows(0, dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      const int v = alg.basis()[x].source;
      if (v == i || alg.basis()[y].target != v) continue;
      const auto& p = alg.product(x, y);
      if (p.empty()) continue;
      RationalVector row(dim, Rational(0));
      for (const auto& [idx, c] : p) row[idx] = c;
      rows.append_row(row);
    }
  return ideal_from_span(alg, rows);
}

Ideal ideal_product(const AlgebraTable& alg, const Ideal& a, const Ideal& b) {
  const std::size_t dim = alg.dimension();
  std::vector<int> a_source, b_target;
  for (std::size_t r = 0; r < a.basis.rows(); ++r) a_source.push_back(row_vertex(alg, a.basis.row(r), false));
  for (std::size_t r = 0; r < b.basis.rows(); ++r) b_target.push_back(row_vertex(alg, b.basis.row(r), true));
  RationalMatrix rows(0, dim);
  for (std::size_t r = 0; r < a.basis.rows(); ++r) {
    RationalVector x = a.basis.row_vector(r);
    for (std::size_t s = 0; s < b.basis.rows(); ++s) {
      if (a_source[r] != b_target[s]) continue;
      RationalVector p = alg.multiply(x, b.basis.row_vector(s));
      if (!is_zero(p)) rows.append_row(p);
    }
  }
  Ideal out = ideal_from_span(alg, rows);
  if (a.word && b.word) {
    std::vector<int> w = *a.word;
    w.insert(w.end(), b.word->begin(), b.word->end());
    out.word = std::move(w);
  }
  return out;
}

namespace {

Ideal product_along(const AlgebraTable& alg, const std::vector<Ideal>& vertex_ideals, const std::vector<int>& word) {
  Ideal acc = whole_algebra(alg);
  for (int i : word) acc = ideal_product(alg, acc, vertex_ideals.at(i));
  acc.word = word;
  return acc;
}

std::vector<Ideal> all_vertex_ideals(const AlgebraTable& alg) {
  std::vector<Ideal> out;
  for (int i = 0; i < alg.cartan().rank(); ++i) {
    out.push_back(ideal_of_vertex(alg, i));
    out.back().word = std::vector<int>{i};
  }
  return out;
}

}  // namespace

Ideal ideal_of_word(const AlgebraTable& alg, const WeylGroup& group, const std::vector<int>& word) {
  if (group.cartan().type != alg.cartan().type) throw std::invalid_argument("ideal_of_word: group and algebra differ");
  std::size_t w = group.from_word(word);
  if (static_cast<std::size_t>(group[w].length) != word.size())
    throw std::invalid_argument("ideal_of_word: word is not reduced");
  return product_along(alg, all_vertex_ideals(alg), word);
}

Ideal ideal_of_element(const AlgebraTable& alg, const WeylGroup& group, std::size_t w, bool verify_all_words) {
  if (group.cartan().type != alg.cartan().type) throw std::invalid_argument("ideal_of_element: group and algebra differ");
  auto vertex_ideals = all_vertex_ideals(alg);
  Ideal first = product_along(alg, vertex_ideals, group[w].reduced_word);
  if (verify_all_words) {
    for (const auto& word : reduced_words(group, w)) {
      if (!(product_along(alg, vertex_ideals, word) == first))
        throw std::logic_error("ideal depends on the choice of reduced word");
    }
  }
  return first;
}

std::vector<Ideal> element_ideals(const AlgebraTable& alg, const WeylGroup& group) {
  if (group.cartan().type != alg.cartan().type) throw std::invalid_argument("element_ideals: group and algebra differ");
  auto vertex_ideals = all_vertex_ideals(alg);
  std::vector<Ideal> out;
  out.reserve(group.size());
  out.push_back(whole_algebra(alg));
  for (std::size_t w = 1; w < group.size(); ++w) {
    const auto& word = group[w].reduced_word;
    std::vector<int> prefix(word.begin(), word.end() - 1);
    std::size_t parent = group.from_word(prefix);
    out.push_back(ideal_product(alg, out.at(parent), vertex_ideals[word.back()]));
    out.back().word = word;
  }
  return out;
}

QuiverRep module_from_quotient(const AlgebraTable& alg, const RationalMatrix& upper, const RationalMatrix& lower) {
  const std::size_t dim = alg.dimension();
  const int n = alg.cartan().rank();
  if ((upper.rows() > 0 && upper.cols() != dim) || (lower.rows() > 0 && lower.cols() != dim))
    throw std::invalid_argument("module_from_quotient: rows have the wrong width");
  std::vector<RationalMatrix> up(n, RationalMatrix(0, dim)), low(n, RationalMatrix(0, dim));
  auto split = [&](const RationalMatrix& rows, std::vector<RationalMatrix>& out) {
    RationalMatrix canonical = rows.rows() == 0 ? RationalMatrix(0, dim) : row_space(rows);
    for (std::size_t r = 0; r < canonical.rows(); ++r) {
      int v = row_vertex(alg, canonical.row(r), true);
      out[v].append_row(canonical.row(r));
    }
  };
  split(upper, up);
  split(lower, low);

  std::vector<QuotientSpace> q;
  for (int v = 0; v < n; ++v) {
    try {
      q.emplace_back(up[v], low[v]);
    } catch (const std::domain_error&) {
      throw std::invalid_argument("module_from_quotient: lower space is not contained in the upper space");
    }
  }
  QuiverRep m;
  m.quiver = alg.quiver();
  for (const auto& qv : q) m.dims.push_back(static_cast<int>(qv.dimension()));
  for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    const int s = m.quiver.arrows[a].source, t = m.quiver.arrows[a].target;
    RationalMatrix block(m.dims[t], m.dims[s], Rational(0));
    for (int j = 0; j < m.dims[s]; ++j) {
      RationalVector y = alg.left_arrow(static_cast<int>(a), q[s].representatives().row_vector(j));
      RationalVector c;
      try {
        c = q[t].coords(y);
      } catch (const std::domain_error&) {
        throw std::invalid_argument("module_from_quotient: upper space is not a left ideal");
      }
      for (int i = 0; i < m.dims[t]; ++i) block(i, j) = c[i];
    }
    m.maps.push_back(std::move(block));
  }
  return m;
}

QuiverRep projective_module(const AlgebraTable& alg, int i) {
  if (i < 0 || i >= alg.cartan().rank()) throw std::out_of_range("projective_module: vertex out of range");
  RationalMatrix rows(0, alg.dimension());
  for (std::size_t b = 0; b < alg.dimension(); ++b)
    if (alg.basis()[b].source == i) rows.append_row(alg.unit(b));
  return module_from_quotient(alg, rows, RationalMatrix(0, alg.dimension()));
}

StandardModules standard_modules(const AlgebraTable& alg) {
  StandardModules out;
  for (int i = 0; i < alg.cartan().rank(); ++i) {
    out.simples.push_back(QuiverRep::simple(alg.quiver(), i));
    out.projectives.push_back(projective_module(alg, i));
  }
  return out;
}

QuiverRep regular_module(const AlgebraTable& alg) {
  return module_from_quotient(alg, RationalMatrix::identity(alg.dimension()), RationalMatrix(0, alg.dimension()));
}

QuiverRep brick_label(const AlgebraTable& alg, const WeylGroup& group, const std::vector<Ideal>& ideals,
                      std::size_t u, std::size_t w) {
  bool cover = false;
  for (std::size_t i = 0; i < group.rank(); ++i)
    if (group.right_multiply(u, static_cast<int>(i)) == w && group[w].length == group[u].length + 1) cover = true;
  if (!cover) throw std::invalid_argument("brick_label: not a weak-order cover");
  const Ideal& iu = ideals.at(u);
  const Ideal& iw = ideals.at(w);
  if (!contains(iu, iw)) throw std::logic_error("brick_label: ideals are not nested along the cover");
  QuiverRep m = module_from_quotient(alg, iu.basis, iw.basis);
  BrickCheck check = brick_check(m);
  if (check.verdict != BrickVerdict::brick)
    throw std::logic_error("brick_label: quotient is not a brick (" + check.diagnostic + ")");
  return m;
}

QuiverRep brick_label(const AlgebraTable& alg, const WeylGroup& group, std::size_t u, std::size_t w) {
  std::vector<Ideal> ideals(group.size());
  ideals.at(u) = ideal_of_element(alg, group, u);
  ideals.at(w) = ideal_of_element(alg, group, w);
  return brick_label(alg, group, ideals, u, w);
}

IdealTensor::IdealTensor(const AlgebraTable& alg, const Ideal& ideal, const QuiverRep& m) {
  if (!(m.quiver == alg.quiver())) throw std::invalid_argument("IdealTensor: module is not over the algebra's quiver");
  m.validate();
  const int n = alg.cartan().rank();
  const std::size_t rows = ideal.basis.rows();
  generator_count_.assign(n, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    int s = row_vertex(alg, ideal.basis.row(r), false);
    int t = row_vertex(alg, ideal.basis.row(r), true);
    row_source_.push_back(s);
    row_target_.push_back(t);
    row_offset_.push_back(generator_count_[t]);
    generator_count_[t] += static_cast<std::size_t>(m.dims[s]);
  }
  RowCoordinates ideal_coords;
  if (rows > 0) ideal_coords = RowCoordinates(ideal.basis);

  // Relations x b (x) m - x (x) b m for each row x and arrow b with t(b) = s(x).
  std::vector<RationalMatrix> relations;
  for (int v = 0; v < n; ++v) relations.emplace_back(0, generator_count_[v]);
  for (std::size_t r = 0; r < rows; ++r) {
    const int v = row_target_[r];
    RationalVector x = ideal.basis.row_vector(r);
    for (std::size_t b = 0; b < m.quiver.arrows.size(); ++b) {
      const auto& arrow = m.quiver.arrows[b];
      if (arrow.target != row_source_[r]) continue;
      RationalVector xb = ideal_coords.coords(alg.multiply(x, alg.arrow_element(static_cast<int>(b))));
      for (int j = 0; j < m.dims[arrow.source]; ++j) {
        RationalVector rel(generator_count_[v], Rational(0));
        for (std::size_t r2 = 0; r2 < rows; ++r2)
          if (xb[r2] != 0) rel[row_offset_[r2] + j] += xb[r2];
        for (int l = 0; l < m.dims[arrow.target]; ++l) rel[row_offset_[r] + l] -= m.maps[b](l, j);
        if (!is_zero(rel)) relations[v].append_row(rel);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    quotients_.emplace_back(RationalMatrix::identity(generator_count_[v]), relations[v]);

  result_.quiver = m.quiver;
  for (const auto& q : quotients_) result_.dims.push_back(static_cast<int>(q.dimension()));
  for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    const int s = m.quiver.arrows[a].source, t = m.quiver.arrows[a].target;
    // a (x_r (x) m_j) = (a x_r) (x) m_j, expanded in the rows ending at t.
    std::vector<RationalVector> moved(rows);
    for (std::size_t r = 0; r < rows; ++r)
      if (row_target_[r] == s) moved[r] = ideal_coords.coords(alg.left_arrow(static_cast<int>(a), ideal.basis.row_vector(r)));
    RationalMatrix block(result_.dims[t], result_.dims[s], Rational(0));
    for (int col = 0; col < result_.dims[s]; ++col) {
      RationalVector rep = quotients_[s].representatives().row_vector(col);
      RationalVector image(generator_count_[t], Rational(0));
      for (std::size_t r = 0; r < rows; ++r) {
        if (row_target_[r] != s) continue;
        for (int j = 0; j < m.dims[row_source_[r]]; ++j) {
          const Rational& c = rep[row_offset_[r] + j];
          if (c == 0) continue;
          for (std::size_t r2 = 0; r2 < rows; ++r2)
            if (moved[r][r2] != 0) image[row_offset_[r2] + j] += c * moved[r][r2];
        }
      }
      RationalVector coords = quotients_[t].coords(image);
      for (int i = 0; i < result_.dims[t]; ++i) block(i, col) = coords[i];
    }
    result_.maps.push_back(std::move(block));
  }
}

ModuleMap IdealTensor::induced_map(const IdealTensor& target, const ModuleMap& f) const {
  if (target.row_source_ != row_source_ || target.row_target_ != row_target_)
    throw std::invalid_argument("induced_map: tensor products over different ideals");
  const int n = static_cast<int>(quotients_.size());
  ModuleMap out;
  for (int v = 0; v < n; ++v) {
    RationalMatrix block(target.result_.dims[v], result_.dims[v], Rational(0));
    for (int col = 0; col < result_.dims[v]; ++col) {
      RationalVector rep = quotients_[v].representatives().row_vector(col);
      RationalVector image(target.generator_count_[v], Rational(0));
      for (std::size_t r = 0; r < row_source_.size(); ++r) {
        if (row_target_[r] != v) continue;
        const int s = row_source_[r];
        const auto& fs = f.at(s);
        for (std::size_t j = 0; j < fs.cols(); ++j) {
          const Rational& c = rep[row_offset_[r] + j];
          if (c == 0) continue;
          for (std::size_t l = 0; l < fs.rows(); ++l)
            if (fs(l, j) != 0) image[target.row_offset_[r] + l] += c * fs(l, j);
        }
      }
      RationalVector coords = target.quotients_[v].coords(image);
      for (int i = 0; i < target.result_.dims[v]; ++i) block(i, col) = coords[i];
    }
    out.push_back(std::move(block));
  }
  return out;
}

QuiverRep tensor_with_ideal(const AlgebraTable& alg, int i, const QuiverRep& m) {
  return IdealTensor(alg, ideal_of_vertex(alg, i), m).module();
}

bool ses_exists(const QuiverRep& e, const QuiverRep& b, const QuiverRep& f, std::uint64_t seed, int random_trials) {
  if (!(e.quiver == b.quiver) || !(f.quiver == b.quiver)) throw std::invalid_argument("ses_exists: different quivers");
  for (std::size_t v = 0; v < b.dims.size(); ++v)
    if (e.dims[v] > b.dims[v]) return false;
  for (std::size_t v = 0; v < b.dims.size(); ++v)
    if (e.dims[v] + f.dims[v] != b.dims[v]) throw std::invalid_argument("ses_exists: [E] + [F] != [B]");

  auto works = [&](const ModuleMap& g) {
    if (!is_injective(g, e)) return false;
    return is_isomorphic(quotient_representation(b, image_spaces(g, b)), f, seed);
  };
  if (e.is_zero()) {
    ModuleMap zero;
    for (std::size_t v = 0; v < b.dims.size(); ++v) zero.emplace_back(b.dims[v], 0);
    return works(zero);
  }
  HomSpace h = hom_space(e, b);
  for (const auto& g : h.basis)
    if (works(g)) return true;
  if (h.dimension() < 2) return false;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < random_trials; ++trial) {
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < h.dimension(); ++k) coeffs.emplace_back(static_cast<long>(rng() % 7) - 3);
    if (is_zero(coeffs)) continue;
    if (works(linear_combination(h.basis, coeffs))) return true;
  }
  return false;
}

}  // namespace shardstab
