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

#include "shardstab/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "shardstab/linalg.hpp"

namespace shardstab {

std::string DynkinType::label() const {
  char f = family == DynkinFamily::A ? 'A' : family == DynkinFamily::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(rank);
}

DynkinType DynkinType::make(char family, int rank) {
  DynkinType t;
  switch (family) {
    case 'A': case 'a':
      t.family = DynkinFamily::A;
      if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
      break;
    case 'D': case 'd':
      t.family = DynkinFamily::D;
      if (rank < 4) throw std::invalid_argument("type D needs rank >= 4 (got D" + std::to_string(rank) + ")");
      break;
    case 'E': case 'e':
      t.family = DynkinFamily::E;
      if (rank < 6 || rank > 8)
        throw std::invalid_argument("type E needs rank 6, 7 or 8 (got E" + std::to_string(rank) + ")");
      break;
    default:
      throw std::invalid_argument(std::string("unknown simply-laced family '") + family + "'");
  }
  t.rank = rank;
  return t;
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("malformed Dynkin type: '" + std::string(text) + "'");
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("malformed Dynkin type: '" + std::string(text) + "'");
    rank = rank * 10 + (text[i] - '0');
    if (rank > 1000) throw std::invalid_argument("rank too large");
  }
  return make(text[0], rank);
}

int CartanData::pairing(std::span<const int> x, std::span<const int> y) const {
  const std::size_t n = cartan.rows();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("pairing: dimension mismatch");
  int s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) s += x[i] * cartan(i, j) * y[j];
  }
  return s;
}

CartanData build_cartan(DynkinType type) {
  const int n = type.rank;
  std::vector<Arrow> arrows;
  switch (type.family) {
    case DynkinFamily::A:
      for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
      break;
    case DynkinFamily::D: {
      const int branch = n - 3;  // vertex n-2 in 1-based labels
      for (int i = 0; i < branch; ++i) arrows.push_back({i, i + 1});
      arrows.push_back({n - 2, branch});
      arrows.push_back({n - 1, branch});
      break;
    }
    case DynkinFamily::E: {
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      arrows.push_back({0, 2});
      arrows.push_back({2, 3});
      arrows.push_back({1, 3});
      for (int i = 4; i < n; ++i) arrows.push_back({i, i - 1});
      break;
    }
  }
  CartanData data;
  data.type = type;
  data.cartan = Matrix<int>(n, n, 0);
  for (int i = 0; i < n; ++i) data.cartan(i, i) = 2;
  for (const auto& a : arrows) {
    data.cartan(a.source, a.target) -= 1;
    data.cartan(a.target, a.source) -= 1;
  }
  data.quiver_arrows = arrows;
  data.doubled_arrows = arrows;
  for (const auto& a : arrows) data.doubled_arrows.push_back({a.target, a.source});

  for (int k = 1; k <= n; ++k) {
    RationalMatrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = data.cartan(i, j);
    if (determinant(minor) <= 0)
      throw std::logic_error("Cartan matrix of " + type.label() + " is not positive definite");
  }
  return data;
}

CartanData build_cartan(char family, int rank) { return build_cartan(DynkinType::make(family, rank)); }

int RootVector::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

bool RootVector::is_positive() const {
  bool any = false;
  for (int c : coords) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

bool RootVector::is_negative() const {
  bool any = false;
  for (int c : coords) {
    if (c > 0) return false;
    any = any || c < 0;
  }
  return any;
}

Matrix<int> simple_reflection_matrix(const CartanData& cartan, int i) {
  const std::size_t n = cartan.cartan.rows();
  Matrix<int> s = Matrix<int>::identity(n);
  for (std::size_t j = 0; j < n; ++j) s(i, j) -= cartan.cartan(i, j);
  return s;
}

IntVector act_on_class(const Matrix<int>& w, std::span<const int> x) {
  if (w.cols() != x.size()) throw std::invalid_argument("act_on_class: dimension mismatch");
  IntVector out(w.rows(), 0);
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < w.cols(); ++c) out[r] += w(r, c) * x[c];
  return out;
}

RootVector act_on_class(const WeylElement& w, const RootVector& x) {
  return RootVector{act_on_class(w.matrix, x.coords)};
}

StabilityFunctional act_on_functional(const Matrix<int>& w, const StabilityFunctional& phi) {
  if (w.rows() != phi.dimension()) throw std::invalid_argument("act_on_functional: dimension mismatch");
  RationalVector out(w.cols(), Rational(0));
  for (std::size_t r = 0; r < w.rows(); ++r) {
    if (phi.coords[r] == 0) continue;
    for (std::size_t c = 0; c < w.cols(); ++c)
      if (w(r, c) != 0) out[c] += phi.coords[r] * w(r, c);
  }
  return StabilityFunctional(std::move(out));
}

StabilityFunctional act_on_functional(const WeylElement& w, const StabilityFunctional& phi) {
  return act_on_functional(w.matrix, phi);
}

StabilityFunctional reflect_functional(const CartanData& cartan, int i,
                                       const StabilityFunctional& phi) {
  const std::size_t n = cartan.cartan.rows();
  if (phi.dimension() != n || i < 0 || static_cast<std::size_t>(i) >= n)
    throw std::invalid_argument("reflect_functional: dimension mismatch");
  StabilityFunctional out = phi;
  const Rational ci = phi.coords[i];
  for (std::size_t j = 0; j < n; ++j) out.coords[j] -= ci * cartan.cartan(i, j);
  return out;
}

std::vector<RootVector> positive_roots(const CartanData& cartan) {
  const int n = cartan.rank();
  std::vector<Matrix<int>> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(cartan, i));
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector x = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      RootVector y{act_on_class(s, x)};
      if (!y.is_positive()) continue;
      if (seen.insert(y.coords).second) queue.push_back(y.coords);
    }
  }
  std::vector<RootVector> roots;
  for (const auto& v : seen) roots.push_back(RootVector{v});
  std::sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  return roots;
}

WeylGroup::WeylGroup(const CartanData& cartan) : cartan_(cartan), roots_(positive_roots(cartan)) {
  const int n = cartan.rank();
  std::vector<Matrix<int>> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(cartan, i));

  elements_.push_back(WeylElement{Matrix<int>::identity(n), 0, {}});
  index_[elements_[0].matrix.data()] = 0;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    right_.emplace_back(n);
    for (int i = 0; i < n; ++i) {
      Matrix<int> m = elements_[k].matrix * gens[i];
      auto it = index_.find(m.data());
      if (it == index_.end()) {
        WeylElement next{m, elements_[k].length + 1, elements_[k].reduced_word};
        next.reduced_word.push_back(i);
        index_[m.data()] = elements_.size();
        right_[k][i] = elements_.size();
        elements_.push_back(std::move(next));
      } else {
        right_[k][i] = it->second;
      }
    }
  }
  left_.assign(elements_.size(), std::vector<std::size_t>(n));
  inverse_.assign(elements_.size(), 0);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (int i = 0; i < n; ++i) left_[k][i] = index_of(gens[i] * elements_[k].matrix);
    std::vector<int> rev(elements_[k].reduced_word.rbegin(), elements_[k].reduced_word.rend());
    inverse_[k] = from_word(rev);
    if (elements_[k].length > elements_[longest_].length) longest_ = k;
  }
}

std::size_t WeylGroup::index_of(const Matrix<int>& m) const {
  auto it = index_.find(m.data());
  if (it == index_.end()) throw std::out_of_range("matrix is not an element of the Weyl group");
  return it->second;
}

std::size_t WeylGroup::from_word(std::span<const int> word) const {
  std::size_t w = 0;
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= rank()) throw std::out_of_range("generator index out of range");
    w = right_[w][i];
  }
  return w;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  std::size_t w = a;
  for (int i : elements_[b].reduced_word) w = right_[w][i];
  return w;
}

int WeylGroup::inversion_count(std::size_t w) const {
  int count = 0;
  for (const auto& beta : roots_)
    if (RootVector{act_on_class(elements_[w].matrix, beta.coords)}.is_negative()) ++count;
  return count;
}

std::vector<std::size_t> WeylGroup::left_inversions(std::size_t w) const {
  std::vector<std::size_t> out;
  const auto& inv = elements_[inverse_[w]].matrix;
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (RootVector{act_on_class(inv, roots_[k].coords)}.is_negative()) out.push_back(k);
  return out;
}

std::vector<WeylElement> weyl_group(const CartanData& cartan) { return WeylGroup(cartan).elements(); }

std::vector<std::vector<int>> reduced_words(const WeylGroup& group, std::size_t w) {
  std::map<std::size_t, std::vector<std::vector<int>>> memo;
  auto rec = [&](auto&& self, std::size_t x) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> words;
    if (group[x].length == 0) {
      words.push_back({});
    } else {
      for (std::size_t i = 0; i < group.rank(); ++i) {
        std::size_t y = group.right_multiply(x, static_cast<int>(i));
        if (group[y].length >= group[x].length) continue;
        for (auto word : self(self, y)) {
          word.push_back(static_cast<int>(i));
          words.push_back(std::move(word));
        }
      }
      std::sort(words.begin(), words.end());
    }
    return memo.emplace(x, std::move(words)).first->second;
  };
  return rec(rec, w);
}

}  // namespace shardstab
