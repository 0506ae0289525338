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

#include "shardstab/linalg.hpp"

#include <stdexcept>

namespace shardstab {

namespace {

// Gauss-Jordan restricted to the first `pivot_cols` columns.  Returns the
// pivot columns; rows beyond the rank are left zero in those columns.
std::vector<std::size_t> eliminate(RationalMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(r, j) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_in_place(RationalMatrix& m) {
  auto pivots = eliminate(m, m.cols());
  m.truncate_rows(pivots.size());
  return pivots;
}

RationalMatrix row_space(const RationalMatrix& m) {
  RationalMatrix copy = m;
  rref_in_place(copy);
  return copy;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix copy = m;
  return rref_in_place(copy).size();
}

RationalMatrix nullspace(const RationalMatrix& m) {
  RationalMatrix r = m;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(m.cols(), Rational(0));
    x[f] = 1;
    for (std::size_t j = 0; j < pivots.size(); ++j) x[pivots[j]] = -r(j, f);
    basis.append_row(x);
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = eliminate(aug, m.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (aug(i, m.cols()) != 0) return std::nullopt;
  RationalVector x(m.cols(), Rational(0));
  for (std::size_t j = 0; j < pivots.size(); ++j) x[pivots[j]] = aug(j, m.cols());
  return x;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RationalMatrix& m) {
  for (const auto& x : m.data())
    if (x != 0) return false;
  return true;
}

bool in_row_space(const RationalMatrix& rows, const RationalVector& v) {
  if (is_zero(v)) return true;
  RationalMatrix with = rows;
  std::size_t before = rank(rows);
  with.append_row(v);
  return rank(with) == before;
}

RationalMatrix stack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("stack: width mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

RowCoordinates::RowCoordinates(const RationalMatrix& basis)
    : size_(basis.rows()), ambient_(basis.cols()) {
  RationalMatrix aug(size_, ambient_ + size_, Rational(0));
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < ambient_; ++j) aug(i, j) = basis(i, j);
    aug(i, ambient_ + i) = 1;
  }
  pivots_ = eliminate(aug, ambient_);
  if (pivots_.size() != size_)
    throw std::invalid_argument("RowCoordinates: basis rows are dependent");
  reduced_ = RationalMatrix(size_, ambient_);
  transform_ = RationalMatrix(size_, size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < ambient_; ++j) reduced_(i, j) = aug(i, j);
    for (std::size_t j = 0; j < size_; ++j) transform_(i, j) = aug(i, ambient_ + j);
  }
}

std::optional<RationalVector> RowCoordinates::try_coords(const RationalVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("RowCoordinates: dimension mismatch");
  RationalVector residual = v;
  RationalVector c(size_, Rational(0));
  for (std::size_t j = 0; j < size_; ++j) {
    const Rational lead = residual[pivots_[j]];
    if (lead == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (reduced_(j, k) != 0) residual[k] -= lead * reduced_(j, k);
    for (std::size_t k = 0; k < size_; ++k)
      if (transform_(j, k) != 0) c[k] += lead * transform_(j, k);
  }
  if (!is_zero(residual)) return std::nullopt;
  return c;
}

RationalVector RowCoordinates::coords(const RationalVector& v) const {
  auto c = try_coords(v);
  if (!c) throw std::domain_error("vector outside the span");
  return *c;
}

QuotientSpace::QuotientSpace(const RationalMatrix& upper, const RationalMatrix& lower)
    : ambient_(upper.cols()) {
  if (lower.cols() != upper.cols()) throw std::invalid_argument("QuotientSpace: width mismatch");
  RationalMatrix span = row_space(lower);
  lower_dim_ = span.rows();
  RationalMatrix upper_space = row_space(upper);
  for (std::size_t i = 0; i < span.rows(); ++i)
    if (!in_row_space(upper_space, span.row_vector(i)))
      throw std::domain_error("QuotientSpace: lower space not contained in upper space");
  representatives_ = RationalMatrix(0, ambient_);
  std::size_t current = span.rows();
  for (std::size_t i = 0; i < upper_space.rows(); ++i) {
    RationalMatrix trial = span;
    trial.append_row(upper_space.row(i));
    if (rank(trial) > current) {
      span = trial;
      ++current;
      representatives_.append_row(upper_space.row(i));
    }
  }
  RationalMatrix all = row_space(lower);
  for (std::size_t i = 0; i < representatives_.rows(); ++i)
    all.append_row(representatives_.row(i));
  solver_ = RowCoordinates(all);
}

RationalVector QuotientSpace::coords(const RationalVector& v) const {
  RationalVector c = solver_.coords(v);
  return RationalVector(c.begin() + static_cast<std::ptrdiff_t>(lower_dim_), c.end());
}

}  // namespace shardstab
