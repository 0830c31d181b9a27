////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of pyramidfe                                            //
//                                                                            //
//  Copyright 2026 pyramidfe developers                                       //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "pyramid/linalg.hpp"

#include <algorithm>
#include <map>

namespace pyr {

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product: shape mismatch");
  QMatrix p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.c_; ++j)
        if (o(k, j) != 0) p(i, j) += a * o(k, j);
    }
  return p;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::vstack(const QMatrix& a, const QMatrix& b) {
  if (a.r_ == 0) return b;
  if (b.r_ == 0) return a;
  if (a.c_ != b.c_) throw std::invalid_argument("vstack: column mismatch");
  QMatrix m(a.r_ + b.r_, a.c_);
  std::copy(a.a_.begin(), a.a_.end(), m.a_.begin());
  std::copy(b.a_.begin(), b.a_.end(), m.a_.begin() + a.a_.size());
  return m;
}

QMatrix QMatrix::row_block(int first, int count) const {
  QMatrix m(count, c_);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(first + i, j);
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q == 0; });
}

//---------------------------------------------------------------------------

std::vector<int> rref(QMatrix& m) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

ZMatrix integer_rows(const QMatrix& m) {
  ZMatrix z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) z[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return z;
}

// Fraction-free elimination. Returns the rank; for square full-rank input
// *det receives the determinant of z (with row swaps accounted for).
int bareiss(ZMatrix& z, mpz_class* det) {
  const int rows = static_cast<int>(z.size());
  const int cols = rows ? static_cast<int>(z[0].size()) : 0;
  mpz_class prev = 1;
  int sign = 1, k = 0;
  for (int col = 0; col < cols && k < rows; ++col) {
    int p = -1;
    for (int i = k; i < rows; ++i)
      if (z[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != k) {
      std::swap(z[p], z[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        z[i][j] = z[k][col] * z[i][j] - z[i][col] * z[k][j];
        mpz_divexact(z[i][j].get_mpz_t(), z[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      z[i][col] = 0;
    }
    prev = z[k][col];
    ++k;
  }
  if (det) *det = (k == rows && rows == cols) ? mpz_class(sign * prev) : mpz_class(0);
  return k;
}

} // namespace

int rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter dimension.
  ZMatrix z = m.rows() <= m.cols() ? integer_rows(m) : integer_rows(m.transpose());
  return bareiss(z, nullptr);
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  ZMatrix z(m.rows(), std::vector<mpz_class>(m.cols()));
  Rational scale = 1;
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) z[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= Rational(l);
  }
  mpz_class d;
  bareiss(z, &d);
  return Rational(d) / scale;
}

QMatrix nullspace(const QMatrix& m) {
  QMatrix r = m;
  auto piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_piv[j]) free.push_back(j);
  QMatrix ns(static_cast<int>(free.size()), m.cols());
  for (std::size_t f = 0; f < free.size(); ++f) {
    ns(int(f), free[f]) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) ns(int(f), piv[i]) = -r(int(i), free[f]);
  }
  return ns;
}

QMatrix solve(const QMatrix& a, const QMatrix& b) {
  const int n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  QMatrix aug(n, n + b.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv.back() != n - 1)
    throw InternalError("singular linear system");
  QMatrix x(n, b.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
  return x;
}

QMatrix inverse(const QMatrix& a) { return solve(a, QMatrix::identity(a.rows())); }

//---------------------------------------------------------------------------

QMatrix coefficient_rows(const std::vector<std::vector<WeightedPolynomial>>& rows) {
  if (rows.empty()) return QMatrix();
  const std::size_t nc = rows[0].size();
  std::vector<int> w(nc, 0);
  for (const auto& r : rows) {
    if (r.size() != nc) throw std::invalid_argument("coefficient_rows: ragged component lists");
    for (std::size_t i = 0; i < nc; ++i) w[i] = std::max(w[i], r[i].weight());
  }
  std::vector<std::vector<Poly3>> nums(rows.size());
  std::map<std::pair<std::size_t, Poly3::Key>, int> index;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t i = 0; i < nc; ++i) {
      nums[r].push_back(rows[r][i].raised_to(w[i]).numerator());
      for (const auto& [k, c] : nums[r].back().terms()) index.emplace(std::make_pair(i, k), 0);
    }
  int col = 0;
  for (auto& [key, j] : index) j = col++;
  QMatrix m(static_cast<int>(rows.size()), col);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t i = 0; i < nc; ++i)
      for (const auto& [k, c] : nums[r][i].terms()) m(int(r), index[{i, k}]) = c;
  return m;
}

QMatrix coefficient_matrix(const std::vector<FormField>& fields) {
  std::vector<std::vector<WeightedPolynomial>> rows;
  for (const auto& f : fields) {
    if (f.frame != fields[0].frame) throw FrameMismatch("coefficient_matrix: mixed frames");
    rows.push_back(f.comp);
  }
  return coefficient_rows(rows);
}

SpanComparison compare_spans(const std::vector<FormField>& a, const std::vector<FormField>& b) {
  std::vector<FormField> all = a;
  all.insert(all.end(), b.begin(), b.end());
  QMatrix m = coefficient_matrix(all);
  SpanComparison s;
  s.rank_a = rank(m.row_block(0, int(a.size())));
  s.rank_b = rank(m.row_block(int(a.size()), int(b.size())));
  s.rank_union = rank(m);
  return s;
}

std::vector<Rational> express_in(const std::vector<FormField>& basis, const FormField& target) {
  std::vector<FormField> all = basis;
  all.push_back(target);
  QMatrix m = coefficient_matrix(all).transpose();  // columns: basis..., target
  auto piv = rref(m);
  const int n = static_cast<int>(basis.size());
  if (!piv.empty() && piv.back() == n) return {};
  if (static_cast<int>(piv.size()) != n) throw InternalError("express_in: basis is linearly dependent");
  std::vector<Rational> c(n);
  for (int i = 0; i < n; ++i) c[i] = m(i, n);
  return c;
}

} // namespace pyr
