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

#ifndef PYRAMID_LINALG_HPP
#define PYRAMID_LINALG_HPP

#include "pyramid/form.hpp"

#include <vector>

namespace pyr {

// Dense matrix of exact rationals, row-major.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& o) const;
  static QMatrix identity(int n);
  // Stack rows of b under rows of a (same column count).
  static QMatrix vstack(const QMatrix& a, const QMatrix& b);
  QMatrix row_block(int first, int count) const;
  bool is_zero() const;

private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m);
int rank(const QMatrix& m);
// Exact determinant (fraction-free elimination on an integer-scaled copy).
Rational determinant(const QMatrix& m);
// Rows form a basis of {v : m v = 0}.
QMatrix nullspace(const QMatrix& m);
// Solves a x = b for square nonsingular a; b may have several columns.
// Throws InternalError when a is singular.
QMatrix solve(const QMatrix& a, const QMatrix& b);
QMatrix inverse(const QMatrix& a);

// Coefficient vectors of fields (rows) with respect to the monomials that
// occur in any of them. Infinite-frame components are first brought to a
// common weight per component.
QMatrix coefficient_matrix(const std::vector<FormField>& fields);
QMatrix coefficient_rows(const std::vector<std::vector<WeightedPolynomial>>& rows);

// dim span(a), dim span(b), dim span(a u b) in one call.
struct SpanComparison {
  int rank_a = 0, rank_b = 0, rank_union = 0;
  bool equal() const { return rank_a == rank_b && rank_a == rank_union; }
  bool a_in_b() const { return rank_b == rank_union; }
};
SpanComparison compare_spans(const std::vector<FormField>& a, const std::vector<FormField>& b);

// Coordinates c with sum_j c_j basis_j = target, or empty when target is
// outside the span. basis must be linearly independent.
std::vector<Rational> express_in(const std::vector<FormField>& basis, const FormField& target);

} // namespace pyr

#endif
