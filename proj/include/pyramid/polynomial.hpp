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

#ifndef PYRAMID_POLYNOMIAL_HPP
#define PYRAMID_POLYNOMIAL_HPP

#include "pyramid/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace pyr {

using Exp = std::array<int, 3>;

// Sparse polynomial in three variables with exact rational coefficients.
// The meaning of the variables depends on context: (x,y,z) on the infinite
// pyramid, (a,b,c) collapsed coordinates, or (xi,eta,zeta).
class Poly3 {
public:
  using Key = std::uint32_t;
  using Terms = std::map<Key, Rational>;

  Poly3() = default;
  explicit Poly3(const Rational& c);
  static Poly3 monomial(int a, int b, int c, const Rational& coef = 1);
  static Poly3 var(int i);
  // (alpha + beta * var_i)
  static Poly3 affine(int i, const Rational& alpha, const Rational& beta);

  static Key pack(const Exp& e) { return Key(e[0]) | (Key(e[1]) << 10) | (Key(e[2]) << 20); }
  static Exp unpack(Key k) { return {int(k & 1023u), int((k >> 10) & 1023u), int((k >> 20) & 1023u)}; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Exp& e) const;
  void add_term(const Exp& e, const Rational& c);

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(const Rational& s);
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(Poly3 a, const Rational& s) { return a *= s; }
  friend Poly3 operator*(const Rational& s, Poly3 a) { return a *= s; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  Poly3 operator-() const;
  bool operator==(const Poly3& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly3& o) const { return !(*this == o); }

  Poly3 pow(int n) const;
  Poly3 derivative(int var) const;
  // Substitute var := value.
  Poly3 restrict(int var, const Rational& value) const;
  // Substitute each variable by a polynomial.
  Poly3 compose(const std::array<Poly3, 3>& subs) const;
  // Multiply by var_i^n.
  Poly3 shift(int var, int n) const;

  Rational eval(const Point3& p) const;
  double eval(const std::array<double, 3>& p) const;

  int degree(int var) const;      // -1 for the zero polynomial
  int total_degree() const;       // -1 for the zero polynomial
  Exp max_degrees() const;

private:
  Terms terms_;
};

// Rational polynomial division by (1 + var)^n; false if not exact.
bool divide_by_one_plus(const Poly3& p, int var, int n, Poly3& quotient);
// Division by (1 - var)^n.
bool divide_by_one_minus(const Poly3& p, int var, int n, Poly3& quotient);

} // namespace pyr

#endif
