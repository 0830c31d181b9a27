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

#ifndef PYRAMID_WEIGHTED_HPP
#define PYRAMID_WEIGHTED_HPP

#include "pyramid/polynomial.hpp"

#include <optional>
#include <string>

namespace pyr {

// num(x,y,z) / (1+z)^weight on the infinite pyramid.
class WeightedPolynomial {
public:
  WeightedPolynomial() = default;
  WeightedPolynomial(Poly3 num, int weight);
  explicit WeightedPolynomial(const Rational& c) : num_(c) {}

  const Poly3& numerator() const { return num_; }
  int weight() const { return w_; }
  bool is_zero() const { return num_.is_zero(); }

  // Same function written over (1+z)^w, w >= weight().
  WeightedPolynomial raised_to(int w) const;
  // Same function over (1+z)^w if the numerator is divisible; w may be
  // smaller than weight().
  std::optional<WeightedPolynomial> at_weight(int w) const;
  // Divides out every common factor (1+z).
  WeightedPolynomial reduced() const;
  // Multiplies by (1+z)^m, m >= 0, lowering the weight where possible.
  WeightedPolynomial times_one_plus_z(int m) const;

  WeightedPolynomial& operator+=(const WeightedPolynomial& o);
  WeightedPolynomial& operator-=(const WeightedPolynomial& o);
  WeightedPolynomial& operator*=(const Rational& s);
  friend WeightedPolynomial operator+(WeightedPolynomial a, const WeightedPolynomial& b) { return a += b; }
  friend WeightedPolynomial operator-(WeightedPolynomial a, const WeightedPolynomial& b) { return a -= b; }
  friend WeightedPolynomial operator*(WeightedPolynomial a, const Rational& s) { return a *= s; }
  friend WeightedPolynomial operator*(const Rational& s, WeightedPolynomial a) { return a *= s; }
  friend WeightedPolynomial operator*(const WeightedPolynomial& a, const WeightedPolynomial& b);
  WeightedPolynomial operator-() const { return WeightedPolynomial(-num_, w_); }
  // Equality as functions (after raising to a common weight).
  bool operator==(const WeightedPolynomial& o) const;
  bool operator!=(const WeightedPolynomial& o) const { return !(*this == o); }

  WeightedPolynomial derivative(int var) const;
  // f(x,y,z) with x,y,z replaced by polynomials in (x,y) only (z kept).
  WeightedPolynomial compose_xy(const Poly3& xsub, const Poly3& ysub) const;

  // Value at a point of the infinite pyramid.
  Rational eval(const Point3& p) const;

  // Membership in Q_w^{l,m,n}: numerator degrees <= (l,m,n) at weight w.
  bool in_Q(int w, int l, int m, int n) const;
  // Membership in P_w^n: total degree <= n at weight w.
  bool in_P(int w, int n) const;

  std::string str() const;

private:
  Poly3 num_;
  int w_ = 0;
};

// One over (1+z)^w times x^a y^b z^c.
WeightedPolynomial wmono(int a, int b, int c, int w, const Rational& coef = 1);

// Exact integral over the infinite pyramid (x,y in [0,1], z >= 0).
Rational integrate_infinite(const WeightedPolynomial& f);

// Collapsed coordinates: x = a, y = b, z = c/(1-c). Throws RepresentationError
// when the image is not a polynomial in (a,b,c).
Poly3 to_collapsed(const WeightedPolynomial& f);
WeightedPolynomial from_collapsed(const Poly3& p);

// Cartesian coordinates on the finite pyramid: x = xi/(1-zeta) etc. Returns
// nullopt when the composition with phi^{-1} is not a polynomial.
std::optional<Poly3> to_cartesian(const WeightedPolynomial& f);
// Polynomial in (xi,eta,zeta) composed with phi.
WeightedPolynomial from_cartesian(const Poly3& p);
// Polynomial in (xi,eta,zeta) in collapsed coordinates.
Poly3 cartesian_to_collapsed(const Poly3& p);

// Exact integral over the finite pyramid of p(a,b,c) (1-c)^m in collapsed
// coordinates; the volume factor (1-c)^2 is added here. Negative net powers
// of (1-c) must cancel against p or SingularIntegrand is thrown.
Rational integrate_collapsed(const Poly3& p, int m = 0);

} // namespace pyr

#endif
