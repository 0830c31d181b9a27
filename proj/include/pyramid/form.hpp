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

#ifndef PYRAMID_FORM_HPP
#define PYRAMID_FORM_HPP

#include "pyramid/reference.hpp"
#include "pyramid/weighted.hpp"

#include <vector>

namespace pyr {

// An s-form proxy: one component for s = 0, 3, three for s = 1, 2.
// On the infinite frame components are WeightedPolynomials in (x,y,z). On the
// finite frame they are polynomials in collapsed coordinates (a,b,c), stored
// with weight zero.
struct FormField {
  int degree = 0;
  Frame frame = Frame::InfinitePyramid;
  std::vector<WeightedPolynomial> comp;

  FormField() = default;
  FormField(int s, Frame f, std::vector<WeightedPolynomial> c);

  static FormField infinite(int s, std::vector<WeightedPolynomial> c) { return FormField(s, Frame::InfinitePyramid, std::move(c)); }
  static FormField finite(int s, const std::vector<Poly3>& collapsed);
  static FormField zero(int s, Frame f);

  std::size_t ncomp() const { return comp.size(); }
  bool is_zero() const;

  FormField& operator+=(const FormField& o);
  FormField& operator-=(const FormField& o);
  FormField& operator*=(const Rational& s);
  friend FormField operator+(FormField a, const FormField& b) { return a += b; }
  friend FormField operator-(FormField a, const FormField& b) { return a -= b; }
  friend FormField operator*(FormField a, const Rational& s) { return a *= s; }
  friend FormField operator*(const Rational& s, FormField a) { return a *= s; }
  bool operator==(const FormField& o) const;
  bool operator!=(const FormField& o) const { return !(*this == o); }

  // Collapsed polynomial of component i (finite frame only).
  const Poly3& collapsed(int i) const;
};

int components_for_degree(int s);

} // namespace pyr

#endif
