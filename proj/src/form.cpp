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

#include "pyramid/form.hpp"

namespace pyr {

int components_for_degree(int s) {
  if (s < 0 || s > 3) throw std::invalid_argument("form degree must be 0..3");
  return (s == 0 || s == 3) ? 1 : 3;
}

FormField::FormField(int s, Frame f, std::vector<WeightedPolynomial> c)
    : degree(s), frame(f), comp(std::move(c)) {
  if (static_cast<int>(comp.size()) != components_for_degree(s))
    throw std::invalid_argument("component count does not match the form degree");
}

FormField FormField::finite(int s, const std::vector<Poly3>& collapsed) {
  std::vector<WeightedPolynomial> c;
  for (const auto& p : collapsed) c.emplace_back(p, 0);
  return FormField(s, Frame::FinitePyramid, std::move(c));
}

FormField FormField::zero(int s, Frame f) {
  return FormField(s, f, std::vector<WeightedPolynomial>(components_for_degree(s)));
}

bool FormField::is_zero() const {
  for (const auto& c : comp)
    if (!c.is_zero()) return false;
  return true;
}

static void check_compatible(const FormField& a, const FormField& b) {
  if (a.frame != b.frame) throw FrameMismatch("cannot combine fields on different frames");
  if (a.degree != b.degree) throw std::invalid_argument("cannot combine forms of different degree");
}

FormField& FormField::operator+=(const FormField& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
  return *this;
}

FormField& FormField::operator-=(const FormField& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] -= o.comp[i];
  return *this;
}

FormField& FormField::operator*=(const Rational& s) {
  for (auto& c : comp) c *= s;
  return *this;
}

bool FormField::operator==(const FormField& o) const {
  if (frame != o.frame || degree != o.degree) return false;
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (comp[i] != o.comp[i]) return false;
  return true;
}

const Poly3& FormField::collapsed(int i) const {
  if (frame != Frame::FinitePyramid) throw FrameMismatch("collapsed form requested on the infinite frame");
  return comp[i].numerator();
}

} // namespace pyr
