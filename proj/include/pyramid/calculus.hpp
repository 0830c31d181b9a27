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

#ifndef PYRAMID_CALCULUS_HPP
#define PYRAMID_CALCULUS_HPP

#include "pyramid/form.hpp"

#include <optional>
#include <string>

namespace pyr {

// grad / curl / div. Finite-frame fields are differentiated through the
// pullback, which commutes with d.
FormField exterior_derivative(const FormField& f);

// Finite pyramid -> infinite pyramid.
FormField pullback(const FormField& finite);
// Infinite pyramid -> finite pyramid (collapsed coordinates). Throws
// RepresentationError when the result is not polynomial in (a,b,c).
FormField inverse_pullback(const FormField& inf);
// Components of the inverse pullback composed with phi, as functions on the
// infinite pyramid.
std::vector<WeightedPolynomial> finite_proxy(const FormField& inf);

// Finite-frame form from Cartesian polynomial components in (xi,eta,zeta).
FormField finite_from_cartesian(int s, const std::vector<Poly3>& comps);

// Pullback by the quarter turn R (times applications). Pushing a field
// forward by R is rotate_pullback(f, 3).
FormField rotate_pullback(const FormField& inf, int times = 1);

// Trace of an s-form on a face. On the infinite frame the components are
// restrictions in the original variables (e.g. S1: y = 0, components
// (u_x, u_z) for s=1 and u.n for s=2). On the finite frame they are
// polynomials in the face parameters (s,t) of topology(), stored in
// variable slots 0 and 1.
struct SurfaceField {
  std::string face;
  int degree = 0;
  Frame frame = Frame::InfinitePyramid;
  std::vector<WeightedPolynomial> comp;
};

SurfaceField trace(int s, const std::string& face, const FormField& f);
// Finite-frame trace in face parameters; nullopt when it is not polynomial.
std::optional<SurfaceField> finite_trace(int s, const std::string& face, const FormField& f);
// Restriction (s=0) or tangential component (s=1) along an edge of the
// finite pyramid as a polynomial in the edge parameter (slot 0).
Poly3 edge_trace(int s, const std::string& edge, const FormField& f);

// Weight matrices on the infinite pyramid.
using WMatrix = std::array<std::array<WeightedPolynomial, 3>, 3>;
WMatrix weight_A();
WMatrix weight_B();

// Inner products of Definition-1 type; f,g on the infinite frame.
Rational weighted_inner(int s, const FormField& f, const FormField& g);
Rational weighted_norm_sq(int s, const FormField& f);
// Plain Sobolev inner product on the finite pyramid (via collapsed moments).
Rational sobolev_inner_finite(const FormField& f, const FormField& g);

// u.A.v with A a weight matrix.
WeightedPolynomial quad_form(const WMatrix& m, const FormField& f, const FormField& g);

} // namespace pyr

#endif
