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

#ifndef PYRAMID_QUADRATURE_HPP
#define PYRAMID_QUADRATURE_HPP

#include <array>
#include <vector>

namespace pyr {

struct Rule1D {
  std::vector<double> x, w;
};

// n-point Gauss-Jacobi rule on [0,1] for the weight (1-t)^alpha; alpha = 0
// gives Gauss-Legendre. Exact for polynomials of degree <= 2n-1.
Rule1D gauss_jacobi01(int n, int alpha);

// Tensor rule on the collapsed cube (a,b,c) in [0,1]^3 against the volume
// factor (1-c)^2; points are also mapped to the pyramid.
struct NumericQuadrature {
  int n = 0;
  int exact_degree = 0;  // per direction, in (a,b,c)
  std::vector<std::array<double, 3>> collapsed;
  std::vector<std::array<double, 3>> physical;
  std::vector<double> weights;
};

NumericQuadrature build_quadrature(int n);

// Default points per direction for order-k elements.
inline int default_quadrature_points(int k) { return k + 3; }

} // namespace pyr

#endif
