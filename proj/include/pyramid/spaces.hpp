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

#ifndef PYRAMID_SPACES_HPP
#define PYRAMID_SPACES_HPP

#include "pyramid/calculus.hpp"
#include "pyramid/linalg.hpp"

#include <string>
#include <vector>

namespace pyr {

struct ShapeFunction {
  FormField field;    // infinite frame
  FormField finite;   // collapsed coordinates on the finite pyramid
  std::string entity; // "v1".."v5", "e1".."e4", "b1".."b4", "S1".."S4", "B", "volume"
  std::vector<int> multi_index;
  std::string family;
};

struct BasisSet {
  int s = 0, k = 0;
  std::vector<ShapeFunction> functions;

  std::size_t size() const { return functions.size(); }
  bool empty() const { return functions.empty(); }
  std::vector<FormField> fields() const;
  std::vector<FormField> finite_fields() const;
  // (entity, count) in basis order.
  std::vector<std::pair<std::string, int>> dims() const;
};

// Entity-major basis of U^(s),k: vertices, edges, faces, volume. Cached.
const BasisSet& basis(int s, int k);
BasisSet bubble_basis(int k);            // U^(0),k_0
BasisSet curl_bubble_basis(int k);       // U^(1),k_{0,curl}
BasisSet div_bubble_basis(int k);        // U^(2),k_{0,div}
BasisSet zero_trace_basis(int s, int k); // U^(1),k_0 or U^(2),k_0

// Underlying-space derivative conditions plus the trace constraints on the
// four triangular faces. Finite-frame input is pulled back first.
bool membership_in_space(const FormField& f, int s, int k);
// The same question split into its two parts.
bool in_underlying_space(const FormField& inf, int s, int k);
bool satisfies_trace_constraints(const FormField& inf, int s, int k);

int dimension(int s, int k);

// Generators of the underlying space as a direct sum.
std::vector<FormField> underlying_generators(int s, int k);
// Basis of the underlying space obtained from the derivative conditions alone.
std::vector<FormField> underlying_by_characterization(int s, int k);
// Basis of U^(s),k obtained by imposing the trace constraints on the
// underlying generators (independent of the shape-function tables).
std::vector<FormField> space_by_characterization(int s, int k);

// Admissible traces on S1 of the infinite pyramid, as component lists in
// (x, z) (variable slots 0 and 2).
std::vector<std::vector<WeightedPolynomial>> infinite_trace_space(int s, int k);
// Trace spaces in face parameters (s,t) (slots 0 and 1): tau on triangles,
// sigma on the base.
std::vector<std::vector<WeightedPolynomial>> finite_trace_space(int s, int k, bool triangular);

// Linearly independent rows of a field list (exact).
std::vector<FormField> independent_subset(const std::vector<FormField>& f);

} // namespace pyr

#endif
