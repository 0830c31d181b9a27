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

#ifndef PYRAMID_DOFS_HPP
#define PYRAMID_DOFS_HPP

#include "pyramid/quadrature.hpp"
#include "pyramid/spaces.hpp"

#include <functional>
#include <memory>

namespace pyr {

enum class DofKind {
  VertexEval,
  EdgeMoment,
  TriFaceMoment,
  BaseFaceMoment,
  VolumeGradProj,
  VolumeCurlProj,
  VolumeDivProj,
  VolumeL2Proj,
  MeanValue
};
const char* dof_kind_name(DofKind k);

// A linear functional written on a parameter box [0,1]^dim:
//   m(u) = int sum_i g_i(embed(p)) weight_i(p) (1 - p_j)^jacobi dp,
// where g is the collapsed finite proxy of u (or of du when on_derivative),
// embed maps parameters to collapsed coordinates and j = collapse_param.
// Edge and face measures are taken in parameter form (constant length/area
// factors dropped); fluxes use the exact ds x dt normal.
struct DofFunctional {
  int s = 0, k = 0;
  DofKind kind = DofKind::VertexEval;
  std::string entity;
  std::vector<int> test_index;
  int dim = 0;
  std::array<Poly3, 3> embed;
  int collapse_param = -1;
  int jacobi = 0;
  bool on_derivative = false;
  std::vector<Poly3> weight;

  struct Cache;
  std::shared_ptr<Cache> cache;
};

// Entity-major: vertices, edges, faces, volume. Cached.
const std::vector<DofFunctional>& dof_set(int s, int k);

// Exact value on a finite-frame field (infinite-frame input is pulled back).
Rational apply_dof(const DofFunctional& m, const FormField& u);
// Same, with du supplied by the caller (avoids recomputing it per DOF).
Rational apply_dof(const DofFunctional& m, const FormField& u, const FormField* du);

// A field given by point evaluation on the finite pyramid, in Cartesian
// components. derivative returns grad (s=0), curl (s=1) or div (s=2).
struct SmoothField {
  int degree = 0;
  std::function<std::vector<double>(double, double, double)> value;
  std::function<std::vector<double>(double, double, double)> derivative;
};

// Numeric value with n Gauss points per parameter direction.
double apply_dof(const DofFunctional& m, const SmoothField& u, int n);

// Point-evaluation wrapper around an exact finite-frame field.
SmoothField smooth_from_exact(const FormField& f);

// Rows: DOFs, columns: basis(s,k).
QMatrix vandermonde(int s, int k);
// Cached copy; the reference stays valid for the process lifetime.
const QMatrix& vandermonde_cached(int s, int k);

// Largest per-parameter degree of the integrands m(phi_j) over all DOFs m and
// basis functions phi_j (used to size the default quadrature).
int max_integrand_degree(int s, int k);

} // namespace pyr

#endif
