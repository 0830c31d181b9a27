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

#ifndef PYRAMID_REFERENCE_HPP
#define PYRAMID_REFERENCE_HPP

#include "pyramid/rational.hpp"

#include <string>
#include <vector>

namespace pyr {

enum class Frame { InfinitePyramid, FinitePyramid };

const char* frame_name(Frame f);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

bool in_infinite_pyramid(const Point3& p);
bool in_finite_pyramid(const Point3& p);

// phi(x,y,z) = (x,y,z)/(1+z).
Point3 phi(const Point3& p);
// (xi,eta,zeta)/(1-zeta); the apex has no preimage.
Point3 phi_inverse(const Point3& p);
// Quarter turn (x,y,z) -> (1-y,x,z) and its conjugate on the finite pyramid.
Point3 rotate_infinite(const Point3& p);
Point3 rotate_finite(const Point3& p);
Matrix3 jacobian_phi(const Point3& p);
Rational det(const Matrix3& m);

// Vertices v1..v5 (indices 0..4). The base square is traversed
// counterclockwise seen from the apex: v1=(0,0,0), v2=(1,0,0), v3=(1,1,0),
// v4=(0,1,0); v5=(0,0,1).
struct Edge {
  std::string label;
  int from, to;  // tangent points from the lower to the higher vertex index
};

// Affine parameterisation r(s,t) = origin + s*ds + t*dt. For the triangles
// the parameter domain is {s,t >= 0, s+t <= 1}; for the base it is [0,1]^2.
// normal has length |ds x dt| and points out of the pyramid.
struct Face {
  std::string label;
  std::vector<int> vertices;
  Point3 origin, ds, dt;
  Point3 normal;
  bool triangular;
};

struct PyramidTopology {
  std::vector<Point3> vertices;       // v1..v5
  std::vector<std::string> vertex_labels;
  std::vector<Edge> edges;            // e1..e4 (vertical), b1..b4 (base)
  std::vector<Face> faces;            // S1..S4, B
};

const PyramidTopology& topology();

// Index of an entity label inside its class, e.g. "S3" -> 2, "b1" -> 4.
int edge_index(const std::string& label);
int face_index(const std::string& label);

Point3 face_point(const Face& f, const Rational& s, const Rational& t);
// Cross product helper.
Point3 cross(const Point3& a, const Point3& b);
Rational dot(const Point3& a, const Point3& b);

} // namespace pyr

#endif
