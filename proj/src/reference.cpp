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

#include "pyramid/reference.hpp"

namespace pyr {

const char* frame_name(Frame f) {
  return f == Frame::InfinitePyramid ? "infinite" : "finite";
}

bool in_infinite_pyramid(const Point3& p) {
  return p[0] >= 0 && p[0] <= 1 && p[1] >= 0 && p[1] <= 1 && p[2] >= 0;
}

bool in_finite_pyramid(const Point3& p) {
  return p[0] >= 0 && p[1] >= 0 && p[2] >= 0 && p[0] <= 1 - p[2] && p[1] <= 1 - p[2];
}

Point3 phi(const Point3& p) {
  if (!in_infinite_pyramid(p)) throw DomainError("point outside the infinite pyramid");
  Rational d = 1 + p[2];
  return {p[0] / d, p[1] / d, p[2] / d};
}

Point3 phi_inverse(const Point3& p) {
  if (p[2] > 1) throw DomainError("zeta > 1 lies outside the finite pyramid");
  if (p[2] == 1) throw SingularPointError("the apex is the image of the point at infinity");
  if (!in_finite_pyramid(p)) throw DomainError("point outside the finite pyramid");
  Rational d = 1 - p[2];
  return {p[0] / d, p[1] / d, p[2] / d};
}

Point3 rotate_infinite(const Point3& p) {
  if (!in_infinite_pyramid(p)) throw DomainError("point outside the infinite pyramid");
  return {1 - p[1], p[0], p[2]};
}

Point3 rotate_finite(const Point3& p) {
  if (!in_finite_pyramid(p)) throw DomainError("point outside the finite pyramid");
  return {1 - p[1] - p[2], p[0], p[2]};
}

Matrix3 jacobian_phi(const Point3& p) {
  if (!in_infinite_pyramid(p)) throw DomainError("point outside the infinite pyramid");
  Rational s = 1 + p[2];
  Rational f = 1 / (s * s);
  Matrix3 m;
  m[0] = {s * f, Rational(0), -p[0] * f};
  m[1] = {Rational(0), s * f, -p[1] * f};
  m[2] = {Rational(0), Rational(0), f};
  return m;
}

Rational det(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Point3& a, const Point3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Point3 face_point(const Face& f, const Rational& s, const Rational& t) {
  Point3 r;
  for (int i = 0; i < 3; ++i) r[i] = f.origin[i] + s * f.ds[i] + t * f.dt[i];
  return r;
}

namespace {

Point3 P(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

PyramidTopology build() {
  PyramidTopology t;
  t.vertices = {P(0, 0, 0), P(1, 0, 0), P(1, 1, 0), P(0, 1, 0), P(0, 0, 1)};
  t.vertex_labels = {"v1", "v2", "v3", "v4", "v5"};
  t.edges = {{"e1", 0, 4}, {"e2", 1, 4}, {"e3", 2, 4}, {"e4", 3, 4},
             {"b1", 0, 1}, {"b2", 1, 2}, {"b3", 2, 3}, {"b4", 0, 3}};
  // S_{i+1} = R(S_i) with R(xi,eta,zeta) = (1-eta-zeta, xi, zeta).
  t.faces = {
      {"S1", {0, 1, 4}, P(0, 0, 0), P(1, 0, 0), P(0, 0, 1), {}, true},
      {"S2", {1, 2, 4}, P(1, 0, 0), P(0, 1, 0), P(-1, 0, 1), {}, true},
      {"S3", {2, 3, 4}, P(1, 1, 0), P(-1, 0, 0), P(-1, -1, 1), {}, true},
      {"S4", {3, 0, 4}, P(0, 1, 0), P(0, -1, 0), P(0, -1, 1), {}, true},
      {"B", {0, 1, 2, 3}, P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), {}, false},
  };
  for (auto& f : t.faces) f.normal = cross(f.ds, f.dt);
  // (xi,eta) keeps its usual order on the base; ds x dt points inward there.
  for (auto& c : t.faces[4].normal) c = -c;
  return t;
}

} // namespace

const PyramidTopology& topology() {
  static const PyramidTopology t = build();
  return t;
}

int edge_index(const std::string& label) {
  const auto& e = topology().edges;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i].label == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown edge " + label);
}

int face_index(const std::string& label) {
  const auto& f = topology().faces;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].label == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown face " + label);
}

} // namespace pyr
